"""Exception hierarchy shared across the toolkit.

Every error carries a stable machine-readable ``code`` so the CLI and the
HTTP service can surface identical identifiers. Validation-rule breaches are
not exceptions; they travel as ``Violation`` values (see ``shifts``).
"""

from __future__ import annotations


class ParashiftError(Exception):
    """Base class; ``code`` is part of the public error contract."""

    code = "error"


class MalformedInputError(ParashiftError):
    code = "malformed_input"

    def __init__(self, message: str, *, line: int | None = None, offset: int | None = None):
        self.line = line
        self.offset = offset
        where = ""
        if line is not None:
            where = f" (line {line})"
        elif offset is not None:
            where = f" (byte {offset})"
        super().__init__(f"{message}{where}")


class DuplicateIdError(ParashiftError):
    code = "duplicate_id"

    def __init__(self, kind: str, offending_id: str, *, line: int | None = None):
        self.kind = kind
        self.offending_id = offending_id
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"duplicate {kind} id {offending_id!r}{where}")


class OverlappingLinkError(ParashiftError):
    code = "overlapping_link"

    def __init__(self, sentence_id: str, *, line: int | None = None):
        self.sentence_id = sentence_id
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"sentence {sentence_id!r} appears in more than one link{where}")


class DanglingRefError(ParashiftError):
    code = "dangling_ref"

    def __init__(self, message: str, refs: tuple[str, ...] = ()):
        self.refs = refs
        super().__init__(message)


class SpanOutOfRangeError(ParashiftError):
    code = "span_out_of_range"


class UnknownTagError(ParashiftError):
    code = "unknown_tag"


class RoleNameError(ParashiftError):
    code = "role_name_invalid"


class DuplicateTypeError(ParashiftError):
    code = "duplicate_predicate_type"

    def __init__(self, message: str, existing=None):
        self.existing = existing
        super().__init__(message)


class DuplicateParticipationError(ParashiftError):
    code = "duplicate_participation"


class MissingNoteError(ParashiftError):
    code = "note_required"


class AlignmentViolationError(ParashiftError):
    """Raised when an alignment breaks one or more annotation guidelines."""

    code = "validation_failed"

    def __init__(self, violations):
        self.violations = list(violations)
        summary = "; ".join(f"{v.rule_id}: {v.message}" for v in self.violations)
        super().__init__(summary or "alignment rejected")


class IntegrityError(ParashiftError):
    code = "integrity_error"

    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems) or "integrity check failed")


class StaleRevisionError(ParashiftError):
    code = "stale_revision"

    def __init__(self, expected: int, found: int):
        self.expected = expected
        self.found = found
        super().__init__(f"edit based on revision {expected}, store is at {found}")


class UnsupportedVersionError(ParashiftError):
    code = "unsupported_version"

    def __init__(self, found, expected: int):
        self.found = found
        self.expected = expected
        super().__init__(f"unsupported schema_version {found!r}, expected {expected}")
