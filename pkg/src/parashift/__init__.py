"""Toolkit for annotating translation shifts in sentence-aligned parallel
corpora: corpus ingestion, direction-verified pair extraction, monolingual
predicate-argument annotation, shift-tagged transeme alignment with a
guideline rule engine, canonical project persistence, shift statistics, and
an HTTP service for the browser annotation workbench."""

from .corpus import (
    AlignmentLink,
    Corpus,
    CorpusFormat,
    Document,
    Sentence,
    Token,
    parse_alignment,
    parse_corpus,
    serialize_alignment,
    serialize_corpus,
)
from .errors import (
    AlignmentViolationError,
    DanglingRefError,
    DuplicateIdError,
    DuplicateParticipationError,
    DuplicateTypeError,
    IntegrityError,
    MalformedInputError,
    MissingNoteError,
    OverlappingLinkError,
    ParashiftError,
    RoleNameError,
    SpanOutOfRangeError,
    StaleRevisionError,
    UnknownTagError,
    UnsupportedVersionError,
)
from .extraction import (
    SentencePair,
    SkipReason,
    SkipReport,
    SpeakerWhitelist,
    normalize_name,
    select_original_pairs,
)
from .pas import (
    ArgumentInstance,
    PredicateClass,
    PredicateGroup,
    PredicateInstance,
    PredicateRegistry,
    PredicateType,
    SentenceAnnotations,
    suggest_predicate_candidates,
    suggest_roles,
)
from .project import (
    Project,
    ProjectConfig,
    ProjectStore,
    apply,
    check_integrity,
    load,
    save,
)
from .reporting import GroupBy, ShiftReport, export_csv, shift_counts
from .shifts import (
    Advisory,
    AlignmentContext,
    ShiftCategory,
    ShiftTag,
    Side,
    SpecialMarker,
    TransemeAlignment,
    TransemeInfo,
    TransemeKind,
    TransemeRef,
    Violation,
    advisories,
    classify_tag,
    coverage_report,
    validate_alignment,
)

__version__ = "0.1.0"
