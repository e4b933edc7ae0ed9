"""Bilingual transeme alignment records, the shift-tag taxonomy, and the
guideline rule engine.

Shift tags split into a grammatical and a semantic category; an alignment
record carries at most one tag of each. Two special markers cover transemes
that cannot be aligned at all (a full verb whose modality the other language
expresses with a modal auxiliary, and material realised outside any
predicate-argument structure).

Rule table enforced by :func:`validate_alignment` (all violated rules are
collected, never just the first):

R1   at most two tags, at most one per category
R2   passivisation/depassivisation only between predicates of class v or l
R3   (de)pronominalisation only between arguments
R4   one-sided records: addition only on target-only, deletion only on
     source-only records
R5   addition/deletion admit no co-occurring tag
R6   explicitation is redundant next to depronominalisation
R7   generalisation is redundant next to pronominalisation
R8   pronominalisation is wrong for relative pronouns (target argument with
     an annotated antecedent)
R9   markers only on one-sided, untagged records
R10  dangling_modal only on predicates
R11  number_change only between arguments or between nominal predicates
R12  records with both sides present never carry addition or deletion

Rule ids are a stable public contract: the CLI, the service error payloads,
and the UI all cite them verbatim.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping

from .pas import PredicateClass


class ShiftCategory(str, Enum):
    GRAMMATICAL = "grammatical"
    SEMANTIC = "semantic"


class ShiftTag(str, Enum):
    # grammatical
    CATEGORY_CHANGE = "category_change"
    PASSIVISATION = "passivisation"
    DEPASSIVISATION = "depassivisation"
    PRONOMINALISATION = "pronominalisation"
    DEPRONOMINALISATION = "depronominalisation"
    NUMBER_CHANGE = "number_change"
    # semantic
    SEMANTIC_MODIFICATION = "semantic_modification"
    EXPLICITATION = "explicitation"
    GENERALISATION = "generalisation"
    ADDITION = "addition"
    DELETION = "deletion"
    MUTATION = "mutation"


_GRAMMATICAL = frozenset(
    {
        ShiftTag.CATEGORY_CHANGE,
        ShiftTag.PASSIVISATION,
        ShiftTag.DEPASSIVISATION,
        ShiftTag.PRONOMINALISATION,
        ShiftTag.DEPRONOMINALISATION,
        ShiftTag.NUMBER_CHANGE,
    }
)


class SpecialMarker(str, Enum):
    DANGLING_MODAL = "dangling_modal"
    NON_PAS = "non_pas"


class Side(str, Enum):
    SOURCE = "source"
    TARGET = "target"


class TransemeKind(str, Enum):
    PREDICATE = "predicate"
    ARGUMENT = "argument"


def classify_tag(tag: ShiftTag) -> ShiftCategory:
    """Total map from the twelve shift tags onto their two categories."""
    return ShiftCategory.GRAMMATICAL if tag in _GRAMMATICAL else ShiftCategory.SEMANTIC


@dataclass(frozen=True)
class TransemeRef:
    side: Side
    kind: TransemeKind
    instance_id: str


@dataclass(frozen=True)
class TransemeAlignment:
    """A link between an optional source and an optional target transeme.

    At least one side must be present; everything else (tag counts, marker
    placement, kind restrictions) is the validator's business so that invalid
    drafts can be represented, checked, and reported.
    """

    alignment_id: str
    pair_id: str
    source: TransemeRef | None = None
    target: TransemeRef | None = None
    tags: tuple[ShiftTag, ...] = ()
    marker: SpecialMarker | None = None
    note: str | None = None

    def __post_init__(self):
        if self.source is None and self.target is None:
            raise ValueError("alignment record needs at least one transeme")
        if self.source is not None and self.source.side is not Side.SOURCE:
            raise ValueError("source ref carries the wrong side")
        if self.target is not None and self.target.side is not Side.TARGET:
            raise ValueError("target ref carries the wrong side")


@dataclass(frozen=True)
class Violation:
    rule_id: str
    message: str
    refs: tuple[str, ...] = ()


@dataclass(frozen=True)
class Advisory:
    """Non-blocking hint for the annotator (advisories never reject a record)."""

    code: str
    message: str
    refs: tuple[str, ...] = ()


@dataclass(frozen=True)
class TransemeInfo:
    """What the validator needs to know about one transeme instance."""

    kind: TransemeKind
    predicate_class: PredicateClass | None = None
    has_antecedent: bool = False
    parent: str | None = None  # for arguments: owning predicate instance


@dataclass(frozen=True)
class AlignmentContext:
    """Resolution context for one sentence pair: instance id -> info, per side."""

    pair_id: str
    source: Mapping[str, TransemeInfo] = field(default_factory=dict)
    target: Mapping[str, TransemeInfo] = field(default_factory=dict)

    def resolve(self, ref: TransemeRef) -> TransemeInfo | None:
        table = self.source if ref.side is Side.SOURCE else self.target
        info = table.get(ref.instance_id)
        if info is None or info.kind is not ref.kind:
            return None
        return info


def _ref_ids(alignment: TransemeAlignment) -> tuple[str, ...]:
    return tuple(
        f"{ref.side.value}:{ref.instance_id}"
        for ref in (alignment.source, alignment.target)
        if ref is not None
    )


def validate_alignment(ctx: AlignmentContext, alignment: TransemeAlignment) -> list[Violation]:
    """Return every violated rule for the record; empty list means valid."""
    violations: list[Violation] = []
    refs = _ref_ids(alignment)
    tags = alignment.tags
    tagset = set(tags)
    both = alignment.source is not None and alignment.target is not None
    one_sided = not both

    def hit(rule_id: str, message: str) -> None:
        violations.append(Violation(rule_id, message, refs))

    source_info = ctx.resolve(alignment.source) if alignment.source else None
    target_info = ctx.resolve(alignment.target) if alignment.target else None

    # R1: tag budget
    grammatical = [t for t in tags if classify_tag(t) is ShiftCategory.GRAMMATICAL]
    semantic = [t for t in tags if classify_tag(t) is ShiftCategory.SEMANTIC]
    if len(tags) > 2 or len(grammatical) > 1 or len(semantic) > 1:
        hit("R1", "at most two shift tags, at most one grammatical and one semantic")

    # R2: voice shifts cross verbal (or light-verb) predicates only
    if tagset & {ShiftTag.PASSIVISATION, ShiftTag.DEPASSIVISATION}:
        def _voice_ok(info: TransemeInfo | None) -> bool:
            return (
                info is not None
                and info.kind is TransemeKind.PREDICATE
                and info.predicate_class in (PredicateClass.VERBAL, PredicateClass.LIGHT_VERB)
            )

        if not (both and _voice_ok(source_info) and _voice_ok(target_info)):
            hit("R2", "(de)passivisation needs verbal or light-verb predicates on both sides")

    # R3: pronoun shifts cross arguments only
    if tagset & {ShiftTag.PRONOMINALISATION, ShiftTag.DEPRONOMINALISATION}:
        sides_are_arguments = (
            both
            and source_info is not None
            and source_info.kind is TransemeKind.ARGUMENT
            and target_info is not None
            and target_info.kind is TransemeKind.ARGUMENT
        )
        if not sides_are_arguments:
            hit("R3", "(de)pronominalisation needs argument transemes on both sides")

    # R4: one-sided records must point the right way
    if one_sided:
        if ShiftTag.ADDITION in tagset and alignment.target is None:
            hit("R4", "addition marks material added in translation: target side only")
        if ShiftTag.DELETION in tagset and alignment.source is None:
            hit("R4", "deletion marks untranslated source material: source side only")

    # R5: addition/deletion stand alone
    if tagset & {ShiftTag.ADDITION, ShiftTag.DELETION} and len(tags) > 1:
        hit("R5", "addition and deletion admit no co-occurring tag")

    # R6 / R7: redundant semantic companions of pronoun shifts
    if ShiftTag.EXPLICITATION in tagset and ShiftTag.DEPRONOMINALISATION in tagset:
        hit("R6", "explicitation is implied by depronominalisation; tag only the latter")
    if ShiftTag.GENERALISATION in tagset and ShiftTag.PRONOMINALISATION in tagset:
        hit("R7", "generalisation is implied by pronominalisation; tag only the latter")

    # R8: relative pronouns are not pronominalisation shifts
    if (
        ShiftTag.PRONOMINALISATION in tagset
        and target_info is not None
        and target_info.kind is TransemeKind.ARGUMENT
        and target_info.has_antecedent
    ):
        hit("R8", "target argument is a relative pronoun (has an antecedent)")

    # R9 / R10: special markers
    if alignment.marker is not None:
        if both or tags:
            hit("R9", "markers go on unaligned, untagged transemes only")
        if alignment.marker is SpecialMarker.DANGLING_MODAL:
            present = source_info if alignment.source is not None else target_info
            present_ref = alignment.source if alignment.source is not None else alignment.target
            if present_ref is not None and (
                present is None or present.kind is not TransemeKind.PREDICATE
            ):
                hit("R10", "dangling_modal applies to predicate transemes only")

    # R11: number change between arguments or nominal predicates
    if ShiftTag.NUMBER_CHANGE in tagset:
        def _kinds_ok() -> bool:
            if not (both and source_info is not None and target_info is not None):
                return False
            if (
                source_info.kind is TransemeKind.ARGUMENT
                and target_info.kind is TransemeKind.ARGUMENT
            ):
                return True
            return (
                source_info.kind is TransemeKind.PREDICATE
                and target_info.kind is TransemeKind.PREDICATE
                and source_info.predicate_class is PredicateClass.NOMINAL
                and target_info.predicate_class is PredicateClass.NOMINAL
            )

        if not _kinds_ok():
            hit("R11", "number_change needs two arguments or two nominal predicates")

    # R12: aligned records never carry addition or deletion
    if both and tagset & {ShiftTag.ADDITION, ShiftTag.DELETION}:
        hit("R12", "both transemes exist; addition/deletion apply to unaligned material")

    return violations


def coverage_report(
    ctx: AlignmentContext, alignments: list[TransemeAlignment]
) -> dict[str, list[TransemeRef]]:
    """Partition the pair's transemes into covered and still-unaligned ones.

    A transeme inside any record (including addition/deletion and marker
    records) counts as covered.
    """
    covered_source: set[str] = set()
    covered_target: set[str] = set()
    for record in alignments:
        if record.source is not None:
            covered_source.add(record.source.instance_id)
        if record.target is not None:
            covered_target.add(record.target.instance_id)
    aligned: list[TransemeRef] = []
    unaligned_source: list[TransemeRef] = []
    unaligned_target: list[TransemeRef] = []
    for instance_id, info in ctx.source.items():
        ref = TransemeRef(Side.SOURCE, info.kind, instance_id)
        (aligned if instance_id in covered_source else unaligned_source).append(ref)
    for instance_id, info in ctx.target.items():
        ref = TransemeRef(Side.TARGET, info.kind, instance_id)
        (aligned if instance_id in covered_target else unaligned_target).append(ref)
    return {
        "aligned": aligned,
        "unaligned_source": unaligned_source,
        "unaligned_target": unaligned_target,
    }


def advisories(ctx: AlignmentContext, alignments: list[TransemeAlignment]) -> list[Advisory]:
    """Non-blocking hints: a depassivised predicate whose target-side arguments
    are not all covered often hides a missing addition record."""
    out: list[Advisory] = []
    covered_target = {r.target.instance_id for r in alignments if r.target is not None}
    for record in alignments:
        if ShiftTag.DEPASSIVISATION not in record.tags or record.target is None:
            continue
        predicate_id = record.target.instance_id
        dangling = [
            instance_id
            for instance_id, info in ctx.target.items()
            if info.kind is TransemeKind.ARGUMENT
            and info.parent == predicate_id
            and instance_id not in covered_target
        ]
        if dangling:
            out.append(
                Advisory(
                    code="depassivisation_addition_hint",
                    message=(
                        "depassivisation often adds an agent on the target side; "
                        "arguments "
                        + ", ".join(sorted(dangling))
                        + " of the depassivised predicate are still unaligned"
                    ),
                    refs=tuple(sorted(dangling)),
                )
            )
    return out
