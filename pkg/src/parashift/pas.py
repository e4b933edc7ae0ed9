"""Monolingual predicate-argument annotation layer.

Predicates are registered once per (language, lemma, sense) under a predicate
group; role names are free strings that only have to be used consistently
within a group. Instances annotate token-index spans of a sentence; spans are
index sets, so discontinuous predicates (particle and separable verbs) are
first-class. The per-sentence annotation list is flat: predicates are never
nested inside each other, although spans may overlap or contain one another.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping

from .corpus import Sentence
from .errors import DuplicateTypeError, RoleNameError, SpanOutOfRangeError, UnknownTagError

ROLE_NAME_RE = re.compile(r"^[a-z][a-z0-9]*(?:_[a-z][a-z0-9]*)*$")

SentenceKey = tuple[str, str, str]  # (corpus language, document id, sentence id)
TypeKey = tuple[str, str, int]  # (language, lemma, sense)


class PredicateClass(str, Enum):
    VERBAL = "v"
    NOMINAL = "n"
    ADJECTIVAL = "a"
    COPULA = "c"
    LIGHT_VERB = "l"


@dataclass
class PredicateGroup:
    """Related predicate types (e.g. a verb and its nominalisation) share one
    role-name registry."""

    group_id: str
    language: str
    role_registry: set[str] = field(default_factory=set)

    def add_role(self, role: str) -> None:
        check_role_name(role)
        self.role_registry.add(role)


@dataclass(frozen=True)
class PredicateType:
    lemma: str
    predicate_class: PredicateClass
    sense: int
    group_id: str
    language: str
    description: str | None = None

    def __post_init__(self):
        if not self.lemma or self.lemma != self.lemma.upper():
            raise ValueError(f"lemma {self.lemma!r} is not a non-empty uppercase citation form")
        if self.sense < 1:
            raise ValueError("sense must be a positive integer")

    @property
    def key(self) -> TypeKey:
        return (self.language, self.lemma, self.sense)


@dataclass(frozen=True)
class PredicateInstance:
    instance_id: str
    sentence: SentenceKey
    type_key: TypeKey
    span: frozenset[int]
    realization_tags: frozenset[str] = frozenset()


@dataclass(frozen=True)
class ArgumentInstance:
    instance_id: str
    parent: str  # PredicateInstance.instance_id
    role: str
    span: frozenset[int]
    antecedent_span: frozenset[int] | None = None


@dataclass
class SentenceAnnotations:
    """Flat per-sentence annotation list; there is no predicate nesting."""

    predicates: list[PredicateInstance] = field(default_factory=list)
    arguments: list[ArgumentInstance] = field(default_factory=list)

    def instance_ids(self) -> set[str]:
        ids = {p.instance_id for p in self.predicates}
        ids.update(a.instance_id for a in self.arguments)
        return ids


def check_role_name(role: str) -> str:
    if not ROLE_NAME_RE.match(role):
        raise RoleNameError(
            f"role {role!r} must be lowercase, underscore-separated (e.g. ent_dramatised)"
        )
    return role


def check_span(span: Iterable[int], sentence: Sentence, what: str = "span") -> frozenset[int]:
    indices = frozenset(span)
    if not indices:
        raise SpanOutOfRangeError(f"{what} is empty")
    bad = [i for i in indices if not 0 <= i < len(sentence.tokens)]
    if bad:
        raise SpanOutOfRangeError(
            f"{what} {sorted(bad)} outside tokens 0..{len(sentence.tokens) - 1} "
            f"of sentence {sentence.id!r}"
        )
    return indices


class PredicateRegistry:
    """Project-wide registry of predicate types and their groups."""

    def __init__(self):
        self.types: dict[TypeKey, PredicateType] = {}
        self.groups: dict[str, PredicateGroup] = {}
        self._next_group = 1

    def register(
        self,
        language: str,
        lemma: str,
        predicate_class: PredicateClass | str,
        sense: int = 1,
        group_id: str | None = None,
        description: str | None = None,
    ) -> PredicateType:
        """Add a predicate type; without a group it founds a fresh singleton group."""
        lemma = lemma.upper()
        key = (language, lemma, sense)
        if key in self.types:
            raise DuplicateTypeError(
                f"predicate type {lemma!r} (sense {sense}, {language}) already registered",
                existing=self.types[key],
            )
        if group_id is None:
            group_id = self._fresh_group_id()
            self.groups[group_id] = PredicateGroup(group_id=group_id, language=language)
        elif group_id not in self.groups:
            self.groups[group_id] = PredicateGroup(group_id=group_id, language=language)
        group = self.groups[group_id]
        if group.language != language:
            raise ValueError(
                f"group {group_id!r} is for language {group.language!r}, not {language!r}"
            )
        ptype = PredicateType(
            lemma=lemma,
            predicate_class=PredicateClass(predicate_class),
            sense=sense,
            group_id=group_id,
            language=language,
            description=description,
        )
        self.types[key] = ptype
        return ptype

    def group_of(self, type_key: TypeKey) -> PredicateGroup:
        return self.groups[self.types[type_key].group_id]

    def _fresh_group_id(self) -> str:
        while f"g{self._next_group}" in self.groups:
            self._next_group += 1
        group_id = f"g{self._next_group}"
        self._next_group += 1
        return group_id


def make_predicate_instance(
    instance_id: str,
    sentence_key: SentenceKey,
    sentence: Sentence,
    ptype: PredicateType,
    span: Iterable[int],
    tags: Iterable[str] = (),
    tag_inventory: Iterable[str] = ("infinitive", "passive"),
) -> PredicateInstance:
    if ptype.language != sentence_key[0]:
        raise ValueError(
            f"predicate type is {ptype.language!r} but sentence belongs to {sentence_key[0]!r}"
        )
    inventory = set(tag_inventory)
    tags = frozenset(tags)
    unknown = tags - inventory
    if unknown:
        raise UnknownTagError(f"realization tag(s) {sorted(unknown)} not in project inventory")
    return PredicateInstance(
        instance_id=instance_id,
        sentence=sentence_key,
        type_key=ptype.key,
        span=check_span(span, sentence),
        realization_tags=tags,
    )


def make_argument_instance(
    instance_id: str,
    parent: PredicateInstance,
    sentence: Sentence,
    group: PredicateGroup,
    span: Iterable[int],
    role: str,
    antecedent_span: Iterable[int] | None = None,
) -> ArgumentInstance:
    """Attach an argument to a predicate instance, auto-registering its role.

    An antecedent span marks the argument as a relative pronoun; it must lie
    in the same sentence and be disjoint from the argument span itself.
    """
    check_role_name(role)
    if role not in group.role_registry:
        group.add_role(role)
    span_set = check_span(span, sentence)
    antecedent = None
    if antecedent_span is not None:
        antecedent = check_span(antecedent_span, sentence, what="antecedent span")
        if antecedent & span_set:
            raise SpanOutOfRangeError("antecedent span overlaps the argument span")
    return ArgumentInstance(
        instance_id=instance_id,
        parent=parent.instance_id,
        role=role,
        span=span_set,
        antecedent_span=antecedent,
    )


def suggest_roles(group: PredicateGroup, role_usage: Mapping[str, int]) -> list[str]:
    """Group roles ordered by descending use count, ties alphabetical."""
    return sorted(group.role_registry, key=lambda role: (-role_usage.get(role, 0), role))


def suggest_predicate_candidates(
    sentence: Sentence, registry: PredicateRegistry, language: str
) -> list[frozenset[int]]:
    """Advisory spans whose surface matches a registered lemma of the language.

    Single tokens match case-insensitively against single-word lemmas;
    registered multi-word lemmas match contiguous token runs. Never applied
    automatically.
    """
    surfaces = [t.surface.casefold() for t in sentence.tokens]
    single: dict[str, None] = {}
    multi: list[list[str]] = []
    for (lang, lemma, _), _type in sorted(registry.types.items()):
        if lang != language:
            continue
        words = lemma.casefold().split()
        if len(words) == 1:
            single[words[0]] = None
        elif words not in multi:
            multi.append(words)
    spans: list[frozenset[int]] = []
    for i, surface in enumerate(surfaces):
        if surface in single:
            spans.append(frozenset({i}))
    for words in multi:
        width = len(words)
        for i in range(len(surfaces) - width + 1):
            if surfaces[i : i + width] == words:
                spans.append(frozenset(range(i, i + width)))
    return spans
