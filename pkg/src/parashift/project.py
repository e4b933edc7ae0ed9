"""Whole-project persistence with canonical, diff-friendly snapshots.

A project file is canonical JSON (sorted keys, two-space indent, LF endings,
UTF-8): structurally equal projects serialize to byte-identical files. All
mutation goes through :func:`apply`, which is transactional (all-or-nothing)
and bumps the revision counter; :class:`ProjectStore` adds the single-writer
boundary and optimistic concurrency for remote clients.
"""

from __future__ import annotations

import copy
import json
import os
import threading
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Callable, Iterable

from . import pas, shifts
from .corpus import AlignmentLink, Corpus, Document, Sentence, Token
from .errors import (
    AlignmentViolationError,
    DanglingRefError,
    DuplicateParticipationError,
    IntegrityError,
    MalformedInputError,
    MissingNoteError,
    StaleRevisionError,
    UnsupportedVersionError,
)
from .extraction import SentencePair
from .pas import (
    ArgumentInstance,
    PredicateClass,
    PredicateInstance,
    PredicateRegistry,
    SentenceAnnotations,
    SentenceKey,
    TypeKey,
)
from .shifts import (
    AlignmentContext,
    ShiftTag,
    Side,
    SpecialMarker,
    TransemeAlignment,
    TransemeInfo,
    TransemeKind,
    TransemeRef,
    Violation,
    validate_alignment,
)

SCHEMA_VERSION = 1


@dataclass
class ProjectConfig:
    realization_tags: list[str] = field(default_factory=lambda: ["infinitive", "passive"])
    genres: list[str] = field(default_factory=list)


@dataclass(eq=False)
class Project:
    """The persistent unit: corpora, pairs, registry, annotations, alignments."""

    schema_version: int = SCHEMA_VERSION
    revision: int = 0
    config: ProjectConfig = field(default_factory=ProjectConfig)
    corpora: list[Corpus] = field(default_factory=list)
    links: list[AlignmentLink] = field(default_factory=list)
    pairs: list[SentencePair] = field(default_factory=list)
    registry: PredicateRegistry = field(default_factory=PredicateRegistry)
    annotations: dict[SentenceKey, SentenceAnnotations] = field(default_factory=dict)
    alignments: dict[str, list[TransemeAlignment]] = field(default_factory=dict)
    counters: dict[str, int] = field(
        default_factory=lambda: {"predicate": 0, "argument": 0, "alignment": 0}
    )

    # -- equality is structural, via the canonical document form
    def __eq__(self, other):
        if not isinstance(other, Project):
            return NotImplemented
        return project_to_doc(self) == project_to_doc(other)

    # -- lookups

    def corpus_for(self, language: str) -> Corpus | None:
        for corpus in self.corpora:
            if corpus.language == language:
                return corpus
        return None

    def sentence_for(self, key: SentenceKey) -> Sentence | None:
        corpus = self.corpus_for(key[0])
        return corpus.sentence(key[1], key[2]) if corpus else None

    def pair_for(self, pair_id: str) -> SentencePair | None:
        for pair in self.pairs:
            if pair.pair_id == pair_id:
                return pair
        return None

    def annotations_for(self, key: SentenceKey) -> SentenceAnnotations:
        return self.annotations.get(key) or SentenceAnnotations()

    def find_predicate(self, instance_id: str) -> tuple[SentenceKey, PredicateInstance] | None:
        for key, ann in self.annotations.items():
            for predicate in ann.predicates:
                if predicate.instance_id == instance_id:
                    return key, predicate
        return None

    def find_argument(self, instance_id: str) -> tuple[SentenceKey, ArgumentInstance] | None:
        for key, ann in self.annotations.items():
            for argument in ann.arguments:
                if argument.instance_id == instance_id:
                    return key, argument
        return None

    # -- mutators (call through apply()/ProjectStore.commit for transactions)

    def add_corpus(self, corpus: Corpus) -> None:
        if self.corpus_for(corpus.language) is not None:
            raise ValueError(f"corpus for {corpus.language!r} already present")
        if len(self.corpora) >= 2:
            raise ValueError("a project holds at most two corpora")
        self.corpora.append(corpus)

    def register_predicate(
        self,
        language: str,
        lemma: str,
        predicate_class: PredicateClass | str,
        sense: int = 1,
        group_id: str | None = None,
        description: str | None = None,
    ):
        return self.registry.register(language, lemma, predicate_class, sense, group_id, description)

    def _next_id(self, counter: str, prefix: str) -> str:
        self.counters[counter] += 1
        return f"{prefix}{self.counters[counter]}"

    def annotate_predicate(
        self,
        sentence_key: SentenceKey,
        span: Iterable[int],
        type_key: TypeKey,
        tags: Iterable[str] = (),
    ) -> PredicateInstance:
        sentence = self.sentence_for(sentence_key)
        if sentence is None:
            raise DanglingRefError(f"unknown sentence {sentence_key}")
        ptype = self.registry.types.get(tuple(type_key))
        if ptype is None:
            raise DanglingRefError(f"unknown predicate type {type_key}")
        instance = pas.make_predicate_instance(
            self._next_id("predicate", "p"),
            sentence_key,
            sentence,
            ptype,
            span,
            tags,
            tag_inventory=self.config.realization_tags,
        )
        self.annotations.setdefault(sentence_key, SentenceAnnotations()).predicates.append(instance)
        return instance

    def annotate_argument(
        self,
        parent_id: str,
        span: Iterable[int],
        role: str,
        antecedent_span: Iterable[int] | None = None,
    ) -> ArgumentInstance:
        located = self.find_predicate(parent_id)
        if located is None:
            raise DanglingRefError(f"unknown predicate instance {parent_id!r}")
        sentence_key, parent = located
        sentence = self.sentence_for(sentence_key)
        group = self.registry.group_of(parent.type_key)
        instance = pas.make_argument_instance(
            self._next_id("argument", "a"),
            parent,
            sentence,
            group,
            span,
            role,
            antecedent_span,
        )
        self.annotations[sentence_key].arguments.append(instance)
        return instance

    def align(
        self,
        pair_id: str,
        source: TransemeRef | None = None,
        target: TransemeRef | None = None,
        tags: Iterable[ShiftTag | str] = (),
        marker: SpecialMarker | str | None = None,
        note: str | None = None,
    ) -> TransemeAlignment:
        """Create one validated alignment record; rejects persist nothing."""
        if self.pair_for(pair_id) is None:
            raise DanglingRefError(f"unknown pair {pair_id!r}")
        ctx = self.alignment_context(pair_id)
        record = TransemeAlignment(
            alignment_id=self._next_id("alignment", "x"),
            pair_id=pair_id,
            source=source,
            target=target,
            tags=tuple(ShiftTag(t) for t in tags),
            marker=SpecialMarker(marker) if marker is not None else None,
            note=note,
        )
        for ref in (record.source, record.target):
            if ref is not None and ctx.resolve(ref) is None:
                raise DanglingRefError(
                    f"{ref.side.value} {ref.kind.value} {ref.instance_id!r} "
                    f"does not exist on pair {pair_id!r}",
                    refs=(ref.instance_id,),
                )
        existing = self.alignments.get(pair_id, [])
        used = {
            (ref.side, ref.instance_id)
            for rec in existing
            for ref in (rec.source, rec.target)
            if ref is not None
        }
        for ref in (record.source, record.target):
            if ref is not None and (ref.side, ref.instance_id) in used:
                raise DuplicateParticipationError(
                    f"{ref.kind.value} {ref.instance_id!r} is already aligned in pair {pair_id!r}"
                )
        if ShiftTag.SEMANTIC_MODIFICATION in record.tags and not (note and note.strip()):
            raise MissingNoteError("semantic_modification records need a note on the divergence")
        violations = validate_alignment(ctx, record)
        if violations:
            raise AlignmentViolationError(violations)
        self.alignments.setdefault(pair_id, []).append(record)
        return record

    def remove_alignment(self, pair_id: str, alignment_id: str) -> None:
        records = self.alignments.get(pair_id, [])
        remaining = [r for r in records if r.alignment_id != alignment_id]
        if len(remaining) == len(records):
            raise DanglingRefError(f"unknown alignment {alignment_id!r} on pair {pair_id!r}")
        if remaining:
            self.alignments[pair_id] = remaining
        else:
            self.alignments.pop(pair_id, None)

    def remove_instance(self, instance_id: str) -> list[str]:
        """Remove a transeme instance; predicates take their arguments with
        them, and any alignment record touching removed instances is dropped."""
        removed: list[str] = []
        located = self.find_predicate(instance_id)
        if located is not None:
            key, predicate = located
            ann = self.annotations[key]
            ann.predicates.remove(predicate)
            removed.append(instance_id)
            doomed_args = [a for a in ann.arguments if a.parent == instance_id]
            for argument in doomed_args:
                ann.arguments.remove(argument)
                removed.append(argument.instance_id)
        else:
            located = self.find_argument(instance_id)
            if located is None:
                raise DanglingRefError(f"unknown instance {instance_id!r}")
            key, argument = located
            self.annotations[key].arguments.remove(argument)
            removed.append(instance_id)
        if not self.annotations[key].predicates and not self.annotations[key].arguments:
            del self.annotations[key]
        gone = set(removed)
        for pair_id in list(self.alignments):
            kept = [
                r
                for r in self.alignments[pair_id]
                if not (
                    (r.source is not None and r.source.instance_id in gone)
                    or (r.target is not None and r.target.instance_id in gone)
                )
            ]
            if kept:
                self.alignments[pair_id] = kept
            else:
                del self.alignments[pair_id]
        return removed

    # -- alignment context & derived views

    def alignment_context(self, pair_id: str) -> AlignmentContext:
        pair = self.pair_for(pair_id)
        if pair is None:
            raise DanglingRefError(f"unknown pair {pair_id!r}")
        return AlignmentContext(
            pair_id=pair_id,
            source=self._side_infos(pair.source),
            target=self._side_infos(pair.target),
        )

    def _side_infos(self, key: SentenceKey) -> dict[str, TransemeInfo]:
        infos: dict[str, TransemeInfo] = {}
        ann = self.annotations_for(key)
        for predicate in ann.predicates:
            ptype = self.registry.types.get(predicate.type_key)
            infos[predicate.instance_id] = TransemeInfo(
                kind=TransemeKind.PREDICATE,
                predicate_class=ptype.predicate_class if ptype else None,
            )
        for argument in ann.arguments:
            infos[argument.instance_id] = TransemeInfo(
                kind=TransemeKind.ARGUMENT,
                has_antecedent=argument.antecedent_span is not None,
                parent=argument.parent,
            )
        return infos

    def coverage(self, pair_id: str) -> dict[str, list[TransemeRef]]:
        ctx = self.alignment_context(pair_id)
        return shifts.coverage_report(ctx, self.alignments.get(pair_id, []))

    def role_usage(self, group_id: str) -> Counter:
        usage: Counter = Counter()
        predicate_groups = {
            p.instance_id: self.registry.types[p.type_key].group_id
            for ann in self.annotations.values()
            for p in ann.predicates
            if p.type_key in self.registry.types
        }
        for ann in self.annotations.values():
            for argument in ann.arguments:
                if predicate_groups.get(argument.parent) == group_id:
                    usage[argument.role] += 1
        return usage

    def suggest_roles(self, type_key: TypeKey) -> list[str]:
        group = self.registry.group_of(tuple(type_key))
        return pas.suggest_roles(group, self.role_usage(group.group_id))

    def candidate_spans(self, sentence_key: SentenceKey) -> list[frozenset[int]]:
        sentence = self.sentence_for(sentence_key)
        if sentence is None:
            raise DanglingRefError(f"unknown sentence {sentence_key}")
        return pas.suggest_predicate_candidates(sentence, self.registry, sentence_key[0])

    def validate_all(self) -> list[tuple[str, Violation]]:
        """Re-validate every stored alignment record; [] means clean."""
        out: list[tuple[str, Violation]] = []
        for pair_id in sorted(self.alignments):
            ctx = self.alignment_context(pair_id)
            for record in self.alignments[pair_id]:
                for violation in validate_alignment(ctx, record):
                    out.append((pair_id, violation))
        return out


# --- integrity -------------------------------------------------------------


def check_integrity(project: Project) -> list[str]:
    """Every cross-reference must resolve; returns all problems, not the first."""
    problems: list[str] = []
    languages = [c.language for c in project.corpora]
    if len(languages) != len(set(languages)):
        problems.append("duplicate corpus language")
    if len(project.corpora) > 2:
        problems.append("more than two corpora")

    if project.links and len(project.corpora) < 2:
        problems.append("alignment links present but fewer than two corpora")
    else:
        for index, link in enumerate(project.links):
            for side, corpus in (("source", project.corpora[:1]), ("target", project.corpora[1:2])):
                ids = link.source_ids if side == "source" else link.target_ids
                for doc_id, sentence_id in ids:
                    if not corpus or corpus[0].sentence(doc_id, sentence_id) is None:
                        problems.append(
                            f"link {index} {side} names unknown sentence {doc_id}:{sentence_id}"
                        )

    seen_pairs: set[str] = set()
    for pair in project.pairs:
        if pair.pair_id in seen_pairs:
            problems.append(f"duplicate pair id {pair.pair_id!r}")
        seen_pairs.add(pair.pair_id)
        for label, key in (("source", pair.source), ("target", pair.target)):
            if project.sentence_for(key) is None:
                problems.append(f"pair {pair.pair_id!r} {label} sentence {key} does not exist")
        if pair.direction != (pair.source[0], pair.target[0]):
            problems.append(f"pair {pair.pair_id!r} direction disagrees with its sides")

    for type_key, ptype in project.registry.types.items():
        if ptype.group_id not in project.registry.groups:
            problems.append(f"predicate type {type_key} references unknown group {ptype.group_id!r}")
        elif project.registry.groups[ptype.group_id].language != ptype.language:
            problems.append(f"predicate type {type_key} in group of another language")

    inventory = set(project.config.realization_tags)
    seen_instances: set[str] = set()
    for key, ann in project.annotations.items():
        sentence = project.sentence_for(key)
        if sentence is None:
            problems.append(f"annotations for unknown sentence {key}")
            continue
        token_range = range(len(sentence.tokens))
        predicate_ids = set()
        for predicate in ann.predicates:
            if predicate.instance_id in seen_instances:
                problems.append(f"duplicate instance id {predicate.instance_id!r}")
            seen_instances.add(predicate.instance_id)
            predicate_ids.add(predicate.instance_id)
            if predicate.sentence != key:
                problems.append(f"predicate {predicate.instance_id!r} filed under wrong sentence")
            ptype = project.registry.types.get(predicate.type_key)
            if ptype is None:
                problems.append(
                    f"predicate {predicate.instance_id!r} references unknown type "
                    f"{predicate.type_key}"
                )
            elif ptype.language != key[0]:
                problems.append(
                    f"predicate {predicate.instance_id!r} uses a {ptype.language!r} type "
                    f"in a {key[0]!r} sentence"
                )
            if not predicate.span or any(i not in token_range for i in predicate.span):
                problems.append(f"predicate {predicate.instance_id!r} span out of range")
            extra_tags = predicate.realization_tags - inventory
            if extra_tags:
                problems.append(
                    f"predicate {predicate.instance_id!r} carries unregistered tags "
                    f"{sorted(extra_tags)}"
                )
        for argument in ann.arguments:
            if argument.instance_id in seen_instances:
                problems.append(f"duplicate instance id {argument.instance_id!r}")
            seen_instances.add(argument.instance_id)
            if argument.parent not in predicate_ids:
                problems.append(
                    f"argument {argument.instance_id!r} parent {argument.parent!r} "
                    f"is not a predicate of the same sentence"
                )
            else:
                parent = next(p for p in ann.predicates if p.instance_id == argument.parent)
                ptype = project.registry.types.get(parent.type_key)
                group = project.registry.groups.get(ptype.group_id) if ptype else None
                if group is not None and argument.role not in group.role_registry:
                    problems.append(
                        f"argument {argument.instance_id!r} role {argument.role!r} "
                        f"is not registered in group {group.group_id!r}"
                    )
            if not argument.span or any(i not in token_range for i in argument.span):
                problems.append(f"argument {argument.instance_id!r} span out of range")
            if argument.antecedent_span is not None:
                if any(i not in token_range for i in argument.antecedent_span):
                    problems.append(
                        f"argument {argument.instance_id!r} antecedent span out of range"
                    )
                if argument.antecedent_span & argument.span:
                    problems.append(
                        f"argument {argument.instance_id!r} antecedent overlaps its span"
                    )

    for pair_id, records in project.alignments.items():
        pair = project.pair_for(pair_id)
        if pair is None:
            problems.append(f"alignments for unknown pair {pair_id!r}")
            continue
        ctx = project.alignment_context(pair_id)
        used: set[tuple[Side, str]] = set()
        for record in records:
            for ref in (record.source, record.target):
                if ref is None:
                    continue
                if ctx.resolve(ref) is None:
                    problems.append(
                        f"alignment {record.alignment_id!r} references unknown "
                        f"{ref.side.value} {ref.kind.value} {ref.instance_id!r}"
                    )
                if (ref.side, ref.instance_id) in used:
                    problems.append(
                        f"instance {ref.instance_id!r} participates in two alignments "
                        f"of pair {pair_id!r}"
                    )
                used.add((ref.side, ref.instance_id))
    return problems


# --- transactions ----------------------------------------------------------


def apply(
    project: Project,
    edit: Callable[[Project], None],
    expected_revision: int | None = None,
) -> Project:
    """Run an edit closure transactionally: on success, a new project with
    revision + 1; on any failure the input project is untouched."""
    if expected_revision is not None and expected_revision != project.revision:
        raise StaleRevisionError(expected=expected_revision, found=project.revision)
    working = copy.deepcopy(project)
    edit(working)
    problems = check_integrity(working)
    if problems:
        raise IntegrityError(problems)
    working.revision = project.revision + 1
    return working


# --- serialization ---------------------------------------------------------


def _corpus_doc(corpus: Corpus) -> dict:
    return {
        "language": corpus.language,
        "documents": [
            {
                "id": doc.id,
                "sentences": [
                    {
                        "id": s.id,
                        "speaker_name": s.speaker_name,
                        "language_attr": s.language_attr,
                        "tokens": [t.surface for t in s.tokens],
                    }
                    for s in doc.sentences
                ],
            }
            for doc in corpus.documents
        ],
    }


def _corpus_from_doc(doc: dict) -> Corpus:
    return Corpus(
        language=doc["language"],
        documents=tuple(
            Document(
                id=d["id"],
                sentences=tuple(
                    Sentence(
                        id=s["id"],
                        tokens=tuple(Token(i, t) for i, t in enumerate(s["tokens"])),
                        speaker_name=s.get("speaker_name"),
                        language_attr=s.get("language_attr"),
                    )
                    for s in d["sentences"]
                ),
            )
            for d in doc["documents"]
        ),
    )


def _ref_doc(ref: TransemeRef | None) -> dict | None:
    if ref is None:
        return None
    return {"kind": ref.kind.value, "instance_id": ref.instance_id}


def _ref_from_doc(doc: dict | None, side: Side) -> TransemeRef | None:
    if doc is None:
        return None
    return TransemeRef(side=side, kind=TransemeKind(doc["kind"]), instance_id=doc["instance_id"])


def project_to_doc(project: Project) -> dict:
    """Canonical plain-data form of a project (stable field and list order)."""
    return {
        "schema_version": project.schema_version,
        "revision": project.revision,
        "config": {
            "realization_tags": sorted(project.config.realization_tags),
            "genres": sorted(project.config.genres),
        },
        "counters": dict(sorted(project.counters.items())),
        "corpora": [_corpus_doc(c) for c in project.corpora],
        "links": [
            {
                "source": [list(k) for k in link.source_ids],
                "target": [list(k) for k in link.target_ids],
            }
            for link in project.links
        ],
        "pairs": [
            {
                "pair_id": p.pair_id,
                "direction": list(p.direction),
                "source": list(p.source),
                "target": list(p.target),
                "speaker_name": p.speaker_name,
                "genre": p.genre,
            }
            for p in project.pairs
        ],
        "registry": {
            "groups": [
                {
                    "group_id": g.group_id,
                    "language": g.language,
                    "roles": sorted(g.role_registry),
                }
                for _, g in sorted(project.registry.groups.items())
            ],
            "types": [
                {
                    "language": t.language,
                    "lemma": t.lemma,
                    "class": t.predicate_class.value,
                    "sense": t.sense,
                    "group_id": t.group_id,
                    "description": t.description,
                }
                for _, t in sorted(project.registry.types.items())
            ],
        },
        "annotations": [
            {
                "sentence": list(key),
                "predicates": [
                    {
                        "instance_id": p.instance_id,
                        "type": list(p.type_key),
                        "span": sorted(p.span),
                        "realization_tags": sorted(p.realization_tags),
                    }
                    for p in ann.predicates
                ],
                "arguments": [
                    {
                        "instance_id": a.instance_id,
                        "parent": a.parent,
                        "role": a.role,
                        "span": sorted(a.span),
                        "antecedent_span": sorted(a.antecedent_span)
                        if a.antecedent_span is not None
                        else None,
                    }
                    for a in ann.arguments
                ],
            }
            for key, ann in sorted(project.annotations.items())
        ],
        "alignments": [
            {
                "pair_id": pair_id,
                "records": [
                    {
                        "alignment_id": r.alignment_id,
                        "source": _ref_doc(r.source),
                        "target": _ref_doc(r.target),
                        "tags": [t.value for t in r.tags],
                        "marker": r.marker.value if r.marker else None,
                        "note": r.note,
                    }
                    for r in records
                ],
            }
            for pair_id, records in sorted(project.alignments.items())
        ],
    }


def project_from_doc(doc: dict) -> Project:
    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise UnsupportedVersionError(found=version, expected=SCHEMA_VERSION)
    try:
        project = Project(
            schema_version=version,
            revision=doc["revision"],
            config=ProjectConfig(
                realization_tags=list(doc["config"]["realization_tags"]),
                genres=list(doc["config"]["genres"]),
            ),
            corpora=[_corpus_from_doc(c) for c in doc["corpora"]],
            links=[
                AlignmentLink(
                    source_ids=tuple((d, s) for d, s in link["source"]),
                    target_ids=tuple((d, s) for d, s in link["target"]),
                )
                for link in doc["links"]
            ],
            pairs=[
                SentencePair(
                    pair_id=p["pair_id"],
                    source=tuple(p["source"]),
                    target=tuple(p["target"]),
                    direction=tuple(p["direction"]),
                    speaker_name=p.get("speaker_name"),
                    genre=p.get("genre"),
                )
                for p in doc["pairs"]
            ],
            counters={"predicate": 0, "argument": 0, "alignment": 0} | dict(doc["counters"]),
        )
        for group_doc in doc["registry"]["groups"]:
            group = pas.PredicateGroup(
                group_id=group_doc["group_id"], language=group_doc["language"]
            )
            for role in group_doc["roles"]:
                group.add_role(role)
            project.registry.groups[group.group_id] = group
        for type_doc in doc["registry"]["types"]:
            ptype = pas.PredicateType(
                lemma=type_doc["lemma"],
                predicate_class=PredicateClass(type_doc["class"]),
                sense=type_doc["sense"],
                group_id=type_doc["group_id"],
                language=type_doc["language"],
                description=type_doc.get("description"),
            )
            if ptype.key in project.registry.types:
                raise MalformedInputError(f"duplicate predicate type {ptype.key}")
            project.registry.types[ptype.key] = ptype
        for ann_doc in doc["annotations"]:
            key = tuple(ann_doc["sentence"])
            ann = SentenceAnnotations(
                predicates=[
                    PredicateInstance(
                        instance_id=p["instance_id"],
                        sentence=key,
                        type_key=tuple(p["type"]),
                        span=frozenset(p["span"]),
                        realization_tags=frozenset(p["realization_tags"]),
                    )
                    for p in ann_doc["predicates"]
                ],
                arguments=[
                    ArgumentInstance(
                        instance_id=a["instance_id"],
                        parent=a["parent"],
                        role=a["role"],
                        span=frozenset(a["span"]),
                        antecedent_span=frozenset(a["antecedent_span"])
                        if a.get("antecedent_span") is not None
                        else None,
                    )
                    for a in ann_doc["arguments"]
                ],
            )
            if key in project.annotations:
                raise MalformedInputError(f"duplicate annotation entry for sentence {key}")
            project.annotations[key] = ann
        for alignment_doc in doc["alignments"]:
            pair_id = alignment_doc["pair_id"]
            if pair_id in project.alignments:
                raise MalformedInputError(f"duplicate alignment entry for pair {pair_id!r}")
            project.alignments[pair_id] = [
                TransemeAlignment(
                    alignment_id=r["alignment_id"],
                    pair_id=pair_id,
                    source=_ref_from_doc(r.get("source"), Side.SOURCE),
                    target=_ref_from_doc(r.get("target"), Side.TARGET),
                    tags=tuple(ShiftTag(t) for t in r["tags"]),
                    marker=SpecialMarker(r["marker"]) if r.get("marker") else None,
                    note=r.get("note"),
                )
                for r in alignment_doc["records"]
            ]
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, MalformedInputError):
            raise
        raise MalformedInputError(f"project document is malformed: {exc}") from exc
    return project


def dumps(project: Project) -> bytes:
    """Canonical serialization; equal projects produce identical bytes."""
    doc = project_to_doc(project)
    return (json.dumps(doc, ensure_ascii=False, indent=2, sort_keys=True) + "\n").encode("utf-8")


def save(project: Project, destination: str | Path | IO[bytes]) -> None:
    """Integrity-check, then write the canonical snapshot atomically."""
    problems = check_integrity(project)
    if problems:
        raise IntegrityError(problems)
    data = dumps(project)
    if hasattr(destination, "write"):
        destination.write(data)
        return
    path = Path(destination)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_bytes(data)
    os.replace(tmp, path)


def loads(data: bytes) -> Project:
    try:
        doc = json.loads(data.decode("utf-8"))
    except UnicodeDecodeError as exc:
        raise MalformedInputError("project file is not valid UTF-8", offset=exc.start) from exc
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"invalid JSON: {exc.msg}", line=exc.lineno) from exc
    if not isinstance(doc, dict):
        raise MalformedInputError("project file must hold a JSON object")
    return project_from_doc(doc)


def load(source: str | Path | IO[bytes]) -> Project:
    if hasattr(source, "read"):
        return loads(source.read())
    return loads(Path(source).read_bytes())


class ProjectStore:
    """Single-writer store: serialized transactional commits, concurrent reads."""

    def __init__(self, path: str | Path | None, project: Project | None = None):
        self._path = Path(path) if path is not None else None
        if project is None:
            if self._path is None:
                raise ValueError("need a path or an initial project")
            project = load(self._path)
        self._project = project
        self._lock = threading.Lock()

    @property
    def path(self) -> Path | None:
        return self._path

    @property
    def current(self) -> Project:
        return self._project

    def commit(
        self, edit: Callable[[Project], None], expected_revision: int | None = None
    ) -> Project:
        with self._lock:
            new_project = apply(self._project, edit, expected_revision)
            if self._path is not None:
                save(new_project, self._path)
            self._project = new_project
            return new_project
