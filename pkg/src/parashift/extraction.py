"""Selection of direction-verified sentence pairs from a bilingual corpus pair.

A pair qualifies when its link is one-to-one, the source sentence carries no
original-language attribute, the aligned target sentence is explicitly marked
with the source corpus language, and the source speaker is on the supplied
native-speaker whitelist. Every non-qualifying link is reported with the full
set of reasons it failed.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from enum import Enum
from typing import IO, Iterable

from .corpus import AlignmentLink, Corpus
from .errors import DanglingRefError


class SkipReason(str, Enum):
    NOT_ONE_TO_ONE = "not_one_to_one"
    SOURCE_HAS_LANG_ATTR = "source_has_lang_attr"
    TARGET_LANG_ATTR_MISSING_OR_WRONG = "target_lang_attr_missing_or_wrong"
    SPEAKER_NOT_WHITELISTED = "speaker_not_whitelisted"
    SPEAKER_MISSING = "speaker_missing"


@dataclass(frozen=True)
class SentencePair:
    """A source/target sentence pair with verified translation direction."""

    pair_id: str
    source: tuple[str, str, str]  # (corpus language, document id, sentence id)
    target: tuple[str, str, str]
    direction: tuple[str, str]
    speaker_name: str | None = None
    genre: str | None = None

    def __post_init__(self):
        if self.direction[0] != self.source[0]:
            raise ValueError(
                f"direction {self.direction} does not start with source language {self.source[0]!r}"
            )


@dataclass(frozen=True)
class SkipReport:
    link_index: int
    link: AlignmentLink
    reasons: tuple[SkipReason, ...]


@dataclass(frozen=True)
class SpeakerWhitelist:
    names: frozenset[str]

    @classmethod
    def from_names(cls, raw_names: Iterable[str]) -> "SpeakerWhitelist":
        normalized = (normalize_name(name) for name in raw_names)
        return cls(names=frozenset(n for n in normalized if n))

    @classmethod
    def load(cls, stream: IO[bytes] | bytes) -> "SpeakerWhitelist":
        data = stream if isinstance(stream, (bytes, bytearray)) else stream.read()
        return cls.from_names(data.decode("utf-8").split("\n"))

    def __contains__(self, raw_name: str) -> bool:
        return normalize_name(raw_name) in self.names


def normalize_name(raw: str) -> str:
    """Case-fold, strip diacritics, and collapse whitespace runs to one space."""
    folded = unicodedata.normalize("NFKD", raw).casefold()
    stripped = "".join(c for c in folded if not unicodedata.combining(c))
    return " ".join(stripped.split())


def pair_id_for_link(index: int) -> str:
    return f"pair{index + 1}"


def select_original_pairs(
    source_corpus: Corpus,
    target_corpus: Corpus,
    links: list[AlignmentLink],
    whitelist: SpeakerWhitelist,
    genre: str | None = None,
) -> tuple[list[SentencePair], list[SkipReport]]:
    """Partition links into direction-verified pairs and per-reason skip reports.

    Output order follows link order; |pairs| + |skipped| == |links|.
    """
    pairs: list[SentencePair] = []
    skipped: list[SkipReport] = []
    for index, link in enumerate(links):
        if not link.one_to_one:
            skipped.append(SkipReport(index, link, (SkipReason.NOT_ONE_TO_ONE,)))
            continue
        src_doc, src_id = link.source_ids[0]
        tgt_doc, tgt_id = link.target_ids[0]
        source = source_corpus.sentence(src_doc, src_id)
        if source is None:
            raise DanglingRefError(
                f"link {index} names unknown source sentence {src_doc}:{src_id}",
                refs=(f"{src_doc}:{src_id}",),
            )
        target = target_corpus.sentence(tgt_doc, tgt_id)
        if target is None:
            raise DanglingRefError(
                f"link {index} names unknown target sentence {tgt_doc}:{tgt_id}",
                refs=(f"{tgt_doc}:{tgt_id}",),
            )
        reasons = []
        if source.language_attr is not None:
            reasons.append(SkipReason.SOURCE_HAS_LANG_ATTR)
        if target.language_attr != source_corpus.language:
            reasons.append(SkipReason.TARGET_LANG_ATTR_MISSING_OR_WRONG)
        if source.speaker_name is None:
            reasons.append(SkipReason.SPEAKER_MISSING)
        elif source.speaker_name not in whitelist:
            reasons.append(SkipReason.SPEAKER_NOT_WHITELISTED)
        if reasons:
            skipped.append(SkipReport(index, link, tuple(reasons)))
        else:
            pairs.append(
                SentencePair(
                    pair_id=pair_id_for_link(index),
                    source=(source_corpus.language, src_doc, src_id),
                    target=(target_corpus.language, tgt_doc, tgt_id),
                    direction=(source_corpus.language, target_corpus.language),
                    speaker_name=source.speaker_name,
                    genre=genre,
                )
            )
    return pairs, skipped


def pairs_from_links(
    source_corpus: Corpus,
    target_corpus: Corpus,
    links: list[AlignmentLink],
    genre: str | None = None,
) -> list[SentencePair]:
    """Unverified pairs from every one-to-one link (ingest-time default)."""
    pairs = []
    for index, link in enumerate(links):
        if not link.one_to_one:
            continue
        src_doc, src_id = link.source_ids[0]
        tgt_doc, tgt_id = link.target_ids[0]
        source = source_corpus.sentence(src_doc, src_id)
        target = target_corpus.sentence(tgt_doc, tgt_id)
        if source is None or target is None:
            missing = f"{src_doc}:{src_id}" if source is None else f"{tgt_doc}:{tgt_id}"
            raise DanglingRefError(f"link {index} names unknown sentence {missing}", (missing,))
        pairs.append(
            SentencePair(
                pair_id=pair_id_for_link(index),
                source=(source_corpus.language, src_doc, src_id),
                target=(target_corpus.language, tgt_doc, tgt_id),
                direction=(source_corpus.language, target_corpus.language),
                speaker_name=source.speaker_name,
                genre=genre,
            )
        )
    return pairs
