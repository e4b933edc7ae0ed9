"""Shift-frequency statistics over a project.

Counts are per alignment record (each tag occurrence counts once per record;
markers are tallied in the same table), reported as a dense grid over the
full 14-entry vocabulary so zero counts are visible. The denominator column
carries the number of alignment records per group, making cross-corpus
comparison transparent.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import IO

from .project import Project
from .shifts import ShiftTag, SpecialMarker, TransemeKind

UNSET = "(unset)"
ALL_GROUP = "(all)"

VOCABULARY: tuple[str, ...] = tuple(
    sorted([t.value for t in ShiftTag] + [m.value for m in SpecialMarker])
)


class GroupBy(str, Enum):
    NONE = "none"
    DIRECTION = "direction"
    GENRE = "genre"
    TRANSEME_KIND = "transeme_kind"


@dataclass(frozen=True)
class ShiftReport:
    group_by: GroupBy
    rows: tuple[tuple[str, str, int], ...]  # (group key, tag or marker, count)
    totals: dict[str, int]  # per group: total tag+marker occurrences
    denominator: dict[str, int]  # per group: alignment-record count


def _record_kind_key(record, project: Project) -> str:
    kinds = {ref.kind for ref in (record.source, record.target) if ref is not None}
    if kinds == {TransemeKind.PREDICATE}:
        return "predicate"
    if kinds == {TransemeKind.ARGUMENT}:
        return "argument"
    return "mixed"


def shift_counts(project: Project, group_by: GroupBy | str = GroupBy.NONE) -> ShiftReport:
    """Dense tag/marker counts, optionally grouped by pair metadata."""
    group_by = GroupBy(group_by)
    pair_index = {pair.pair_id: pair for pair in project.pairs}
    counts: dict[str, dict[str, int]] = {}
    denominator: dict[str, int] = {}

    def group_key(record, pair) -> str:
        if group_by is GroupBy.NONE:
            return ALL_GROUP
        if group_by is GroupBy.DIRECTION:
            return "->".join(pair.direction) if pair else UNSET
        if group_by is GroupBy.GENRE:
            return pair.genre if pair and pair.genre is not None else UNSET
        return _record_kind_key(record, project)

    if group_by is GroupBy.NONE:
        counts[ALL_GROUP] = dict.fromkeys(VOCABULARY, 0)
        denominator[ALL_GROUP] = 0

    for pair_id, records in project.alignments.items():
        pair = pair_index.get(pair_id)
        for record in records:
            key = group_key(record, pair)
            table = counts.setdefault(key, dict.fromkeys(VOCABULARY, 0))
            denominator.setdefault(key, 0)
            denominator[key] += 1
            for tag in record.tags:
                table[tag.value] += 1
            if record.marker is not None:
                table[record.marker.value] += 1

    rows = tuple(
        (group, name, counts[group][name])
        for group in sorted(counts)
        for name in VOCABULARY
    )
    totals = {group: sum(table.values()) for group, table in counts.items()}
    return ShiftReport(group_by=group_by, rows=rows, totals=totals, denominator=denominator)


def _csv_quote(value: str) -> str:
    return '"' + value.replace('"', '""') + '"'


def _csv_plain(value: str) -> str:
    if any(c in value for c in ',"\r\n'):
        return _csv_quote(value)
    return value


def render_csv(report: ShiftReport) -> str:
    """RFC-4180 table: header ``group,tag,count,denominator``, group always
    quoted, rows sorted by (group, tag)."""
    lines = ["group,tag,count,denominator"]
    for group, tag, count in report.rows:
        lines.append(
            f"{_csv_quote(group)},{_csv_plain(tag)},{count},{report.denominator.get(group, 0)}"
        )
    return "\n".join(lines) + "\n"


def export_csv(report: ShiftReport, destination: str | Path | IO[str]) -> None:
    text = render_csv(report)
    if hasattr(destination, "write"):
        destination.write(text)
        return
    Path(destination).write_text(text, encoding="utf-8", newline="")


def render_table(report: ShiftReport) -> str:
    """Tab-separated rendering for stdout; same row order as the CSV."""
    out = io.StringIO()
    out.write("group\ttag\tcount\tdenominator\n")
    for group, tag, count in report.rows:
        out.write(f"{group}\t{tag}\t{count}\t{report.denominator.get(group, 0)}\n")
    return out.getvalue()
