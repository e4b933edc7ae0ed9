import dataclasses

import pytest
from hypothesis import given, settings

from parashift import demo
from parashift.extraction import SentencePair
from parashift.project import Project
from parashift.reporting import (
    ALL_GROUP,
    UNSET,
    VOCABULARY,
    GroupBy,
    export_csv,
    render_csv,
    shift_counts,
)

from .strategies import projects

EXPECTED_DEMO_COUNTS = {
    "depassivisation": 1,
    "addition": 1,
    "deletion": 1,
    "depronominalisation": 1,
    "semantic_modification": 1,
    "generalisation": 1,
}


def test_vocabulary_is_dense_and_sorted():
    assert len(VOCABULARY) == 14
    assert list(VOCABULARY) == sorted(VOCABULARY)
    assert "dangling_modal" in VOCABULARY and "non_pas" in VOCABULARY


def test_demo_counts(demo_project):
    report = shift_counts(demo_project)
    counts = {tag: count for _, tag, count in report.rows}
    for tag in VOCABULARY:
        assert counts[tag] == EXPECTED_DEMO_COUNTS.get(tag, 0)
    assert report.denominator == {ALL_GROUP: 14}
    assert report.totals == {ALL_GROUP: 6}


def test_empty_project_dense_zero_table():
    report = shift_counts(Project())
    assert len(report.rows) == 14
    assert all(count == 0 for _, _, count in report.rows)
    assert report.denominator == {ALL_GROUP: 0}


def _genre_duplicated_demo():
    """The demo annotations cloned under two genres over the same sentences."""
    project = demo.build_project()
    project.pairs = [
        SentencePair(
            pair_id=p.pair_id,
            source=p.source,
            target=p.target,
            direction=p.direction,
            speaker_name=p.speaker_name,
            genre="debate",
        )
        for p in project.pairs
    ]
    clones = []
    for pair in list(project.pairs):
        clone_id = pair.pair_id + "-lit"
        clones.append(
            SentencePair(
                pair_id=clone_id,
                source=pair.source,
                target=pair.target,
                direction=pair.direction,
                speaker_name=pair.speaker_name,
                genre="literary",
            )
        )
        project.alignments[clone_id] = [
            dataclasses.replace(
                record, alignment_id=record.alignment_id + "-lit", pair_id=clone_id
            )
            for record in project.alignments[pair.pair_id]
        ]
    project.pairs.extend(clones)
    return project


def test_per_genre_tables_equal_single_table(demo_project):
    single = shift_counts(demo_project)
    doubled = shift_counts(_genre_duplicated_demo(), GroupBy.GENRE)
    single_table = {tag: count for _, tag, count in single.rows}
    for genre in ("debate", "literary"):
        table = {tag: count for g, tag, count in doubled.rows if g == genre}
        assert table == single_table
        assert doubled.denominator[genre] == single.denominator[ALL_GROUP]


def test_direction_grouping(demo_project):
    report = shift_counts(demo_project, "direction")
    assert set(report.denominator) == {"en->de"}
    assert report.denominator["en->de"] == 14


def test_missing_genre_groups_under_unset(demo_project):
    report = shift_counts(demo_project, GroupBy.GENRE)
    assert set(report.denominator) == {UNSET}


def test_transeme_kind_grouping(demo_project):
    report = shift_counts(demo_project, GroupBy.TRANSEME_KIND)
    # 4 predicate records (one per pair), 10 argument records, no mixed ones
    assert report.denominator == {"predicate": 4, "argument": 10}
    counts = {(g, t): c for g, t, c in report.rows}
    assert counts[("predicate", "depassivisation")] == 1
    assert counts[("argument", "addition")] == 1
    assert counts[("argument", "depassivisation")] == 0


def test_csv_zero_report_shape():
    text = render_csv(shift_counts(Project()))
    lines = text.strip().split("\n")
    assert lines[0] == "group,tag,count,denominator"
    assert len(lines) == 1 + 14
    assert lines[1] == '"(all)",addition,0,0'


def test_csv_demo_fixture_row(tmp_path):
    project = demo.build_project(examples=(1, 2))
    report = shift_counts(project)
    out = tmp_path / "report.csv"
    export_csv(report, out)
    lines = out.read_text().split("\n")
    assert '"(all)",depassivisation,1,7' in lines


def test_csv_quotes_group_keys_with_commas(demo_project):
    demo_project.pairs = [
        SentencePair(
            pair_id=p.pair_id,
            source=p.source,
            target=p.target,
            direction=p.direction,
            speaker_name=p.speaker_name,
            genre='debate, "formal"',
        )
        for p in demo_project.pairs
    ]
    text = render_csv(shift_counts(demo_project, GroupBy.GENRE))
    assert '"debate, ""formal""",addition,1,14' in text.split("\n")


def test_bad_group_key_raises():
    with pytest.raises(ValueError):
        shift_counts(Project(), "speaker")


@given(projects())
@settings(max_examples=40, deadline=None)
def test_grouped_counts_sum_to_ungrouped(project):
    ungrouped = shift_counts(project)
    base = {tag: count for _, tag, count in ungrouped.rows}
    for group_by in (GroupBy.DIRECTION, GroupBy.GENRE, GroupBy.TRANSEME_KIND):
        report = shift_counts(project, group_by)
        summed = dict.fromkeys(VOCABULARY, 0)
        for _, tag, count in report.rows:
            summed[tag] += count
        assert summed == base
        assert sum(report.denominator.values()) == ungrouped.denominator[ALL_GROUP]


@given(projects())
@settings(max_examples=40, deadline=None)
def test_two_tag_cap_reflected(project):
    for group_by in GroupBy:
        report = shift_counts(project, group_by)
        per_group = {}
        for group, _, count in report.rows:
            per_group[group] = per_group.get(group, 0) + count
        for group, total in per_group.items():
            assert total <= 2 * report.denominator[group]
