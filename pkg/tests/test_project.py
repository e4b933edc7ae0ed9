import json
from pathlib import Path

import pytest
from hypothesis import given, settings

from parashift import demo
from parashift.errors import (
    AlignmentViolationError,
    IntegrityError,
    MalformedInputError,
    StaleRevisionError,
    UnsupportedVersionError,
)
from parashift.pas import PredicateInstance
from parashift.project import (
    Project,
    ProjectStore,
    apply,
    check_integrity,
    dumps,
    load,
    loads,
    save,
)
from parashift.shifts import Side, TransemeKind, TransemeRef

from .strategies import projects

DEMO_MANIFEST = demo.MANIFEST


def test_empty_project_minimal_file(tmp_path):
    path = tmp_path / "empty.fuse.json"
    save(Project(), path)
    doc = json.loads(path.read_text())
    assert doc["schema_version"] == 1
    assert doc["revision"] == 0
    assert doc["pairs"] == [] and doc["corpora"] == []


def test_save_load_round_trip_bytes(tmp_path, demo_project):
    path = tmp_path / "demo.fuse.json"
    save(demo_project, path)
    first = path.read_bytes()
    reloaded = load(path)
    save(reloaded, path)
    assert path.read_bytes() == first
    assert reloaded == demo_project


def test_load_matches_manifest(tmp_path, demo_project):
    path = tmp_path / "demo.fuse.json"
    save(demo_project, path)
    project = load(path)
    assert len(project.pairs) == DEMO_MANIFEST["pairs"]
    predicates = sum(len(a.predicates) for a in project.annotations.values())
    arguments = sum(len(a.arguments) for a in project.annotations.values())
    records = sum(len(r) for r in project.alignments.values())
    assert predicates == DEMO_MANIFEST["predicates"]
    assert arguments == DEMO_MANIFEST["arguments"]
    assert records == DEMO_MANIFEST["alignment_records"]


def test_dangling_predicate_ref_fails_integrity(demo_project):
    key = ("en", demo.DOC_ID, "4.2")
    demo_project.annotations[key].predicates.append(
        PredicateInstance(
            instance_id="p999",
            sentence=key,
            type_key=("en", "GHOST", 1),
            span=frozenset({0}),
        )
    )
    problems = check_integrity(demo_project)
    assert any("p999" in p and "GHOST" in p for p in problems)
    with pytest.raises(IntegrityError) as exc:
        save(demo_project, "/dev/null")
    assert "p999" in str(exc.value)


def test_truncated_file(tmp_path, demo_project):
    path = tmp_path / "x.fuse.json"
    save(demo_project, path)
    path.write_bytes(path.read_bytes()[:200])
    with pytest.raises(MalformedInputError):
        load(path)


def test_unsupported_schema_version():
    with pytest.raises(UnsupportedVersionError) as exc:
        loads(b'{"schema_version": 999}')
    assert exc.value.found == 999 and exc.value.expected == 1
    assert "999" in str(exc.value) and "1" in str(exc.value)


def test_apply_bumps_revision(demo_project):
    demo_project.revision = 5
    edited = apply(demo_project, lambda p: p.config.genres.append("debate"))
    assert edited.revision == 6
    assert demo_project.revision == 5
    assert demo_project.config.genres == []


def test_apply_violating_edit_leaves_project_unchanged(demo_project):
    before = dumps(demo_project)

    def bad_edit(p):
        source = TransemeRef(Side.SOURCE, TransemeKind.ARGUMENT, "a1")
        target = TransemeRef(Side.TARGET, TransemeKind.ARGUMENT, "a3")
        p.remove_alignment("pair1", "x2")
        p.align("pair1", source=source, target=target, tags=["depronominalisation", "explicitation"])

    with pytest.raises(AlignmentViolationError) as exc:
        apply(demo_project, bad_edit)
    assert [v.rule_id for v in exc.value.violations] == ["R6"]
    assert dumps(demo_project) == before


def test_apply_stale_revision(demo_project):
    demo_project.revision = 5
    with pytest.raises(StaleRevisionError):
        apply(demo_project, lambda p: None, expected_revision=4)


def test_store_failing_edit_keeps_bytes(tmp_path, demo_project):
    path = tmp_path / "store.fuse.json"
    save(demo_project, path)
    store = ProjectStore(path)
    before = path.read_bytes()
    with pytest.raises(StaleRevisionError):
        store.commit(lambda p: p.config.genres.append("x"), expected_revision=99)
    assert path.read_bytes() == before
    store.commit(lambda p: p.config.genres.append("x"))
    assert path.read_bytes() != before
    assert load(path).revision == demo_project.revision + 1


def test_canonical_bytes_ignore_insertion_order():
    a = Project()
    a.register_predicate("en", "refer", "v")
    a.register_predicate("en", "hold", "v")
    b = Project()
    b.register_predicate("en", "hold", "v", group_id="g2")
    b.register_predicate("en", "refer", "v", group_id="g1")
    # same content, different registration order
    assert {k[1] for k in a.registry.types} == {k[1] for k in b.registry.types}
    assert dumps(a) == dumps(b)
    assert a == b


@given(projects())
@settings(max_examples=50, deadline=None)
def test_round_trip_random_projects(project):
    data = dumps(project)
    again = loads(data)
    assert again == project
    assert dumps(again) == data


def test_integrity_collects_all_problems(demo_project):
    key = ("en", demo.DOC_ID, "4.2")
    demo_project.annotations[key].predicates.append(
        PredicateInstance("p77", key, ("en", "GHOST", 1), frozenset({0}))
    )
    demo_project.annotations[key].predicates.append(
        PredicateInstance("p78", key, ("en", "GHOST", 1), frozenset({999}))
    )
    problems = check_integrity(demo_project)
    assert len([p for p in problems if "p77" in p]) >= 1
    assert len([p for p in problems if "p78" in p]) >= 2  # unknown type and bad span


def test_saved_file_matches_formal_schema(tmp_path, demo_project):
    jsonschema = pytest.importorskip("jsonschema")
    schema = json.loads(
        (Path(__file__).parent.parent / "docs" / "project.schema.v1.json").read_text()
    )
    path = tmp_path / "demo.fuse.json"
    save(demo_project, path)
    jsonschema.validate(json.loads(path.read_text()), schema)
