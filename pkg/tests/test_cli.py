import subprocess
import sys

import pytest

from parashift import demo
from parashift.cli import main
from parashift.corpus import serialize_alignment, serialize_corpus
from parashift.project import dumps, load, save
from parashift.shifts import ShiftTag, Side, TransemeAlignment, TransemeKind, TransemeRef

from .conftest import DATA_DIR


@pytest.fixture
def corpus_files(tmp_path):
    project = demo.build_project()
    en, de = project.corpora
    src = tmp_path / "en.xml"
    tgt = tmp_path / "de.xml"
    links = tmp_path / "links.tsv"
    src.write_bytes(serialize_corpus(en))
    tgt.write_bytes(serialize_corpus(de))
    links.write_bytes(serialize_alignment(project.links))
    return src, tgt, links


def test_ingest(tmp_path, corpus_files, capsys):
    src, tgt, links = corpus_files
    out = tmp_path / "proj.fuse.json"
    code = main(["ingest", str(src), str(tgt), str(links), str(out)])
    assert code == 0
    assert capsys.readouterr().out == "documents\t2\nsentences\t8\nlinks\t4\npairs\t4\n"
    project = load(out)
    assert [p.pair_id for p in project.pairs] == ["pair1", "pair2", "pair3", "pair4"]
    assert project.pairs[0].direction == ("en", "de")


def test_ingest_empty_alignment(tmp_path, corpus_files, capsys):
    src, tgt, _ = corpus_files
    links = tmp_path / "empty.tsv"
    links.write_bytes(b"")
    out = tmp_path / "proj.fuse.json"
    assert main(["ingest", str(src), str(tgt), str(links), str(out)]) == 0
    assert "pairs\t0" in capsys.readouterr().out
    assert load(out).pairs == []


def test_ingest_malformed_xml(tmp_path, corpus_files, capsys):
    _, tgt, links = corpus_files
    bad = tmp_path / "bad.xml"
    bad.write_bytes(b"<corpus lang='en'><doc></corpus>")
    code = main(["ingest", str(bad), str(tgt), str(links), str(tmp_path / "o.json")])
    assert code == 1
    assert "error:" in capsys.readouterr().err


def test_extract_six_link_fixture(tmp_path, capsys):
    base = DATA_DIR / "extraction"
    out = tmp_path / "proj.fuse.json"
    assert (
        main(
            [
                "ingest",
                str(base / "src.xml"),
                str(base / "tgt.xml"),
                str(base / "links.tsv"),
                str(out),
            ]
        )
        == 0
    )
    capsys.readouterr()
    code = main(["extract", str(out), str(base / "whitelist.txt")])
    assert code == 0
    assert capsys.readouterr().out == (
        "emitted\t2\n"
        "skipped\t4\n"
        "skipped:not_one_to_one\t1\n"
        "skipped:source_has_lang_attr\t1\n"
        "skipped:target_lang_attr_missing_or_wrong\t1\n"
        "skipped:speaker_not_whitelisted\t1\n"
        "skipped:speaker_missing\t1\n"
    )
    project = load(out)
    assert [p.pair_id for p in project.pairs] == ["pair1", "pair2"]
    assert project.revision == 1


def test_extract_empty_whitelist_skips_speaker_bearing_links(tmp_path, capsys):
    base = DATA_DIR / "extraction"
    out = tmp_path / "proj.fuse.json"
    main(["ingest", str(base / "src.xml"), str(base / "tgt.xml"), str(base / "links.tsv"), str(out)])
    empty = tmp_path / "none.txt"
    empty.write_bytes(b"\n")
    capsys.readouterr()
    assert main(["extract", str(out), str(empty)]) == 0
    output = capsys.readouterr().out
    assert "emitted\t0" in output
    assert "skipped\t6" in output
    assert "skipped:speaker_not_whitelisted\t4" in output


def test_extract_missing_whitelist(tmp_path, corpus_files, capsys):
    src, tgt, links = corpus_files
    out = tmp_path / "proj.fuse.json"
    main(["ingest", str(src), str(tgt), str(links), str(out)])
    assert main(["extract", str(out), str(tmp_path / "nowhere.txt")]) == 1


def test_validate_clean_fixture(tmp_path, demo_project, capsys):
    path = tmp_path / "demo.fuse.json"
    save(demo_project, path)
    assert main(["validate", str(path)]) == 0
    assert capsys.readouterr().out == ""


def test_validate_reports_injected_breach(tmp_path, capsys):
    project = demo.build_project(skip_alignments=(1,))
    en_pred = project.annotations[("en", demo.DOC_ID, "4.2")].predicates[0]
    de_pred = project.annotations[("de", demo.DOC_ID, "4.2")].predicates[0]
    project.alignments.setdefault("pair1", []).append(
        TransemeAlignment(
            alignment_id="x99",
            pair_id="pair1",
            source=TransemeRef(Side.SOURCE, TransemeKind.PREDICATE, en_pred.instance_id),
            target=TransemeRef(Side.TARGET, TransemeKind.PREDICATE, de_pred.instance_id),
            tags=(ShiftTag.CATEGORY_CHANGE, ShiftTag.PASSIVISATION),
        )
    )
    path = tmp_path / "demo.fuse.json"
    path.write_bytes(dumps(project))
    capsys.readouterr()
    assert main(["validate", str(path)]) == 2
    lines = capsys.readouterr().out.strip().split("\n")
    assert len(lines) == 1
    pair_id, rule_id, message = lines[0].split("\t")
    assert (pair_id, rule_id) == ("pair1", "R1")


def test_validate_corrupted_file(tmp_path, capsys):
    path = tmp_path / "broken.fuse.json"
    path.write_bytes(b"{broken")
    assert main(["validate", str(path)]) == 1


def test_report_table_and_csv(tmp_path, demo_project, capsys):
    path = tmp_path / "demo.fuse.json"
    save(demo_project, path)
    csv_path = tmp_path / "out.csv"
    assert main(["report", str(path), "--group-by", "none", "--csv", str(csv_path)]) == 0
    out = capsys.readouterr().out
    lines = out.strip().split("\n")
    assert lines[0] == "group\ttag\tcount\tdenominator"
    assert "(all)\tdepassivisation\t1\t14" in lines
    assert len(lines) == 1 + 14
    assert csv_path.read_text().startswith("group,tag,count,denominator\n")


def test_report_bad_group_key(tmp_path, demo_project, capsys):
    path = tmp_path / "demo.fuse.json"
    save(demo_project, path)
    assert main(["report", str(path), "--group-by", "speaker"]) == 1


def test_serve_bad_bind(tmp_path, demo_project, capsys):
    path = tmp_path / "demo.fuse.json"
    save(demo_project, path)
    assert main(["serve", str(path), "--bind", "nonsense"]) == 1
    assert "HOST:PORT" in capsys.readouterr().err


def test_help_exits_zero():
    with pytest.raises(SystemExit) as exc:
        main(["--help"])
    assert exc.value.code == 0


def test_usage_error_exits_one(capsys):
    assert main(["report"]) == 1
    assert "error:" in capsys.readouterr().err


def test_console_script_entrypoint(tmp_path, demo_project):
    path = tmp_path / "demo.fuse.json"
    save(demo_project, path)
    result = subprocess.run(
        [sys.executable, "-m", "parashift.cli", "validate", str(path)],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0


def test_exit_code_contract(tmp_path, demo_project):
    # exit 2 if and only if at least one violation line was printed
    path = tmp_path / "demo.fuse.json"
    save(demo_project, path)
    result = subprocess.run(
        [sys.executable, "-m", "parashift.cli", "validate", str(path)],
        capture_output=True,
        text=True,
    )
    assert (result.returncode == 2) == bool(result.stdout.strip())
