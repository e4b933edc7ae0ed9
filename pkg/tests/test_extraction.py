import json
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from parashift.corpus import parse_alignment, parse_corpus
from parashift.errors import DanglingRefError
from parashift.extraction import (
    SkipReason,
    SpeakerWhitelist,
    normalize_name,
    select_original_pairs,
)

from .conftest import DATA_DIR, SCRIPTS_DIR

FIXTURE_PATHS = {
    "src": DATA_DIR / "extraction" / "src.xml",
    "tgt": DATA_DIR / "extraction" / "tgt.xml",
    "links": DATA_DIR / "extraction" / "links.tsv",
    "whitelist": DATA_DIR / "extraction" / "whitelist.txt",
}


@pytest.mark.parametrize(
    "raw,expected",
    [
        ("  SMITH,  John ", "smith, john"),
        ("Müller", "muller"),
        ("", ""),
        ("Nolan,\tMary", "nolan, mary"),
        ("ØRSTED", "ørsted"),  # stroke is not a combining mark; only diacritics drop
    ],
)
def test_normalize_name(raw, expected):
    assert normalize_name(raw) == expected


def _load_fixture(files):
    src = parse_corpus(files["src"].read_bytes())
    tgt = parse_corpus(files["tgt"].read_bytes())
    links = parse_alignment(files["links"].read_bytes())
    whitelist = SpeakerWhitelist.load(files["whitelist"].read_bytes())
    return src, tgt, links, whitelist


def test_six_link_fixture_against_oracle_script(extraction_files):
    """The brute-force re-check script and the library must agree link by link."""
    oracle_out = subprocess.run(
        [
            sys.executable,
            str(SCRIPTS_DIR / "extraction_oracle.py"),
            *(str(extraction_files[k]) for k in ("src", "tgt", "links", "whitelist")),
        ],
        check=True,
        capture_output=True,
        text=True,
    )
    oracle = json.loads(oracle_out.stdout)

    src, tgt, links, whitelist = _load_fixture(extraction_files)
    pairs, skipped = select_original_pairs(src, tgt, links, whitelist)

    got = {
        "pairs": [
            {
                "link": int(p.pair_id.removeprefix("pair")) - 1,
                "source": list(p.source[1:]),
                "target": list(p.target[1:]),
            }
            for p in pairs
        ],
        "skips": [
            {"link": s.link_index, "reasons": [r.value for r in s.reasons]} for s in skipped
        ],
    }
    assert got == oracle
    assert len(pairs) == 2 and len(skipped) == 4
    covered = {reason for s in skipped for reason in s.reasons}
    assert covered == set(SkipReason)


def test_six_link_fixture_details(extraction_files):
    src, tgt, links, whitelist = _load_fixture(extraction_files)
    pairs, skipped = select_original_pairs(src, tgt, links, whitelist, genre="debate")
    assert [p.pair_id for p in pairs] == ["pair1", "pair2"]
    assert pairs[0].direction == ("en", "de")
    assert pairs[0].speaker_name == "Smith, John"
    assert all(p.genre == "debate" for p in pairs)
    by_index = {s.link_index: s.reasons for s in skipped}
    assert by_index[2] == (SkipReason.NOT_ONE_TO_ONE,)
    assert by_index[3] == (SkipReason.SOURCE_HAS_LANG_ATTR,)
    assert by_index[4] == (
        SkipReason.TARGET_LANG_ATTR_MISSING_OR_WRONG,
        SkipReason.SPEAKER_MISSING,
    )
    assert by_index[5] == (SkipReason.SPEAKER_NOT_WHITELISTED,)


def test_empty_links():
    src = parse_corpus(b'<corpus lang="en"></corpus>')
    tgt = parse_corpus(b'<corpus lang="de"></corpus>')
    pairs, skipped = select_original_pairs(src, tgt, [], SpeakerWhitelist(frozenset()))
    assert pairs == [] and skipped == []


def test_source_with_lang_attr_is_skipped(extraction_files):
    src, tgt, links, whitelist = _load_fixture(extraction_files)
    fr_link = [l for l in links if l.source_ids == (("d1", "2.1"),)]
    pairs, skipped = select_original_pairs(src, tgt, fr_link, whitelist)
    assert pairs == []
    assert skipped[0].reasons == (SkipReason.SOURCE_HAS_LANG_ATTR,)


def test_dangling_link_raises(extraction_files):
    src, tgt, _, whitelist = _load_fixture(extraction_files)
    links = parse_alignment(b"d1:9.9\td1:1.1\n")
    with pytest.raises(DanglingRefError) as exc:
        select_original_pairs(src, tgt, links, whitelist)
    assert "9.9" in str(exc.value)


@given(data=st.data())
@settings(max_examples=50)
def test_partition_and_monotonicity(data):
    src, tgt, links, _ = _load_fixture(FIXTURE_PATHS)
    all_names = ["Smith, John", "Nolan, Mary", "Braun, Hans"]
    chosen = data.draw(st.sets(st.sampled_from(all_names)))
    small = SpeakerWhitelist.from_names(chosen)
    big = SpeakerWhitelist.from_names(set(all_names) | chosen)
    pairs_small, skipped_small = select_original_pairs(src, tgt, links, small)
    pairs_big, _ = select_original_pairs(src, tgt, links, big)
    # partition
    assert len(pairs_small) + len(skipped_small) == len(links)
    # monotonicity: enlarging the whitelist never removes a pair
    assert {p.pair_id for p in pairs_small} <= {p.pair_id for p in pairs_big}
    # order preservation
    indices = [int(p.pair_id.removeprefix("pair")) for p in pairs_small]
    assert indices == sorted(indices)
