#!/usr/bin/env python3
"""Write the demonstration corpora, alignment file, whitelist, and annotated
project into a directory (default ./demo-data), ready for the CLI and the UI.

Usage: make_demo_project.py [OUT_DIR] [--open-pair2]

With --open-pair2 the voice-change pair keeps its predicate-argument
annotations but is left unaligned, which is the natural starting point for
trying the alignment workbench.
"""

import argparse
from pathlib import Path

from parashift import demo
from parashift.corpus import serialize_alignment, serialize_corpus
from parashift.project import save


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("out_dir", nargs="?", type=Path, default=Path("demo-data"))
    parser.add_argument("--open-pair2", action="store_true")
    args = parser.parse_args()

    out = args.out_dir
    out.mkdir(parents=True, exist_ok=True)
    project = demo.build_project(skip_alignments=(2,) if args.open_pair2 else ())
    en, de = project.corpora
    (out / "en.xml").write_bytes(serialize_corpus(en))
    (out / "de.xml").write_bytes(serialize_corpus(de))
    (out / "links.tsv").write_bytes(serialize_alignment(project.links))
    (out / "whitelist.txt").write_text(demo.SPEAKER + "\n", encoding="utf-8")
    save(project, out / "demo.fuse.json")
    print(f"wrote {out}/en.xml, de.xml, links.tsv, whitelist.txt, demo.fuse.json")
    print(f"try: parashift serve {out}/demo.fuse.json --bind 127.0.0.1:8000")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
