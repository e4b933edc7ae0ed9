#!/usr/bin/env python3
"""Brute-force re-check of sentence-pair extraction, independent of the package.

Reads the same four inputs as `parashift extract` (source corpus XML, target
corpus XML, alignment links, speaker whitelist) with nothing but the standard
library, applies the four extraction conditions to every link in the dumbest
possible way, and prints one verdict per link as JSON. Used as the oracle for
the extraction acceptance test; deliberately imports nothing from parashift.

Usage: extraction_oracle.py SRC.xml TGT.xml LINKS.tsv WHITELIST.txt
"""

import json
import sys
import unicodedata
import xml.etree.ElementTree as ET


def read_sentences(path):
    """Map (doc id, sentence id) -> {'name': ..., 'language': ...}."""
    root = ET.parse(path).getroot()
    lang = root.get("lang").lower()
    table = {}
    for doc in root.findall("doc"):
        for s in doc.findall("s"):
            attr = s.get("language")
            table[(doc.get("id"), s.get("id"))] = {
                "name": s.get("name"),
                "language": attr.lower() if attr is not None else None,
            }
    return lang, table


def normalize(raw):
    folded = unicodedata.normalize("NFKD", raw).casefold()
    stripped = "".join(c for c in folded if not unicodedata.combining(c))
    return " ".join(stripped.split())


def read_links(path):
    links = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line:
                continue
            src, tgt = line.split("\t")
            src_doc, src_ids = src.split(":")
            tgt_doc, tgt_ids = tgt.split(":")
            links.append(
                (
                    [(src_doc, i) for i in src_ids.split(",")],
                    [(tgt_doc, i) for i in tgt_ids.split(",")],
                )
            )
    return links


def main(argv):
    src_path, tgt_path, links_path, whitelist_path = argv[1:5]
    src_lang, src_sentences = read_sentences(src_path)
    _, tgt_sentences = read_sentences(tgt_path)
    links = read_links(links_path)
    with open(whitelist_path, encoding="utf-8") as fh:
        whitelist = {normalize(line.strip()) for line in fh if line.strip()}

    verdicts = {"pairs": [], "skips": []}
    for index, (src_ids, tgt_ids) in enumerate(links):
        reasons = []
        if len(src_ids) != 1 or len(tgt_ids) != 1:
            reasons.append("not_one_to_one")
        else:
            src = src_sentences[src_ids[0]]
            tgt = tgt_sentences[tgt_ids[0]]
            if src["language"] is not None:
                reasons.append("source_has_lang_attr")
            if tgt["language"] != src_lang:
                reasons.append("target_lang_attr_missing_or_wrong")
            if src["name"] is None:
                reasons.append("speaker_missing")
            elif normalize(src["name"]) not in whitelist:
                reasons.append("speaker_not_whitelisted")
        if reasons:
            verdicts["skips"].append({"link": index, "reasons": reasons})
        else:
            verdicts["pairs"].append(
                {
                    "link": index,
                    "source": list(src_ids[0]),
                    "target": list(tgt_ids[0]),
                }
            )
    json.dump(verdicts, sys.stdout, indent=2, sort_keys=True)
    print()
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
