"""Batch command-line entry points.

Exit codes: 0 success, 1 usage or IO error, 2 when validation violations
were reported. Data goes to stdout as stable tab-separated lines;
diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import project as project_store
from . import reporting
from .corpus import CorpusFormat, parse_alignment, parse_corpus
from .errors import ParashiftError
from .extraction import SkipReason, SpeakerWhitelist, select_original_pairs
from .project import Project, check_integrity

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VIOLATIONS = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="parashift", description="translation-shift annotation toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    ingest = sub.add_parser("ingest", help="parse corpora and links into a fresh project")
    ingest.add_argument("source_corpus", type=Path)
    ingest.add_argument("target_corpus", type=Path)
    ingest.add_argument("alignment", type=Path)
    ingest.add_argument("out_project", type=Path)
    ingest.add_argument("--format", choices=[f.value for f in CorpusFormat], default="xml")
    ingest.add_argument("--genre", default=None)

    extract = sub.add_parser(
        "extract", help="keep only direction-verified pairs from whitelisted speakers"
    )
    extract.add_argument("project", type=Path)
    extract.add_argument("whitelist", type=Path)
    extract.add_argument("--genre", default=None)

    validate = sub.add_parser("validate", help="re-check every alignment record")
    validate.add_argument("project", type=Path)

    report = sub.add_parser("report", help="shift-frequency table")
    report.add_argument("project", type=Path)
    report.add_argument(
        "--group-by", choices=[g.value for g in reporting.GroupBy], default="none"
    )
    report.add_argument("--csv", type=Path, default=None)

    serve = sub.add_parser("serve", help="serve the annotation API (and optional UI)")
    serve.add_argument("project", type=Path)
    serve.add_argument("--bind", default="127.0.0.1:8000")
    serve.add_argument("--static", type=Path, default=None, help="directory of UI assets")

    return parser


def cmd_ingest(args) -> int:
    fmt = CorpusFormat(args.format)
    source = parse_corpus(args.source_corpus.read_bytes(), fmt)
    target = parse_corpus(args.target_corpus.read_bytes(), fmt)
    links = parse_alignment(args.alignment.read_bytes())
    from .extraction import pairs_from_links

    project = Project()
    project.add_corpus(source)
    project.add_corpus(target)
    project.links = links
    project.pairs = pairs_from_links(source, target, links, genre=args.genre)
    if args.genre and args.genre not in project.config.genres:
        project.config.genres.append(args.genre)
    project_store.save(project, args.out_project)
    print(f"documents\t{sum(len(c.documents) for c in project.corpora)}")
    print(f"sentences\t{sum(len(d.sentences) for c in project.corpora for d in c.documents)}")
    print(f"links\t{len(links)}")
    print(f"pairs\t{len(project.pairs)}")
    return EXIT_OK


def cmd_extract(args) -> int:
    project = project_store.load(args.project)
    whitelist = SpeakerWhitelist.load(args.whitelist.read_bytes())
    if len(project.corpora) != 2:
        print("project does not hold two corpora", file=sys.stderr)
        return EXIT_ERROR
    pairs, skipped = select_original_pairs(
        project.corpora[0], project.corpora[1], project.links, whitelist, genre=args.genre
    )
    edited = project_store.apply(project, lambda p: setattr(p, "pairs", list(pairs)))
    project_store.save(edited, args.project)
    print(f"emitted\t{len(pairs)}")
    print(f"skipped\t{len(skipped)}")
    tallies = {reason: 0 for reason in SkipReason}
    for report in skipped:
        for reason in report.reasons:
            tallies[reason] += 1
    for reason in SkipReason:
        print(f"skipped:{reason.value}\t{tallies[reason]}")
    return EXIT_OK


def cmd_validate(args) -> int:
    project = project_store.load(args.project)
    problems = check_integrity(project)
    if problems:
        for problem in problems:
            print(problem, file=sys.stderr)
        return EXIT_ERROR
    violations = project.validate_all()
    for pair_id, violation in violations:
        print(f"{pair_id}\t{violation.rule_id}\t{violation.message}")
    return EXIT_VIOLATIONS if violations else EXIT_OK


def cmd_report(args) -> int:
    project = project_store.load(args.project)
    report = reporting.shift_counts(project, reporting.GroupBy(args.group_by))
    sys.stdout.write(reporting.render_table(report))
    if args.csv is not None:
        reporting.export_csv(report, args.csv)
    return EXIT_OK


def cmd_serve(args) -> int:
    host, _, port_text = args.bind.rpartition(":")
    if not host or not port_text.isdigit():
        print(f"--bind {args.bind!r} is not HOST:PORT", file=sys.stderr)
        return EXIT_ERROR
    if args.static is not None and not args.static.is_dir():
        print(f"--static {args.static} is not a directory", file=sys.stderr)
        return EXIT_ERROR
    from .project import ProjectStore
    from .service import create_app

    store = ProjectStore(args.project)
    app = create_app(store, static_dir=args.static)
    import uvicorn

    uvicorn.run(app, host=host, port=int(port_text), log_level="warning")
    return EXIT_OK


_COMMANDS = {
    "ingest": cmd_ingest,
    "extract": cmd_extract,
    "validate": cmd_validate,
    "report": cmd_report,
    "serve": cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    try:
        return _COMMANDS[args.command](args)
    except ParashiftError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
