"""Command line front end.

Subcommands: validate, check, enum, generate, verify, conjecture,
replay.  Exit codes: 0 success (for verify: no theorem-status failures
and no error rows; claim failures are findings, not errors), 1 usage or
format problem, 2 verification failures per the rule above or, for
conjecture and replay, any failing or non-reproducing row.

Potency selections are written `--m 2` or `--m 1..3`; subsets on the
command line are comma-separated element indices.  All result output is
deterministic for fixed inputs and flags; the only timestamp lives in
the report header.
"""

from __future__ import annotations

import argparse
import hashlib
import os
import sys
import time
from typing import Optional, Sequence

from . import __version__
from .conjecture import check_conjecture, format_conjecture, parse_conjecture
from .corpus import parse_corpus, write_corpus
from .enumeration import enumerate_ideals
from .errors import OsgkitError
from .generation import GENERATION_CAP, GenerationSpec, generate_corpus
from .ideals import IdealKind, is_ideal
from .report import (
    make_header,
    read_report,
    render_figures,
    summary_table,
    write_report,
)
from .structures import OrderedSemigroup
from .verifier import THEOREM_IDS, resolve_check_ids, run_suite, validate_witness

_KIND_CHOICES = tuple(k.value for k in IdealKind)


def _potencies(text: str) -> list[int]:
    try:
        if ".." in text:
            lo_s, _, hi_s = text.partition("..")
            lo, hi = int(lo_s), int(hi_s)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad potency selection {text!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty potency range {text!r}")
    return list(range(lo, hi + 1))


def _subset_arg(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad subset {text!r}")


def _read_corpus_file(path: str) -> tuple[list[OrderedSemigroup], str]:
    with open(path, "rb") as fh:
        blob = fh.read()
    sha = hashlib.sha256(blob).hexdigest()
    return parse_corpus(blob.decode("utf-8")), sha


def _pick_structure(
    corpus: list[OrderedSemigroup], name: Optional[str], path: str
) -> OrderedSemigroup:
    if name is None:
        if len(corpus) == 1:
            return corpus[0]
        raise OsgkitError(
            f"{path} holds {len(corpus)} records; select one with --name"
        )
    for s in corpus:
        if s.name == name:
            return s
    raise OsgkitError(f"no record named {name!r} in {path}")


def _utcnow() -> str:
    return time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())


# ------------------------------------------------------------- subcommands


def _cmd_validate(args: argparse.Namespace) -> int:
    corpus, _ = _read_corpus_file(args.file)
    for s in corpus:
        print(f"{s.name}: valid (n={s.size})")
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    corpus, _ = _read_corpus_file(args.file)
    s = _pick_structure(corpus, args.name, args.file)
    b = s.subset(args.subset)
    ok = is_ideal(
        s, b, IdealKind(args.kind), args.m,
        strict_bi_interior=args.strict_bi_interior,
    )
    print("true" if ok else "false")
    return 0


def _cmd_enum(args: argparse.Namespace) -> int:
    corpus, _ = _read_corpus_file(args.file)
    s = _pick_structure(corpus, args.name, args.file)
    found = enumerate_ideals(s, IdealKind(args.kind), args.m)
    for sub in found.subsets:
        print(",".join(str(i) for i in sub.elements()))
    return 0


def _cmd_generate(args: argparse.Namespace) -> int:
    spec = GenerationSpec(max_order=args.max_order, up_to_iso=args.up_to_iso)
    structures = list(generate_corpus(spec))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            count = write_corpus(structures, fh)
    else:
        count = write_corpus(structures, sys.stdout)
    print(f"{count} structures", file=sys.stderr)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    corpus, sha = _read_corpus_file(args.corpus)
    checks = resolve_check_ids(args.checks)
    suite = run_suite(
        corpus, args.m, checks, jobs=args.jobs, corpus_id=args.corpus
    )
    header = make_header(
        corpus=args.corpus,
        corpus_sha256=sha,
        potencies=args.m,
        checks=checks,
        jobs=args.jobs,
        generated_at=_utcnow(),
    )
    table = summary_table(suite.results, checks)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            write_report(header, suite.results, fh)
        print(table)
    else:
        write_report(header, suite.results, sys.stdout)
        print(table, file=sys.stderr)
    if args.figures:
        for path in render_figures(suite.results, args.figures):
            print(f"wrote {path}", file=sys.stderr)
    blocker = any(
        (r.status == "fails" and r.check in THEOREM_IDS) or r.status == "error"
        for r in suite.results
    )
    return 2 if blocker else 0


def _cmd_conjecture(args: argparse.Namespace) -> int:
    if args.text is not None:
        text = args.text
    else:
        with open(args.conj_file, encoding="utf-8") as fh:
            text = fh.read()
    conj = parse_conjecture(text)
    canon = format_conjecture(conj)
    corpus, sha = _read_corpus_file(args.file)
    results = [
        check_conjecture(s, conj, m, check_id=canon)
        for s in corpus
        for m in args.m
    ]
    header = make_header(
        corpus=args.file,
        corpus_sha256=sha,
        potencies=args.m,
        checks=[canon],
        jobs=1,
        generated_at=_utcnow(),
    )
    table = summary_table(results, [canon])
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            write_report(header, results, fh)
        print(table)
    else:
        write_report(header, results, sys.stdout)
        print(table, file=sys.stderr)
    return 2 if any(r.status == "fails" for r in results) else 0


def _cmd_replay(args: argparse.Namespace) -> int:
    with open(args.report, encoding="utf-8") as fh:
        header, results = read_report(fh.read())
    corpus_path = args.corpus or header.get("corpus")
    if not corpus_path:
        raise OsgkitError("report header names no corpus; pass --corpus")
    if args.corpus is None and not os.path.isabs(corpus_path):
        corpus_path = os.path.join(
            os.path.dirname(os.path.abspath(args.report)), corpus_path
        )
    corpus, sha = _read_corpus_file(corpus_path)
    expected = header.get("corpus_sha256")
    if expected is not None and sha != expected:
        print(
            f"error: corpus hash mismatch: header {expected}, file {sha}",
            file=sys.stderr,
        )
        return 1
    by_name = {s.name: s for s in corpus}
    if args.all:
        rows = [i for i, r in enumerate(results, start=1) if r.status == "fails"]
        if not rows:
            print("no fails rows to replay")
            return 0
    else:
        rows = [args.row]
    bad = False
    for k in rows:
        if not 1 <= k <= len(results):
            raise OsgkitError(f"row {k} out of range 1..{len(results)}")
        r = results[k - 1]
        if r.status != "fails":
            raise OsgkitError(f"row {k} has status {r.status!r}; nothing to replay")
        s = by_name.get(r.structure)
        if s is None:
            raise OsgkitError(f"row {k} names unknown structure {r.structure!r}")
        ok = validate_witness(s, r)
        print(f"row {k}: {'reproduced' if ok else 'NOT reproduced'}")
        bad = bad or not ok
    return 2 if bad else 0


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="osg",
        description="Decide, enumerate, and stress-test ideal notions "
        "on finite ordered semigroups.",
    )
    p.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("validate", help="parse and validate a corpus file")
    sp.add_argument("file")
    sp.set_defaults(func=_cmd_validate)

    sp = sub.add_parser("check", help="decide one ideal membership question")
    sp.add_argument("--file", required=True)
    sp.add_argument("--name", help="record name when the file has several")
    sp.add_argument("--kind", required=True, choices=_KIND_CHOICES)
    sp.add_argument("--m", type=int, default=1)
    sp.add_argument("--subset", required=True, type=_subset_arg)
    sp.add_argument(
        "--strict-bi-interior", action="store_true",
        help="also require the subset to be a subsemigroup (m_bi_interior only)",
    )
    sp.set_defaults(func=_cmd_check)

    sp = sub.add_parser("enum", help="list every ideal of one kind")
    sp.add_argument("--file", required=True)
    sp.add_argument("--name")
    sp.add_argument("--kind", required=True, choices=_KIND_CHOICES)
    sp.add_argument("--m", type=int, default=1)
    sp.set_defaults(func=_cmd_enum)

    sp = sub.add_parser("generate", help="generate all small structures")
    sp.add_argument("--max-order", type=int, default=3,
                    help=f"largest size to generate (cap {GENERATION_CAP})")
    sp.add_argument("--up-to-iso", action="store_true",
                    help="keep one representative per isomorphism class")
    sp.add_argument("--out", help="corpus file (default: stdout)")
    sp.set_defaults(func=_cmd_generate)

    sp = sub.add_parser("verify", help="run registry checks over a corpus")
    sp.add_argument("--corpus", required=True)
    sp.add_argument("--m", type=_potencies, default=[1],
                    help="potency selection, e.g. 2 or 1..3 (default 1)")
    sp.add_argument("--checks", default="all",
                    help="all, theorems, claims, or comma-separated ids")
    sp.add_argument("--out", help="report file (default: stdout)")
    sp.add_argument("--figures", metavar="DIR",
                    help="also render summary charts into DIR")
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("conjecture", help="test a conjecture over a corpus")
    sp.add_argument("--file", required=True, help="corpus file")
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--text", help="conjecture text")
    src.add_argument("--conj-file", help="file holding the conjecture text")
    sp.add_argument("--m", type=_potencies, default=[1])
    sp.add_argument("--out", help="report file (default: stdout)")
    sp.set_defaults(func=_cmd_conjecture)

    sp = sub.add_parser("replay", help="re-validate fails rows of a report")
    sp.add_argument("--report", required=True)
    which = sp.add_mutually_exclusive_group(required=True)
    which.add_argument("--row", type=int, help="1-based result row to replay")
    which.add_argument("--all", action="store_true", help="replay every fails row")
    sp.add_argument("--corpus", help="override the corpus path in the header")
    sp.set_defaults(func=_cmd_replay)

    return p


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except OsgkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
