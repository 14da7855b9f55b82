"""Command-line front end.

Verbs: ``analyze`` one (group, partition) pair, ``verify`` a named suite
over a corpus, ``search`` the corpus by predicate expression, and
``catalog`` for listing and emitting built-in groups.  Exit codes are a
stable contract: 0 ok, 1 violation found, 2 input error, 3 cap exceeded.
Reports go to stdout and are byte-deterministic; timing goes to stderr.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import catalog
from .errors import CapExceeded, Inconsistent, ParseError, SigmaGroupsError
from .formats import emit_group_file, parse_group_file, parse_sigma_file
from .group import DEFAULT_MAX_ORDER
from .lattice import DEFAULT_MAX_SUBGROUPS, all_subgroups
from .report import build_analysis, render_json, render_text
from .suites import (
    SUITES,
    Caps,
    builtin_pairs,
    corpus_dir_pairs,
    run_search,
    run_suite,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_CAP = 3


def _add_common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="emit the machine (JSON) report")
    p.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER, help="group closure cap")
    p.add_argument(
        "--max-subgroups", type=int, default=DEFAULT_MAX_SUBGROUPS, help="lattice size cap"
    )
    p.add_argument(
        "--mode",
        choices=("strict", "witness"),
        default="strict",
        help="permutability quantifier reading",
    )
    p.add_argument("--seed", type=int, default=0, help="seed for sampled suites")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers (output order fixed)")


def _add_corpus_flags(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--builtin", action="store_true", help="use the built-in corpus")
    src.add_argument("--corpus", metavar="DIR", help="directory of .grp/.sigma/.manifest files")
    p.add_argument(
        "--only",
        metavar="NAMES",
        help="comma-separated group names to keep from the corpus",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sigmagroups",
        description="exhaustive permutability analysis of small permutation groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full predicate report for one (group, partition) pair")
    p.add_argument("group", help=".grp file or catalog name")
    p.add_argument("sigma", help=".sigma file or built-in partition name")
    _add_common_flags(p)

    p = sub.add_parser("verify", help="run a verification suite over a corpus")
    p.add_argument("suite", choices=SUITES)
    _add_corpus_flags(p)
    _add_common_flags(p)
    p.add_argument(
        "--suite-max-order",
        type=int,
        default=100,
        help="order cap for the section-4 equivalence suites",
    )

    p = sub.add_parser("search", help="list corpus pairs matching a predicate expression")
    p.add_argument("expression", help="e.g. 'psigmat and not pst'")
    _add_corpus_flags(p)
    _add_common_flags(p)

    p = sub.add_parser("catalog", help="built-in groups")
    csub = p.add_subparsers(dest="catalog_command", required=True)
    csub.add_parser("list", help="list catalog entries")
    pe = csub.add_parser("emit", help="print a catalog entry as a .grp file")
    pe.add_argument("name")
    return parser


def _resolve_group(ref: str, max_order: int, max_subgroups: int):
    path = Path(ref)
    if path.is_file():
        G = parse_group_file(path.read_text(encoding="utf-8"), max_order=max_order)
        return G, all_subgroups(G, max_subgroups)
    if ref in catalog.CATALOG:
        return catalog.built_group(ref), catalog.built_lattice(ref, max_subgroups)
    raise ParseError(f"group reference {ref!r} is neither a file nor a catalog name")


def _resolve_sigma(ref: str):
    path = Path(ref)
    if path.is_file():
        return parse_sigma_file(path.read_text(encoding="utf-8"))
    if ref in catalog.SIGMA_CONFIGS:
        return catalog.SIGMA_CONFIGS[ref]
    raise ParseError(f"partition reference {ref!r} is neither a file nor a built-in name")


def _cmd_analyze(args) -> int:
    started = time.monotonic()
    G, L = _resolve_group(args.group, args.max_order, args.max_subgroups)
    sigma = _resolve_sigma(args.sigma)
    doc = build_analysis(
        G, L, sigma, mode=args.mode, max_order=args.max_order, max_subgroups=args.max_subgroups
    )
    sys.stdout.write(render_json(doc) if args.json else render_text(doc))
    print(f"analyze took {time.monotonic() - started:.2f}s", file=sys.stderr)
    return EXIT_OK


def _corpus(args):
    only = tuple(args.only.split(",")) if args.only else None
    if args.builtin:
        pairs = builtin_pairs(only)
        if not pairs:
            raise ParseError("corpus selection is empty")
        return pairs, []
    return corpus_dir_pairs(args.corpus, only)


def _render_suite_text(doc: dict) -> str:
    lines = [
        f"suite {doc['suite']}: {doc['pair_count']} pairs, {doc['checked']} checks, "
        f"{len(doc['violations'])} violations"
    ]
    for rec in doc["records"]:
        if rec.get("skipped"):
            continue
        if rec["task"] == "manifest":
            lines.append(f"  pin {rec['pair']} {rec['predicate']} = {rec['value']}")
        else:
            lines.append(f"  {rec['pair']}: {rec['checked']} checks")
    if "lemma_counts" in doc:
        for part, n in doc["lemma_counts"].items():
            lines.append(f"  instances {part}: {n}")
    for v in doc["violations"]:
        lines.append(f"  VIOLATION [{v['task']}] {v['pair']}: {v['detail']}")
    lines.append("result: " + ("ok" if doc["ok"] else "violations found"))
    return "\n".join(lines) + "\n"


def _cmd_verify(args) -> int:
    started = time.monotonic()
    pairs, checks = _corpus(args)
    caps = Caps(
        max_order=args.max_order,
        max_subgroups=args.max_subgroups,
        mode=args.mode,
        section4_max_order=args.suite_max_order,
    )
    doc = run_suite(
        args.suite, pairs, caps, seed=args.seed, jobs=args.jobs, manifest_checks=checks
    )
    sys.stdout.write(render_json(doc) if args.json else _render_suite_text(doc))
    print(f"verify took {time.monotonic() - started:.2f}s", file=sys.stderr)
    return EXIT_OK if doc["ok"] else EXIT_VIOLATION


def _cmd_search(args) -> int:
    pairs, _checks = _corpus(args)
    caps = Caps(max_order=args.max_order, max_subgroups=args.max_subgroups, mode=args.mode)
    doc = run_search(args.expression, pairs, caps, jobs=args.jobs)
    if args.json:
        sys.stdout.write(render_json(doc))
    else:
        lines = []
        for row in doc["rows"]:
            if row["match"]:
                lines.append(f"{row['group']} {row['sigma']} order={row['order']}")
        lines.append(f"{len(doc['matches'])} matches")
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_catalog(args) -> int:
    if args.catalog_command == "list":
        for entry in catalog.CATALOG.values():
            print(f"{entry.name:8s} order {entry.order:5d}  {entry.summary}")
        return EXIT_OK
    entry = catalog.CATALOG.get(args.name)
    if entry is None:
        raise ParseError(f"no catalog entry named {args.name!r}")
    sys.stdout.write(emit_group_file(catalog.built_group(args.name)))
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "analyze":
            return _cmd_analyze(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "search":
            return _cmd_search(args)
        return _cmd_catalog(args)
    except (ParseError, FileNotFoundError, KeyError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except Inconsistent as exc:
        print(f"internal cross-check failed: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except SigmaGroupsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
