"""Command-line front end.

Exit codes: 0 ok, 1 formula/oracle mismatch, 2 parse error, 3 domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .branch_data import BranchDataError, FamilyDatum, expand, family_data
from .closed_form import OutOfFamilyError, classify_g0h2, nu
from .octagon import octagon_pairings
from .oracle import DEFAULT_DEGREE_LIMIT, MoveSet, OracleCache, OracleError, weak_hurwitz
from .realizations import realizations, sort_descriptors
from .records import OutputRecord, render_csv, status_for
from .tables import GOLDEN_KS, check_table, render_table, table_rows

EXIT_OK, EXIT_MISMATCH, EXIT_PARSE, EXIT_DOMAIN = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def parse_datum(text: str) -> FamilyDatum:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(EXIT_PARSE, f"cannot parse datum JSON: {exc}") from exc
    if not isinstance(obj, dict) or not {"g", "h", "k", "pi"} <= set(obj):
        raise CliError(EXIT_PARSE, 'datum must look like {"g":0,"h":2,"k":6,"pi":[9,2,1]}')
    try:
        return FamilyDatum.from_json(obj)
    except BranchDataError as exc:
        code = EXIT_PARSE if exc.code == "parse" else EXIT_DOMAIN
        raise CliError(code, f"invalid datum ({exc.code}): {exc}") from exc


def parse_range(text: str) -> list[int]:
    """'3', '1-6' or '2,3' -> list of ints."""
    out: list[int] = []
    try:
        for chunk in text.split(","):
            lo, sep, hi = chunk.partition("-")
            out.extend(range(int(lo), int(hi) + 1) if sep else [int(lo)])
    except ValueError as exc:
        raise CliError(EXIT_PARSE, f"bad range {text!r}") from exc
    return out


def _moves(args) -> MoveSet:
    return MoveSet(use_mirror=not args.no_mirror, use_relabel=not args.no_relabel)


def _cache(args):
    return OracleCache.from_env(args.cache)


def _formula(fd: FamilyDatum):
    try:
        return nu(fd)
    except OutOfFamilyError:
        return None


def compute_record(fd: FamilyDatum, oracle: bool, moves: MoveSet, degree_limit: int, cache_path=None) -> OutputRecord:
    nu_f = _formula(fd)
    nu_o = None
    if oracle:
        cache = OracleCache(cache_path) if cache_path else None
        nu_o = weak_hurwitz(expand(fd), moves, cache=cache, degree_limit=degree_limit)
    case = classify_g0h2(fd.k, fd.pi) if (fd.g, fd.h) == (0, 2) else None
    return OutputRecord(fd, nu_f, nu_o, case, None, status_for(nu_f, nu_o))


def emit(records, fmt: str, out) -> None:
    if fmt == "csv":
        out.write(render_csv(records))
    elif fmt == "json":
        for r in records:
            out.write(r.render_json() + "\n")
    else:
        for r in records:
            out.write(r.render_text() + "\n")


def cmd_nu(args, out) -> int:
    fd = parse_datum(args.datum)
    if _formula(fd) is None and not args.oracle:
        raise CliError(EXIT_DOMAIN, f"out of covered family: (g={fd.g}, h={fd.h}); rerun with --oracle")
    cache = _cache(args)
    try:
        rec = compute_record(fd, args.oracle, _moves(args), args.degree_limit, cache.path if cache is not None else None)
    except OracleError as exc:
        raise CliError(EXIT_DOMAIN, str(exc)) from exc
    emit([rec], args.format, out)
    return EXIT_MISMATCH if rec.status == "mismatch" else EXIT_OK


def cmd_realizations(args, out) -> int:
    fd = parse_datum(args.datum)
    try:
        reals = tuple(sort_descriptors(realizations(fd)))
    except ValueError as exc:
        raise CliError(EXIT_DOMAIN, str(exc)) from exc
    case = classify_g0h2(fd.k, fd.pi) if (fd.g, fd.h) == (0, 2) else None
    rec = OutputRecord(fd, _formula(fd), None, case, reals, "oracle-skipped")
    emit([rec], args.format, out)
    return EXIT_OK


def cmd_table(args, out) -> int:
    if args.k < 3:
        raise CliError(EXIT_DOMAIN, "tables need k >= 3")
    records = table_rows(args.k)
    if args.format in ("text", "md"):
        out.write(render_table(records, args.format))
    else:
        emit(records, args.format, out)
    if args.check:
        if args.k not in GOLDEN_KS:
            raise CliError(EXIT_DOMAIN, f"--check needs k in {GOLDEN_KS}")
        result = check_table(args.k)
        out.write(result.summary() + "\n")
        return EXIT_OK if result.passed else EXIT_MISMATCH
    return EXIT_OK


def _verify_one(job):
    fd, moves, degree_limit, cache_path = job
    return compute_record(fd, True, moves, degree_limit, cache_path)


def cmd_verify(args, out) -> int:
    data = []
    for g in parse_range(args.g):
        for h in parse_range(args.h):
            for k in parse_range(args.k):
                data.extend(family_data(g, h, k))
    if not data:
        raise CliError(EXIT_DOMAIN, "the range contains no valid family data")
    too_big = [fd for fd in data if fd.degree > args.degree_limit]
    if too_big:
        raise CliError(EXIT_DOMAIN, f"degree {too_big[0].degree} exceeds --degree-limit {args.degree_limit}")
    cache = _cache(args)
    jobs = [(fd, _moves(args), args.degree_limit, cache.path if cache is not None else None) for fd in data]
    if args.jobs > 1:
        # outputs are collected in input order
        with ProcessPoolExecutor(args.jobs) as pool:
            records = list(pool.map(_verify_one, jobs))
    else:
        records = [_verify_one(j) for j in jobs]
    emit(records, args.format, out)
    counts = {s: sum(r.status == s for r in records) for s in ("ok", "mismatch", "oracle-skipped")}
    out.write(f"verified {len(records)} data: {counts['ok']} ok, {counts['mismatch']} mismatch, "
              f"{counts['oracle-skipped']} without formula\n")
    return EXIT_MISMATCH if counts["mismatch"] else EXIT_OK


def cmd_octagons(args, out) -> int:
    classes = octagon_pairings()
    if args.format == "json":
        for c in classes:
            out.write(json.dumps({"pairs": c.pairs(), "stabilizer_order": c.stabilizer_order,
                                  "orbit_size": c.orbit_size, "leg_positions": c.leg_positions}) + "\n")
    else:
        for c in classes:
            pairs = " ".join("{%d,%d}" % p for p in c.pairs())
            out.write(f"{pairs}  stabilizer={c.stabilizer_order}  orbit={c.orbit_size}  leg_positions={c.leg_positions}\n")
        out.write(f"{len(classes)} classes, {sum(c.leg_positions for c in classes)} (9,1)-graph embeddings\n")
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(EXIT_PARSE, message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hurwitz", description="Weak Hurwitz numbers for the (2..2),(2h+1,1,2..2),pi family.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def oracle_flags(p):
        p.add_argument("--no-mirror", action="store_true", help="drop the orientation-reversing move")
        p.add_argument("--no-relabel", action="store_true", help="drop branch-point relabeling moves")
        p.add_argument("--degree-limit", type=int, default=DEFAULT_DEGREE_LIMIT)
        p.add_argument("--cache", default=None, help="JSON-lines oracle cache (HURWITZ_CACHE overrides)")

    p = sub.add_parser("nu", help="closed-form nu, optionally checked by the oracle")
    p.add_argument("datum", help='JSON, e.g. {"g":0,"h":2,"k":6,"pi":[9,2,1]}')
    p.add_argument("--oracle", action="store_true")
    oracle_flags(p)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_nu)

    p = sub.add_parser("table", help="g=0, h=2 table for one k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--check", action="store_true", help="compare with the embedded k=6/k=7 tables")
    p.add_argument("--format", choices=("text", "json", "csv", "md"), default="text")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("realizations", help="list the explicit dessins")
    p.add_argument("datum")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_realizations)

    p = sub.add_parser("verify", help="formula vs oracle over a range of data")
    p.add_argument("--g", default="0", help="e.g. 0 or 0-2")
    p.add_argument("--h", default="0-2")
    p.add_argument("--k", default="1-6")
    p.add_argument("--jobs", type=int, default=1)
    oracle_flags(p)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("octagons", help="genus-2 edge pairings of the octagon")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_octagons)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except CliError as exc:
        err.write(f"hurwitz: {exc}\n")
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
