"""Command-line interface: ``ringhull <command> [options]``.

Exit status is 0 on success, 2 when the input is rejected and 3 when
``verify-tables`` finds a row that does not match.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence

from . import analysis, codes_ring, codes_z4, tables
from .codes_ring import CyclicCodeR, RWord, format_r_word, gray_parameters, hull_r, parse_r_generator
from .codes_z4 import CyclicCodeZ4, max_codewords
from .cyclotomic import factor_xn_minus_1
from .errors import CodeTooLarge, RingHullError

EXIT_OK, EXIT_INVALID, EXIT_MISMATCH = 0, 2, 3


class UsageError(Exception):
    pass


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _distance_json(d):
    if d is None:
        return None
    return "inf" if d == math.inf else d


def _params_json(gp) -> dict:
    return {"length": gp.length, "k1": gp.k1, "k2": gp.k2, "distance": _distance_json(gp.distance)}


# ---------------------------------------------------------------------------
# commands


def cmd_factor(args) -> int:
    table = factor_xn_minus_1(args.n)
    lines = [f"x^{args.n} - 1 over Z4: {len(table)} factors, B_n = {table.B_n}"]
    for i, f in enumerate(table.factors):
        kind = "self-reciprocal" if f.self_reciprocal else f"pair with {table.factors[f.partner]}"
        lines.append(f"  [{i}] {f}  degree {f.degree}  j={f.j}  {kind}")
    lines.append("divisors j of n:")
    for s in table.divisor_stats:
        extra = f"gamma={s.gamma}" if s.in_N2 else f"beta={s.beta}"
        lines.append(f"  j={s.j}  ord={s.ord}  phi={s.phi}  {'in N2' if s.in_N2 else 'not in N2'}  {extra}")
    _emit(args, table.to_dict(), "\n".join(lines))
    return EXIT_OK


def _component(table, p_text: str, q_text: str, k: int) -> CyclicCodeZ4:
    p = table.mask_of(p_text)
    q = table.mask_of(q_text)
    if p.bits & q.bits:
        raise UsageError(f"p{k}={p_text} and q{k}={q_text} share a factor")
    return CyclicCodeZ4(p, q, ~(p | q))


def cmd_hull(args) -> int:
    table = factor_xn_minus_1(args.n)
    code = CyclicCodeR(_component(table, args.p1, args.q1, 1), _component(table, args.p2, args.q2, 2))
    h, t = hull_r(code)
    names = ("v p1 q1", "2v p1", "(1-v) p2 q2", "2(1-v) p2")
    gens = [format_r_word(w) for w in codes_ring.generators_r(h)]
    gp = gray_parameters(h, workers=args.threads, cap=args.max_codewords)
    payload = {
        "n": args.n,
        "code": {"c1": code.c1.roles(), "c2": code.c2.roles()},
        "hull": {
            "c1": h.c1.roles(),
            "c2": h.c2.roles(),
            "generators": dict(zip(names, gens)),
            "type": {"k1": t.k1, "k2": t.k2},
            "dim2": t.dim2,
        },
        "gray_image": _params_json(gp),
    }
    lines = [f"hull generators (n={args.n}):"]
    lines += [f"  {name}: {g}" for name, g in zip(names, gens)]
    lines.append(f"hull type: {t}  (dim2 {t.dim2})")
    lines.append(f"Gray image parameters: {gp}")
    if gp.distance is None:
        lines.append(f"  distance not computed: image above the cap of {max_codewords(args.max_codewords)} words")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _ranges(k2s: Sequence[int]) -> str:
    runs, start = [], None
    for i, v in enumerate(k2s):
        if start is None:
            start = v
        if i + 1 == len(k2s) or k2s[i + 1] != v + 1:
            runs.append(str(start) if start == v else f"{start}..{v}")
            start = None
    return ", ".join(runs)


def cmd_types(args) -> int:
    e = analysis.enumerate_hull_types(args.n)
    lines = [f"hull types 4^k1 2^k2 of cyclic codes of length {args.n} over Z4[v]/(v^2-v):"]
    for k1, k2s in e.types.items():
        lines.append(f"  k1={k1}: k2 in {{{_ranges(k2s)}}}  ({e.branches[k1]} coefficient choice(s))")
    _emit(args, e.to_dict(), "\n".join(lines))
    return EXIT_OK


def _odd_range(args) -> list[int]:
    if args.n is not None:
        if args.from_ is not None or args.to is not None:
            raise UsageError("give either --n or --from/--to")
        return [args.n]
    if args.from_ is None or args.to is None:
        raise UsageError("give --n or both --from and --to")
    lo, hi = args.from_, args.to
    if lo % 2 == 0:
        print(f"note: --from {lo} rounded up to {lo + 1}", file=sys.stderr)
        lo += 1
    if hi % 2 == 0:
        print(f"note: --to {hi} rounded down to {hi - 1}", file=sys.stderr)
        hi -= 1
    if lo < 1 or hi < lo:
        raise UsageError(f"empty range {args.from_}..{args.to}")
    return list(range(lo, hi + 1, 2))


def cmd_avg(args) -> int:
    rows = analysis.table1(_odd_range(args))
    payload = [r.to_dict() for r in rows]
    _emit(args, {"rows": payload}, "\n".join(str(r) for r in rows))
    return EXIT_OK


def cmd_gray(args) -> int:
    w = parse_r_generator(args.word)
    img = codes_ring.gray_map(w, args.layout)
    weight = codes_ring.lee_weight_word(img)
    text_img = "".join(str(int(x)) for x in img)
    payload = {"word": format_r_word(w), "layout": args.layout, "image": text_img, "lee_weight": weight}
    _emit(args, payload, f"{text_img}  Lee weight {weight}")
    return EXIT_OK


def cmd_params(args) -> int:
    table = factor_xn_minus_1(args.n)
    w = parse_r_generator(args.gen)
    if len(w) != args.n:
        raise UsageError(f"generator has length {len(w)}, expected {args.n}")
    span = codes_ring.span_of_r_generator(table, w)
    gp = gray_parameters(span, workers=args.threads, cap=args.max_codewords)
    payload = {
        "n": args.n,
        "generator": format_r_word(w),
        "span": {"c1": span.c1.roles(), "c2": span.c2.roles(), "type": {"k1": span.type.k1, "k2": span.type.k2}},
        "gray_image": _params_json(gp),
    }
    text = [f"cyclic span of {format_r_word(w)}: type {span.type}", f"Gray image parameters: {gp}"]
    if gp.distance is None:
        text.append(f"  distance not computed: image above the cap of {max_codewords(args.max_codewords)} words")
    _emit(args, payload, "\n".join(text))
    return EXIT_OK


def _row_set(text: str | None) -> set[int] | None:
    if not text:
        return None
    try:
        return {int(x) for x in text.split(",") if x.strip()}
    except ValueError:
        raise UsageError(f"bad --rows value {text!r}") from None


def cmd_verify_tables(args) -> int:
    if args.table not in (1, 2, 3):
        raise UsageError(f"unknown table {args.table}; expected 1, 2 or 3")
    reports = tables.verify_table(args.table, _row_set(args.rows), workers=args.threads, cap=args.max_codewords)
    counts = tables.summary(reports)
    failed = counts[tables.FAIL] > 0
    if args.json:
        print(json.dumps({"table": args.table, "rows": [r.to_dict() for r in reports], "summary": counts}, indent=2, sort_keys=True))
    else:
        for r in reports:
            print(r.line())
            for note in r.notes:
                print(f"    {note}")
        print(f"table {args.table}: " + ", ".join(f"{v} {k}" for k, v in counts.items()) + f" of {len(reports)} rows")
    return EXIT_MISMATCH if failed else EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print one JSON document instead of text")
    common.add_argument(
        "--max-codewords",
        type=int,
        default=None,
        help="enumeration cap (default $RINGHULL_MAX_CODEWORDS or 2^24)",
    )
    common.add_argument("--threads", type=int, default=1, help="worker threads for enumeration")

    p = argparse.ArgumentParser(prog="ringhull", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("factor", parents=[common], help="factor x^n - 1 over Z4")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_factor)

    s = sub.add_parser("hull", parents=[common], help="hull of the code given by p1, q1, p2, q2")
    s.add_argument("--n", type=int, required=True)
    for name in ("p1", "q1", "p2", "q2"):
        s.add_argument(f"--{name}", required=True, help="compact polynomial string, lowest degree first")
    s.set_defaults(func=cmd_hull)

    s = sub.add_parser("types", parents=[common], help="achievable hull types")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_types)

    s = sub.add_parser("avg", parents=[common], help="average hull 2-dimension E(n)")
    s.add_argument("--n", type=int)
    s.add_argument("--from", dest="from_", type=int)
    s.add_argument("--to", type=int)
    s.set_defaults(func=cmd_avg)

    s = sub.add_parser("gray", parents=[common], help="Gray image and Lee weight of one word")
    s.add_argument("--word", required=True, help='word such as "(31020)+v(22112)"')
    s.add_argument("--layout", choices=("block", "interleaved"), default="block")
    s.set_defaults(func=cmd_gray)

    s = sub.add_parser("params", parents=[common], help="Gray-image parameters of the span of one generator")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--gen", required=True, help='generator such as "(220022200200000)+v(313301033221000)"')
    s.set_defaults(func=cmd_params)

    s = sub.add_parser("verify-tables", parents=[common], help="recompute the shipped tables")
    s.add_argument("--table", type=int, required=True)
    s.add_argument("--rows", help="comma-separated 1-based row numbers")
    s.set_defaults(func=cmd_verify_tables)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (RingHullError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
