"""Golden-file checks of the published tables.

Three tables ship with the package under ``data/``:

* ``table1.txt``: n, whether n is in N2, B_n and the average hull
  2-dimension E(n), for odd n from 55 to 153.
* ``table2.txt`` (n = 15) and ``table3.txt`` (n = 21): role assignments of
  the factors, one printed hull generator in ``(..)+v(..)`` notation and the
  printed parameters ``(length, 4^k1 2^k2, d)`` of a Z4-linear code.

A hull-table row is checked by taking the cyclic R-span of its printed
generator, mapping it through the Gray map and comparing length, type and
minimum Lee distance with the printed triple.  The code obtained directly
from the row's role assignments is reported beside it for reference.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from .analysis import format_fraction
from .codes_ring import (
    CyclicCodeR,
    RWord,
    generators_r,
    gray_parameters,
    hull_r,
    parse_r_generator,
    span_of_r_generator,
)
from .codes_z4 import CyclicCodeZ4, max_codewords
from .cyclotomic import compute_B, factor_xn_minus_1, in_N2
from .errors import RingHullError
from .z4poly import Z4Poly, parse_poly, product

TABLE_LENGTHS = {2: 15, 3: 21}

# Rows whose printed values are known to be suspect: a parameter triple out
# of line with its neighbours, and two rows printing one generator string for
# different inputs.  They are reported, never forced to match.
SUSPECT_ROWS = {2: {3}, 3: {12, 13}}

# the reference route is informational, so its distance is only computed for small images
ROLE_IMAGE_CAP = 1 << 20

PASS, FAIL, EXPECTED, UNVERIFIED = "PASS", "FAIL", "EXPECTED-DISCREPANCY", "UNVERIFIED"


def _lines(name: str) -> list[str]:
    text = resources.files("ringhull").joinpath("data").joinpath(name).read_text(encoding="utf-8")
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


# ---------------------------------------------------------------------------
# Table 1


@dataclass(frozen=True)
class Table1Entry:
    n: int
    dagger: bool
    B: int
    E: Fraction


def load_table1() -> list[Table1Entry]:
    out = []
    for ln in _lines("table1.txt"):
        n, dag, b, e = ln.split()
        out.append(Table1Entry(int(n), dag == "+", int(b), Fraction(e)))
    return out


# ---------------------------------------------------------------------------
# Tables 2 and 3

_PARAMS_RE = re.compile(r"^\(\s*(\d+)\s*,\s*4\^(\d+)\s*2\^(\d+)\s*,\s*(\d+)\s*\)\s*(\*?)$")


@dataclass(frozen=True)
class PrintedParameters:
    length: int
    k1: int
    k2: int
    distance: int
    starred: bool

    def __str__(self) -> str:
        return f"({self.length}, 4^{self.k1} 2^{self.k2}, {self.distance})"


def parse_parameters(text: str) -> PrintedParameters:
    m = _PARAMS_RE.match(text.strip())
    if not m:
        raise ValueError(f"cannot parse parameters {text!r}")
    length, k1, k2, d = map(int, m.groups()[:4])
    return PrintedParameters(length, k1, k2, d, m.group(5) == "*")


def _parse_cell(cell: str) -> tuple[list[str], Z4Poly, str]:
    *names, poly_text = [s.strip() for s in cell.split("=")]
    parts = re.findall(r"\(([0-3]+)\)", poly_text) or [poly_text]
    return names, product(parse_poly(p) for p in parts), poly_text


@dataclass(frozen=True)
class HullTableRow:
    table: int
    index: int  # 1-based, in printed order
    n: int
    roles: dict[str, Z4Poly]
    role_text: str
    generator: str
    printed: PrintedParameters


def load_hull_table(table: int) -> list[HullTableRow]:
    if table not in TABLE_LENGTHS:
        raise ValueError(f"no hull table {table}")
    n = TABLE_LENGTHS[table]
    out = []
    for i, ln in enumerate(_lines(f"table{table}.txt"), 1):
        cells = [c.strip() for c in ln.split("|")]
        roles: dict[str, Z4Poly] = {}
        for cell in cells[:3]:
            names, poly, _ = _parse_cell(cell)
            for name in names:
                roles[name] = poly
        out.append(HullTableRow(table, i, n, roles, " | ".join(cells[:3]), cells[3], parse_parameters(cells[4])))
    return out


def duplicate_generators(rows: list[HullTableRow]) -> dict[int, list[int]]:
    """Row index -> other rows printing the same generator string."""
    by_gen: dict[RWord, list[int]] = {}
    for r in rows:
        by_gen.setdefault(parse_r_generator(r.generator), []).append(r.index)
    return {i: [k for k in idx if k != i] for idx in by_gen.values() if len(idx) > 1 for i in idx}


def code_from_roles(row: HullTableRow) -> CyclicCodeR:
    """The code ``<v p1 q1, 2 v p1, (1 - v) p2 q2, 2 (1 - v) p2>`` named by a row.

    Raises when a role polynomial is not a divisor of x^n - 1 or the three
    roles of a component do not split x^n - 1.
    """
    table = factor_xn_minus_1(row.n)
    masks = {name: table.mask_of(p) for name, p in row.roles.items()}
    comps = []
    for k in "12":
        f, g, h = (masks[f"{r}{k}"] for r in "pqr")
        comps.append(CyclicCodeZ4(f, g, h))
    return CyclicCodeR(*comps)


# ---------------------------------------------------------------------------
# verification


@dataclass
class RowReport:
    table: int
    row: int
    status: str
    printed: str
    computed: str
    notes: list[str] = field(default_factory=list)

    def line(self) -> str:
        return f"table {self.table} row {self.row}: {self.status}  printed {self.printed}  computed {self.computed}"

    def to_dict(self) -> dict:
        return {
            "table": self.table,
            "row": self.row,
            "status": self.status,
            "printed": self.printed,
            "computed": self.computed,
            "notes": list(self.notes),
        }


def verify_table1(rows: set[int] | None = None) -> list[RowReport]:
    out = []
    for i, e in enumerate(load_table1(), 1):
        if rows and i not in rows:
            continue
        b = compute_B(e.n)
        ev = Fraction(10 * e.n - 4 * b, 9)
        dag = in_N2(e.n)
        ok = (b, ev, dag) == (e.B, e.E, e.dagger)
        rep = RowReport(
            1,
            i,
            PASS if ok else FAIL,
            f"n={e.n} B={e.B} E={format_fraction(e.E)}{' †' if e.dagger else ''}",
            f"n={e.n} B={b} E={format_fraction(ev)}{' †' if dag else ''}",
        )
        if not ok and e.E == Fraction(10 * e.n - 4 * e.B, 9):
            rep.notes.append("printed E agrees with the printed B; the printed B differs from the divisor sum")
        out.append(rep)
    return out


def _same_triple(gp, printed: PrintedParameters) -> bool:
    return (gp.length, gp.k1, gp.k2, gp.distance) == (printed.length, printed.k1, printed.k2, printed.distance)


def _notes_from_roles(row: HullTableRow, gen: RWord, cap: int | None) -> list[str]:
    try:
        c = code_from_roles(row)
    except RingHullError as exc:
        return [f"role assignments do not define a code: {exc}"]
    h, t = hull_r(c)
    gp = gray_parameters(h, cap=min(max_codewords(cap), ROLE_IMAGE_CAP))
    total = RWord.zero(row.n)
    for w in generators_r(h):
        total = total + w
    match = " (matches the printed triple)" if _same_triple(gp, row.printed) else ""
    notes = [
        f"hull of the code named by the roles: type {t}, Gray image {gp}{match}",
        "printed generator equals the sum of its four hull generators"
        if total == gen
        else "printed generator differs from the sum of the four hull generators",
    ]
    if span_of_r_generator(h.table, gen) == h:
        notes.append("span of the printed generator equals that hull")
    return notes


def verify_row(row: HullTableRow, workers: int = 1, cap: int | None = None, duplicates=None) -> RowReport:
    table = factor_xn_minus_1(row.n)
    gen = parse_r_generator(row.generator)
    span = span_of_r_generator(table, gen)
    gp = gray_parameters(span, workers=workers, cap=cap)
    printed = row.printed
    if (gp.length, gp.k1, gp.k2) != (printed.length, printed.k1, printed.k2):
        status = FAIL
    elif gp.distance is None:
        status = UNVERIFIED
    else:
        status = PASS if gp.distance == printed.distance else FAIL
    if status == FAIL and row.index in SUSPECT_ROWS.get(row.table, ()):
        status = EXPECTED

    rep = RowReport(row.table, row.index, status, str(printed), str(gp))
    if gp.distance is None:
        rep.notes.append(f"Gray image has 2^{2 * gp.k1 + gp.k2} words, above the cap of {max_codewords(cap)}")
    if row.index in SUSPECT_ROWS.get(row.table, ()):
        rep.notes.append("suspect row: printed values are reported, not required to match")
    for other in (duplicates or {}).get(row.index, []):
        rep.notes.append(f"prints the same generator as row {other} with different role assignments")
    rep.notes.extend(_notes_from_roles(row, gen, cap))
    return rep


def verify_hull_table(
    table: int, rows: set[int] | None = None, workers: int = 1, cap: int | None = None
) -> list[RowReport]:
    all_rows = load_hull_table(table)
    dups = duplicate_generators(all_rows)
    return [verify_row(r, workers, cap, dups) for r in all_rows if not rows or r.index in rows]


def verify_table(
    table: int, rows: set[int] | None = None, workers: int = 1, cap: int | None = None
) -> list[RowReport]:
    if table == 1:
        return verify_table1(rows)
    if table in TABLE_LENGTHS:
        return verify_hull_table(table, rows, workers, cap)
    raise ValueError(f"unknown table {table}; expected 1, 2 or 3")


def summary(reports: list[RowReport]) -> dict[str, int]:
    out = {PASS: 0, FAIL: 0, EXPECTED: 0, UNVERIFIED: 0}
    for r in reports:
        out[r.status] += 1
    return out


def printed_size_log2(row: HullTableRow) -> int:
    return 2 * row.printed.k1 + row.printed.k2


__all__ = [
    "EXPECTED",
    "FAIL",
    "PASS",
    "UNVERIFIED",
    "HullTableRow",
    "PrintedParameters",
    "RowReport",
    "Table1Entry",
    "code_from_roles",
    "duplicate_generators",
    "load_hull_table",
    "load_table1",
    "parse_parameters",
    "summary",
    "verify_hull_table",
    "verify_row",
    "verify_table",
    "verify_table1",
]
