"""Embedded table of the 362 two-bridge knots through 12 crossings.

Each record carries the knot name, its fraction p/q, its crosscap
number and a shortest expansion (odd type except for the eight starred
knots, whose unique shortest expansion is even type).  verify_table
recomputes everything from scratch, so the table doubles as a large
end-to-end regression suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from math import gcd

from .core import (
    Expansion,
    ExtendedRational,
    canonical_form,
    eval_expansion,
    knot_from_fraction,
    parse_fraction,
)
from .errors import TableDataError, UnknownNameError
from .invariants import (
    InvariantReport,
    crosscap,
    even_expansion,
    genus,
    report_for_fraction,
)
from .reduction import reduce_expansion

__all__ = ["KnotRecord", "TableReport", "load_table", "verify_table", "lookup", "find_record"]

_DATA = "data/table.tsv"


@dataclass(frozen=True)
class KnotRecord:
    name: str
    fraction: ExtendedRational
    gamma: int
    expansion: Expansion
    starred: bool


@dataclass
class TableReport:
    """Outcome of the five table checks, with one failure entry per offense."""

    total: int = 0
    passed: dict[str, int] = field(default_factory=dict)
    failures: list[tuple[str, str, str]] = field(default_factory=list)

    CHECKS = {
        "a_eval": "expansion evaluates to p/q",
        "b_shortest": "expansion is shortest (reduction preserves length)",
        "c_gamma": "computed crosscap equals the table's",
        "d_starred": "starred exactly when crosscap = 2*genus + 1 (even type, no +-2)",
        "e_distinct": "all canonical forms distinct",
    }

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, check: str, ok: bool, name: str, detail: str = ""):
        if ok:
            self.passed[check] = self.passed.get(check, 0) + 1
        else:
            self.failures.append((name, check, detail))

    def lines(self) -> list[str]:
        out = []
        for check, description in self.CHECKS.items():
            out.append(f"{check} ({description}): {self.passed.get(check, 0)}/{self.total}")
        for name, check, detail in self.failures:
            out.append(f"FAIL {name} {check}: {detail}")
        out.append("OK" if self.ok else f"FAILED ({len(self.failures)} failures)")
        return out


_TABLE_CACHE: list[KnotRecord] | None = None


def _read_rows() -> list[tuple[int, list[str]]]:
    text = resources.files(__package__).joinpath(_DATA).read_text(encoding="ascii")
    rows = []
    for i, line in enumerate(text.splitlines(), start=1):
        if not line or line.startswith("#"):
            continue
        rows.append((i, line.split("\t")))
    return rows


def load_table() -> list[KnotRecord]:
    """All 362 records, validated structurally (names unique, q odd, gcd 1)."""
    global _TABLE_CACHE
    if _TABLE_CACHE is not None:
        return _TABLE_CACHE
    records = []
    names = set()
    for row, fields in _read_rows():
        if len(fields) != 6:
            raise TableDataError(f"expected 6 fields, got {len(fields)}", row)
        name, p_text, q_text, gamma_text, coeff_text, star_text = fields
        try:
            p, q, gamma = int(p_text), int(q_text), int(gamma_text)
            coefficients = tuple(int(c) for c in coeff_text.split(","))
        except ValueError as exc:
            raise TableDataError(f"bad integer field: {exc}", row) from None
        if star_text not in ("0", "1"):
            raise TableDataError(f"bad star flag {star_text!r}", row)
        if name in names:
            raise TableDataError(f"duplicate name {name}", row)
        if q < 3 or q % 2 == 0 or not 0 < p < q or gcd(p, q) != 1:
            raise TableDataError(f"bad fraction {p}/{q}", row)
        names.add(name)
        records.append(
            KnotRecord(name, ExtendedRational(p, q), gamma, Expansion(0, coefficients), star_text == "1")
        )
    if len(records) != 362:
        raise TableDataError(f"expected 362 records, found {len(records)}", 0)
    _TABLE_CACHE = records
    return records


def verify_table() -> TableReport:
    """Recompute every record's invariants and cross-check the table."""
    records = load_table()
    report = TableReport(total=len(records))
    canon = {}
    for rec in records:
        k = knot_from_fraction(rec.fraction)

        value = eval_expansion(rec.expansion)
        report.record("a_eval", value == rec.fraction, rec.name, f"{rec.expansion} evaluates to {value}, table says {rec.fraction}")

        reduced, _ = reduce_expansion(rec.expansion)
        report.record("b_shortest", len(reduced) == len(rec.expansion), rec.name, f"{rec.expansion} reduces to {reduced}")

        gamma = crosscap(k)
        report.record("c_gamma", gamma == rec.gamma, rec.name, f"computed crosscap {gamma}, table says {rec.gamma}")

        even = even_expansion(k)
        attains_bound = gamma == 2 * genus(k) + 1
        even_no_two = all(abs(c) != 2 for c in even.coefficients)
        unique_even_shortest = not rec.expansion.odd_type and not any(abs(c) == 2 for c in rec.expansion.coefficients)
        consistent = rec.starred == attains_bound == even_no_two == unique_even_shortest
        report.record("d_starred", consistent, rec.name, f"starred={rec.starred}, gamma=2g+1 is {attains_bound}, even expansion {even}")

        key = canonical_form(k)
        if key in canon:
            report.record("e_distinct", False, rec.name, f"same knot as {canon[key]}")
        else:
            canon[key] = rec.name
            report.record("e_distinct", True, rec.name)
    return report


def find_record(name: str) -> KnotRecord:
    for rec in load_table():
        if rec.name == name:
            return rec
    raise UnknownNameError(f"no knot named {name!r} in the table")


def lookup(text: str) -> tuple[InvariantReport, KnotRecord | None]:
    """Resolve a knot by table name or by fraction text.

    The invariant report is computed from scratch either way; the record
    is attached when the knot appears in the table (matching up to knot
    equivalence, not just the printed fraction).
    """
    s = text.strip()
    if "/" not in s:
        rec = find_record(s)
        return report_for_fraction(rec.fraction), rec
    report = report_for_fraction(parse_fraction(s))
    key = canonical_form(report.knot)
    for rec in load_table():
        if canonical_form(knot_from_fraction(rec.fraction)) == key:
            return report, rec
    return report, None
