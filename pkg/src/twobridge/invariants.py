"""Crosscap number, genus and boundary classification of 2-bridge knots.

The crosscap number of S(q,p) is read off the reduced expansion of p/q:
with n the reduced length, it is n when the expansion has an odd
coefficient or a +-2 (an odd-type shortest expansion exists), and n+1
otherwise.  The genus is half the length of the unique all-even
expansion.  A minimal-genus non-orientable spanning surface is
boundary-incompressible exactly when an odd-type shortest expansion
exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import (
    Expansion,
    ExtendedRational,
    KnotId,
    division_expansion,
    eval_expansion,
    fraction_of,
    format_expansion,
    knot_from_fraction,
)
from .diagram import all_shortest_expansions
from .errors import DomainError
from .reduction import reduce_expansion

__all__ = [
    "Boundary",
    "InvariantReport",
    "PlumbingSurface",
    "even_expansion",
    "genus",
    "crosscap",
    "gamma_equals_2g_plus_1",
    "boundary_classification",
    "plumbing_surface",
    "family_k_mn",
    "reduced_expansion",
    "odd_type_among_shortest",
    "invariant_report",
    "report_for_fraction",
]


class Boundary(Enum):
    INCOMPRESSIBLE = "BoundaryIncompressible"
    COMPRESSIBLE = "BoundaryCompressible"
    TRIVIAL = "Trivial"


@dataclass(frozen=True)
class PlumbingSurface:
    """Surface plumbed from a row of twisted bands, one per coefficient."""

    bands: tuple[int, ...]
    first_betti: int
    orientable: bool


@dataclass(frozen=True)
class InvariantReport:
    knot: KnotId
    crosscap: int
    genus: int
    reduced: Expansion
    even_expansion: Expansion
    odd_shortest_exists: bool
    boundary: Boundary

    def to_dict(self) -> dict:
        return {
            "knot": str(self.knot),
            "fraction": str(fraction_of(self.knot)),
            "crosscap": self.crosscap,
            "genus": self.genus,
            "reduced": format_expansion(self.reduced),
            "even_expansion": format_expansion(self.even_expansion),
            "odd_shortest_exists": self.odd_shortest_exists,
            "boundary": self.boundary.value,
        }

    def to_lines(self) -> list[str]:
        return [f"{key}={value}" for key, value in self.to_dict().items()]


def _require_knot(k: KnotId):
    # KnotId construction already guarantees q odd and coprime.
    if k.q == 1:
        raise DomainError("operation is undefined for the unknot")


def _nearest_even_quotient(a: int, b: int) -> int:
    """The unique even b' with b'*b - a in (-|b|, |b|)."""
    t = a // b
    q = t if t % 2 == 0 else t + 1
    assert q % 2 == 0 and abs(q * b - a) < abs(b) and q != 0
    return q


def even_expansion(k: KnotId) -> Expansion:
    """The unique expansion of k with all coefficients even.

    Uses the even representative p' of p mod q (p' = p or p - q, whichever
    is even) and then repeatedly takes the nearest even quotient.  The
    numerator/denominator parities alternate (odd,even) / (even,odd), so
    the remainder can vanish only after an even number of steps and every
    quotient is a nonzero even integer.
    """
    if k.q % 2 == 0:
        raise DomainError("even expansion requires odd q")
    if k.q == 1:
        return Expansion(0, ())
    if k.p % 2 == 1:
        tail, r = k.p - k.q, 1
    else:
        tail, r = k.p, 0
    coeffs = []
    a, b = k.q, tail
    while True:
        q = _nearest_even_quotient(a, b)
        coeffs.append(q)
        a, b = b, q * b - a
        if b == 0:
            break
    assert len(coeffs) % 2 == 0
    return Expansion(r, tuple(coeffs))


def genus(k: KnotId) -> int:
    """Minimal genus of an orientable spanning surface: half the even length."""
    return len(even_expansion(k)) // 2


def reduced_expansion(k: KnotId) -> Expansion:
    """Fixpoint of the rewrite system, seeded from the division expansion of p/q."""
    reduced, _ = reduce_expansion(division_expansion(fraction_of(k)))
    return reduced


def _has_odd_or_two(e: Expansion) -> bool:
    return any(c % 2 != 0 or abs(c) == 2 for c in e.coefficients)


def crosscap(k: KnotId) -> int:
    """Minimal first Betti number of a non-orientable spanning surface.

    n if the reduced expansion has an odd coefficient or a +-2 (then an
    odd-type shortest expansion exists), n+1 otherwise; 0 for the unknot.
    """
    if k.q == 1:
        return 0
    reduced = reduced_expansion(k)
    n = len(reduced)
    return n if _has_odd_or_two(reduced) else n + 1


def gamma_equals_2g_plus_1(k: KnotId) -> bool:
    """Whether the crosscap number attains the bound 2*genus + 1.

    Holds exactly when the all-even expansion contains no +-2.
    """
    _require_knot(k)
    return all(abs(c) != 2 for c in even_expansion(k).coefficients)


def boundary_classification(k: KnotId) -> Boundary:
    """Classify minimal-genus non-orientable spanning surfaces of k.

    Boundary-incompressible iff some shortest expansion is of odd type,
    which the reduced expansion witnesses syntactically.
    """
    _require_knot(k)
    if _has_odd_or_two(reduced_expansion(k)):
        return Boundary.INCOMPRESSIBLE
    return Boundary.COMPRESSIBLE


def odd_type_among_shortest(k: KnotId) -> bool:
    """Enumeration route to the same dichotomy: scan the rectangle-move closure.

    Slower than the syntactic test on the reduced expansion; kept as an
    independent cross-check.
    """
    _require_knot(k)
    return all_shortest_expansions(fraction_of(k)).has_odd_type


def plumbing_surface(e: Expansion) -> PlumbingSurface:
    """Band data of the plumbing surface spanned by an expansion."""
    if any(c == 0 for c in e.coefficients):
        raise DomainError("plumbing surfaces need nonzero twist counts")
    return PlumbingSurface(e.coefficients, len(e), not e.odd_type)


def family_k_mn(m: int, n: int) -> KnotId:
    """The knot of the expansion [m, 4, 4, ..., 4] of length n."""
    if n < 1 or m < 3:
        raise DomainError(f"family needs m >= 3 and n >= 1, got m={m}, n={n}")
    value = eval_expansion(Expansion(0, (m,) + (4,) * (n - 1)))
    return knot_from_fraction(value)


def invariant_report(k: KnotId) -> InvariantReport:
    """Assemble every invariant of one knot."""
    if k.q == 1:
        empty = Expansion(0, ())
        return InvariantReport(k, 0, 0, empty, empty, False, Boundary.TRIVIAL)
    reduced = reduced_expansion(k)
    n = len(reduced)
    odd_exists = _has_odd_or_two(reduced)
    even = even_expansion(k)
    return InvariantReport(
        knot=k,
        crosscap=n if odd_exists else n + 1,
        genus=len(even) // 2,
        reduced=reduced,
        even_expansion=even,
        odd_shortest_exists=odd_exists,
        boundary=Boundary.INCOMPRESSIBLE if odd_exists else Boundary.COMPRESSIBLE,
    )


def report_for_fraction(x: ExtendedRational) -> InvariantReport:
    """Invariant report for the knot named by a fraction; rejects links and 1/0."""
    return invariant_report(knot_from_fraction(x))
