"""Closed-form bound tables for extremal vertex and facet counts.

H0(n, d) is the minimum over n-point general-position sets in dimension d of
the best number of hull vertices reachable by a permissible projective
transformation; Hd1(n, d) is the facet-count analogue.  The tables below
apply the known piecewise clauses.  Inputs no clause covers come back with
kind "open" rather than an invented value.

r_bound(d, n) tabulates the maximum number of induced minimal Radon
partitions over red/blue colorings, minimized over configurations; by Gale
duality it equals Hd1 in the dual dimension n - d - 2, and the table clauses
are applied verbatim with a consistency note whenever the printed guard
disagrees with direct substitution into the Hd1 table.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

EXACT = "exact"
UPPER = "upper"
LOWER = "lower"
RANGE = "range"
OPEN = "open"


@dataclass(frozen=True)
class BoundValue:
    """A bound with provenance: which clause produced it.

    kind is one of exact / upper / lower / range / open; exact carries one
    value in both fields, range carries lower <= upper, a one-sided bound
    leaves the other field None.
    """

    kind: str
    lower: int | None
    upper: int | None
    clause: str
    note: str | None = None

    def __post_init__(self) -> None:
        if self.kind not in (EXACT, UPPER, LOWER, RANGE, OPEN):
            raise ValueError(f"unknown bound kind {self.kind!r}")
        if self.kind == EXACT and self.lower != self.upper:
            raise ValueError("exact bound must carry one value")
        if self.kind == RANGE and (self.lower is None or self.upper is None or self.lower > self.upper):
            raise ValueError("range bound needs lower <= upper")

    @property
    def value(self) -> int:
        """The single value of an exact or one-sided bound."""
        if self.kind == EXACT:
            assert self.upper is not None
            return self.upper
        if self.kind == UPPER and self.upper is not None:
            return self.upper
        if self.kind == LOWER and self.lower is not None:
            return self.lower
        raise ValueError(f"{self.kind} bound has no single value")


def _exact(v: int, clause: str) -> BoundValue:
    return BoundValue(EXACT, v, v, clause)


def _upper(v: int, clause: str) -> BoundValue:
    return BoundValue(UPPER, None, v, clause)


def _open(clause: str = "open") -> BoundValue:
    return BoundValue(OPEN, None, None, clause)


def cyclic_facets(n: int, d: int) -> int:
    """Number of facets of the d-dimensional cyclic polytope on n vertices.

    Uses the standard closed form; the test suite checks it against a Gale
    evenness enumeration oracle.
    """
    if d < 1 or n <= d:
        raise ValueError(f"cyclic polytope needs n >= d + 1 >= 2, got n={n} d={d}")
    if d % 2 == 0:
        m = d // 2
        return comb(n - m, m) + comb(n - m - 1, m - 1)
    m = (d - 1) // 2
    return 2 * comb(n - m - 1, m)


def stacked_facets(n: int, d: int) -> int:
    """Number of facets of a d-dimensional stacked polytope on n vertices."""
    if d < 2 or n <= d:
        raise ValueError(f"stacked polytope needs n >= d + 1, d >= 2, got n={n} d={d}")
    return n * (d - 1) - (d + 1) * (d - 2)


def _upper_cascade(n: int, d: int) -> tuple[int, str] | None:
    """Strongest matching clause of the d >= 4 cascade as (shift, clause).

    The clauses are nested, so the last matching one (largest shift) wins:
    H0 loses `shift` vertices, and the facet table replaces n by n - shift.
    """
    best: tuple[int, str] | None = None
    threshold = 2 * d + -(-(d + 1) // 2)
    if n >= threshold:
        best = (1, "n-1")
    if n >= threshold + 1:
        best = (2, "n-2")
    if n >= 3 * d + 1:
        l = (n - 2 * d - 3) // (d - 2)
        best = (l + 2, f"l={l}")
    return best


def h0_bound(n: int, d: int) -> BoundValue:
    """Piecewise bound for H0(n, d), clauses applied in table order with the
    d >= 4 upper clauses refining each other (the strongest one is kept)."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    if d == 1 and n >= 2:
        return _exact(2, "d=1")
    if d == 2 and n >= 5:
        return _exact(5, "d=2,n>=5")
    if d == 3 and n >= 7:
        return _upper(7, "d=3")
    if d >= 2 and n <= 2 * d + 1:
        return _exact(n, "n<=2d+1")
    if d >= 4:
        hit = _upper_cascade(n, d)
        if hit is not None:
            shift, clause = hit
            return _upper(n - shift, clause)
    return _open()


def hd1_bound(n: int, d: int) -> BoundValue:
    """Piecewise bound for Hd1(n, d): cyclic-polytope facet counts above,
    the stacked count below where granted (n <= 2d+1)."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    if d == 1 and n >= 2:
        return _exact(2, "d=1")
    if d == 2 and n >= 5:
        return _exact(5, "d=2,n>=5")

    upper: tuple[int, str] | None = None
    if d == 3 and n >= 7:
        upper = (10, "d=3")
    elif d >= 2 and n <= 2 * d + 1 and n >= d + 1:
        upper = (cyclic_facets(n, d), "cyclic(n)")
    elif d >= 4:
        hit = _upper_cascade(n, d)
        if hit is not None:
            shift, _ = hit
            upper = (cyclic_facets(n - shift, d), f"cyclic(n-{shift})")

    lower: tuple[int, str] | None = None
    if d >= 2 and d + 1 <= n <= 2 * d + 1:
        lower = (stacked_facets(n, d), "stacked(n)")

    if upper and lower:
        if upper[0] == lower[0]:
            return BoundValue(EXACT, upper[0], upper[0], f"{lower[1]}={upper[1]}")
        return BoundValue(RANGE, lower[0], upper[0], f"{lower[1]}..{upper[1]}")
    if upper:
        return _upper(upper[0], upper[1])
    if lower:
        return BoundValue(LOWER, lower[0], None, lower[1])
    return _open()


def r_bound(d: int, n: int) -> BoundValue:
    """Table of bounds for the maximum induced minimal-Radon-partition count.

    Requires n >= d + 2.  The printed guards are applied verbatim; when the
    direct substitution r(d, n) = Hd1(n, n-d-2) disagrees with the verbatim
    clause, the discrepancy is recorded in the note field.
    """
    if d < 1:
        raise ValueError("need d >= 1")
    if n < d + 2:
        raise ValueError(f"need n >= d + 2, got n={n} d={d}")

    q = n - d - 2  # dual dimension
    result: BoundValue
    if n == d + 2:
        result = _exact(1, "n=d+2")
    elif n == d + 3:
        result = _exact(2, "n=d+3")
    elif n == d + 4:
        result = _exact(5, "n=d+4")
    elif n == d + 5:
        result = _upper(10, "n=d+5")
    else:
        candidates: list[tuple[int, str]] = []
        if n >= 2 * d + 3:
            candidates.append((cyclic_facets(n, q), "n>=2d+3"))
        if 3 * n <= 5 * d + 8 and n - 1 >= q + 1:
            candidates.append((cyclic_facets(n - 1, q), "n<=(5d+8)/3"))
        if 3 * n <= 5 * d + 6 and n - 2 >= q + 1:
            candidates.append((cyclic_facets(n - 2, q), "n<=(5d+6)/3"))
        for l in range(1, d):
            # d+4 + (d-3)/(l+2) < n <= d+4 + (d-1)/(l+1), exact rational guards
            if (n - d - 4) * (l + 2) > d - 3 and (n - d - 4) * (l + 1) <= d - 1:
                if n - l - 2 >= q + 1:
                    candidates.append((cyclic_facets(n - l - 2, q), f"l={l}"))
        if not candidates:
            return _open()
        value, clause = min(candidates)
        result = _upper(value, clause)

    note = _duality_note(result, n, q)
    if note:
        return BoundValue(result.kind, result.lower, result.upper, result.clause, note)
    return result


def _duality_note(result: BoundValue, n: int, q: int) -> str | None:
    if q < 1:
        return None
    direct = hd1_bound(n, q)
    if direct.kind in (OPEN, LOWER):
        return None
    if result.kind == EXACT and direct.kind == EXACT and result.upper != direct.upper:
        return f"duality Hd1(n={n}, d={q}) gives exact {direct.upper}"
    if result.kind == UPPER and direct.upper is not None and direct.upper != result.upper:
        return f"duality Hd1(n={n}, d={q}) gives {direct.kind} {direct.upper}"
    return None
