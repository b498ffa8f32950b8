"""Riordan arrays: infinite lower-triangular matrices (d(x), h(x)).

Entry (n, i) is the coefficient of x^n in d(x) h(x)^i.  The generating
pair must be normalized: d(0) = 1 and h(0) = 0, which makes column i start
at row i and puts 1 in the top-left corner.

apply() is the fundamental theorem of Riordan arrays: multiplying the
matrix against the coefficient column of g(x) produces the coefficient
column of d(x) g(h(x)).  The named arrays bundled here describe level
statistics of G-Motzkin paths (columns of u, v, h step counts by level and
the return-step distribution) plus two classical Catalan-based arrays for
ballot numbers and point counts of Dyck paths.
"""

from __future__ import annotations

from functools import lru_cache

from gmotzkin.series import (
    OrderExceeded,
    Series,
    SeriesError,
    catalan_series,
    g_series,
)

NAMED = ("alpha", "beta", "mu", "r", "ballot", "point")
DEFAULT_ORDER = 32


class BadNormalization(SeriesError):
    pass


class RiordanArray:
    """Lower-triangular array generated by a normalized series pair."""

    def __init__(self, d: Series, h: Series):
        if d.coeff(0) != 1:
            raise BadNormalization(f"d(0) must be 1, got {d.coeff(0)}")
        if h.coeff(0) != 0:
            raise BadNormalization(f"h(0) must be 0, got {h.coeff(0)}")
        self.d = d
        self.h = h
        self.order = min(d.order, h.order)
        self._columns = [d]

    def _column(self, i: int) -> Series:
        while len(self._columns) <= i:
            self._columns.append(self._columns[-1] * self.h)
        return self._columns[i]

    def entry(self, n: int, i: int) -> int:
        if n < 0 or i < 0 or i > n:
            return 0
        if n >= self.order:
            raise OrderExceeded(n, self.order)
        return self._column(i).coeff(n)

    def row(self, n: int) -> list:
        return [self.entry(n, i) for i in range(n + 1)]

    def apply(self, g: Series) -> Series:
        """Matrix-vector product: the series d(x) g(h(x))."""
        return self.d * g.compose(self.h)

    def to_csv(self, rows: int) -> str:
        lines = ["n,i,value"]
        for n in range(rows):
            for i in range(n + 1):
                lines.append(f"{n},{i},{self.entry(n, i)}")
        return "\n".join(lines) + "\n"


@lru_cache(maxsize=None)
def named_array(name: str, order: int = DEFAULT_ORDER) -> RiordanArray:
    """Build one of the catalogued arrays at the given truncation order.

    alpha: u steps at level i+1 over paths of x-length n+1.
    beta:  v steps at level i over paths of x-length n+1.
    mu:    h steps at level i over paths of x-length n+1.
    r:     paths of x-length n with i return steps.
    ballot, point: Catalan-pair arrays for Dyck path statistics.
    """
    one = Series.const(1, order)
    x = Series.x(order)
    if name in ("alpha", "beta", "mu", "r"):
        g = g_series(order)
        g2 = g * g
        lifted = (one + x) * g2
        if name == "alpha":
            return RiordanArray(lifted * g, x * lifted)
        if name == "beta":
            return RiordanArray(g2 * g, x * lifted)
        if name == "mu":
            return RiordanArray(g2, x * lifted)
        inv = x.geometric_inverse()
        return RiordanArray(inv, x * (one + x) * g * inv)
    if name in ("ballot", "point"):
        c = catalan_series(order)
        c2 = c * c
        if name == "ballot":
            return RiordanArray(c2 * c, x * c2)
        return RiordanArray(c2, x * c2)
    raise SeriesError(f"unknown array {name!r}; valid: {', '.join(NAMED)}")
