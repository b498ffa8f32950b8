"""Truncated formal power series with exact integer coefficients.

Series is univariate in x; BiSeries is bivariate in x and a marking
variable y.  Both are plain coefficient containers: index n (and i) holds
the coefficient of x^n (x^n y^i).  All arithmetic truncates to the stated
order, and nothing here ever leaves integer arithmetic; generating
functions given by quadratic equations are obtained by fixed-point
iteration, not by radicals.

The catalogued functional equations are stored as data: a small expression
tree over the operations {+, *, integer constants, x, y, the unknown S,
geometric inverse 1/(1 - t)}.  solve_fixed_point evaluates the right-hand
side repeatedly starting from S = 1; every catalogued equation multiplies
each occurrence of S by at least one power of x, so each sweep fixes at
least one more coefficient and `order` sweeps reach a fixed point.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
import json


class SeriesError(ValueError):
    pass


class OrderExceeded(SeriesError):
    def __init__(self, wanted: int, order: int):
        super().__init__(f"coefficient {wanted} beyond truncation order {order}")
        self.wanted = wanted
        self.order = order


class NonzeroConstantTerm(SeriesError):
    pass


class NoContraction(SeriesError):
    pass


@dataclass(frozen=True)
class Series:
    """Coefficients of x^0 .. x^(order-1)."""

    coeffs: tuple
    order: int

    @staticmethod
    def from_list(values, order: int | None = None) -> "Series":
        values = list(values)
        if order is None:
            order = len(values)
        values = (values + [0] * order)[:order]
        return Series(tuple(values), order)

    @staticmethod
    def const(c: int, order: int) -> "Series":
        return Series.from_list([c], order)

    @staticmethod
    def x(order: int) -> "Series":
        return Series.from_list([0, 1], order)

    def coeff(self, n: int) -> int:
        if n < 0:
            return 0
        if n >= self.order:
            raise OrderExceeded(n, self.order)
        return self.coeffs[n]

    def __add__(self, other: "Series") -> "Series":
        order = min(self.order, other.order)
        return Series(tuple(self.coeffs[n] + other.coeffs[n] for n in range(order)), order)

    def __sub__(self, other: "Series") -> "Series":
        order = min(self.order, other.order)
        return Series(tuple(self.coeffs[n] - other.coeffs[n] for n in range(order)), order)

    def __mul__(self, other: "Series") -> "Series":
        order = min(self.order, other.order)
        out = [0] * order
        for n, a in enumerate(self.coeffs[:order]):
            if not a:
                continue
            for m, b in enumerate(other.coeffs[: order - n]):
                if b:
                    out[n + m] += a * b
        return Series(tuple(out), order)

    def scale(self, c: int) -> "Series":
        return Series(tuple(c * a for a in self.coeffs), self.order)

    def pow(self, k: int) -> "Series":
        result = Series.const(1, self.order)
        for _ in range(k):
            result = result * self
        return result

    def valuation_of_difference(self, other: "Series") -> int:
        order = min(self.order, other.order)
        for n in range(order):
            if self.coeffs[n] != other.coeffs[n]:
                return n
        return order

    def geometric_inverse(self) -> "Series":
        """1 / (1 - self); requires zero constant term."""
        if self.coeffs and self.coeffs[0] != 0:
            raise NonzeroConstantTerm("geometric inverse needs zero constant term")
        result = Series.const(1, self.order)
        one = Series.const(1, self.order)
        for _ in range(self.order):
            result = one + self * result
        return result

    def compose(self, inner: "Series") -> "Series":
        """self(inner); inner must have zero constant term."""
        if inner.coeffs and inner.coeffs[0] != 0:
            raise NonzeroConstantTerm("composition needs zero constant term")
        order = min(self.order, inner.order)
        result = Series.const(0, order)
        for a in reversed(self.coeffs[:order]):
            result = result * inner + Series.const(a, order)
        return result

    def dumps(self) -> str:
        return json.dumps([str(c) for c in self.coeffs])


@dataclass(frozen=True)
class BiSeries:
    """rows[n][i] holds the coefficient of x^n y^i."""

    rows: tuple
    x_order: int
    y_order: int

    @staticmethod
    def const(c: int, x_order: int, y_order: int) -> "BiSeries":
        rows = [[0] * y_order for _ in range(x_order)]
        if x_order and y_order:
            rows[0][0] = c
        return BiSeries(tuple(tuple(r) for r in rows), x_order, y_order)

    @staticmethod
    def x(x_order: int, y_order: int) -> "BiSeries":
        rows = [[0] * y_order for _ in range(x_order)]
        if x_order > 1 and y_order:
            rows[1][0] = 1
        return BiSeries(tuple(tuple(r) for r in rows), x_order, y_order)

    @staticmethod
    def y(x_order: int, y_order: int) -> "BiSeries":
        rows = [[0] * y_order for _ in range(x_order)]
        if x_order and y_order > 1:
            rows[0][1] = 1
        return BiSeries(tuple(tuple(r) for r in rows), x_order, y_order)

    def coeff(self, n: int, i: int) -> int:
        if n < 0 or i < 0:
            return 0
        if n >= self.x_order:
            raise OrderExceeded(n, self.x_order)
        if i >= self.y_order:
            raise OrderExceeded(i, self.y_order)
        return self.rows[n][i]

    def x_valuation_of_difference(self, other: "BiSeries") -> int:
        order = min(self.x_order, other.x_order)
        for n in range(order):
            if self.rows[n] != other.rows[n]:
                return n
        return order

    def __add__(self, other: "BiSeries") -> "BiSeries":
        xo = min(self.x_order, other.x_order)
        yo = min(self.y_order, other.y_order)
        rows = tuple(
            tuple(self.rows[n][i] + other.rows[n][i] for i in range(yo)) for n in range(xo)
        )
        return BiSeries(rows, xo, yo)

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        xo = min(self.x_order, other.x_order)
        yo = min(self.y_order, other.y_order)
        rows = tuple(
            tuple(self.rows[n][i] - other.rows[n][i] for i in range(yo)) for n in range(xo)
        )
        return BiSeries(rows, xo, yo)

    def __mul__(self, other: "BiSeries") -> "BiSeries":
        xo = min(self.x_order, other.x_order)
        yo = min(self.y_order, other.y_order)
        out = [[0] * yo for _ in range(xo)]
        for n in range(xo):
            row = self.rows[n]
            for i in range(yo):
                a = row[i]
                if not a:
                    continue
                for m in range(xo - n):
                    orow = other.rows[m]
                    for j in range(yo - i):
                        b = orow[j]
                        if b:
                            out[n + m][i + j] += a * b
        return BiSeries(tuple(tuple(r) for r in out), xo, yo)

    def geometric_inverse(self) -> "BiSeries":
        """1 / (1 - self); requires the whole x^0 row to vanish."""
        if self.x_order and any(self.rows[0]):
            raise NonzeroConstantTerm("geometric inverse needs zero x^0 row")
        result = BiSeries.const(1, self.x_order, self.y_order)
        one = BiSeries.const(1, self.x_order, self.y_order)
        for _ in range(self.x_order):
            result = one + self * result
        return result

    def specialize_y(self, value: int) -> Series:
        """Substitute an integer for y, leaving a univariate series in x."""
        out = []
        for row in self.rows:
            total = 0
            power = 1
            for c in row:
                total += c * power
                power *= value
            out.append(total)
        return Series(tuple(out), self.x_order)

    def dumps(self) -> str:
        return json.dumps([[str(c) for c in row] for row in self.rows])


# ---------------------------------------------------------------------------
# Functional-equation catalog.
#
# Expression nodes: ("int", c), ("x",), ("y",), ("s",), ("+", *terms),
# ("*", *factors), ("geom", t) for 1/(1 - t).

X = ("x",)
Y = ("y",)
S = ("s",)


def _int(c):
    return ("int", c)


def _add(*terms):
    return ("+",) + terms


def _mul(*factors):
    return ("*",) + factors


def _geom(t):
    return ("geom", t)


ONE = _int(1)
ONE_PLUS_X = _add(ONE, X)

# Weighted path count: S = 1 + a x S + b x S^2 + c x^2 S^2.
def _g_equation(a: int, b: int, c: int):
    return _add(
        ONE,
        _mul(_int(a), X, S),
        _mul(_int(b), X, S, S),
        _mul(_int(c), X, X, S, S),
    )


# Marking variants of the same first-return decomposition: y marks one step
# kind (the u equation marks the opening step of both closed arches).
_G_MARKED = {
    "h": _add(ONE, _mul(X, Y, S), _mul(X, S, S), _mul(X, X, S, S)),
    "v": _add(ONE, _mul(X, S), _mul(X, Y, S, S), _mul(X, X, S, S)),
    "d": _add(ONE, _mul(X, S), _mul(X, S, S), _mul(X, X, Y, S, S)),
    "u": _add(ONE, _mul(X, S), _mul(X, Y, S, S), _mul(X, X, Y, S, S)),
}

# Adjacent-pair equations; y marks occurrences of the pair.
PAIR_EQUATIONS = {
    "ud": _add(
        ONE,
        _mul(X, _add(ONE, _mul(_int(-1), X), _mul(X, Y)), S),
        _mul(X, ONE_PLUS_X, S, S),
    ),
    "uh": _add(
        ONE,
        _mul(X, S),
        _mul(X, ONE_PLUS_X, _add(ONE, _mul(_int(-1), X), _mul(X, Y)), S, S),
    ),
    "uu": _mul(
        _add(ONE, _mul(X, S)),
        _add(ONE, _mul(X, ONE_PLUS_X, S, _geom(_mul(X, ONE_PLUS_X, Y, S)))),
    ),
    "hh": _mul(
        _add(ONE, _mul(X, _geom(_mul(X, Y)))),
        _add(ONE, _mul(X, ONE_PLUS_X, S, S)),
    ),
    "hd": _add(
        ONE,
        _mul(X, S),
        _mul(X, _add(ONE, X, _mul(_int(-1), X, X), _mul(X, X, Y)), S, S),
    ),
    "vu": _add(
        ONE,
        _mul(X, S),
        _mul(X, X, S, S, _geom(_mul(X, Y, S))),
        _mul(X, S, _add(ONE, _mul(X, S)), _geom(_mul(X, Y, S))),
    ),
    "vv": _mul(
        _add(ONE, _mul(X, S), _mul(X, X, S, S)),
        _add(ONE, _mul(X, S, _geom(_mul(X, Y, S)))),
    ),
    "du": _add(
        ONE,
        _mul(X, S),
        _mul(X, S, S, _geom(_mul(X, X, Y, S))),
        _mul(X, X, S, _add(ONE, _mul(X, S)), _geom(_mul(X, X, Y, S))),
    ),
    "dd": _add(
        ONE,
        _mul(X, S),
        _mul(X, S, S),
        _mul(X, X, S, _add(ONE, _mul(X, S), _mul(X, S, S)), _geom(_mul(X, X, Y, S))),
    ),
    "dv": _add(
        ONE,
        _mul(X, S),
        _mul(X, X, S, S),
        _mul(X, S, _add(ONE, _mul(X, S), _mul(Y, X, X, S, S)), _geom(_mul(X, S))),
    ),
}


def equation(name: str, *params):
    """Look up a catalogued right-hand side by name.

    Names: "G" (params a, b, c), "G^h" / "G^v" / "G^d" / "G^u" (marked
    weight), or "L^zz" for an adjacent pair zz.
    """
    if name == "G":
        a, b, c = params if params else (1, 1, 1)
        return _g_equation(a, b, c)
    if name.startswith("G^"):
        key = name[2:]
        if key in _G_MARKED:
            return _G_MARKED[key]
    if name.startswith("L^"):
        key = name[2:]
        if key in PAIR_EQUATIONS:
            return PAIR_EQUATIONS[key]
    raise SeriesError(f"unknown equation {name!r}")


def _eval(node, s, ctx):
    kind = node[0]
    if kind == "int":
        return ctx["const"](node[1])
    if kind == "x":
        return ctx["x"]
    if kind == "y":
        return ctx["y"]
    if kind == "s":
        return s
    if kind == "+":
        acc = _eval(node[1], s, ctx)
        for term in node[2:]:
            acc = acc + _eval(term, s, ctx)
        return acc
    if kind == "*":
        acc = _eval(node[1], s, ctx)
        for term in node[2:]:
            acc = acc * _eval(term, s, ctx)
        return acc
    if kind == "geom":
        return _eval(node[1], s, ctx).geometric_inverse()
    raise SeriesError(f"bad expression node {node!r}")


def _uses_y(node) -> bool:
    if node[0] == "y":
        return True
    return any(_uses_y(t) for t in node[1:] if isinstance(t, tuple))


def solve_fixed_point(rhs, order: int, y_order: int | None = None):
    """Iterate S <- rhs(S) from S = 1 until stable to the truncation order.

    Returns a Series for equations without y, else a BiSeries.  Raises
    NoContraction if a sweep fails to extend coefficient agreement.
    """
    if isinstance(rhs, str):
        rhs = equation(rhs)
    bivariate = _uses_y(rhs)
    if bivariate:
        yo = order if y_order is None else y_order
        ctx = {
            "const": lambda c: BiSeries.const(c, order, yo),
            "x": BiSeries.x(order, yo),
            "y": BiSeries.y(order, yo),
        }
        current = BiSeries.const(1, order, yo)
        diff_valuation = BiSeries.x_valuation_of_difference
    else:
        ctx = {
            "const": lambda c: Series.const(c, order),
            "x": Series.x(order),
            "y": None,
        }
        current = Series.const(1, order)
        diff_valuation = Series.valuation_of_difference
    agreed = 0
    for _ in range(order + 1):
        nxt = _eval(rhs, current, ctx)
        v = diff_valuation(nxt, current)
        if v >= order:
            if bivariate:
                _check_y_degrees(nxt)
            return nxt
        if v < agreed:
            raise NoContraction(f"agreement fell back to x^{v}")
        agreed = v + 1
        current = nxt
    raise NoContraction(f"no fixed point within {order + 1} sweeps")


def _check_y_degrees(b: BiSeries) -> None:
    # The y-degree of the x^n coefficient can never exceed n.
    for n in range(b.x_order):
        for i in range(n + 1, b.y_order):
            assert b.rows[n][i] == 0, (n, i)


def residual_is_zero(rhs, solution) -> bool:
    """True if solution satisfies S = rhs(S) to its truncation order."""
    if isinstance(rhs, str):
        rhs = equation(rhs)
    if isinstance(solution, BiSeries):
        ctx = {
            "const": lambda c: BiSeries.const(c, solution.x_order, solution.y_order),
            "x": BiSeries.x(solution.x_order, solution.y_order),
            "y": BiSeries.y(solution.x_order, solution.y_order),
        }
    else:
        ctx = {
            "const": lambda c: Series.const(c, solution.order),
            "x": Series.x(solution.order),
            "y": None,
        }
    return _eval(rhs, solution, ctx) == solution


# ---------------------------------------------------------------------------
# Named series


@lru_cache(maxsize=None)
def g_series(order: int, a: int = 1, b: int = 1, c: int = 1) -> Series:
    return solve_fixed_point(_g_equation(a, b, c), order)


@lru_cache(maxsize=None)
def g_marked_series(step: str, x_order: int, y_order: int) -> BiSeries:
    return solve_fixed_point(_G_MARKED[step], x_order, y_order)


@lru_cache(maxsize=None)
def pair_series(pair: str, x_order: int, y_order: int) -> BiSeries:
    if pair not in PAIR_EQUATIONS:
        raise SeriesError(f"unknown pair {pair!r}")
    return solve_fixed_point(PAIR_EQUATIONS[pair], x_order, y_order)


@lru_cache(maxsize=None)
def catalan_series(order: int) -> Series:
    # C = 1 + x C^2
    return solve_fixed_point(_add(ONE, _mul(X, S, S)), order)


@lru_cache(maxsize=None)
def motzkin_series(order: int) -> Series:
    # M = 1 + x M + x^2 M^2
    return solve_fixed_point(_add(ONE, _mul(X, S), _mul(X, X, S, S)), order)


@lru_cache(maxsize=None)
def large_schroder_series(order: int) -> Series:
    # R = 1 + x R + x R^2
    return solve_fixed_point(_add(ONE, _mul(X, S), _mul(X, S, S)), order)


@lru_cache(maxsize=None)
def little_schroder_series(order: int) -> Series:
    big = large_schroder_series(order)
    halved = [1] + [c // 2 for c in big.coeffs[1:]]
    assert all(c % 2 == 0 for c in big.coeffs[1:])
    return Series(tuple(halved), order)
