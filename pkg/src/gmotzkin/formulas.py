"""Closed-form counting formulas for the path statistics.

Everything is exact big-integer arithmetic.  Formulas with a 1/(n+1)-style
prefactor divide through `exact_div`, which asserts divisibility, so a wrong
transcription fails loudly instead of rounding.

Binomial convention: binom(n, k) = 0 for k < 0, and for 0 <= n < k.  A
negative upper index is expanded as binom(-m, k) = (-1)^k binom(m+k-1, k),
so binom(k+i-1, i) is 1 when k = i = 0 and 0 when k = 0, i >= 1.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

V_PAIRS = ("ud", "uh", "uu", "hh", "hd", "vu", "vv", "du", "dd", "dv")


class FormulaError(ValueError):
    pass


class UnsupportedPair(FormulaError):
    """No closed form exists for this adjacent-pair statistic."""

    def __init__(self, pair: str):
        self.pair = pair
        super().__init__(f"no closed form for pair {pair!r}")


def binomial(n: int, k: int) -> int:
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k) if k <= n else 0
    return (-1) ** (k % 2) * math.comb(-n + k - 1, k)


def exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    assert r == 0, f"{a} not divisible by {b}"
    return q


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    return exact_div(math.comb(2 * n, n), n + 1)


def catalan_power_coeff(i: int, j: int) -> int:
    """Coefficient of x^j in (x C(x))^i, C the Catalan series; 1 at i = j = 0."""
    if i == 0:
        return 1 if j == 0 else 0
    if j < i:
        return 0
    return exact_div(i * binomial(2 * j - i, j), 2 * j - i)


# ---------------------------------------------------------------------------
# Number families


def motzkin_triangle(n: int, k: int) -> int:
    return binomial(n, 2 * k) * catalan(k)


def schroder_triangle(n: int, k: int) -> int:
    return binomial(n + k, 2 * k) * catalan(k)


def large_schroder(n: int) -> int:
    return sum(schroder_triangle(n, k) for k in range(n + 1))


def little_schroder(n: int) -> int:
    if n == 0:
        return 1
    return exact_div(large_schroder(n), 2)


def ballot(n: int, i: int) -> int:
    """Triangle with entries (2i+3)/(2n+3) binom(2n+3, n-i)."""
    if i < 0 or i > n:
        return 0
    return exact_div((2 * i + 3) * binomial(2 * n + 3, n - i), 2 * n + 3)


def point_triangle(n: int, i: int) -> int:
    """Triangle with entries (i+1)/(n+1) binom(2n+2, n-i).

    Counts lattice points at ordinate i over all Dyck paths of semilength n.
    """
    if i < 0 or i > n:
        return 0
    return exact_div((i + 1) * binomial(2 * n + 2, n - i), n + 1)


def gnk(n: int, k: int) -> int:
    """Triangle with entries binom(n+1, k) binom(3n-3k+1, n-3k) / (n+1)."""
    return exact_div(binomial(n + 1, k) * binomial(3 * n - 3 * k + 1, n - 3 * k), n + 1)


def narayana(n: int, k: int) -> int:
    if n == 0:
        return 1 if k == 0 else 0
    if k < 1 or k > n:
        return 0
    return exact_div(binomial(n, k - 1) * binomial(n, k), n)


def narayana_poly(n: int, y: Fraction) -> Fraction:
    """Value of the Narayana polynomial N_n at a rational point."""
    y = Fraction(y)
    if n == 0:
        return Fraction(1)
    return sum(narayana(n, k) * y**k for k in range(1, n + 1))


def fuss_catalan3(n: int) -> int:
    return exact_div(binomial(3 * n + 1, n), 3 * n + 1)


FAMILIES = {
    "catalan": lambda n, k: catalan(n),
    "motzkin_triangle": motzkin_triangle,
    "schroder_triangle": schroder_triangle,
    "little_schroder": lambda n, k: little_schroder(n),
    "ballot": ballot,
    "point_triangle": point_triangle,
    "gnk": gnk,
    "narayana": narayana,
    "fuss_catalan3": lambda n, k: fuss_catalan3(n),
}


def family(kind: str, n: int, k: int = 0) -> int:
    try:
        fn = FAMILIES[kind]
    except KeyError:
        raise FormulaError(f"unknown family {kind!r}; valid: {sorted(FAMILIES)}") from None
    return fn(n, k)


# ---------------------------------------------------------------------------
# Weighted path counts G_n(a, b, c): h, v, d steps weighted a, b, c.


def g_count(n: int, a: int = 1, b: int = 1, c: int = 1, variant: str = "A") -> int:
    if variant == "A":
        total = 0
        for k in range(n + 1):
            ck = catalan(k)
            for j in range(min(k, n - k) + 1):
                f = binomial(k, j) * binomial(n + k - j, 2 * k)
                if f:
                    total += f * ck * a ** (n - k - j) * b ** (k - j) * c**j
        return total
    if variant == "B1":
        total = 0
        for k in range(n // 2 + 1):
            for j in range(n - 2 * k + 1):
                f = (
                    binomial(n + 1, k)
                    * binomial(n + 1 - k, j)
                    * binomial(2 * n - 2 * k - j, n - 2 * k - j)
                )
                if f:
                    total += f * a**j * b ** (n - 2 * k - j) * c**k
        return exact_div(total, n + 1)
    if variant == "B2":
        total = 0
        for k in range(n + 1):
            for j in range((n - k) // 2 + 1):
                f = (
                    binomial(n + 1, k)
                    * binomial(n + 1 - k, j)
                    * binomial(2 * n - k - 2 * j, n - k - 2 * j)
                )
                if f:
                    total += f * a**k * b ** (n - k - 2 * j) * c**j
        return exact_div(total, n + 1)
    if variant == "B3":
        total = 0
        for k in range(n + 1):
            for j in range(min(k, n - k) + 1):
                f = binomial(n + 1, k) * binomial(k, j) * binomial(2 * n - k - j, n - k - j)
                if f:
                    total += f * a ** (k - j) * b ** (n - k - j) * c**j
        return exact_div(total, n + 1)
    raise FormulaError(f"unknown variant {variant!r}; valid: A, B1, B2, B3")


def g_simple(n: int) -> int:
    """Unweighted count via the single alternating sum."""
    total = sum(
        (-1) ** (k % 2) * binomial(n + 1, k) * binomial(3 * n - 3 * k + 1, n - 3 * k)
        for k in range(n // 3 + 1)
    )
    return exact_div(total, n + 1)


# ---------------------------------------------------------------------------
# Single-step statistics: paths of x-length n with i steps of one kind.


def v_count(n: int, i: int, variant: str = "main") -> int:
    if variant == "main":
        return sum(binomial(k, i) * binomial(n + i, 2 * k) * catalan(k) for k in range(i, n + 1))
    if variant == "alt":
        inner = sum(binomial(n + 1, k) * binomial(k, n - k - i) for k in range(n - i + 1))
        return exact_div(binomial(n + i, i) * inner, n + 1)
    raise FormulaError(f"unknown variant {variant!r}; valid: main, alt")


def h_count(n: int, i: int, variant: str = "main") -> int:
    if variant == "main":
        return sum(
            binomial(2 * k + i, 2 * k) * binomial(k, n - i - k) * catalan(k)
            for k in range((n - i + 1) // 2, n - i + 1)
        )
    if variant == "alt":
        inner = sum(
            binomial(n + 1 - i, j) * binomial(2 * n - i - 2 * j, n - i - 2 * j)
            for j in range((n - i) // 2 + 1)
        )
        return exact_div(binomial(n + 1, i) * inner, n + 1)
    raise FormulaError(f"unknown variant {variant!r}; valid: main, alt")


def d_count(n: int, i: int, variant: str = "main") -> int:
    if variant == "main":
        return sum(
            binomial(k, i) * binomial(n - i + k, 2 * k) * catalan(k) for k in range(i, n - i + 1)
        )
    if variant == "alt":
        inner = sum(
            binomial(n + 1 - i, k - i) * binomial(2 * n - i - k, n - i - k)
            for k in range(i, n - i + 1)
        )
        return exact_div(binomial(n + 1, i) * inner, n + 1)
    raise FormulaError(f"unknown variant {variant!r}; valid: main, alt")


def u_count(n: int, i: int, variant: str = "main") -> int:
    if variant == "main":
        return sum(binomial(i, k) * binomial(n + k, 2 * i) * catalan(i) for k in range(i + 1))
    if variant == "alt":
        inner = sum(binomial(n - i, j) * binomial(n + i - j, i - j) for j in range(i + 1))
        return exact_div(binomial(n + 1, i + 1) * inner, n + 1)
    raise FormulaError(f"unknown variant {variant!r}; valid: main, alt")


# ---------------------------------------------------------------------------
# Level statistics.  alpha/beta/mu are aggregate step counts at a fixed level
# over all paths of a fixed x-length; r_return counts paths by return steps.


def _riordan_entry(name: str, n: int, i: int) -> int:
    from gmotzkin import riordan

    return riordan.named_array(name, order=max(n + 1, 8)).entry(n, i)


def alpha_count(n: int, i: int, variant: str = "sum") -> int:
    """Total u steps at level i+1 over paths of x-length n+1."""
    if variant == "sum":
        total = 0
        for j in range(i, n + 1):
            inner = sum(
                binomial(j + 1, k) * binomial(n + j - k + 2, n - j - k) for k in range(n - j + 1)
            )
            total += ballot(j, i) * inner
        return total
    if variant == "riordan":
        return _riordan_entry("alpha", n, i)
    raise FormulaError(f"unknown variant {variant!r}; valid: sum, riordan")


def beta_count(n: int, i: int, variant: str = "sum") -> int:
    """Total v steps at level i over paths of x-length n+1."""
    if variant == "sum":
        total = 0
        for j in range(i, n + 1):
            inner = sum(
                binomial(j, k) * binomial(n + j + 2 - k, n - j - k) for k in range(j + 1)
            )
            total += ballot(j, i) * inner
        return total
    if variant == "riordan":
        return _riordan_entry("beta", n, i)
    raise FormulaError(f"unknown variant {variant!r}; valid: sum, riordan")


def mu_count(n: int, i: int, variant: str = "sum") -> int:
    """Total h steps at level i over paths of x-length n+1."""
    if variant == "sum":
        total = 0
        for j in range(i, n + 1):
            inner = sum(
                binomial(j, k) * binomial(n + j - k + 1, n - j - k) for k in range(n - j + 1)
            )
            total += point_triangle(j, i) * inner
        return total
    if variant == "riordan":
        return _riordan_entry("mu", n, i)
    raise FormulaError(f"unknown variant {variant!r}; valid: sum, riordan")


def r_return_count(n: int, i: int, variant: str = "sum") -> int:
    """Paths of x-length n with exactly i return steps."""
    if variant == "sum":
        total = 0
        for j in range(i, n + 1):
            c = catalan_power_coeff(i, j)
            if not c:
                continue
            inner = sum(
                binomial(j, k) * binomial(n + j - k, n - j - k) for k in range(n - j + 1)
            )
            total += c * inner
        return total
    if variant == "riordan":
        return _riordan_entry("r", n, i)
    raise FormulaError(f"unknown variant {variant!r}; valid: sum, riordan")


# ---------------------------------------------------------------------------
# Adjacent-pair statistics: paths of x-length n with i factors z1 z2.


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def _l_ud(n: int, i: int) -> int:
    total = 0
    for k in range(n - 2 * i + 1):
        ck = catalan(k)
        for j in range((n - k - 2 * i) // 3 + 1):
            total += (
                _sign(j)
                * binomial(2 * k + i, i)
                * binomial(2 * k + i + j, j)
                * binomial(3 * k + i + 1, n - k - 2 * i - 3 * j)
                * ck
            )
    return total


def _l_uh(n: int, i: int) -> int:
    total = 0
    for k in range(i, n - i + 1):
        ck = catalan(k)
        for j in range(n - k - i + 1):
            total += (
                binomial(k, i) * binomial(k, j) * binomial(n - j, n - k - i - j) * ck
            )
    return total


def _l_uu(n: int, i: int) -> int:
    total = 0
    for k in range(n + 1):
        ck = catalan(k)
        for j in range(k + 1):
            for r in range(n - k - j + 1):
                f = binomial(k, j) * binomial(2 * k + r, r) * binomial(j + r, i + j - k)
                if not f:
                    continue
                inner = sum(
                    binomial(k + r, l) * binomial(n + k - j - l, n - k - j - r - l)
                    for l in range(k + r + 1)
                )
                total += _sign(i + j - k) * f * inner * ck
    return total


def _l_uu_alt(n: int, i: int) -> int:
    total = 0
    for k in range(n + 1):
        ck = catalan(k)
        for j in range(k + 1):
            for r in range(n - k - j + 1):
                f = binomial(k, j) * binomial(2 * k + r, r) * binomial(r, i + j - k)
                if not f:
                    continue
                inner = sum(
                    binomial(k + r, l) * binomial(n - l, n - k - j - r - l)
                    for l in range(k + r + 1)
                )
                total += _sign(i + j - k) * f * inner * ck
    return total


def _l_hh(n: int, i: int) -> int:
    total = 0
    for k in range(n - i + 1):
        ck = catalan(k)
        for j in range(n - k - i + 1):
            total += (
                binomial(2 * k + 1, j)
                * binomial(i + j - 1, i)
                * binomial(k, n - k - i - j)
                * ck
            )
    return total


def _l_hd(n: int, i: int) -> int:
    total = 0
    for k in range(i, n - 2 * i + 1):
        ck = catalan(k)
        for j in range(k - i + 1):
            total += (
                binomial(k, i)
                * binomial(k - i, j)
                * binomial(n + k - 2 * i - 2 * j, n - k - 2 * i - j)
                * ck
            )
    return total


def _l_vu(n: int, i: int) -> int:
    total = 0
    for k in range(n - i + 1):
        f0 = binomial(n + 1, k) * binomial(k + i - 1, i)
        if not f0:
            continue
        for j in range(k + 1):
            total += f0 * binomial(k, j) * binomial(n + 1 - k, n - k - i - j) * 2**j
    return exact_div(total, n + 1)


def _l_vu_alt1(n: int, i: int) -> int:
    total = 0
    for k in range(n - i + 1):
        f0 = binomial(n + 1, k) * binomial(k + i - 1, i)
        if not f0:
            continue
        for j in range(k + 1):
            total += f0 * binomial(k, j) * binomial(n + 1 - j, n - k - i - j)
    return exact_div(total, n + 1)


def _l_vu_alt2(n: int, i: int) -> int:
    total = 0
    for k in range(n - i + 1):
        f0 = binomial(n + 1, k) * binomial(k + i - 1, i)
        if not f0:
            continue
        for j in range(k + 1):
            total += (
                _sign(j)
                * f0
                * binomial(k, j)
                * binomial(n + 1 - j, n - k - i)
                * 2 ** (k - j)
            )
    return exact_div(total, n + 1)


def _l_vv(n: int, i: int) -> int:
    total = 0
    for k in range(n - i + 1):
        f0 = binomial(n + 1, k) * binomial(k + i - 1, i)
        if not f0:
            continue
        for j in range((n - k - i) // 2 + 1):
            total += f0 * binomial(n + 1, j) * binomial(n - j + 1, n - k - i - 2 * j)
    return exact_div(total, n + 1)


def _l_du(n: int, i: int) -> int:
    total = 0
    for k in range(n + 1):
        ck = catalan(k)
        for r in range(min(i, k) + 1):
            f1 = binomial(2 * k + i - r, i - r) * binomial(k, r)
            if not f1:
                continue
            for j in range(k - r + 1):
                f2 = f1 * binomial(k - r, j)
                if not f2:
                    continue
                lmax = (n + r - k) // 2 - i - j
                for l in range(lmax + 1):
                    total += (
                        _sign(i - r)
                        * f2
                        * binomial(2 * k + i + l - r, l)
                        * binomial(
                            n + k - r - i - 2 * j - l,
                            n + r - k - 2 * i - 2 * j - 2 * l,
                        )
                        * ck
                    )
    return total


def _l_du_zero(n: int) -> int:
    # Specialised triple sum for i = 0.
    total = 0
    for k in range(n + 1):
        ck = catalan(k)
        for j in range(k + 1):
            lmax = (n - k) // 2 - j
            for l in range(lmax + 1):
                total += (
                    binomial(2 * k + l, l)
                    * binomial(k, j)
                    * binomial(n + k - 2 * j - l, n - k - 2 * j - 2 * l)
                    * ck
                )
    return total


def _l_dv(n: int, i: int) -> int:
    total = 0
    for k in range((n - 3 * i) // 2 + 1):
        f1 = binomial(n + 1 - i, k)
        if not f1:
            continue
        for j in range(n - 3 * i - 2 * k + 1):
            total += (
                f1
                * binomial(n + 1 - i - k, j)
                * binomial(2 * n - 3 * i - 3 * k - j, n - 3 * i - 2 * k - j)
            )
    return exact_div(binomial(n + 1, i) * total, n + 1)


def _l_dv_alt(n: int, i: int) -> int:
    total = 0
    for k in range(n // 3 - i + 1):
        f1 = binomial(n + 1 - i, k)
        if not f1:
            continue
        for j in range(n // 3 - i - k + 1):
            total += (
                _sign(k + j)
                * f1
                * binomial(n + 1 - i - k, j)
                * binomial(3 * n - 4 * i - 4 * k - 3 * j + 1, n - 3 * i - 3 * k - 3 * j)
            )
    return exact_div(binomial(n + 1, i) * total, n + 1)


_L_FORMULAS = {
    "ud": _l_ud,
    "uh": _l_uh,
    "uu": _l_uu,
    "hh": _l_hh,
    "hd": _l_hd,
    "vu": _l_vu,
    "vv": _l_vv,
    "du": _l_du,
    "dv": _l_dv,
}

# Extra printed forms for the same statistics, used for cross-validation.
L_ALT_FORMULAS = {
    "uu": (_l_uu_alt,),
    "vu": (_l_vu_alt1, _l_vu_alt2),
    "dv": (_l_dv_alt,),
    "du": (lambda n, i: _l_du_zero(n) if i == 0 else _l_du(n, i),),
}


def l_count(pair: str, n: int, i: int) -> int:
    """Paths of x-length n with exactly i adjacent factors z1 z2.

    Supported pairs (others either reduce to these or, for dd, have no
    closed form and must go through the series route).
    """
    if pair == "dd":
        raise UnsupportedPair(pair)
    try:
        fn = _L_FORMULAS[pair]
    except KeyError:
        raise UnsupportedPair(pair) from None
    if n < 0 or i < 0:
        return 0
    return fn(n, i)
