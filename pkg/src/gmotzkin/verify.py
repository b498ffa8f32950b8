"""Identity harness: exhaustive desk-scale checks of the counting identities.

Every identity in the catalog is evaluated with exact integer (or Fraction)
arithmetic over a finite grid.  Where a statement admits several independent
evaluation routes - closed-form formula, series coefficient, exhaustive path
enumeration - all available routes are compared cell by cell, and the routes
used are recorded in the report so a pass is auditable.

Failures are reported, never raised: a report carries status "fail" plus the
first counterexample (parameters and the value computed by each route).

Enumeration-backed checks share a single cached statistics pass per x-length
(`tallies`), so the expensive sweep over all 2_910_895 paths of x-length 10
happens at most once per process.
"""

from __future__ import annotations

import json
import re
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Optional

from gmotzkin import formulas, riordan
from gmotzkin.formulas import binomial, catalan, exact_div
from gmotzkin.paths import DEFAULT_ORACLE_LENGTH, count_paths, iter_path_strings
from gmotzkin.series import (
    Series,
    g_marked_series,
    g_series,
    little_schroder_series,
    pair_series,
)

N_ORACLE = DEFAULT_ORACLE_LENGTH

_JSON_INT_LIMIT = 2**53


class VerifyError(ValueError):
    pass


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one identity or cross-check run."""

    id: str
    range: str
    status: str
    counterexample: Optional[dict]
    elapsed_ms: float
    routes: tuple

    def __post_init__(self):
        assert self.status in ("pass", "fail")
        assert self.status == "pass" or self.counterexample is not None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json_dict(self) -> dict:
        out = {"id": self.id, "range": self.range, "status": self.status}
        if self.counterexample is not None:
            out["counterexample"] = _jsonable(self.counterexample)
        out["elapsed_ms"] = round(self.elapsed_ms, 3)
        out["routes"] = list(self.routes)
        return out


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, bool):
        return value
    if isinstance(value, int) and abs(value) >= _JSON_INT_LIMIT:
        return str(value)
    return value


def reports_to_json(reports: Iterable[VerificationReport]) -> str:
    return json.dumps([r.to_json_dict() for r in reports], indent=2)


# ---------------------------------------------------------------------------
# Shared enumeration tallies


@dataclass(frozen=True)
class Tallies:
    """All statistics of every path of one x-length, collected in one sweep.

    steps:   step letter -> {count: number of paths with that many steps}
    pairs:   two-letter factor -> {count: number of paths}, overlaps counted
    levels:  step letter -> total steps ending at each ordinate, over all paths
    points:  total lattice points at each ordinate (per position, so repeat
             visits all count)
    peaks:   "ud"/"uv" -> total factors whose middle point sits at each ordinate
    returns: {count: number of paths with that many d/v steps ending at 0}
    """

    n: int
    steps: dict
    pairs: dict
    levels: dict
    points: tuple
    peaks: dict
    returns: dict


_STEPS = ("u", "d", "h", "v")
_ALL_PAIRS = tuple(a + b for a in _STEPS for b in _STEPS)
_RUN_RE = {z: re.compile(z + "{2,}") for z in _STEPS}


@lru_cache(maxsize=None)
def tallies(n: int) -> Tallies:
    """Sweep every path of x-length n once and tally everything."""
    assert 0 <= n <= N_ORACLE, f"enumeration capped at x-length {N_ORACLE}"
    step_hist = {z: {} for z in _STEPS}
    pair_hist = {p: {} for p in _ALL_PAIRS}
    size = n + 3
    lev = {z: [0] * size for z in _STEPS}
    pts = [0] * size
    peak = {"ud": [0] * size, "uv": [0] * size}
    returns = {}
    lu, ld, lh, lv = lev["u"], lev["d"], lev["h"], lev["v"]
    ud_pk, uv_pk = peak["ud"], peak["uv"]
    unequal = tuple(p for p in _ALL_PAIRS if p[0] != p[1])
    for s in iter_path_strings(n):
        for z in _STEPS:
            h = step_hist[z]
            c = s.count(z)
            h[c] = h.get(c, 0) + 1
        for p in unequal:
            h = pair_hist[p]
            c = s.count(p)
            h[c] = h.get(c, 0) + 1
        for z in _STEPS:
            h = pair_hist[z + z]
            c = sum(len(run) - 1 for run in _RUN_RE[z].findall(s))
            h[c] = h.get(c, 0) + 1
        height = 0
        rets = 0
        prev = ""
        pts[0] += 1
        for ch in s:
            if ch == "u":
                height += 1
                lu[height] += 1
            elif ch == "d":
                height -= 1
                ld[height] += 1
                if height == 0:
                    rets += 1
                if prev == "u":
                    ud_pk[height + 1] += 1
            elif ch == "h":
                lh[height] += 1
            else:
                height -= 1
                lv[height] += 1
                if height == 0:
                    rets += 1
                if prev == "u":
                    uv_pk[height + 1] += 1
            pts[height] += 1
            prev = ch
        returns[rets] = returns.get(rets, 0) + 1
    return Tallies(
        n=n,
        steps=step_hist,
        pairs=pair_hist,
        levels={z: tuple(v) for z, v in lev.items()},
        points=tuple(pts),
        peaks={k: tuple(v) for k, v in peak.items()},
        returns=returns,
    )


def _weighted_total(hist: dict, weight: int) -> int:
    return sum(count * weight**i for i, count in sorted(hist.items()))


# ---------------------------------------------------------------------------
# Small series helpers


def _poly(coeffs, order: int) -> Series:
    return Series.from_list(list(coeffs), order)


def _inverse_power_series(root_coeffs, power: int, order: int) -> Series:
    """1 / (1 + t)^power from the nonconstant part t given by root_coeffs."""
    t = _poly([0] + [-c for c in root_coeffs], order)
    return t.geometric_inverse().pow(power)


@lru_cache(maxsize=None)
def _vu_series():
    return pair_series("vu", 14, 14)


# ---------------------------------------------------------------------------
# Identity checkers.  Each returns (range description, counterexample | None).


def _chk_g_recurrence(n_cap, _m):
    seq = [formulas.g_count(n) for n in range(n_cap + 1)]
    gs = g_series(n_cap + 1)
    for n in range(n_cap + 1):
        if gs.coeff(n) != seq[n]:
            return _rng_rec(n_cap), {"n": n, "formula": seq[n], "series": gs.coeff(n)}
    for n in range(min(n_cap, N_ORACLE) + 1):
        e = count_paths(n)
        if e != seq[n]:
            return _rng_rec(n_cap), {"n": n, "formula": seq[n], "enumeration": e}
    for n in range(3, n_cap + 1):
        lhs = (n + 1) * seq[n]
        rhs = (5 * n - 4) * seq[n - 1] + 9 * (n - 1) * seq[n - 2] + 3 * (n - 2) * seq[n - 3]
        if lhs != rhs:
            return _rng_rec(n_cap), {"n": n, "lhs": lhs, "rhs": rhs}
    return _rng_rec(n_cap), None


def _rng_rec(n_cap):
    return f"3<=n<={n_cap} (routes compared for 0<=n<={n_cap}, enumeration to {min(n_cap, N_ORACLE)})"


def _chk_gnk_2ncn(n_cap, _m):
    for n in range(n_cap + 1):
        lhs = sum(formulas.gnk(n + k, k) for k in range(n // 2 + 1))
        mid = exact_div(
            sum(binomial(n + k, k) * binomial(3 * n + 1, n - 2 * k) for k in range(n // 2 + 1)),
            n + 1,
        )
        rhs = 2**n * catalan(n)
        if not lhs == mid == rhs:
            return f"0<=n<={n_cap}", {"n": n, "lhs": lhs, "middle": mid, "rhs": rhs}
    return f"0<=n<={n_cap}", None


def _signed_step_sum(count_fn, step, weight, rhs_fn, a, b, c):
    """Three-route check of sum_i weight^i T(n, i) = rhs(n) for a step triangle."""

    def run(n_cap, _m):
        gs = g_series(n_cap + 1, a, b, c)
        for n in range(n_cap + 1):
            f = sum(weight**i * count_fn(n, i) for i in range(n + 1))
            s = gs.coeff(n)
            e = _weighted_total(tallies(n).steps[step], weight)
            rhs = rhs_fn(n)
            if not f == s == e == rhs:
                return (
                    f"0<=n<={n_cap}",
                    {"n": n, "formula": f, "series": s, "enumeration": e, "rhs": rhs},
                )
        return f"0<=n<={n_cap}", None

    return run


_chk_thm_2_2_2 = _signed_step_sum(formulas.h_count, "h", -2, lambda n: (-1) ** n, -2, 1, 1)
_chk_thm_2_3_2_a = _signed_step_sum(formulas.d_count, "d", -2, lambda n: 2**n, 1, 1, -2)
_chk_thm_2_3_2_b = _signed_step_sum(
    formulas.d_count,
    "d",
    -1,
    lambda n: sum(binomial(n, k) * catalan(k) for k in range(n + 1)),
    1,
    1,
    -1,
)
_chk_thm_2_4_2 = _signed_step_sum(formulas.u_count, "u", -2, lambda n: (-1) ** n, 1, -2, -2)


def _chk_thm_2_2_3(n_cap, m_cap):
    rng = f"0<=n<={n_cap}, 0<=m<={m_cap}"
    for n in range(n_cap + 1):
        for m in range(m_cap + 1):
            lhs = sum(
                (-1) ** i * binomial(2 * n, i) * formulas.h_count(n + m + i, m + i)
                for i in range(2 * n + 1)
            )
            rhs = catalan(n)
            if lhs != rhs:
                return rng, {"n": n, "m": m, "lhs": lhs, "rhs": rhs}
    return rng, None


def _chk_thm_2_3_4_a(n_cap, _m):
    for n in range(n_cap + 1):
        lhs = sum((-1) ** i * formulas.d_count(n + i, i) for i in range(n + 1))
        if lhs != 1:
            return f"0<=n<={n_cap}", {"n": n, "lhs": lhs, "rhs": 1}
    return f"0<=n<={n_cap}", None


def _chk_thm_2_3_4_b(n_cap, _m):
    for n in range(n_cap + 1):
        lhs = sum((-2) ** i * formulas.d_count(n + i, i) for i in range(n + 1))
        rhs = 1 if n == 0 else 0
        if lhs != rhs:
            return f"0<=n<={n_cap}", {"n": n, "lhs": lhs, "rhs": rhs}
    return f"0<=n<={n_cap}", None


def _narayana_at_shifted(n: int, y: int) -> int:
    """(y+1)^n N_n((y+2)/(y+1)) in homogenized integer form."""
    if n == 0:
        return 1
    return sum(
        formulas.narayana(n, k) * (y + 2) ** k * (y + 1) ** (n - k) for k in range(1, n + 1)
    )


def _chk_thm_2_3_5(n_cap, _m):
    rng = f"0<=n<={n_cap}, -3<=y<=3"
    for n in range(n_cap + 1):
        for y in range(-3, 4):
            lhs = sum(y**i * formulas.d_count(n + i, i) for i in range(n + 1))
            rhs = _narayana_at_shifted(n, y)
            if y != -1:
                # Same value through the rational Narayana evaluation.
                value = Fraction(y + 1) ** n * formulas.narayana_poly(n, Fraction(y + 2, y + 1))
                assert value.denominator == 1, value
                if int(value) != rhs:
                    return rng, {"n": n, "y": y, "homogenized": rhs, "rational": int(value)}
            if lhs != rhs:
                return rng, {"n": n, "y": y, "lhs": lhs, "rhs": rhs}
    return rng, None


def _chk_coro_2_3_6(n_cap, _m):
    ls = little_schroder_series(n_cap + 1)
    for n in range(n_cap + 1):
        lhs = sum((-3) ** i * formulas.d_count(n + i, i) for i in range(n + 1))
        rf = (-1) ** n * formulas.little_schroder(n)
        rs = (-1) ** n * ls.coeff(n)
        if not lhs == rf == rs:
            return f"0<=n<={n_cap}", {"n": n, "lhs": lhs, "formula": rf, "series": rs}
    return f"0<=n<={n_cap}", None


def _binomial_transform(level_fn, array_name, base):
    """Check sum_i (-1)^(n-i) binom(n,i) T(n+m+i, m+i) = base^n on two routes."""

    def run(n_cap, m_cap):
        rng = f"0<=n<={n_cap}, 0<=m<={m_cap}"
        arr = riordan.named_array(array_name)
        for n in range(n_cap + 1):
            rhs = base**n
            for m in range(m_cap + 1):
                sign = (-1) ** n
                f = s = 0
                for i in range(n + 1):
                    w = sign * binomial(n, i)
                    sign = -sign
                    f += w * level_fn(n + m + i, m + i)
                    s += w * arr.entry(n + m + i, m + i)
                if not f == s == rhs:
                    return rng, {"n": n, "m": m, "formula": f, "series": s, "rhs": rhs}
        return rng, None

    return run


_chk_thm_3_1_2 = _binomial_transform(formulas.alpha_count, "alpha", 5)
_chk_thm_3_2_3_a = _binomial_transform(formulas.beta_count, "beta", 5)
_chk_thm_3_3_3_a = _binomial_transform(formulas.mu_count, "mu", 5)
_chk_thm_3_4_2 = _binomial_transform(formulas.r_return_count, "r", 4)


def _row_product_law(level_fn, array_name, inverse_power, rhs_fn):
    """Check sum_i (-1)^i binom(i+p-1, p-1) T(n,i) = rhs(n) on two routes.

    The series route multiplies the array against the coefficient column of
    1/(1+x)^p, which is the same alternating-binomial row product.
    """

    def run(n_cap, _m):
        arr = riordan.named_array(array_name)
        applied = arr.apply(_inverse_power_series([1], inverse_power, arr.order))
        p = inverse_power - 1
        for n in range(n_cap + 1):
            f = sum((-1) ** i * binomial(i + p, p) * level_fn(n, i) for i in range(n + 1))
            s = applied.coeff(n)
            rhs = rhs_fn(n)
            if not f == s == rhs:
                return f"0<=n<={n_cap}", {"n": n, "formula": f, "series": s, "rhs": rhs}
        return f"0<=n<={n_cap}", None

    return run


_chk_thm_3_1_3 = _row_product_law(formulas.alpha_count, "alpha", 3, lambda n: (n + 1) ** 2)
_chk_thm_3_2_3_b = _row_product_law(formulas.beta_count, "beta", 3, lambda n: binomial(n + 2, 2))
_chk_thm_3_3_3_b = _row_product_law(formulas.mu_count, "mu", 2, lambda n: n + 1)


def _chk_coro_3_2_4(n_cap, _m):
    a_arr = riordan.named_array("alpha")
    b_arr = riordan.named_array("beta")
    for n in range(n_cap + 1):
        for i in range(n + 1):
            f_lhs = formulas.alpha_count(n, i)
            f_rhs = formulas.beta_count(n, i) + (formulas.beta_count(n - 1, i) if n else 0)
            s_lhs = a_arr.entry(n, i)
            s_rhs = b_arr.entry(n, i) + b_arr.entry(n - 1, i)
            if not f_lhs == f_rhs == s_lhs == s_rhs:
                return (
                    f"0<=i<=n<={n_cap}",
                    {"n": n, "i": i, "formula": (f_lhs, f_rhs), "series": (s_lhs, s_rhs)},
                )
    return f"0<=i<=n<={n_cap}", None


def _chk_thm_4_1_2(n_cap, m_cap):
    rng = f"0<=n<={n_cap}, 0<=m<={m_cap}"
    for n in range(n_cap + 1):
        rhs = catalan(n)
        for m in range(m_cap + 1):
            lhs = sum(
                (-1) ** i
                * binomial(2 * n, i)
                * formulas.l_count("ud", n + 2 * m + 2 * i, m + i)
                for i in range(2 * n + 1)
            )
            if lhs != rhs:
                return rng, {"n": n, "m": m, "lhs": lhs, "rhs": rhs}
    return rng, None


def _chk_thm_4_1_3(n_cap, _m):
    for n in range(n_cap + 1):
        lhs = sum((-3) ** i * formulas.l_count("ud", n + i, i) for i in range(n + 1))
        rhs = sum(
            (-1) ** (n - k) * binomial(n + 2 * k + 1, n - k) * catalan(k) for k in range(n + 1)
        )
        if lhs != rhs:
            return f"0<=n<={n_cap}", {"n": n, "lhs": lhs, "rhs": rhs}
    return f"0<=n<={n_cap}", None


def _vu_weighted(weight, rhs_fn, with_enumeration):
    def run(n_cap, _m):
        special = _vu_series().specialize_y(weight)
        for n in range(n_cap + 1):
            f = sum(weight**i * formulas.l_count("vu", n, i) for i in range(n + 1))
            s = special.coeff(n)
            rhs = rhs_fn(n)
            values = {"n": n, "formula": f, "series": s, "rhs": rhs}
            ok = f == s == rhs
            if with_enumeration:
                e = _weighted_total(tallies(n).pairs["vu"], weight)
                values["enumeration"] = e
                ok = ok and e == rhs
            if not ok:
                return f"0<=n<={n_cap}", values
        return f"0<=n<={n_cap}", None

    return run


_chk_thm_4_6_1 = _vu_weighted(2, lambda n: 2**n * catalan(n), True)
_chk_thm_4_6_2 = _vu_weighted(
    -1,
    lambda n: sum((-1) ** i * binomial(n, i) * 3 ** (n - i) * catalan(i) for i in range(n + 1)),
    False,
)
_chk_thm_4_6_3 = _vu_weighted(-2, lambda n: 2**n, True)


def _shifted_catalan_transform(pair):
    """Check sum_i (-1)^i binom(2n,i) L^pair(n+m+i+2, m+i+1) = C_n."""

    def run(n_cap, m_cap):
        rng = f"0<=n<={n_cap}, 0<=m<={m_cap}"
        for n in range(n_cap + 1):
            rhs = catalan(n)
            for m in range(m_cap + 1):
                lhs = sum(
                    (-1) ** i
                    * binomial(2 * n, i)
                    * formulas.l_count(pair, n + m + i + 2, m + i + 1)
                    for i in range(2 * n + 1)
                )
                if lhs != rhs:
                    return rng, {"n": n, "m": m, "lhs": lhs, "rhs": rhs}
        return rng, None

    return run


_chk_thm_4_6_4 = _shifted_catalan_transform("vu")
_chk_thm_4_7_3 = _shifted_catalan_transform("vv")


def _chk_pair_swaps(n_cap, _m):
    """Factor-count distributions that coincide, checked by full enumeration.

    uv matches the h-step distribution, hv and vh match the d-step
    distribution, and hu/uh, hd/dh, dv/vd are pairwise equal.
    """
    rng = f"0<=n<={n_cap}"
    for n in range(n_cap + 1):
        t = tallies(n)
        for i in range(n + 1):
            uv = t.pairs["uv"].get(i, 0)
            h_formula = formulas.h_count(n, i)
            h_steps = t.steps["h"].get(i, 0)
            if not uv == h_formula == h_steps:
                return rng, {"n": n, "i": i, "uv": uv, "h": h_steps, "formula": h_formula}
            hv = t.pairs["hv"].get(i, 0)
            vh = t.pairs["vh"].get(i, 0)
            d_formula = formulas.d_count(n, i)
            if not hv == vh == d_formula:
                return rng, {"n": n, "i": i, "hv": hv, "vh": vh, "formula": d_formula}
        for left, right in (("hu", "uh"), ("hd", "dh"), ("dv", "vd")):
            if t.pairs[left] != t.pairs[right]:
                return rng, {
                    "n": n,
                    left: t.pairs[left],
                    right: t.pairs[right],
                }
    return rng, None


def _chk_lemma_3_2_1(n_cap, _m):
    rng = f"0<=i<=n<={n_cap} (v steps in length n+1 vs d steps in length n+2)"
    arr = riordan.named_array("beta")
    for n in range(n_cap + 1):
        v_lev = tallies(n + 1).levels["v"]
        d_lev = tallies(n + 2).levels["d"]
        for i in range(n + 1):
            f = formulas.beta_count(n, i)
            s = arr.entry(n, i)
            if not v_lev[i] == d_lev[i] == f == s:
                return rng, {
                    "n": n,
                    "i": i,
                    "v_steps": v_lev[i],
                    "d_steps": d_lev[i],
                    "formula": f,
                    "series": s,
                }
    return rng, None


def _chk_lemma_3_3_1(n_cap, _m):
    rng = f"0<=i<=n<={n_cap} (points in length n vs h steps in length n+1)"
    arr = riordan.named_array("mu")
    for n in range(n_cap + 1):
        pts = tallies(n).points
        h_lev = tallies(n + 1).levels["h"]
        for i in range(n + 1):
            f = formulas.mu_count(n, i)
            s = arr.entry(n, i)
            if not pts[i] == h_lev[i] == f == s:
                return rng, {
                    "n": n,
                    "i": i,
                    "points": pts[i],
                    "h_steps": h_lev[i],
                    "formula": f,
                    "series": s,
                }
    return rng, None


def _chk_remark_3_3_peaks(n_cap, _m):
    rng = f"0<=i<=n<={n_cap} (uv peaks in length n+1, ud peaks in length n+2, at level i+1)"
    for n in range(n_cap + 1):
        uv_pk = tallies(n + 1).peaks["uv"]
        ud_pk = tallies(n + 2).peaks["ud"]
        for i in range(n + 1):
            f = formulas.mu_count(n, i)
            if not uv_pk[i + 1] == ud_pk[i + 1] == f:
                return rng, {
                    "n": n,
                    "i": i,
                    "uv_peaks": uv_pk[i + 1],
                    "ud_peaks": ud_pk[i + 1],
                    "formula": f,
                }
    return rng, None


def _gf_inverse(weights, poly_coeffs):
    """Check that a weighted path series times a polynomial equals 1.

    weights gives (a, b, c) for the h/v/d weighting; poly_coeffs the claimed
    polynomial inverse, constant term first.
    """
    a, b, c = weights

    def run(n_cap, _m):
        seq = [formulas.g_count(n, a, b, c) for n in range(n_cap + 1)]
        gs = g_series(n_cap + 1, a, b, c)
        prod = gs * _poly(poly_coeffs, n_cap + 1)
        for n in range(n_cap + 1):
            f = sum(
                poly_coeffs[k] * seq[n - k] for k in range(min(n, len(poly_coeffs) - 1) + 1)
            )
            s = prod.coeff(n)
            rhs = 1 if n == 0 else 0
            if not f == s == rhs:
                return f"0<=n<={n_cap}", {"n": n, "formula": f, "series": s, "rhs": rhs}
        return f"0<=n<={n_cap}", None

    return run


_chk_gf_inverse_h = _gf_inverse((-2, 1, 1), (1, 1))
_chk_gf_inverse_d = _gf_inverse((1, 1, -2), (1, -2))
_chk_gf_inverse_u = _gf_inverse((1, -2, -2), (1, 1))


def _chk_gf_inverse_vu(n_cap, _m):
    poly_coeffs = (1, -2)
    seq = [
        sum((-2) ** i * formulas.l_count("vu", n, i) for i in range(n + 1))
        for n in range(n_cap + 1)
    ]
    prod = _vu_series().specialize_y(-2) * _poly(poly_coeffs, 14)
    for n in range(n_cap + 1):
        f = sum(poly_coeffs[k] * seq[n - k] for k in range(min(n, 1) + 1))
        s = prod.coeff(n)
        rhs = 1 if n == 0 else 0
        if not f == s == rhs:
            return f"0<=n<={n_cap}", {"n": n, "formula": f, "series": s, "rhs": rhs}
    return f"0<=n<={n_cap}", None


# ---------------------------------------------------------------------------
# Catalog


@dataclass(frozen=True)
class _Identity:
    checker: Callable
    routes: tuple
    cap_n: int
    cap_m: Optional[int] = None


_FSE = ("formula", "series", "enumeration")
_FS = ("formula", "series")
_F = ("formula",)

_IDENTITIES = {
    "g_recurrence": _Identity(_chk_g_recurrence, _FSE, 12),
    "gnk_2nCn": _Identity(_chk_gnk_2ncn, _F, 12),
    "thm_2_2_2": _Identity(_chk_thm_2_2_2, _FSE, N_ORACLE),
    "thm_2_2_3": _Identity(_chk_thm_2_2_3, _F, 10, 4),
    "thm_2_3_2_a": _Identity(_chk_thm_2_3_2_a, _FSE, N_ORACLE),
    "thm_2_3_2_b": _Identity(_chk_thm_2_3_2_b, _FSE, N_ORACLE),
    "thm_2_3_4_a": _Identity(_chk_thm_2_3_4_a, _F, 12),
    "thm_2_3_4_b": _Identity(_chk_thm_2_3_4_b, _F, 12),
    "thm_2_3_5": _Identity(_chk_thm_2_3_5, _F, 10),
    "coro_2_3_6": _Identity(_chk_coro_2_3_6, _FS, 12),
    "thm_2_4_2": _Identity(_chk_thm_2_4_2, _FSE, N_ORACLE),
    "thm_3_1_2": _Identity(_chk_thm_3_1_2, _FS, 10, 4),
    "thm_3_1_3": _Identity(_chk_thm_3_1_3, _FS, 12),
    "thm_3_2_3_a": _Identity(_chk_thm_3_2_3_a, _FS, 10, 4),
    "thm_3_2_3_b": _Identity(_chk_thm_3_2_3_b, _FS, 12),
    "coro_3_2_4": _Identity(_chk_coro_3_2_4, _FS, 12),
    "thm_3_3_3_a": _Identity(_chk_thm_3_3_3_a, _FS, 10, 4),
    "thm_3_3_3_b": _Identity(_chk_thm_3_3_3_b, _FS, 12),
    "thm_3_4_2": _Identity(_chk_thm_3_4_2, _FS, 10, 4),
    "thm_4_1_2": _Identity(_chk_thm_4_1_2, _F, 10, 4),
    "thm_4_1_3": _Identity(_chk_thm_4_1_3, _F, 12),
    "thm_4_6_1": _Identity(_chk_thm_4_6_1, _FSE, N_ORACLE),
    "thm_4_6_2": _Identity(_chk_thm_4_6_2, _FS, 12),
    "thm_4_6_3": _Identity(_chk_thm_4_6_3, _FSE, N_ORACLE),
    "thm_4_6_4": _Identity(_chk_thm_4_6_4, _F, 10, 4),
    "thm_4_7_3": _Identity(_chk_thm_4_7_3, _F, 10, 4),
    "pair_swap_equalities": _Identity(_chk_pair_swaps, ("formula", "enumeration"), N_ORACLE),
    "lemma_3_2_1": _Identity(_chk_lemma_3_2_1, _FSE, N_ORACLE - 2),
    "lemma_3_3_1": _Identity(_chk_lemma_3_3_1, _FSE, N_ORACLE - 1),
    "remark_3_3_peaks": _Identity(
        _chk_remark_3_3_peaks, ("formula", "enumeration"), N_ORACLE - 2
    ),
    "gf_inverse_h": _Identity(_chk_gf_inverse_h, _FS, 12),
    "gf_inverse_d": _Identity(_chk_gf_inverse_d, _FS, 12),
    "gf_inverse_u": _Identity(_chk_gf_inverse_u, _FS, 12),
    "gf_inverse_vu": _Identity(_chk_gf_inverse_vu, _FS, 12),
}

IDENTITY_IDS = tuple(_IDENTITIES)


def verify(identity: str, max_n: int | None = None, max_m: int | None = None) -> VerificationReport:
    """Run one catalog identity over its grid; bounds only shrink the grid.

    Grids that involve the enumeration oracle are capped by the oracle
    length, so a larger request is clamped, never an error.
    """
    try:
        entry = _IDENTITIES[identity]
    except KeyError:
        raise VerifyError(
            f"unknown identity {identity!r}; valid: {', '.join(IDENTITY_IDS)}"
        ) from None
    n_cap = entry.cap_n if max_n is None else max(0, min(max_n, entry.cap_n))
    m_cap = entry.cap_m
    if m_cap is not None and max_m is not None:
        m_cap = max(0, min(max_m, m_cap))
    start = time.perf_counter()
    rng, counterexample = entry.checker(n_cap, m_cap)
    return VerificationReport(
        id=identity,
        range=rng,
        status="fail" if counterexample else "pass",
        counterexample=counterexample,
        elapsed_ms=(time.perf_counter() - start) * 1000.0,
        routes=entry.routes,
    )


def verify_all(
    max_n: int | None = None, max_m: int | None = None, threads: int = 1
) -> list[VerificationReport]:
    """Run the whole catalog; reports always come back in catalog order."""
    if threads <= 1:
        return [verify(i, max_n, max_m) for i in IDENTITY_IDS]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda i: verify(i, max_n, max_m), IDENTITY_IDS))


# ---------------------------------------------------------------------------
# Three-route cross-checks of whole triangles


_STEP_FAMILIES = {"V": "v", "H": "h", "D": "d", "U": "u"}
_STEP_FORMULAS = {
    "V": formulas.v_count,
    "H": formulas.h_count,
    "D": formulas.d_count,
    "U": formulas.u_count,
}
_LEVEL_FAMILIES = {
    # family -> (formula, step letter, x-length offset, level offset)
    "alpha": (formulas.alpha_count, "u", 1, 1),
    "beta": (formulas.beta_count, "v", 1, 0),
    "mu": (formulas.mu_count, "h", 1, 0),
}
_PAIR_FAMILIES = {"L" + p: p for p in formulas.V_PAIRS}

CROSS_CHECK_FAMILIES = (
    tuple(_STEP_FAMILIES) + ("alpha", "beta", "mu", "r") + tuple("L" + p for p in formulas.V_PAIRS)
)


def _cross_rows(family: str, n_max: int) -> int:
    offset = _LEVEL_FAMILIES[family][2] if family in _LEVEL_FAMILIES else 0
    if family == "lemma":
        offset = 2
    return max(0, min(n_max, N_ORACLE - offset))


def cross_check(family: str, n_max: int) -> VerificationReport:
    """Compare every triangle cell across all routes the family supports.

    Rows run 0..n_max (clamped so enumerated x-lengths stay within the
    oracle cap) and columns 0..n.  Level families read rows at the shifted
    x-length their definition uses.
    """
    if family not in CROSS_CHECK_FAMILIES:
        raise VerifyError(
            f"unknown family {family!r}; valid: {', '.join(CROSS_CHECK_FAMILIES)}"
        )
    start = time.perf_counter()
    rows = _cross_rows(family, n_max)
    routes = _FSE
    counterexample = None
    if family in _STEP_FAMILIES:
        step = _STEP_FAMILIES[family]
        fn = _STEP_FORMULAS[family]
        marked = g_marked_series(step, rows + 1, rows + 1)
        for n in range(rows + 1):
            hist = tallies(n).steps[step]
            for i in range(n + 1):
                f, s, e = fn(n, i), marked.coeff(n, i), hist.get(i, 0)
                if not f == s == e:
                    counterexample = {"n": n, "i": i, "formula": f, "series": s, "enumeration": e}
                    break
            if counterexample:
                break
    elif family in _LEVEL_FAMILIES:
        fn, step, x_off, lev_off = _LEVEL_FAMILIES[family]
        arr = riordan.named_array(family)
        for n in range(rows + 1):
            levels = tallies(n + x_off).levels[step]
            for i in range(n + 1):
                f, s, e = fn(n, i), arr.entry(n, i), levels[i + lev_off]
                if not f == s == e:
                    counterexample = {"n": n, "i": i, "formula": f, "series": s, "enumeration": e}
                    break
            if counterexample:
                break
    elif family == "r":
        arr = riordan.named_array("r")
        for n in range(rows + 1):
            hist = tallies(n).returns
            for i in range(n + 1):
                f = formulas.r_return_count(n, i)
                s, e = arr.entry(n, i), hist.get(i, 0)
                if not f == s == e:
                    counterexample = {"n": n, "i": i, "formula": f, "series": s, "enumeration": e}
                    break
            if counterexample:
                break
    else:
        pair = _PAIR_FAMILIES[family]
        has_formula = pair != "dd"
        routes = _FSE if has_formula else ("series", "enumeration")
        bi = pair_series(pair, rows + 1, rows + 1)
        for n in range(rows + 1):
            hist = tallies(n).pairs[pair]
            for i in range(n + 1):
                s, e = bi.coeff(n, i), hist.get(i, 0)
                values = {"n": n, "i": i, "series": s, "enumeration": e}
                ok = s == e
                if has_formula:
                    f = formulas.l_count(pair, n, i)
                    values["formula"] = f
                    ok = ok and f == s
                if not ok:
                    counterexample = values
                    break
            if counterexample:
                break
    cells = (rows + 1) * (rows + 2) // 2
    return VerificationReport(
        id=f"crosscheck_{family}",
        range=f"0<=i<=n<={rows}, {cells} cells",
        status="fail" if counterexample else "pass",
        counterexample=counterexample,
        elapsed_ms=(time.perf_counter() - start) * 1000.0,
        routes=routes,
    )
