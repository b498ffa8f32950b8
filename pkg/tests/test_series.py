"""Series arithmetic and the functional-equation catalog."""

from __future__ import annotations

import json

import pytest

from gmotzkin import formulas
from gmotzkin.series import (
    BiSeries,
    NoContraction,
    NonzeroConstantTerm,
    OrderExceeded,
    PAIR_EQUATIONS,
    Series,
    catalan_series,
    equation,
    g_marked_series,
    g_series,
    large_schroder_series,
    little_schroder_series,
    motzkin_series,
    pair_series,
    residual_is_zero,
    solve_fixed_point,
)
from reference_tables import (
    D_TRIANGLE,
    G_SEQUENCE,
    H_TRIANGLE,
    PAIR_TRIANGLES,
    U_TRIANGLE,
    V_TRIANGLE,
    cell,
)


def test_series_arithmetic_basics():
    a = Series.from_list([1, 2, 3], 5)
    b = Series.from_list([0, 1], 5)
    assert (a + b).coeffs == (1, 3, 3, 0, 0)
    assert (a - b).coeffs == (1, 1, 3, 0, 0)
    assert (a * b).coeffs == (0, 1, 2, 3, 0)
    assert a.scale(-2).coeffs == (-2, -4, -6, 0, 0)
    assert a.pow(0) == Series.const(1, 5)
    assert a.pow(2).coeffs == (1, 4, 10, 12, 9)
    assert a.coeff(4) == 0
    with pytest.raises(OrderExceeded):
        a.coeff(5)


def test_geometric_inverse_is_geometric_series():
    x = Series.x(8)
    geo = x.geometric_inverse()
    assert geo.coeffs == (1,) * 8
    # (1 - x) * 1/(1 - x) == 1
    one = Series.const(1, 8)
    assert (one - x) * geo == one
    with pytest.raises(NonzeroConstantTerm):
        Series.const(1, 4).geometric_inverse()


def test_composition():
    x = Series.x(10)
    # C(x C(x)^2)? simpler: compose geometric series with 2x
    geo = x.geometric_inverse()
    doubled = geo.compose(x.scale(2))
    assert doubled.coeffs == tuple(2 ** n for n in range(10))
    with pytest.raises(NonzeroConstantTerm):
        geo.compose(Series.const(1, 10))


def test_classical_series():
    assert catalan_series(9).coeffs == (1, 1, 2, 5, 14, 42, 132, 429, 1430)
    assert motzkin_series(8).coeffs == (1, 1, 2, 4, 9, 21, 51, 127)
    assert large_schroder_series(7).coeffs == (1, 2, 6, 22, 90, 394, 1806)
    assert little_schroder_series(7).coeffs == (1, 1, 3, 11, 45, 197, 903)


def test_weighted_equation_matches_reference_counts():
    sol = g_series(len(G_SEQUENCE))
    assert list(sol.coeffs) == G_SEQUENCE
    assert residual_is_zero("G", sol)
    # dropping the d-weight leaves the 2-Motzkin / shifted-Catalan counts
    no_d = g_series(6, 1, 1, 0)
    assert no_d.coeff(3) == 22
    assert [formulas.g_count(n, 1, 1, 0) for n in range(6)] == list(no_d.coeffs)


def test_weighted_equation_agrees_with_closed_form():
    for a, b, c in [(1, 1, 1), (2, 1, 3), (-1, 2, 1), (0, 1, 1), (1, 0, 2)]:
        sol = g_series(9, a, b, c)
        for n in range(9):
            assert sol.coeff(n) == formulas.g_count(n, a, b, c), (a, b, c, n)


def test_catalan_substitution_identity():
    # G(x) = 1/(1-x) * C(x(1+x)/(1-x)^2) with C the Catalan series
    order = 12
    x = Series.x(order)
    one_minus_x_inv = x.geometric_inverse()
    inner = x * (Series.const(1, order) + x) * one_minus_x_inv * one_minus_x_inv
    rhs = one_minus_x_inv * catalan_series(order).compose(inner)
    assert g_series(order) == rhs


def test_marked_step_series_match_triangles():
    tables = {"h": H_TRIANGLE, "v": V_TRIANGLE, "d": D_TRIANGLE, "u": U_TRIANGLE}
    for step, table in tables.items():
        sol = g_marked_series(step, len(table), len(table))
        assert residual_is_zero(equation(f"G^{step}"), sol)
        for n in range(len(table)):
            for i in range(len(table)):
                assert sol.coeff(n, i) == cell(table, n, i), (step, n, i)


def test_pair_series_match_triangles():
    for pair, table in PAIR_TRIANGLES.items():
        sol = pair_series(pair, len(table), len(table))
        assert residual_is_zero(PAIR_EQUATIONS[pair], sol)
        for n in range(len(table)):
            for i in range(len(table)):
                assert sol.coeff(n, i) == cell(table, n, i), (pair, n, i)


def test_pair_series_spot_values():
    assert pair_series("dd", 12, 12).coeff(5, 1) == 9
    assert pair_series("ud", 12, 12).coeff(8, 4) == 1
    assert pair_series("vu", 12, 12).coeff(5, 2) == 100


def test_pair_series_row_sums_count_all_paths():
    for pair in PAIR_TRIANGLES:
        sol = pair_series(pair, 11, 11)
        for n in range(11):
            assert sum(sol.rows[n]) == G_SEQUENCE[n], (pair, n)


def test_y_degree_never_exceeds_x_degree():
    sol = pair_series("vu", 9, 12)
    for n in range(9):
        for i in range(n + 1, 12):
            assert sol.coeff(n, i) == 0


def test_inverse_weight_specializations():
    order = 10
    one = Series.const(1, order)
    x = Series.x(order)
    assert g_series(order, -2, 1, 1) * (one + x) == one
    assert g_series(order, 1, 1, -2) * (one - x.scale(2)) == one
    assert g_series(order, 1, -2, -2) * (one + x) == one
    vu_at_minus2 = pair_series("vu", order, order).specialize_y(-2)
    assert vu_at_minus2 * (one - x.scale(2)) == one


def test_specialize_y_at_one_recovers_counts():
    sol = pair_series("hd", 11, 11)
    assert sol.specialize_y(1).coeffs == tuple(G_SEQUENCE)


def test_unknown_equation_rejected():
    with pytest.raises(ValueError):
        equation("L^xy")
    with pytest.raises(ValueError):
        equation("nope")


def test_divergent_iteration_detected():
    with pytest.raises(NoContraction):
        solve_fixed_point(("*", ("int", 2), ("s",)), 8)


def test_bivariate_coeff_bounds():
    sol = pair_series("ud", 6, 6)
    assert sol.coeff(-1, 0) == 0
    assert sol.coeff(0, -3) == 0
    with pytest.raises(OrderExceeded):
        sol.coeff(6, 0)
    with pytest.raises(OrderExceeded):
        sol.coeff(2, 6)


def test_json_dumps_use_strings():
    s = Series.from_list([1, 20, 300], 3)
    assert json.loads(s.dumps()) == ["1", "20", "300"]
    b = BiSeries.const(7, 2, 2)
    assert json.loads(b.dumps()) == [["7", "0"], ["0", "0"]]
