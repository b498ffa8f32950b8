from fractions import Fraction

import pytest

from gmotzkin import formulas
from gmotzkin.formulas import (
    UnsupportedPair,
    alpha_count,
    ballot,
    beta_count,
    binomial,
    catalan,
    catalan_power_coeff,
    d_count,
    family,
    fuss_catalan3,
    g_count,
    g_simple,
    gnk,
    h_count,
    l_count,
    little_schroder,
    motzkin_triangle,
    mu_count,
    narayana,
    narayana_poly,
    point_triangle,
    r_return_count,
    schroder_triangle,
    u_count,
    v_count,
)

import reference_tables as ref


def triangle_rows(triangle):
    for n, row in enumerate(triangle):
        for i, value in enumerate(row):
            yield n, i, value


def test_binomial_conventions():
    assert binomial(5, 2) == 10
    assert binomial(5, -1) == 0
    assert binomial(3, 7) == 0
    assert binomial(-1, 0) == 1
    assert binomial(-1, 1) == -1
    assert binomial(-2, 3) == -4
    # k + i - 1 over i at k = 0: 1 for i = 0, else 0.
    assert binomial(0 + 0 - 1, 0) == 1
    assert binomial(0 + 2 - 1, 2) == 0


def test_catalan_and_families():
    assert [catalan(n) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]
    for n, k, value in triangle_rows(ref.MOTZKIN_TRIANGLE):
        assert motzkin_triangle(n, k) == value
    assert [little_schroder(n) for n in range(7)] == [1, 1, 3, 11, 45, 197, 903]
    assert [sum(schroder_triangle(n, k) for k in range(n + 1)) for n in range(6)] == [
        1, 2, 6, 22, 90, 394,
    ]
    for n, i, value in triangle_rows(ref.BALLOT_TRIANGLE):
        assert ballot(n, i) == value
    for n, i, value in triangle_rows(ref.POINT_TRIANGLE):
        assert point_triangle(n, i) == value
    for n, k, value in triangle_rows(ref.GNK_TRIANGLE):
        assert gnk(n, k) == value
    assert [fuss_catalan3(n) for n in range(5)] == [1, 1, 3, 12, 55]
    assert narayana(4, 2) == 6
    assert narayana_poly(3, Fraction(1, 2)) == Fraction(1) / 2 + 3 * Fraction(1, 4) + Fraction(1, 8)
    assert family("motzkin_triangle", 6, 2) == 30
    assert family("ballot", 3, 1) == 20
    assert family("point_triangle", 4, 2) == 27
    assert family("gnk", 4, 1) == 10
    with pytest.raises(formulas.FormulaError):
        family("nope", 1, 1)


def test_ballot_and_point_triangles_against_dyck_enumeration():
    # Independent route: walk every Dyck path of semilength <= 4 directly.
    from gmotzkin.paths import Path, PointsAtLevel, LevelStep, iter_path_strings, statistic

    for n in range(5):
        dyck = [Path(s) for s in iter_path_strings(2 * n) if set(s) <= {"u", "d"}]
        assert len(dyck) == catalan(n)
        for i in range(n + 1):
            points = sum(statistic(p, PointsAtLevel(i)) for p in dyck)
            assert points == point_triangle(n, i), (n, i)
    for n in range(4):
        dyck = [Path(s) for s in iter_path_strings(2 * (n + 1)) if set(s) <= {"u", "d"}]
        for i in range(n + 1):
            ups = sum(statistic(p, LevelStep("u", i + 1)) for p in dyck)
            assert ups == ballot(n, i), (n, i)


def test_catalan_power_coeff():
    # (xC)^2 = x^2 + 2x^3 + 5x^4 + ...
    assert [catalan_power_coeff(2, j) for j in range(6)] == [0, 0, 1, 2, 5, 14]
    assert catalan_power_coeff(0, 0) == 1
    assert catalan_power_coeff(0, 3) == 0


def test_g_count_variants_agree_and_match_sequence():
    for n in range(11):
        assert g_count(n) == ref.G_SEQUENCE[n]
        assert g_simple(n) == ref.G_SEQUENCE[n]
    weights = [(1, 1, 1), (2, 1, 1), (1, 2, 2), (-2, 1, 1), (1, 1, -2), (1, -2, -2), (3, -1, 2)]
    for n in range(16):
        for a, b, c in weights:
            base = g_count(n, a, b, c, "A")
            for variant in ("B1", "B2", "B3"):
                assert g_count(n, a, b, c, variant) == base, (n, a, b, c, variant)


def test_g_count_specialisations():
    assert g_count(5, -2, 1, 1) == -1
    for n in range(12):
        assert g_count(n, -2, 1, 1) == (-1) ** n
        assert g_count(n, 1, 1, -2) == 2**n
        assert g_count(n, 1, -2, -2) == (-1) ** n
    # Setting a weight to zero counts the paths avoiding that step.
    for n in range(7):
        assert g_count(n, 0, 1, 1) == ref.cell(ref.H_TRIANGLE, n, 0)
        assert g_count(n, 1, 0, 1) == ref.cell(ref.V_TRIANGLE, n, 0)
        assert g_count(n, 1, 1, 0) == ref.cell(ref.D_TRIANGLE, n, 0)
    assert g_count(3, 1, 1, 0) == 22
    assert g_count(4, 1, 1, 0) == 90


def test_single_step_triangles():
    cases = [
        (v_count, ref.V_TRIANGLE),
        (h_count, ref.H_TRIANGLE),
        (d_count, ref.D_TRIANGLE),
        (u_count, ref.U_TRIANGLE),
    ]
    for fn, triangle in cases:
        for n in range(len(triangle)):
            for i in range(n + 1):
                expected = ref.cell(triangle, n, i)
                assert fn(n, i, "main") == expected, (fn.__name__, n, i)
                assert fn(n, i, "alt") == expected, (fn.__name__, n, i)


def test_single_step_spot_values():
    assert v_count(3, 1) == 10
    assert v_count(6, 6) == 132
    assert h_count(4, 2) == 36
    assert d_count(5, 1) == 231
    assert d_count(8, 4) == 14
    assert u_count(4, 2) == 52
    assert u_count(5, 5) == 42


def test_single_step_variant_agreement_wide():
    for fn in (v_count, h_count, d_count, u_count):
        for n in range(26):
            for i in range(n + 1):
                assert fn(n, i, "main") == fn(n, i, "alt"), (fn.__name__, n, i)


def test_g_variants_row_sums():
    # Row sums of each step triangle give the path counts.
    for n in range(7):
        assert sum(v_count(n, i) for i in range(n + 1)) == ref.G_SEQUENCE[n]
        assert sum(h_count(n, i) for i in range(n + 1)) == ref.G_SEQUENCE[n]
        assert sum(d_count(n, i) for i in range(n + 1)) == ref.G_SEQUENCE[n]
        assert sum(u_count(n, i) for i in range(n + 1)) == ref.G_SEQUENCE[n]


def test_level_statistics_tables():
    for n, i, value in triangle_rows(ref.ALPHA_TRIANGLE):
        assert alpha_count(n, i) == value, ("alpha", n, i)
    for n, i, value in triangle_rows(ref.BETA_TRIANGLE):
        assert beta_count(n, i) == value, ("beta", n, i)
    for n, i, value in triangle_rows(ref.MU_TRIANGLE):
        assert mu_count(n, i) == value, ("mu", n, i)
    for n, i, value in triangle_rows(ref.R_TRIANGLE):
        assert r_return_count(n, i) == value, ("r", n, i)


def test_level_statistics_spot_values():
    assert alpha_count(2, 1) == 12
    assert beta_count(3, 1) == 85
    assert beta_count(6, 5) == 31
    assert mu_count(2, 1) == 9
    assert mu_count(6, 2) == 6803
    assert r_return_count(4, 2) == 51
    assert r_return_count(6, 0) == 1


def test_pair_triangles():
    for pair, triangle in ref.PAIR_TRIANGLES.items():
        if pair == "dd":
            continue
        for n in range(len(triangle)):
            for i in range(n + 1):
                assert l_count(pair, n, i) == ref.cell(triangle, n, i), (pair, n, i)


def test_pair_spot_values():
    assert l_count("ud", 4, 1) == 26
    assert l_count("uh", 4, 2) == 2
    assert l_count("uh", 8, 4) == 14
    assert l_count("hd", 9, 3) == 5
    assert l_count("vu", 5, 2) == 100
    assert l_count("dv", 9, 3) == 12
    with pytest.raises(UnsupportedPair):
        l_count("dd", 4, 0)
    with pytest.raises(UnsupportedPair):
        l_count("xy", 4, 0)


def test_pair_row_sums():
    for pair in formulas.V_PAIRS:
        if pair == "dd":
            continue
        for n in range(8):
            assert sum(l_count(pair, n, i) for i in range(n + 1)) == ref.G_SEQUENCE[n], (pair, n)


def test_pair_alternate_forms_agree():
    for pair, alts in formulas.L_ALT_FORMULAS.items():
        for n in range(12):
            for i in range(n + 1):
                expected = l_count(pair, n, i)
                for alt in alts:
                    assert alt(n, i) == expected, (pair, n, i)
