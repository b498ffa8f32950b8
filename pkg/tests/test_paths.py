import pytest

from gmotzkin import paths
from gmotzkin.paths import (
    Arch,
    Empty,
    HeadH,
    LevelStep,
    NegativeHeight,
    NonzeroFinalHeight,
    PairCount,
    Path,
    PeakUD,
    PeakUV,
    PointsAtLevel,
    ReturnSteps,
    ZCount,
    count_paths,
    enumerate_paths,
    first_return_decompose,
    iter_path_strings,
    iter_path_strings_with_d_count,
    primitive_components,
    reassemble,
    statistic,
    weight,
)

# Number of paths of x-length 0..10.
SEQ = [1, 2, 7, 29, 133, 650, 3319, 17498, 94525, 520508, 2910895]


def test_counts_small():
    for n in range(9):
        assert count_paths(n) == SEQ[n]


def test_count_matches_enumeration():
    for n in range(7):
        assert sum(1 for _ in enumerate_paths(n)) == count_paths(n)


def test_enumeration_order_is_deterministic():
    assert list(iter_path_strings(2)) == ["uuvv", "ud", "uhv", "uvuv", "uvh", "huv", "hh"]


def test_enumeration_yields_valid_unique_paths():
    for n in range(7):
        seen = set()
        for p in enumerate_paths(n):
            assert p.x_length == n
            assert p.steps not in seen
            seen.add(p.steps)


def test_validation_errors():
    with pytest.raises(NegativeHeight) as err:
        Path("v")
    assert err.value.index == 0
    with pytest.raises(NegativeHeight) as err:
        Path("udv")
    assert err.value.index == 2
    with pytest.raises(NonzeroFinalHeight) as err:
        Path("u")
    assert err.value.height == 1
    with pytest.raises(paths.PathError):
        Path("ux")


def test_statistics_spot_values():
    assert statistic(Path("uuvv"), ZCount("v")) == 2
    assert statistic(Path("uvuv"), PairCount("v", "u")) == 1
    assert statistic(Path("uhv"), ReturnSteps()) == 1
    assert statistic(Path("hhh"), PairCount("h", "h")) == 2
    assert statistic(Path("uudv"), LevelStep("d", 1)) == 1
    assert statistic(Path("uudv"), LevelStep("v", 0)) == 1
    assert statistic(Path("ud"), PeakUD(1)) == 1
    assert statistic(Path("uv"), PeakUV(1)) == 1
    assert statistic(Path("uuvv"), PeakUV(2)) == 1
    assert statistic(Path("uuvv"), PeakUV(1)) == 0


def test_points_at_level_counts_positions():
    # Both length-1 paths pass through two axis points, so the total is 4.
    total = sum(statistic(p, PointsAtLevel(0)) for p in enumerate_paths(1))
    assert total == 4
    # k steps give k + 1 points.
    for p in enumerate_paths(4):
        npoints = sum(statistic(p, PointsAtLevel(lv)) for lv in range(10))
        assert npoints == len(p) + 1


def test_weight():
    assert weight(Path("uuvv"), 5, 7, 11) == 49
    assert weight(Path("uhvud"), 2, 3, 5) == 30
    for n in range(6):
        assert sum(weight(p, 1, 1, 1) for p in enumerate_paths(n)) == SEQ[n]


def test_first_return_roundtrip():
    for n in range(6):
        for p in enumerate_paths(n):
            dec = first_return_decompose(p)
            assert reassemble(dec) == p
            if isinstance(dec, Empty):
                assert p.steps == ""
            elif isinstance(dec, HeadH):
                assert p.steps[0] == "h"
            else:
                assert isinstance(dec, Arch)
                assert p.steps[0] == "u"
                assert dec.closer in ("d", "v")


def test_primitive_components():
    assert [c.steps for c in primitive_components(Path("uvhud"))] == ["uv", "h", "ud"]
    for n in range(6):
        for p in enumerate_paths(n):
            comps = primitive_components(p)
            assert "".join(c.steps for c in comps) == p.steps
            for c in comps:
                assert c.steps == "h" or (c.steps[0] == "u" and c.steps[-1] in "dv")


def test_d_count_enumeration_matches_filter():
    for n in range(7):
        by_filter = {}
        for s in iter_path_strings(n):
            by_filter.setdefault(s.count("d"), set()).add(s)
        for i in range(n + 1):
            got = set(iter_path_strings_with_d_count(n, i))
            assert got == by_filter.get(i, set())
