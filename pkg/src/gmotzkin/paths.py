"""Lattice paths with steps u=(1,1), d=(1,-1), h=(1,0), v=(0,-1).

A path runs from (0,0) to (n,0) and never dips below the x-axis; n is the
x-length, i.e. the number of u, d and h steps.  The v step moves straight
down, so a path may contain more steps than its x-length.

Text encoding: one lowercase letter per step, no separators ("uhv").
The level of a step means the ordinate of its endpoint.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

U = "u"
D = "d"
H = "h"
V = "v"

STEP_RISE = {U: 1, D: -1, H: 0, V: -1}
STEP_RUN = {U: 1, D: 1, H: 1, V: 0}

# Largest x-length the exhaustive enumerator is expected to sweep by default.
# There are 2_910_895 paths of x-length 10.
DEFAULT_ORACLE_LENGTH = 10


class PathError(ValueError):
    pass


class NegativeHeight(PathError):
    """A prefix of the walk went below the x-axis."""

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"step {index} takes the walk below the x-axis")


class NonzeroFinalHeight(PathError):
    """The walk did not end on the x-axis."""

    def __init__(self, height: int):
        self.height = height
        super().__init__(f"walk ends at height {height}, expected 0")


def check_steps(steps: str) -> None:
    """Raise on the first invalid step sequence violation."""
    height = 0
    for i, ch in enumerate(steps):
        try:
            height += STEP_RISE[ch]
        except KeyError:
            raise PathError(f"unknown step {ch!r} at index {i}") from None
        if height < 0:
            raise NegativeHeight(i)
    if height != 0:
        raise NonzeroFinalHeight(height)


@dataclass(frozen=True)
class Path:
    """A validated path; construction rejects invalid step strings."""

    steps: str

    def __post_init__(self):
        check_steps(self.steps)

    @property
    def x_length(self) -> int:
        return sum(1 for ch in self.steps if ch != V)

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return self.steps

    def heights(self) -> list[int]:
        """Ordinate after each step."""
        out = []
        height = 0
        for ch in self.steps:
            height += STEP_RISE[ch]
            out.append(height)
        return out


EMPTY = Path("")


def validate(steps: str) -> Path:
    """Build a Path, raising NegativeHeight or NonzeroFinalHeight if invalid."""
    return Path(steps)


def parse(text: str) -> Path:
    return Path(text.strip())


def iter_path_strings(n: int) -> Iterator[str]:
    """All step strings of x-length n, depth first with step order u < d < h < v.

    Every partial walk extends to a complete path (pad with h then v), so the
    search tree has no dead branches and each leaf is produced exactly once.
    """
    if n < 0:
        return
    stack = [("", n, 0)]
    while stack:
        prefix, rem, height = stack.pop()
        if rem == 0 and height == 0:
            yield prefix
            continue
        # Push in reverse so u is explored first.
        if height >= 1:
            stack.append((prefix + V, rem, height - 1))
        if rem >= 1:
            stack.append((prefix + H, rem - 1, height))
            if height >= 1:
                stack.append((prefix + D, rem - 1, height - 1))
            stack.append((prefix + U, rem - 1, height + 1))


def enumerate_paths(n: int) -> Iterator[Path]:
    """All paths of x-length n as validated Path values."""
    for s in iter_path_strings(n):
        yield Path(s)


def count_paths(n: int) -> int:
    """Number of paths of x-length n, counted by exhaustive depth-first walk.

    Visits every path individually (no closed form, no memoisation), so this
    is an oracle independent of the formula and series routes.
    """
    if n < 0:
        return 0
    count = 0
    stack = [(n, 0)]
    pop = stack.pop
    push = stack.append
    while stack:
        rem, height = pop()
        if rem == 0:
            # Only v steps remain; exactly one completion.
            count += 1
            continue
        push((rem - 1, height + 1))
        push((rem - 1, height))
        if height >= 1:
            push((rem - 1, height - 1))
            push((rem, height - 1))
    return count


def iter_path_strings_with_d_count(n: int, d_count: int) -> Iterator[str]:
    """Paths of x-length n containing exactly d_count d steps.

    Prunes branches that can no longer fit the required d steps: each missing
    d costs one x unit, plus one more for every unit of height that must first
    be regained.
    """
    if n < 0 or d_count < 0:
        return
    stack = [("", n, 0, d_count)]
    while stack:
        prefix, rem, height, need = stack.pop()
        if need > rem or 2 * need - min(height, need) > rem:
            continue
        if rem == 0 and height == 0:
            if need == 0:
                yield prefix
            continue
        if height >= 1:
            stack.append((prefix + V, rem, height - 1, need))
        if rem >= 1:
            stack.append((prefix + H, rem - 1, height, need))
            if height >= 1 and need >= 1:
                stack.append((prefix + D, rem - 1, height - 1, need - 1))
            stack.append((prefix + U, rem - 1, height + 1, need))


# ---------------------------------------------------------------------------
# Statistics


@dataclass(frozen=True)
class ZCount:
    """Number of steps of one kind."""

    step: str


@dataclass(frozen=True)
class PairCount:
    """Number of adjacent factors z1 z2 (overlaps allowed)."""

    first: str
    second: str


@dataclass(frozen=True)
class ReturnSteps:
    """Number of d or v steps ending on the x-axis."""


@dataclass(frozen=True)
class LevelStep:
    """Number of steps of one kind whose endpoint has the given ordinate."""

    step: str
    level: int


@dataclass(frozen=True)
class PointsAtLevel:
    """Number of lattice points of the walk at the given ordinate.

    A path of k steps passes through k + 1 points, counted per position, so
    repeated visits to the same point all count.
    """

    level: int


@dataclass(frozen=True)
class PeakUD:
    """Number of ud factors whose middle point has the given ordinate."""

    level: int


@dataclass(frozen=True)
class PeakUV:
    """Number of uv factors whose middle point has the given ordinate."""

    level: int


StatKind = Union[ZCount, PairCount, ReturnSteps, LevelStep, PointsAtLevel, PeakUD, PeakUV]


def statistic(path: Path, stat: StatKind) -> int:
    s = path.steps
    if isinstance(stat, ZCount):
        return s.count(stat.step)
    if isinstance(stat, PairCount):
        pair = stat.first + stat.second
        return sum(1 for j in range(len(s) - 1) if s[j] == pair[0] and s[j + 1] == pair[1])
    if isinstance(stat, ReturnSteps):
        height = 0
        count = 0
        for ch in s:
            height += STEP_RISE[ch]
            if height == 0 and ch in (D, V):
                count += 1
        return count
    if isinstance(stat, LevelStep):
        height = 0
        count = 0
        for ch in s:
            height += STEP_RISE[ch]
            if ch == stat.step and height == stat.level:
                count += 1
        return count
    if isinstance(stat, PointsAtLevel):
        height = 0
        count = 1 if stat.level == 0 else 0
        for ch in s:
            height += STEP_RISE[ch]
            if height == stat.level:
                count += 1
        return count
    if isinstance(stat, (PeakUD, PeakUV)):
        closer = D if isinstance(stat, PeakUD) else V
        height = 0
        count = 0
        for j, ch in enumerate(s):
            height += STEP_RISE[ch]
            if ch == U and height == stat.level and j + 1 < len(s) and s[j + 1] == closer:
                count += 1
        return count
    raise TypeError(f"unknown statistic {stat!r}")


def weight(path: Path, a: int, b: int, c: int):
    """Product a^(#h) * b^(#v) * c^(#d)."""
    s = path.steps
    return a ** s.count(H) * b ** s.count(V) * c ** s.count(D)


# ---------------------------------------------------------------------------
# First-return structure


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class HeadH:
    rest: Path


@dataclass(frozen=True)
class Arch:
    """Leading arch u inner z, where z in {d, v} closes the first return."""

    closer: str
    inner: Path
    rest: Path


Decomposition = Union[Empty, HeadH, Arch]


def first_return_decompose(path: Path) -> Decomposition:
    s = path.steps
    if not s:
        return Empty()
    if s[0] == H:
        return HeadH(Path(s[1:]))
    # A valid nonempty path must open with u or h.
    assert s[0] == U, s
    height = 0
    for j, ch in enumerate(s):
        height += STEP_RISE[ch]
        if height == 0:
            return Arch(ch, Path(s[1:j]), Path(s[j + 1 :]))
    raise AssertionError("validated path never returned to the axis")


def reassemble(dec: Decomposition) -> Path:
    if isinstance(dec, Empty):
        return EMPTY
    if isinstance(dec, HeadH):
        return Path(H + dec.rest.steps)
    return Path(U + dec.inner.steps + dec.closer + dec.rest.steps)


def primitive_components(path: Path) -> list[Path]:
    """Split at every return to the x-axis.

    Each block is either a single h step or u inner z with z in {d, v}.
    """
    out = []
    height = 0
    start = 0
    for j, ch in enumerate(path.steps):
        height += STEP_RISE[ch]
        if height == 0:
            out.append(Path(path.steps[start : j + 1]))
            start = j + 1
    assert start == len(path.steps)
    return out
