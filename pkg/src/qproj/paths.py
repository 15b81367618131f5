"""Monotone lattice paths counted by the area they enclose.

A path from (0,0) to (m,n) takes unit steps right (R) and up (U).  The
area statistic is the area between the path and the bottom and right
walls of the m-by-n box: each up step taken at horizontal position x
contributes a row of m - x unit cells.  Summing q^area over all paths
gives a polynomial that coincides with the Gaussian binomial
[m+n choose m]_q; that identity is what pins the area convention down,
and it is asserted wherever these paths are used.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import BudgetExceeded
from .qcalc import QPoly

DEFAULT_MAX_STEPS = 24

RIGHT = "R"
UP = "U"


@dataclass(frozen=True)
class LatticePath:
    steps: tuple[str, ...]
    box: tuple[int, int]

    def __post_init__(self):
        m, n = self.box
        if self.steps.count(RIGHT) != m or self.steps.count(UP) != n:
            raise ValueError(f"path must take exactly {m} R steps and {n} U steps")

    def __str__(self) -> str:
        return "".join(self.steps)


def _check_box(m: int, n: int, max_steps: int) -> None:
    if m < 1 or n < 1:
        raise ValueError("box sides must be positive")
    if m + n > max_steps:
        raise BudgetExceeded(
            f"{m}+{n} steps exceed the path budget of {max_steps}")


def _iter_step_tuples(m: int, n: int):
    # choosing the R positions in lexicographic order enumerates the
    # step strings in lexicographic order with R < U
    total = m + n
    for rpos in itertools.combinations(range(total), m):
        steps = [UP] * total
        for i in rpos:
            steps[i] = RIGHT
        yield tuple(steps)


def enumerate_paths(m: int, n: int,
                    max_steps: int = DEFAULT_MAX_STEPS) -> list[LatticePath]:
    """All C(m+n, m) monotone paths, lexicographic with R before U."""
    _check_box(m, n, max_steps)
    return [LatticePath(steps, (m, n)) for steps in _iter_step_tuples(m, n)]


def path_area(p: LatticePath) -> int:
    """Area enclosed with the bottom and right walls of the box."""
    m, _ = p.box
    x = 0
    area = 0
    for step in p.steps:
        if step == RIGHT:
            x += 1
        else:
            area += m - x
    return area


def area_generating_function(m: int, n: int,
                             max_steps: int = DEFAULT_MAX_STEPS) -> QPoly:
    """Sum of q^area over all paths in the m-by-n box.

    Equals the Gaussian binomial [m+n choose m]_q; checked in the tests
    and by the CLI rather than assumed here.
    """
    _check_box(m, n, max_steps)
    counts = [0] * (m * n + 1)
    for steps in _iter_step_tuples(m, n):
        x = 0
        area = 0
        for step in steps:
            if step == RIGHT:
                x += 1
            else:
                area += m - x
        counts[area] += 1
    assert sum(counts) == math.comb(m + n, m)
    return QPoly(counts)
