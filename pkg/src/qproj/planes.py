"""Abstract finite projective planes and the Bruck-Ryser order test.

A projective plane of order q, stated tersely: a finite set of points
with distinguished subsets called lines such that not all points lie on
one line, each line has q + 1 points, each pair of distinct points is on
a unique line, and each pair of distinct lines meets in a unique point.
validate_plane checks exactly that, inferring q from the first line.

Degenerate order-1 structures (lines of two points) are reported as
valid with an explicit flag rather than rejected; the q = 1 thread is
the point of this package.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable

from .errors import DimensionMismatch, GeometryFormatError
from .geometry import IncidenceGeometry


@dataclass(frozen=True)
class PlaneStructure:
    points: tuple[str, ...]
    lines: tuple[tuple[str, ...], ...]

    @classmethod
    def from_sets(cls, points: Iterable[str],
                  lines: Iterable[Iterable[str]]) -> "PlaneStructure":
        return cls(tuple(points), tuple(tuple(line) for line in lines))


@dataclass(frozen=True)
class PlaneCheck:
    description: str
    passed: bool
    witness: str | None = None


@dataclass(frozen=True)
class PlaneReport:
    checks: tuple[PlaneCheck, ...]
    order: int | None
    uniform_line_sizes: bool
    at_least_three_points: bool  # the hypothesis that already forces uniformity

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_dict(self) -> dict:
        return {
            "checks": [
                {"description": c.description, "passed": c.passed,
                 "witness": c.witness}
                for c in self.checks
            ],
            "order": self.order,
            "uniform_line_sizes": self.uniform_line_sizes,
            "at_least_three_points": self.at_least_three_points,
            "passed": self.passed,
        }


def validate_plane(p: PlaneStructure) -> PlaneReport:
    """Check the plane conditions; failures carry a witness."""
    index = {name: i for i, name in enumerate(p.points)}
    npts = len(p.points)
    masks = []
    for line in p.lines:
        mask = 0
        for name in line:
            mask |= 1 << index[name]
        masks.append(mask)
    full = (1 << npts) - 1

    w_span = None
    for i, m in enumerate(masks):
        if npts > 0 and m == full:
            w_span = f"line {i} contains every point"
            break

    sizes = [m.bit_count() for m in masks]
    uniform = len(set(sizes)) <= 1
    order = sizes[0] - 1 if sizes else None
    w_uniform = None
    if not uniform:
        j = next(i for i, s in enumerate(sizes) if s != sizes[0])
        w_uniform = f"line 0 has {sizes[0]} points but line {j} has {sizes[j]}"

    w_pairs = None
    pair_count: dict[tuple[int, int], int] = {}
    for m in masks:
        bits = [b for b in range(npts) if m >> b & 1]
        for a in range(len(bits)):
            for b in range(a + 1, len(bits)):
                key = (bits[a], bits[b])
                pair_count[key] = pair_count.get(key, 0) + 1
    for a in range(npts):
        for b in range(a + 1, npts):
            c = pair_count.get((a, b), 0)
            if c != 1:
                w_pairs = (f"points {p.points[a]} and {p.points[b]} lie on "
                           f"{c} lines")
                break
        if w_pairs:
            break

    w_meets = None
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if masks[i] == masks[j]:
                w_meets = f"lines {i} and {j} are identical"
                break
            common = (masks[i] & masks[j]).bit_count()
            if common != 1:
                w_meets = f"lines {i} and {j} meet in {common} points"
                break
        if w_meets:
            break

    checks = (
        PlaneCheck("not all points lie on one line", w_span is None, w_span),
        PlaneCheck("every line has the same number of points", uniform, w_uniform),
        PlaneCheck("each pair of distinct points is on a unique line",
                   w_pairs is None, w_pairs),
        PlaneCheck("each pair of distinct lines meets in a unique point",
                   w_meets is None, w_meets),
    )
    at_least_three = bool(sizes) and min(sizes) >= 3
    return PlaneReport(checks, order if uniform else None,
                       uniform, at_least_three)


class BruckRyserVerdict(enum.Enum):
    NOT_APPLICABLE = "NotApplicable"
    FAILS = "Fails"
    PASSES = "Passes"


def two_squares(n: int) -> tuple[int, int] | None:
    """A representation n = a^2 + b^2 with a <= b, or None."""
    for a in range(math.isqrt(n) + 1):
        rest = n - a * a
        b = math.isqrt(rest)
        if b * b == rest and a <= b:
            return a, b
    return None


def bruck_ryser(order: int) -> BruckRyserVerdict:
    """Necessary condition on plane orders congruent to 1 or 2 mod 4.

    Such an order must be a sum of two squares for a plane to exist.
    PASSES means only "not excluded by this test"; famously, order 10
    passes yet no plane of order 10 exists (ruled out by exhaustive
    computer search).
    """
    if order < 2:
        raise ValueError("order must be >= 2")
    if order % 4 not in (1, 2):
        return BruckRyserVerdict.NOT_APPLICABLE
    if two_squares(order) is None:
        return BruckRyserVerdict.FAILS
    return BruckRyserVerdict.PASSES


def plane_from_geometry(g: IncidenceGeometry) -> PlaneStructure:
    """Extract the lines of a 2-dimensional geometry as a plane structure."""
    full = (1 << len(g.points)) - 1
    dim_p = None
    for i, m in enumerate(g.subspaces):
        if m == full:
            dim_p = g.dims[i]
            break
    if dim_p != 2:
        raise DimensionMismatch(
            f"geometry has dimension {dim_p}, need 2 to extract a plane")
    lines = tuple(g.subspace_point_names(i)
                  for i in range(len(g.subspaces)) if g.dims[i] == 1)
    return PlaneStructure(g.points, lines)


def plane_to_json(p: PlaneStructure) -> dict:
    return {
        "points": list(p.points),
        "lines": [sorted(line) for line in p.lines],
    }


def plane_from_json(obj: object) -> PlaneStructure:
    if not isinstance(obj, dict):
        raise GeometryFormatError("top level: expected an object")
    if "points" not in obj or not isinstance(obj["points"], list):
        raise GeometryFormatError("points: expected a list")
    for i, name in enumerate(obj["points"]):
        if not isinstance(name, str):
            raise GeometryFormatError(f"points[{i}]: expected a string")
    if len(set(obj["points"])) != len(obj["points"]):
        raise GeometryFormatError("points: duplicate point identifier")
    if "lines" not in obj or not isinstance(obj["lines"], list):
        raise GeometryFormatError("lines: expected a list")
    known = set(obj["points"])
    lines = []
    for i, line in enumerate(obj["lines"]):
        if not isinstance(line, list):
            raise GeometryFormatError(f"lines[{i}]: expected a list")
        for name in line:
            if not isinstance(name, str) or name not in known:
                raise GeometryFormatError(f"lines[{i}]: unknown point {name!r}")
        if len(set(line)) != len(line):
            raise GeometryFormatError(f"lines[{i}]: duplicate point")
        lines.append(tuple(line))
    return PlaneStructure(tuple(obj["points"]), tuple(lines))
