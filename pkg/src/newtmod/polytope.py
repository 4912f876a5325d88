"""Exact lattice polytopes and Newton polytopes of modules.

A polytope is stored as its lexicographically sorted list of extreme
points.  Extremeness and membership are decided by an exact rational
phase-1 simplex; there is no floating point anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import DimensionMismatch, EmptyInput
from .modules import Module, enumerate_submodules, sub_dims


def lp_feasible(a: Sequence[Sequence], b: Sequence) -> bool:
    """Whether ``a x = b`` has a solution with ``x >= 0``.

    Phase 1 of the simplex method on exact fractions: one artificial
    variable per row, minimise their sum, Bland's rule for both the
    entering and the leaving variable (so it cannot cycle).
    """
    m = len(a)
    k = len(a[0]) if m else 0
    rows = []
    for i in range(m):
        sign = -1 if b[i] < 0 else 1
        row = [Fraction(sign * x) for x in a[i]]
        row += [Fraction(int(j == i)) for j in range(m)]
        row.append(Fraction(sign * b[i]))
        rows.append(row)
    basis = [k + i for i in range(m)]
    width = k + m
    # reduced costs of the phase-1 objective, last entry is -objective
    cost = [-sum(r[j] for r in rows) if j < k else Fraction(0) for j in range(width)]
    cost.append(-sum(r[-1] for r in rows))
    while True:
        entering = next((j for j in range(width) if cost[j] < 0), None)
        if entering is None:
            break
        best = None
        for i, r in enumerate(rows):
            if r[entering] > 0:
                ratio = r[-1] / r[entering]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:  # cannot happen: the phase-1 objective is bounded below
            raise RuntimeError("unbounded phase-1 problem")
        i = best[1]
        piv = rows[i][entering]
        rows[i] = [x / piv for x in rows[i]]
        for r in range(m):
            if r != i and rows[r][entering]:
                f = rows[r][entering]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[i])]
        f = cost[entering]
        cost = [x - f * y for x, y in zip(cost, rows[i])]
        basis[i] = entering
    return cost[-1] == 0


def in_convex_hull(points: Sequence[Sequence[int]], v: Sequence) -> bool:
    if not points:
        return False
    n = len(v)
    a = [[pt[r] for pt in points] for r in range(n)] + [[1] * len(points)]
    b = [Fraction(x) for x in v] + [Fraction(1)]
    return lp_feasible(a, b)


@dataclass(frozen=True)
class LatticePolytope:
    extremes: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        pts = tuple(tuple(int(x) for x in pt) for pt in self.extremes)
        if not pts:
            raise EmptyInput("a polytope needs at least one point")
        if len({len(pt) for pt in pts}) != 1:
            raise DimensionMismatch("points of different lengths")
        if list(pts) != sorted(set(pts)):
            raise ValueError("extremes must be distinct and sorted lexicographically")
        for k, pt in enumerate(pts):
            if in_convex_hull(pts[:k] + pts[k + 1 :], pt):
                raise ValueError(f"{pt} is not an extreme point")
        object.__setattr__(self, "extremes", pts)

    @property
    def ambient(self) -> int:
        return len(self.extremes[0])

    def to_dict(self) -> dict:
        return {"ambient": self.ambient, "extremes": [list(pt) for pt in self.extremes]}

    @classmethod
    def from_dict(cls, data: dict) -> "LatticePolytope":
        poly = cls(tuple(tuple(pt) for pt in data["extremes"]))
        if poly.ambient != data["ambient"]:
            raise DimensionMismatch("ambient does not match the extreme points")
        return poly


def hull_extremes(points: Iterable[Sequence[int]]) -> LatticePolytope:
    """Extreme points of the convex hull of a finite set of lattice points.

    Raises:
        EmptyInput: no points.
        DimensionMismatch: points of different lengths.
    """
    pts = sorted({tuple(int(x) for x in pt) for pt in points})
    if not pts:
        raise EmptyInput("hull of an empty point set")
    if len({len(pt) for pt in pts}) != 1:
        raise DimensionMismatch("points of different lengths")
    keep = [pt for k, pt in enumerate(pts) if not in_convex_hull(pts[:k] + pts[k + 1 :], pt)]
    return LatticePolytope(tuple(keep))


def contains_point(poly: LatticePolytope, v: Sequence) -> bool:
    """Whether the rational point ``v`` lies in ``poly``."""
    if len(v) != poly.ambient:
        raise DimensionMismatch(f"point of length {len(v)} in ambient dimension {poly.ambient}")
    for r in range(poly.ambient):
        coords = [pt[r] for pt in poly.extremes]
        if not min(coords) <= Fraction(v[r]) <= max(coords):
            return False
    return in_convex_hull(poly.extremes, v)


def polytopes_equal(a: LatticePolytope, b: LatticePolytope) -> bool:
    if a.ambient != b.ambient:
        raise DimensionMismatch("polytopes in different ambient dimensions")
    return a.extremes == b.extremes


def quotient_dimension_vectors(m: Module) -> set[tuple[int, ...]]:
    return {tuple(d - s for d, s in zip(m.dims, sub_dims(sub))) for sub in enumerate_submodules(m)}


@lru_cache(maxsize=16384)
def newton_polytope(m: Module) -> LatticePolytope:
    """Convex hull of the dimension vectors of all quotients of ``m``.

    Raises:
        TooLarge: ``m`` is beyond the submodule enumeration guard.
    """
    return hull_extremes(quotient_dimension_vectors(m))


def submodule_polytope(m: Module) -> LatticePolytope:
    """Convex hull of the dimension vectors of all submodules of ``m``."""
    return hull_extremes(sub_dims(s) for s in enumerate_submodules(m))
