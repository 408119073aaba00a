"""Planar geometry primitives with exact-decision predicates.

Orientation is decided by a floating-point filter backed by exact
rational arithmetic, so its sign is never wrong for representable
inputs. Distance comparisons use the tolerance DIST_TOL with
deterministic lexicographic tie-breaking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from . import _kernels

DIST_TOL = 1e-9
PERTURB_MAGNITUDE = 1e-7


class Point(NamedTuple):
    x: float
    y: float


class Orientation(Enum):
    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTERCLOCKWISE = 1


class Segment(NamedTuple):
    """Undirected segment between point ids, stored with a < b."""

    a: int
    b: int


def make_segment(a: int, b: int) -> Segment:
    if a == b:
        raise ValueError(f"degenerate segment at vertex {a}")
    return Segment(a, b) if a < b else Segment(b, a)


@dataclass(frozen=True)
class PointSet:
    """Indexed 2D points; vertex ids are positions 0..n-1."""

    coords: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.coords, dtype=np.float64)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise ValueError("coords must be an (n, 2) array")
        if not np.all(np.isfinite(arr)):
            raise ValueError("coordinates must be finite")
        object.__setattr__(self, "coords", arr)
        dists = _distance_matrix(arr)
        # Keep the matrix around: every module compares against the same
        # sqrt-rounded values, which makes radius thresholds self-consistent.
        object.__setattr__(self, "_dists", dists)
        n = len(arr)
        if n > 1:
            offdiag = dists[np.triu_indices(n, k=1)]
            if offdiag.size and offdiag.min() == 0.0:
                raise ValueError("points must be pairwise distinct")

    def __len__(self) -> int:
        return len(self.coords)

    def point(self, i: int) -> Point:
        return Point(float(self.coords[i, 0]), float(self.coords[i, 1]))

    def points(self) -> list[Point]:
        return [Point(float(x), float(y)) for x, y in self.coords]

    def dist(self, i: int, j: int) -> float:
        return float(self._dists[i, j])

    @property
    def dist_matrix(self) -> np.ndarray:
        return self._dists


def _distance_matrix(coords: np.ndarray) -> np.ndarray:
    diff = coords[:, None, :] - coords[None, :, :]
    return np.sqrt((diff * diff).sum(axis=2))


def point_set(points: Iterable[tuple[float, float]], perturb: bool = False) -> PointSet:
    """Build a PointSet; ``perturb`` applies the deterministic micro-jitter."""
    arr = np.array(list(points), dtype=np.float64)
    if perturb:
        arr = micro_perturb(arr)
    return PointSet(arr)


def micro_perturb(coords: np.ndarray, magnitude: float = PERTURB_MAGNITUDE) -> np.ndarray:
    """Deterministic per-index jitter for degenerate inputs (off by default)."""
    out = np.array(coords, dtype=np.float64, copy=True)
    for i in range(len(out)):
        # Splitmix-style integer hash of the index, mapped to [-1, 1).
        h = (i * 0x9E3779B97F4A7C15 + 0xBF58476D1CE4E5B9) & 0xFFFFFFFFFFFFFFFF
        h ^= h >> 31
        h = (h * 0x94D049BB133111EB) & 0xFFFFFFFFFFFFFFFF
        ux = ((h & 0xFFFFFFFF) / 2**31) - 1.0
        uy = (((h >> 32) & 0xFFFFFFFF) / 2**31) - 1.0
        out[i, 0] += magnitude * ux
        out[i, 1] += magnitude * uy
    return out


def orientation(p: Point, q: Point, r: Point) -> Orientation:
    s = _kernels.orient_sign(p[0], p[1], q[0], q[1], r[0], r[1])
    return Orientation(s)


def orient_ids(ps: PointSet, i: int, j: int, k: int) -> int:
    c = ps.coords
    return _kernels.orient_sign(c[i, 0], c[i, 1], c[j, 0], c[j, 1], c[k, 0], c[k, 1])


def properly_cross(s1: Segment, s2: Segment, ps: PointSet) -> bool:
    """True iff the open interiors of the two segments meet in one point.

    Segments sharing an endpoint do not properly cross.
    """
    if s1.a in (s2.a, s2.b) or s1.b in (s2.a, s2.b):
        return False
    c = ps.coords
    return _kernels.segments_properly_cross(
        c[s1.a, 0], c[s1.a, 1], c[s1.b, 0], c[s1.b, 1],
        c[s2.a, 0], c[s2.a, 1], c[s2.b, 0], c[s2.b, 1],
    )


def angle_at(v: Point, a: Point, b: Point) -> float:
    """Unsigned angle in [0, pi] between rays v->a and v->b."""
    ax, ay = a[0] - v[0], a[1] - v[1]
    bx, by = b[0] - v[0], b[1] - v[1]
    na = math.hypot(ax, ay)
    nb = math.hypot(bx, by)
    if na == 0.0 or nb == 0.0:
        raise ValueError("angle_at: ray endpoint coincides with the vertex")
    cosv = (ax * bx + ay * by) / (na * nb)
    cosv = max(-1.0, min(1.0, cosv))
    return math.acos(cosv)


def angle_ids(ps: PointSet, v: int, a: int, b: int) -> float:
    return angle_at(ps.point(v), ps.point(a), ps.point(b))


@dataclass(frozen=True)
class GeneralPositionViolation:
    kind: str  # "collinear" or "distance_tie"
    items: tuple


def validate_general_position(ps: PointSet, tol: float = DIST_TOL) -> list[GeneralPositionViolation]:
    """Report collinear triples and pairwise-distance ties within ``tol``."""
    n = len(ps)
    violations: list[GeneralPositionViolation] = []
    c = ps.coords
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if _kernels.orient_sign(c[i, 0], c[i, 1], c[j, 0], c[j, 1], c[k, 0], c[k, 1]) == 0:
                    violations.append(GeneralPositionViolation("collinear", (i, j, k)))
    pairs = [(ps.dist(i, j), i, j) for i in range(n) for j in range(i + 1, n)]
    pairs.sort()
    for (d1, i1, j1), (d2, i2, j2) in zip(pairs, pairs[1:]):
        if d2 - d1 <= tol:
            violations.append(GeneralPositionViolation("distance_tie", ((i1, j1), (i2, j2), d1, d2)))
    return violations


def sorted_neighbors(ps: PointSet, v: int, candidates: Sequence[int]) -> list[int]:
    """Candidates ordered by distance from v; ties within DIST_TOL break by id."""
    ranked = sorted(candidates, key=lambda u: (ps.dist(v, u), u))
    out: list[int] = []
    i = 0
    while i < len(ranked):
        j = i
        while j + 1 < len(ranked) and ps.dist(v, ranked[j + 1]) - ps.dist(v, ranked[i]) <= DIST_TOL:
            j += 1
        group = sorted(ranked[i:j + 1])
        out.extend(group)
        i = j + 1
    return out


def convex_hull_ids(ps: PointSet, ids: Sequence[int]) -> list[int]:
    """Convex hull of the given vertex ids in ccw order (Andrew's monotone chain)."""
    pts = sorted(set(ids), key=lambda i: (ps.coords[i, 0], ps.coords[i, 1], i))
    if len(pts) <= 2:
        return pts

    def half(seq):
        chain: list[int] = []
        for p in seq:
            while len(chain) >= 2 and orient_ids(ps, chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(reversed(pts))
    return lower[:-1] + upper[:-1]


def point_in_convex_polygon(ps: PointSet, poly: Sequence[int], q: int) -> bool:
    """Strict interior test, exact via orientation signs; poly in ccw order."""
    if len(poly) < 3:
        return False
    for a, b in zip(poly, list(poly[1:]) + [poly[0]]):
        if orient_ids(ps, a, b, q) <= 0:
            return False
    return True


def region_interior_points(ps: PointSet, corner_ids: Sequence[int],
                           candidates: Iterable[int] | None = None) -> list[int]:
    """Point ids strictly inside the convex hull of ``corner_ids``."""
    hull = convex_hull_ids(ps, corner_ids)
    corners = set(corner_ids)
    if candidates is None:
        candidates = range(len(ps))
    return [q for q in candidates
            if q not in corners and point_in_convex_polygon(ps, hull, q)]
