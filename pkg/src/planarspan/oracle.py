"""Exhaustive ground truth for desk-scale instances.

Backtracking search over include/exclude decisions on the candidate
edge set, with crossing conflicts precomputed and a monotone
feasibility prune: if the chosen edges plus everything still available
cannot satisfy the target property, the branch dies.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .geometry import PointSet, Segment
from .udg import Property, connected_components, find_bridges, udg_edge_list

ORACLE_GUARD = 10
DEFAULT_BUDGET_S = 10.0


class OracleGuardError(ValueError):
    pass


class OracleTimeout(RuntimeError):
    """Raised when the per-instance search budget is exhausted."""


@dataclass
class OracleResult:
    exists: bool
    witness: list[Segment] | None


def _prop_ok(n: int, edge_ids: list[int], edges: list[Segment], prop: Property) -> bool:
    deg = [0] * n
    adj: list[list[int]] = [[] for _ in range(n)]
    for idx in edge_ids:
        seg = edges[idx]
        deg[seg.a] += 1
        deg[seg.b] += 1
        adj[seg.a].append(seg.b)
        adj[seg.b].append(seg.a)
    if min(deg, default=0) < 2:
        return False
    if prop is Property.MIN_DEGREE_2:
        return True
    if prop is Property.TWO_EDGE_CONNECTED:
        if len(connected_components(n, adj)) != 1:
            return False
        return not find_bridges(n, adj)
    raise ValueError(f"oracle does not support {prop}")


def exists_planar_subgraph(
    ps: PointSet,
    r: float,
    prop: Property,
    budget_s: float = DEFAULT_BUDGET_S,
    guard: int = ORACLE_GUARD,
) -> OracleResult:
    """Is there a crossing-free spanning subgraph of U(ps, r) with ``prop``?"""
    n = len(ps)
    if n > guard:
        raise OracleGuardError(f"oracle guard: n={n} exceeds {guard}")
    if prop not in (Property.MIN_DEGREE_2, Property.TWO_EDGE_CONNECTED):
        raise ValueError(f"oracle does not support {prop}")

    edges = udg_edge_list(ps, r)
    m = len(edges)
    # Longest first: infeasibility at small radii surfaces fast on the
    # exclude-first branch ordering.
    order = sorted(range(m), key=lambda i: (-ps.dist(edges[i].a, edges[i].b), i))
    edges = [edges[i] for i in order]

    conflict_mask = [0] * m
    if m >= 2:
        arr = np.asarray([[s.a, s.b] for s in edges], dtype=np.int64)
        for i, j in _kernels.crossing_pairs(ps.coords, arr):
            conflict_mask[i] |= 1 << j
            conflict_mask[j] |= 1 << i

    deadline = time.monotonic() + budget_s
    full_mask = (1 << m) - 1

    def mask_ids(mask: int) -> list[int]:
        out = []
        while mask:
            low = mask & -mask
            out.append(low.bit_length() - 1)
            mask ^= low
        return out

    def search(pos: int, chosen: int, banned: int) -> int | None:
        """Returns a witness mask or None. ``banned`` includes excluded edges."""
        if time.monotonic() > deadline:
            raise OracleTimeout(f"oracle budget of {budget_s:.1f}s exhausted (n={n}, m={m})")
        avail = full_mask & ~chosen & ~banned
        potential = chosen | avail
        if not _prop_ok(n, mask_ids(potential), edges, prop):
            return None
        # If nothing still available conflicts internally, take it all.
        clean = True
        probe = avail
        while probe:
            low = probe & -probe
            i = low.bit_length() - 1
            if conflict_mask[i] & avail:
                clean = False
                break
            probe ^= low
        if clean:
            return potential
        if _prop_ok(n, mask_ids(chosen), edges, prop):
            return chosen
        i = pos
        while i < m and (chosen | banned) >> i & 1:
            i += 1
        if i >= m:
            return None
        bit = 1 << i
        res = search(i + 1, chosen, banned | bit)
        if res is not None:
            return res
        if not conflict_mask[i] & chosen:
            return search(i + 1, chosen | bit, banned | (conflict_mask[i] & ~chosen))
        return None

    witness_mask = search(0, 0, 0)
    if witness_mask is None:
        return OracleResult(False, None)
    return OracleResult(True, sorted(edges[i] for i in mask_ids(witness_mask)))


def optimal_planar_radius(
    ps: PointSet,
    prop: Property,
    budget_s: float = DEFAULT_BUDGET_S,
    guard: int = ORACLE_GUARD,
) -> float:
    """Smallest pairwise distance r* with a planar spanning subgraph of prop."""
    n = len(ps)
    if n > guard:
        raise OracleGuardError(f"oracle guard: n={n} exceeds {guard}")
    d = ps.dist_matrix
    values = sorted(set(float(d[i, j]) for i in range(n) for j in range(i + 1, n)))
    if not values:
        raise ValueError("need at least two points")
    if not exists_planar_subgraph(ps, values[-1], prop, budget_s, guard).exists:
        raise ValueError(f"no planar spanning subgraph with {prop.value} at any radius")
    lo, hi = 0, len(values) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if exists_planar_subgraph(ps, values[mid], prop, budget_s, guard).exists:
            hi = mid
        else:
            lo = mid + 1
    return values[lo]
