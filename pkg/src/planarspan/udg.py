"""Unit disk graphs, structural audits, and connectivity predicates."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from . import _kernels
from .geometry import PointSet, Segment, make_segment


class EdgeKind(Enum):
    TREE = "tree"
    SNN = "snn"
    AUGMENT = "augment"
    UDG = "udg"


class Property(Enum):
    CONNECTED = "connected"
    MIN_DEGREE_2 = "mindeg2"
    TWO_EDGE_CONNECTED = "2ec"
    TWO_VERTEX_CONNECTED = "2vc"


@dataclass
class GeometricGraph:
    """Straight-line graph over a PointSet; edges tagged with provenance."""

    point_set: PointSet
    edges: dict[Segment, EdgeKind] = field(default_factory=dict)
    # For SNN-class edges: tail is the forest leaf the edge serves.
    snn_direction: dict[Segment, tuple[int, int]] = field(default_factory=dict)
    construction_log: list[str] = field(default_factory=list)

    @property
    def n(self) -> int:
        return len(self.point_set)

    def add_edge(self, a: int, b: int, kind: EdgeKind,
                 direction: tuple[int, int] | None = None) -> Segment:
        seg = make_segment(a, b)
        if seg.a >= self.n or seg.b >= self.n or seg.a < 0:
            raise ValueError(f"edge {seg} references a vertex outside 0..{self.n - 1}")
        if seg in self.edges:
            raise ValueError(f"duplicate edge {seg}")
        self.edges[seg] = kind
        if direction is not None:
            self.snn_direction[seg] = direction
        return seg

    def remove_edge(self, seg: Segment) -> None:
        del self.edges[seg]
        self.snn_direction.pop(seg, None)

    def has_edge(self, a: int, b: int) -> bool:
        return make_segment(a, b) in self.edges

    def kind(self, a: int, b: int) -> EdgeKind:
        return self.edges[make_segment(a, b)]

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for seg in self.edges:
            adj[seg.a].append(seg.b)
            adj[seg.b].append(seg.a)
        for lst in adj:
            lst.sort()
        return adj

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for seg in self.edges:
            deg[seg.a] += 1
            deg[seg.b] += 1
        return deg

    def edge_length(self, seg: Segment) -> float:
        return self.point_set.dist(seg.a, seg.b)

    def max_edge_length(self) -> float:
        if not self.edges:
            return 0.0
        return max(self.edge_length(seg) for seg in self.edges)

    def copy(self) -> "GeometricGraph":
        return GeometricGraph(
            self.point_set,
            dict(self.edges),
            dict(self.snn_direction),
            list(self.construction_log),
        )

    def sorted_edges(self) -> list[Segment]:
        return sorted(self.edges)


@dataclass
class VerificationReport:
    n_vertices: int
    n_edges: int
    is_planar: bool
    crossings: list[tuple[Segment, Segment]]
    min_degree: int
    bridges: list[Segment]
    is_connected: bool
    is_two_edge_connected: bool
    is_two_vertex_connected: bool
    max_edge_length: float

    def to_json_dict(self) -> dict:
        return {
            "n_vertices": self.n_vertices,
            "n_edges": self.n_edges,
            "is_planar": self.is_planar,
            "crossings": [[[s1.a, s1.b], [s2.a, s2.b]] for s1, s2 in self.crossings],
            "min_degree": self.min_degree,
            "bridges": [[s.a, s.b] for s in self.bridges],
            "is_connected": self.is_connected,
            "is_two_edge_connected": self.is_two_edge_connected,
            "is_two_vertex_connected": self.is_two_vertex_connected,
            "max_edge_length": self.max_edge_length,
        }


def build_udg(ps: PointSet, r: float) -> GeometricGraph:
    """U(ps, r): edge {u, v} present iff d(u, v) <= r."""
    if r <= 0:
        raise ValueError(f"radius must be positive, got {r}")
    g = GeometricGraph(ps)
    n = len(ps)
    d = ps.dist_matrix
    for i in range(n):
        for j in range(i + 1, n):
            if d[i, j] <= r:
                g.add_edge(i, j, EdgeKind.UDG)
    return g


def udg_edge_list(ps: PointSet, r: float) -> list[Segment]:
    n = len(ps)
    d = ps.dist_matrix
    return [Segment(i, j) for i in range(n) for j in range(i + 1, n) if d[i, j] <= r]


def crossing_segment_pairs(ps: PointSet, edges: list[Segment]) -> list[tuple[Segment, Segment]]:
    """All properly crossing pairs among ``edges``."""
    if len(edges) < 2:
        return []
    arr = np.asarray([[s.a, s.b] for s in edges], dtype=np.int64)
    idx = _kernels.crossing_pairs(ps.coords, arr)
    return [(edges[i], edges[j]) for i, j in idx]


def connected_components(n: int, adj: list[list[int]]) -> list[list[int]]:
    seen = [False] * n
    comps: list[list[int]] = []
    for s in range(n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        stack = [s]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    stack.append(v)
        comps.append(sorted(comp))
    return comps


def find_bridges(n: int, adj: list[list[int]]) -> list[Segment]:
    """Cut edges via iterative low-link DFS."""
    disc = [-1] * n
    low = [0] * n
    parent_edge: list[tuple[int, int] | None] = [None] * n
    bridges: list[Segment] = []
    timer = 0
    for s in range(n):
        if disc[s] != -1:
            continue
        stack: list[tuple[int, int]] = [(s, 0)]
        disc[s] = low[s] = timer
        timer += 1
        while stack:
            u, ptr = stack[-1]
            if ptr < len(adj[u]):
                stack[-1] = (u, ptr + 1)
                v = adj[u][ptr]
                pe = parent_edge[u]
                if disc[v] == -1:
                    parent_edge[v] = (u, v)
                    disc[v] = low[v] = timer
                    timer += 1
                    stack.append((v, 0))
                elif pe is None or v != pe[0]:
                    low[u] = min(low[u], disc[v])
            else:
                stack.pop()
                pe = parent_edge[u]
                if pe is not None:
                    p = pe[0]
                    low[p] = min(low[p], low[u])
                    if low[u] > disc[p]:
                        bridges.append(make_segment(p, u))
    return sorted(bridges)


def find_cut_vertices(n: int, adj: list[list[int]]) -> list[int]:
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    cuts: set[int] = set()
    timer = 0
    for s in range(n):
        if disc[s] != -1:
            continue
        root_children = 0
        stack: list[tuple[int, int]] = [(s, 0)]
        disc[s] = low[s] = timer
        timer += 1
        while stack:
            u, ptr = stack[-1]
            if ptr < len(adj[u]):
                stack[-1] = (u, ptr + 1)
                v = adj[u][ptr]
                if disc[v] == -1:
                    parent[v] = u
                    if u == s:
                        root_children += 1
                    disc[v] = low[v] = timer
                    timer += 1
                    stack.append((v, 0))
                elif v != parent[u]:
                    low[u] = min(low[u], disc[v])
            else:
                stack.pop()
                p = parent[u]
                if p != -1:
                    low[p] = min(low[p], low[u])
                    if p != s and low[u] >= disc[p]:
                        cuts.add(p)
        if root_children > 1:
            cuts.add(s)
    return sorted(cuts)


def biconnected_components(g: GeometricGraph) -> tuple[list[set[int]], list[Segment]]:
    """Block decomposition of a connected graph.

    Returns (blocks, bridge_blocks): blocks are the vertex sets of
    2-vertex-connected pieces with >= 3 vertices; 2-vertex blocks are
    returned separately as their bridge edges. Cut vertices appear in
    every block they join.
    """
    n = g.n
    adj = g.adjacency()
    if len(connected_components(n, adj)) != 1:
        raise ValueError("biconnected_components requires a connected graph")

    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    edge_stack: list[tuple[int, int]] = []
    blocks: list[set[int]] = []
    timer = 0
    for s in range(n):
        if disc[s] != -1:
            continue
        stack: list[tuple[int, int]] = [(s, 0)]
        disc[s] = low[s] = timer
        timer += 1
        while stack:
            u, ptr = stack[-1]
            if ptr < len(adj[u]):
                stack[-1] = (u, ptr + 1)
                v = adj[u][ptr]
                if disc[v] == -1:
                    parent[v] = u
                    edge_stack.append((u, v))
                    disc[v] = low[v] = timer
                    timer += 1
                    stack.append((v, 0))
                elif v != parent[u] and disc[v] < disc[u]:
                    edge_stack.append((u, v))
                    low[u] = min(low[u], disc[v])
            else:
                stack.pop()
                p = parent[u]
                if p != -1:
                    low[p] = min(low[p], low[u])
                    if low[u] >= disc[p]:
                        verts: set[int] = set()
                        while edge_stack:
                            x, y = edge_stack[-1]
                            if disc[x] >= disc[u]:
                                edge_stack.pop()
                                verts.update((x, y))
                            else:
                                break
                        if edge_stack and edge_stack[-1] == (p, u):
                            edge_stack.pop()
                        verts.update((p, u))
                        blocks.append(verts)
    big = [b for b in blocks if len(b) >= 3]
    bridge_blocks = sorted(make_segment(*sorted(b)[:2]) for b in blocks if len(b) == 2)
    return big, bridge_blocks


def audit(g: GeometricGraph) -> VerificationReport:
    """Planarity, degree, bridge, edge-length, and connectivity audit."""
    n = g.n
    adj = g.adjacency()
    edges = g.sorted_edges()
    crossings = crossing_segment_pairs(g.point_set, edges)
    degrees = g.degrees()
    bridges = find_bridges(n, adj)
    comps = connected_components(n, adj)
    connected = len(comps) == 1 and n >= 1
    cut_vertices = find_cut_vertices(n, adj)
    two_vertex = connected and n >= 3 and not cut_vertices
    return VerificationReport(
        n_vertices=n,
        n_edges=len(edges),
        is_planar=not crossings,
        crossings=crossings,
        min_degree=min(degrees) if n else 0,
        bridges=bridges,
        is_connected=connected,
        is_two_edge_connected=connected and not bridges and n >= 2,
        is_two_vertex_connected=two_vertex,
        max_edge_length=g.max_edge_length(),
    )


def satisfies(ps: PointSet, r: float, prop: Property) -> bool:
    """Cheap precondition probe of U(ps, r); skips the planarity scan."""
    n = len(ps)
    d = ps.dist_matrix
    adj: list[list[int]] = [[] for _ in range(n)]
    deg = [0] * n
    for i in range(n):
        row = d[i]
        for j in range(i + 1, n):
            if row[j] <= r:
                adj[i].append(j)
                adj[j].append(i)
                deg[i] += 1
                deg[j] += 1
    if prop is Property.MIN_DEGREE_2:
        return n >= 3 and min(deg) >= 2
    connected = len(connected_components(n, adj)) == 1
    if prop is Property.CONNECTED:
        return connected
    if prop is Property.TWO_EDGE_CONNECTED:
        return n >= 2 and connected and not find_bridges(n, adj)
    if prop is Property.TWO_VERTEX_CONNECTED:
        return n >= 3 and connected and not find_cut_vertices(n, adj)
    raise ValueError(f"unsupported property {prop}")


def min_radius_for(ps: PointSet, prop: Property) -> float:
    """Smallest pairwise distance r* with U(ps, r*) satisfying ``prop``."""
    n = len(ps)
    if prop is Property.TWO_EDGE_CONNECTED and n < 3:
        raise ValueError("two-edge connectivity needs at least 3 points")
    d = ps.dist_matrix
    values = sorted(set(float(d[i, j]) for i in range(n) for j in range(i + 1, n)))
    if not values:
        raise ValueError("need at least two points")
    if not satisfies(ps, values[-1], prop):
        raise ValueError(f"{prop.value} unattainable at the maximum pairwise distance")
    lo, hi = 0, len(values) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if satisfies(ps, values[mid], prop):
            hi = mid
        else:
            lo = mid + 1
    return values[lo]
