"""Nearest-neighbor forests, Euclidean MSTs, second-nearest-neighbor edges.

The forest carries the proper 2-coloring of internal vertices (black and
red, leaves green) that the augmentation passes key off.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .geometry import DIST_TOL, PointSet, Segment, make_segment
from .udg import connected_components


class Color(Enum):
    BLACK = "black"
    RED = "red"
    GREEN = "green"


class MinDegreeError(ValueError):
    pass


@dataclass
class ColoredForest:
    """Acyclic adjacency over point ids plus the black/red/green coloring."""

    n: int
    edges: set[Segment] = field(default_factory=set)
    color: list[Color] = field(default_factory=list)
    parent: list[int] = field(default_factory=list)
    roots: list[int] = field(default_factory=list)

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for seg in self.edges:
            adj[seg.a].append(seg.b)
            adj[seg.b].append(seg.a)
        for lst in adj:
            lst.sort()
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for seg in self.edges if v in (seg.a, seg.b))

    def leaves(self) -> list[int]:
        deg = [0] * self.n
        for seg in self.edges:
            deg[seg.a] += 1
            deg[seg.b] += 1
        return [v for v in range(self.n) if deg[v] == 1]

    def is_leaf(self, v: int) -> bool:
        return self.color[v] is Color.GREEN

    def has_edge(self, a: int, b: int) -> bool:
        return make_segment(a, b) in self.edges


@dataclass(frozen=True)
class SnnEdge:
    tail: int  # forest leaf
    head: int  # its second nearest neighbor
    length: float

    def segment(self) -> Segment:
        return make_segment(self.tail, self.head)


def _colorize(n: int, edges: set[Segment]) -> tuple[list[Color], list[int], list[int]]:
    """BFS-layer the forest: even layers black, odd red, then leaves green."""
    adj: list[list[int]] = [[] for _ in range(n)]
    deg = [0] * n
    for seg in edges:
        adj[seg.a].append(seg.b)
        adj[seg.b].append(seg.a)
        deg[seg.a] += 1
        deg[seg.b] += 1
    for lst in adj:
        lst.sort()
    color: list[Color] = [Color.BLACK] * n
    parent = [-1] * n
    roots: list[int] = []
    seen = [False] * n
    for s in range(n):
        if seen[s]:
            continue
        roots.append(s)
        seen[s] = True
        layer = 0
        frontier = [s]
        while frontier:
            for v in frontier:
                color[v] = Color.BLACK if layer % 2 == 0 else Color.RED
            nxt = []
            for v in frontier:
                for w in adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        parent[w] = v
                        nxt.append(w)
            frontier = nxt
            layer += 1
    for v in range(n):
        if deg[v] == 1:
            color[v] = Color.GREEN
    return color, parent, roots


def _forest_from_edges(n: int, edges: set[Segment]) -> ColoredForest:
    color, parent, roots = _colorize(n, edges)
    return ColoredForest(n=n, edges=edges, color=color, parent=parent, roots=roots)


def _neighbors_within(ps: PointSet, v: int, r: float) -> list[int]:
    d = ps.dist_matrix[v]
    return [u for u in range(len(ps)) if u != v and d[u] <= r]


def _closest(ps: PointSet, v: int, candidates: list[int]) -> int:
    """Nearest candidate; ties within DIST_TOL break to the smaller id."""
    best = min(candidates, key=lambda u: (ps.dist(v, u), u))
    best_d = ps.dist(v, best)
    tied = [u for u in candidates if ps.dist(v, u) - best_d <= DIST_TOL]
    return min(tied)


def nearest_neighbor_forest(ps: PointSet, r: float) -> ColoredForest:
    """Undirected dedup of each vertex's nearest-neighbor edge in U(ps, r)."""
    n = len(ps)
    edges: set[Segment] = set()
    for v in range(n):
        nbrs = _neighbors_within(ps, v, r)
        if not nbrs:
            raise MinDegreeError(f"vertex {v} is isolated in U(P, {r})")
        edges.add(make_segment(v, _closest(ps, v, nbrs)))
    return _forest_from_edges(n, edges)


def euclidean_mst(ps: PointSet, r: float) -> ColoredForest:
    """Minimum spanning tree of U(ps, r) by Kruskal; unique under general position."""
    n = len(ps)
    d = ps.dist_matrix
    cand = sorted(
        (float(d[i, j]), i, j)
        for i in range(n) for j in range(i + 1, n) if d[i, j] <= r
    )
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edges: set[Segment] = set()
    for _, i, j in cand:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            edges.add(Segment(i, j))
            if len(edges) == n - 1:
                break
    if len(edges) != n - 1:
        raise ValueError(f"U(P, {r}) is disconnected; no spanning tree exists")
    return _forest_from_edges(n, edges)


def snn_edges(ps: PointSet, forest: ColoredForest, r: float = 1.0) -> list[SnnEdge]:
    """One second-nearest-neighbor edge per forest leaf.

    Requires min degree >= 2 in U(ps, r), which bounds every returned
    edge by r and keeps the set disjoint from the forest edges.
    """
    adj = forest.adjacency()
    out: list[SnnEdge] = []
    for leaf in sorted(forest.leaves()):
        nbrs = _neighbors_within(ps, leaf, r)
        if len(nbrs) < 2:
            raise MinDegreeError(
                f"leaf {leaf} has {len(nbrs)} neighbor(s) in U(P, {r}); need >= 2"
            )
        first = _closest(ps, leaf, nbrs)
        # The leaf's forest neighbor is its nearest neighbor under general
        # position; excluding it too keeps the set forest-disjoint even on
        # near-tied inputs.
        skip = {first, *adj[leaf]}
        rest = [u for u in nbrs if u not in skip]
        if not rest:
            raise MinDegreeError(
                f"leaf {leaf} has no second-nearest candidate in U(P, {r})"
            )
        second = _closest(ps, leaf, rest)
        out.append(SnnEdge(tail=leaf, head=second, length=ps.dist(leaf, second)))
    return out


def forest_components(forest: ColoredForest) -> list[list[int]]:
    return connected_components(forest.n, forest.adjacency())


def choose_processing_color(forest: ColoredForest,
                            arduous_black: int, arduous_red: int,
                            bridge_black: int = 0, bridge_red: int = 0) -> Color:
    """Pick the chromatic class to process: more arduous/bridge-incident wins,
    ties go black."""
    black_score = arduous_black + bridge_black
    red_score = arduous_red + bridge_red
    return Color.RED if red_score > black_score else Color.BLACK
