"""Bridge augmentation to 2-edge connectivity.

Three constructions over a point set whose unit disk graph satisfies
progressively stronger assumptions:

* ``two_edge_connected_sqrt5``: connected + min degree 2, edges <= sqrt(5)
* ``two_edge_connected_r2``: 2-vertex connected, edges <= 2
* ``two_edge_connected_blocks``: 2-edge connected, edges <= 2 (block-wise)
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .crossing import (
    AlgorithmError,
    LENGTH_TOL,
    assemble_forest_snn,
    planar_min_degree_two,
    planarize,
)
from .geometry import PointSet, Segment, angle_ids, make_segment, properly_cross, region_interior_points
from .spanning import (
    Color,
    ColoredForest,
    MinDegreeError,
    choose_processing_color,
    euclidean_mst,
    snn_edges,
)
from .udg import (
    EdgeKind,
    GeometricGraph,
    Property,
    audit,
    biconnected_components,
    build_udg,
    crossing_segment_pairs,
    find_bridges,
    min_radius_for,
    satisfies,
)

SQRT5 = math.sqrt(5.0)
ARDUOUS_ANGLE = 5.0 * math.pi / 6.0


class PreconditionError(ValueError):
    """The input's unit disk graph lacks the assumed connectivity."""


@dataclass(frozen=True)
class ArduousVertex:
    id: int
    neighbors: tuple[int, int]
    angle: float


def find_arduous(g: GeometricGraph, coloring: ColoredForest, color: Color) -> list[ArduousVertex]:
    """Vertices of the given color with degree 2, on no cycle, and a
    near-straight incident angle (> 5*pi/6).

    A degree-2 vertex lies on a cycle iff neither incident edge is a
    bridge.
    """
    ps = g.point_set
    adj = g.adjacency()
    bridges = set(find_bridges(g.n, adj))
    out: list[ArduousVertex] = []
    for v in range(g.n):
        if coloring.color[v] is not color:
            continue
        if len(adj[v]) != 2:
            continue
        a, b = adj[v]
        if make_segment(v, a) not in bridges and make_segment(v, b) not in bridges:
            continue
        ang = angle_ids(ps, v, a, b)
        if ang > ARDUOUS_ANGLE:
            out.append(ArduousVertex(v, (a, b), ang))
    return out


def _components_excluding(n: int, adj: list[list[int]], banned: int) -> list[list[int]]:
    seen = [False] * n
    seen[banned] = True
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _eliminate_arduous(g: GeometricGraph, forest: ColoredForest, color: Color) -> None:
    """Put every arduous vertex of the processing color on a cycle.

    Each round reconnects the two components around one arduous vertex
    with the shortest available unit edge, dropping any augment edge it
    crosses. The count of arduous vertices strictly decreases.
    """
    ps = g.point_set
    d = ps.dist_matrix
    for _ in range(g.n + 1):
        arduous = find_arduous(g, forest, color)
        if not arduous:
            return
        before = len(arduous)
        v = arduous[0].id
        comps = _components_excluding(g.n, g.adjacency(), v)
        if len(comps) != 2:
            raise AlgorithmError(
                f"arduous vertex {v} splits the graph into {len(comps)} parts, expected 2"
            )
        side = [0] * g.n
        for x in comps[1]:
            side[x] = 1
        best: tuple[float, int, int] | None = None
        for a in comps[0]:
            row = d[a]
            for b in comps[1]:
                if row[b] <= 1.0:
                    cand = (float(row[b]), a, b)
                    if best is None or cand < best:
                        best = cand
        if best is None:
            raise AlgorithmError(
                f"no unit edge reconnects the sides around arduous vertex {v}; "
                "input cannot be 2-vertex connected"
            )
        _, u, w = best
        seg = make_segment(u, w)
        for other, kind in list(g.edges.items()):
            if not properly_cross(seg, other, ps):
                continue
            if kind is EdgeKind.TREE:
                raise AlgorithmError(
                    f"reconnecting edge {seg} crosses tree edge {other}"
                )
            g.construction_log.append(f"arduous fix {seg}: dropped crossed {other}")
            g.remove_edge(other)
        g.add_edge(seg.a, seg.b, EdgeKind.AUGMENT)
        g.construction_log.append(f"arduous fix: added {seg} around {v}")
        after = len(find_arduous(g, forest, color))
        if after >= before:
            raise AlgorithmError(
                f"arduous count did not decrease ({before} -> {after}) at vertex {v}"
            )
    raise AlgorithmError("arduous elimination did not converge")


# ---------------------------------------------------------------------------
# Bridge fixing
# ---------------------------------------------------------------------------


def _processing_bridges(g: GeometricGraph, forest: ColoredForest,
                        color: Color) -> list[tuple[int, int]]:
    """Current bridges as (processing endpoint, other endpoint) pairs."""
    bridges = find_bridges(g.n, g.adjacency())
    out = []
    for seg in bridges:
        if g.edges[seg] is not EdgeKind.TREE:
            raise AlgorithmError(f"bridge {seg} is not a tree edge")
        ca, cb = forest.color[seg.a], forest.color[seg.b]
        if ca is color:
            out.append((seg.a, seg.b))
        elif cb is color:
            out.append((seg.b, seg.a))
        else:
            raise AlgorithmError(
                f"bridge {seg} has no {color.value} endpoint ({ca.value}, {cb.value})"
            )
    out.sort()
    return out


def _immediate_edge(g: GeometricGraph, proc: int, other: int,
                    class_order: tuple[EdgeKind, ...]) -> tuple[int, EdgeKind]:
    """Incident edge at ``proc`` minimizing the angle to {proc, other},
    restricted to angles < pi, class preference first."""
    ps = g.point_set
    buckets: dict[EdgeKind, list[tuple[float, int]]] = {k: [] for k in class_order}
    for nb in g.adjacency()[proc]:
        if nb == other:
            continue
        ang = angle_ids(ps, proc, other, nb)
        if ang >= math.pi - 1e-12:
            continue
        kind = g.kind(proc, nb)
        if kind in buckets:
            buckets[kind].append((ang, nb))
    for kind in class_order:
        if buckets[kind]:
            return min(buckets[kind])[1], kind
    raise AlgorithmError(f"no immediate edge at {proc} off bridge ({proc},{other})")


def _add_fix(g: GeometricGraph, a: int, b: int, bound: float, note: str) -> bool:
    seg = make_segment(a, b)
    length = g.point_set.dist(a, b)
    if length > bound + LENGTH_TOL:
        raise AlgorithmError(
            f"bridge fix {seg} has length {length:.12f} over bound {bound:.12f} ({note})"
        )
    if seg in g.edges:
        g.construction_log.append(f"{note}: fix {seg} already present")
        return False
    g.add_edge(seg.a, seg.b, EdgeKind.AUGMENT)
    g.construction_log.append(f"{note}: added {seg}")
    return True


def _min_angle_point(g: GeometricGraph, apex: int, ref: int, candidates: list[int]) -> int:
    ps = g.point_set
    return min(candidates, key=lambda q: (angle_ids(ps, apex, ref, q), q))


def _fix_bridge_sqrt5(g: GeometricGraph, proc: int, other: int) -> None:
    ps = g.point_set
    w, kind = _immediate_edge(g, proc, other, (EdgeKind.TREE, EdgeKind.SNN))
    if kind is EdgeKind.TREE:
        _add_fix(g, other, w, 2.0, f"bridge ({proc},{other}) via tree edge")
        return
    interior = region_interior_points(ps, (proc, other, w))
    if not interior:
        _add_fix(g, other, w, SQRT5, f"bridge ({proc},{other}) via snn edge")
        return
    p = _min_angle_point(g, other, proc, interior)
    q = _min_angle_point(g, w, proc, interior)
    _add_fix(g, other, p, SQRT5, f"bridge ({proc},{other}) min-angle pair")
    _add_fix(g, q, w, SQRT5, f"bridge ({proc},{other}) min-angle pair")


def _fix_bridge_r2(g: GeometricGraph, forest: ColoredForest, color: Color,
                   proc: int, other: int) -> None:
    ps = g.point_set
    w, kind = _immediate_edge(
        g, proc, other, (EdgeKind.TREE, EdgeKind.AUGMENT, EdgeKind.SNN))
    note = f"bridge ({proc},{other})"
    if kind is EdgeKind.TREE:
        _add_fix(g, other, w, 2.0, f"{note} via tree edge")
        return
    if kind is EdgeKind.AUGMENT:
        if forest.color[w] is not color:
            _add_fix(g, other, w, 2.0, f"{note} via augment edge, off-class end")
            return
        adj = g.adjacency()
        convex: list[tuple[float, int]] = []
        for cand in adj[w]:
            if cand in (proc, other):
                continue
            o1 = _orient(ps, cand, w, proc)
            o2 = _orient(ps, w, proc, other)
            if o1 != 0 and o1 == o2:
                convex.append((angle_ids(ps, w, cand, proc), cand))
        if not convex:
            _add_fix(g, other, w, 2.0, f"{note} via augment edge, no convex neighbor")
            return
        uprime = min(convex)[1]
        g.construction_log.append(f"{note}: convex-path neighbor {uprime} of {w}")
        if g.kind(w, uprime) is not EdgeKind.TREE:
            _add_fix(g, other, w, 2.0, f"{note} via augment edge, non-tree convex neighbor")
            return
        interior = region_interior_points(ps, (other, proc, w, uprime))
        if not interior:
            _add_fix(g, other, uprime, 2.0, f"{note} via augment edge, empty quadrangle")
            return
        p = _min_angle_point(g, uprime, w, interior)
        q = _min_angle_point(g, other, proc, interior)
        _add_fix(g, uprime, p, 2.0, f"{note} via augment edge, min-angle pair")
        _add_fix(g, q, other, 2.0, f"{note} via augment edge, min-angle pair")
        return
    # snn-class immediate edge
    interior = region_interior_points(ps, (other, proc, w))
    if not interior:
        _add_fix(g, other, w, 2.0, f"{note} via snn edge")
        return
    p = _min_angle_point(g, other, proc, interior)
    q = _min_angle_point(g, w, proc, interior)
    _add_fix(g, other, p, 2.0, f"{note} via snn edge, min-angle pair")
    _add_fix(g, q, w, 2.0, f"{note} via snn edge, min-angle pair")


def _orient(ps: PointSet, a: int, b: int, c: int) -> int:
    from .geometry import orient_ids
    return orient_ids(ps, a, b, c)


def _fix_all_bridges(g: GeometricGraph, forest: ColoredForest, color: Color,
                     mode: str) -> None:
    for _ in range(len(g.edges) + g.n + 1):
        todo = _processing_bridges(g, forest, color)
        if not todo:
            return
        before = len(todo)
        proc, other = todo[0]
        if mode == "sqrt5":
            _fix_bridge_sqrt5(g, proc, other)
        else:
            _fix_bridge_r2(g, forest, color, proc, other)
        crossings = crossing_segment_pairs(g.point_set, g.sorted_edges())
        if crossings:
            raise AlgorithmError(
                f"bridge fix at ({proc},{other}) introduced crossings {crossings[:3]}"
            )
        after = _processing_bridges(g, forest, color)
        if make_segment(proc, other) in {make_segment(a, b) for a, b in after}:
            raise AlgorithmError(f"bridge ({proc},{other}) survived its fix")
        if len(after) >= before + 1:
            raise AlgorithmError("bridge fixing created additional bridges")
    raise AlgorithmError("bridge fixing did not converge")


# ---------------------------------------------------------------------------
# The three constructions
# ---------------------------------------------------------------------------


def _choose_color(g: GeometricGraph, forest: ColoredForest) -> Color:
    black = len(find_arduous(g, forest, Color.BLACK))
    red = len(find_arduous(g, forest, Color.RED))
    bridge_black = bridge_red = 0
    for seg in find_bridges(g.n, g.adjacency()):
        for end in (seg.a, seg.b):
            if forest.color[end] is Color.BLACK:
                bridge_black += 1
            elif forest.color[end] is Color.RED:
                bridge_red += 1
    return choose_processing_color(forest, black, red, bridge_black, bridge_red)


def two_edge_connected_sqrt5(ps: PointSet) -> GeometricGraph:
    """Planar 2-edge-connected spanning graph with edges <= sqrt(5).

    Assumes U(ps, 1) is connected with minimum degree 2.
    """
    if not satisfies(ps, 1.0, Property.MIN_DEGREE_2):
        raise PreconditionError("U(P, 1) must have minimum degree 2")
    if not satisfies(ps, 1.0, Property.CONNECTED):
        raise PreconditionError("U(P, 1) must be connected")
    forest = euclidean_mst(ps, 1.0)
    g = planar_min_degree_two(ps, forest)
    color = _choose_color(g, forest)
    _fix_all_bridges(g, forest, color, mode="sqrt5")
    return g


def two_edge_connected_r2(ps: PointSet) -> GeometricGraph:
    """Planar 2-edge-connected spanning graph with edges <= 2.

    Assumes U(ps, 1) is 2-vertex connected (n >= 3).
    """
    if not satisfies(ps, 1.0, Property.TWO_VERTEX_CONNECTED):
        raise PreconditionError("U(P, 1) must be 2-vertex connected")
    forest = euclidean_mst(ps, 1.0)
    g = GeometricGraph(ps)
    for seg in sorted(forest.edges):
        g.add_edge(seg.a, seg.b, EdgeKind.TREE)
    color = _choose_color(g, forest)
    _eliminate_arduous(g, forest, color)
    for rec in snn_edges(ps, forest):
        seg = rec.segment()
        if seg in g.edges:
            kind = g.edges[seg]
            if kind is EdgeKind.AUGMENT:
                # An arduous fix that doubles as the leaf's snn edge: let the
                # crossing rules treat it as leaf-serving.
                g.edges[seg] = EdgeKind.SNN
                g.snn_direction[seg] = (rec.tail, rec.head)
                g.construction_log.append(f"snn reclassified arduous fix {seg}")
            elif kind is EdgeKind.TREE:
                raise AlgorithmError(f"snn edge {seg} coincides with a tree edge")
            continue
        g.add_edge(seg.a, seg.b, EdgeKind.SNN, direction=(rec.tail, rec.head))
    planarize(g, forest)
    _fix_all_bridges(g, forest, color, mode="r2")
    return g


def two_edge_connected_blocks(ps: PointSet) -> GeometricGraph:
    """Planar 2-edge-connected spanning graph with edges <= 2, block-wise.

    Assumes U(ps, 1) is 2-edge connected; each 2-vertex-connected block
    is handled independently and the union is audited.
    """
    if not satisfies(ps, 1.0, Property.TWO_EDGE_CONNECTED):
        raise PreconditionError("U(P, 1) must be 2-edge connected")
    blocks, bridge_blocks = biconnected_components(build_udg(ps, 1.0))
    if bridge_blocks:
        raise AlgorithmError("a 2-edge-connected graph cannot have bridge blocks")
    g = GeometricGraph(ps)
    for block in sorted(blocks, key=sorted):
        ids = sorted(block)
        sub = PointSet(ps.coords[ids])
        sub_g = two_edge_connected_r2(sub)
        for seg, kind in sorted(sub_g.edges.items()):
            a, b = ids[seg.a], ids[seg.b]
            if not g.has_edge(a, b):
                direction = sub_g.snn_direction.get(seg)
                mapped = (ids[direction[0]], ids[direction[1]]) if direction else None
                g.add_edge(a, b, kind, direction=mapped)
    report = audit(g)
    if not report.is_planar:
        raise AlgorithmError(f"block union is not planar: {report.crossings[:3]}")
    if not report.is_two_edge_connected:
        raise AlgorithmError(f"block union is not 2-edge connected: bridges {report.bridges[:3]}")
    if report.max_edge_length > 2.0 + LENGTH_TOL:
        raise AlgorithmError(f"block union max edge {report.max_edge_length} exceeds 2")
    return g


def approximation_ratio(ps: PointSet, g: GeometricGraph) -> float:
    """Achieved max edge length over the bottleneck 2-edge-connectivity radius."""
    return g.max_edge_length() / min_radius_for(ps, Property.TWO_EDGE_CONNECTED)
