"""Crossing classification (ties and bows) and crossing removal.

A tie is a crossing where one segment's endpoints both lie outside the
disk spanned by the other segment's tip; a bow is the symmetric
two-leaf configuration. Every crossing that appears while combining a
nearest-neighbor forest or MST with second-nearest-neighbor edges is
one of the two, and each admits a bounded-length, crossing-free
replacement. The engine below removes them one at a time, re-scanning
after each replacement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .geometry import (
    PointSet,
    Segment,
    angle_ids,
    make_segment,
    properly_cross,
    region_interior_points,
)
from .spanning import ColoredForest, MinDegreeError, nearest_neighbor_forest, snn_edges
from .udg import EdgeKind, GeometricGraph, crossing_segment_pairs, satisfies, Property

LENGTH_TOL = 1e-9


class CrossingKind(Enum):
    TIE = "tie"
    BOW = "bow"
    OTHER = "other"


@dataclass(frozen=True)
class CrossingRecord:
    kind: CrossingKind
    # Tie labeling: tip u on segment {u, v}, crossing line (x, y).
    # Bow labeling: segments (u, v) and (x, y) with the defining ordering.
    u: int
    v: int
    x: int
    y: int
    segments: tuple[Segment, Segment]

    @property
    def tip(self) -> int:
        return self.u


class AlgorithmError(RuntimeError):
    """A construction step found a configuration the analysis rules out."""


def _is_tie(ps: PointSet, u: int, v: int, x: int, y: int) -> bool:
    duv = ps.dist(u, v)
    dux = ps.dist(u, x)
    if dux <= duv:
        return False
    if ps.dist(u, y) <= duv:
        return False
    return dux > ps.dist(x, y)


def _is_bow(ps: PointSet, u: int, v: int, x: int, y: int) -> bool:
    duv = ps.dist(u, v)
    dux = ps.dist(u, x)
    dxy = ps.dist(x, y)
    if not (ps.dist(u, y) <= duv < dux):
        return False
    return ps.dist(v, x) <= dxy < dux


def classify(s1: Segment, s2: Segment, ps: PointSet) -> CrossingRecord | None:
    """Classify a segment pair; None when they do not properly cross."""
    if not properly_cross(s1, s2, ps):
        return None
    for tip_seg, line_seg in ((s1, s2), (s2, s1)):
        for u, v in ((tip_seg.a, tip_seg.b), (tip_seg.b, tip_seg.a)):
            for x, y in ((line_seg.a, line_seg.b), (line_seg.b, line_seg.a)):
                if _is_tie(ps, u, v, x, y):
                    return CrossingRecord(CrossingKind.TIE, u, v, x, y, (s1, s2))
    for seg_a, seg_b in ((s1, s2), (s2, s1)):
        for u, v in ((seg_a.a, seg_a.b), (seg_a.b, seg_a.a)):
            for x, y in ((seg_b.a, seg_b.b), (seg_b.b, seg_b.a)):
                if _is_bow(ps, u, v, x, y):
                    return CrossingRecord(CrossingKind.BOW, u, v, x, y, (s1, s2))
    return CrossingRecord(CrossingKind.OTHER, s1.a, s1.b, s2.a, s2.b, (s1, s2))


def tie_length_bound(phi: float) -> float:
    """Worst-case replacement edge length for a tie processed at angle phi.

    Monotone on [pi/3, pi]; evaluates to sqrt(2) at pi/2-ish regimes and
    sqrt(5) at phi = pi, which is what certifies the construction bounds.
    """
    if not (math.pi / 3 - 1e-12 <= phi <= math.pi + 1e-12):
        raise ValueError(f"phi={phi} outside [pi/3, pi]")
    return math.sqrt(3.0 - 2.0 * math.sqrt(2.0) * math.cos(phi - math.pi / 4.0))


# ---------------------------------------------------------------------------
# Crossing removal engine
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _Tie:
    tip: int
    mate: int          # other endpoint of the tip edge
    leaf: int          # tail of the crossing-line edge
    leafmate: int      # head of the crossing-line edge
    tip_seg: Segment
    line_seg: Segment


def _direction(g: GeometricGraph, seg: Segment) -> tuple[int, int]:
    d = g.snn_direction.get(seg)
    if d is not None:
        return d
    return (seg.a, seg.b)


def _tie_for_pair(g: GeometricGraph, e1: Segment, e2: Segment) -> _Tie | None:
    """Find the tie labeling for a crossing pair, if any.

    The crossing line must be a replaceable (snn-class) edge; its tail
    serves as the leaf. Both assignments are tried; ties are looked for
    with the tip-edge endpoints in ascending order for determinism.
    """
    ps = g.point_set
    best: _Tie | None = None
    for tip_seg, line_seg in ((e1, e2), (e2, e1)):
        if g.edges.get(line_seg) is not EdgeKind.SNN:
            continue
        tail, head = _direction(g, line_seg)
        for u, v in ((tip_seg.a, tip_seg.b), (tip_seg.b, tip_seg.a)):
            if _is_tie(ps, u, v, tail, head):
                cand = _Tie(u, v, tail, head, tip_seg, line_seg)
                if best is None or cand.tip < best.tip:
                    best = cand
                break
    return best


def _bow_for_pair(g: GeometricGraph, e1: Segment, e2: Segment) -> tuple[int, int, int, int] | None:
    ps = g.point_set
    if g.edges.get(e1) is not EdgeKind.SNN or g.edges.get(e2) is not EdgeKind.SNN:
        return None
    t1, h1 = _direction(g, e1)
    t2, h2 = _direction(g, e2)
    if _is_bow(ps, t1, h1, t2, h2):
        return (t1, h1, t2, h2)
    if _is_bow(ps, t2, h2, t1, h1):
        return (t2, h2, t1, h1)
    return None


def _add_replacement(g: GeometricGraph, a: int, b: int, tail: int,
                     bound: float, note: str) -> None:
    seg = make_segment(a, b)
    length = g.point_set.dist(a, b)
    if length > bound + LENGTH_TOL:
        raise AlgorithmError(
            f"replacement {seg} has length {length:.12f} over certified bound {bound:.12f} ({note})"
        )
    if seg in g.edges:
        g.construction_log.append(f"{note}: replacement {seg} already present")
        return
    g.add_edge(seg.a, seg.b, EdgeKind.SNN, direction=(tail, seg.b if tail == seg.a else seg.a))
    g.construction_log.append(f"{note}: added {seg}")


def _interior_points(g: GeometricGraph, corners: tuple[int, ...]) -> list[int]:
    return region_interior_points(g.point_set, corners)


def _min_angle_point(g: GeometricGraph, apex: int, ref: int, candidates: list[int]) -> int:
    ps = g.point_set
    return min(candidates, key=lambda q: (angle_ids(ps, apex, ref, q), q))


def _other_tip_edge_crossings(pairs: list[tuple[Segment, Segment]],
                              tie: _Tie) -> list[tuple[Segment, Segment]]:
    out = []
    for a, b in pairs:
        if {a, b} == {tie.tip_seg, tie.line_seg}:
            continue
        if tie.tip_seg in (a, b):
            out.append((a, b))
    return out


def _resolve_tie(g: GeometricGraph, forest: ColoredForest, tie: _Tie,
                 pairs: list[tuple[Segment, Segment]]) -> None:
    """Apply the three-case replacement for one tie."""
    ps = g.point_set
    u, v, leaf, leafmate = tie.tip, tie.mate, tie.leaf, tie.leafmate
    others = _other_tip_edge_crossings(pairs, tie)
    if len(others) > 1:
        raise AlgorithmError(
            f"tip edge {tie.tip_seg} is in {len(others) + 1} crossings; at most 2 expected"
        )

    if not others:
        # Single tie on this tip edge.
        interior = _interior_points(g, (u, v, leaf))
        if not interior:
            _add_replacement(g, u, leaf, leaf, math.sqrt(2.0), "tie single, empty triangle")
        else:
            ws = [w for w in interior if forest.has_edge(w, u)]
            if len(ws) != 1:
                raise AlgorithmError(
                    f"tie at tip {u}: triangle ({u},{v},{leaf}) holds {interior} "
                    f"with {len(ws)} tree neighbors of the tip"
                )
            _add_replacement(g, ws[0], leaf, leaf, math.sqrt(2.0), "tie single, via tree neighbor")
        g.remove_edge(tie.line_seg)
        return

    other_pair = others[0]
    e3 = other_pair[0] if other_pair[1] == tie.tip_seg else other_pair[1]
    other = _tie_for_pair(g, tie.tip_seg, e3)
    if other is None:
        raise AlgorithmError(
            f"second crossing on tip edge {tie.tip_seg} with {e3} is not a tie"
        )

    if other.tip_seg == tie.tip_seg:
        # Both ties have their tip on this edge; the second tip must be the mate.
        if other.tip != v:
            raise AlgorithmError(
                f"tip edge {tie.tip_seg} carries two ties with tips {u} and {other.tip}"
            )
        leaf2 = other.leaf
        if not properly_cross(make_segment(u, leaf), make_segment(leaf2, v), ps):
            _add_replacement(g, u, leaf, leaf, math.sqrt(2.0), "double tie, parallel fix")
            _add_replacement(g, v, leaf2, leaf2, math.sqrt(2.0), "double tie, parallel fix")
        else:
            corners = (u, v, leaf, leaf2)
            interior = _interior_points(g, corners)
            if not interior:
                _add_replacement(g, leaf, leaf2, leaf,
                                 tie_length_bound(2 * math.pi / 3), "double tie, leaf pair")
            else:
                p = _min_angle_point(g, leaf2, u, interior)
                q = _min_angle_point(g, leaf, v, interior)
                _add_replacement(g, leaf2, p, leaf2, 2.0, "double tie, min-angle pair")
                _add_replacement(g, leaf, q, leaf, 2.0, "double tie, min-angle pair")
        g.remove_edge(tie.line_seg)
        if other.line_seg in g.edges:
            g.remove_edge(other.line_seg)
        return

    # The tip edge is also the crossing line of the other tie.
    tip2 = other.tip
    corners = (tip2, u, v, leaf)
    interior = _interior_points(g, corners)
    if not interior:
        _add_replacement(g, leaf, tip2, leaf, 2.0, "tie under crossing line, to far tip")
    else:
        p = _min_angle_point(g, leaf, v, interior)
        _add_replacement(g, leaf, p, leaf, 2.0, "tie under crossing line, min angle")
    g.remove_edge(tie.line_seg)


def _resolve_bow(g: GeometricGraph, labeling: tuple[int, int, int, int],
                 e1: Segment, e2: Segment) -> None:
    t1, _, t2, _ = labeling
    _add_replacement(g, t1, t2, min(t1, t2), 2.0, "bow, leaf pair")
    g.remove_edge(e1)
    g.remove_edge(e2)


def _resolve_claim(g: GeometricGraph, forest: ColoredForest,
                   aug: Segment, snn: Segment,
                   pairs: list[tuple[Segment, Segment]]) -> None:
    """Crossing between an augment-class edge and an snn-class edge.

    Either the augment edge can simply be dropped (its reconnection job
    is provably covered) or the pair forms a tie whose tip sits on the
    augment edge, which the tie machinery resolves.
    """
    tail, head = _direction(g, snn)
    tree_u = None
    for cand in (aug.a, aug.b):
        if forest.has_edge(tail, cand):
            tree_u = cand
            break
    if tree_u is None:
        g.construction_log.append(f"claim: dropped {aug} (tail {tail} not tree-adjacent)")
        g.remove_edge(aug)
        return
    other = aug.b if tree_u == aug.a else aug.a
    if forest.has_edge(head, other):
        g.construction_log.append(f"claim: dropped {aug} (both ends tree-adjacent)")
        g.remove_edge(aug)
        return
    tie = _Tie(other, tree_u, tail, head, aug, snn)
    if not _is_tie(g.point_set, other, tree_u, tail, head):
        # The analysis promises a tie here; fall back to dropping the
        # augment edge rather than leaving the crossing in place.
        g.construction_log.append(f"claim: dropped {aug} (tie labeling failed)")
        g.remove_edge(aug)
        return
    _resolve_tie(g, forest, tie, pairs)


def planarize(g: GeometricGraph, forest: ColoredForest) -> None:
    """Remove all crossings in place.

    Tree edges are never touched; snn-class edges are replaced through
    the tie and bow rules; augment-class edges may be dropped when an
    snn edge crosses them. Raises AlgorithmError on configurations the
    analysis excludes.
    """
    max_rounds = 8 * len(g.edges) + 64
    for _ in range(max_rounds):
        edges = g.sorted_edges()
        pairs = crossing_segment_pairs(g.point_set, edges)
        if not pairs:
            return
        kinds = g.edges

        claim_pair = None
        for a, b in pairs:
            ka, kb = kinds[a], kinds[b]
            if ka is EdgeKind.TREE and kb is EdgeKind.TREE:
                raise AlgorithmError(f"tree edges {a} and {b} cross")
            if {ka, kb} == {EdgeKind.AUGMENT}:
                raise AlgorithmError(f"augment edges {a} and {b} cross")
            if ka is EdgeKind.AUGMENT and kb is EdgeKind.TREE or \
               ka is EdgeKind.TREE and kb is EdgeKind.AUGMENT:
                raise AlgorithmError(f"augment edge crosses tree edge: {a} x {b}")
            if EdgeKind.AUGMENT in (ka, kb):
                aug, snn = (a, b) if ka is EdgeKind.AUGMENT else (b, a)
                claim_pair = (aug, snn)
                break
        if claim_pair is not None:
            _resolve_claim(g, forest, claim_pair[0], claim_pair[1], pairs)
            continue

        ties: list[_Tie] = []
        unmatched: list[tuple[Segment, Segment]] = []
        for a, b in pairs:
            t = _tie_for_pair(g, a, b)
            if t is not None:
                ties.append(t)
            else:
                unmatched.append((a, b))
        if ties:
            ties.sort(key=lambda t: (t.tip, t.tip_seg, t.line_seg))
            _resolve_tie(g, forest, ties[0], pairs)
            continue
        for a, b in unmatched:
            bow = _bow_for_pair(g, a, b)
            if bow is not None:
                _resolve_bow(g, bow, a, b)
                break
        else:
            a, b = unmatched[0]
            raise AlgorithmError(
                f"unclassifiable crossing between {a} ({kinds[a].value}) "
                f"and {b} ({kinds[b].value})"
            )
    raise AlgorithmError("crossing removal did not converge")


# ---------------------------------------------------------------------------
# Planar minimum-degree-2 construction
# ---------------------------------------------------------------------------


def assemble_forest_snn(ps: PointSet, forest: ColoredForest) -> GeometricGraph:
    """Graph with the forest's tree edges plus one snn edge per leaf."""
    g = GeometricGraph(ps)
    for seg in sorted(forest.edges):
        g.add_edge(seg.a, seg.b, EdgeKind.TREE)
    for rec in snn_edges(ps, forest):
        seg = rec.segment()
        if seg in g.edges:
            # Two leaves can pick each other; keep a single undirected edge.
            if g.edges[seg] is EdgeKind.SNN:
                continue
            raise AlgorithmError(f"snn edge {seg} coincides with a tree edge")
        g.add_edge(seg.a, seg.b, EdgeKind.SNN, direction=(rec.tail, rec.head))
    return g


def planar_min_degree_two(ps: PointSet, forest: ColoredForest | None = None) -> GeometricGraph:
    """Planar spanning graph of min degree 2 with every edge at most 2.

    Assumes U(ps, 1) has minimum degree 2. Builds the nearest-neighbor
    forest plus second-nearest-neighbor edges and removes every
    crossing via the tie and bow rules.
    """
    if not satisfies(ps, 1.0, Property.MIN_DEGREE_2):
        raise MinDegreeError("U(P, 1) must have minimum degree 2")
    if forest is None:
        forest = nearest_neighbor_forest(ps, 1.0)
    g = assemble_forest_snn(ps, forest)
    planarize(g, forest)
    return g
