"""Instance generators: lower-bound gadgets and random point sets.

Every gadget generator is self-certifying: it audits the connectivity
precondition its consumers assume and runs the exhaustive oracle to
certify the non-existence claim it encodes, raising if either fails.
The figures in the source material under-determine the embeddings, so
coordinates here were solved from the stated metric constraints and
frozen once certified.
"""

from __future__ import annotations

import hashlib
import math
import random
from enum import Enum

import numpy as np

from .geometry import PointSet, make_segment, properly_cross, validate_general_position
from .oracle import exists_planar_subgraph
from .udg import Property, satisfies

MAX_REJECTIONS = 10_000


class GadgetError(ValueError):
    """A generator could not realize or certify the requested instance."""


class RandomPrecondition(Enum):
    MIN_DEG_2 = "mindeg2"
    CONNECTED_MIN_DEG_2 = "conn-mindeg2"
    TWO_VERTEX_CONNECTED = "2vc"
    TWO_EDGE_CONNECTED = "2ec"


def _rot(theta: float, x: float, y: float) -> tuple[float, float]:
    c, s = math.cos(theta), math.sin(theta)
    return (c * x - s * y, s * x + c * y)


def _bowtie_component(d_uv: float, j: int) -> list[tuple[float, float]]:
    """Four points whose unit disk graph is a 4-cycle plus one short chord,
    drawn so the forced pair of long edges crosses.

    Local frame: anchors at (-d/2, 0) and (d/2, 0); the two tips sit just
    inside both unit disks near the top of the lens, horizontally staggered
    so the anchor-to-far-tip segments cross. The copy index ``j`` seeds
    tiny perturbations that break distance ties within and across copies.
    """
    half = d_uv / 2.0
    delta = min(0.02, (2.0 - d_uv) / 4.0)
    inner = 1.0 - (half + delta) ** 2
    if inner <= 0:
        raise GadgetError(f"anchor separation {d_uv} leaves no room for the tips")
    h = 0.96 * math.sqrt(inner)
    px = 1.3e-4 * (1 + (j % 7))
    py = 0.9e-4 * (1 + (j % 5))
    return [
        (-half, 0.0),
        (delta, h),
        (-delta + px, h + py),
        (half, 0.0),
    ]


def _assert_component_shape(pts: list[tuple[float, float]]) -> None:
    """The component's unit edges must be exactly the 4-cycle plus the tip
    chord, with the two anchor-to-far-tip edges crossing."""
    ps = PointSet(np.array(pts))
    u, x, y, v = 0, 1, 2, 3
    for a, b in ((u, x), (u, y), (v, x), (v, y), (x, y)):
        if ps.dist(a, b) > 1.0:
            raise GadgetError(f"expected unit edge ({a},{b}), got {ps.dist(a, b)}")
    if ps.dist(u, v) <= 1.0:
        raise GadgetError("anchors must not be unit-adjacent")
    if not properly_cross(make_segment(u, x), make_segment(v, y), ps):
        raise GadgetError("forced edges do not cross; gadget is solvable early")


def gen_mindeg2_gadget(k: int, eps: float = 0.1) -> PointSet:
    """k disconnected 4-point components, each with min degree 2 at unit
    radius and no planar min-degree-2 spanning subgraph below radius 2-eps."""
    if k < 1:
        raise GadgetError("k must be >= 1")
    if not (0 < eps < 1):
        raise GadgetError("eps must be in (0, 1)")
    pts: list[tuple[float, float]] = []
    spacing = 4.6
    for j in range(k):
        d_uv = 2.0 - eps * (0.5 + (j + 1) / (8.0 * (k + 1)))
        comp = _bowtie_component(d_uv, j)
        _assert_component_shape(comp)
        pts.extend((xx + j * spacing, yy) for xx, yy in comp)
    ps = PointSet(np.array(pts))
    if not satisfies(ps, 1.0, Property.MIN_DEGREE_2):
        raise GadgetError("gadget fails the min-degree-2 audit")
    if validate_general_position(ps):
        raise GadgetError("gadget violates general position")
    core = PointSet(ps.coords[:4])
    if exists_planar_subgraph(core, 2.0 - eps, Property.MIN_DEGREE_2).exists:
        raise GadgetError("oracle found a planar min-degree-2 subgraph below 2-eps")
    return ps


def gen_2ec_gadget(k: int, eps: float = 0.1) -> PointSet:
    """Convex chain of k bowtie components sharing anchors: 1+3k points,
    2-edge connected at unit radius, no planar 2-edge-connected spanning
    subgraph below radius 2-eps."""
    if k < 1:
        raise GadgetError("k must be >= 1")
    if not (0 < eps < 1):
        raise GadgetError("eps must be in (0, 1)")
    pts: list[tuple[float, float]] = []
    anchor = (0.0, 0.0)
    pts.append(anchor)
    for j in range(k):
        d_uv = 2.0 - eps * (0.5 + (j + 1) / (8.0 * (k + 1)))
        comp = _bowtie_component(d_uv, j)
        _assert_component_shape(comp)
        theta = 0.17 * j
        half = d_uv / 2.0
        # Local components are centered on the anchor pair; shift so the
        # left anchor lands on the current chain anchor, then rotate.
        for xx, yy in comp[1:3]:
            rx, ry = _rot(theta, xx + half, yy)
            pts.append((anchor[0] + rx, anchor[1] + ry))
        rx, ry = _rot(theta, d_uv, 0.0)
        anchor = (anchor[0] + rx, anchor[1] + ry)
        pts.append(anchor)
    ps = PointSet(np.array(pts))
    if not satisfies(ps, 1.0, Property.TWO_EDGE_CONNECTED):
        raise GadgetError("gadget fails the 2-edge-connectivity audit")
    if validate_general_position(ps):
        raise GadgetError("gadget violates general position")
    core = PointSet(ps.coords[[0, 1, 2, 3]])
    if exists_planar_subgraph(core, 2.0 - eps, Property.TWO_EDGE_CONNECTED).exists:
        raise GadgetError("oracle found a planar 2-edge-connected subgraph below 2-eps")
    return ps


def gen_sqrt5_gadget(n: int = 8, eps: float = 0.1) -> PointSet:
    raise GadgetError("pending frozen coordinates")


def gen_highcon_gadget(k: int = 2, eps: float = 0.1) -> PointSet:
    raise GadgetError("pending frozen coordinates")


def _stable_seed(*parts) -> int:
    text = ":".join(str(p) for p in parts)
    return int.from_bytes(hashlib.sha256(text.encode()).digest()[:8], "big")


_DENSITY = {
    RandomPrecondition.MIN_DEG_2: 0.62,
    RandomPrecondition.CONNECTED_MIN_DEG_2: 0.52,
    RandomPrecondition.TWO_VERTEX_CONNECTED: 0.45,
    RandomPrecondition.TWO_EDGE_CONNECTED: 0.45,
}


def _precondition_holds(ps: PointSet, pre: RandomPrecondition) -> bool:
    if pre is RandomPrecondition.MIN_DEG_2:
        return satisfies(ps, 1.0, Property.MIN_DEGREE_2)
    if pre is RandomPrecondition.CONNECTED_MIN_DEG_2:
        return satisfies(ps, 1.0, Property.MIN_DEGREE_2) and \
            satisfies(ps, 1.0, Property.CONNECTED)
    if pre is RandomPrecondition.TWO_VERTEX_CONNECTED:
        return satisfies(ps, 1.0, Property.TWO_VERTEX_CONNECTED)
    if pre is RandomPrecondition.TWO_EDGE_CONNECTED:
        return satisfies(ps, 1.0, Property.TWO_EDGE_CONNECTED)
    raise ValueError(pre)


def gen_random(n: int, seed: int, precondition: RandomPrecondition) -> PointSet:
    """Uniform points in a square of side c*sqrt(n), rejection-sampled
    until U(P, 1) satisfies the precondition. Deterministic under
    (n, seed, precondition)."""
    if n < 3:
        raise ValueError("n must be >= 3")
    pre = RandomPrecondition(precondition)
    rng = random.Random(_stable_seed(n, seed, pre.value))
    side = _DENSITY[pre] * math.sqrt(n)
    for _ in range(MAX_REJECTIONS):
        coords = [(rng.uniform(0.0, side), rng.uniform(0.0, side)) for _ in range(n)]
        try:
            ps = PointSet(np.array(coords))
        except ValueError:
            continue
        if _precondition_holds(ps, pre):
            return ps
    raise GadgetError(
        f"no {pre.value} instance with n={n} after {MAX_REJECTIONS} samples; "
        "adjust the density constant"
    )
