"""Pure-Python geometry kernels.

Same contract as the compiled backend in ``_fast.pyx``: an orientation
sign that is never wrong (float filter + exact fallback), a proper
segment crossing test, and a pairwise crossing scan over an edge list.
"""

from ._exact import orient_exact

BACKEND = "pure"

# Shewchuk's static filter bound for the 2x2 orientation determinant:
# (3 + 16*eps) * eps with eps = 2**-53.
_ERRBOUND = 3.3306690621773724e-16


def orient_sign(ax, ay, bx, by, cx, cy):
    """Sign of the signed area of triangle (a, b, c): +1 ccw, -1 cw, 0 collinear."""
    detleft = (ax - cx) * (by - cy)
    detright = (ay - cy) * (bx - cx)
    det = detleft - detright

    if detleft > 0.0:
        if detright <= 0.0:
            # No cancellation: det is a sum of non-negative terms.
            return 1 if det > 0.0 else 0
        detsum = detleft + detright
    elif detleft < 0.0:
        if detright >= 0.0:
            return -1 if det < 0.0 else 0
        detsum = -detleft - detright
    else:
        # detleft == 0: det == -detright exactly.
        if detright > 0.0:
            return -1
        if detright < 0.0:
            return 1
        return 0

    if det >= _ERRBOUND * detsum:
        return 1
    if -det >= _ERRBOUND * detsum:
        return -1
    return orient_exact(ax, ay, bx, by, cx, cy)


def segments_properly_cross(ax, ay, bx, by, cx, cy, dx, dy):
    """True iff the open interiors of segments ab and cd meet in one point."""
    o1 = orient_sign(ax, ay, bx, by, cx, cy)
    o2 = orient_sign(ax, ay, bx, by, dx, dy)
    if o1 * o2 >= 0:
        return False
    o3 = orient_sign(cx, cy, dx, dy, ax, ay)
    o4 = orient_sign(cx, cy, dx, dy, bx, by)
    return o3 * o4 < 0


def crossing_pairs(coords, edges):
    """All properly crossing pairs among ``edges`` as (i, j) index pairs, i < j.

    coords: sequence of (x, y); edges: sequence of (a, b) vertex ids.
    Edges sharing an endpoint never properly cross and are skipped.
    """
    m = len(edges)
    bxmin = [0.0] * m
    bxmax = [0.0] * m
    bymin = [0.0] * m
    bymax = [0.0] * m
    for i, (a, b) in enumerate(edges):
        xa, ya = coords[a][0], coords[a][1]
        xb, yb = coords[b][0], coords[b][1]
        bxmin[i] = xa if xa < xb else xb
        bxmax[i] = xa if xa > xb else xb
        bymin[i] = ya if ya < yb else yb
        bymax[i] = ya if ya > yb else yb

    out = []
    for i in range(m):
        a1, b1 = edges[i]
        ax, ay = coords[a1][0], coords[a1][1]
        bx, by = coords[b1][0], coords[b1][1]
        for j in range(i + 1, m):
            if bxmin[i] > bxmax[j] or bxmin[j] > bxmax[i]:
                continue
            if bymin[i] > bymax[j] or bymin[j] > bymax[i]:
                continue
            a2, b2 = edges[j]
            if a1 == a2 or a1 == b2 or b1 == a2 or b1 == b2:
                continue
            if segments_properly_cross(
                ax, ay, bx, by,
                coords[a2][0], coords[a2][1], coords[b2][0], coords[b2][1],
            ):
                out.append((i, j))
    return out
