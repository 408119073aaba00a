# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled geometry kernels: orientation sign and pairwise crossing scan.

Mirrors ``_pure.py``. The float filter decides almost every call; the
rare undecidable case falls back to exact rational arithmetic in Python.
"""

from ._exact import orient_exact

BACKEND = "compiled"

cdef double _ERRBOUND = 3.3306690621773724e-16


cdef int _orient_filtered(double ax, double ay, double bx, double by,
                          double cx, double cy) except? -9:
    cdef double detleft = (ax - cx) * (by - cy)
    cdef double detright = (ay - cy) * (bx - cx)
    cdef double det = detleft - detright
    cdef double detsum

    if detleft > 0.0:
        if detright <= 0.0:
            return 1 if det > 0.0 else 0
        detsum = detleft + detright
    elif detleft < 0.0:
        if detright >= 0.0:
            return -1 if det < 0.0 else 0
        detsum = -detleft - detright
    else:
        if detright > 0.0:
            return -1
        if detright < 0.0:
            return 1
        return 0

    if det >= _ERRBOUND * detsum:
        return 1
    if -det >= _ERRBOUND * detsum:
        return -1
    return <int> orient_exact(ax, ay, bx, by, cx, cy)


def orient_sign(double ax, double ay, double bx, double by, double cx, double cy):
    return _orient_filtered(ax, ay, bx, by, cx, cy)


cdef bint _cross(double ax, double ay, double bx, double by,
                 double cx, double cy, double dx, double dy) except? 2:
    cdef int o1 = _orient_filtered(ax, ay, bx, by, cx, cy)
    cdef int o2 = _orient_filtered(ax, ay, bx, by, dx, dy)
    if o1 * o2 >= 0:
        return False
    cdef int o3 = _orient_filtered(cx, cy, dx, dy, ax, ay)
    cdef int o4 = _orient_filtered(cx, cy, dx, dy, bx, by)
    return o3 * o4 < 0


def segments_properly_cross(double ax, double ay, double bx, double by,
                            double cx, double cy, double dx, double dy):
    return bool(_cross(ax, ay, bx, by, cx, cy, dx, dy))


def crossing_pairs(double[:, :] coords, long[:, :] edges):
    """Properly crossing pairs among edge indices, bbox-prefiltered."""
    cdef Py_ssize_t m = edges.shape[0]
    cdef Py_ssize_t i, j
    cdef long a1, b1, a2, b2
    cdef double ax, ay, bx, by
    cdef double lo

    cdef double[:] bxmin = memoryview(bytearray(8 * m)).cast("d") if m else None
    cdef double[:] bxmax = memoryview(bytearray(8 * m)).cast("d") if m else None
    cdef double[:] bymin = memoryview(bytearray(8 * m)).cast("d") if m else None
    cdef double[:] bymax = memoryview(bytearray(8 * m)).cast("d") if m else None

    for i in range(m):
        a1 = edges[i, 0]
        b1 = edges[i, 1]
        ax = coords[a1, 0]; ay = coords[a1, 1]
        bx = coords[b1, 0]; by = coords[b1, 1]
        bxmin[i] = ax if ax < bx else bx
        bxmax[i] = ax if ax > bx else bx
        bymin[i] = ay if ay < by else by
        bymax[i] = ay if ay > by else by

    out = []
    for i in range(m):
        a1 = edges[i, 0]
        b1 = edges[i, 1]
        ax = coords[a1, 0]; ay = coords[a1, 1]
        bx = coords[b1, 0]; by = coords[b1, 1]
        for j in range(i + 1, m):
            if bxmin[i] > bxmax[j] or bxmin[j] > bxmax[i]:
                continue
            if bymin[i] > bymax[j] or bymin[j] > bymax[i]:
                continue
            a2 = edges[j, 0]
            b2 = edges[j, 1]
            if a1 == a2 or a1 == b2 or b1 == a2 or b1 == b2:
                continue
            if _cross(ax, ay, bx, by,
                      coords[a2, 0], coords[a2, 1], coords[b2, 0], coords[b2, 1]):
                out.append((i, j))
    return out
