"""Exact orientation sign over float inputs.

Floats are dyadic rationals, so Fraction arithmetic gives the true sign
of the 2x2 determinant. Only reached when the floating-point filter
cannot certify the sign, which is rare.
"""

from fractions import Fraction


def orient_exact(ax, ay, bx, by, cx, cy):
    acx = Fraction(ax) - Fraction(cx)
    acy = Fraction(ay) - Fraction(cy)
    bcx = Fraction(bx) - Fraction(cx)
    bcy = Fraction(by) - Fraction(cy)
    det = acx * bcy - acy * bcx
    if det > 0:
        return 1
    if det < 0:
        return -1
    return 0
