"""Robust plane predicates: orientation and in-circle sign tests.

Three interchangeable arithmetic modes:

``float``
    Raw binary64 evaluation.  Fast, can report a wrong sign near
    degeneracies; kept as an unsafe benchmarking reference.
``filtered`` (default)
    Binary64 evaluation with a static forward-error bound.  When the computed
    value clears the bound its sign is certified; otherwise the predicate is
    re-evaluated exactly.
``exact``
    Exact evaluation only.

The static bounds are Shewchuk's constants ``(3 + 16u)u`` (orientation) and
``(10 + 96u)u`` (in-circle) with ``u = 2^-53``, valid when no intermediate
product underflows or overflows; products that leave the normal range force
the exact path instead, and a tiny absolute slack covers second-level
subnormal rounding in the in-circle determinant.  The exact path converts the
binary64 inputs to integers over a common power-of-two denominator (every
finite double is such a rational) and evaluates the determinant in integer
arithmetic, so a Zero answer means the determinant is exactly zero.
"""

from __future__ import annotations

import enum
import sys
from dataclasses import dataclass

from .errors import CollinearInputError
from .spectrum import PlanePoint

_EPS = 2.0 ** -53
CCW_ERR_BOUND = (3.0 + 16.0 * _EPS) * _EPS
INCIRCLE_ERR_BOUND = (10.0 + 96.0 * _EPS) * _EPS
_INCIRCLE_SLACK = 2.0 ** -1040  # absorbs subnormal rounding of lift*(cross) terms
_MIN_NORMAL = sys.float_info.min
_INF = float("inf")


class Sign(enum.IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1


class ArithmeticMode(str, enum.Enum):
    FLOAT = "float"
    FILTERED = "filtered"
    EXACT = "exact"


@dataclass(frozen=True)
class KernelStats:
    """Filter-hit counters: certified float evaluations vs exact evaluations."""

    fast_path: int
    exact_fallback: int


def _int_sign(v) -> int:
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


def _product_safe(p: float, x: float, y: float) -> bool:
    # fl(x*y) carries a pure relative error only if it neither underflowed
    # nor overflowed; an exact zero factor is fine.
    if p == 0.0:
        return x == 0.0 or y == 0.0
    ap = abs(p)
    return _MIN_NORMAL <= ap < _INF


def _scaled_ints(vals):
    # Finite doubles are n/2^k; rescaling to the largest denominator maps all
    # inputs to integers by a single positive factor, which preserves the
    # determinant signs.
    pairs = [v.as_integer_ratio() for v in vals]
    scale = max(d for _, d in pairs)
    return [num * (scale // den) for num, den in pairs]


def _orient2d_exact(ax, ay, bx, by, cx, cy) -> int:
    iax, iay, ibx, iby, icx, icy = _scaled_ints((ax, ay, bx, by, cx, cy))
    det = (iax - icx) * (iby - icy) - (iay - icy) * (ibx - icx)
    return _int_sign(det)


def _incircle_exact(ax, ay, bx, by, cx, cy, dx, dy) -> int:
    iax, iay, ibx, iby, icx, icy, idx, idy = _scaled_ints(
        (ax, ay, bx, by, cx, cy, dx, dy)
    )
    adx = iax - idx
    ady = iay - idy
    bdx = ibx - idx
    bdy = iby - idy
    cdx = icx - idx
    cdy = icy - idy
    det = (
        (adx * adx + ady * ady) * (bdx * cdy - cdx * bdy)
        + (bdx * bdx + bdy * bdy) * (cdx * ady - adx * cdy)
        + (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady)
    )
    return _int_sign(det)


class GeometryKernel:
    """Predicate evaluator with a fixed arithmetic mode and per-instance stats."""

    def __init__(self, mode: ArithmeticMode | str = ArithmeticMode.FILTERED):
        self.mode = ArithmeticMode(mode)
        self._fast = 0
        self._exact = 0

    def stats(self) -> KernelStats:
        return KernelStats(fast_path=self._fast, exact_fallback=self._exact)

    def reset_stats(self):
        self._fast = 0
        self._exact = 0

    # -- orientation ------------------------------------------------------

    def orient2d_coords(self, ax, ay, bx, by, cx, cy) -> int:
        """Sign of the orientation determinant of (a, b, c), as -1/0/+1."""
        acx = ax - cx
        acy = ay - cy
        bcx = bx - cx
        bcy = by - cy
        detleft = acx * bcy
        detright = acy * bcx
        det = detleft - detright

        if self.mode is ArithmeticMode.FLOAT:
            self._fast += 1
            return _int_sign(det)

        if self.mode is ArithmeticMode.FILTERED and _product_safe(
            detleft, acx, bcy
        ) and _product_safe(detright, acy, bcx):
            detsum = abs(detleft) + abs(detright)
            errbound = CCW_ERR_BOUND * detsum
            if det > errbound:
                self._fast += 1
                return 1
            if -det > errbound:
                self._fast += 1
                return -1
            if detsum == 0.0 and det == 0.0:
                # both products were exact zeros, so the determinant is too
                self._fast += 1
                return 0

        self._exact += 1
        return _orient2d_exact(ax, ay, bx, by, cx, cy)

    def orient2d(self, a: PlanePoint, b: PlanePoint, c: PlanePoint) -> Sign:
        """Orientation of the triple: Positive means counterclockwise."""
        return Sign(self.orient2d_coords(a.re, a.im, b.re, b.im, c.re, c.im))

    # -- in-circle --------------------------------------------------------

    def _incircle_unchecked_coords(self, ax, ay, bx, by, cx, cy, dx_, dy_) -> int:
        adx = ax - dx_
        ady = ay - dy_
        bdx = bx - dx_
        bdy = by - dy_
        cdx = cx - dx_
        cdy = cy - dy_

        bdxcdy = bdx * cdy
        cdxbdy = cdx * bdy
        cdxady = cdx * ady
        adxcdy = adx * cdy
        adxbdy = adx * bdy
        bdxady = bdx * ady
        adx2 = adx * adx
        ady2 = ady * ady
        bdx2 = bdx * bdx
        bdy2 = bdy * bdy
        cdx2 = cdx * cdx
        cdy2 = cdy * cdy
        alift = adx2 + ady2
        blift = bdx2 + bdy2
        clift = cdx2 + cdy2
        det = (
            alift * (bdxcdy - cdxbdy)
            + blift * (cdxady - adxcdy)
            + clift * (adxbdy - bdxady)
        )

        if self.mode is ArithmeticMode.FLOAT:
            self._fast += 1
            return _int_sign(det)

        if self.mode is ArithmeticMode.FILTERED and (
            _product_safe(bdxcdy, bdx, cdy)
            and _product_safe(cdxbdy, cdx, bdy)
            and _product_safe(cdxady, cdx, ady)
            and _product_safe(adxcdy, adx, cdy)
            and _product_safe(adxbdy, adx, bdy)
            and _product_safe(bdxady, bdx, ady)
            and _product_safe(adx2, adx, adx)
            and _product_safe(ady2, ady, ady)
            and _product_safe(bdx2, bdx, bdx)
            and _product_safe(bdy2, bdy, bdy)
            and _product_safe(cdx2, cdx, cdx)
            and _product_safe(cdy2, cdy, cdy)
        ):
            permanent = (
                (abs(bdxcdy) + abs(cdxbdy)) * alift
                + (abs(cdxady) + abs(adxcdy)) * blift
                + (abs(adxbdy) + abs(bdxady)) * clift
            )
            errbound = INCIRCLE_ERR_BOUND * permanent + _INCIRCLE_SLACK
            if det > errbound:
                self._fast += 1
                return 1
            if -det > errbound:
                self._fast += 1
                return -1
            if permanent == 0.0 and det == 0.0:
                self._fast += 1
                return 0

        self._exact += 1
        return _incircle_exact(ax, ay, bx, by, cx, cy, dx_, dy_)

    def incircle_coords(self, ax, ay, bx, by, cx, cy, dx_, dy_) -> int:
        if self.orient2d_coords(ax, ay, bx, by, cx, cy) == 0:
            raise CollinearInputError(
                "incircle requires non-collinear (a, b, c); canonicalize the caller"
            )
        return self._incircle_unchecked_coords(ax, ay, bx, by, cx, cy, dx_, dy_)

    def incircle(self, a: PlanePoint, b: PlanePoint, c: PlanePoint,
                 d: PlanePoint) -> Sign:
        """Position of d relative to the circumcircle of (a, b, c).

        With (a, b, c) counterclockwise: Positive means strictly inside, Zero
        cocircular, Negative strictly outside.  The sign flips if two of
        (a, b, c) are swapped.  Collinear (a, b, c) is a contract violation
        and raises :class:`CollinearInputError`.
        """
        return Sign(
            self.incircle_coords(a.re, a.im, b.re, b.im, c.re, c.im, d.re, d.im)
        )


_DEFAULT_KERNEL = GeometryKernel(ArithmeticMode.FILTERED)


def orient2d(a, b, c) -> Sign:
    """Orientation via a shared filtered kernel (see :class:`GeometryKernel`)."""
    return _DEFAULT_KERNEL.orient2d(a, b, c)


def incircle(a, b, c, d) -> Sign:
    """In-circle test via a shared filtered kernel (see :class:`GeometryKernel`)."""
    return _DEFAULT_KERNEL.incircle(a, b, c, d)
