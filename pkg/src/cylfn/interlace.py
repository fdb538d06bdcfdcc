"""Interlacing analysis of finite zero sequences.

Two functions interlace when every open interval between consecutive zeros of
one contains exactly one zero of the other.  Finite sequences are compared
only on intervals fully covered by both, so truncation cannot produce false
violations.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass

from .reports import VerificationReport
from .special_fn import CylinderSpec, DomainError, EvalKind
from .zeros import ZeroSequence, find_zeros

__all__ = [
    "InterlaceReport",
    "ShiftReport",
    "EmptyOverlapError",
    "COINCIDENCE_TOL",
    "check_interlaced",
    "detect_shifted",
    "verify_chain",
]

COINCIDENCE_TOL = 1e-9
_MAX_SHIFT = 3


class EmptyOverlapError(ValueError):
    """The two zero sequences cover disjoint ranges."""


@dataclass(frozen=True)
class InterlaceReport:
    """Verdict of an interlacing check on two finite zero sequences.

    first_violation is (i, count): the i-th consecutive pair (1-based, in the
    sequence named by violation_side) whose open interval contained `count`
    zeros of the other sequence instead of exactly one.  coincident flags
    zeros of the two sequences closer than COINCIDENCE_TOL.
    """

    interlaced: bool
    first_violation: tuple | None
    pairs_checked: int
    coincident: bool = False
    violation_side: str | None = None


@dataclass(frozen=True)
class ShiftReport:
    """Shifted-interlacing detection result.

    shift_d = d means the entries of B fall one pair later/earlier in A after
    re-indexing: A[s+d] <= B[s] < A[s+d+1] for every s in the (1-based,
    suffix) window.  None when no |d| <= 3 works or the pair interlaces
    ordinarily (d = 0 is ordinary interlacing and is excluded).
    """

    shift_d: int | None
    window: tuple | None


def _as_zeros(seq) -> list:
    if isinstance(seq, ZeroSequence):
        return list(seq.zeros)
    return [float(v) for v in seq]


def _violations_oneside(a, b):
    # (pair_index_1based, count, position) for consecutive a-pairs judged
    # against b; pairs above b's covered range are skipped.
    out = []
    b_last = b[-1]
    for i in range(len(a) - 1):
        lo, hi = a[i], a[i + 1]
        if hi > b_last:
            break
        cnt = bisect_left(b, hi) - bisect_right(b, lo)
        if cnt != 1:
            out.append((i + 1, cnt, lo))
    judged = 0
    for i in range(len(a) - 1):
        if a[i + 1] <= b_last:
            judged += 1
    return out, judged


def _coincident(a, b) -> bool:
    i = j = 0
    while i < len(a) and j < len(b):
        d = a[i] - b[j]
        if abs(d) <= COINCIDENCE_TOL:
            return True
        if d < 0:
            i += 1
        else:
            j += 1
    return False


def check_interlaced(A, B) -> InterlaceReport:
    """Decide interlacing of two strictly increasing zero sequences.

    Symmetric in its arguments; only intervals inside both covered ranges are
    judged.  Coincident zeros (within COINCIDENCE_TOL) are violations and are
    flagged, since in-scope zeros are simple and distinct.
    """
    a = _as_zeros(A)
    b = _as_zeros(B)
    if len(a) < 2 or len(b) < 2:
        raise EmptyOverlapError("need at least two zeros in each sequence")
    if a[-1] <= b[0] or b[-1] <= a[0]:
        raise EmptyOverlapError("zero sequences cover disjoint ranges")
    va, na = _violations_oneside(a, b)
    vb, nb = _violations_oneside(b, a)
    coin = _coincident(a, b)
    viols = [(pos, "A", i, c) for (i, c, pos) in va] + [(pos, "B", i, c) for (i, c, pos) in vb]
    viols.sort()
    if viols or coin:
        if viols:
            pos, side, i, c = viols[0]
            return InterlaceReport(False, (i, c), na + nb, coin, side)
        # purely coincident: point at the first coincident pair
        return InterlaceReport(False, None, na + nb, True, None)
    return InterlaceReport(True, None, na + nb, False, None)


def detect_shifted(A, B) -> ShiftReport:
    """Find the smallest nonzero re-indexing shift that restores interlacing.

    Searches |d| <= 3 and reports the maximal suffix window of 1-based B
    indices on which A[s+d] <= B[s] < A[s+d+1] holds.
    """
    a = _as_zeros(A)
    b = _as_zeros(B)
    if len(a) < 2 or len(b) < 2:
        raise EmptyOverlapError("need at least two zeros in each sequence")
    if a[-1] <= b[0] or b[-1] <= a[0]:
        raise EmptyOverlapError("zero sequences cover disjoint ranges")
    if check_interlaced(a, b).interlaced:
        return ShiftReport(None, None)
    for ad in range(1, _MAX_SHIFT + 1):
        for d in (ad, -ad):
            # 1-based condition A[s+d] <= B[s] < A[s+d+1]; 0-based indices
            # are s-1+d and s+d.
            s_lo = max(1, 1 - d)
            s_hi = min(len(b), len(a) - d - 1)
            if s_hi - s_lo < 1:
                continue
            ok_from = None
            for s in range(s_lo, s_hi + 1):
                lo = a[s - 1 + d]
                hi = a[s + d]
                if lo - COINCIDENCE_TOL <= b[s - 1] < hi:
                    if ok_from is None:
                        ok_from = s
                else:
                    ok_from = None
            if ok_from is not None and s_hi - ok_from >= 1:
                return ShiftReport(d, (ok_from, s_hi))
    return ShiftReport(None, None)


def verify_chain(nu: float, c: float, n: int) -> VerificationReport:
    """Check the interleaving inequality chain

        j'_{nu,s} < y_{nu,s} < y_{nu+c,s} < y'_{nu,s} < j_{nu,s} < j_{nu+c,s} < j'_{nu,s+1}

    for s = 1..n, plus nu <= j'_{nu,1}.  worst_residual is the smallest
    margin over all 6n strict inequalities (positive means all hold).
    """
    nu = float(nu)
    c = float(c)
    if nu < 0.0:
        raise DomainError(f"chain requires nu >= 0, got {nu!r}")
    if not 0.0 < c <= 1.0:
        raise DomainError(f"chain requires 0 < c <= 1, got {c!r}")
    n = int(n)
    half = math.pi / 2.0
    jp = find_zeros(CylinderSpec.of(nu, 0.0), EvalKind.DERIVATIVE, n + 1).zeros
    y = find_zeros(CylinderSpec.of(nu, half), EvalKind.FUNCTION, n).zeros
    yc = find_zeros(CylinderSpec.of(nu + c, half), EvalKind.FUNCTION, n).zeros
    yp = find_zeros(CylinderSpec.of(nu, half), EvalKind.DERIVATIVE, n).zeros
    j = find_zeros(CylinderSpec.of(nu, 0.0), EvalKind.FUNCTION, n).zeros
    jc = find_zeros(CylinderSpec.of(nu + c, 0.0), EvalKind.FUNCTION, n).zeros
    names = ("j' < y", "y < y_{+c}", "y_{+c} < y'", "y' < j", "j < j_{+c}", "j_{+c} < j'_{s+1}")
    worst = math.inf
    counterexample = None
    checks = 0
    for s in range(n):
        links = (
            (jp[s], y[s]),
            (y[s], yc[s]),
            (yc[s], yp[s]),
            (yp[s], j[s]),
            (j[s], jc[s]),
            (jc[s], jp[s + 1]),
        )
        for name, (lo, hi) in zip(names, links):
            checks += 1
            margin = hi - lo
            if margin < worst:
                worst = margin
            # coincidences within COINCIDENCE_TOL are tolerated: at nu = 0,
            # c = 1 the links y_{1,s} vs y'_{0,s} and j_{1,s} vs j'_{0,s+1}
            # are exact equalities (Y'_0 = -Y_1, J'_0 = -J_1).
            if margin < -COINCIDENCE_TOL and counterexample is None:
                counterexample = {"s": s + 1, "link": name, "lower": lo, "upper": hi}
    checks += 1
    if nu > jp[0] and counterexample is None:
        counterexample = {"link": "nu <= j'_{nu,1}", "nu": nu, "first_zero": jp[0]}
    worst = min(worst, jp[0] - nu)
    return VerificationReport(
        name=f"chain(nu={nu:g}, c={c:g}, n={n})",
        passed=counterexample is None,
        checks=checks,
        worst_residual=worst,
        counterexample=counterexample,
    )
