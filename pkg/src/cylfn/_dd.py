"""Minimal double-double arithmetic (~31 significant digits).

Used internally to control cancellation in alternating series; a value is an
unevaluated pair (hi, lo) with |lo| <= ulp(hi)/2.
"""

from __future__ import annotations

_SPLITTER = 134217729.0  # 2**27 + 1


def two_sum(a: float, b: float):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def fast_two_sum(a: float, b: float):
    # requires |a| >= |b|
    s = a + b
    return s, b - (s - a)


def two_prod(a: float, b: float):
    p = a * b
    at = _SPLITTER * a
    ah = at - (at - a)
    al = a - ah
    bt = _SPLITTER * b
    bh = bt - (bt - b)
    bl = b - bh
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def dd_add(ah: float, al: float, bh: float, bl: float):
    s, e = two_sum(ah, bh)
    e += al + bl
    hi = s + e
    return hi, e - (hi - s)


def dd_mul(ah: float, al: float, bh: float, bl: float):
    p, e = two_prod(ah, bh)
    e += ah * bl + al * bh
    hi = p + e
    return hi, e - (hi - p)


def dd_div(ah: float, al: float, bh: float, bl: float):
    q1 = ah / bh
    ph, pl = two_prod(q1, bh)
    pl += q1 * bl
    rh, rl = dd_add(ah, al, -ph, -pl)
    q2 = rh / bh
    ph, pl = two_prod(q2, bh)
    pl += q2 * bl
    rh, rl = dd_add(rh, rl, -ph, -pl)
    q3 = rh / bh
    s, e = two_sum(q1, q2)
    e += q3
    hi = s + e
    return hi, e - (hi - s)
