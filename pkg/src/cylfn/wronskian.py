"""Wronskian of normalized cylinder functions and the interlacing equivalence.

With xi(x) = sqrt(x) C(x), the Wronskian W = xi_a xi_b' - xi_a' xi_b has its
local extrema exactly at the merged zeros of the two cylinder functions, is
strictly monotone in between, and tends to (2/pi) sin((mu - nu) pi/2 +
delta_a - delta_b) at infinity.  Interlacing of the zeros is equivalent to W
keeping one sign beyond the first zero, so sign changes are counted from the
extremum values alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .interlace import COINCIDENCE_TOL, check_interlaced
from .reports import VerificationReport
from .special_fn import CylinderSpec, EvalKind, X_MAX, cylinder_and_prime
from .zeros import find_zeros

__all__ = [
    "DegenerateSpecError",
    "WronskianProfile",
    "xi",
    "xi_prime",
    "wronskian_value",
    "wronskian_asymptote",
    "check_derivative_identity",
    "wronskian_profile",
    "interlace_wronskian_equivalence",
]


class DegenerateSpecError(ValueError):
    """Both specs name the same function; W vanishes identically."""


@dataclass(frozen=True)
class WronskianProfile:
    """Extremum structure of W on a finite window.

    extrema entries are (position, value, tag) with tag "A-zero", "B-zero" or
    "coincident"; coincident extrema (zero value by construction) are flagged
    and excluded from the sign-change count.  tail_value samples W past the
    window for comparison with the asymptote.
    """

    spec_a: CylinderSpec
    spec_b: CylinderSpec
    extrema: tuple
    sign_changes: int
    asymptote: float
    window: tuple
    tail_value: float
    coincident: bool = False


def _xi_pair(spec: CylinderSpec, x: float):
    c, cp = cylinder_and_prime(spec, x)
    r = math.sqrt(x)
    return r * c, c / (2.0 * r) + r * cp


def xi(spec: CylinderSpec, x: float) -> float:
    """Normal-form solution sqrt(x) C(x)."""
    return _xi_pair(spec, x)[0]


def xi_prime(spec: CylinderSpec, x: float) -> float:
    """Derivative of sqrt(x) C(x)."""
    return _xi_pair(spec, x)[1]


def wronskian_value(spec_a: CylinderSpec, spec_b: CylinderSpec, x: float) -> float:
    """W(sqrt(x) C_a, sqrt(x) C_b) at x."""
    fa, fpa = _xi_pair(spec_a, x)
    fb, fpb = _xi_pair(spec_b, x)
    return fa * fpb - fpa * fb


def wronskian_asymptote(spec_a: CylinderSpec, spec_b: CylinderSpec) -> float:
    """Limit of W at infinity: (2/pi) sin((mu - nu) pi/2 + delta_a - delta_b)."""
    return (2.0 / math.pi) * math.sin(
        0.5 * (spec_b.nu - spec_a.nu) * math.pi + spec_a.delta - spec_b.delta
    )


def check_derivative_identity(
    spec_a: CylinderSpec, spec_b: CylinderSpec, x: float, h: float = 1e-4
) -> float:
    """Residual of W' = (mu^2 - nu^2)/x^2 * xi_a xi_b at x.

    W' comes from a centered difference with step h; the residual is relative
    to max(1, |rhs|) so that large-amplitude small-x regions are not penalized
    for ordinary finite-difference truncation error.
    """
    x = float(x)
    if x - h <= 0.0:
        raise ValueError("need x - h > 0")
    num = (wronskian_value(spec_a, spec_b, x + h) - wronskian_value(spec_a, spec_b, x - h)) / (
        2.0 * h
    )
    nu = spec_a.nu
    mu = spec_b.nu
    rhs = (mu * mu - nu * nu) / (x * x) * xi(spec_a, x) * xi(spec_b, x)
    return abs(num - rhs) / max(1.0, abs(rhs))


def wronskian_profile(spec_a: CylinderSpec, spec_b: CylinderSpec, n: int) -> WronskianProfile:
    """Extremum positions/values of W from the first n zeros of each function.

    Extremum values use the closed forms -xi_a'(z) xi_b(z) at zeros of C_a and
    +xi_a(z) xi_b'(z) at zeros of C_b; no extremum search is performed.
    """
    if spec_a == spec_b:
        raise DegenerateSpecError("wronskian profile of a spec against itself is identically 0")
    za = find_zeros(spec_a, EvalKind.FUNCTION, n).zeros
    zb = find_zeros(spec_b, EvalKind.FUNCTION, n).zeros
    merged = sorted([(z, "A-zero") for z in za] + [(z, "B-zero") for z in zb])
    extrema = []
    coincident = False
    i = 0
    while i < len(merged):
        z, tag = merged[i]
        if i + 1 < len(merged) and merged[i + 1][0] - z <= COINCIDENCE_TOL and merged[i + 1][1] != tag:
            extrema.append((z, 0.0, "coincident"))
            coincident = True
            i += 2
            continue
        if tag == "A-zero":
            val = -xi_prime(spec_a, z) * xi(spec_b, z)
        else:
            val = xi(spec_a, z) * xi_prime(spec_b, z)
        extrema.append((z, val, tag))
        i += 1
    signs = [v > 0.0 for (_, v, t) in extrema if t != "coincident" and v != 0.0]
    sign_changes = sum(1 for s0, s1 in zip(signs, signs[1:]) if s0 != s1)
    x_lo = merged[0][0]
    x_hi = merged[-1][0]
    tail_x = min(x_hi + 10.0 * math.pi, X_MAX)
    tail = wronskian_value(spec_a, spec_b, tail_x)
    return WronskianProfile(
        spec_a=spec_a,
        spec_b=spec_b,
        extrema=tuple(extrema),
        sign_changes=sign_changes,
        asymptote=wronskian_asymptote(spec_a, spec_b),
        window=(x_lo, x_hi),
        tail_value=tail,
        coincident=coincident,
    )


def interlace_wronskian_equivalence(
    spec_a: CylinderSpec, spec_b: CylinderSpec, n: int
) -> VerificationReport:
    """Test: W root-free beyond its first extremum <=> zeros interlaced.

    Both sides are evaluated on the common covered window of the two n-term
    zero sequences; passed means the two verdicts agree.
    """
    if spec_a == spec_b:
        raise DegenerateSpecError("equivalence needs two distinct functions")
    prof = wronskian_profile(spec_a, spec_b, n)
    za = find_zeros(spec_a, EvalKind.FUNCTION, n)
    zb = find_zeros(spec_b, EvalKind.FUNCTION, n)
    x_hi = min(za.zeros[-1], zb.zeros[-1])
    signs = [v > 0.0 for (z, v, t) in prof.extrema if t != "coincident" and v != 0.0 and z <= x_hi]
    sc = sum(1 for s0, s1 in zip(signs, signs[1:]) if s0 != s1)
    rep = check_interlaced(za, zb)
    agree = (sc == 0) == rep.interlaced
    name = (
        f"wronskian-equivalence(nu={spec_a.nu:g}, delta={spec_a.delta:g}, "
        f"mu={spec_b.nu:g}, delta_bar={spec_b.delta:g}, n={n})"
    )
    counterexample = None
    if not agree:
        counterexample = {
            "sign_changes": sc,
            "interlaced": rep.interlaced,
            "first_violation": rep.first_violation,
            "window_hi": x_hi,
        }
    return VerificationReport(
        name=name,
        passed=agree,
        checks=len(signs) + rep.pairs_checked,
        worst_residual=float(sc),
        counterexample=counterexample,
        details={"sign_changes": sc, "interlaced": rep.interlaced},
    )
