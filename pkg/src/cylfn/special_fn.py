"""Evaluation of Gamma, Bessel J/Y and general cylinder functions.

A cylinder function is C(x; nu, delta) = cos(delta) J_nu(x) - sin(delta) Y_nu(x).
Supported domain: order 0 <= nu <= 30, argument 0 < x <= 400, double precision.

Strategy: compensated (double-double) power series for x <= 30; Miller-style
backward recurrence for J and asymptotic-seeded forward recurrence for Y when
x > 30.  Derivatives always come from the recurrence
C'_nu = -C_{nu+1} + (nu/x) C_nu, never from numerical differentiation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from ._dd import dd_add, dd_div, dd_mul, two_prod, two_sum

__all__ = [
    "DomainError",
    "Order",
    "MixingAngle",
    "CylinderSpec",
    "EvalKind",
    "gamma_real",
    "bessel_j",
    "bessel_y",
    "cylinder",
    "cylinder_prime",
    "cylinder_and_prime",
    "sign_at_origin",
    "asymptotic_cylinder",
    "NU_MAX",
    "X_MAX",
]

NU_MAX = 30.0
X_MAX = 400.0
_X_SERIES = 30.0  # power series below, recurrence/asymptotics above
_NU_INTERNAL_MAX = 34.0  # recurrences reach a few orders above NU_MAX

# gamma = Euler-Mascheroni constant as a double-double pair
_EULER_HI = 0.5772156649015329
_EULER_LO = -4.942915152430645e-18


class DomainError(ValueError):
    """Argument outside the supported evaluation box."""


@dataclass(frozen=True)
class Order:
    """Real order nu of a cylinder function, restricted to [0, 30].

    nu = 0 is admitted for the boundary cases built on J_0 / Y_0 (zero
    anchors, the first-zero-at-0 convention for J'_0, and the nu = 0 row of
    the inequality-chain checks).
    """

    nu: float

    def __post_init__(self):
        nu = float(self.nu)
        if not math.isfinite(nu):
            raise DomainError(f"order must be finite, got {self.nu!r}")
        if nu < 0.0 or nu > NU_MAX:
            raise DomainError(f"order must lie in [0, {NU_MAX:g}], got {nu!r}")
        object.__setattr__(self, "nu", nu)


@dataclass(frozen=True)
class MixingAngle:
    """Mixing angle delta, normalized into [0, pi) on construction.

    delta and delta + pi give functions differing only by overall sign, with
    identical zeros, so the normalization loses nothing that matters here.
    """

    delta: float

    def __post_init__(self):
        d = float(self.delta)
        if not math.isfinite(d):
            raise DomainError(f"angle must be finite, got {self.delta!r}")
        d = math.fmod(d, math.pi)
        if d < 0.0:
            d += math.pi
        object.__setattr__(self, "delta", d)


@dataclass(frozen=True)
class CylinderSpec:
    """Identifies one cylinder function C(x; nu, delta) up to sign."""

    order: Order
    angle: MixingAngle

    @staticmethod
    def of(nu: float, delta: float) -> "CylinderSpec":
        return CylinderSpec(Order(nu), MixingAngle(delta))

    @property
    def nu(self) -> float:
        return self.order.nu

    @property
    def delta(self) -> float:
        return self.angle.delta


class EvalKind(Enum):
    FUNCTION = "function"
    DERIVATIVE = "derivative"


# ---------------------------------------------------------------------------
# Gamma
# ---------------------------------------------------------------------------

# Lanczos approximation, g = 7, n = 9 (Godfrey's coefficients).
_LANCZOS_G = 7.0
_LANCZOS_C = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_2PI = 2.5066282746310002


def _gamma_lanczos(a: float) -> float:
    # valid for a > 0
    z = a - 1.0
    s = _LANCZOS_C[0]
    for i in range(1, 9):
        s += _LANCZOS_C[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _SQRT_2PI * t ** (z + 0.5) * math.exp(-t) * s


def gamma_real(a: float) -> float:
    """Gamma function for positive real arguments.

    Relative error <= 1e-13 on (0, 60].
    """
    a = float(a)
    if not math.isfinite(a) or a <= 0.0:
        raise DomainError(f"gamma_real requires a finite positive argument, got {a!r}")
    return _gamma_lanczos(a)


def _sinpi(a: float) -> float:
    # sin(pi*a) with the argument reduced before multiplying by pi
    r = math.fmod(a, 2.0)
    n = math.floor(r + 0.5)  # nearest integer in [-2, 2]
    r -= n
    s = math.sin(math.pi * r)
    return -s if (int(n) & 1) else s


def _cospi(a: float) -> float:
    r = math.fmod(a, 2.0)
    n = math.floor(r + 0.5)
    r -= n
    c = math.cos(math.pi * r)
    return -c if (int(n) & 1) else c


def _rgamma(a: float) -> float:
    # 1/Gamma(a) for any real a; zero at the poles a = 0, -1, -2, ...
    if a > 0.0:
        return 1.0 / _gamma_lanczos(a)
    if a == math.floor(a):
        return 0.0
    # reflection: 1/Gamma(a) = Gamma(1-a) sin(pi a) / pi
    return _gamma_lanczos(1.0 - a) * _sinpi(a) / math.pi


# ---------------------------------------------------------------------------
# Power series (x <= 30), double-double accumulation
# ---------------------------------------------------------------------------


def _j_series(nu: float, x: float) -> float:
    # J_nu via the defining series; nu real > -3, x in (0, 30].
    # Negative integer orders reduce to positive ones first.
    if nu < 0.0 and nu == math.floor(nu):
        n = int(-nu)
        v = _j_series(float(n), x)
        return -v if (n & 1) else v
    h = 0.5 * x
    qh, ql = two_prod(h, h)
    th, tl = 1.0, 0.0  # running term of sum_m (-q)^m / (m! (nu+1)_m)
    sh, sl = 1.0, 0.0
    tmax = 1.0
    m = 1.0
    while m < 600.0:
        eh, el = two_sum(m, nu)  # exact
        dh, dl = two_prod(m, eh)
        dl += m * el
        th, tl = dd_mul(th, tl, qh, ql)
        th, tl = dd_div(th, tl, dh, dl)
        th, tl = -th, -tl
        sh, sl = dd_add(sh, sl, th, tl)
        at = abs(th)
        if at > tmax:
            tmax = at
        elif at < 1e-33 * tmax and m > h:
            break
        m += 1.0
    return (h**nu) * _rgamma(nu + 1.0) * (sh + sl)


def _y_int_base(x: float):
    # (Y_0, Y_1) from the logarithmic limiting series, x in (0, 30].
    h = 0.5 * x
    qh, ql = two_prod(h, h)
    lg = math.log(h)
    out = []
    for n in (0, 1):
        # sum_k (psi(k+1) + psi(k+n+1)) (-q)^k / (k! (k+n)!)
        th, tl = (1.0, 0.0)  # t_0 = 1/n!  (n! = 1 for n in {0,1})
        fh, fl = dd_add(-2.0 * _EULER_HI, -2.0 * _EULER_LO, float(n), 0.0)
        sh, sl = dd_mul(th, tl, fh, fl)
        tmax = abs(sh)
        k = 1.0
        while k < 600.0:
            eh, el = two_sum(k, float(n))
            dh, dl = two_prod(k, eh)
            dl += k * el
            th, tl = dd_mul(th, tl, qh, ql)
            th, tl = dd_div(th, tl, dh, dl)
            th, tl = -th, -tl
            ih, il = dd_div(1.0, 0.0, k, 0.0)
            fh, fl = dd_add(fh, fl, ih, il)
            ih, il = dd_div(1.0, 0.0, k + n, 0.0)
            fh, fl = dd_add(fh, fl, ih, il)
            ph, pl = dd_mul(th, tl, fh, fl)
            sh, sl = dd_add(sh, sl, ph, pl)
            ap = abs(ph)
            if ap > tmax:
                tmax = ap
            elif ap < 1e-33 * max(tmax, 1.0) and k > h:
                break
            k += 1.0
        psi_sum = sh + sl
        jn = _j_series(float(n), x)
        y = (2.0 / math.pi) * lg * jn - (h**n) / math.pi * psi_sum
        if n == 1:
            y -= 1.0 / (math.pi * h)  # finite sum term: (n-k-1)!/k! at k=0
        out.append(y)
    return out[0], out[1]


# ---------------------------------------------------------------------------
# Large-x machinery (x > 30)
# ---------------------------------------------------------------------------


def _hankel_jy(nu: float, x: float):
    # Hankel asymptotic expansion; accurate for small orders (here nu < 2.5)
    # once x > ~25.  Returns (J_nu, Y_nu).
    mu4 = 4.0 * nu * nu
    p = 1.0
    q = 0.0
    a = 1.0
    prev = math.inf
    for k in range(1, 60):
        a *= (mu4 - (2.0 * k - 1.0) ** 2) / (8.0 * k * x)
        aa = abs(a)
        if aa >= prev or aa < 1e-20:
            if aa < prev:
                sgn = -1.0 if ((k // 2) & 1) else 1.0
                if k & 1:
                    q += sgn * a
                else:
                    p += sgn * a
            break
        prev = aa
        sgn = -1.0 if ((k // 2) & 1) else 1.0
        if k & 1:
            q += sgn * a
        else:
            p += sgn * a
    w = x - (0.5 * nu + 0.25) * math.pi
    cw = math.cos(w)
    sw = math.sin(w)
    amp = math.sqrt(2.0 / (math.pi * x))
    return amp * (cw * p - sw * q), amp * (sw * p + cw * q)


def _miller_values(mu0: float, k_lo: int, k_hi: int, x: float, extra: int):
    # One backward-recurrence pass; returns J at orders mu0 + k, k_lo..k_hi.
    m_top = int(max(k_hi, math.ceil(x)) + 10.0 * x ** (1.0 / 3.0) + 20) + extra
    vals = [0.0] * (m_top + 1 - k_lo)

    def idx(k):
        return k - k_lo

    jp = 0.0
    j = 1e-300
    vals[idx(m_top)] = j
    for k in range(m_top - 1, k_lo - 1, -1):
        order = mu0 + (k + 1)
        jm = (2.0 * order / x) * j - jp
        jp = j
        j = jm
        vals[idx(k)] = j
        if abs(j) > 1e250:
            scale = 1e-250
            j *= scale
            jp *= scale
            for i in range(idx(k), len(vals)):
                vals[i] *= scale
    # normalization: (x/2)^mu0 = sum_k c_k J_{mu0+2k},
    # c_0 = Gamma(mu0+1), c_k = (mu0+2k) Gamma(mu0+1) prod_{j<k}(mu0+j) / k!
    g1 = _gamma_lanczos(mu0 + 1.0) if mu0 > 0.0 else 1.0
    s = g1 * vals[idx(0)]
    comp = 0.0
    hk = g1  # h_1
    k = 1
    while 2 * k <= m_top:
        ck = (mu0 + 2.0 * k) * hk
        term = ck * vals[idx(2 * k)]
        y = term - comp
        t = s + y
        comp = (t - s) - y
        s = t
        hk *= (mu0 + k) / (k + 1.0)
        k += 1
    norm = (0.5 * x) ** mu0 / s
    return [vals[idx(k)] * norm for k in range(k_lo, k_hi + 1)]


def _miller(mu0: float, k_lo: int, k_hi: int, x: float):
    # adaptive start order: grow until two passes agree to ~1e-13
    out = _miller_values(mu0, k_lo, k_hi, x, 0)
    extra = 16
    for _ in range(6):
        nxt = _miller_values(mu0, k_lo, k_hi, x, extra)
        ok = True
        for a, b in zip(out, nxt):
            if abs(a - b) > 1e-13 * max(abs(b), 1e-280):
                ok = False
                break
        out = nxt
        if ok:
            return out
        extra += 16
    return out


def _j_large(nu: float, x: float) -> float:
    fl = math.floor(nu)
    mu0 = nu - fl
    k = int(fl)
    lo = min(k, 0)
    return _miller(mu0, lo, max(k, 0), x)[k - lo]


def _j_pair_large(nu: float, x: float):
    fl = math.floor(nu)
    mu0 = nu - fl
    k = int(fl)
    lo = min(k, 0)
    vals = _miller(mu0, lo, max(k, 0) + 1, x)
    return vals[k - lo], vals[k + 1 - lo]


def _y_pair(nu: float, x: float):
    # (Y_nu, Y_{nu+1}) by forward recurrence from two base orders in [0, 2)
    mu = nu - math.floor(nu)
    steps = int(math.floor(nu))
    if x > _X_SERIES:
        y0 = _hankel_jy(mu, x)[1]
        y1 = _hankel_jy(mu + 1.0, x)[1]
    elif mu == 0.0:
        y0, y1 = _y_int_base(x)
    else:
        # reflection through negative-order J from the series
        s = _sinpi(mu)
        c = _cospi(mu)
        y0 = (_j_series(mu, x) * c - _j_series(-mu, x)) / s
        y1 = (_j_series(mu + 1.0, x) * c + _j_series(-mu - 1.0, x)) / s
    p = mu + 1.0
    for _ in range(steps):
        y0, y1 = y1, (2.0 * p / x) * y1 - y0
        p += 1.0
    return y0, y1


def _y_single(nu: float, x: float) -> float:
    # Y_nu alone; avoids the second base order when no recurrence is needed
    mu = nu - math.floor(nu)
    if math.floor(nu) != 0.0:
        return _y_pair(nu, x)[0]
    if x > _X_SERIES:
        return _hankel_jy(mu, x)[1]
    if mu == 0.0:
        return _y_int_base(x)[0]
    s = _sinpi(mu)
    return (_j_series(mu, x) * _cospi(mu) - _j_series(-mu, x)) / s


def _check_x(x: float) -> float:
    x = float(x)
    if not math.isfinite(x) or x <= 0.0 or x > X_MAX:
        raise DomainError(f"argument must lie in (0, {X_MAX:g}], got {x!r}")
    return x


def bessel_j(nu: float, x: float) -> float:
    """Bessel function of the first kind, real order.

    Supported box: nu in [-1, 31], 0 < x <= 400.  Negative fractional orders
    are admitted because the reflection formula for Y needs them.
    """
    nu = float(nu)
    x = _check_x(x)
    if not math.isfinite(nu) or nu < -1.0 or nu > 31.0:
        raise DomainError(f"bessel_j order must lie in [-1, 31], got {nu!r}")
    return _j_any(nu, x)


def _j_any(nu: float, x: float) -> float:
    if x <= _X_SERIES:
        return _j_series(nu, x)
    return _j_large(nu, x)


def bessel_y(nu: float, x: float) -> float:
    """Bessel function of the second kind, order in [0, 30], 0 < x <= 400."""
    nu = float(nu)
    x = _check_x(x)
    if not math.isfinite(nu) or nu < 0.0 or nu > NU_MAX:
        raise DomainError(f"bessel_y order must lie in [0, {NU_MAX:g}], got {nu!r}")
    return _y_single(nu, x)


def _cyl_raw(nu: float, delta: float, x: float) -> float:
    # cos(delta) J_nu - sin(delta) Y_nu with zero-weight parts skipped
    c = math.cos(delta)
    s = math.sin(delta)
    v = 0.0
    if abs(c) > 1e-15:
        v += c * _j_any(nu, x)
    if abs(s) > 1e-15:
        v -= s * _y_single(nu, x)
    return v


def _cyl_and_prime_raw(nu: float, delta: float, x: float):
    # (C, C') sharing ladder work; C' = -C_{nu+1} + (nu/x) C_nu
    c = math.cos(delta)
    s = math.sin(delta)
    v0 = v1 = 0.0
    if abs(c) > 1e-15:
        if x <= _X_SERIES:
            j0, j1 = _j_series(nu, x), _j_series(nu + 1.0, x)
        else:
            j0, j1 = _j_pair_large(nu, x)
        v0 += c * j0
        v1 += c * j1
    if abs(s) > 1e-15:
        y0, y1 = _y_pair(nu, x)
        v0 -= s * y0
        v1 -= s * y1
    return v0, -v1 + (nu / x) * v0


def cylinder(spec: CylinderSpec, x: float) -> float:
    """Evaluate C(x; nu, delta) = cos(delta) J_nu(x) - sin(delta) Y_nu(x)."""
    x = _check_x(x)
    return _cyl_raw(spec.nu, spec.delta, x)


def cylinder_prime(spec: CylinderSpec, x: float) -> float:
    """Evaluate C'(x; nu, delta) via C'_nu = -C_{nu+1} + (nu/x) C_nu."""
    x = _check_x(x)
    return _cyl_and_prime_raw(spec.nu, spec.delta, x)[1]


def cylinder_and_prime(spec: CylinderSpec, x: float):
    """Evaluate (C, C') at x, sharing the order ladder between the two."""
    x = _check_x(x)
    return _cyl_and_prime_raw(spec.nu, spec.delta, x)


def sign_at_origin(spec: CylinderSpec) -> int:
    """Sign of C(x) as x -> 0+.

    With delta normalized into [0, pi): +1 when sin(delta) > 0 (the Y part
    dominates with a positive coefficient), and +1 for delta = 0 (pure J).
    """
    s = math.sin(spec.delta)
    if s > 0.0:
        return 1
    if s < 0.0:
        return -1  # unreachable for normalized angles; kept for clarity
    return 1


def asymptotic_cylinder(spec: CylinderSpec, x: float) -> float:
    """Leading-order large-x form sqrt(2/(pi x)) cos(x - nu pi/2 - pi/4 + delta).

    Requires x >= 10 * max(1, nu); intended for bracket seeding and sanity
    checks, not for accurate evaluation.
    """
    x = float(x)
    nu = spec.nu
    if not math.isfinite(x) or x < 10.0 * max(1.0, nu):
        raise DomainError(f"asymptotic form requires x >= 10*max(1, nu), got x={x!r}")
    return math.sqrt(2.0 / (math.pi * x)) * math.cos(x - (0.5 * nu + 0.25) * math.pi + spec.delta)
