"""Cylinder-function numerics: evaluation, zero enumeration, interlacing and
Wronskian-based verification of interlacing conditions."""

from .special_fn import (
    CylinderSpec,
    DomainError,
    EvalKind,
    MixingAngle,
    Order,
    asymptotic_cylinder,
    bessel_j,
    bessel_y,
    cylinder,
    cylinder_and_prime,
    cylinder_prime,
    gamma_real,
    sign_at_origin,
)

__version__ = "0.1.0"
