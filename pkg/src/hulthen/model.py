"""Hulthén potential family and its coupling/dimensionless parametrization.

All potentials accept a scalar or an array of radii and return the same shape.
Energies are in the units implied by ``PhysicalParams`` (Hartree by default).
"""
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class PhysicalParams:
    """Physical constants of the problem; defaults are atomic units."""

    delta: float
    Z: float = 1.0
    mass: float = 1.0
    hbar: float = 1.0
    charge_sq: float = 1.0

    def __post_init__(self):
        for name in ("delta", "Z", "mass", "hbar", "charge_sq"):
            value = getattr(self, name)
            if not np.isfinite(value) or value <= 0:
                raise ValueError(f"{name} must be a positive finite number, got {value!r}")

    @classmethod
    def atomic(cls, delta, Z=1.0):
        return cls(delta=delta, Z=Z)

    @property
    def kinetic_scale(self):
        """hbar^2 / (2 m)."""
        return self.hbar**2 / (2.0 * self.mass)


@dataclass(frozen=True)
class QuantumState:
    """Radial quantum number ``n`` (node count) and angular momentum ``l``."""

    n: int
    l: int

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 0:
            raise ValueError(f"n must be a non-negative integer, got {self.n!r}")
        if int(self.l) != self.l or self.l < 0:
            raise ValueError(f"l must be a non-negative integer, got {self.l!r}")

    @property
    def n_bar(self):
        return self.n + 1

    @property
    def N(self):
        return self.n + self.l + 1


@dataclass(frozen=True)
class CouplingPair:
    v1: float
    v2: float


@dataclass(frozen=True)
class DimensionlessTriple:
    epsilon: float
    beta: float
    gamma: float


def _check_radius(r):
    r = np.asarray(r, dtype=float)
    if np.any(~(r > 0)):
        raise ValueError("radius must be strictly positive")
    return r


def _as_output(value, r):
    return float(value) if np.ndim(r) == 0 else value


def _screening_ratios(delta, r):
    """Return e^{-dr}/(1-e^{-dr}) and e^{-dr}/(1-e^{-dr})^2, sharing one exponential."""
    decay = np.exp(-delta * r)
    one_minus = -np.expm1(-delta * r)
    ratio = decay / one_minus
    return ratio, ratio / one_minus


def potential_hulthen(p, r):
    """Plain Hulthén potential -Z e^2 delta e^{-delta r} / (1 - e^{-delta r})."""
    r = _check_radius(r)
    ratio, _ = _screening_ratios(p.delta, r)
    return _as_output(-p.Z * p.charge_sq * p.delta * ratio, r)


def potential_superpartner(p, l, r):
    """The (l+1)-th superpartner member, written as -V1 x + V2 x^2 with x = e/(1-e)."""
    r = _check_radius(r)
    c = couplings(p, l)
    ratio, _ = _screening_ratios(p.delta, r)
    return _as_output(-c.v1 * ratio + c.v2 * ratio * ratio, r)


def potential_effective(p, l, r):
    """Hulthén attraction plus the exponentially screened centrifugal barrier."""
    r = _check_radius(r)
    ratio, barrier = _screening_ratios(p.delta, r)
    attraction = -p.Z * p.charge_sq * p.delta * ratio
    return _as_output(attraction + l * (l + 1) * p.kinetic_scale * p.delta**2 * barrier, r)


def potential_coulomb_effective(p, l, r):
    """Coulomb potential plus the true centrifugal barrier (the delta -> 0 limit)."""
    r = _check_radius(r)
    return _as_output(-p.Z * p.charge_sq / r + l * (l + 1) * p.kinetic_scale / r**2, r)


def couplings(p, l):
    if l < 0:
        raise ValueError("l must be non-negative")
    v2 = p.kinetic_scale * p.delta**2 * l * (l + 1)
    v1 = p.Z * p.charge_sq * p.delta * (1.0 - l * (l + 1) * p.kinetic_scale * p.delta / (p.Z * p.charge_sq))
    return CouplingPair(v1=v1, v2=v2)


def dimensionless(p, l, E):
    """Map (E, V1, V2) to (epsilon, beta, gamma); epsilon <= 0 means not bound."""
    c = couplings(p, l)
    scale = p.kinetic_scale * p.delta**2
    # gamma = V2 / scale is l(l+1) identically; keep it exact.
    return DimensionlessTriple(epsilon=-E / scale, beta=c.v1 / scale, gamma=float(l * (l + 1)))
