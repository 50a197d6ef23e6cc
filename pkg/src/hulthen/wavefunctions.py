"""Radial wavefunctions R(s) = D s^sqrt(eps) (1-s)^mu P_n^(2 sqrt(eps), eta-1)(1 - 2s).

Here s = exp(-delta r), eta = 1 + sqrt(1 + 4 l(l+1)) = 2l + 2 and mu = eta / 2,
so R vanishes like r^(l+1) at the origin and like exp(-kappa r) at infinity.
"""
import math
from dataclasses import dataclass

import numpy as np
from scipy import special

from .errors import UnboundStateError
from .model import QuantumState, dimensionless, potential_effective
from .nu import critical_screening, energy_general, is_bound


def jacobi(n, a, b, x):
    """Jacobi polynomial P_n^(a,b)(x) by the three-term recurrence in degree."""
    if n < 0 or int(n) != n:
        raise ValueError(f"degree must be a non-negative integer, got {n!r}")
    if a <= -1 or b <= -1:
        raise ValueError(f"Jacobi parameters must exceed -1, got a={a}, b={b}")
    x = np.asarray(x, dtype=float)
    p_prev = np.ones_like(x)
    if n == 0:
        return p_prev if x.ndim else float(p_prev)
    p = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0
    for k in range(2, n + 1):
        c = 2 * k + a + b
        a_k = 2.0 * k * (k + a + b) * (c - 2.0)
        b_k = (c - 1.0) * (c * (c - 2.0) * x + a * a - b * b)
        c_k = 2.0 * (k + a - 1.0) * (k + b - 1.0) * c
        p_prev, p = p, (b_k * p - c_k * p_prev) / a_k
    return p if x.ndim else float(p)


@dataclass(frozen=True)
class WaveShape:
    sqrt_epsilon: float
    eta: float
    mu: float
    n: int


def wave_shape(state, p):
    if not is_bound(state, p):
        delta_c = critical_screening(state, p)
        raise UnboundStateError(
            f"state n={state.n}, l={state.l} is not bound at delta={p.delta}", delta_c=delta_c
        )
    t = dimensionless(p, state.l, energy_general(state, p))
    eta = 1.0 + math.sqrt(1.0 + 4.0 * t.gamma)
    return WaveShape(sqrt_epsilon=math.sqrt(t.epsilon), eta=eta, mu=eta / 2.0, n=state.n)


def _check_open_unit(s):
    s = np.asarray(s, dtype=float)
    if np.any(~((s > 0) & (s < 1))):
        raise ValueError("s must lie in the open interval (0, 1)")
    return s


def weight_rho(shape, s):
    s = _check_open_unit(s)
    out = (1.0 - s) ** (shape.eta - 1.0) * s ** (2.0 * shape.sqrt_epsilon)
    return out if s.ndim else float(out)


def phi_factor(shape, s):
    s = _check_open_unit(s)
    out = (1.0 - s) ** shape.mu * s**shape.sqrt_epsilon
    return out if s.ndim else float(out)


def _radial_shape(shape, s, one_minus_s):
    a = shape.sqrt_epsilon
    x = one_minus_s - s
    poly = jacobi(shape.n, 2.0 * a, shape.eta - 1.0, x)
    return s**a * one_minus_s**shape.mu * poly


def radial_unnormalized(state, p, s):
    shape = wave_shape(state, p)
    s = _check_open_unit(s)
    out = _radial_shape(shape, s, 1.0 - s)
    return out if s.ndim else float(out)


def _gauss_jacobi_unit(m, alpha, beta):
    """Nodes x in (-1, 1) and normalized weights for weight (1-x)^alpha (1+x)^beta.

    Weights come from the Christoffel form 1/((1-x^2) P_m'(x)^2) and are
    normalized to sum to one, which avoids the overflowing 2^(alpha+beta+1)
    prefactor for large alpha.
    """
    with np.errstate(over="ignore"):
        x, _ = special.roots_jacobi(m, alpha, beta)
    deriv = jacobi(m - 1, alpha + 1.0, beta + 1.0, x)
    log_w = -np.log1p(-x * x) - 2.0 * np.log(np.abs(deriv))
    w = np.exp(log_w - log_w.max())
    return x, w / w.sum()


def norm_integral(shape, delta):
    """Integral of the unnormalized R(r)^2 over r in (0, inf).

    With dr = -ds/(delta s) the integrand is s^(2a-1) (1-s)^eta P_n^2 on (0, 1),
    a polynomial against a Jacobi weight, so Gauss-Jacobi with n + 2 nodes is exact.
    """
    a = shape.sqrt_epsilon
    alpha, beta = 2.0 * a - 1.0, shape.eta
    x, w = _gauss_jacobi_unit(shape.n + 2, alpha, beta)
    poly = jacobi(shape.n, 2.0 * a, shape.eta - 1.0, x)
    # weight (1-x)^alpha (1+x)^beta in x maps to s^alpha (1-s)^beta in s, mass B(alpha+1, beta+1)
    log_mass = special.betaln(alpha + 1.0, beta + 1.0)
    return math.exp(log_mass) * float(np.dot(w, poly * poly)) / delta


def normalize(state, p):
    """Normalization constant D_n with the integral of R(r)^2 dr equal to one."""
    shape = wave_shape(state, p)
    return 1.0 / math.sqrt(norm_integral(shape, p.delta))


def evaluate(state, p, r, norm_const=None):
    """Normalized R(r) on arbitrary radii r >= 0."""
    shape = wave_shape(state, p)
    if norm_const is None:
        norm_const = 1.0 / math.sqrt(norm_integral(shape, p.delta))
    r = np.asarray(r, dtype=float)
    if np.any(r < 0):
        raise ValueError("radius must be non-negative")
    s = np.exp(-p.delta * r)
    out = norm_const * _radial_shape(shape, s, -np.expm1(-p.delta * r))
    return out if r.ndim else float(out)


def outer_turning_point(potential, E, r_start=1e-3, r_stop=1e7):
    """Outermost radius where ``potential(r) == E``, scanning a geometric grid.

    Returns ``r_start`` when the potential exceeds E everywhere on the scan.
    """
    r = np.geomspace(r_start, r_stop, 4000)
    inside = np.nonzero(potential(r) < E)[0]
    if inside.size == 0:
        return r_start
    i = inside[-1]
    if i == r.size - 1:
        return r_stop
    lo, hi = r[i], r[i + 1]
    for _ in range(100):
        mid = 0.5 * (lo + hi)
        if potential(mid) < E:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def default_r_max(state, p, decay_lengths=30.0):
    """Outer turning point plus ``decay_lengths`` of exp(-kappa r)."""
    E = energy_general(state, p)
    kappa = math.sqrt(2.0 * p.mass * -E) / p.hbar
    r_turn = outer_turning_point(lambda r: potential_effective(p, state.l, r), E)
    return r_turn + decay_lengths / kappa


def count_nodes(values, trim=0.001):
    """Strict sign changes, ignoring the first and last ``trim`` fraction of samples."""
    values = np.asarray(values, dtype=float)
    skip = int(math.ceil(trim * values.size))
    core = values[skip : values.size - skip]
    signs = np.sign(core)
    signs = signs[signs != 0]
    return int(np.count_nonzero(signs[1:] != signs[:-1]))


@dataclass(frozen=True, eq=False)
class RadialWavefunction:
    r_grid: np.ndarray
    values: np.ndarray
    s_grid: np.ndarray
    norm_const: float
    node_count: int
    state: QuantumState
    delta: float


def sample(state, p, r_max=None, count=4001):
    """Normalized R(r) on a uniform grid over [0, r_max]; r = 0 is included (R = 0 there)."""
    if count < 2:
        raise ValueError("count must be at least 2")
    shape = wave_shape(state, p)
    if r_max is None:
        r_max = default_r_max(state, p)
    if not r_max > 0:
        raise ValueError("r_max must be positive")
    norm_const = 1.0 / math.sqrt(norm_integral(shape, p.delta))
    r = np.linspace(0.0, r_max, count)
    s = np.exp(-p.delta * r)
    # + 0.0 turns the -0.0 produced at r = 0 for odd n into 0.0
    values = norm_const * _radial_shape(shape, s, -np.expm1(-p.delta * r)) + 0.0
    for arr in (r, s, values):
        arr.flags.writeable = False
    return RadialWavefunction(
        r_grid=r,
        values=values,
        s_grid=s,
        norm_const=norm_const,
        node_count=count_nodes(values),
        state=state,
        delta=p.delta,
    )


def inner_product(w1, w2):
    """Trapezoidal overlap of two sampled wavefunctions on the same grid."""
    if w1.r_grid.shape != w2.r_grid.shape or not np.array_equal(w1.r_grid, w2.r_grid):
        raise ValueError("wavefunctions are sampled on different grids")
    return float(np.trapezoid(w1.values * w2.values, w1.r_grid))
