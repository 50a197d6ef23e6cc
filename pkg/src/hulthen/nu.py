"""Closed-form Nikiforov-Uvarov solution for the Hulthén superpartner potential.

The radial equation in ``s = exp(-delta r)`` takes the hypergeometric form

    R'' + (1 - s)/(s(1 - s)) R' + sigma_tilde(s)/(s(1 - s))^2 R = 0,

and polynomial termination gives ``epsilon_n``.

``nu_k_roots``, ``nu_branch`` and ``lambda_n`` reproduce the originally
published expressions literally.  Those expressions are not mutually
consistent: the literal ``k`` is the negative of the textbook one, ``lambda`` flips the sign
of ``beta`` only, and ``lambda_n`` flips the sign of the whole textbook
``-n tau' - n(n-1) sigma''/2``.  As a result ``nu_branch(t).lambda_`` and
``lambda_n(n, t)`` do not coincide at ``epsilon_n``.  The textbook pair

    lambda = beta - (1 + 2 sqrt(eps))(1 + w)/2,   lambda_n = (2 + 2 sqrt(eps) + w) n + n(n - 1)

does coincide there, and ``quantization_defect`` measures exactly that; the
closed form ``epsilon_n`` is the solution of the textbook condition.

The resulting spectrum coincides with the deformed Woods-Saxon one for
deformation q = -1 and diffuseness a = 1/delta.
"""
import math
from dataclasses import dataclass

from .errors import ThresholdStateError, UnboundStateError
from .model import QuantumState, dimensionless


@dataclass(frozen=True)
class NuPolynomials:
    """Coefficient tuples, constant term first."""

    tau_tilde: tuple
    sigma: tuple
    sigma_tilde: tuple


@dataclass(frozen=True)
class NuBranch:
    k: float
    pi_const: float
    pi_slope: float
    tau_const: float
    tau_slope: float
    lambda_: float


def nu_polynomials(t):
    eps, beta, gamma = t.epsilon, t.beta, t.gamma
    return NuPolynomials(
        tau_tilde=(1.0, -1.0),
        sigma=(0.0, 1.0, -1.0),
        sigma_tilde=(-eps, 2.0 * eps + beta, -(eps + beta + gamma)),
    )


def k_discriminant(t, k):
    """Discriminant of the quadratic under the square root of pi(s), and its scale.

    The scale is the largest magnitude among the terms that cancel, so callers
    can judge ``|disc| / scale`` as a relative residual.
    """
    eps, beta, gamma = t.epsilon, t.beta, t.gamma
    first = (4.0 * (beta + 2.0 * eps + k)) ** 2
    second = 16.0 * eps * (1.0 + 4.0 * eps + 4.0 * beta + 4.0 * gamma + 4.0 * k)
    return first - second, max(abs(first), abs(second), 1.0)


def nu_k_roots(t):
    if t.epsilon < 0:
        raise UnboundStateError(f"epsilon = {t.epsilon} < 0: no bound state")
    root = math.sqrt(t.epsilon * (1.0 + 4.0 * t.gamma))
    return -t.beta + root, -t.beta - root


def nu_branch(t):
    """The physical branch: k_minus with pi(s) = sqrt(eps) - (1 + 2 sqrt(eps) + w) s / 2."""
    if t.epsilon <= 0:
        raise UnboundStateError(f"epsilon = {t.epsilon} <= 0: no bound state")
    a = math.sqrt(t.epsilon)
    w = math.sqrt(1.0 + 4.0 * t.gamma)
    _, k_minus = nu_k_roots(t)
    return NuBranch(
        k=k_minus,
        pi_const=a,
        pi_slope=-(1.0 + 2.0 * a + w) / 2.0,
        tau_const=1.0 + 2.0 * a,
        tau_slope=-(2.0 + 2.0 * a + w),
        lambda_=-t.beta - (1.0 + 2.0 * a) * (1.0 + w) / 2.0,
    )


def lambda_n(n, t):
    if n < 0:
        raise ValueError("n must be non-negative")
    if t.epsilon <= 0:
        raise UnboundStateError(f"epsilon = {t.epsilon} <= 0: no bound state")
    a = math.sqrt(t.epsilon)
    w = math.sqrt(1.0 + 4.0 * t.gamma)
    return -(2.0 + 2.0 * a + w) * n - n * (n - 1)


def quantization_defect(n, t):
    """Textbook lambda minus textbook lambda_n; zero when ``t.epsilon == epsilon_n``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if t.epsilon <= 0:
        raise UnboundStateError(f"epsilon = {t.epsilon} <= 0: no bound state")
    a = math.sqrt(t.epsilon)
    w = math.sqrt(1.0 + 4.0 * t.gamma)
    lam = t.beta - (1.0 + 2.0 * a) * (1.0 + w) / 2.0
    lam_n = (2.0 + 2.0 * a + w) * n + n * (n - 1)
    return lam - lam_n


def quantized_bracket(n, beta, gamma):
    """(1+2n)/2 - (n(n+1) + beta)/(1 + 2n + sqrt(1+4 gamma)).

    Negative for bound states, where it equals -sqrt(epsilon_n); a positive value
    is the spurious root that appears once the level has crossed threshold.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    w = math.sqrt(1.0 + 4.0 * gamma)
    return (1.0 + 2.0 * n) / 2.0 - (n * (n + 1) + beta) / (1.0 + 2.0 * n + w)


def epsilon_n(n, beta, gamma):
    bracket = quantized_bracket(n, beta, gamma)
    if bracket == 0.0:
        raise ThresholdStateError(f"level n={n} sits exactly at threshold (epsilon = 0)")
    return bracket * bracket


def critical_screening(state, p):
    """Screening at which the level reaches E = 0: 2 m Z e^2 / (hbar^2 N^2)."""
    return 2.0 * p.mass * p.Z * p.charge_sq / (p.hbar**2 * state.N**2)


def is_bound(state, p):
    return p.delta < critical_screening(state, p)


def _require_bound(state, p):
    if not is_bound(state, p):
        delta_c = critical_screening(state, p)
        raise UnboundStateError(
            f"state n={state.n}, l={state.l} is not bound at delta={p.delta} "
            f"(critical screening {delta_c:.10g})",
            delta_c=delta_c,
        )


def energy_from_epsilon(state, p, allow_unbound=False):
    """Energy through the dimensionless route: E = -hbar^2 delta^2 eps_n / (2m)."""
    if not allow_unbound:
        _require_bound(state, p)
    t = dimensionless(p, state.l, 0.0)
    return -p.kinetic_scale * p.delta**2 * epsilon_n(state.n, t.beta, t.gamma)


def energy_general(state, p, allow_unbound=False):
    """-(hbar^2/2m) [m Z e^2/(hbar^2 N) - N delta/2]^2 with N = n + l + 1.

    Past threshold the square hides the sign flip of the bracket, so the raw
    formula is only returned when ``allow_unbound`` is set.
    """
    if not allow_unbound:
        _require_bound(state, p)
    N = state.N
    bracket = p.mass * p.Z * p.charge_sq / (p.hbar**2 * N) - N * p.delta / 2.0
    return -p.kinetic_scale * bracket * bracket


def energy_atomic(n_bar, l, delta, allow_unbound=False):
    """Atomic units, Z = 1: -(1/2) [1/(n_bar + l) - (n_bar + l) delta / 2]^2."""
    if n_bar < 1:
        raise ValueError("n_bar must be >= 1")
    if l < 0:
        raise ValueError("l must be non-negative")
    N = n_bar + l
    if not allow_unbound and not delta < 2.0 / N**2:
        raise UnboundStateError(
            f"state n_bar={n_bar}, l={l} is not bound at delta={delta} "
            f"(critical screening {2.0 / N**2:.10g})",
            delta_c=2.0 / N**2,
        )
    bracket = 1.0 / N - N * delta / 2.0
    return -0.5 * bracket * bracket


def bound_state_count(l, p):
    """Number of levels n >= 0 with delta < delta_c, i.e. integers N > l with N^2 < 2mZe^2/(hbar^2 delta)."""
    if l < 0:
        raise ValueError("l must be non-negative")
    limit = 2.0 * p.mass * p.Z * p.charge_sq / (p.hbar**2 * p.delta)
    n_max = math.isqrt(int(limit)) + 1
    while n_max > 0 and not n_max**2 < limit:
        n_max -= 1
    return max(0, n_max - l)


def spectrum(l, p, max_states=None):
    """Bound levels of angular momentum ``l`` as (state, energy) pairs, n ascending."""
    count = bound_state_count(l, p)
    if max_states is not None:
        count = min(count, max_states)
    return [(QuantumState(n, l), energy_general(QuantumState(n, l), p)) for n in range(count)]
