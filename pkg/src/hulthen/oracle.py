"""Numerov shooting solver for the radial equation, independent of the closed form.

The equation u'' = (2m/hbar^2)(V(r) - E) u is integrated on a logarithmic grid
x = ln r with u = sqrt(r) y, which turns it into y'' = g(x) y with
g = r^2 (2m/hbar^2)(V - E) + 1/4.  Eigenvalues are bracketed by counting
nodes of the outward solution (Sturm) and refined on the discrete Wronskian of
the outward and inward solutions, which vanishes exactly at the eigenvalues of
the discretized problem.
"""
import math
from dataclasses import dataclass

import numba
import numpy as np
from scipy import optimize

from .errors import NumericalError, UnboundStateError
from .model import potential_effective, potential_hulthen
from .nu import energy_general, is_bound
from .wavefunctions import outer_turning_point

_RESCALE = 1e100


@dataclass(frozen=True)
class ShootingConfig:
    r_min: float = 1e-6
    r_max: float | None = None
    steps: int = 20000
    energy_tol: float = 1e-11
    max_bisections: int = 200

    def __post_init__(self):
        if not self.r_min > 0:
            raise ValueError("r_min must be positive")
        if self.r_max is not None and not self.r_max > self.r_min:
            raise ValueError("r_max must exceed r_min")
        if self.steps < 1000:
            raise ValueError("steps must be at least 1000")


@dataclass(frozen=True)
class OracleResult:
    energy: float
    node_count: int
    match_defect: float
    converged: bool


@dataclass(frozen=True, eq=False)
class NumerovSolution:
    r: np.ndarray
    outward: np.ndarray
    inward: np.ndarray
    match_index: int
    match_defect: float
    node_count: int
    mismatch: float

    def matched(self):
        """u(r) with the inward branch scaled onto the outward one at the match point."""
        i = self.match_index
        y = np.concatenate([self.outward[: i + 1], self.inward[i + 1 :] * (self.outward[i] / self.inward[i])])
        return y * np.sqrt(self.r)


@numba.njit(cache=True)
def _outward(f, y0, y1):
    n = f.size
    y = np.empty(n)
    y[0] = y0
    y[1] = y1
    for i in range(1, n - 1):
        y[i + 1] = ((12.0 - 10.0 * f[i]) * y[i] - f[i - 1] * y[i - 1]) / f[i + 1]
        if abs(y[i + 1]) > _RESCALE:
            for j in range(i + 2):
                y[j] /= _RESCALE
    return y


@numba.njit(cache=True)
def _inward(f, y_last, y_prev, stop):
    n = f.size
    y = np.zeros(n)
    y[n - 1] = y_last
    y[n - 2] = y_prev
    for i in range(n - 2, stop, -1):
        y[i - 1] = ((12.0 - 10.0 * f[i]) * y[i] - f[i + 1] * y[i + 1]) / f[i - 1]
        if abs(y[i - 1]) > _RESCALE:
            for j in range(i - 1, n):
                y[j] /= _RESCALE
    return y


def _sign_changes(y):
    s = np.sign(y)
    s = s[s != 0]
    return int(np.count_nonzero(s[1:] != s[:-1]))


def _auto_r_max(total_potential, E, mass, hbar, r_min):
    kappa = math.sqrt(2.0 * mass * -E) / hbar
    r_turn = outer_turning_point(total_potential, E, r_start=max(r_min, 1e-4))
    return r_turn + 40.0 / kappa


def _total_potential(potential, l, mass, hbar, add_centrifugal):
    if not add_centrifugal or l == 0:
        return potential
    barrier = l * (l + 1) * hbar**2 / (2.0 * mass)
    return lambda r: potential(r) + barrier / np.asarray(r) ** 2


def integrate_numerov(potential, l, E, cfg=ShootingConfig(), mass=1.0, hbar=1.0, add_centrifugal=False):
    """Outward and inward Numerov solutions at trial energy ``E < 0``.

    ``potential`` must be vectorized over r.  Set ``add_centrifugal`` when it does
    not already contain the l(l+1) hbar^2/(2 m r^2) barrier.
    """
    if not E < 0:
        raise ValueError("trial energy must be negative")
    total = _total_potential(potential, l, mass, hbar, add_centrifugal)
    r_max = cfg.r_max if cfg.r_max is not None else _auto_r_max(total, E, mass, hbar, cfg.r_min)
    x = np.linspace(math.log(cfg.r_min), math.log(r_max), cfg.steps + 1)
    h = x[1] - x[0]
    r = np.exp(x)
    v = np.asarray(total(r), dtype=float)
    if not np.all(np.isfinite(v)):
        raise NumericalError("potential is not finite on the integration grid")
    k2 = 2.0 * mass / hbar**2
    g = r * r * k2 * (v - E) + 0.25
    f = 1.0 - h * h * g / 12.0

    allowed = np.nonzero(v < E)[0]
    icl = int(allowed[-1]) if allowed.size else int(np.argmin(v - E))
    icl = min(max(icl, 2), r.size - 3)

    # u ~ r^(l+1) (1 + c r) with c from the Coulomb-like tail of r V(r) at the origin
    coulomb_part = r[0] * v[0] - l * (l + 1) / (k2 * r[0])
    c = k2 * coulomb_part / (2.0 * (l + 1))
    y0, y1 = (r[:2] ** (l + 0.5)) * (1.0 + c * r[:2])
    y_out = _outward(f, y0, y1)

    kappa = math.sqrt(-k2 * E)
    y_prev = 1.0
    y_last = math.exp(-kappa * (r[-1] - r[-2])) * math.sqrt(r[-2] / r[-1])
    y_in = _inward(f, y_last, y_prev, icl - 1)

    if not (np.all(np.isfinite(y_out)) and np.all(np.isfinite(y_in))):
        raise NumericalError(f"Numerov integration overflowed at E={E}")

    F_out_i, F_out_j = f[icl] * y_out[icl], f[icl + 1] * y_out[icl + 1]
    F_in_i, F_in_j = f[icl] * y_in[icl], f[icl + 1] * y_in[icl + 1]
    wronskian = F_out_j * F_in_i - F_out_i * F_in_j
    denom = F_out_i * F_in_i * h * r[icl]
    defect = wronskian / denom if denom != 0 else math.inf
    return NumerovSolution(
        r=r,
        outward=y_out,
        inward=y_in,
        match_index=icl,
        match_defect=defect,
        node_count=_sign_changes(y_out),
        mismatch=wronskian / abs(denom) if denom != 0 else math.copysign(math.inf, wronskian),
    )


def solve_eigenvalue(potential, n, l, E_guess, cfg=ShootingConfig(), mass=1.0, hbar=1.0, add_centrifugal=False):
    """Eigenvalue with ``n`` nodes, starting the bracket search from ``E_guess < 0``."""
    if not E_guess < 0:
        raise ValueError("E_guess must be negative")
    total = _total_potential(potential, l, mass, hbar, add_centrifugal)
    if cfg.r_max is None:
        cfg = ShootingConfig(
            r_min=cfg.r_min,
            r_max=_auto_r_max(total, 0.5 * E_guess, mass, hbar, cfg.r_min),
            steps=cfg.steps,
            energy_tol=cfg.energy_tol,
            max_bisections=cfg.max_bisections,
        )

    def shoot(E):
        return integrate_numerov(total, l, E, cfg, mass, hbar)

    floor = 1e-12 * abs(E_guess)
    e_lo, e_hi = 1.5 * E_guess, 0.5 * E_guess
    for _ in range(200):
        if shoot(e_lo).node_count <= n:
            break
        e_lo *= 2.0
    else:
        raise NumericalError("could not find an energy below the requested level")
    for _ in range(200):
        if shoot(e_hi).node_count >= n + 1:
            break
        e_hi *= 0.5
        if abs(e_hi) < floor:
            raise UnboundStateError(f"no bound state with {n} nodes for l={l}")
    else:
        raise UnboundStateError(f"no bound state with {n} nodes for l={l}")

    # narrow until exactly one eigenvalue (the n-node one) lies inside
    for _ in range(cfg.max_bisections):
        nodes_lo, nodes_hi = shoot(e_lo).node_count, shoot(e_hi).node_count
        if nodes_lo == n and nodes_hi == n + 1:
            break
        mid = 0.5 * (e_lo + e_hi)
        if shoot(mid).node_count <= n:
            e_lo = mid
        else:
            e_hi = mid
    else:
        raise NumericalError("node-count bracketing did not isolate the level")

    energy, info = optimize.brentq(
        lambda E: shoot(E).mismatch, e_lo, e_hi, xtol=cfg.energy_tol, rtol=4 * np.finfo(float).eps,
        maxiter=cfg.max_bisections, full_output=True, disp=False,
    )
    sol = shoot(energy)
    return OracleResult(
        energy=float(energy),
        node_count=_sign_changes(sol.matched()),
        match_defect=float(sol.match_defect),
        converged=bool(info.converged and abs(sol.match_defect) <= 1e-8),
    )


def _initial_guess(state, p):
    if is_bound(state, p):
        return energy_general(state, p)
    # past the closed-form threshold; start from a shallow hydrogenic level
    return -1e-3 * p.mass * (p.Z * p.charge_sq) ** 2 / (2.0 * p.hbar**2 * state.N**2)


def oracle_energy_effective(state, p, cfg=ShootingConfig()):
    """Numerical eigenvalue of the screened-barrier effective potential."""
    if not is_bound(state, p):
        raise UnboundStateError(f"state n={state.n}, l={state.l} is not bound at delta={p.delta}")
    return solve_eigenvalue(
        lambda r: potential_effective(p, state.l, r), state.n, state.l,
        energy_general(state, p), cfg, p.mass, p.hbar,
    )


def oracle_energy_hulthen(state, p, cfg=ShootingConfig()):
    """Numerical eigenvalue of the plain Hulthén potential with the true 1/r^2 barrier."""
    return solve_eigenvalue(
        lambda r: potential_hulthen(p, r), state.n, state.l,
        _initial_guess(state, p), cfg, p.mass, p.hbar, add_centrifugal=True,
    )
