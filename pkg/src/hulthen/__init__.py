"""Exact bound states of the Hulthén potential for any angular momentum.

Closed-form energies and radial wavefunctions from the Nikiforov-Uvarov
method, checked against an independent Numerov shooting solver.
"""
from .errors import NumericalError, ThresholdStateError, UnboundStateError
from .model import (
    CouplingPair,
    DimensionlessTriple,
    PhysicalParams,
    QuantumState,
    couplings,
    dimensionless,
    potential_coulomb_effective,
    potential_effective,
    potential_hulthen,
    potential_superpartner,
)
from .nu import (
    bound_state_count,
    critical_screening,
    energy_atomic,
    energy_from_epsilon,
    energy_general,
    epsilon_n,
    is_bound,
    spectrum,
)
from .oracle import ShootingConfig, oracle_energy_effective, oracle_energy_hulthen
from .wavefunctions import jacobi, normalize, sample

__version__ = "0.1.0"
