import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate, special

from hulthen.errors import UnboundStateError
from hulthen.model import PhysicalParams, QuantumState, dimensionless
from hulthen.nu import energy_general
from hulthen.wavefunctions import (
    WaveShape,
    count_nodes,
    default_r_max,
    evaluate,
    inner_product,
    jacobi,
    norm_integral,
    normalize,
    phi_factor,
    radial_unnormalized,
    sample,
    wave_shape,
    weight_rho,
)

from oracles import (
    companion_root_count,
    hypergeometric_residual,
    rodrigues_jacobi,
    rodrigues_unit_interval,
)

AU = PhysicalParams.atomic


class TestJacobi:
    def test_degree_zero(self):
        assert jacobi(0, 3.3, -0.5, 0.7) == 1.0

    def test_legendre(self):
        assert jacobi(1, 0.0, 0.0, 0.5) == 0.5
        x = np.linspace(-1, 1, 9)
        np.testing.assert_allclose(jacobi(4, 0.0, 0.0, x), special.eval_legendre(4, x), atol=1e-14)

    def test_rodrigues_example(self):
        assert jacobi(3, 1.7, 2.3, 0.4) == pytest.approx(rodrigues_jacobi(3, 1.7, 2.3, 0.4), rel=1e-10)

    @settings(max_examples=25, deadline=None)
    @given(
        n=st.integers(0, 6),
        a=st.floats(-0.9, 5.0),
        b=st.floats(-0.9, 5.0),
        x=st.floats(-0.95, 0.95),
    )
    def test_matches_rodrigues(self, n, a, b, x):
        a, b, x = round(a, 3), round(b, 3), round(x, 3)
        expected = rodrigues_jacobi(n, a, b, x)
        got = jacobi(n, a, b, x)
        assert abs(got - expected) <= 1e-10 * max(abs(expected), 1e-3)

    @pytest.mark.parametrize("n, a, b", [(5, 39.0, 1.0), (3, 0.5, 5.0), (6, 2.0, 3.0)])
    def test_matches_scipy(self, n, a, b):
        x = np.linspace(-1, 1, 41)
        np.testing.assert_allclose(jacobi(n, a, b, x), special.eval_jacobi(n, a, b, x), rtol=1e-12, atol=1e-12)

    def test_unit_interval_form(self):
        # y_n(s) from the Rodrigues form on (0, 1) equals P_n^(2a, eta-1)(1 - 2s) with C_n = 1/n!
        for n, two_a, eta, s in [(2, 3.0, 2.0, 0.3), (3, 1.5, 4.0, 0.65)]:
            expected = rodrigues_unit_interval(n, two_a, eta, s)
            assert jacobi(n, two_a, eta - 1.0, 1 - 2 * s) == pytest.approx(expected, rel=1e-10)

    @pytest.mark.parametrize("a, b", [(-1.0, 0.0), (0.0, -1.5)])
    def test_domain(self, a, b):
        with pytest.raises(ValueError):
            jacobi(2, a, b, 0.1)

    def test_negative_degree(self):
        with pytest.raises(ValueError):
            jacobi(-1, 0.0, 0.0, 0.1)


class TestFactors:
    def test_weight_value(self):
        shape = WaveShape(sqrt_epsilon=0.4995, eta=2.0, mu=1.0, n=0)
        # 0.5^1.999, 50-digit mpmath evaluation
        assert weight_rho(shape, 0.5) == pytest.approx(0.2501733468656452, rel=1e-14)

    def test_weight_endpoints(self):
        shape = WaveShape(sqrt_epsilon=0.4995, eta=2.0, mu=1.0, n=0)
        assert weight_rho(shape, 1 - 1e-12) < 1e-11
        assert weight_rho(shape, 1e-12) < 1e-11

    def test_phi_values(self):
        assert phi_factor(WaveShape(1.0, 2.0, 1.0, 0), 0.5) == 0.25
        # mu = 2 for l = 1: 0.25 * 0.5^0.3, 50-digit mpmath evaluation
        assert phi_factor(WaveShape(0.3, 4.0, 2.0, 0), 0.5) == pytest.approx(0.2030630990890589, rel=1e-14)
        assert phi_factor(WaveShape(0.3, 4.0, 2.0, 0), 1e-300) < 1e-80

    @pytest.mark.parametrize("s", [0.0, 1.0, -0.2, 1.5])
    def test_domain(self, s):
        shape = WaveShape(1.0, 2.0, 1.0, 0)
        with pytest.raises(ValueError):
            weight_rho(shape, s)
        with pytest.raises(ValueError):
            phi_factor(shape, s)

    @pytest.mark.parametrize("l", [0, 1, 2, 5])
    def test_shape_exponents(self, l):
        shape = wave_shape(QuantumState(0, l), AU(0.01))
        assert shape.eta == 2 * l + 2
        assert shape.mu == l + 1

    @pytest.mark.parametrize("n, l, delta", [(0, 0, 0.05), (2, 1, 0.02), (1, 2, 0.01)])
    def test_weight_condition(self, n, l, delta):
        # d/ds[sigma rho] = tau rho with sigma = s(1-s), tau = 1 + 2a - (2 + 2a + w) s
        shape = wave_shape(QuantumState(n, l), AU(delta))
        a, w = shape.sqrt_epsilon, shape.eta - 1.0
        s = np.linspace(0.05, 0.95, 91)
        h = 1e-6
        sr = lambda x: x * (1 - x) * weight_rho(shape, x)
        lhs = (sr(s + h) - sr(s - h)) / (2 * h)
        rhs = (1 + 2 * a - (2 + 2 * a + w) * s) * weight_rho(shape, s)
        scale = np.abs(rhs).max()
        assert np.max(np.abs(lhs - rhs)) <= 1e-8 * scale


class TestRadial:
    def test_ground_state_value(self):
        # sqrt(eps) = (1 - 0.025)/0.05 = 19.5 for n = 0, l = 0, delta = 0.05
        value = radial_unnormalized(QuantumState(0, 0), AU(0.05), 0.5)
        assert value == pytest.approx(0.5**19.5 * 0.5, rel=1e-12)
        assert value == pytest.approx(6.743495761743045e-07, rel=1e-12)

    def test_boundaries_vanish(self):
        for n, l in [(0, 0), (2, 1)]:
            f = radial_unnormalized(QuantumState(n, l), AU(0.05), np.array([1e-12, 1 - 1e-12]))
            assert np.all(np.abs(f) < 1e-10)

    def test_sign_changes_match_companion_roots(self):
        state, p = QuantumState(2, 0), AU(0.05)
        shape = wave_shape(state, p)
        s = np.linspace(1e-6, 1 - 1e-6, 200001)
        f = radial_unnormalized(state, p, s)
        changes = int(np.count_nonzero(np.diff(np.sign(f[f != 0])) != 0))
        assert changes == 2
        assert companion_root_count(2, 2 * shape.sqrt_epsilon, shape.eta - 1) == 2

    def test_unbound(self):
        with pytest.raises(UnboundStateError):
            radial_unnormalized(QuantumState(2, 0), AU(0.5), 0.5)
        with pytest.raises(UnboundStateError):
            sample(QuantumState(3, 0), AU(0.2))
        with pytest.raises(UnboundStateError):
            normalize(QuantumState(0, 0), AU(2.0))

    @pytest.mark.parametrize("n", [0, 1, 2])
    @pytest.mark.parametrize("l", [0, 1])
    def test_hypergeometric_residual(self, n, l):
        state, p = QuantumState(n, l), AU(0.05)
        t = dimensionless(p, l, energy_general(state, p))
        D = normalize(state, p)
        R = lambda s: D * radial_unnormalized(state, p, s)
        s = np.linspace(0.02, 0.98, 97)
        residual, scale = hypergeometric_residual(R, s, t.epsilon, t.beta, t.gamma)
        assert np.all(np.abs(residual) <= 1e-6 * scale)


class TestNormalization:
    @pytest.mark.parametrize("n, l, delta", [(0, 0, 0.05), (2, 1, 0.01), (4, 0, 0.01), (1, 2, 0.05), (0, 0, 1.5)])
    def test_against_adaptive_quadrature(self, n, l, delta):
        state, p = QuantumState(n, l), AU(delta)
        D = normalize(state, p)
        r_max = default_r_max(state, p)
        total, _ = integrate.quad(lambda r: evaluate(state, p, r, D) ** 2, 0.0, r_max, limit=500, epsrel=1e-12)
        assert total == pytest.approx(1.0, abs=1e-8)
        assert D > 0

    def test_gauss_jacobi_exact_in_s(self):
        # the s-space integrand with the ds/(delta s) measure, by adaptive quadrature
        state, p = QuantumState(1, 1), AU(0.05)
        shape = wave_shape(state, p)
        f = lambda s: radial_unnormalized(state, p, s) ** 2 / (p.delta * s)
        direct, _ = integrate.quad(f, 0.0, 1.0, points=[0.5], limit=500, epsabs=0, epsrel=1e-13)
        assert norm_integral(shape, p.delta) == pytest.approx(direct, rel=1e-10)

    def test_hydrogen_limit(self):
        state, p = QuantumState(0, 0), AU(1e-3)
        D = normalize(state, p)
        diff, _ = integrate.quad(
            lambda r: (evaluate(state, p, r, D) - 2 * r * math.exp(-r)) ** 2, 0.0, 80.0, limit=200
        )
        assert diff <= 1e-3


class TestSample:
    def test_ground_state_nodeless(self):
        wf = sample(QuantumState(0, 0), AU(0.05), r_max=200.0, count=4001)
        assert wf.node_count == 0
        assert wf.r_grid[0] == 0.0 and wf.r_grid[-1] == 200.0

    def test_excited_node_count(self):
        assert sample(QuantumState(2, 0), AU(0.01), r_max=600.0, count=8001).node_count == 2

    @pytest.mark.parametrize("n", range(5))
    @pytest.mark.parametrize("l", range(3))
    def test_node_theorem(self, n, l):
        wf = sample(QuantumState(n, l), AU(0.01), count=8001)
        assert wf.node_count == n
        peak = np.abs(wf.values).max()
        assert abs(wf.values[0]) < 1e-6 * peak and abs(wf.values[-1]) < 1e-6 * peak

    def test_small_r_power_law(self):
        state, p = QuantumState(0, 1), AU(0.05)
        r = np.array([1e-3, 1e-2])
        v = evaluate(state, p, r)
        slope = math.log(v[1] / v[0]) / math.log(r[1] / r[0])
        assert slope == pytest.approx(2.0, abs=0.05)

    def test_immutable(self):
        wf = sample(QuantumState(0, 0), AU(0.05), count=101)
        with pytest.raises(ValueError):
            wf.values[3] = 1.0

    def test_count_too_small(self):
        with pytest.raises(ValueError):
            sample(QuantumState(0, 0), AU(0.05), count=1)

    def test_bad_r_max(self):
        with pytest.raises(ValueError):
            sample(QuantumState(0, 0), AU(0.05), r_max=-1.0)


class TestInnerProduct:
    def _grid(self, delta, l, count=20001):
        states = [QuantumState(n, l) for n in range(3)]
        r_max = max(default_r_max(s, AU(delta)) for s in states)
        return [sample(s, AU(delta), r_max=r_max, count=count) for s in states]

    def test_self_overlap(self):
        for wf in self._grid(0.01, 0):
            assert inner_product(wf, wf) == pytest.approx(1.0, abs=1e-6)

    @pytest.mark.parametrize("delta, l", [(0.01, 0), (0.05, 0), (0.01, 1), (0.02, 2)])
    def test_orthogonality(self, delta, l):
        w = self._grid(delta, l)
        for i in range(3):
            for j in range(i + 1, 3):
                assert abs(inner_product(w[i], w[j])) <= 1e-6

    def test_grid_mismatch(self):
        a = sample(QuantumState(0, 0), AU(0.05), r_max=100.0, count=101)
        b = sample(QuantumState(1, 0), AU(0.05), r_max=100.0, count=201)
        with pytest.raises(ValueError):
            inner_product(a, b)


@pytest.mark.parametrize(
    "values, expected",
    [([1, 2, -1, -3, 4], 2), ([0.0, 1.0, 0.0, 1.0], 0), ([1, 0, -1], 1), ([-1, -2, -3], 0)],
)
def test_count_nodes(values, expected):
    assert count_nodes(values, trim=0.0) == expected
