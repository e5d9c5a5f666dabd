import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from nlfourier.numerics import (
    GridSpec,
    Signal,
    adaptive_quad,
    interval_rule,
    lp_norm,
    modulus_smoothness,
    periodic_rule,
    quad_periodic,
    read_csv_signal,
    sup_norm,
    unwarp_signal,
    warp_signal,
    warped_rule,
)
from nlfourier.phase import PhaseParam, theta, theta_inv
from nlfourier.signals import builtin


class TestRules:
    def test_grid(self):
        g = GridSpec(16, 0.1)
        assert g.nodes[0] == pytest.approx(-math.pi + 0.1)
        assert g.refined().points == 32
        with pytest.raises(ValueError):
            GridSpec(8)

    @pytest.mark.parametrize("breaks", [(), (0.0,), (-1.0, 1.0), (-math.pi, 0.3, 2.0)])
    def test_weights_normalised(self, breaks):
        _, w = periodic_rule(GridSpec(512), breaks)
        assert w.sum() == pytest.approx(1.0, abs=1e-13)

    def test_trapezoid_exact_for_trig(self):
        val = quad_periodic(lambda t: np.cos(3 * t) ** 2, GridSpec(64))
        assert val == pytest.approx(0.5, abs=1e-15)

    def test_breakpoints_make_piecewise_exact(self):
        # |t| over a period: mean pi/2
        val = quad_periodic(lambda t: np.abs(np.mod(t + math.pi, 2 * math.pi) - math.pi),
                            GridSpec(256), breakpoints=(0.0, -math.pi))
        assert val == pytest.approx(math.pi / 2, abs=1e-14)

    def test_graded_panels_handle_cusp(self):
        # mean of |sin(t/2)|^(1/2) = Gamma(3/4)/(sqrt(pi) Gamma(5/4))
        exact = math.gamma(0.75) / (math.sqrt(math.pi) * math.gamma(1.25))
        val = quad_periodic(lambda t: np.abs(np.sin(t / 2)) ** 0.5, GridSpec(1024), (0.0,))
        assert val == pytest.approx(exact, abs=1e-12)

    def test_interval_rule(self):
        x, w = interval_rule(0.0, 2.0, 64, breakpoints=(1.0,))
        assert np.dot(w, np.abs(x - 1.0)) == pytest.approx(1.0, abs=1e-14)

    def test_warped_rule_integrates_warped_polynomials(self):
        a = PhaseParam(0.9, 0.4)
        t, w = warped_rule(GridSpec(64), a)
        # (1/2pi) int cos(theta)^2 p_a dt = 1/2 ; without weight: use 1/p_a
        from nlfourier.phase import poisson_weight
        val = np.dot(w, np.cos(3 * theta(a, t)) ** 2 * poisson_weight(a, t))
        assert val == pytest.approx(0.5, abs=1e-13)

    def test_nonfinite_integrand_reported(self):
        with pytest.raises(FloatingPointError, match="node"):
            quad_periodic(lambda t: np.where(t > 0, np.nan, 1.0), GridSpec(32))

    def test_adaptive_quad(self):
        a = PhaseParam(0.95)
        from nlfourier.phase import poisson_weight
        val, points = adaptive_quad(lambda t: poisson_weight(a, t), start=64, tol=1e-12)
        assert val == pytest.approx(1.0, abs=1e-12)
        assert points > 64


class TestNorms:
    def test_lp_of_constant_and_cosine(self):
        one = Signal(lambda t: np.ones_like(t))
        for p in (1, 2, 3.5, math.inf):
            assert lp_norm(one, p) == pytest.approx(1.0)
        c = Signal(np.cos)
        assert lp_norm(c, 2) == pytest.approx(math.sqrt(0.5), abs=1e-14)
        # |cos| has undeclared kinks, so the trapezoid rule is only algebraically accurate
        assert lp_norm(c, 1) == pytest.approx(2 / math.pi, rel=1e-6)

    @given(st.floats(1.0, 6.0), st.floats(1.0, 6.0))
    def test_lp_monotone_in_p(self, p, q):
        f = builtin("exp-sin2")
        lo, hi = sorted((p, q))
        assert lp_norm(f, lo) <= lp_norm(f, hi) * (1 + 1e-12)

    def test_sup_norm_polishes_between_nodes(self):
        f = Signal(lambda t: np.cos(t - 0.0123))
        value, tol = sup_norm(f, GridSpec(16))
        assert value == pytest.approx(1.0, abs=1e-12)
        assert tol >= 0

    def test_rejects_bad_p(self):
        with pytest.raises(ValueError):
            lp_norm(Signal(np.cos), 0.5)


class TestModulus:
    def test_lipschitz_sine(self):
        f = Signal(np.sin)
        # sup_x |sin(x+h) - sin(x)| = 2 sin(h/2)
        assert modulus_smoothness(f, 0.1) == pytest.approx(2 * math.sin(0.05), abs=1e-10)

    def test_jump_gives_full_jump(self):
        assert modulus_smoothness(builtin("square"), 0.01) == pytest.approx(2.0)

    def test_finite_p(self):
        f = Signal(np.sin)
        # ||sin(.+h) - sin||_2 = sqrt(2) sin(h/2) * sqrt(2) / sqrt(2)
        expected = 2 * math.sin(0.05) * math.sqrt(0.5)
        assert modulus_smoothness(f, 0.1, p=2) == pytest.approx(expected, rel=1e-9)

    def test_monotone_in_t(self):
        f = builtin("holder:alpha=0.5")
        vals = [modulus_smoothness(f, t) for t in (0.01, 0.1, 1.0)]
        assert vals == sorted(vals)


class TestWarp:
    def test_warp_unwarp(self):
        a = PhaseParam(0.6, 1.1)
        f = builtin("square")
        F = warp_signal(f, a)
        t = np.linspace(-3, 3, 17) + 0.01
        np.testing.assert_allclose(unwarp_signal(F, a)(t), f(t), atol=1e-14)
        np.testing.assert_allclose(sorted(F.jumps), sorted(theta(a, np.array(f.jumps))))

    def test_warp_derivative(self):
        a = PhaseParam(0.5)
        f = builtin("analytic-exp-cos")
        F = warp_signal(f, a)
        s = np.linspace(-3, 3, 13)
        h = 1e-6
        np.testing.assert_allclose(F.derivative(s), (F(s + h) - F(s - h)) / (2 * h), rtol=1e-6,
                                   atol=1e-9)


class TestSamples:
    def test_from_samples_interpolates(self):
        g = GridSpec(64, 0.05)
        f = Signal.from_samples(np.cos(3 * g.nodes) + np.sin(g.nodes), offset=0.05)
        t = np.linspace(-3, 3, 31)
        np.testing.assert_allclose(f(t), np.cos(3 * t) + np.sin(t), atol=1e-12)
        np.testing.assert_allclose(f.derivative(t), -3 * np.sin(3 * t) + np.cos(t), atol=1e-11)

    def test_rejects_bad_counts(self):
        with pytest.raises(ValueError):
            Signal.from_samples(np.ones(24))

    def test_read_csv_uniform(self, tmp_path):
        g = GridSpec(32)
        path = tmp_path / "s.csv"
        rows = "\n".join(f"{float(t)!r},{math.cos(2 * t)!r}" for t in g.nodes)
        path.write_text("t,value\n" + rows + "\n")
        f = read_csv_signal(path)
        np.testing.assert_allclose(f(np.array([0.3, 1.7])), np.cos([0.6, 3.4]), atol=1e-12)

    def test_read_csv_resamples(self, tmp_path):
        t = np.sort(np.random.default_rng(0).uniform(-math.pi, math.pi, 50))
        path = tmp_path / "s.csv"
        path.write_text("\n".join(f"{float(x)!r},{math.sin(x)!r},0.0" for x in t))
        f = read_csv_signal(path, points=256)
        assert f.is_complex
        x = np.linspace(-2, 2, 5)
        # linear interpolation between ~0.13-spaced samples
        np.testing.assert_allclose(f(x).real, np.sin(x), atol=2e-2)

    def test_read_csv_errors(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("t,v\n1,2\nfoo,bar\n")
        with pytest.raises(ValueError):
            read_csv_signal(path)
        path.write_text("")
        with pytest.raises(ValueError):
            read_csv_signal(path)
