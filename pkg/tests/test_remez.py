import math

import numpy as np
import pytest

from nlfourier.remez import trig_basis, trig_eval, trig_remez


def test_basis_shape():
    B = trig_basis(3, np.linspace(0, 1, 5))
    assert B.shape == (5, 7)
    np.testing.assert_allclose(B[:, 0], 1.0)


def test_next_harmonic_has_unit_error():
    res = trig_remez(lambda u: np.cos(5 * u), 4)
    assert res.certified
    assert res.upper == pytest.approx(1.0, rel=1e-10)
    np.testing.assert_allclose(res.coeffs, 0.0, atol=1e-9)


def test_polynomial_shift_is_recovered():
    c = np.array([0.3, 1.0, -0.5, 0.2, 0.7, 0.1, 0.0, -0.4, 0.05])
    res = trig_remez(lambda u: 2 * np.sin(5 * u) + trig_eval(c, u), 4)
    assert res.upper == pytest.approx(2.0, rel=1e-9)
    np.testing.assert_allclose(res.coeffs, c, atol=1e-8)


def test_exact_polynomial_short_circuits():
    res = trig_remez(lambda u: 1 + np.cos(2 * u), 3)
    assert res.certified and res.upper < 1e-12 and res.iterations == 0


@pytest.mark.parametrize("n", [1, 4, 16, 64])
def test_abs_sin_bounds(n):
    F = lambda u: np.abs(np.sin(u))  # noqa: E731
    res = trig_remez(F, n, breakpoints=(0.0, -math.pi))
    assert res.certified
    assert res.lower <= res.upper * (1 + 1e-12)
    # the best error never exceeds the error of the Fourier partial sum
    u = np.linspace(-math.pi, math.pi, 20001)
    k = np.arange(2, n + 1, 2)
    fourier = 2 / math.pi - (4 / math.pi) * np.cos(np.outer(u, k)) @ (1 / (k * k - 1.0)) if k.size else 2 / math.pi + 0 * u
    assert res.upper <= np.max(np.abs(F(u) - fourier)) + 1e-12


def test_jump_error_is_half_jump():
    # E_n = 1 here but the minimiser is not unique; only the bracket is sharp
    res = trig_remez(lambda u: np.where(u > 0, 1.0, np.where(u < 0, -1.0, 0.0)), 6,
                     jumps=(0.0, -math.pi))
    assert res.lower <= 1.0 + 1e-12
    assert 1.0 - 1e-9 <= res.upper <= 1.01


def test_alternation_on_reference():
    res = trig_remez(lambda u: np.exp(np.cos(u)), 5)
    assert res.certified and res.reference.size == 12
    e = np.exp(np.cos(res.reference)) - trig_eval(res.coeffs, res.reference)
    assert np.all(np.sign(e) * np.roll(np.sign(e), 1) < 0)
    np.testing.assert_allclose(np.abs(e), res.upper, rtol=1e-6)
