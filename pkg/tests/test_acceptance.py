"""Acceptance checks.

Each test records one PASS/FAIL line through ``record_criterion`` (printed in
the terminal summary) and then asserts.  Thresholds are used exactly as
stated; nothing is loosened to make a check pass.
"""

import math
import time

import numpy as np
import pytest

from nlfourier.approx import (
    approximation_error,
    classical_gibbs_overshoot,
    verify_corpus,
)
from nlfourier.bernstein import bernstein_sweep
from nlfourier.kernels import lebesgue_constant
from nlfourier.numerics import GridSpec, Signal, adaptive_quad
from nlfourier.phase import PhaseParam, poisson_weight, theta
from nlfourier.signals import CORPUS, builtin
from nlfourier.transform import (
    CESARO_METHODS,
    PARTIAL_SUM_METHODS,
    CoeffVector,
    analyze,
    cesaro_mean,
    frame_ratio,
    partial_sum,
)

MODULI = (0.0, 0.3, 0.7, 0.95)
DEGREES = (2, 4, 8, 16, 32, 64, 128)
OUTPUT_GRID = -math.pi + 2 * math.pi * np.arange(512) / 512


def phase(r):
    # a nonzero angle exercises the rotation as well as the modulus
    return PhaseParam(r, 0.7 if r else 0.0)


@pytest.fixture(scope="module")
def corpus_box():
    start = time.perf_counter()
    reports = verify_corpus(None, tuple(phase(r) for r in MODULI), DEGREES, (1.0, 2.0, 4.0))
    return reports, time.perf_counter() - start


def _summary(reports, ids):
    sel = [r for r in reports if r.theorem_id in ids]
    bad = [r for r in sel if not r.passed]
    return sel, bad


def _describe(bad, limit=3):
    return "; ".join(f"{r.theorem_id} {r.context['signal']} |a|={r.context['a'][0]} "
                     f"n={r.context['n']} p={r.context['p']}" for r in bad[:limit])


def test_weighted_orthonormality(record_criterion):
    n = 64
    j = np.arange(-2 * n, 2 * n + 1)
    start = time.perf_counter()
    worst = 0.0
    for r in MODULI:
        a = phase(r)

        def integrand(t, a=a):
            return np.exp(1j * np.multiply.outer(theta(a, t), j)) * poisson_weight(a, t)[:, None]

        # Gram entry (k, m) depends on k - m only
        moments, _ = adaptive_quad(integrand, start=256, tol=1e-13)
        worst = max(worst, float(np.max(np.abs(moments - (j == 0)))))
    elapsed = time.perf_counter() - start
    ok = worst < 1e-10 and elapsed < 10.0
    record_criterion(1, ok, f"weighted orthonormality max dev {worst:.2e} (< 1e-10), "
                            f"{elapsed:.1f} s (< 10 s)")
    assert ok


REPRESENTATION_SIGNALS = ("square", "sawtooth", "abs-sin", "holder:alpha=0.5", "cos-warped:k=3",
                          "analytic-exp-cos", "exp-sin2", "random-trig:deg=5")


def test_representation_equivalence(record_criterion):
    start = time.perf_counter()
    worst = 0.0
    where = ""
    for name in REPRESENTATION_SIGNALS:
        for a in (phase(0.0), PhaseParam(0.7, 0.5)):
            f = builtin(name, a)
            for n in (8, 32):
                for ops, methods in ((partial_sum, PARTIAL_SUM_METHODS), (cesaro_mean, CESARO_METHODS)):
                    vals = []
                    for m in methods:
                        grid = None if m in ("coeff", "average") else GridSpec(4096)
                        vals.append(np.asarray(ops(f, a, n, m, grid)(OUTPUT_GRID)))
                    for i in range(len(vals)):
                        for k in range(i + 1, len(vals)):
                            d = float(np.max(np.abs(vals[i] - vals[k])))
                            if d > worst:
                                worst, where = d, f"{name} |a|={a.modulus} n={n}"
    elapsed = time.perf_counter() - start
    ok = worst < 1e-8 and elapsed < 60.0
    record_criterion(2, ok, f"representation equivalence max sup diff {worst:.2e} (< 1e-8) at "
                            f"{where}, {elapsed:.1f} s (< 60 s)")
    assert ok


def test_riesz_frame_bounds(record_criterion):
    rng = np.random.default_rng(20240601)
    violations, worst = 0, -math.inf
    for r in (0.3, 0.7, 0.95):
        a = phase(r)
        for _ in range(100):
            n = int(rng.integers(0, 33))
            c = rng.standard_normal(2 * n + 1) + 1j * rng.standard_normal(2 * n + 1)
            lo, ratio, hi = frame_ratio(CoeffVector(a, c))
            excess = max((lo - ratio) / lo, (ratio - hi) / hi)
            worst = max(worst, excess)
            violations += excess > 1e-9
    ok = violations == 0
    record_criterion(3, ok, f"Riesz frame bounds: {violations} violations in 300 vectors "
                            f"(worst relative excess {worst:.2e}, allowed 1e-9)")
    assert ok


def test_lebesgue_operator_bounds(corpus_box, record_criterion):
    sel, bad = _summary(corpus_box[0], {"lebesgue-sup", "lebesgue-lp"})
    ok = not bad and len(sel) == len(CORPUS) * len(MODULI) * len(DEGREES) * 4
    record_criterion(4, ok, f"Lebesgue operator bounds: {len(sel) - len(bad)}/{len(sel)} pass "
                            f"{_describe(bad)}")
    assert ok


def test_fejer_contraction(corpus_box, record_criterion):
    sel, bad = _summary(corpus_box[0], {"fejer-sup", "fejer-lp"})
    ok = not bad and len(sel) == len(CORPUS) * len(MODULI) * len(DEGREES) * 4
    record_criterion(5, ok, f"Fejer contraction (sup, and L^p with distortion^(2/p)): "
                            f"{len(sel) - len(bad)}/{len(sel)} pass {_describe(bad)}")
    assert ok


def _cesaro_errors(f, a, p):
    cv = analyze(f, a, 128)
    return (approximation_error(f, a, 8, "cesaro", p, coeffs=cv),
            approximation_error(f, a, 128, "cesaro", p, coeffs=cv))


def test_cesaro_convergence(record_criterion):
    failures = []
    checks = 0
    for r in MODULI:
        a = phase(r)
        for name in CORPUS:
            f = builtin(name, a)
            if f.continuous:
                e8, e128 = _cesaro_errors(f, a, math.inf)
                checks += 1
                if not e128 < 0.25 * e8:
                    failures.append(f"{name} |a|={r} sup ratio {e128 / e8:.3f}")
            for p in (1.0, 2.0):
                e8, e128 = _cesaro_errors(f, a, p)
                checks += 1
                if not e128 * 4.0 <= e8:
                    failures.append(f"{name} |a|={r} L{p:g} ratio {e128 / e8:.3f}")
    ok = not failures
    record_criterion(6, ok, f"Cesaro convergence n=8 -> 128 (sup < 25%, L1/L2 >= 4x): "
                            f"{checks - len(failures)}/{checks} pass; "
                            + "; ".join(failures[:4]) + (" ..." if len(failures) > 4 else ""))
    assert ok, failures


def test_jackson_and_modulus_sandwich(corpus_box, record_criterion):
    sel, bad = _summary(corpus_box[0], {"jackson", "modulus-sandwich"})
    tol_declared = all(r.tolerance >= 0 and "tolerance" in r.to_dict() for r in sel)
    ok = not bad and tol_declared and any(r.theorem_id == "jackson" for r in sel)
    record_criterion(7, ok, f"Jackson and modulus sandwich: {len(sel) - len(bad)}/{len(sel)} pass "
                            f"{_describe(bad)}")
    assert ok


def test_bernstein_sweep(record_criterion):
    start = time.perf_counter()
    reports = bernstein_sweep((1, 2, 4, 8, 16, 32, 64), MODULI, (1.0, 2.0, 4.0), trials=200, seed=0)
    elapsed = time.perf_counter() - start
    violations = sum(not r.passed for r in reports)
    classical = max(r.max_ratio for r in reports if r.a.modulus == 0)
    ok = violations == 0 and classical <= 1 + 1e-6 and elapsed < 300 and len(reports) == 84
    record_criterion(8, ok, f"Bernstein sweep: {violations} violations in {len(reports)} cells, "
                            f"a=0 max ratio {classical:.6f} (<= 1+1e-6), {elapsed:.1f} s (< 300 s)")
    assert ok


def _fft_oracle(f, n, m=256):
    t = -math.pi + 2 * math.pi * np.arange(m) / m
    raw = np.fft.fft(f(t)) / m
    k = np.arange(-n, n + 1)
    # samples start at -pi, so c_k = (-1)^k fft_k / m
    return raw[np.mod(k, m)] * np.where(k % 2, -1.0, 1.0)


def _oracle_eval(c, x, weights=None):
    n = (len(c) - 1) // 2
    k = np.arange(-n, n + 1)
    w = np.ones(2 * n + 1) if weights is None else weights
    return np.exp(1j * np.outer(x, k)) @ (c * w)


def test_classical_reduction(record_criterion):
    rng = np.random.default_rng(7)
    d = rng.standard_normal(41) + 1j * rng.standard_normal(41)
    ks = np.arange(-20, 21)
    inputs = [builtin("cos-warped:k=3"), builtin("random-trig:deg=5"),
              Signal(lambda t: np.exp(1j * np.multiply.outer(t, ks)) @ d,
                     name="complex-trig-20", is_complex=True)]
    worst = 0.0
    for f in inputs:
        for n in (4, 8, 16, 32):
            c = _fft_oracle(f, n)
            worst = max(worst, float(np.max(np.abs(analyze(f, 0.0, n).coeffs - c))))
            s_ref = _oracle_eval(c, OUTPUT_GRID)
            sig_ref = _oracle_eval(c, OUTPUT_GRID, 1 - np.abs(np.arange(-n, n + 1)) / (n + 1))
            if not f.is_complex:
                s_ref, sig_ref = s_ref.real, sig_ref.real
            for m in PARTIAL_SUM_METHODS:
                worst = max(worst, float(np.max(np.abs(partial_sum(f, 0.0, n, m)(OUTPUT_GRID) - s_ref))))
            for m in CESARO_METHODS:
                worst = max(worst, float(np.max(np.abs(cesaro_mean(f, 0.0, n, m)(OUTPUT_GRID) - sig_ref))))
    lam1 = lebesgue_constant(1)
    gibbs = classical_gibbs_overshoot(64).relative_to_jump
    ok_oracle = worst < 1e-10
    ok_lam = abs(lam1 - 1.435991) < 1e-5
    ok_gibbs = abs(gibbs - 0.0895) <= 0.01 * 0.0895
    ok = ok_oracle and ok_lam and ok_gibbs
    record_criterion(9, ok, f"classical reduction: oracle diff {worst:.2e} (< 1e-10), "
                            f"Lambda_1 {lam1:.7f} (1.435991 +- 1e-5), "
                            f"Gibbs n=64 {gibbs:.5f} (0.0895 +- 1%)")
    assert ok


def _smooth_points(f, count=5, candidates=64):
    """The ``count`` candidates farthest from every breakpoint of ``f``."""
    x = -math.pi + 2 * math.pi * (np.arange(candidates) + 0.5) / candidates
    if not f.breakpoints:
        return x[:: candidates // count][:count]
    b = np.asarray(f.breakpoints, dtype=float)
    d = np.abs(np.remainder(x[:, None] - b[None, :] + math.pi, 2 * math.pi) - math.pi).min(axis=1)
    return np.sort(x[np.argsort(-d, kind="stable")[:count]])


def test_pointwise_convergence(record_criterion):
    failures = []
    checks = 0
    worst = 0.0
    for r in MODULI:
        a = phase(r)
        for name in CORPUS:
            f = builtin(name, a)
            x = _smooth_points(f)
            err = float(np.max(np.abs(partial_sum(f, a, 256)(x) - f(x))))
            checks += 1
            worst = max(worst, err)
            if not err < 1e-3:
                failures.append(f"{name} |a|={r} err {err:.1e}")
    jump = []
    for r in MODULI:
        a = phase(r)
        jump.append(abs(complex(partial_sum(builtin("square"), a, 1024)(0.0))))
    classical = abs(float(_oracle_eval(_fft_oracle(builtin("square"), 1024, 1 << 14),
                                       np.array([0.0]))[0].real))
    ok_jump = max(jump) < 1e-3 and abs(jump[0] - classical) < 1e-3
    ok = not failures and ok_jump
    record_criterion(10, ok, f"pointwise: smooth points n=256 {checks - len(failures)}/{checks} "
                             f"< 1e-3 (worst {worst:.1e}); jump midpoint n=1024 max dev "
                             f"{max(jump):.1e}; " + "; ".join(failures[:4])
                             + (" ..." if len(failures) > 4 else ""))
    assert ok, failures
