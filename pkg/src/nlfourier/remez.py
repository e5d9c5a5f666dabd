"""Best uniform approximation by classical trigonometric polynomials.

:func:`trig_remez` runs the multiple-point Remez exchange on a real
``2 pi``-periodic function.  A reference of ``2n + 2`` alternation points is
levelled, the error is scanned on a dense grid (which includes the known
breakpoints), the extremum of every sign run is refined locally and the
runs are thinned back to ``2n + 2`` points.  The levelled error is a lower
bound of ``E_n`` (de la Vallee Poussin) and the scanned maximum an upper
bound estimate; the result is certified once the two agree to ``tol``
relative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = ["RemezResult", "trig_basis", "trig_remez", "trig_eval"]

TWO_PI = 2.0 * math.pi
# one-sided offset used to sample both limits at a jump
_JUMP_OFFSET = 1e-12
# absolute gap (relative to max|F|) below which rounding dominates
_ABS_FLOOR = 1e-13


@dataclass(frozen=True, eq=False)
class RemezResult:
    """Outcome of :func:`trig_remez`.

    ``coeffs`` holds ``[a_0, a_1..a_n, b_1..b_n]`` of
    ``a_0 + sum a_k cos(ku) + b_k sin(ku)``.
    """

    coeffs: np.ndarray
    lower: float
    upper: float
    reference: np.ndarray
    iterations: int
    certified: bool

    @property
    def error(self) -> float:
        return self.upper


def trig_basis(n: int, u) -> np.ndarray:
    """Real basis matrix ``[1, cos(ku), sin(ku)]`` of shape ``(len(u), 2n + 1)``."""
    u = np.asarray(u, dtype=float).ravel()
    ku = np.multiply.outer(u, np.arange(1, n + 1))
    return np.hstack([np.ones((u.size, 1)), np.cos(ku), np.sin(ku)])


def trig_eval(coeffs: np.ndarray, u) -> np.ndarray:
    n = (len(coeffs) - 1) // 2
    u = np.asarray(u, dtype=float)
    return (trig_basis(n, u) @ coeffs).reshape(u.shape)


def _wrap(u):
    return np.mod(np.asarray(u, dtype=float) + math.pi, TWO_PI) - math.pi


def _dense_grid(points: int, breakpoints, jumps) -> np.ndarray:
    u = -math.pi + TWO_PI * np.arange(points) / points
    extra = [float(b) for b in breakpoints]
    extra += [float(b) + s * _JUMP_OFFSET for b in jumps for s in (-1.0, 1.0)]
    if extra:
        u = np.concatenate([u, _wrap(extra)])
    return np.unique(u)


def _runs(err: np.ndarray) -> list[tuple[int, int]]:
    """Cyclic maximal runs of constant sign as (argmax index, sign)."""
    sign = np.sign(err)
    # zeros join the preceding run
    nz = np.flatnonzero(sign)
    if nz.size == 0:
        return []
    first = nz[0]
    order = np.roll(np.arange(err.size), -first)
    s = sign[order].copy()
    for i in range(1, s.size):
        if s[i] == 0:
            s[i] = s[i - 1]
    breaks = np.flatnonzero(np.diff(s)) + 1
    starts = np.concatenate([[0], breaks])
    ends = np.concatenate([breaks, [s.size]])
    runs = []
    for lo, hi in zip(starts, ends):
        idx = order[lo:hi]
        best = idx[np.argmax(np.abs(err[idx]))]
        runs.append((int(best), int(s[lo])))
    # first and last run are adjacent on the circle
    if len(runs) > 1 and runs[0][1] == runs[-1][1]:
        i0, i1 = runs[0][0], runs[-1][0]
        keep = i0 if abs(err[i0]) >= abs(err[i1]) else i1
        runs = [(keep, runs[0][1])] + runs[1:-1]
    return runs


def _thin(idx: list[int], mags: list[float], m: int) -> list[int]:
    """Drop the weakest extrema pairwise until ``m`` alternating points remain."""
    idx, mags = list(idx), list(mags)
    while len(idx) > m:
        k = len(idx)
        i = int(np.argmin(mags))
        left, right = (i - 1) % k, (i + 1) % k
        # the neighbours now share a sign; keep the larger one
        drop = left if mags[left] < mags[right] else right
        for j in sorted({i, drop}, reverse=True):
            del idx[j]
            del mags[j]
    return idx


def _refine(g, centres: np.ndarray, half: np.ndarray, rounds: int = 4, samples: int = 17):
    """Vectorised local maximisation of ``g`` around each centre."""
    best_x = centres.copy()
    best_v = g(best_x)
    offsets = np.linspace(-1.0, 1.0, samples)
    width = half.copy()
    for _ in range(rounds):
        xs = best_x[:, None] + width[:, None] * offsets[None, :]
        vs = g(xs.ravel()).reshape(xs.shape)
        j = np.argmax(vs, axis=1)
        cand_v = vs[np.arange(xs.shape[0]), j]
        better = cand_v > best_v
        best_x = np.where(better, xs[np.arange(xs.shape[0]), j], best_x)
        best_v = np.where(better, cand_v, best_v)
        width = width * (2.0 / (samples - 1))
    return best_x, best_v


def _single_exchange(ref: np.ndarray, ref_sign: np.ndarray, x_new: float, s_new: float):
    ref = ref.copy()
    pos = int(np.searchsorted(ref, x_new))
    left = (pos - 1) % ref.size
    right = pos % ref.size
    if ref_sign[left] == s_new:
        ref[left] = x_new
    else:
        ref[right] = x_new
    return np.sort(_wrap(ref))


def trig_remez(
    F,
    n: int,
    breakpoints=(),
    jumps=(),
    points: int | None = None,
    max_iter: int = 60,
    tol: float = 1e-8,
) -> RemezResult:
    """Best uniform trigonometric approximation of degree ``n`` to real ``F``.

    Parameters
    ----------
    F : callable
        Vectorised real ``2 pi``-periodic function.
    n : int
        Degree.
    breakpoints : sequence of float
        Points where ``F`` or ``F'`` is not smooth; added to the scan grid.
    jumps : sequence of float
        Discontinuities; both one-sided limits are sampled.
    points : int, optional
        Size of the uniform scan grid (default ``max(8192, 64 (n + 1))``).
    max_iter : int
        Exchange iterations.
    tol : float
        Relative gap ``(upper - lower) / upper`` accepted as converged.
    """
    m = 2 * n + 2
    points = points or max(8192, 64 * (n + 1))
    u = _dense_grid(points, [*breakpoints, *jumps], jumps)
    Fu = np.asarray(F(u), dtype=float)
    scale = float(np.max(np.abs(Fu), initial=0.0))
    B = trig_basis(n, u)
    spacing = np.diff(np.concatenate([u, [u[0] + TWO_PI]]))
    half = np.maximum(spacing, np.roll(spacing, 1))

    floor = _ABS_FLOOR * max(scale, 1.0)

    # start from the least-squares fit on the scan grid
    coeffs = np.linalg.lstsq(B, Fu, rcond=None)[0]
    err = Fu - B @ coeffs
    best_coeffs, best_upper = coeffs, float(np.max(np.abs(err)))
    if best_upper <= floor:
        return RemezResult(coeffs, 0.0, best_upper, np.array([]), 0, True)
    runs = _runs(err)
    if len(runs) >= m:
        idx = _thin([r[0] for r in runs], [abs(err[r[0]]) for r in runs], m)
        ref = np.sort(u[idx])
    else:
        ref = -math.pi + TWO_PI * (np.arange(m) + 0.5) / m

    alt = (-1.0) ** np.arange(m)
    best_ref, best_lower = ref, 0.0
    sol_h = 0.0
    certified = False
    it = 0
    for it in range(1, max_iter + 1):
        A = np.hstack([trig_basis(n, ref), alt[:, None]])
        Fref = np.asarray(F(ref), dtype=float)
        # solve for a correction to the current iterate: the right-hand side is
        # of the size of the error, which keeps rounding relative to E_n
        try:
            for _ in range(2):
                sol = np.linalg.solve(A, Fref - trig_eval(coeffs, ref) - sol_h * alt)
                coeffs = coeffs + sol[:-1]
                sol_h = sol_h + sol[-1]
        except np.linalg.LinAlgError:
            break
        # de la Vallee Poussin: alternating errors on the reference bound E_n below
        e_ref = Fref - trig_eval(coeffs, ref)
        s_ref = np.sign(e_ref)
        if np.all(s_ref * np.roll(s_ref, 1) < 0):
            best_lower = max(best_lower, float(np.min(np.abs(e_ref))))
        err = Fu - B @ coeffs

        def g(x, c=coeffs):
            return np.abs(np.asarray(F(_wrap(x)), dtype=float) - trig_eval(c, _wrap(x)))

        runs = _runs(err)
        idx = [r[0] for r in runs]
        if idx:
            xs, vs = _refine(g, u[idx], half[idx])
        else:
            xs, vs = np.array([]), np.array([])
        upper = float(max(np.max(vs, initial=0.0), np.max(np.abs(err))))
        if upper < best_upper:
            best_coeffs, best_upper, best_ref = coeffs, upper, ref
        if best_upper - best_lower <= tol * best_upper + floor:
            certified = True
            break
        if len(runs) >= m:
            keep = _thin(list(range(len(runs))), list(vs), m)
            new = np.sort(_wrap(xs[keep]))
        else:
            j = int(np.argmax(np.abs(err)))
            new = _single_exchange(ref, s_ref, float(u[j]), float(np.sign(err[j])))
        if np.allclose(new, ref, rtol=0, atol=1e-15):
            break
        ref = new

    return RemezResult(np.asarray(best_coeffs), float(best_lower), float(best_upper),
                       np.asarray(best_ref), it, certified)
