"""Integral-metric norms of periodic polynomials and best approximation.

Norms are taken over the full period, ||p||_q = (int_0^{2pi} |p|^q dt)^{1/q},
with no normalizing factor.  Quadrature is the rectangle rule on uniform
nodes, which is spectrally accurate for smooth periodic integrands; |p|^q is
only piecewise smooth, so convergence is confirmed by grid doubling rather
than assumed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, ParameterError
from .trig import TrigPoly, sample

__all__ = [
    "NormRequest",
    "lq_norm",
    "l2_norm_coeffs",
    "l1_norm",
    "BestApproxResult",
    "best_approx",
]

TWO_PI = 2.0 * math.pi

_MAX_DOUBLINGS = 12


@dataclass(frozen=True)
class NormRequest:
    """Quadrature parameters: metric exponent, starting grid, stop tolerance."""

    q: float = 2.0
    grid_m: int = 512
    tolerance: float = 1.0e-10

    def __post_init__(self) -> None:
        if not (self.q >= 1.0 and math.isfinite(self.q)):
            raise ParameterError("NormRequest: requires q in [1, inf)")
        if self.grid_m < 16 or self.grid_m & (self.grid_m - 1):
            raise ParameterError("NormRequest: grid_m must be a power of two >= 16")
        if not (self.tolerance > 0.0):
            raise ParameterError("NormRequest: tolerance must be positive")


def _next_pow2(n: int) -> int:
    return 1 << max(4, (n - 1).bit_length())


def _rectangle_lq(p: TrigPoly, q: float, m: int) -> float:
    v = sample(p, m).values
    return float((TWO_PI / m * np.sum(np.abs(v) ** q)) ** (1.0 / q))


def lq_norm(p: TrigPoly, req: NormRequest) -> float:
    """||p||_q by rectangle-rule quadrature with grid doubling.

    The grid starts at max(req.grid_m, a power of two resolving p) and
    doubles until two successive values differ by less than req.tolerance.
    |p|^q is merely piecewise smooth at the zeros of p, and the lower q the
    sharper the kink, so the starting grid oversamples the bandwidth more
    aggressively for small q to leave the doubling budget room to converge.
    """
    oversample = 16 if req.q < 2.0 else 4
    m = max(req.grid_m, oversample * _next_pow2(2 * p.degree + 2))
    prev = _rectangle_lq(p, req.q, m)
    for _ in range(_MAX_DOUBLINGS):
        m *= 2
        curr = _rectangle_lq(p, req.q, m)
        # Absolute stop for O(1) norms; proportional above that, since an
        # absolute target below the rounding floor of a large norm would
        # never be met.
        if abs(curr - prev) < req.tolerance * max(1.0, abs(curr)):
            return curr
        prev = curr
    raise ConvergenceError(
        f"lq_norm: no convergence to {req.tolerance} after {_MAX_DOUBLINGS} doublings"
    )


def l2_norm_coeffs(p: TrigPoly) -> float:
    """||p||_2 from the coefficients: sqrt(2pi (a0/2)^2 + pi sum(a^2 + b^2))."""
    acc = TWO_PI * (p.a0 / 2.0) ** 2
    if p.degree:
        acc += math.pi * float(np.sum(p.a**2 + p.b**2))
    return math.sqrt(acc)


def l1_norm(p: TrigPoly, req: NormRequest | None = None) -> float:
    """||p||_1, the q = 1 quadrature norm (used for witness calibration).

    The default stop tolerance is looser than NormRequest's: |p| has a corner
    at every zero crossing, so the quadrature converges only quadratically.
    """
    if req is None:
        req = NormRequest(q=1.0, grid_m=512, tolerance=1.0e-8)
    return lq_norm(p, NormRequest(q=1.0, grid_m=req.grid_m, tolerance=req.tolerance))


@dataclass(frozen=True, eq=False)
class BestApproxResult:
    """Best approximation by polynomials of degree <= n - 1 in the q metric."""

    value: float
    minimizer: TrigPoly
    iterations: int
    converged: bool


def best_approx(f: TrigPoly, n: int, req: NormRequest) -> BestApproxResult:
    """Minimize ||f - t||_q over trigonometric polynomials t of degree <= n-1.

    For q = 2 the truncated Fourier sum is the exact minimizer.  Otherwise
    the convex problem is solved by iteratively reweighted least squares on
    a uniform sample grid, started from the truncation; weights |r|^(q-2)
    are clipped below at 1e-10 (they degenerate near residual zeros for
    q > 2), and for q > 2 the iterate moves a partial step 1/(q-1) toward
    the weighted solution, the classical stabilization of the method.  The
    reported value is always the grid-doubling quadrature norm of the final
    residual, so a non-converged run still yields a valid upper bound on the
    infimum.
    """
    if n < 1:
        raise ParameterError("best_approx: requires n >= 1")
    if not (1.0 < req.q and math.isfinite(req.q)):
        raise ParameterError("best_approx: requires q in (1, inf)")

    truncation = f.truncated(n - 1).padded(n - 1)
    if req.q == 2.0:
        value = lq_norm(f - truncation, req)
        return BestApproxResult(value=value, minimizer=truncation, iterations=0, converged=True)

    q = req.q
    d = max(f.degree, n - 1)
    m = max(req.grid_m, _next_pow2(4 * (d + 1)))
    fvals = sample(f, m).values
    nodes = TWO_PI * np.arange(m) / m

    ncols = 2 * (n - 1) + 1
    basis = np.empty((m, ncols))
    basis[:, 0] = 0.5
    if n > 1:
        k = np.arange(1, n, dtype=float)
        phase = np.multiply.outer(nodes, k)
        basis[:, 1:n] = np.cos(phase)
        basis[:, n:] = np.sin(phase)

    def unpack(c: np.ndarray) -> TrigPoly:
        if n == 1:
            return TrigPoly.constant(float(c[0]))
        return TrigPoly(float(c[0]), c[1:n].copy(), c[n:].copy())

    def objective(resid: np.ndarray) -> float:
        return float((TWO_PI / m * np.sum(np.abs(resid) ** q)) ** (1.0 / q))

    coef = np.zeros(ncols)
    coef[0] = truncation.a0
    if n > 1:
        coef[1:n] = truncation.a
        coef[n:] = truncation.b

    step = 1.0 if q < 2.0 else 1.0 / (q - 1.0)
    best_coef = coef.copy()
    best_obj = objective(fvals - basis @ coef)
    prev_obj = best_obj
    flat_count = 0
    converged = False
    iterations = 0

    for iterations in range(1, 501):
        resid = fvals - basis @ coef
        w = np.clip(np.abs(resid), 1.0e-10, None) ** (q - 2.0)
        w = np.clip(w, 1.0e-10, None)
        sw = np.sqrt(w)
        solution, *_ = np.linalg.lstsq(basis * sw[:, None], fvals * sw, rcond=None)
        coef = coef + step * (solution - coef)
        obj = objective(fvals - basis @ coef)
        if obj < best_obj:
            best_obj = obj
            best_coef = coef.copy()
        if abs(obj - prev_obj) <= 1.0e-9 * max(obj, 1.0e-300):
            flat_count += 1
            if flat_count >= 3:
                converged = True
                break
        else:
            flat_count = 0
        prev_obj = obj

    minimizer = unpack(best_coef)
    value = lq_norm(f - minimizer, req)
    return BestApproxResult(
        value=value, minimizer=minimizer, iterations=iterations, converged=converged
    )
