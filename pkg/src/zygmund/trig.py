"""Trigonometric polynomial algebra, classical kernels, and summation operators.

Everything here works on the finite cosine/sine coefficient form

    p(t) = a0/2 + sum_{k=1}^{d} (a_k cos kt + b_k sin kt),

which is the universal computational object of the library: convolution
kernels, Zygmund and Fejér means, and the deviation f - Z(f) are all exact
coefficient manipulations on it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np

from .decay import PsiFunction, Tabulated
from .errors import (
    AliasingError,
    DivergenceError,
    IllPosedError,
    ParameterError,
)

__all__ = [
    "TrigPoly",
    "coeffs_close",
    "dirichlet",
    "dirichlet_closed",
    "vallee_poussin",
    "vallee_poussin_by_averaging",
    "KernelSpec",
    "kernel_poly",
    "convolve",
    "psi_beta_derivative",
    "zygmund_sum",
    "fejer_sum",
    "deviation_coeffs",
    "SampledFunction",
    "sample",
    "from_samples",
]

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True, eq=False)
class TrigPoly:
    """Finite trigonometric polynomial in coefficient form.

    a0 contributes a0/2 to the value; a[k-1], b[k-1] are the cosine and sine
    coefficients of the k-th harmonic.  Trailing zero pairs are permitted.
    """

    a0: float
    a: np.ndarray
    b: np.ndarray

    def __post_init__(self) -> None:
        a = np.atleast_1d(np.asarray(self.a, dtype=float))
        b = np.atleast_1d(np.asarray(self.b, dtype=float))
        if a.ndim != 1 or b.ndim != 1 or a.size != b.size:
            raise ParameterError("TrigPoly: a and b must be 1-d arrays of equal length")
        a = a.copy()
        b = b.copy()
        a.setflags(write=False)
        b.setflags(write=False)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "a0", float(self.a0))

    @classmethod
    def constant(cls, a0: float) -> "TrigPoly":
        return cls(a0=a0, a=np.zeros(0), b=np.zeros(0))

    @classmethod
    def zero(cls, degree: int = 0) -> "TrigPoly":
        return cls(a0=0.0, a=np.zeros(degree), b=np.zeros(degree))

    @property
    def degree(self) -> int:
        return self.a.size

    def __call__(self, t: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
        arr = np.asarray(t, dtype=float)
        flat = np.atleast_1d(arr)
        out = np.full(flat.shape, self.a0 / 2.0)
        if self.degree:
            k = np.arange(1, self.degree + 1, dtype=float)
            phase = np.multiply.outer(flat, k)
            out = out + np.cos(phase) @ self.a + np.sin(phase) @ self.b
        if arr.ndim == 0:
            return float(out[0])
        return out.reshape(arr.shape)

    def padded(self, degree: int) -> "TrigPoly":
        """Same polynomial with zero coefficients appended up to `degree`."""
        if degree < self.degree:
            raise ParameterError("padded: target degree below current degree")
        extra = degree - self.degree
        if extra == 0:
            return self
        pad = np.zeros(extra)
        return TrigPoly(self.a0, np.concatenate([self.a, pad]), np.concatenate([self.b, pad]))

    def trimmed(self) -> "TrigPoly":
        """Drop trailing all-zero coefficient pairs."""
        d = self.degree
        while d > 0 and self.a[d - 1] == 0.0 and self.b[d - 1] == 0.0:
            d -= 1
        return TrigPoly(self.a0, self.a[:d], self.b[:d])

    def truncated(self, degree: int) -> "TrigPoly":
        """Keep harmonics up to `degree` (the partial Fourier sum)."""
        d = min(degree, self.degree)
        return TrigPoly(self.a0, self.a[:d], self.b[:d])

    def harmonic(self, k: int) -> Tuple[float, float]:
        if k < 1 or k > self.degree:
            return (0.0, 0.0)
        return (float(self.a[k - 1]), float(self.b[k - 1]))

    def __add__(self, other: "TrigPoly") -> "TrigPoly":
        d = max(self.degree, other.degree)
        p, q = self.padded(d), other.padded(d)
        return TrigPoly(p.a0 + q.a0, p.a + q.a, p.b + q.b)

    def __sub__(self, other: "TrigPoly") -> "TrigPoly":
        return self + (-1.0) * other

    def __mul__(self, scalar: float) -> "TrigPoly":
        return TrigPoly(self.a0 * scalar, self.a * scalar, self.b * scalar)

    __rmul__ = __mul__

    def __neg__(self) -> "TrigPoly":
        return self * -1.0


def coeffs_close(p: TrigPoly, q: TrigPoly, tol: float) -> bool:
    """True when all coefficients (a0 included) agree within `tol`."""
    return max_coeff_diff(p, q) <= tol


def max_coeff_diff(p: TrigPoly, q: TrigPoly) -> float:
    d = max(p.degree, q.degree)
    pp, qq = p.padded(d), q.padded(d)
    gap = abs(pp.a0 - qq.a0)
    if d:
        gap = max(
            gap,
            float(np.max(np.abs(pp.a - qq.a))),
            float(np.max(np.abs(pp.b - qq.b))),
        )
    return gap


# ---------------------------------------------------------------------------
# Classical kernels
# ---------------------------------------------------------------------------

def dirichlet(k: int) -> TrigPoly:
    """Dirichlet kernel D_k(t) = 1/2 + sum_{v=1}^{k} cos(vt) in coefficient form."""
    if k < 1:
        raise ParameterError("dirichlet: requires k >= 1")
    return TrigPoly(a0=1.0, a=np.ones(k), b=np.zeros(k))


def dirichlet_closed(k: int, t: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
    """Closed form sin((k + 1/2) t) / (2 sin(t/2)).

    Near the removable singularities t in 2*pi*Z (|sin(t/2)| < 1e-8) the
    coefficient series is evaluated instead.
    """
    if k < 1:
        raise ParameterError("dirichlet_closed: requires k >= 1")
    arr = np.asarray(t, dtype=float)
    flat = np.atleast_1d(arr).astype(float)
    half_sin = np.sin(flat / 2.0)
    out = np.empty_like(flat)
    safe = np.abs(half_sin) >= 1.0e-8
    out[safe] = np.sin((k + 0.5) * flat[safe]) / (2.0 * half_sin[safe])
    if np.any(~safe):
        series = dirichlet(k)
        out[~safe] = np.atleast_1d(series(flat[~safe]))
    if arr.ndim == 0:
        return float(out[0])
    return out.reshape(arr.shape)


def vallee_poussin(m: int) -> TrigPoly:
    """Vallée-Poussin kernel of order m, in explicit coefficient form.

    V_m(t) = D_m(t) + 2 * sum_{k=m+1}^{2m-1} (1 - k/(2m)) cos(kt); its degree
    is 2m - 1 and the first m cosine coefficients are all 1.
    """
    if m < 1:
        raise ParameterError("vallee_poussin: requires m >= 1")
    deg = 2 * m - 1
    a = np.zeros(deg)
    a[:m] = 1.0
    k = np.arange(m + 1, 2 * m, dtype=float)
    a[m:] = 2.0 * (1.0 - k / (2.0 * m))
    return TrigPoly(a0=1.0, a=a, b=np.zeros(deg))


def vallee_poussin_by_averaging(m: int) -> TrigPoly:
    """Defining form (1/m) * sum_{k=m}^{2m-1} D_k(t); identical to
    vallee_poussin(m) up to rounding."""
    if m < 1:
        raise ParameterError("vallee_poussin_by_averaging: requires m >= 1")
    acc = TrigPoly.zero(2 * m - 1)
    for k in range(m, 2 * m):
        acc = acc + dirichlet(k).padded(2 * m - 1)
    return (1.0 / m) * acc


# ---------------------------------------------------------------------------
# Convolution kernels built from a decay profile
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class KernelSpec:
    """Truncated convolution kernel sum_{k=1}^{length} psi(k) cos(kt - beta*pi/2)."""

    psi: PsiFunction
    beta: float
    length: int

    def __post_init__(self) -> None:
        if self.length < 1:
            raise ParameterError("KernelSpec: requires length >= 1")
        if not math.isfinite(self.beta):
            raise ParameterError("KernelSpec: beta must be finite")

    @property
    def phase(self) -> float:
        return self.beta * math.pi / 2.0

    def coefficients(self, upto: int) -> np.ndarray:
        """psi(k) for k = 1..upto (upto may not exceed the truncation)."""
        if upto > self.length:
            raise ParameterError("KernelSpec: requested harmonics beyond truncation")
        k = np.arange(1, upto + 1, dtype=float)
        return np.asarray(self.psi(k), dtype=float)


def kernel_poly(kernel: KernelSpec) -> Tuple[TrigPoly, float]:
    """Realize the truncated kernel and estimate the dropped tail.

    Returns (poly, tail_sup) where poly has coefficients
    a_k = psi(k) cos(beta*pi/2), b_k = psi(k) sin(beta*pi/2) for k up to the
    truncation, and tail_sup estimates sum_{k > length} psi(k) by direct
    summation plus an integral remainder.  The sup estimate is infinite when
    the coefficient series diverges (decay exponent <= 1); tabulated profiles
    with no convergent continuation raise instead.
    """
    psi_k = kernel.coefficients(kernel.length)
    c, s = math.cos(kernel.phase), math.sin(kernel.phase)
    poly = TrigPoly(a0=0.0, a=psi_k * c, b=psi_k * s)
    return poly, coefficient_tail_sum(kernel.psi, kernel.length + 1)


def coefficient_tail_sum(psi: PsiFunction, first: int, power: float = 1.0) -> float:
    """Estimate sum_{k >= first} psi(k)**power.

    Direct summation over an initial block, then a midpoint-corrected
    integral remainder; accurate to a few digits, which is all the tail
    control needs.  Divergent cases (power * decay exponent <= 1) return inf
    for analytic families and raise DivergenceError for tabulated profiles,
    whose declared decay exponent is the only continuation available.
    """
    if power * psi.decay_exponent <= 1.0 + 1.0e-12:
        if isinstance(psi, Tabulated):
            raise DivergenceError(
                "coefficient_tail_sum: tabulated profile with declared decay "
                f"exponent {psi.decay_exponent} has no convergent tail at power {power}"
            )
        return math.inf

    from scipy.integrate import quad

    k_end = first + 8192
    ks = np.arange(first, k_end, dtype=float)
    direct = float(np.sum(np.exp(power * psi.log_value(ks))))
    # Midpoint-corrected integral remainder: for a smooth decreasing summand
    # sum_{k >= K} h(k) is the midpoint rule for the integral from K - 1/2.
    remainder, _ = quad(
        lambda t: math.exp(power * psi.log_value(t)),
        k_end - 0.5,
        math.inf,
        epsabs=0.0,
        epsrel=1.0e-9,
        limit=200,
    )
    return direct + remainder


# ---------------------------------------------------------------------------
# Convolution and its inverse
# ---------------------------------------------------------------------------

def convolve(kernel: KernelSpec, phi: TrigPoly) -> TrigPoly:
    """Periodic convolution (1/pi) * integral of kernel(x - t) * phi(t) dt.

    By orthogonality the k-th harmonic of phi, written (alpha_k, gamma_k),
    maps to psi(k) times the pair rotated by +beta*pi/2:

        a_k = psi(k) * (alpha_k cos(beta*pi/2) - gamma_k sin(beta*pi/2))
        b_k = psi(k) * (alpha_k sin(beta*pi/2) + gamma_k cos(beta*pi/2))

    The sign convention is frozen by the quadrature oracle in the test suite
    (a grid evaluation of the defining integral), so the rotation direction
    cannot silently flip.
    """
    if phi.a0 != 0.0:
        raise ParameterError("convolve: phi must have zero mean (a0 = 0)")
    d = phi.degree
    if kernel.length < d:
        raise ParameterError("convolve: kernel truncation below phi degree")
    if d == 0:
        return TrigPoly.zero()
    psi_k = kernel.coefficients(d)
    c, s = math.cos(kernel.phase), math.sin(kernel.phase)
    a = psi_k * (phi.a * c - phi.b * s)
    b = psi_k * (phi.a * s + phi.b * c)
    return TrigPoly(0.0, a, b)


def psi_beta_derivative(f: TrigPoly, kernel: KernelSpec) -> TrigPoly:
    """Inverse of `convolve` on the zero-mean part of f.

    Divides each harmonic by psi(k) and rotates the phase back; the constant
    term of f is not part of the convolution and is dropped (callers carry
    a0 separately).  Raises when a needed psi(k) underflows.
    """
    d = f.degree
    if kernel.length < d:
        raise ParameterError("psi_beta_derivative: kernel truncation below f degree")
    if d == 0:
        return TrigPoly.zero()
    psi_k = kernel.coefficients(d)
    if np.any(psi_k < 1.0e-300):
        raise IllPosedError("psi_beta_derivative: psi(k) underflow, inversion ill-posed")
    c, s = math.cos(kernel.phase), math.sin(kernel.phase)
    alpha = (f.a * c + f.b * s) / psi_k
    gamma = (-f.a * s + f.b * c) / psi_k
    return TrigPoly(0.0, alpha, gamma)


# ---------------------------------------------------------------------------
# Summation operators
# ---------------------------------------------------------------------------

def zygmund_sum(f: TrigPoly, n: int, s: float) -> TrigPoly:
    """Zygmund mean: harmonic k < n scaled by 1 - (k/n)**s, the rest dropped.

    The result has degree min(n - 1, f.degree); the constant term passes
    through unchanged.  s = 1 reproduces the Fejér mean.
    """
    if n < 1:
        raise ParameterError("zygmund_sum: requires n >= 1")
    if not (s > 0.0):
        raise ParameterError("zygmund_sum: requires s > 0")
    d = min(n - 1, f.degree)
    if d == 0:
        return TrigPoly.constant(f.a0)
    k = np.arange(1, d + 1, dtype=float)
    factor = 1.0 - (k / n) ** s
    return TrigPoly(f.a0, f.a[:d] * factor, f.b[:d] * factor)


def fejer_sum(f: TrigPoly, n: int) -> TrigPoly:
    """Fejér mean, the s = 1 Zygmund mean."""
    return zygmund_sum(f, n, 1.0)


def deviation_coeffs(phi: TrigPoly, kernel: KernelSpec, n: int, s: float) -> TrigPoly:
    """Exact coefficient form of f - Z(f) for f = convolve(kernel, phi).

    Harmonics k < n of the convolution are scaled by (k/n)**s; harmonics
    k >= n pass through unchanged.  Because phi is a polynomial this is
    exact: no kernel tail is involved.
    """
    if n < 1:
        raise ParameterError("deviation_coeffs: requires n >= 1")
    if not (s > 0.0):
        raise ParameterError("deviation_coeffs: requires s > 0")
    if kernel.length < max(phi.degree, n):
        raise ParameterError("deviation_coeffs: kernel truncation below max(degree, n)")
    f = convolve(kernel, phi)
    d = f.degree
    if d == 0:
        return TrigPoly.zero()
    k = np.arange(1, d + 1, dtype=float)
    factor = np.where(k < n, (k / n) ** s, 1.0)
    return TrigPoly(0.0, f.a * factor, f.b * factor)


# ---------------------------------------------------------------------------
# Uniform sampling
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SampledFunction:
    """Values of a periodic function at the nodes t_j = 2*pi*j/M, M a power of two."""

    values: np.ndarray

    def __post_init__(self) -> None:
        v = np.asarray(self.values, dtype=float)
        if v.ndim != 1 or v.size < 2 or v.size & (v.size - 1):
            raise ParameterError("SampledFunction: length must be a power of two >= 2")
        v = v.copy()
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @property
    def m(self) -> int:
        return self.values.size

    @property
    def nodes(self) -> np.ndarray:
        return TWO_PI * np.arange(self.m) / self.m


def sample(p: TrigPoly, m: int) -> SampledFunction:
    """Evaluate p at the M uniform nodes, exactly, via an inverse FFT.

    Requires M >= 2*degree + 2 so every harmonic sits strictly below the
    Nyquist index.
    """
    if m < 2 or m & (m - 1):
        raise ParameterError("sample: M must be a power of two >= 2")
    if m < 2 * p.degree + 2:
        raise AliasingError("sample: M must be at least 2*degree + 2")
    spectrum = np.zeros(m // 2 + 1, dtype=complex)
    spectrum[0] = 0.5 * p.a0 * m
    if p.degree:
        spectrum[1 : p.degree + 1] = 0.5 * m * (p.a - 1j * p.b)
    return SampledFunction(np.fft.irfft(spectrum, n=m))


def from_samples(sf: SampledFunction, degree: int | None = None) -> TrigPoly:
    """Recover coefficients from uniform samples (inverse of `sample`)."""
    m = sf.m
    if degree is None:
        degree = m // 2 - 1
    if degree > m // 2 - 1:
        raise AliasingError("from_samples: degree exceeds what M samples determine")
    spectrum = np.fft.rfft(sf.values)
    a0 = 2.0 * spectrum[0].real / m
    a = 2.0 * spectrum[1 : degree + 1].real / m
    b = -2.0 * spectrum[1 : degree + 1].imag / m
    return TrigPoly(a0, a, b)
