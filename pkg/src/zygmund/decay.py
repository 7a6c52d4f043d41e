"""Coefficient decay profiles and their structural classification.

The convolution kernels treated by this library have cosine series with
positive nonincreasing coefficients psi(1), psi(2), ...  This module defines
the supported analytic families of such profiles (pure powers and three
log-perturbed variants), tabulated data profiles, the method parameters
(smoothing exponent s, target metric exponent q, kernel phase beta), and the
classification of the composite growth function

    g(t) = psi(t) * t**(s + 1/q'),   1/q + 1/q' = 1,

whose behaviour (power growth, slow oscillation, power decay) selects which
approximation-rate law applies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

import numpy as np

from .errors import DomainError, ParameterError

__all__ = [
    "PsiFunction",
    "Power",
    "PowerLog",
    "PowerInvLog",
    "PowerLogLog",
    "Tabulated",
    "MethodParams",
    "growth_function",
    "Regime",
    "RegimeResult",
    "classify_regime",
    "AlmostDecreasingResult",
    "check_almost_decreasing",
    "DoublingResult",
    "check_doubling",
    "Convexity",
    "reciprocal_convexity",
]

# Geometric probe grid used by construction-time monotonicity checks and by
# the empirical certificates below.
_PROBE_GRID = np.geomspace(1.0, 1.0e6, 257)

# Absolute tolerance on exponent comparisons (regime boundaries are
# codimension-one conditions and callers supply exact rationals in tests).
_EXPONENT_TOL = 1.0e-12


class PsiFunction:
    """Positive nonincreasing coefficient profile on [1, inf).

    Subclasses implement ``_value`` (vectorized) and expose
    ``decay_exponent``, the power-law exponent governing the profile's decay
    up to slowly varying factors.
    """

    decay_exponent: float

    def __call__(self, t: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
        arr = np.asarray(t, dtype=float)
        if np.any(arr < 1.0):
            raise DomainError("psi(t) is defined for t >= 1")
        out = self._value(arr)
        if arr.ndim == 0:
            return float(out)
        return out

    def log_value(self, t: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
        """log(psi(t)), computed without forming psi(t) where possible.

        The default takes the log of the value; subclasses override when the
        value itself may under- or overflow.
        """
        arr = np.asarray(t, dtype=float)
        if np.any(arr < 1.0):
            raise DomainError("psi(t) is defined for t >= 1")
        out = self._log_value(arr)
        if arr.ndim == 0:
            return float(out)
        return out

    def _value(self, t: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def _log_value(self, t: np.ndarray) -> np.ndarray:
        return np.log(self._value(t))

    def _validate_shape(self) -> None:
        """Reject parameters producing a profile that is not positive and
        nonincreasing on the probe window."""
        v = self._value(_PROBE_GRID)
        if not np.all(np.isfinite(v)) or np.any(v <= 0.0):
            raise ParameterError(
                f"{type(self).__name__}: psi must be finite and positive on [1, 1e6]"
            )
        if np.any(v[1:] > v[:-1] * (1.0 + 1.0e-12)):
            raise ParameterError(
                f"{type(self).__name__}: psi must be nonincreasing on [1, 1e6]"
            )


@dataclass(frozen=True)
class Power(PsiFunction):
    """psi(t) = t**(-r), r > 0."""

    r: float

    def __post_init__(self) -> None:
        if not (self.r > 0.0):
            raise ParameterError("Power: requires r > 0")

    @property
    def decay_exponent(self) -> float:
        return self.r

    def _value(self, t: np.ndarray) -> np.ndarray:
        return t ** (-self.r)

    def _log_value(self, t: np.ndarray) -> np.ndarray:
        return -self.r * np.log(t)


@dataclass(frozen=True)
class PowerLog(PsiFunction):
    """psi(t) = log(t + c)**alpha / t**r, with r, alpha, c > 0.

    For the profile to be nonincreasing from t = 1 the shift c must be large
    enough relative to alpha / r; the constructor verifies this numerically
    rather than imposing a closed-form bound.
    """

    r: float
    alpha: float
    c: float

    def __post_init__(self) -> None:
        if not (self.r > 0.0 and self.alpha > 0.0 and self.c > 0.0):
            raise ParameterError("PowerLog: requires r > 0, alpha > 0, c > 0")
        self._validate_shape()

    @property
    def decay_exponent(self) -> float:
        return self.r

    def _value(self, t: np.ndarray) -> np.ndarray:
        return np.log(t + self.c) ** self.alpha / t ** self.r

    def _log_value(self, t: np.ndarray) -> np.ndarray:
        return self.alpha * np.log(np.log(t + self.c)) - self.r * np.log(t)


@dataclass(frozen=True)
class PowerInvLog(PsiFunction):
    """psi(t) = 1 / (t**r * log(t + c)**alpha), with r, alpha, c > 0."""

    r: float
    alpha: float
    c: float

    def __post_init__(self) -> None:
        if not (self.r > 0.0 and self.alpha > 0.0 and self.c > 0.0):
            raise ParameterError("PowerInvLog: requires r > 0, alpha > 0, c > 0")

    @property
    def decay_exponent(self) -> float:
        return self.r

    def _value(self, t: np.ndarray) -> np.ndarray:
        return 1.0 / (t ** self.r * np.log(t + self.c) ** self.alpha)

    def _log_value(self, t: np.ndarray) -> np.ndarray:
        return -self.r * np.log(t) - self.alpha * np.log(np.log(t + self.c))


@dataclass(frozen=True)
class PowerLogLog(PsiFunction):
    """psi(t) = log(log(t + c)**alpha) / t**r = alpha*log(log(t + c)) / t**r.

    Positivity at t = 1 requires log(1 + c) > 1, i.e. c > e - 1.
    """

    r: float
    alpha: float
    c: float

    def __post_init__(self) -> None:
        if not (self.r > 0.0 and self.alpha > 0.0):
            raise ParameterError("PowerLogLog: requires r > 0, alpha > 0")
        if not (self.c > math.e - 1.0):
            raise ParameterError("PowerLogLog: requires c > e - 1 for positivity")
        self._validate_shape()

    @property
    def decay_exponent(self) -> float:
        return self.r

    def _value(self, t: np.ndarray) -> np.ndarray:
        return self.alpha * np.log(np.log(t + self.c)) / t ** self.r

    def _log_value(self, t: np.ndarray) -> np.ndarray:
        return (
            np.log(self.alpha * np.log(np.log(t + self.c))) - self.r * np.log(t)
        )


@dataclass(frozen=True, eq=False)
class Tabulated(PsiFunction):
    """Profile given by values at the integer nodes 1, 2, ..., len(table).

    Stored and interpolated in log space (linear in t between integer nodes),
    which preserves positivity and monotonicity of the data.  Beyond the last
    node the profile continues as a pure power with the declared decay
    exponent.
    """

    log_values: np.ndarray
    decay_exponent: float

    def __post_init__(self) -> None:
        arr = np.asarray(self.log_values, dtype=float)
        if arr.ndim != 1 or arr.size < 2:
            raise ParameterError("Tabulated: needs at least two nodes")
        if not np.all(np.isfinite(arr)):
            raise ParameterError("Tabulated: log values must be finite")
        if np.any(np.diff(arr) > 1.0e-12):
            raise ParameterError("Tabulated: values must be nonincreasing")
        if not (self.decay_exponent >= 0.0):
            raise ParameterError("Tabulated: declared decay exponent must be >= 0")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "log_values", arr)

    @classmethod
    def from_values(cls, values, decay_exponent: float) -> "Tabulated":
        values = np.asarray(values, dtype=float)
        if np.any(values <= 0.0):
            raise ParameterError("Tabulated: values must be positive")
        return cls(log_values=np.log(values), decay_exponent=decay_exponent)

    @property
    def table_end(self) -> float:
        return float(self.log_values.size)

    def _log_value(self, t: np.ndarray) -> np.ndarray:
        L = self.log_values.size
        nodes = np.arange(1, L + 1, dtype=float)
        inside = np.interp(t, nodes, self.log_values)
        beyond = self.log_values[-1] - self.decay_exponent * (np.log(t) - math.log(L))
        return np.where(t <= L, inside, beyond)

    def _value(self, t: np.ndarray) -> np.ndarray:
        return np.exp(self._log_value(t))


@dataclass(frozen=True)
class MethodParams:
    """Parameters of the summation method and target metric.

    s     : exponent of the polynomial multipliers 1 - (k/n)**s (s = 1 is
            the Fejér case).
    q     : exponent of the target integral metric, 1 < q < inf.
    beta  : phase of the kernel harmonics (the k-th harmonic is
            cos(kt - beta*pi/2)).
    """

    s: float
    q: float
    beta: float = 0.0

    def __post_init__(self) -> None:
        if not (self.s > 0.0 and math.isfinite(self.s)):
            raise ParameterError("MethodParams: requires s > 0")
        if not (1.0 < self.q and math.isfinite(self.q)):
            raise ParameterError("MethodParams: requires q in (1, inf)")
        if not math.isfinite(self.beta):
            raise ParameterError("MethodParams: beta must be finite")

    @property
    def q_prime(self) -> float:
        """Conjugate exponent, 1/q + 1/q' = 1."""
        return self.q / (self.q - 1.0)

    @property
    def growth_exponent(self) -> float:
        """The power s + 1/q' entering the composite growth function."""
        return self.s + 1.0 / self.q_prime


def growth_function(
    psi: PsiFunction, method: MethodParams, t: Union[float, np.ndarray]
) -> Union[float, np.ndarray]:
    """Composite growth function g(t) = psi(t) * t**(s + 1/q')."""
    arr = np.asarray(t, dtype=float)
    out = psi(arr) * arr ** method.growth_exponent
    if arr.ndim == 0:
        return float(out)
    return out


class Regime(Enum):
    """Behaviour of the composite growth function g."""

    GROWING = "growing"        # g(t) * t**(-eps) increases for some eps > 0
    CRITICAL = "critical"      # g slowly oscillating: any power swamps it
    DECAYING = "decaying"      # g(t) * t**(+eps) decreases for some eps > 0
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class RegimeResult:
    """Classification outcome with the certifying exponent when available."""

    regime: Regime
    epsilon: Optional[float] = None

    def __post_init__(self) -> None:
        if self.regime in (Regime.GROWING, Regime.DECAYING):
            if self.epsilon is not None and not (self.epsilon > 0.0):
                raise ParameterError("RegimeResult: certifying epsilon must be > 0")


def classify_regime(psi: PsiFunction, method: MethodParams) -> RegimeResult:
    """Classify the growth function g(t) = psi(t) * t**(s + 1/q').

    Analytic families are decided from the net power exponent
    e = (s + 1/q') - r alone: logarithmic factors are slowly oscillating and
    never flip the verdict when e != 0.  The boundary e = 0 is resolved as
    CRITICAL (pure powers give g constant there; log perturbations oscillate
    slowly by definition).  Tabulated profiles get a numeric monotonicity
    test on their integer nodes and may come back UNDETERMINED.
    """
    e = method.growth_exponent - psi.decay_exponent
    if not isinstance(psi, Tabulated):
        if e > _EXPONENT_TOL:
            return RegimeResult(Regime.GROWING, epsilon=e / 2.0)
        if e < -_EXPONENT_TOL:
            return RegimeResult(Regime.DECAYING, epsilon=-e / 2.0)
        return RegimeResult(Regime.CRITICAL)

    # Tabulated: probe at integer nodes (the actual data; between nodes the
    # log-linear interpolant wiggles around any power trend) plus a short
    # declared-decay continuation, and certify by monotonicity in log space.
    grid = _tabulated_probe_grid(psi)
    top = float(grid[-1])
    log_g = psi.log_value(grid) + method.growth_exponent * np.log(grid)
    slack = 1.0e-9

    def nondecreasing(x: np.ndarray) -> bool:
        return bool(np.all(np.diff(x) >= -slack))

    def nonincreasing(x: np.ndarray) -> bool:
        return bool(np.all(np.diff(x) <= slack))

    log_t = np.log(grid)
    if e > _EXPONENT_TOL:
        eps = e / 2.0
        if nondecreasing(log_g - eps * log_t):
            return RegimeResult(Regime.GROWING, epsilon=eps)
        return RegimeResult(Regime.UNDETERMINED)
    if e < -_EXPONENT_TOL:
        eps = -e / 2.0
        if nonincreasing(log_g + eps * log_t):
            return RegimeResult(Regime.DECAYING, epsilon=eps)
        return RegimeResult(Regime.UNDETERMINED)
    # Boundary case: require both small-power conditions on the upper half of
    # the window, where "eventual" behaviour is visible.
    delta = 0.05
    upper = grid >= math.sqrt(top)
    if nondecreasing((log_g + delta * log_t)[upper]) and nonincreasing(
        (log_g - delta * log_t)[upper]
    ):
        return RegimeResult(Regime.CRITICAL)
    return RegimeResult(Regime.UNDETERMINED)


def _tabulated_probe_grid(psi: Tabulated, continuation: float = 2.0) -> np.ndarray:
    """Integer probe points covering the table and a short extrapolated reach."""
    end = int(psi.table_end)
    if end <= 2048:
        base = np.arange(1, end + 1)
    else:
        base = np.unique(np.round(np.geomspace(1, end, 1025)).astype(np.int64))
    beyond = np.unique(np.round(np.geomspace(end, max(continuation * end, 64), 65)).astype(np.int64))
    return np.unique(np.concatenate([base, beyond])).astype(float)


@dataclass(frozen=True)
class AlmostDecreasingResult:
    """Verdict of the weighted almost-decreasing test.

    member is True/False for analytic families; None means the tabulated
    grid test could not certify either way.  alpha is the certifying weight
    exponent and bound the measured constant K with
    t1**alpha * psi(t1) <= K * t2**alpha * psi(t2) for t1 > t2 on the grid.
    """

    member: Optional[bool]
    alpha: Optional[float] = None
    bound: Optional[float] = None


def _measured_almost_decreasing_bound(psi: PsiFunction, alpha: float, grid: np.ndarray) -> float:
    """sup over grid pairs t' >= t of (t'**a psi(t')) / (t**a psi(t))."""
    log_h = psi.log_value(grid) + alpha * np.log(grid)
    suffix_max = np.maximum.accumulate(log_h[::-1])[::-1]
    return float(np.exp(np.max(suffix_max - log_h)))


def check_almost_decreasing(psi: PsiFunction, rho: float) -> AlmostDecreasingResult:
    """Test whether t**alpha * psi(t) is almost decreasing for some alpha > 1/rho.

    This is the integrability condition guaranteeing that the associated
    kernel lies in L_q when rho is the conjugate exponent q'.  Analytic
    families are decided from their parameters; the certificate (alpha, K)
    is measured on a geometric grid.
    """
    if not (rho >= 1.0):
        raise ParameterError("check_almost_decreasing: requires rho >= 1")
    inv = 1.0 / rho

    if isinstance(psi, Tabulated):
        return _tabulated_almost_decreasing(psi, inv)

    r = psi.decay_exponent
    if isinstance(psi, (PowerLog, PowerLogLog)):
        # The log growth in the numerator must be paid for by the shift c.
        member = r > inv and psi.c > math.exp(2.0 * psi.alpha / (r - inv)) - 1.0
    else:
        member = r > inv
    if not member:
        return AlmostDecreasingResult(member=False)
    alpha = 0.5 * (inv + r)
    bound = _measured_almost_decreasing_bound(psi, alpha, _PROBE_GRID)
    return AlmostDecreasingResult(member=True, alpha=alpha, bound=bound)


def _tabulated_almost_decreasing(psi: Tabulated, inv: float) -> AlmostDecreasingResult:
    grid = _tabulated_probe_grid(psi)
    if psi.decay_exponent > inv + _EXPONENT_TOL:
        alpha = 0.5 * (inv + psi.decay_exponent)
        candidates = [alpha]
    else:
        candidates = list(inv + np.linspace(0.01, 1.0, 8))
    log_t = np.log(grid)
    for alpha in candidates:
        log_h = psi.log_value(grid) + alpha * log_t
        bound = _measured_almost_decreasing_bound(psi, alpha, grid)
        # Certify only when the weighted profile shows no growth trend at the
        # top of the window; a finite grid cannot refute membership, so
        # anything else stays undetermined.
        slope = np.polyfit(log_t, log_h, 1)[0]
        if slope <= 1.0e-6 and bound <= 1.0e6:
            return AlmostDecreasingResult(member=True, alpha=float(alpha), bound=bound)
    return AlmostDecreasingResult(member=None)


@dataclass(frozen=True)
class DoublingResult:
    """Verdict of the doubling-regularity test psi(t)/psi(2t) <= K."""

    bounded: bool
    bound: float


def check_doubling(psi: PsiFunction, t_max: float) -> DoublingResult:
    """Measure sup of psi(t)/psi(2t) over a geometric grid in [1, t_max].

    All four analytic families are doubling-regular; the returned bound is
    the measured supremum.  Tabulated profiles are declared unbounded when
    the ratio overflows or keeps growing across the top half of the window.
    """
    if not (t_max >= 2.0):
        raise ParameterError("check_doubling: requires t_max >= 2")
    grid = np.geomspace(1.0, t_max, 257)
    log_ratio = psi.log_value(grid) - psi.log_value(2.0 * grid)
    top = float(np.max(log_ratio))
    bound = math.exp(top) if top < 700.0 else math.inf
    if not isinstance(psi, Tabulated):
        return DoublingResult(bounded=True, bound=bound)
    half = grid.size // 2
    growing = np.max(log_ratio[half:]) > np.max(log_ratio[:half]) + math.log(2.0)
    return DoublingResult(bounded=math.isfinite(bound) and not growing, bound=bound)


class Convexity(Enum):
    """Sign pattern of second differences of 1/psi on an integer grid."""

    CONVEX_DOWN = "convex_down"  # second differences >= 0 (cup)
    CONVEX_UP = "convex_up"      # second differences <= 0 (cap)
    NEITHER = "neither"


def reciprocal_convexity(psi: PsiFunction, grid: int) -> Convexity:
    """Classify convexity of 1/psi on the uniform integer grid over [1, 1 + grid].

    Affine reciprocals (all second differences zero) report CONVEX_DOWN, by
    the 'all >= 0 first' rule.
    """
    if grid < 3:
        raise ParameterError("reciprocal_convexity: requires grid >= 3")
    nodes = np.arange(1, grid + 2, dtype=float)
    h = 1.0 / psi(nodes)
    d2 = h[:-2] - 2.0 * h[1:-1] + h[2:]
    tol = 1.0e-12 * max(1.0, float(np.max(np.abs(h))))
    if np.all(d2 >= -tol):
        return Convexity.CONVEX_DOWN
    if np.all(d2 <= tol):
        return Convexity.CONVEX_UP
    return Convexity.NEITHER
