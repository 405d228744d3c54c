"""Table-driven evaluation of the coefficient series behind every radius.

Each radius equation sums some power of the bound ``c_m`` against ``q^(step*m)``
from some start index, with either constant or alternating sign. A
:class:`SeriesSpec` names one such series and :func:`sum_series` evaluates it
with a guaranteed remainder bound; :func:`brute_force_sum` is the plain loop
used to cross-check it.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .classmodel import ClassParams, coef_bound, coef_bounds, coef_tail_majorant
from .summation import MAX_TERMS, SeriesSum, sum_alternating, sum_positive

DEFAULT_TOL = 1e-12


class Coef(enum.Enum):
    """Which function of ``c_m`` multiplies ``q^(step*m)``."""

    BOUND = "c"
    HALF = "c/2"
    POWER = "c^p"
    SQUARE = "c^2"


class Sign(enum.Enum):
    PLUS = "+"
    ALTERNATING = "(-1)^(m-1)"


@dataclass(frozen=True)
class SeriesSpec:
    """``sum_{m >= start} sign(m) * (scale * f(c_m))^k * q^(step*m)``.

    ``scale`` multiplies ``c_m`` before the power is taken; it is how an
    extremal function with coefficients ``scale * c_m`` is substituted into
    a majorant. ``q = 1`` is allowed (the boundary sums are convergent).
    """

    q: float
    coef: Coef = Coef.BOUND
    step: float = 1.0
    start: int = 2
    sign: Sign = Sign.PLUS
    p: float = 1.0
    scale: float = 1.0

    def __post_init__(self):
        if self.start < 1 or int(self.start) != self.start:
            raise ValueError(f"start must be an integer >= 1, got {self.start}")
        if not 0.0 <= self.q <= 1.0:
            raise ValueError(f"q must lie in [0, 1], got {self.q}")
        if not self.step > 0.0:
            raise ValueError("exponent step must be > 0")
        if not self.p >= 1.0:
            raise ValueError(f"p must be >= 1, got {self.p}")
        if not self.scale > 0.0:
            raise ValueError("scale must be > 0")

    @property
    def power(self) -> float:
        return {Coef.BOUND: 1.0, Coef.HALF: 1.0, Coef.POWER: self.p,
                Coef.SQUARE: 2.0}[self.coef]

    @property
    def factor(self) -> float:
        return self.scale * (0.5 if self.coef is Coef.HALF else 1.0)

    def weights(self, params: ClassParams, m: np.ndarray) -> np.ndarray:
        return (self.factor * coef_bounds(params, m)) ** self.power

    def magnitudes(self, params: ClassParams, m: np.ndarray) -> np.ndarray:
        return self.weights(params, m) * self.q ** (self.step * m)


def _positive_tail(spec: SeriesSpec, params: ClassParams):
    k = spec.power
    s = spec.factor
    qs = spec.q ** spec.step

    def tail(M: int) -> float:
        c_next = coef_bound(params, M + 1)
        w_next = (s * c_next) ** k
        lead = spec.q ** (spec.step * (M + 1))
        # w_m <= (s c_{M+1})^(k-1) * s c_m for m > M
        bound = lead * s ** k * c_next ** (k - 1.0) * coef_tail_majorant(params, M)
        if qs < 1.0:
            bound = min(bound, w_next * lead / (1.0 - qs))
        return bound

    return tail


def sum_series(spec: SeriesSpec, params: ClassParams, tol: float = DEFAULT_TOL,
               max_terms: int = MAX_TERMS) -> SeriesSum:
    """Evaluate ``spec`` so that the remainder is at most ``tol``.

    Raises :class:`~harmbohr.summation.TruncationError` when ``max_terms``
    terms are not enough.
    """
    if spec.q == 0.0:
        return SeriesSum(0.0, 0.0, 0)

    def terms(m):
        return spec.magnitudes(params, m)

    if spec.sign is Sign.ALTERNATING:
        return sum_alternating(terms, spec.start, tol, max_terms)
    return sum_positive(terms, spec.start, _positive_tail(spec, params), tol, max_terms)


def brute_force_sum(spec: SeriesSpec, params: ClassParams, M: int) -> float:
    """Plain partial sum of the first ``M`` terms, one scalar at a time."""
    if M < 1:
        raise ValueError("M must be >= 1")
    k = spec.power
    s = spec.factor
    out = []
    for m in range(spec.start, spec.start + M):
        term = (s * coef_bound(params, m)) ** k * spec.q ** (spec.step * m)
        if spec.sign is Sign.ALTERNATING and m % 2 == 0:
            term = -term
        out.append(term)
    return math.fsum(out)


@lru_cache(maxsize=256)
def distance_lower_bound(params: ClassParams, tol: float = DEFAULT_TOL) -> SeriesSum:
    """Lower bound ``1 + sum_{m>=2} (-1)^(m-1) c_m`` on the boundary distance.

    It is attained by the alternating extremal function, so it is the right
    hand side of every Bohr-type inequality here.
    """
    if not tol > 0.0:
        raise ValueError(f"tol must be > 0, got {tol}")
    spec = SeriesSpec(q=1.0, sign=Sign.ALTERNATING)
    return 1.0 + sum_series(spec, params, tol)


def growth_bounds(params: ClassParams, r: float,
                  tol: float = DEFAULT_TOL) -> tuple[SeriesSum, SeriesSum]:
    """Envelope ``r + sum (-1)^(m-1) c_m r^m <= |f(z)| <= r + sum c_m r^m``."""
    if not 0.0 <= r < 1.0:
        raise ValueError(f"r must lie in [0, 1), got {r}")
    if not tol > 0.0:
        raise ValueError(f"tol must be > 0, got {tol}")
    lower = r + sum_series(SeriesSpec(q=r, sign=Sign.ALTERNATING), params, tol)
    upper = r + sum_series(SeriesSpec(q=r), params, tol)
    return lower, upper
