"""Truncated summation of monotone series with rigorous remainder bounds.

Two kernels are provided. Both take a vectorised magnitude function
``a(m)`` that must be positive, nonincreasing and convex in ``m`` from the
start index on; every series in this package has that shape.

* one-signed sums ``sum a(m)`` stop when a caller supplied remainder bound
  drops below the tolerance;
* alternating sums ``sum (-1)**(m-1) a(m)`` use the bracketing of the
  remainder between ``a(M+1)/2`` and ``(a(M+1) + a(M+1) - a(M+2))/2``, which
  holds for convex magnitudes. The midpoint is reported, so the tail bound is
  a quarter of the first omitted difference.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

#: Hard cap on the number of terms a single summation may use.
MAX_TERMS = 1_000_000

#: Rounding in binary double limits useful tolerances to about this value.
TOL_FLOOR = 1e-13

_FIRST_CHUNK = 64


@dataclass(frozen=True)
class SeriesSum:
    """A truncated sum together with a bound on what was left out.

    The exact infinite sum lies in ``[value - tail_bound, value + tail_bound]``.
    """

    value: float
    tail_bound: float
    terms_used: int

    def __post_init__(self):
        if not self.tail_bound >= 0.0:
            raise ValueError(f"tail_bound must be >= 0, got {self.tail_bound}")
        if self.terms_used < 0:
            raise ValueError("terms_used must be >= 0")

    @property
    def lower(self) -> float:
        return self.value - self.tail_bound

    @property
    def upper(self) -> float:
        return self.value + self.tail_bound

    def contains(self, x: float, slack: float = 0.0) -> bool:
        return abs(x - self.value) <= self.tail_bound + slack

    def __add__(self, other: SeriesSum | float) -> SeriesSum:
        if isinstance(other, SeriesSum):
            return SeriesSum(self.value + other.value,
                             self.tail_bound + other.tail_bound,
                             self.terms_used + other.terms_used)
        return SeriesSum(self.value + float(other), self.tail_bound, self.terms_used)

    __radd__ = __add__

    def __sub__(self, other: SeriesSum | float) -> SeriesSum:
        if isinstance(other, SeriesSum):
            return SeriesSum(self.value - other.value,
                             self.tail_bound + other.tail_bound,
                             self.terms_used + other.terms_used)
        return SeriesSum(self.value - float(other), self.tail_bound, self.terms_used)

    def __neg__(self) -> SeriesSum:
        return SeriesSum(-self.value, self.tail_bound, self.terms_used)

    def scaled(self, factor: float) -> SeriesSum:
        return SeriesSum(factor * self.value, abs(factor) * self.tail_bound,
                         self.terms_used)

    def power(self, n: int) -> SeriesSum:
        """``value**n`` for a nonnegative quantity, with the propagated bound.

        Uses ``|x**n - y**n| <= n (|y| + t)**(n-1) t`` for ``|x - y| <= t``.
        """
        if n < 1:
            raise ValueError("n must be >= 1")
        if n == 1:
            return self
        t = self.tail_bound
        bound = n * (abs(self.value) + t) ** (n - 1) * t
        return SeriesSum(self.value ** n, bound, self.terms_used)


class TruncationError(ArithmeticError):
    """The requested tolerance was not reached within the term cap."""

    def __init__(self, best: SeriesSum, tol: float):
        self.best = best
        self.tol = tol
        super().__init__(
            f"tail bound {best.tail_bound:.3e} > tol {tol:.3e} after "
            f"{best.terms_used} terms (best value {best.value!r})")


def _check_tol(tol: float) -> None:
    if not tol > 0.0:
        raise ValueError(f"tol must be > 0, got {tol}")


def sum_positive(
    terms: Callable[[np.ndarray], np.ndarray],
    start: int,
    tail: Callable[[int], float],
    tol: float,
    max_terms: int = MAX_TERMS,
) -> SeriesSum:
    """Sum ``terms(m)`` for ``m >= start`` until ``tail(M) <= tol``.

    ``tail(M)`` must bound ``sum_{m > M} terms(m)``. The reported value is the
    plain partial sum, so every later partial sum stays inside the interval.
    """
    _check_tol(tol)
    partials: list[float] = []
    m0 = start
    chunk = _FIRST_CHUNK
    used = 0
    while True:
        chunk = min(chunk, max_terms - used)
        m = np.arange(m0, m0 + chunk, dtype=float)
        partials.append(float(np.sum(terms(m))))
        used += chunk
        last = m0 + chunk - 1
        bound = float(tail(last))
        if bound <= tol:
            return SeriesSum(math.fsum(partials), bound, used)
        if used >= max_terms:
            raise TruncationError(SeriesSum(math.fsum(partials), bound, used), tol)
        m0 = last + 1
        chunk *= 2


def sum_alternating(
    terms: Callable[[np.ndarray], np.ndarray],
    start: int,
    tol: float,
    max_terms: int = MAX_TERMS,
) -> SeriesSum:
    """Sum ``(-1)**(m-1) * terms(m)`` for ``m >= start``.

    ``terms`` must be positive, nonincreasing and convex. With ``a = terms(M+1)``
    and ``d = a - terms(M+2)`` the remainder is ``(-1)**M * T`` where
    ``a/2 <= T <= (a + d)/2``; the midpoint is returned with bound ``d/4``.
    """
    _check_tol(tol)
    partials: list[float] = []
    m0 = start
    chunk = _FIRST_CHUNK
    used = 0
    while True:
        chunk = min(chunk, max_terms - used)
        m = np.arange(m0, m0 + chunk, dtype=float)
        signs = np.where(m.astype(np.int64) % 2 == 1, 1.0, -1.0)
        partials.append(float(np.sum(signs * terms(m))))
        used += chunk
        last = m0 + chunk - 1
        a1, a2 = terms(np.array([last + 1.0, last + 2.0]))
        diff = max(float(a1 - a2), 0.0)
        sign = 1.0 if last % 2 == 0 else -1.0
        value = math.fsum(partials + [sign * (0.5 * a1 + 0.25 * diff)])
        bound = 0.25 * diff
        if bound <= tol:
            return SeriesSum(value, bound, used)
        if used >= max_terms:
            raise TruncationError(SeriesSum(value, bound, used), tol)
        m0 = last + 1
        chunk *= 2
