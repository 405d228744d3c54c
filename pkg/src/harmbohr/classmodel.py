"""Parameters of the harmonic class and its sharp coefficient bounds.

A member ``f = h + conj(g)`` with ``h(z) = z + sum a_m z^m`` and
``g(z) = sum b_m z^m`` satisfies, for every ``m >= 2``,

    |a_m| + |b_m| <= c_m = 4 (gamma - lam) / (m^2 [2 gamma + (delta - gamma)(m - 1)])

and ``|b_m| <= c_m / 2``. Everything else in the package is built from ``c_m``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ClassParams:
    """Admissible triple ``0 <= lam < gamma <= delta``."""

    gamma: float
    delta: float
    lam: float

    def __post_init__(self):
        g, d, l = self.gamma, self.delta, self.lam
        if not all(math.isfinite(v) for v in (g, d, l)):
            raise ValueError(f"parameters must be finite, got {self}")
        if not 0.0 <= l < g <= d:
            raise ValueError(
                f"need 0 <= lam < gamma <= delta, got gamma={g}, delta={d}, lam={l}")

    @property
    def excess(self) -> float:
        """``gamma - lam``, the factor every bound is proportional to."""
        return self.gamma - self.lam

    def denominator(self, m):
        """``m^2 [2 gamma + (delta - gamma)(m - 1)]``; works on arrays."""
        return m * m * (2.0 * self.gamma + (self.delta - self.gamma) * (m - 1.0))

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.gamma, self.delta, self.lam)


def coef_bound(params: ClassParams, m: int) -> float:
    """Sharp bound ``c_m`` on ``|a_m| + |b_m|``.

    ``m = 1`` is accepted and gives ``2 (gamma - lam) / gamma``; the refined
    Bohr sums use that value even though ``a_1 = 1`` for every member.
    """
    if isinstance(m, bool) or int(m) != m or m < 1:
        raise ValueError(f"m must be an integer >= 1, got {m!r}")
    return 4.0 * params.excess / params.denominator(float(m))


def coef_bounds(params: ClassParams, m: np.ndarray) -> np.ndarray:
    """Vectorised :func:`coef_bound` for a float array of indices ``>= 1``."""
    m = np.asarray(m, dtype=float)
    return 4.0 * params.excess / params.denominator(m)


def co_analytic_bound(params: ClassParams, m: int) -> float:
    """Sharp bound ``|b_m| <= c_m / 2`` on the co-analytic coefficients."""
    if isinstance(m, bool) or int(m) != m or m < 2:
        raise ValueError(f"m must be an integer >= 2, got {m!r}")
    return 0.5 * coef_bound(params, m)


def coef_tail_majorant(params: ClassParams, M: int) -> float:
    """Upper bound on ``sum_{m > M} c_m`` for ``M >= 1``.

    Two integral comparisons: ``c_m <= 2 (gamma - lam) / (gamma m^2)`` always,
    and ``c_m <= 4 (gamma - lam) / ((delta - gamma)(m - 1)^3)`` when
    ``delta > gamma``. The smaller one wins.
    """
    if M < 1:
        raise ValueError("M must be >= 1")
    bound = 2.0 * params.excess / (params.gamma * M)
    spread = params.delta - params.gamma
    if spread > 0.0 and M >= 2:
        bound = min(bound, 2.0 * params.excess / (spread * (M - 1.0) ** 2))
    return bound
