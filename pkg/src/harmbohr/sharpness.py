"""Extremal functions, equality checks at the radius, and a membership probe.

Sharpness is checked at the coefficient level: the extremal coefficients
are substituted into the majorant and compared with the distance lower
bound, with no sampling of ``|f|`` on circles.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .classmodel import ClassParams, coef_bound, coef_bounds
from .functionals import BohrFunctional, evaluate
from .rootfind import RootResult
from .series import DEFAULT_TOL, distance_lower_bound
from .summation import SeriesSum


class Scale(enum.Enum):
    HALF = 0.5
    FULL = 1.0


class SignPattern(enum.Enum):
    PLUS = "plus"
    ALTERNATING = "alternating"


class Part(enum.Enum):
    ANALYTIC = "analytic"
    CO_ANALYTIC = "co-analytic"


@dataclass(frozen=True)
class ExtremalFunction:
    """``z + sum_{m>=2} s_m * scale * c_m * w^m`` with ``w = z`` or ``conj(z)``.

    ``HALF`` gives the coefficients ``2(gamma - lam)/(m^2[...])`` and ``FULL``
    gives ``4(gamma - lam)/(m^2[...])``; ``s_m`` is 1 or ``(-1)^(m-1)``.
    """

    params: ClassParams
    scale: Scale = Scale.FULL
    sign_pattern: SignPattern = SignPattern.ALTERNATING
    part: Part = Part.ANALYTIC

    def coefficients(self, M: int) -> np.ndarray:
        """Signed coefficients for ``m = 1..M``; index 0 holds the leading 1."""
        m = np.arange(1, M + 1, dtype=float)
        out = self.scale.value * coef_bounds(self.params, m)
        if self.sign_pattern is SignPattern.ALTERNATING:
            out = out * np.where(m % 2 == 1, 1.0, -1.0)
        out[0] = 1.0
        return out

    def coefficient(self, m: int) -> float:
        """Signed coefficient of ``z^m`` (or ``conj(z)^m``)."""
        if m == 1:
            return 1.0
        sign = -1.0 if (self.sign_pattern is SignPattern.ALTERNATING and m % 2 == 0) else 1.0
        return sign * self.scale.value * coef_bound(self.params, m)

    def h_coeffs(self, M: int) -> np.ndarray:
        c = self.coefficients(M)
        if self.part is Part.CO_ANALYTIC:
            c[1:] = 0.0
        return c

    def g_coeffs(self, M: int) -> np.ndarray:
        c = self.coefficients(M)
        c[0] = 0.0
        if self.part is Part.ANALYTIC:
            c[1:] = 0.0
        return c

    def __call__(self, z, M: int = 2000):
        """Truncated value ``h(z) + conj(g(z))``."""
        z = np.asarray(z, dtype=complex)
        powers = z[..., None] ** np.arange(1, M + 1)
        h = powers @ self.h_coeffs(M)
        g = powers @ self.g_coeffs(M)
        return h + np.conj(g)

    def boundary_distance(self, n_angles: int = 720, rho: float = 1.0,
                          M: int = 20000) -> float:
        """Minimum of ``|f|`` on the circle ``|z| = rho`` (sampled estimate).

        The coefficient series converge absolutely on the closed disk, so
        ``rho = 1`` is allowed. Only used as an independent check.
        """
        theta = np.linspace(0.0, 2.0 * np.pi, n_angles, endpoint=False)
        return float(np.min(np.abs(self(rho * np.exp(1j * theta), M))))


def bohr_sum_at(f: BohrFunctional, ext: ExtremalFunction, r: float,
                tol: float = DEFAULT_TOL) -> SeriesSum:
    """Bohr-type sum of ``f`` for the extremal function ``ext`` at ``|z| = r``.

    The witness coefficient magnitudes replace ``c_m`` in the majorant, so a
    ``FULL`` witness reproduces ``evaluate(f, ...) + d_low`` exactly and a
    ``HALF`` witness gives a strictly smaller sum for ``r > 0``.
    """
    return f.majorant(ext.params, r, tol, scale=ext.scale.value)


class Verdict(enum.Enum):
    SHARP_CONFIRMED = "SharpConfirmed"
    GAP_DETECTED = "GapDetected"


@dataclass(frozen=True)
class SharpnessReport:
    functional: str
    radius: float
    value_at_extremal: float
    d_low: float
    gap: float
    allowed_gap: float
    margin_below: float
    margin_above: float
    verdict: Verdict

    @property
    def confirmed(self) -> bool:
        return self.verdict is Verdict.SHARP_CONFIRMED


def verify_sharpness(f: BohrFunctional, params: ClassParams, root: RootResult,
                     tol: float = DEFAULT_TOL, rel_step: float = 1e-3,
                     gap_tol: float = 1e-8) -> SharpnessReport:
    """Check that the full extremal function attains equality at ``root.radius``.

    Confirmed when ``|sum - d_low| <= gap_tol + 10 * (tails)`` and the sum
    minus ``d_low`` is negative at ``radius*(1 - rel_step)`` and positive at
    ``radius*(1 + rel_step)`` (the latter is capped just below 1).
    """
    ext = ExtremalFunction(params, Scale.FULL, SignPattern.ALTERNATING, Part.ANALYTIC)
    d = distance_lower_bound(params, tol / 2)
    r = root.radius
    at = bohr_sum_at(f, ext, r, tol / 2)
    gap = abs(at.value - d.value)
    allowed = gap_tol + 10.0 * (at.tail_bound + d.tail_bound)
    below = bohr_sum_at(f, ext, r * (1.0 - rel_step), tol / 2) - d
    r_above = min(r * (1.0 + rel_step), 0.5 * (r + 1.0))
    above = bohr_sum_at(f, ext, r_above, tol / 2) - d
    ok = gap <= allowed and below.upper < 0.0 < above.lower
    return SharpnessReport(
        functional=f.label(), radius=r, value_at_extremal=at.value, d_low=d.value,
        gap=gap, allowed_gap=allowed, margin_below=below.value,
        margin_above=above.value,
        verdict=Verdict.SHARP_CONFIRMED if ok else Verdict.GAP_DETECTED)


def default_grid() -> np.ndarray:
    """24 angles on each circle ``|z| = 0.1, ..., 0.9, 0.99``."""
    radii = np.array([0.1 * k for k in range(1, 10)] + [0.99])
    theta = 2.0 * np.pi * np.arange(24) / 24.0
    return (radii[:, None] * np.exp(1j * theta)[None, :]).ravel()


@dataclass(frozen=True)
class MembershipReport:
    """Result of probing the defining inequality on a finite grid.

    ``slack = Re(L[h] - lam) - |L[g]|`` where
    ``L[u] = gamma u' + delta z u'' + (delta - gamma)/2 z^2 u'''``.
    A grid point is a violation only when ``slack + tail < 0``; points with
    ``|slack| <= tail`` are counted as undecided. Passing the probe does not
    certify membership.
    """

    min_slack: float
    argmin: complex
    max_tail: float
    violations: tuple[complex, ...]
    undecided: int
    points: int
    certifies_membership: bool = field(default=False, init=False)

    @property
    def violated(self) -> bool:
        return bool(self.violations)


Coeffs = Callable[[int], float] | Sequence[float] | np.ndarray


def _operator_weights(params: ClassParams, m: np.ndarray) -> np.ndarray:
    # L[z^m] = m^2 [2 gamma + (delta - gamma)(m - 1)] / 2 * z^(m-1)
    return params.denominator(m) / 2.0


def _materialise(coeffs: Coeffs, M: int) -> tuple[np.ndarray, bool]:
    if callable(coeffs):
        return np.array([coeffs(m) for m in range(1, M + 2)], dtype=complex), True
    arr = np.asarray(coeffs, dtype=complex)
    return arr, False


def class_membership_check(h_coeffs: Coeffs, g_coeffs: Coeffs, params: ClassParams,
                           grid=None, M: int = 100) -> MembershipReport:
    """Evaluate both sides of the defining inequality on ``grid``.

    Coefficient sequences start at ``m = 1``. A callable ``m -> coefficient``
    is truncated after ``M`` terms and its remainder bounded geometrically by
    ``|L_{M+1}| |z|^M / (1 - |z|)``, which assumes the transformed coefficients
    do not grow beyond ``M``. Explicit sequences are treated as polynomials.
    """
    if M < 3:
        raise ValueError("truncation M must be >= 3")
    z = np.atleast_1d(np.asarray(default_grid() if grid is None else grid, dtype=complex))
    if np.any(np.abs(z) > 0.99 + 1e-12):
        raise ValueError("grid points must satisfy |z| <= 0.99")
    a, a_inf = _materialise(h_coeffs, M)
    b, b_inf = _materialise(g_coeffs, M)

    def side(coef, infinite):
        n = M if infinite else len(coef)
        m = np.arange(1, n + 1, dtype=float)
        w = coef[:n] * _operator_weights(params, m)
        val = (z[:, None] ** (m - 1.0)[None, :]) @ w if n else np.zeros_like(z)
        if infinite:
            nxt = abs(coef[M]) * _operator_weights(params, float(M + 1))
            tail = nxt * np.abs(z) ** M / (1.0 - np.abs(z))
        else:
            tail = np.zeros(z.shape)
        return val, tail

    lh, th = side(a, a_inf)
    lg, tg = side(b, b_inf)
    slack = (lh.real - params.lam) - np.abs(lg)
    tail = th + tg
    i = int(np.argmin(slack))
    violations = tuple(complex(v) for v in z[slack + tail < 0.0])
    undecided = int(np.sum(np.abs(slack) <= tail))
    return MembershipReport(float(slack[i]), complex(z[i]), float(np.max(tail)),
                            violations, undecided, int(z.size))
