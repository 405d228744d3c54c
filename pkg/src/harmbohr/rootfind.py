"""Bisection for the unique zero in ``(0, 1)`` of an increasing radius equation."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .classmodel import ClassParams
from .functionals import (BohrFunctional, BracketError, ClosedForm, certified_value,
                          endpoint_signs, evaluate, evaluate_closed_form)

MAX_ITER = 1000


class ClosedFormInconsistency(BracketError):
    """A printed equation has no sign change on ``(0, 1)``."""


@dataclass(frozen=True)
class RootResult:
    """Located radius with its certificate.

    The functional is negative at ``lower`` and positive at ``upper`` (or
    exactly indeterminate at ``radius`` when ``bracket_width == 0``).
    """

    radius: float
    residual: float
    bracket_width: float
    evaluations: int
    tail_at_root: float
    lower: float
    upper: float

    @classmethod
    def at(cls, radius: float, residual: float = math.nan, width: float = 0.0) -> RootResult:
        """Wrap an externally given radius (e.g. a printed constant)."""
        return cls(radius, residual, width, 0, 0.0, radius - width / 2, radius + width / 2)


def _bisect(sign_at: Callable[[float], tuple[int, int]], lo: float, hi: float,
            xtol: float) -> tuple[float, float, int]:
    evals = 0
    for _ in range(MAX_ITER):
        if hi - lo <= xtol:
            return lo, hi, evals
        mid = 0.5 * (lo + hi)
        s, used = sign_at(mid)
        evals += used
        if s == 0:
            return mid, mid, evals
        if s < 0:
            lo = mid
        else:
            hi = mid
    raise ArithmeticError(f"bisection did not converge in {MAX_ITER} steps")


def find_radius(f: BohrFunctional, params: ClassParams, xtol: float = 1e-10,
                ftol: float = 1e-10) -> RootResult:
    """Radius where ``evaluate(f, params, r)`` crosses zero.

    Each midpoint is evaluated at ``ftol`` and re-evaluated with a tighter
    series tolerance while ``|k| <= tail``, so truncation noise never flips
    the bracket.
    """
    if not (xtol > 0.0 and ftol > 0.0):
        raise ValueError("xtol and ftol must be > 0")
    ends = endpoint_signs(f, params)

    def sign_at(r):
        k, used = certified_value(f, params, r, ftol)
        s = 1 if k.value > k.tail_bound else (-1 if k.value < -k.tail_bound else 0)
        return s, used

    lo, hi, evals = _bisect(sign_at, 0.0, ends.upper, xtol)
    radius = 0.5 * (lo + hi)
    k = evaluate(f, params, radius, ftol)
    return RootResult(radius, k.value, hi - lo, evals + 3, k.tail_bound, lo, hi)


def find_closed_form_root(cf: ClosedForm, xtol: float = 1e-10) -> RootResult:
    """Zero of the printed equation ``cf`` on ``(0, 1)``."""
    if not xtol > 0.0:
        raise ValueError("xtol must be > 0")
    lo, hi = 0.0, 1.0 - 1e-9
    f_lo, f_hi = evaluate_closed_form(cf, lo), evaluate_closed_form(cf, hi)
    if not (f_lo < 0.0 < f_hi):
        raise ClosedFormInconsistency(
            f"{cf.tag}: values {f_lo:.3e} at 0 and {f_hi:.3e} near 1 do not bracket a root")

    def sign_at(r):
        v = evaluate_closed_form(cf, r)
        return (0 if v == 0.0 else (1 if v > 0.0 else -1)), 1

    lo, hi, evals = _bisect(sign_at, lo, hi, xtol)
    radius = 0.5 * (lo + hi)
    return RootResult(radius, evaluate_closed_form(cf, radius), hi - lo, evals + 3,
                      1e-14, lo, hi)
