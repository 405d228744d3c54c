"""Radius equations ``k(r) = majorant(r) - d_low`` for every Bohr-type sum.

Each functional class knows its majorant: the coefficient-bound version of
the left-hand side of its inequality. ``evaluate`` subtracts the distance
lower bound. The printed polylogarithm forms of five special cases live in
:class:`ClosedForm` and are evaluated independently of the series path so
the two can be compared.
"""

from __future__ import annotations

import dataclasses
import enum
import math
from dataclasses import dataclass
from typing import ClassVar, NamedTuple

from .classmodel import ClassParams, coef_bound
from .polylog import li
from .series import DEFAULT_TOL, Coef, SeriesSpec, distance_lower_bound, sum_series
from .summation import SeriesSum, TruncationError


class BracketError(ArithmeticError):
    """``k`` does not change sign on ``[0, 1 - eps]``."""


def _check_r(r: float) -> None:
    if not 0.0 <= r < 1.0:
        raise ValueError(f"r must lie in [0, 1), got {r}")


def _power_of(spec: SeriesSpec, lead: float, params: ClassParams, n: int,
              tol: float) -> SeriesSum:
    """``(lead + sum spec)^n`` with the propagated bound kept below ``tol``."""
    inner = lead + sum_series(spec, params, tol / n)
    out = inner.power(n)
    if out.tail_bound > tol:
        tighter = tol / (n * (abs(inner.value) + 1.0) ** (n - 1))
        out = (lead + sum_series(spec, params, tighter)).power(n)
    return out


class BohrFunctional:
    """Base class; subclasses are frozen dataclasses holding the variant parameters."""

    kind: ClassVar[str] = ""
    #: distance from 1 of the upper bracket end
    upper_eps: ClassVar[float] = 1e-9

    def majorant(self, params: ClassParams, r: float, tol: float,
                 scale: float = 1.0) -> SeriesSum:
        """Bound on the Bohr-type sum at ``|z| = r``.

        ``scale`` replaces every ``c_m`` by ``scale * c_m``; ``scale = 1``
        gives the sum for the extremal function that attains the bounds.
        """
        raise NotImplementedError

    def label(self) -> str:
        args = ", ".join(f"{fl.name}={getattr(self, fl.name)}" for fl in dataclasses.fields(self))
        return f"{self.kind}({args})" if args else self.kind


@dataclass(frozen=True)
class ImprovedBohr(BohrFunctional):
    """``r + sum c_m r^m + sum c_m^p r^(pm)``."""

    p: float = 2.0
    kind: ClassVar[str] = "improved"

    def __post_init__(self):
        if not self.p >= 1.0:
            raise ValueError(f"p must be >= 1, got {self.p}")

    def majorant(self, params, r, tol, scale=1.0):
        _check_r(r)
        linear = sum_series(SeriesSpec(q=r, scale=scale), params, tol / 2)
        powered = sum_series(
            SeriesSpec(q=r, coef=Coef.POWER, p=self.p, step=self.p, scale=scale),
            params, tol / 2)
        return r + linear + powered


@dataclass(frozen=True)
class SquaredCoef(BohrFunctional):
    """``r + sum c_m r^(2m)``; the squared coefficients are majorised linearly."""

    kind: ClassVar[str] = "squared"

    def majorant(self, params, r, tol, scale=1.0):
        _check_r(r)
        return r + sum_series(SeriesSpec(q=r, step=2.0, scale=scale), params, tol)


@dataclass(frozen=True)
class SelfPlusCoef(BohrFunctional):
    """``|f(z)| + sum (|a_m| + |b_m|) r^m``, bounded by ``r + 2 sum c_m r^m``."""

    kind: ClassVar[str] = "self"

    def majorant(self, params, r, tol, scale=1.0):
        _check_r(r)
        return r + sum_series(SeriesSpec(q=r, scale=scale), params, tol / 2).scaled(2.0)


@dataclass(frozen=True)
class AnalyticSplit(BohrFunctional):
    """``|z| + |h(z)| + sum |a_m| r^m``, bounded by ``2r + 2 sum c_m r^m``."""

    kind: ClassVar[str] = "analytic"

    def majorant(self, params, r, tol, scale=1.0):
        _check_r(r)
        return 2.0 * r + sum_series(SeriesSpec(q=r, scale=scale), params, tol / 2).scaled(2.0)


@dataclass(frozen=True)
class CoAnalyticSplit(BohrFunctional):
    """``|z| + |g(z)| + sum |b_m| r^m``, bounded by ``r + sum c_m r^m``."""

    kind: ClassVar[str] = "coanalytic"

    def majorant(self, params, r, tol, scale=1.0):
        _check_r(r)
        return r + sum_series(SeriesSpec(q=r, scale=scale), params, tol)


@dataclass(frozen=True)
class Rogosinski(BohrFunctional):
    """``|f(z^n)| + sum_{m>=N} (|a_m| + |b_m|) r^m``."""

    n: int = 1
    N: int = 2
    kind: ClassVar[str] = "rogosinski"

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise ValueError(f"n must be an integer >= 1, got {self.n}")
        if int(self.N) != self.N or self.N < 2:
            raise ValueError(f"N must be an integer >= 2, got {self.N}")

    def majorant(self, params, r, tol, scale=1.0):
        _check_r(r)
        head = sum_series(SeriesSpec(q=r, step=float(self.n), scale=scale), params, tol / 2)
        tail = sum_series(SeriesSpec(q=r, start=self.N, scale=scale), params, tol / 2)
        return r ** self.n + head + tail


@dataclass(frozen=True)
class RogosinskiSquared(BohrFunctional):
    """``|f(z)|^2 + sum_{m>=N} (|a_m| + |b_m|) r^m``."""

    N: int = 2
    kind: ClassVar[str] = "rogosinski-squared"

    def __post_init__(self):
        if int(self.N) != self.N or self.N < 2:
            raise ValueError(f"N must be an integer >= 2, got {self.N}")

    def majorant(self, params, r, tol, scale=1.0):
        _check_r(r)
        square = _power_of(SeriesSpec(q=r, scale=scale), r, params, 2, tol / 2)
        tail = sum_series(SeriesSpec(q=r, start=self.N, scale=scale), params, tol / 2)
        return square + tail


@dataclass(frozen=True)
class Refined(BohrFunctional):
    """Bohr-Rogosinski sum with the two squared-coefficient corrections.

    ``H(r)^n + sum_{m>=N} c_m r^m + mu sgn(t) (sum_{m=1}^t c_m^2) r^N/(1-r)
    + beta/(1-r) sum_{m>=t+1} c_m^2 r^(2m)`` with ``t = (N-1) // 2`` and
    ``H(r) = r + sum_{m>=2} c_m r^m``. Indices ``m = 1`` use ``c_1 = 2(gamma-lam)/gamma``.
    """

    n: int = 1
    N: int = 1
    mu: float = 1.0
    beta: float = 1.0
    kind: ClassVar[str] = "refined"
    upper_eps: ClassVar[float] = 1e-6

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise ValueError(f"n must be an integer >= 1, got {self.n}")
        if int(self.N) != self.N or self.N < 1:
            raise ValueError(f"N must be an integer >= 1, got {self.N}")
        if not (self.mu > 0.0 and self.beta > 0.0):
            raise ValueError("mu and beta must be > 0")

    @property
    def t(self) -> int:
        return (self.N - 1) // 2

    def f_term(self, params: ClassParams, r: float, scale: float = 1.0) -> float:
        """``sgn(t) (sum_{m=1}^t c_m^2) r^N / (1 - r)`` (without ``mu``)."""
        if self.t == 0:
            return 0.0
        squares = math.fsum((scale * coef_bound(params, m)) ** 2
                            for m in range(1, self.t + 1))
        return squares * r ** self.N / (1.0 - r)

    def g_term(self, params: ClassParams, r: float, tol: float,
               scale: float = 1.0) -> SeriesSum:
        """``(1 + r/(1-r)) sum_{m>=t+1} c_m^2 r^(2m)`` (without ``beta``)."""
        inv = 1.0 / (1.0 - r)
        spec = SeriesSpec(q=r, coef=Coef.SQUARE, step=2.0, start=self.t + 1, scale=scale)
        return sum_series(spec, params, tol * (1.0 - r)).scaled(inv)

    def majorant(self, params, r, tol, scale=1.0):
        _check_r(r)
        part = tol / 4
        head = _power_of(SeriesSpec(q=r, scale=scale), r, params, self.n, part)
        tail = sum_series(SeriesSpec(q=r, start=self.N, scale=scale), params, part)
        g = self.g_term(params, r, part / self.beta, scale).scaled(self.beta)
        return head + tail + self.mu * self.f_term(params, r, scale) + g


FUNCTIONAL_KINDS: dict[str, type[BohrFunctional]] = {
    cls.kind: cls for cls in (ImprovedBohr, SquaredCoef, SelfPlusCoef, AnalyticSplit,
                              CoAnalyticSplit, Rogosinski, RogosinskiSquared, Refined)
}


def evaluate(f: BohrFunctional, params: ClassParams, r: float,
             tol: float = DEFAULT_TOL) -> SeriesSum:
    """``k(r)`` for functional ``f``: majorant minus the distance lower bound."""
    _check_r(r)
    if not tol > 0.0:
        raise ValueError(f"tol must be > 0, got {tol}")
    return f.majorant(params, r, tol / 2) - distance_lower_bound(params, tol / 2)


def certified_value(f: BohrFunctional, params: ClassParams, r: float,
                    tol: float = 1e-3, tol_min: float = 1e-15) -> tuple[SeriesSum, int]:
    """Evaluate ``k(r)`` tightening ``tol`` until its sign is decided.

    Returns the last evaluation and the number of evaluations made; the sign
    is undecided only when ``|value| <= tail_bound`` at ``tol_min``.
    """
    evals = 0
    while True:
        evals += 1
        try:
            k = evaluate(f, params, r, tol)
        except TruncationError as exc:
            best = exc.best - distance_lower_bound(params, DEFAULT_TOL)
            if abs(best.value) > best.tail_bound:
                return best, evals
            raise
        if abs(k.value) > k.tail_bound or tol <= tol_min:
            return k, evals
        tol = max(tol / 100.0, tol_min)


def _sign(s: SeriesSum) -> int:
    if s.value > s.tail_bound:
        return 1
    if s.value < -s.tail_bound:
        return -1
    return 0


class EndpointSigns(NamedTuple):
    sign_at_0: int
    sign_near_1: int
    upper: float
    at_0: SeriesSum
    near_1: SeriesSum


def endpoint_signs(f: BohrFunctional, params: ClassParams) -> EndpointSigns:
    """Certify ``k(0) < 0 < k(1 - eps)``, the bracket for root finding."""
    upper = 1.0 - f.upper_eps
    at0, _ = certified_value(f, params, 0.0)
    near1, _ = certified_value(f, params, upper)
    out = EndpointSigns(_sign(at0), _sign(near1), upper, at0, near1)
    if out.sign_at_0 >= 0 or out.sign_near_1 <= 0:
        raise BracketError(
            f"{f.label()} at {params}: k(0)={at0.value:.3e}, "
            f"k({upper})={near1.value:.3e}; no certified sign change")
    return out


def _one_minus_inv_log(x: float) -> float:
    """``(1 - 1/x) log(1 - x)``, continuous at ``x = 0`` where it equals 1."""
    if x < 1e-3:
        return 1.0 - math.fsum(x ** k / (k * (k + 1)) for k in range(1, 9))
    return (1.0 - 1.0 / x) * math.log1p(-x)


_PI2 = math.pi ** 2
_LOG2 = math.log(2.0)


class ClosedForm(enum.Enum):
    """Printed polylogarithm equations for five parameter choices.

    The value is ``(name, (gamma, delta, lam), printed root)``.
    """

    COR_P2_HALF = ("CorP2_half", (1.0, 1.0, 0.5), 0.652442)
    COR_P2_ZERO = ("CorP2_zero", (1.0, 1.0, 0.0), 0.480812)
    THM_SQUARED = ("ThmSquared", (0.5, 1.0, 0.25), 0.676479)
    COR_SELF = ("CorSelf", (0.5, 1.0, 0.0), 0.521468)
    COR_CO_ANALYTIC = ("CorCoAnalytic", (0.5, 1.0, 0.0), 0.594279)

    @property
    def tag(self) -> str:
        return self.value[0]

    @property
    def params(self) -> ClassParams:
        return ClassParams(*self.value[1])

    @property
    def printed_root(self) -> float:
        return self.value[2]

    @property
    def rhs(self) -> float:
        """Printed right-hand constant (the boundary-distance value)."""
        return {
            "CorP2_half": _PI2 / 12.0,
            "CorP2_zero": _PI2 / 6.0 - 1.0,
            "ThmSquared": 4.0 + _PI2 / 6.0 - 4.0 * _LOG2,
            "CorSelf": _PI2 / 3.0 - 8.0 * _LOG2,
            "CorCoAnalytic": 3.0 + _PI2 / 3.0 - 8.0 * _LOG2,
        }[self.tag]

    @property
    def functional(self) -> BohrFunctional:
        """Series functional the printed equation claims to equal."""
        return {
            "CorP2_half": ImprovedBohr(2.0),
            "CorP2_zero": ImprovedBohr(2.0),
            "ThmSquared": SquaredCoef(),
            "CorSelf": SelfPlusCoef(),
            "CorCoAnalytic": CoAnalyticSplit(),
        }[self.tag]

    @classmethod
    def from_tag(cls, tag: str) -> ClosedForm:
        for cf in cls:
            if cf.tag.lower() == tag.lower() or cf.name.lower() == tag.lower():
                return cf
        raise ValueError(f"unknown closed form {tag!r}")


def evaluate_closed_form(cf: ClosedForm, r: float, tol: float = 1e-14) -> float:
    """Printed left-hand side minus printed right-hand side at ``r``.

    ``r = 0`` returns the analytic limit.
    """
    _check_r(r)
    tag = cf.tag
    if tag == "CorP2_half":
        lhs = -r * r + li(2, r, tol).value + li(4, r * r, tol).value
    elif tag == "CorP2_zero":
        lhs = -r - 4.0 * r * r + 2.0 * li(2, r, tol).value + 4.0 * li(4, r * r, tol).value
    elif tag == "ThmSquared":
        x = r * r
        # (1 - 2/x) log(1 - x) = 2 (1 - 1/x) log(1 - x) - log(1 - x)
        lhs = (r - 2.0 * x + 2.0 * _one_minus_inv_log(x) - math.log1p(-x)
               + 2.0 * li(2, x, tol).value)
    elif tag == "CorSelf":
        lhs = -3.0 * r + 8.0 * li(2, r, tol).value + 8.0 * _one_minus_inv_log(r) - 11.0
    else:
        lhs = -r + 4.0 * li(2, r, tol).value - 4.0 + 4.0 * _one_minus_inv_log(r)
    return lhs - cf.rhs
