"""Real polylogarithms ``Li_n(x) = sum_{m>=1} x^m / m^n`` on ``[-1, 1]``.

Only the orders that appear in the radius equations are supported
(``n = 1..4``). Every value comes back as a :class:`SeriesSum`.
"""

from __future__ import annotations

import math
from typing import Literal

import numpy as np

from .summation import SeriesSum, sum_alternating, sum_positive

PolylogOrder = Literal[1, 2, 3, 4]

ZETA3 = 1.2020569031595942853997381615114

# direct summation is used for |x| <= this threshold
_DIRECT_LIMIT = 0.99

# zeta(n - k) for k = 0, 1, ...; zeta(1) is never used (log term instead)
_ZETA_NONPOS = {0: -0.5, 1: -1.0 / 12.0, 2: 0.0, 3: 1.0 / 120.0, 4: 0.0,
                5: -1.0 / 252.0, 6: 0.0, 7: 1.0 / 240.0, 8: 0.0, 9: -1.0 / 132.0}
_ZETA_POS = {2: math.pi ** 2 / 6.0, 3: ZETA3, 4: math.pi ** 4 / 90.0}


def _zeta(s: int) -> float:
    return _ZETA_POS[s] if s >= 2 else _ZETA_NONPOS[-s]


def _check(n: int, x: float, tol: float) -> None:
    if n not in (1, 2, 3, 4):
        raise ValueError(f"polylog order must be in 1..4, got {n!r}")
    if not -1.0 <= x <= 1.0:
        raise ValueError(f"x must lie in [-1, 1], got {x!r}")
    if n == 1 and x == 1.0:
        raise ValueError("Li_1(1) diverges")
    if not tol > 0.0:
        raise ValueError(f"tol must be > 0, got {tol}")


def _direct(n: int, x: float, tol: float) -> SeriesSum:
    if x < 0.0:
        ax = -x
        # sum (-1)^(m-1) |x|^m / m^n = -Li_n(x)
        return -sum_alternating(lambda m: ax ** m / m ** n, 1, tol)

    def tail(M: int) -> float:
        return x ** (M + 1) / ((M + 1) ** n * (1.0 - x))

    return sum_positive(lambda m: x ** m / m ** n, 1, tail, tol)


def _near_one(n: int, x: float) -> SeriesSum:
    """Expansion of ``Li_n(e^mu)`` in powers of ``mu = log x``, for n = 3, 4."""
    if x == 1.0:
        return SeriesSum(_zeta(n), 0.0, 0)
    mu = math.log(x)
    harmonic = math.fsum(1.0 / k for k in range(1, n))
    terms = [mu ** (n - 1) / math.factorial(n - 1) * (harmonic - math.log(-mu))]
    last = n + max(_ZETA_NONPOS)
    for k in range(0, last + 1):
        if k == n - 1:
            continue
        terms.append(_zeta(n - k) * mu ** k / math.factorial(k))
    # |zeta(-j)| <= 4 j! / (2 pi)^(j+1), so term k is below 4|mu|^k/(2 pi)^(k-n+1)
    ratio = abs(mu) / (2.0 * math.pi)
    tail = 4.0 * abs(mu) ** (last + 1) / (2.0 * math.pi) ** (last - n + 2) / (1.0 - ratio)
    return SeriesSum(math.fsum(terms), tail, len(terms))


def li(n: PolylogOrder, x: float, tol: float = 1e-14) -> SeriesSum:
    """Polylogarithm ``Li_n(x)`` for ``n`` in 1..4 and real ``x`` in ``[-1, 1]``.

    ``n = 1`` is ``-log(1 - x)`` in closed form. Near ``x = 1`` the dilogarithm
    uses Euler's reflection and ``n = 3, 4`` use the logarithmic expansion
    around the endpoint value ``zeta(n)``.

    >>> round(li(2, 1.0).value, 12) == round(math.pi ** 2 / 6, 12)
    True
    """
    _check(n, x, tol)
    x = float(x)
    if x == 0.0:
        return SeriesSum(0.0, 0.0, 0)
    if n == 1:
        return SeriesSum(-math.log1p(-x), 0.0, 0)
    if x <= _DIRECT_LIMIT:
        return _direct(n, x, tol)
    if n == 2:
        if x == 1.0:
            return SeriesSum(math.pi ** 2 / 6.0, 0.0, 0)
        rest = _direct(2, 1.0 - x, tol)
        value = math.pi ** 2 / 6.0 - math.log(x) * math.log1p(-x) - rest.value
        return SeriesSum(value, rest.tail_bound, rest.terms_used)
    return _near_one(n, x)


def li_value(n: PolylogOrder, x, tol: float = 1e-14):
    """Float (or array of floats) convenience wrapper around :func:`li`."""
    if np.ndim(x) == 0:
        return li(n, float(x), tol).value
    return np.array([li(n, float(v), tol).value for v in np.ravel(x)]).reshape(np.shape(x))


def li_constants() -> dict[str, float]:
    """Closed-form constants that the radius equations are written with."""
    pi2 = math.pi ** 2
    log2 = math.log(2.0)
    return {
        "pi2_over_12": pi2 / 12.0,
        "pi2_over_6": pi2 / 6.0,
        "pi2_over_3": pi2 / 3.0,
        "pi4_over_90": math.pi ** 4 / 90.0,
        "log2": log2,
        "pi2_over_6_minus_1": pi2 / 6.0 - 1.0,
        "three_plus_pi2_over_3_minus_8log2": 3.0 + pi2 / 3.0 - 8.0 * log2,
    }
