"""Bohr-type radii for the harmonic class defined by

    Re(gamma h' + delta z h'' + (delta - gamma)/2 z^2 h''' - lam)
        > |gamma g' + delta z g'' + (delta - gamma)/2 z^2 g'''|,

computed from error-bounded coefficient series, located by certified
bisection and checked against extremal functions.

>>> from harmbohr import ClassParams, ImprovedBohr, find_radius
>>> round(find_radius(ImprovedBohr(2), ClassParams(1, 1, 0.5)).radius, 6)
0.652442
"""

from .classmodel import ClassParams, co_analytic_bound, coef_bound, coef_bounds
from .functionals import (AnalyticSplit, BohrFunctional, BracketError, ClosedForm,
                          CoAnalyticSplit, ImprovedBohr, Refined, Rogosinski,
                          RogosinskiSquared, SelfPlusCoef, SquaredCoef, endpoint_signs,
                          evaluate, evaluate_closed_form)
from .polylog import li, li_constants
from .rootfind import (ClosedFormInconsistency, RootResult, find_closed_form_root,
                       find_radius)
from .series import (Coef, SeriesSpec, Sign, brute_force_sum, distance_lower_bound,
                     growth_bounds, sum_series)
from .sharpness import (ExtremalFunction, Part, Scale, SharpnessReport, SignPattern,
                        Verdict, bohr_sum_at, class_membership_check, verify_sharpness)
from .summation import SeriesSum, TruncationError

__version__ = "0.1.0"

__all__ = [
    "AnalyticSplit", "BohrFunctional", "BracketError", "ClassParams", "ClosedForm",
    "ClosedFormInconsistency", "CoAnalyticSplit", "Coef", "ExtremalFunction",
    "ImprovedBohr", "Part", "Refined", "Rogosinski", "RogosinskiSquared", "RootResult",
    "Scale", "SelfPlusCoef", "SeriesSpec", "SeriesSum", "SharpnessReport", "Sign",
    "SignPattern", "SquaredCoef", "TruncationError", "Verdict", "bohr_sum_at",
    "brute_force_sum", "class_membership_check", "co_analytic_bound", "coef_bound",
    "coef_bounds", "distance_lower_bound", "endpoint_signs", "evaluate",
    "evaluate_closed_form", "find_closed_form_root", "find_radius", "growth_bounds", "li",
    "li_constants", "sum_series", "verify_sharpness",
]
