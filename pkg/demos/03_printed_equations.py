"""
Printed polylogarithm equations versus the series
=================================================

Four of the five published closed forms are the series in disguise; the
squared-coefficient one is not. Its printed root 0.676479 does solve the
printed equation, but the series it is meant to describe vanishes near 0.789.
"""

import numpy as np

from harmbohr import ClosedForm, evaluate, evaluate_closed_form, find_closed_form_root, find_radius

for cf in ClosedForm:
    grid = np.linspace(0.05, 0.95, 19)
    gap = max(abs(evaluate(cf.functional, cf.params, r).value - evaluate_closed_form(cf, r))
              for r in grid)
    printed = find_closed_form_root(cf).radius
    series = find_radius(cf.functional, cf.params).radius
    print(f"{cf.tag:14s} printed-root {printed:.6f}  series-root {series:.6f}  "
          f"max |series - printed| {gap:.1e}")

cf = ClosedForm.THM_SQUARED
print("series k(0.676479) =", evaluate(cf.functional, cf.params, 0.676479).value)
