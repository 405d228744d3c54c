"""Acceptance criteria 1-9, one test each, each printing a PASS/FAIL line."""

import math

import numpy as np
import pytest

from harmbohr import (AnalyticSplit, ClassParams, ClosedForm, Coef, CoAnalyticSplit,
                      ImprovedBohr, Refined, Rogosinski, RogosinskiSquared, SelfPlusCoef,
                      SeriesSpec, Sign, SquaredCoef, brute_force_sum, distance_lower_bound,
                      evaluate, evaluate_closed_form, find_closed_form_root, find_radius, li,
                      sum_series, verify_sharpness)

RADIUS_TOL = 1e-3
GRID = [(1, 1, 0.5), (1, 1, 0), (0.5, 1, 0), (0.5, 1, 0.25)]
REPRESENTATIVE = [(2, 1, 2, 1, 1), (2, 2, 5, 0.5, 2)]

# published values
P_SEQ = {
    (1, 1, 0.5): [0.652442, 0.659277, 0.659997, 0.660074, 0.660083, 0.660083, 0.660084],
    (1, 1, 0): [0.480812, 0.487911, 0.488711, 0.488874, 0.488886, 0.488888, 0.488888],
}
TABLE_ONE = [(0.1260, 0.9962), (0.1255, 0.9981), (0.1254, 0.9984), (0.1253, 0.9988)]
PRINTED_SQUARED_ROOT = 0.676479

# squared-coefficient series root from an independent mpmath brute-force oracle
ORACLE_SQUARED_ROOT = 0.788707661705954


def variants(p, n, N, mu, beta):
    return [ImprovedBohr(p), SquaredCoef(), SelfPlusCoef(), AnalyticSplit(), CoAnalyticSplit(),
            Rogosinski(n, N), RogosinskiSquared(N), Refined(n, N, mu, beta)]


def radius(f, triple):
    return find_radius(f, ClassParams(*triple)).radius


def test_criterion_1_published_radii(acceptance_log):
    cases = [
        ("r_2(1,1,1/2)", radius(ImprovedBohr(2), (1, 1, 0.5)), 0.652442),
        ("r_2(1,1,0)", radius(ImprovedBohr(2), (1, 1, 0)), 0.480812),
        ("R_2", radius(SelfPlusCoef(), (0.5, 1, 0)), 0.521468),
        ("R_g*", radius(CoAnalyticSplit(), (0.5, 1, 0)), 0.594279),
        ("closed-form squared", find_closed_form_root(ClosedForm.THM_SQUARED).radius,
         PRINTED_SQUARED_ROOT),
    ]
    worst = max(abs(got - want) for _, got, want in cases)
    ok = worst <= RADIUS_TOL
    assert acceptance_log(1, "published radii", ok, f"max diff {worst:.2e}")


def test_criterion_2_p_sequences(acceptance_log):
    ok, worst = True, 0.0
    for triple, printed in P_SEQ.items():
        roots = [radius(ImprovedBohr(p), triple) for p in range(2, 9)]
        worst = max(worst, max(abs(a - b) for a, b in zip(roots, printed)))
        ok &= bool(np.all(np.diff(roots) >= 0))
    ok &= worst <= RADIUS_TOL
    assert acceptance_log(2, "p-sequences", ok, f"max diff {worst:.2e}, nondecreasing in p")


def test_criterion_3_table_one(acceptance_log):
    roots = [radius(ImprovedBohr(2), (g, 0.5, 0.125)) for g, _ in TABLE_ONE]
    worst = max(abs(r - want) for r, (_, want) in zip(roots, TABLE_ONE))
    # gamma decreases down the table, so the radii must increase
    ok = worst <= RADIUS_TOL and all(b > a for a, b in zip(roots, roots[1:]))
    assert acceptance_log(3, "table of radii near gamma = lam", ok, f"max diff {worst:.2e}")


def test_criterion_4_distance_constants(acceptance_log):
    log2 = li(1, 0.5).value
    zeta2 = li(2, 1.0).value
    expected = {
        (1, 1, 0.5): -li(2, -1.0).value,
        (1, 1, 0): zeta2 - 1.0,
        (0.5, 1, 0): 3.0 + 2.0 * zeta2 - 8.0 * log2,
    }
    worst = max(abs(distance_lower_bound(ClassParams(*t)).value - v) for t, v in expected.items())
    ok = worst <= 1e-9
    assert acceptance_log(4, "distance constants", ok, f"max diff {worst:.2e}")


def test_criterion_5_errata_detection(acceptance_log):
    p = ClassParams(0.5, 1, 0.25)
    series_root = find_radius(SquaredCoef(), p).radius
    printed_root = find_closed_form_root(ClosedForm.THM_SQUARED).radius
    detects = abs(series_root - PRINTED_SQUARED_ROOT) > 0.05
    oracle_ok = abs(series_root - ORACLE_SQUARED_ROOT) <= 1e-9
    vanishes = abs(printed_root - PRINTED_SQUARED_ROOT) <= RADIUS_TOL
    residual = evaluate_closed_form(ClosedForm.THM_SQUARED, PRINTED_SQUARED_ROOT)
    ok = detects and oracle_ok and vanishes
    assert acceptance_log(5, "errata detection", ok,
                          f"series root {series_root:.6f} vs printed {PRINTED_SQUARED_ROOT}, "
                          f"printed equation residual {residual:.1e}")


def test_criterion_6_sharpness(acceptance_log):
    failures = []
    count = 0
    for triple in GRID:
        params = ClassParams(*triple)
        for rep_args in REPRESENTATIVE:
            for f in variants(*rep_args):
                root = find_radius(f, params)
                rep = verify_sharpness(f, params, root)
                count += 1
                if not (rep.confirmed and rep.gap <= rep.allowed_gap):
                    failures.append((f.label(), triple, rep.gap))
    ok = not failures
    assert acceptance_log(6, "sharpness", ok, f"{count - len(failures)}/{count} confirmed"), failures


def test_criterion_7_properties(acceptance_log):
    rs = np.linspace(0.0, 0.98, 50)
    checks = {"monotone": True, "k(0)": True, "bracket": True, "rogosinski-N": True,
              "refined-F": True}
    for triple in GRID:
        params = ClassParams(*triple)
        d = distance_lower_bound(params)
        for rep_args in REPRESENTATIVE:
            for f in variants(*rep_args):
                ks = [evaluate(f, params, r) for r in rs]
                checks["monotone"] &= all(b.value > a.value for a, b in zip(ks, ks[1:]))
                checks["k(0)"] &= abs(ks[0].value + d.value) <= ks[0].tail_bound + d.tail_bound
                root = find_radius(f, params)
                lo, hi = evaluate(f, params, root.lower), evaluate(f, params, root.upper)
                checks["bracket"] &= (root.lower <= root.radius <= root.upper
                                      and root.bracket_width <= 1e-10
                                      and lo.upper < 0 < hi.lower)
        for n in (1, 2):
            roots = [radius(Rogosinski(n, N), triple) for N in (2, 3, 4, 5, 8)]
            checks["rogosinski-N"] &= all(b >= a for a, b in zip(roots, roots[1:]))
        for N in (1, 2):
            for r in (0.2, 0.6, 0.9):
                checks["refined-F"] &= Refined(1, N, 3.0, 1.0).f_term(params, r) == 0.0
                checks["refined-F"] &= (evaluate(Refined(2, N, 3.0, 1.0), params, r).value
                                        == evaluate(Refined(2, N, 0.1, 1.0), params, r).value)
    ok = all(checks.values())
    detail = ", ".join(f"{k} {'ok' if v else 'FAILED'}" for k, v in checks.items())
    assert acceptance_log(7, "property suite", ok, detail)


def test_criterion_8_polylog_identities(acceptance_log):
    xs = [k / 10 for k in range(1, 10)]
    h = 1e-5
    deriv = max(abs(x * (li(n, x + h).value - li(n, x - h).value) / (2 * h) - li(n - 1, x).value)
                for n in (2, 3, 4) for x in xs)
    dup = max(abs(li(n, x).value + li(n, -x).value - 2 ** (1 - n) * li(n, x * x).value)
              for n in (2, 3, 4) for x in xs)
    refl = max(abs(li(2, x).value + li(2, 1 - x).value
                   - (math.pi ** 2 / 6 - math.log(x) * math.log(1 - x))) for x in xs)
    ok = deriv <= 1e-6 and dup <= 1e-10 and refl <= 1e-10
    assert acceptance_log(8, "polylog identities", ok,
                          f"derivative {deriv:.1e}, duplication {dup:.1e}, reflection {refl:.1e}")


def _c(params, m):
    return 4 * params.excess / (m * m * (2 * params.gamma + (params.delta - params.gamma) * (m - 1)))


def _brute_remainder(spec, params, M):
    """Bound on what a brute-force partial sum of ``M`` terms leaves out."""
    k, s = spec.power, spec.factor
    last = spec.start + M - 1
    first_omitted = (s * _c(params, last + 1)) ** k * spec.q ** (spec.step * (last + 1))
    if spec.sign is Sign.ALTERNATING:
        return first_omitted
    if spec.q < 1.0:
        return first_omitted / (1.0 - spec.q ** spec.step)
    # c_m <= 2 (gamma - lam) / (gamma m^2), then an integral comparison
    return (s * 2 * params.excess / params.gamma) ** k / ((2 * k - 1) * last ** (2 * k - 1))


def random_cases(n=100, seed=20240607):
    rng = np.random.default_rng(seed)
    for _ in range(n):
        gamma = rng.uniform(0.05, 1.5)
        params = ClassParams(gamma, gamma + rng.uniform(0, 1.5), rng.uniform(0, 0.9) * gamma)
        coef = Coef(rng.choice([c.value for c in Coef]))
        sign = Sign.ALTERNATING if rng.random() < 0.5 else Sign.PLUS
        q = 1.0 if rng.random() < 0.1 else rng.uniform(0.0, 0.99)
        if q == 1.0 and sign is Sign.PLUS and coef in (Coef.BOUND, Coef.HALF):
            coef = Coef.SQUARE  # c_m-linear boundary sums need ~1e12 terms for 1e-12
        spec = SeriesSpec(q=q, coef=coef, step=float(rng.choice([1.0, 1.5, 2.0, 3.0])),
                          start=int(rng.integers(1, 6)), sign=sign, p=rng.uniform(1.0, 4.0))
        yield params, spec


def test_criterion_9_oracle_parity(acceptance_log):
    M = 100_000
    worst_ratio = 0.0
    failures = []
    for params, spec in random_cases():
        s = sum_series(spec, params, 1e-12)
        brute = brute_force_sum(spec, params, M)
        allowed = s.tail_bound + _brute_remainder(spec, params, M) + 1e-13
        err = abs(s.value - brute)
        worst_ratio = max(worst_ratio, err / allowed)
        if err > allowed:
            failures.append((params, spec, err, allowed))
    ok = not failures
    assert acceptance_log(9, "oracle parity", ok,
                          f"100 cases, worst error/allowed {worst_ratio:.2f}"), failures
