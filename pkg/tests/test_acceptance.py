"""Acceptance criteria 1-10, one pass/fail line each.

Run under pytest (the lines appear in the terminal summary) or directly
with ``python tests/test_acceptance.py``.  Every tolerance is pinned here.
"""

from __future__ import annotations

import math
import sys
from fractions import Fraction

import mpmath
import numpy as np
import pytest

from polyzero import theorems as T
from polyzero.complexroots import all_roots, check_modulus_bound, vieta_check
from polyzero.families import (
    check_identity_1_2,
    check_polya_limit_identity,
    make_D,
    make_F,
    make_H,
    make_I,
)
from polyzero.polycore import (
    ExactPoly,
    antiderivative_minus_one,
    cauchy_bound,
    derivative,
    evaluate,
    nth_derivative,
)
from polyzero.realroots import count_open, real_roots

try:
    from . import oracles
except ImportError:  # run as a script
    import oracles

# -- pinned tolerances -----------------------------------------------------
TABLE_TOL = 0                      # criterion 1: exact
PIVOT_VALUE = -0.0337812682        # criterion 3
PIVOT_ABS_TOL = 1e-8
VIETA_TOL = 1e-6                   # criterion 7
IMAG_TOL = 1e-8
FLOAT_DEGREE_CAP = 30
LIMIT_GAP_HALF = 2.0 ** -50        # criterion 9
ORACLE_ROOT_TOL = 1e-8             # criterion 10
REFINE_TOL = Fraction(1, 10**12)

RESULTS: dict[int, tuple[bool, str]] = {}


def record(n: int, ok: bool, detail: str) -> None:
    RESULTS[n] = (ok, detail)
    print(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {n}: {detail}"


# -- 1 ---------------------------------------------------------------------


def test_criterion_01_root_table():
    r = T.verify_table1(12)
    bad = [c.claim_id for c in r.children if c.status != T.PASS]
    ok = r.status == T.PASS and len(r.children) == 18 and not bad
    record(1, ok, f"{len(r.children)} cells, k <= 12, mismatches: {bad or 'none'}")


# -- 2 ---------------------------------------------------------------------


def test_criterion_02_spot_values():
    checks = {
        "I_5(-1)=-1/20": evaluate(make_I(5), -1) == Fraction(-1, 20),
        "I_5(-2)=221/15": evaluate(make_I(5), -2) == Fraction(221, 15),
        "I_1(2)=-1": evaluate(make_I(1), 2) == -1,
        "I_1(3)=1/2": evaluate(make_I(1), 3) == Fraction(1, 2),
        "D_0=l!": all(make_D(0, l) == ExactPoly([math.factorial(l)]) for l in range(1, 7)),
        "F_3'(1)=0": evaluate(derivative(make_F(3)), 1) == 0,
        "F_5''(1)=0": evaluate(nth_derivative(make_F(5), 2), 1) == 0,
    }
    bad = [k for k, v in checks.items() if not v]
    record(2, not bad, f"{len(checks)} exact equalities, failing: {bad or 'none'}")


# -- 3 ---------------------------------------------------------------------


def test_criterion_03_pivot():
    cp = T.crossing_points("I", 17)
    q = cp.negative
    sign_lo, sign_hi = evaluate(make_I(17), q.lo), evaluate(make_I(17), q.hi)
    val = float(evaluate(make_I(17), (q.lo + q.hi) / 2))
    ok = sign_lo < 0 and sign_hi < 0 and abs(val - PIVOT_VALUE) < PIVOT_ABS_TOL
    record(3, ok, f"x_17 = {q.value:.12f}, I_17(x_17) = {val:.12f}, |diff| = {abs(val - PIVOT_VALUE):.2e}")


# -- 4 ---------------------------------------------------------------------


def test_criterion_04_derivative_sweep():
    problems, n0s = [], {}
    for l in (1, 2, 3, 4):
        r = T.verify_derivative_theorem(l, 40)
        for cid in ("thm1.item2", "thm1.item3", "thm1.item4"):
            if r.find(cid).status != T.PASS:
                problems.append(f"l={l} {cid}")
        table = T.RootTable(lambda j, l=l: make_D(j, l))
        if not T.gap_shrinks([table.positive(10), table.positive(20), table.positive(40)], 2):
            problems.append(f"l={l} |u-2| trend")
        n0 = r.find("thm1.item4").discovered_threshold
        n0s[l] = n0
        if n0 is None or n0 % 2 or n0 > 40:
            problems.append(f"l={l} N_0={n0}")
    record(4, not problems, f"l=1..4, j<=40, N_0={n0s}, problems: {problems or 'none'}")


# -- 5 ---------------------------------------------------------------------


def test_criterion_05_first_integral_sweep():
    problems = []
    table = T.RootTable(make_I)
    for k in range(2, 61):
        phi = table.positive(k)
        if not (2 < phi.lo and phi.hi < 3):
            problems.append(f"phi_{k} range")
        if T.certified_less(table, k + 1, k, "pos") is not True:
            problems.append(f"phi_{k + 1}<phi_{k}")
    if not T.gap_shrinks([table.positive(30), table.positive(60)], 2):
        problems.append("|phi-2| trend")
    for k in range(5, 60, 2):
        n_neg, _ = table.counts(k)
        if n_neg != 1 or count_open(table.chain(k), -2, -1) != 1:
            problems.append(f"theta_{k}")
    for k in range(17, 60, 2):
        if T.certified_less(table, k - 2, k, "neg") is not True:
            problems.append(f"theta_{k}>theta_{k - 2}")
    for k in range(2, 61, 2):
        if table.chain(k).count(-cauchy_bound(make_I(k)), 0) != 0:
            problems.append(f"I_{k} negative root")
    record(5, not problems, f"k<=60, problems: {problems or 'none'}")


# -- 6 ---------------------------------------------------------------------


def test_criterion_06_general_integral_sweep():
    problems, n0s, positive_at_k1 = [], {}, {}
    for l in (0, 1, 2):
        table = T.RootTable(lambda k, l=l: make_H(k, l))
        for j in range(l + 3, 40):
            if T.certified_less(table, j + 1, j, "pos") is not True:
                problems.append(f"l={l} alpha_{j + 1}<alpha_{j}")
        # literal reading: H_k(k+1) < 0 for every swept k
        bad = [k for k in range(l + 2, 41) if not evaluate(make_H(k, l), k + 1) < 0]
        if bad:
            positive_at_k1[l] = bad
            problems.append(f"l={l} H_k(k+1)>=0 for k in {bad[0]}..{bad[-1]}")
        r = T.verify_general_integral_theorem(l, 40)
        n0 = r.find("thm3.item5").discovered_threshold
        n0s[l] = n0
        if n0 is None or r.find("thm3.item5").status != T.PASS:
            problems.append(f"l={l} beta threshold")
        if not T.gap_shrinks([table.positive(20), table.positive(40)], 2):
            problems.append(f"l={l} |alpha-2| trend")
    record(6, not problems, f"l=0..2, k<=40, N_0={n0s}, problems: {problems or 'none'}")


# -- 7 ---------------------------------------------------------------------


def _bound_ok(p):
    rs = all_roots(p)
    if not rs.converged:
        return False, rs
    dom = real_roots(p)[-1]
    b = check_modulus_bound(p, dom, rs)
    return b.ok and vieta_check(p, rs, VIETA_TOL).ok, rs


def test_criterion_07_complex_bounds():
    problems = []
    cases = [("F", k, make_F(k)) for k in range(2, 31)]
    cases += [("I", k, make_I(k)) for k in range(1, 31)]
    cases += [(f"D(l={l})", j, make_D(j, l)) for l in (1, 2, 3) for j in range(1, FLOAT_DEGREE_CAP + 1)]
    cases += [(f"H(l={l})", k, make_H(k, l)) for l in (0, 1, 2) for k in range(l + 2, FLOAT_DEGREE_CAP)]
    for name, k, p in cases:
        ok, rs = _bound_ok(p)
        if not ok:
            problems.append(f"{name} k={k}")
            continue
        if name == "F":
            outside = [z for z in rs.roots if abs(z) > 1]
            if len(outside) != 1 or abs(outside[0].imag) >= IMAG_TOL:
                problems.append(f"F_{k} unit disk")
    record(7, not problems, f"{len(cases)} polynomials, problems: {problems or 'none'}")


# -- 8 ---------------------------------------------------------------------


def test_criterion_08_identities():
    r = T.verify_c_identity(samples=100, n_max=15)
    limit_ok = all(check_polya_limit_identity(n) for n in range(21))
    ok = r.status == T.PASS and len(r.witnesses) == 100 and limit_ok
    record(8, ok, f"100 seeded c, n<=15: {r.status}; c -> -1 limit n<=20: {limit_ok}")


# -- 9 ---------------------------------------------------------------------


def test_criterion_09_bound_and_limit():
    grid = [Fraction(s, d) for d in (10, 2) for s in (1, -1)] + [Fraction(9, 10), Fraction(-9, 10)]
    bad = [(x, k) for x in grid for k in range(1, 61) if abs(evaluate(make_I(k), x)) > 1 / (1 - abs(x))]
    mp = mpmath.mp.clone()
    mp.dps = 60
    v = evaluate(make_I(60), Fraction(1, 2))
    gap = abs(mp.mpf(v.numerator) / v.denominator - (-1 + mp.log(mp.mpf(1) / 2)))
    ok = not bad and gap < LIMIT_GAP_HALF
    record(9, ok, f"bound violations: {len(bad)}, |I_60(1/2) - limit| = {float(gap):.3e} < 2^-50")


# -- 10 --------------------------------------------------------------------


def test_criterion_10_oracles():
    problems = []
    for l in range(1, 5):
        for j in range(0, 20):
            if make_D(j, l) != ExactPoly(oracles.brute_force_D(j, l)):
                problems.append(f"D({j},{l})")
    for l in range(-1, 4):
        for k in range(l + 2, l + 20):
            p = make_F(k - l - 1)
            for _ in range(l + 2):
                p = antiderivative_minus_one(p)
            if make_H(k, l) != p:
                problems.append(f"H({k},{l})")
    polys = [make_F(k) for k in range(2, 9)] + [make_I(k) for k in range(1, 8)]
    polys += [make_D(j, 2) for j in range(1, 9)] + [make_H(k, 0) for k in range(2, 8)]
    for p in polys:
        rs = all_roots(p)
        if not rs.converged or oracles.match_distance(rs.roots, oracles.companion_roots(p)) > ORACLE_ROOT_TOL:
            problems.append(f"aberth deg {p.degree}")
        if p.degree <= 6:
            got = [float(r) for r in real_roots(p)]
            want = oracles.float_real_roots(p)
            if len(got) != len(want) or any(abs(a - b) > ORACLE_ROOT_TOL for a, b in zip(got, want)):
                problems.append(f"isolation {p}")
    record(10, not problems, f"{len(polys)} root oracles plus D/H constructions, problems: {problems or 'none'}")


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
