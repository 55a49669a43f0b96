"""Independent reference implementations used only by the tests."""

from __future__ import annotations

from fractions import Fraction

import numpy as np
from scipy.optimize import linear_sum_assignment

from polyzero.polycore import ExactPoly


def companion_roots(p: ExactPoly) -> np.ndarray:
    """Eigenvalues of the companion matrix of p."""
    c = [float(x / p.leading) for x in p.coeffs]
    n = p.degree
    m = np.zeros((n, n))
    m[1:, :-1] = np.eye(n - 1)
    m[:, -1] = [-v for v in c[:-1]]
    return np.linalg.eigvals(m)


def match_distance(a, b) -> float:
    """Largest distance under the optimal one-to-one matching of two root sets."""
    a, b = np.asarray(a), np.asarray(b)
    cost = np.abs(a[:, None] - b[None, :])
    rows, cols = linear_sum_assignment(cost)
    return float(cost[rows, cols].max())


def naive_derivative(coeffs):
    return [i * c for i, c in enumerate(coeffs)][1:]


def naive_antiderivative_minus_one(coeffs):
    return [Fraction(-1)] + [Fraction(c) / (i + 1) for i, c in enumerate(coeffs)]


def brute_force_F(k: int) -> list:
    return [-1] * k + [1]


def brute_force_D(j: int, l: int) -> list:  # noqa: E741
    c = brute_force_F(j + l)
    for _ in range(l):
        c = naive_derivative(c)
    return c


def brute_force_H(k: int, l: int) -> list:  # noqa: E741
    c = [Fraction(v) for v in brute_force_F(k - l - 1)]
    for _ in range(l + 2):
        c = naive_antiderivative_minus_one(c)
    return c


def brute_force_G(k: int, count: int) -> list:
    """G(k, l): G(k,1)=1, G(k,t)=2^(t-2) for 2<=t<=k, then sum of the previous k."""
    out = []
    for t in range(1, count + 1):
        if t == 1:
            out.append(1)
        elif t <= k:
            out.append(2 ** (t - 2))
        else:
            out.append(sum(out[-k:]))
    return out


def float_real_roots(p: ExactPoly, imag_tol: float = 1e-7) -> list:
    return sorted(z.real for z in companion_roots(p) if abs(z.imag) < imag_tol)


def exact_divides(p: ExactPoly, q: ExactPoly) -> bool:
    """q | p by schoolbook long division over Fraction."""
    r = list(p.coeffs)
    d = list(q.coeffs)
    while len(r) >= len(d) and any(r):
        f = r[-1] / d[-1]
        shift = len(r) - len(d)
        for i, c in enumerate(d):
            r[shift + i] -= f * c
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return not any(r)
