"""Pure-Python implementations of the hot kernels.

Every function here has a twin of the same name and signature in
``_speedups.pyx``.  ``polyzero.kernels`` picks one set at import time.
Integer polynomials are lists of Python ints in ascending powers.
"""

import numpy as np


def homogeneous_eval(coeffs, num, den):
    """Return ``den**n * p(num/den)`` as an exact integer, n = len(coeffs) - 1."""
    n = len(coeffs) - 1
    if n < 0:
        return 0
    acc = coeffs[n]
    dpow = 1
    for i in range(n - 1, -1, -1):
        dpow *= den
        acc = acc * num + coeffs[i] * dpow
    return acc


def sign_at(coeffs, num, den):
    """Sign of p(num/den); ``den`` must be positive."""
    v = homogeneous_eval(coeffs, num, den)
    return (v > 0) - (v < 0)


def sturm_variations(chain, num, den):
    """Sign changes of a Sturm chain at num/den, zeros skipped."""
    changes = 0
    last = 0
    for coeffs in chain:
        s = sign_at(coeffs, num, den)
        if s == 0:
            continue
        if last != 0 and s != last:
            changes += 1
        last = s
    return changes


def sturm_variations_inf(chain, positive):
    """Sign changes of a Sturm chain at +inf (``positive``) or -inf."""
    changes = 0
    last = 0
    for coeffs in chain:
        n = len(coeffs) - 1
        s = 1 if coeffs[n] > 0 else -1
        if not positive and n % 2 == 1:
            s = -s
        if last != 0 and s != last:
            changes += 1
        last = s
    return changes


def aberth(coeffs, z0, max_iter, tol):
    """Aberth-Ehrlich iteration on a monic polynomial.

    ``coeffs`` are complex, descending powers, leading entry 1.  Returns
    ``(roots, iterations, converged)`` where convergence means every
    correction fell below ``tol`` relative to ``max(1, |z|)``.
    """
    a = np.asarray(coeffs, dtype=np.complex128)
    z = np.array(z0, dtype=np.complex128)
    n = z.shape[0]
    da = a[:-1] * np.arange(n, 0, -1)
    done = np.zeros(n, dtype=bool)
    it = 0
    for it in range(1, max_iter + 1):
        p = np.polyval(a, z)
        dp = np.polyval(da, z)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        s = inv.sum(axis=1)
        ratio = np.divide(p, dp, out=np.zeros_like(p), where=dp != 0)
        denom = 1.0 - ratio * s
        delta = np.divide(ratio, denom, out=ratio.copy(), where=denom != 0)
        delta[done] = 0.0
        z = z - delta
        done |= np.abs(delta) <= tol * np.maximum(1.0, np.abs(z))
        if done.all():
            return z, it, True
    return z, it, False
