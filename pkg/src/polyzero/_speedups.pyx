# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``_purepy``.

Same names, same signatures, same results.  The exact-arithmetic kernels
still operate on Python ints (arbitrary precision) but skip the
interpreter dispatch of the pure loops; the Aberth sweep runs entirely on
C doubles.
"""

import numpy as np
cimport numpy as cnp

cnp.import_array()

def homogeneous_eval(list coeffs, object num, object den):
    cdef Py_ssize_t n = len(coeffs) - 1
    cdef Py_ssize_t i
    cdef object acc, dpow
    if n < 0:
        return 0
    acc = coeffs[n]
    dpow = 1
    for i in range(n - 1, -1, -1):
        dpow = dpow * den
        acc = acc * num + coeffs[i] * dpow
    return acc


cdef inline int _sign_at(list coeffs, object num, object den):
    cdef object v = homogeneous_eval(coeffs, num, den)
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


def sign_at(list coeffs, object num, object den):
    return _sign_at(coeffs, num, den)


def sturm_variations(list chain, object num, object den):
    cdef int changes = 0
    cdef int last = 0
    cdef int s
    cdef list coeffs
    for coeffs in chain:
        s = _sign_at(coeffs, num, den)
        if s == 0:
            continue
        if last != 0 and s != last:
            changes += 1
        last = s
    return changes


def sturm_variations_inf(list chain, bint positive):
    cdef int changes = 0
    cdef int last = 0
    cdef int s
    cdef Py_ssize_t n
    cdef list coeffs
    for coeffs in chain:
        n = len(coeffs) - 1
        s = 1 if coeffs[n] > 0 else -1
        if not positive and n % 2 == 1:
            s = -s
        if last != 0 and s != last:
            changes += 1
        last = s
    return changes


def aberth(coeffs, z0, int max_iter, double tol):
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] a = np.ascontiguousarray(coeffs, dtype=np.complex128)
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] z = np.array(z0, dtype=np.complex128)
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] znew = z.copy()
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] done = np.zeros(z.shape[0], dtype=np.uint8)
    cdef Py_ssize_t n = z.shape[0]
    cdef Py_ssize_t m = a.shape[0]
    cdef Py_ssize_t i, j, it = 0
    cdef double complex zi, p, dp, s, ratio, denom, delta
    cdef bint all_done
    cdef double mag
    for it in range(1, max_iter + 1):
        all_done = True
        for i in range(n):
            if done[i]:
                znew[i] = z[i]
                continue
            zi = z[i]
            p = a[0]
            dp = 0
            for j in range(1, m):
                dp = dp * zi + p
                p = p * zi + a[j]
            s = 0
            for j in range(n):
                if j != i:
                    s = s + 1.0 / (zi - z[j])
            if dp != 0:
                ratio = p / dp
            else:
                ratio = 0
            denom = 1.0 - ratio * s
            if denom != 0:
                delta = ratio / denom
            else:
                delta = ratio
            znew[i] = zi - delta
            mag = abs(znew[i])
            if mag < 1.0:
                mag = 1.0
            if abs(delta) <= tol * mag:
                done[i] = 1
            else:
                all_done = False
        z, znew = znew, z
        if all_done:
            return z, it, True
    return z, it, False
