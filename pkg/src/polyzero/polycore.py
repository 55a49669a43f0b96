"""Dense univariate polynomials with exact rational coefficients.

``ExactPoly`` is immutable.  Coefficients are ``fractions.Fraction`` in
ascending powers with no trailing zeros, so two polynomials are equal iff
their coefficient tuples are equal.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from . import kernels


def as_fraction(x) -> Fraction:
    """Convert ints, Fractions and ``"num/den"`` strings to a Fraction.

    Floats are rejected: nothing in the exact path may be rounded.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


def format_fraction(x: Fraction) -> str:
    """``num/den`` in lowest terms; the denominator is always written."""
    return f"{x.numerator}/{x.denominator}"


class ExactPoly:
    __slots__ = ("_c", "_int_form")

    def __init__(self, coeffs: Iterable = ()):
        c = [as_fraction(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)
        self._int_form = None

    @classmethod
    def _raw(cls, coeffs: tuple) -> "ExactPoly":
        obj = cls.__new__(cls)
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        obj._c = tuple(c)
        obj._int_form = None
        return obj

    @classmethod
    def constant(cls, value) -> "ExactPoly":
        return cls([value])

    @classmethod
    def monomial(cls, power: int, coeff=1) -> "ExactPoly":
        if power < 0:
            raise ValueError("negative power")
        return cls([0] * power + [coeff])

    @classmethod
    def x(cls) -> "ExactPoly":
        return cls([0, 1])

    # -- basic accessors -------------------------------------------------

    @property
    def coeffs(self) -> tuple:
        return self._c

    def is_zero(self) -> bool:
        return not self._c

    @property
    def degree(self) -> int:
        if not self._c:
            raise ValueError("the zero polynomial has no degree")
        return len(self._c) - 1

    @property
    def leading(self) -> Fraction:
        if not self._c:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self._c[-1]

    def __getitem__(self, i: int) -> Fraction:
        if i < 0:
            raise IndexError("negative power")
        return self._c[i] if i < len(self._c) else Fraction(0)

    def __len__(self) -> int:
        return len(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, ExactPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == ExactPoly([other])._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"ExactPoly({[format_fraction(c) for c in self._c]})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for i in range(len(self._c) - 1, -1, -1):
            c = self._c[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mag = "" if (a == 1 and i > 0) else str(a)
            var = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            body = f"{mag}*{var}" if mag and var else (mag or var)
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # -- integer view used by the kernels ---------------------------------

    def integer_form(self) -> tuple[list[int], int]:
        """Return ``(a, L)`` with ``self == a / L``, ``a`` integers, ``L > 0``.

        ``L`` is the least common multiple of the coefficient denominators.
        """
        if self._int_form is None:
            lcm = 1
            for c in self._c:
                lcm = math.lcm(lcm, c.denominator)
            ints = [c.numerator * (lcm // c.denominator) for c in self._c]
            self._int_form = (ints, lcm)
        return self._int_form

    # -- ring operations --------------------------------------------------

    def __neg__(self) -> "ExactPoly":
        return ExactPoly._raw(tuple(-c for c in self._c))

    def __add__(self, other) -> "ExactPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other) -> "ExactPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other) -> "ExactPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return add(other, -self)

    def __mul__(self, other) -> "ExactPoly":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            f = Fraction(other)
            return ExactPoly._raw(tuple(c * f for c in self._c))
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ExactPoly":
        if n < 0:
            raise ValueError("negative exponent")
        result = ExactPoly([1])
        base = self
        while n:
            if n & 1:
                result = mul(result, base)
            base = mul(base, base)
            n >>= 1
        return result

    def __divmod__(self, other) -> tuple["ExactPoly", "ExactPoly"]:
        return divmod_poly(self, _coerce(other))

    def __call__(self, x) -> Fraction:
        return evaluate(self, x)

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {"coeffs": [format_fraction(c) for c in self._c]}

    @classmethod
    def from_json(cls, obj: dict) -> "ExactPoly":
        return cls(obj["coeffs"])


def _coerce(other):
    if isinstance(other, ExactPoly):
        return other
    if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
        return ExactPoly([other])
    return NotImplemented


def evaluate(p: ExactPoly, x) -> Fraction:
    """Exact value of ``p`` at the rational ``x``."""
    x = as_fraction(x)
    if p.is_zero():
        return Fraction(0)
    ints, lcm = p.integer_form()
    n = len(ints) - 1
    v = kernels.homogeneous_eval(ints, x.numerator, x.denominator)
    return Fraction(v, lcm * x.denominator**n)


def sign_at(p: ExactPoly, x) -> int:
    """Sign of ``p(x)`` without building the reduced Fraction."""
    x = as_fraction(x)
    if p.is_zero():
        return 0
    ints, _ = p.integer_form()
    return kernels.sign_at(ints, x.numerator, x.denominator)


def evaluate_float(p: ExactPoly, x: float) -> float:
    """Horner in floating point; used only for diagnostics."""
    acc = 0.0
    for c in reversed(p.coeffs):
        acc = acc * x + float(c)
    return acc


def add(p: ExactPoly, q: ExactPoly) -> ExactPoly:
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return ExactPoly._raw(tuple(out))


def sub(p: ExactPoly, q: ExactPoly) -> ExactPoly:
    return add(p, -q)


def mul(p: ExactPoly, q: ExactPoly) -> ExactPoly:
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return ExactPoly()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return ExactPoly._raw(tuple(out))


def derivative(p: ExactPoly) -> ExactPoly:
    return ExactPoly._raw(tuple(i * c for i, c in enumerate(p.coeffs) if i > 0))


def nth_derivative(p: ExactPoly, n: int) -> ExactPoly:
    for _ in range(n):
        p = derivative(p)
    return p


def antiderivative_minus_one(p: ExactPoly) -> ExactPoly:
    """Antiderivative whose constant of integration is -1."""
    out = [Fraction(-1)]
    out.extend(c / (i + 1) for i, c in enumerate(p.coeffs))
    return ExactPoly._raw(tuple(out))


def reflect(p: ExactPoly) -> ExactPoly:
    """``p(-x)``."""
    return ExactPoly._raw(tuple(-c if i % 2 else c for i, c in enumerate(p.coeffs)))


def integer_clear_denominators(p: ExactPoly) -> ExactPoly:
    """Scale by the positive lcm of the denominators; roots are unchanged."""
    ints, _ = p.integer_form()
    return ExactPoly._raw(tuple(Fraction(v) for v in ints))


def primitive_integer_coeffs(p: ExactPoly) -> list[int]:
    """Integer coefficients of ``p`` scaled by a positive constant to content 1."""
    ints, _ = p.integer_form()
    g = math.gcd(*ints) if ints else 0
    if g > 1:
        ints = [v // g for v in ints]
    return list(ints)


def divmod_poly(p: ExactPoly, q: ExactPoly) -> tuple[ExactPoly, ExactPoly]:
    """Euclidean division ``p = quo*q + rem`` with ``deg rem < deg q``."""
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p.coeffs)
    dq = q.degree
    lq = q.leading
    if len(r) - 1 < dq:
        return ExactPoly(), p
    quo = [Fraction(0)] * (len(r) - dq)
    qc = q.coeffs
    for i in range(len(r) - 1, dq - 1, -1):
        c = r[i]
        if c == 0:
            continue
        f = c / lq
        quo[i - dq] = f
        for j in range(dq + 1):
            r[i - dq + j] -= f * qc[j]
    return ExactPoly._raw(tuple(quo)), ExactPoly._raw(tuple(r[:dq]))


def pseudo_remainder(a: list[int], b: list[int]) -> list[int]:
    """Integer ``r`` with ``lc(b)**(deg a - deg b + 1) * a = q*b + r``."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        for j in range(len(a)):
            a[j] *= lb
        if c:
            off = i - db
            for j in range(db + 1):
                a[off + j] -= c * b[j]
    r = a[:db]
    while r and r[-1] == 0:
        r.pop()
    return r


def primitive(v: list[int]) -> list[int]:
    g = math.gcd(*v) if v else 0
    return [x // g for x in v] if g > 1 else list(v)


def gcd(p: ExactPoly, q: ExactPoly) -> ExactPoly:
    """Monic greatest common divisor (zero if both are zero).

    Runs a primitive pseudo-remainder sequence on integer coefficients;
    Euclid over the rationals blows up in coefficient size.
    """
    if p.is_zero() and q.is_zero():
        return ExactPoly()
    if p.is_zero() or q.is_zero():
        g = q if p.is_zero() else p
        return g * (1 / g.leading)
    a, b = primitive_integer_coeffs(p), primitive_integer_coeffs(q)
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return ExactPoly([1])
        a, b = b, primitive(pseudo_remainder(a, b))
    g = ExactPoly(a)
    return g * (1 / g.leading)


def squarefree_part(p: ExactPoly) -> ExactPoly:
    """``p / gcd(p, p')``, which has the same distinct roots as ``p``."""
    if p.is_zero() or p.degree == 0:
        return p
    g = gcd(p, derivative(p))
    if g.degree == 0:
        return p
    quo, rem = divmod_poly(p, g)
    assert rem.is_zero()
    return quo


def from_roots(roots: Sequence) -> ExactPoly:
    """Monic polynomial with the given rational roots."""
    out = ExactPoly([1])
    for r in roots:
        out = mul(out, ExactPoly([-as_fraction(r), 1]))
    return out


def cauchy_bound(p: ExactPoly) -> Fraction:
    """``1 + max|c_i| / |c_deg|``; every complex root has modulus below it."""
    lead = abs(p.leading)
    return 1 + max((abs(c) for c in p.coeffs[:-1]), default=Fraction(0)) / lead
