"""Constructors for the polynomial families and the k-step Fibonacci numbers.

F_k(x) = x^k - (x^{k-1} + ... + x + 1)
D_j    = l-th derivative of F_{j+l}, from the binomial closed form
I_j    = antiderivative of F_j with constant term -1
H_k    = (l+2)-fold antiderivative of F_{k-l-1}, each stage with constant -1
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .polycore import ExactPoly, as_fraction, divmod_poly, mul, nth_derivative


class Family(str, enum.Enum):
    F = "F"
    D = "D"
    I = "I"  # noqa: E741
    H = "H"


@dataclass(frozen=True)
class FamilySpec:
    """One member of a family.

    ``k`` is the degree parameter used by the constructors: ``F_k``,
    ``D_j`` with ``j = k``, ``I_k`` and ``H_k``.  ``l`` is the derivative
    order for D and the integral depth parameter for H; F and I ignore it.
    """

    family: Family
    k: int
    l: int = 0  # noqa: E741

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        fam, k, l = self.family, self.k, self.l  # noqa: E741
        if fam in (Family.F, Family.I):
            if k < 1:
                raise ValueError(f"{fam.value}_k needs k >= 1, got {k}")
            object.__setattr__(self, "l", 0)
        elif fam is Family.D:
            if l < 1 or k < 0:
                raise ValueError(f"D_j needs j >= 0 and l >= 1, got j={k}, l={l}")
        elif fam is Family.H:
            if l < -1 or not (0 <= l + 1 < k):
                raise ValueError(f"H_k needs l >= -1 and 0 <= l+1 < k, got k={k}, l={l}")

    def build(self) -> ExactPoly:
        if self.family is Family.F:
            return make_F(self.k)
        if self.family is Family.D:
            return make_D(self.k, self.l)
        if self.family is Family.I:
            return make_I(self.k)
        return make_H(self.k, self.l)

    @property
    def label(self) -> str:
        if self.family in (Family.F, Family.I):
            return f"{self.family.value}_{self.k}"
        return f"{self.family.value}_{self.k}(l={self.l})"

    def to_json(self) -> dict:
        out = {"family": self.family.value, "k": self.k}
        if self.family in (Family.D, Family.H):
            out["l"] = self.l
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "FamilySpec":
        return cls(Family(obj["family"]), int(obj["k"]), int(obj.get("l", 0)))


@lru_cache(maxsize=None)
def make_F(k: int) -> ExactPoly:
    if k < 1:
        raise ValueError(f"F_k needs k >= 1, got {k}")
    return ExactPoly([-1] * k + [1])


@lru_cache(maxsize=None)
def make_D(j: int, l: int) -> ExactPoly:  # noqa: E741
    """``l!*(C(j+l,l) x^j - sum_{t<j} C(t+l,l) x^t)``; ``D_0 = l!``."""
    if l < 1:
        raise ValueError(f"derivative order must be >= 1, got {l}")
    if j < 0:
        raise ValueError(f"j must be >= 0, got {j}")
    fl = math.factorial(l)
    if j == 0:
        return ExactPoly([fl])
    coeffs = [-fl * math.comb(t + l, l) for t in range(j)]
    coeffs.append(fl * math.comb(j + l, l))
    return ExactPoly(coeffs)


def make_D_numerator(k: int, l: int) -> ExactPoly:  # noqa: E741
    """``D_{k-l}(x) * (x-1)^(l+1)``, by exact multiplication."""
    if not (k > l >= 1):
        raise ValueError(f"need k > l >= 1, got k={k}, l={l}")
    return mul(make_D(k - l, l), ExactPoly([-1, 1]) ** (l + 1))


def numerator_recurrence_check(k: int, l: int) -> dict:  # noqa: E741
    """Run the coefficient recurrence for the closed-form numerator both ways.

    The numerator of D_{k-m} is written as
    ``sum_t (-1)^t a_t x^(k+1-t) + (-1)^m m!`` over ``(x-1)^(m+1)``.
    Stepping m -> m+1 is done with the a_{t-1} term added and with it
    subtracted; each variant is compared against the exact numerator from
    ``make_D_numerator``.  Returns ``{"plus": bool, "minus": bool}``.
    """
    if not (k > l >= 1):
        raise ValueError(f"need k > l >= 1, got k={k}, l={l}")

    def direct(m):
        num = make_D_numerator(k, m).coeffs
        # a_t sits at power k+1-t with sign (-1)^t
        return [(-1) ** t * num[k + 1 - t] for t in range(m + 2)]

    result = {}
    for name, sgn in (("plus", 1), ("minus", -1)):
        a = direct(1)
        ok = True
        for j in range(1, l):
            b = [a[0] * (k - j)]
            for t in range(1, j + 2):
                b.append(a[t] * (k - j - t) + sgn * a[t - 1] * (k + 2 - t))
            b.append(a[j + 1] * (k - j))
            a = b
            if a != direct(j + 1):
                ok = False
                break
        result[name] = ok
    return result


@lru_cache(maxsize=None)
def make_I(j: int) -> ExactPoly:
    if j < 1:
        raise ValueError(f"I_j needs j >= 1, got {j}")
    coeffs = [Fraction(-1)]
    coeffs.extend(Fraction(-1, t) for t in range(1, j + 1))
    coeffs.append(Fraction(1, j + 1))
    return ExactPoly(coeffs)


@lru_cache(maxsize=None)
def make_H(k: int, l: int) -> ExactPoly:  # noqa: E741
    """Closed form of the (l+2)-fold antiderivative of F_{k-l-1}.

    x^{k+1}/((l+2)! C(k+1,l+2)) - sum_{t=l+2}^{k} x^t/((l+2)! C(t,l+2))
    - sum_{s=0}^{l+1} x^s/s!
    """
    if l < -1 or not (0 <= l + 1 < k):
        raise ValueError(f"H_k needs l >= -1 and 0 <= l+1 < k, got k={k}, l={l}")
    m = l + 2
    fm = math.factorial(m)
    coeffs = [Fraction(-1, math.factorial(s)) for s in range(m)]
    coeffs.extend(Fraction(-1, fm * math.comb(t, m)) for t in range(m, k + 1))
    coeffs.append(Fraction(1, fm * math.comb(k + 1, m)))
    return ExactPoly(coeffs)


@dataclass(frozen=True)
class BigIntSequence:
    k: int
    terms: tuple

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, i):
        return self.terms[i]

    def to_lines(self) -> str:
        return "".join(f"{t}\n" for t in self.terms)


def g_sequence(k: int, count: int) -> BigIntSequence:
    """First ``count`` terms of G(k, 1), G(k, 2), ..."""
    if k < 2:
        raise ValueError(f"order k must be >= 2, got {k}")
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    terms = [1] + [2 ** (t - 2) for t in range(2, k + 1)]
    window = sum(terms)
    while len(terms) < count:
        terms.append(window)
        window += window - terms[-k - 1]
    return BigIntSequence(k, tuple(terms[:count]))


def g_ratio(k: int, l: int) -> float:  # noqa: E741
    """G(k, l+1) / G(k, l) as a float."""
    if l < 1:
        raise ValueError(f"l must be >= 1, got {l}")
    seq = g_sequence(k, l + 1)
    return seq[l] / seq[l - 1]


def c_identity_sides(c, n: int) -> tuple[Fraction, Fraction, Fraction]:
    """The three expressions of the c-identity, evaluated exactly."""
    c = as_fraction(c)
    if c == 0 or c == -1:
        raise ValueError(f"c must not be 0 or -1, got {c}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    inv = 1 / c
    lhs = (inv ** (2 * (n + 1)) - 1) / (1 + c)
    mid = inv ** (n + 2) * sum(
        math.comb(n + i, 2 * i - 1) * (1 - c) ** (2 * i - 1) / c ** (i - 1)
        for i in range(1, n + 2)
    )
    rhs = sum((-inv) ** t for t in range(1, 2 * (n + 1) + 1))
    return lhs, mid, rhs


def check_identity_1_2(c, n: int) -> bool:
    lhs, mid, rhs = c_identity_sides(c, n)
    return lhs == mid == rhs


def check_polya_limit_identity(n: int) -> bool:
    """2(n+1) == sum_{i=1}^{n+1} C(n+i, 2i-1) 2^(2i-1) (-1)^(n+i+1)."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    total = sum(
        math.comb(n + i, 2 * i - 1) * 2 ** (2 * i - 1) * (-1) ** (n + i + 1)
        for i in range(1, n + 2)
    )
    return total == 2 * (n + 1)


def divides_exactly(p: ExactPoly, q: ExactPoly) -> tuple[ExactPoly, bool]:
    """Return ``(p // q, remainder is zero)``."""
    quo, rem = divmod_poly(p, q)
    return quo, rem.is_zero()


def l_fold_derivative_of_F(k: int, l: int) -> ExactPoly:  # noqa: E741
    return nth_derivative(make_F(k), l)
