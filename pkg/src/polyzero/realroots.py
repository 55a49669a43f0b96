"""Certified real root counting, isolation and refinement.

Counting uses a Sturm chain built from the squarefree part of the input.
The chain is kept in integer primitive form: each remainder is multiplied
by a positive constant, which leaves every sign (and so every count)
unchanged.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import kernels
from .families import FamilySpec
from .polycore import (
    ExactPoly,
    as_fraction,
    cauchy_bound,
    derivative,
    format_fraction,
    primitive,
    primitive_integer_coeffs,
    pseudo_remainder,
    sign_at,
    squarefree_part,
)

DEFAULT_TOL = Fraction(1, 10**12)
NUDGE = Fraction(1, 2**64)
MAX_NUDGES = 8


class RootIsolationError(RuntimeError):
    """An isolation step could not be certified."""


class EndpointRootError(RootIsolationError):
    """A split point kept landing on a root after every allowed nudge."""


def sign_variations(p: ExactPoly) -> int:
    """Sign changes in the coefficient sequence, zeros skipped (Descartes)."""
    if p.is_zero():
        raise ValueError("sign variations of the zero polynomial")
    changes = 0
    last = 0
    for c in p.coeffs:
        if c == 0:
            continue
        s = 1 if c > 0 else -1
        if last and s != last:
            changes += 1
        last = s
    return changes


def _sturm_step(a: list[int], b: list[int]) -> list[int]:
    """Negated remainder of a by b, scaled by a positive constant."""
    r = pseudo_remainder(a, b)
    if not r:
        return r
    # r = lb**delta * (true remainder); keep the sign of -remainder
    lb, delta = b[-1], len(a) - len(b) + 1
    if not (lb < 0 and delta % 2 == 1):
        r = [-v for v in r]
    return primitive(r)


class SturmChain:
    """Sturm chain of the squarefree part of ``p``."""

    __slots__ = ("poly", "squarefree", "chain", "was_squarefree")

    def __init__(self, p: ExactPoly):
        if p.is_zero():
            raise ValueError("Sturm chain of the zero polynomial")
        self.poly = p
        sf = squarefree_part(p)
        self.squarefree = sf
        self.was_squarefree = sf.degree == p.degree
        p0 = primitive_integer_coeffs(sf)
        if p0[-1] < 0:
            p0 = [-v for v in p0]
        chain = [p0]
        if len(p0) > 1:
            chain.append(primitive_integer_coeffs(derivative(ExactPoly(p0))))
            while len(chain[-1]) > 1:
                r = _sturm_step(chain[-2], chain[-1])
                if not r:
                    break
                chain.append(r)
        self.chain = chain

    @property
    def degree(self) -> int:
        return len(self.chain[0]) - 1

    def variations(self, x) -> int:
        x = as_fraction(x)
        return kernels.sturm_variations(self.chain, x.numerator, x.denominator)

    def variations_inf(self, positive: bool) -> int:
        return kernels.sturm_variations_inf(self.chain, positive)

    def count(self, lo=None, hi=None) -> int:
        """Distinct real roots in ``(lo, hi]``; ``None`` means an infinite end."""
        vlo = self.variations_inf(False) if lo is None else self.variations(lo)
        vhi = self.variations_inf(True) if hi is None else self.variations(hi)
        if lo is not None and hi is not None and as_fraction(lo) >= as_fraction(hi):
            raise ValueError(f"empty interval ({lo}, {hi}]")
        return vlo - vhi

    def sign(self, x) -> int:
        x = as_fraction(x)
        return kernels.sign_at(self.chain[0], x.numerator, x.denominator)


def sturm_count(p: ExactPoly, lo, hi) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``.

    Roots of ``p`` at ``lo`` are excluded and at ``hi`` included; the chain
    is built on the squarefree part so both cases are exact.
    """
    lo, hi = as_fraction(lo), as_fraction(hi)
    if not lo < hi:
        raise ValueError(f"need lo < hi, got ({lo}, {hi}]")
    return SturmChain(p).count(lo, hi)


def count_open(chain: SturmChain, lo, hi) -> int:
    """Distinct roots in the open interval ``(lo, hi)``."""
    return chain.count(lo, hi) - (1 if chain.sign(hi) == 0 else 0)


def count_closed(chain: SturmChain, lo, hi) -> int:
    """Distinct roots in ``[lo, hi]``."""
    return chain.count(lo, hi) + (1 if chain.sign(lo) == 0 else 0)


@dataclass(frozen=True)
class IsolatingInterval:
    lo: Fraction
    hi: Fraction
    sign_lo: int
    sign_hi: int

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"isolating interval needs lo < hi, got [{self.lo}, {self.hi}]")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def exact_root(self) -> Optional[Fraction]:
        if self.sign_lo == 0:
            return self.lo
        if self.sign_hi == 0:
            return self.hi
        return None

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def disjoint_below(self, other: "IsolatingInterval") -> bool:
        """True when every point here is strictly below every point of ``other``."""
        return self.hi < other.lo

    def to_json(self) -> dict:
        return {
            "lo": format_fraction(self.lo),
            "hi": format_fraction(self.hi),
            "sign_lo": self.sign_lo,
            "sign_hi": self.sign_hi,
        }


def _make_interval(chain: SturmChain, lo: Fraction, hi: Fraction) -> IsolatingInterval:
    return IsolatingInterval(lo, hi, chain.sign(lo), chain.sign(hi))


def _split_point(chain: SturmChain, lo: Fraction, hi: Fraction) -> Fraction:
    m = (lo + hi) / 2
    if chain.sign(m) != 0:
        return m
    for i in range(1, MAX_NUDGES + 1):
        step = NUDGE * ((i + 1) // 2)
        cand = m + step if i % 2 else m - step
        if lo < cand < hi and chain.sign(cand) != 0:
            return cand
    raise EndpointRootError(f"split point {m} is a root and every nudge hit a root")


def isolate_real_roots(p: ExactPoly, chain: Optional[SturmChain] = None) -> list[IsolatingInterval]:
    """One interval per distinct real root, in increasing order.

    Each interval ``[lo, hi]`` has exactly one root in ``(lo, hi]``; no
    interval endpoint is a root, so the root is interior and the end signs
    differ.
    """
    if p.is_zero() or p.degree < 1:
        raise ValueError("need a nonconstant polynomial")
    if chain is None:
        chain = SturmChain(p)
    bound = cauchy_bound(chain.squarefree)
    # lift to a power of two so bisection points stay dyadic
    b = Fraction(2) ** max(0, math.ceil(math.log2(bound)) + 1)
    total = chain.count(None, None)
    out = []
    stack = [(-b, b, chain.count(-b, b))]
    assert stack[0][2] == total, "Cauchy bound missed a root"
    while stack:
        lo, hi, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append(_make_interval(chain, lo, hi))
            continue
        m = _split_point(chain, lo, hi)
        n_left = chain.count(lo, m)
        stack.append((m, hi, n - n_left))
        stack.append((lo, m, n_left))
    out.sort(key=lambda iv: iv.lo)
    return out


@dataclass(frozen=True)
class RootRecord:
    interval: IsolatingInterval
    approx: Fraction
    tol: Fraction
    spec: Optional[FamilySpec] = field(default=None, compare=False)

    @property
    def lo(self) -> Fraction:
        return self.interval.lo

    @property
    def hi(self) -> Fraction:
        return self.interval.hi

    def __float__(self) -> float:
        return float(self.approx)

    def approx_decimal(self, digits: int = 18) -> str:
        return decimal_string(self.approx, digits)

    def to_json(self) -> dict:
        return {
            "spec": self.spec.to_json() if self.spec is not None else None,
            "lo": format_fraction(self.lo),
            "hi": format_fraction(self.hi),
            "approx_decimal": self.approx_decimal(),
            "tol": format_fraction(self.tol),
        }


def decimal_string(x: Fraction, digits: int = 18) -> str:
    """Truncated decimal expansion of an exact rational."""
    sign = "-" if x < 0 else ""
    x = abs(x)
    whole = x.numerator // x.denominator
    frac = x - whole
    scaled = (frac.numerator * 10**digits) // frac.denominator
    return f"{sign}{whole}.{scaled:0{digits}d}"


def refine_root(
    p: ExactPoly,
    iv: IsolatingInterval,
    tol=DEFAULT_TOL,
    spec: Optional[FamilySpec] = None,
    chain: Optional[SturmChain] = None,
    verify: bool = True,
) -> RootRecord:
    """Bisect ``iv`` on exact signs until its width is at most ``tol``."""
    tol = as_fraction(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if chain is None:
        chain = SturmChain(p)
    lo, hi = iv.lo, iv.hi
    slo, shi = chain.sign(lo), chain.sign(hi)
    if verify and chain.count(lo, hi) + (slo == 0) != 1:
        raise RootIsolationError(f"[{lo}, {hi}] does not isolate exactly one root")
    if slo == 0 or shi == 0:
        root = lo if slo == 0 else hi
        return _exact_record(chain, root, iv, tol, spec)
    if slo == shi:
        raise RootIsolationError(f"no sign change on [{lo}, {hi}]")
    while hi - lo > tol:
        m = (lo + hi) / 2
        sm = chain.sign(m)
        if sm == 0:
            return _exact_record(chain, m, IsolatingInterval(lo, hi, slo, shi), tol, spec)
        if sm == slo:
            lo = m
        else:
            hi = m
    out = IsolatingInterval(lo, hi, slo, shi)
    return RootRecord(out, (lo + hi) / 2, tol, spec)


def _exact_record(chain, root, iv, tol, spec) -> RootRecord:
    hi = min(iv.hi, root + tol) if root < iv.hi else root + tol
    out = IsolatingInterval(root, hi, 0, chain.sign(hi))
    return RootRecord(out, root, tol, spec)


def real_roots(p: ExactPoly, tol=DEFAULT_TOL, spec: Optional[FamilySpec] = None) -> list[RootRecord]:
    """Isolate and refine every distinct real root."""
    chain = SturmChain(p)
    return [
        refine_root(p, iv, tol, spec=spec, chain=chain, verify=False)
        for iv in isolate_real_roots(p, chain)
    ]


def signed_intervals(p: ExactPoly, chain: Optional[SturmChain] = None):
    """Split the isolating intervals into ``(negative, positive)`` lists.

    An interval straddling 0 is clipped at 0 to the side that holds its
    root.  A root exactly at 0 lands in neither list.
    """
    chain = chain or SturmChain(p)
    neg, pos = [], []
    zero_sign = chain.sign(0)
    for iv in isolate_real_roots(p, chain):
        if iv.lo >= 0:
            pos.append(iv)
        elif iv.hi <= 0:
            neg.append(iv)
        elif zero_sign == 0:
            continue
        elif chain.count(iv.lo, 0) == 1:
            neg.append(_make_interval(chain, iv.lo, Fraction(0)))
        else:
            pos.append(_make_interval(chain, Fraction(0), iv.hi))
    return neg, pos


def positive_root(p: ExactPoly, tol=DEFAULT_TOL, spec=None, chain=None) -> RootRecord:
    """The unique positive root; raises if there is not exactly one."""
    chain = chain or SturmChain(p)
    _, pos = signed_intervals(p, chain)
    if len(pos) != 1:
        raise RootIsolationError(f"expected one positive root, found {len(pos)}")
    return refine_root(p, pos[0], tol, spec=spec, chain=chain, verify=False)


def negative_roots(p: ExactPoly, tol=DEFAULT_TOL, spec=None, chain=None) -> list[RootRecord]:
    chain = chain or SturmChain(p)
    neg, _ = signed_intervals(p, chain)
    return [refine_root(p, iv, tol, spec=spec, chain=chain, verify=False) for iv in neg]
