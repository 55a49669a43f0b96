"""Verification harness for the root-location claims.

One function per claim group.  Each returns a ``VerificationReport`` whose
children are the individual claims.  Root counts come from Sturm chains,
monotonicity from disjoint exact enclosures (never from float
comparisons alone), and "for sufficiently large n" claims from
discovering the smallest threshold inside the sweep and certifying the
claim beyond it.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

import mpmath

from . import __version__
from .complexroots import all_roots, check_modulus_bound, vieta_check
from .families import (
    FamilySpec,
    check_identity_1_2,
    check_polya_limit_identity,
    g_ratio,
    g_sequence,
    make_D,
    make_F,
    make_H,
    make_I,
    numerator_recurrence_check,
)
from .polycore import (
    ExactPoly,
    cauchy_bound,
    derivative,
    divmod_poly,
    evaluate,
    format_fraction,
    nth_derivative,
    reflect,
    sub,
)
from .realroots import (
    DEFAULT_TOL,
    IsolatingInterval,
    RootRecord,
    SturmChain,
    count_open,
    refine_root,
    sign_variations,
    signed_intervals,
)

PASS, FAIL, PARTIAL = "pass", "fail", "partial"
FLOAT_DEGREE_CAP = 30
REFINE_FACTOR = Fraction(1, 10**6)
PIVOT_I17 = -0.0337812682
QUAD_RESIDUAL_TOL = 1e-10


# -- report type -----------------------------------------------------------


@dataclass
class VerificationReport:
    claim_id: str
    paper_anchor: str
    params: dict
    status: str
    witnesses: list = field(default_factory=list)
    discovered_threshold: Optional[int] = None
    notes: str = ""
    children: list = field(default_factory=list)

    def to_json(self) -> dict:
        out = {
            "claim_id": self.claim_id,
            "paper_anchor": self.paper_anchor,
            "params": self.params,
            "status": self.status,
            "discovered_threshold": self.discovered_threshold,
            "witnesses": self.witnesses,
            "notes": self.notes,
        }
        if self.children:
            out["children"] = [c.to_json() for c in self.children]
        return out

    def leaves(self) -> list["VerificationReport"]:
        if not self.children:
            return [self]
        out = []
        for c in self.children:
            out.extend(c.leaves())
        return out

    def find(self, claim_id: str) -> "VerificationReport":
        if self.claim_id == claim_id:
            return self
        for c in self.children:
            try:
                return c.find(claim_id)
            except KeyError:
                pass
        raise KeyError(claim_id)

    @property
    def passed(self) -> bool:
        return self.status == PASS


def combine_status(statuses) -> str:
    statuses = list(statuses)
    if FAIL in statuses:
        return FAIL
    if PARTIAL in statuses:
        return PARTIAL
    return PASS


def group(claim_id, anchor, params, children, notes="") -> VerificationReport:
    return VerificationReport(
        claim_id, anchor, params, combine_status(c.status for c in children),
        notes=notes, children=children,
    )


def leaf(claim_id, anchor, params, failures, witnesses, notes="", threshold=None, partial=False):
    status = FAIL if failures else (PARTIAL if partial else PASS)
    if failures:
        shown = ", ".join(str(f) for f in failures[:10])
        more = f" (+{len(failures) - 10} more)" if len(failures) > 10 else ""
        notes = (notes + "; " if notes else "") + f"failed at {shown}{more}"
    return VerificationReport(claim_id, anchor, params, status, witnesses, threshold, notes)


def frac_str(x) -> str:
    return format_fraction(Fraction(x))


# -- enclosure helpers -----------------------------------------------------


class RootTable:
    """Certified positive and negative roots of ``build(n)`` over an index range."""

    def __init__(self, build: Callable[[int], ExactPoly], tol=DEFAULT_TOL):
        self.build = build
        self.tol = Fraction(tol)
        self._chains = {}
        self._pos = {}
        self._neg = {}
        self._ivs = {}

    def poly(self, n) -> ExactPoly:
        return self.build(n)

    def chain(self, n) -> SturmChain:
        if n not in self._chains:
            self._chains[n] = SturmChain(self.build(n))
        return self._chains[n]

    def intervals(self, n):
        if n not in self._ivs:
            self._ivs[n] = signed_intervals(self.build(n), self.chain(n))
        return self._ivs[n]

    def counts(self, n) -> tuple[int, int]:
        neg, pos = self.intervals(n)
        return len(neg), len(pos)

    def positive(self, n) -> RootRecord:
        if n not in self._pos:
            _, pos = self.intervals(n)
            if len(pos) != 1:
                raise ValueError(f"index {n}: {len(pos)} positive roots")
            self._pos[n] = refine_root(self.build(n), pos[0], self.tol, chain=self.chain(n), verify=False)
        return self._pos[n]

    def negative(self, n) -> RootRecord:
        if n not in self._neg:
            neg, _ = self.intervals(n)
            if len(neg) != 1:
                raise ValueError(f"index {n}: {len(neg)} negative roots")
            self._neg[n] = refine_root(self.build(n), neg[0], self.tol, chain=self.chain(n), verify=False)
        return self._neg[n]

    def tighten(self, n, which: str) -> RootRecord:
        store = self._pos if which == "pos" else self._neg
        rec = store[n]
        rec = refine_root(self.build(n), rec.interval, rec.tol * REFINE_FACTOR, chain=self.chain(n), verify=False)
        store[n] = rec
        return rec


def certified_less(table: RootTable, a: int, b: int, which: str) -> Optional[bool]:
    """Is root(a) < root(b)?  ``None`` if enclosures still overlap after one retry."""
    get = table.positive if which == "pos" else table.negative
    for attempt in range(2):
        ra, rb = get(a), get(b)
        if ra.hi < rb.lo:
            return True
        if rb.hi < ra.lo:
            return False
        if attempt == 0:
            table.tighten(a, which)
            table.tighten(b, which)
    return None


def gap_interval(rec: RootRecord, target: Fraction) -> tuple[Fraction, Fraction]:
    """Enclosure of |root - target|."""
    lo, hi = rec.lo - target, rec.hi - target
    if lo >= 0:
        return lo, hi
    if hi <= 0:
        return -hi, -lo
    return Fraction(0), max(-lo, hi)


def gap_shrinks(records: list[RootRecord], target) -> bool:
    """Certified strict decrease of |root - target| along ``records``."""
    target = Fraction(target)
    gaps = [gap_interval(r, target) for r in records]
    return all(g_next[1] < g_prev[0] for g_prev, g_next in zip(gaps, gaps[1:]))


def discover_threshold(indices: list[int], holds: dict) -> Optional[int]:
    """Smallest N in ``indices`` with ``holds[n]`` true for every n >= N."""
    threshold = None
    for n in reversed(indices):
        if not holds[n]:
            break
        threshold = n
    return threshold


# -- crossing points -------------------------------------------------------


@dataclass
class QuadraticRoot:
    """Certified enclosure of the negative root of a x^2 + b x + c (a > 0 > c)."""

    a: int
    b: int
    c: int
    lo: Fraction
    hi: Fraction

    @property
    def value(self) -> float:
        return float((self.lo + self.hi) / 2)

    @property
    def residual(self) -> float:
        x = self.value
        return abs(self.a * x * x + self.b * x + self.c) / max(abs(self.a), abs(self.b), abs(self.c))

    def to_json(self) -> dict:
        return {"lo": frac_str(self.lo), "hi": frac_str(self.hi), "value": self.value, "residual": self.residual}


def negative_quadratic_root(a: int, b: int, c: int, bits: int = 96) -> QuadraticRoot:
    disc = b * b - 4 * a * c
    if disc < 0:
        raise ValueError(f"negative discriminant {disc}")
    if a <= 0 or c >= 0:
        raise ValueError("expected a > 0 > c so that exactly one root is negative")
    scale = 1 << bits
    s = math.isqrt(disc * scale * scale)
    # s/scale <= sqrt(disc) < (s+1)/scale
    lo = (Fraction(-b) - Fraction(s + 1, scale)) / (2 * a)
    hi = (Fraction(-b) - Fraction(s, scale)) / (2 * a)
    q = lambda x: a * x * x + b * x + c  # noqa: E731
    if not (q(lo) > 0 > q(hi) or q(lo) == 0 or q(hi) == 0):
        raise ArithmeticError("square-root enclosure failed to bracket the root")
    return QuadraticRoot(a, b, c, lo, hi)


def _quadratic_from_difference(diff: ExactPoly, shift: int) -> tuple[int, int, int]:
    """Strip x^shift from a difference with three nonzero terms; return integer a, b, c."""
    quo, rem = divmod_poly(diff, ExactPoly.monomial(shift))
    if not rem.is_zero() or quo.degree != 2:
        raise ArithmeticError("difference is not x^shift times a quadratic")
    lcm = math.lcm(*(c.denominator for c in quo.coeffs))
    c0, c1, c2 = (int(v * lcm) for v in quo.coeffs)
    g = math.gcd(c0, c1, c2)
    return c2 // g, c1 // g, c0 // g


@dataclass
class CrossingPoints:
    family: str
    k: int
    l: int  # noqa: E741
    positive: Optional[Fraction] = None
    negative: Optional[QuadraticRoot] = None
    positive_residual: Optional[Fraction] = None
    closed_form_negative: Optional[float] = None

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "k": self.k,
            "l": self.l,
            "positive": frac_str(self.positive) if self.positive is not None else None,
            "negative": self.negative.to_json() if self.negative is not None else None,
            "closed_form_negative": self.closed_form_negative,
        }


def crossing_points(family: str, k: int, l: int = 0) -> CrossingPoints:  # noqa: E741
    """Abscissas where consecutive family members cross.

    Positive crossing: the nonzero root of ``P_k - P_{k-1}`` (exact
    rational).  Negative crossing: the negative root of the quadratic left
    after dividing ``P_k - P_{k-2}`` by its power of x (certified
    enclosure), checked against the closed forms used in the proofs.
    """
    family = family.upper()
    out = CrossingPoints(family, k, l)
    mp = mpmath.mp.clone()
    mp.dps = 40
    if family == "D":
        if k < 2:
            raise ValueError("need k >= 2")
        out.positive = Fraction(2 * k, k + l)
        out.positive_residual = evaluate(sub(make_D(k, l), make_D(k - 1, l)), out.positive)
        if k >= 3:
            a, b, c = _quadratic_from_difference(sub(make_D(k, l), make_D(k - 2, l)), k - 2)
            out.negative = negative_quadratic_root(a, b, c)
            kk, ll = mp.mpf(k), mp.mpf(l)
            out.closed_form_negative = float(
                kk / (2 * (kk + ll))
                - mp.sqrt((kk / (kk + ll)) ** 2 + 8 * kk * (kk - 1) / ((kk + ll) * (kk + ll - 1))) / 2
            )
    elif family == "I":
        if k < 2:
            raise ValueError("need k >= 2")
        out.positive = 2 + Fraction(2, k)
        out.positive_residual = evaluate(sub(make_I(k), make_I(k - 1)), out.positive)
        if k >= 3:
            a, b, c = _quadratic_from_difference(sub(make_I(k), make_I(k - 2)), k - 1)
            out.negative = negative_quadratic_root(a, b, c)
            kk = mp.mpf(k)
            out.closed_form_negative = float(
                (1 / kk - mp.sqrt((1 / kk) ** 2 + 8 / ((kk + 1) * (kk - 1)))) * (kk + 1) / 2
            )
    elif family == "H":
        if k < l + 3:
            raise ValueError("need k >= l + 3")
        out.positive = Fraction(2 * (k + 1), k - l - 1)
        out.positive_residual = evaluate(sub(make_H(k, l), make_H(k - 1, l)), out.positive)
        if k >= l + 4:
            a, b, c = _quadratic_from_difference(sub(make_H(k, l), make_H(k - 2, l)), k - 1)
            out.negative = negative_quadratic_root(a, b, c)
            kk, ll = mp.mpf(k), mp.mpf(l)
            r = (kk + 1) / (kk - ll - 1)
            out.closed_form_negative = float(
                (r - mp.sqrt(r**2 + 8 * (kk + 1) * kk / ((kk - ll - 1) * (kk - ll - 2)))) / 2
            )
    else:
        raise ValueError(f"no crossing points for family {family!r}")
    if out.positive_residual is not None and out.positive_residual != 0:
        raise ArithmeticError(f"positive crossing does not cancel: {out.positive_residual}")
    if out.negative is not None:
        if out.negative.residual >= QUAD_RESIDUAL_TOL:
            raise ArithmeticError(f"quadratic residual {out.negative.residual:.3e} at the negative crossing")
        if abs(out.negative.value - out.closed_form_negative) > 1e-9 * max(1.0, abs(out.closed_form_negative)):
            raise ArithmeticError("negative crossing disagrees with its closed form")
    return out


def sign_on_interval(p: ExactPoly, lo: Fraction, hi: Fraction) -> int:
    """Sign of p on [lo, hi] when it is the same at both ends, else 0."""
    a, b = evaluate(p, lo), evaluate(p, hi)
    if a > 0 and b > 0:
        return 1
    if a < 0 and b < 0:
        return -1
    return 0


def central_difference(f: Callable, h: float = 1e-6) -> float:
    return (f(h) - f(-h)) / (2 * h)


# -- root table and opening claims ------------------------------------------


TABLE1_COLUMNS = [
    ("F_{2k}", 0, 0),
    ("F_{2k+1}", 0, 1),
    ("F'_{2k}", 1, 0),
    ("F'_{2k+1}", 1, 1),
    ("F''_{2k}", 2, 0),
    ("F''_{2k+1}", 2, 1),
]
TABLE1_ROWS = ["(-1,0)", "(0,1]", "(1,2)"]


def _cell(text):
    rules = {
        "yes": lambda k: True,
        "no": lambda k: False,
        "yes (k>1)": lambda k: k > 1,
        "yes (k=1)": lambda k: k == 1,
        "yes (k=2)": lambda k: k == 2,
        "yes (k=1,2)": lambda k: k in (1, 2),
        "yes (k>2)": lambda k: k > 2,
    }
    return text, rules[text]


TABLE1 = {
    "(-1,0)": [_cell(t) for t in ("yes", "no", "no", "yes", "yes (k>1)", "no")],
    "(0,1]": [_cell(t) for t in ("no", "no", "yes (k=1)", "yes (k=1)", "yes (k=2)", "yes (k=1,2)")],
    "(1,2)": [_cell(t) for t in ("yes", "yes", "yes (k>1)", "yes (k>1)", "yes (k>2)", "yes (k>2)")],
}


def interval_has_root(chain: SturmChain, row: str) -> bool:
    if row == "(-1,0)":
        return count_open(chain, -1, 0) > 0
    if row == "(0,1]":
        return chain.count(0, 1) > 0
    if row == "(1,2)":
        return count_open(chain, 1, 2) > 0
    raise ValueError(row)


def verify_table1(k_max: int = 12) -> VerificationReport:
    if k_max < 3:
        raise ValueError("k_max must be >= 3")
    anchor = "Does Interval Contain a Root, yes or no?"
    chains = {}
    for _, order, odd in TABLE1_COLUMNS:
        for k in range(1, k_max + 1):
            p = nth_derivative(make_F(2 * k + odd), order)
            chains[(order, odd, k)] = SturmChain(p)
    children = []
    for row in TABLE1_ROWS:
        for (name, order, odd), (text, rule) in zip(TABLE1_COLUMNS, TABLE1[row]):
            failures, witnesses = [], []
            for k in range(1, k_max + 1):
                has = interval_has_root(chains[(order, odd, k)], row)
                witnesses.append([k, has])
                if has != rule(k):
                    failures.append(f"k={k}")
            children.append(leaf(
                f"table1.{name}.{row}", anchor, {"k_max": k_max}, failures, witnesses,
                notes=f"table entry: {text}",
            ))
    return group("table1", anchor, {"k_max": k_max}, children)


def verify_special_values() -> VerificationReport:
    anchor = "listed zeros of F_k', F_k''"
    F = lambda k, m: nth_derivative(make_F(k), m)  # noqa: E731
    checks = [
        ("F_3'(1)=0", evaluate(F(3, 1), 1) == 0),
        ("F_2'(1/2)=0", evaluate(F(2, 1), Fraction(1, 2)) == 0),
        ("F_2''=2", F(2, 2) == ExactPoly([2])),
        ("F_3''(1/3)=0", evaluate(F(3, 2), Fraction(1, 3)) == 0),
        ("F_5''(1)=0", evaluate(F(5, 2), 1) == 0),
    ]
    # (1 + sqrt(11/3))/4 has minimal polynomial 6x^2 - 3x - 1; F_4'' vanishes
    # at it (and its conjugate) iff that quadratic divides F_4''.
    _, rem = divmod_poly(F(4, 2), ExactPoly([-1, -3, 6]))
    checks.append(("F_4''((1+sqrt(11/3))/4)=0", rem.is_zero()))
    failures = [name for name, ok in checks if not ok]
    return leaf("intro.special_values", anchor, {}, failures, [[n, ok] for n, ok in checks])


def verify_g_sequence(k_max: int = 8, count: int = 60) -> VerificationReport:
    anchor = "G(k,l) = sum_{t=1}^{k} G(k,l-t), ratio limit"
    failures, witnesses = [], []
    for k in range(2, k_max + 1):
        seq = g_sequence(k, count)
        if seq[0] != 1 or any(seq[t - 1] != 2 ** (t - 2) for t in range(2, k + 1)):
            failures.append(f"k={k} initial values")
        for i in range(k, count):
            if seq[i] != sum(seq[i - k:i]):
                failures.append(f"k={k} index {i + 1}")
                break
        phi = float(RootTable(make_F).positive(k).approx)
        ratio = g_ratio(k, count - 1)
        witnesses.append([k, ratio - phi])
        if abs(ratio - phi) >= 1e-9:
            failures.append(f"k={k} ratio gap {ratio - phi:.3e}")
    notes = "ratio limit taken in l for fixed k"
    return leaf("intro.g_ratio", anchor, {"k_max": k_max, "count": count}, failures, witnesses, notes)


def verify_c_identity(samples: int = 100, n_max: int = 15, seed: int = 0x5EED) -> VerificationReport:
    anchor = "c-identity, for any c != -1,0"
    rng = random.Random(seed)
    failures, witnesses = [], []
    drawn = 0
    while drawn < samples:
        num, den = rng.randint(-50, 50), rng.randint(-50, 50)
        if den == 0:
            continue
        c = Fraction(num, den)
        if c in (0, -1):
            continue
        drawn += 1
        ok = all(check_identity_1_2(c, n) for n in range(n_max + 1))
        witnesses.append([frac_str(c), ok])
        if not ok:
            failures.append(frac_str(c))
    return leaf("intro.c_identity", anchor, {"samples": samples, "n_max": n_max, "seed": seed}, failures, witnesses)


def verify_polya_limit(n_max: int = 20) -> VerificationReport:
    anchor = "c -> -1 limit: 2(n+1) = sum C(n+i,2i-1) 2^(2i-1) (-1)^(n+i+1)"
    failures = [n for n in range(n_max + 1) if not check_polya_limit_identity(n)]
    return leaf("intro.c_limit_identity", anchor, {"n_max": n_max}, failures, [[n_max, not failures]])


def verify_fibonacci_zeros(k_max: int = 30, seed: int = 0x5EED) -> VerificationReport:
    """All but one zero of F_k in the unit disk; the exceptional one real in (1,2)."""
    anchor = "zeros of F_k distinct, all but one in the unit disk, that one real in (1,2)"
    failures, witnesses = [], []
    table = RootTable(make_F)
    for k in range(2, k_max + 1):
        p = make_F(k)
        chain = table.chain(k)
        if not chain.was_squarefree:
            failures.append(f"k={k} repeated root")
        if count_open(chain, 1, 2) != 1:
            failures.append(f"k={k} no root in (1,2)")
        rs = all_roots(p, seed=seed)
        if not rs.converged:
            failures.append(f"k={k} not converged")
            continue
        outside = [z for z in rs.roots if abs(z) > 1]
        dom = table.positive(k)
        bound = check_modulus_bound(p, dom, rs)
        vieta = vieta_check(p, rs)
        ok = (
            len(outside) == 1 and abs(outside[0].imag) < 1e-8
            and 1 < outside[0].real < 2 and bound.ok and vieta.ok
        )
        witnesses.append([k, {"outside_unit_disk": len(outside), "max_other_modulus": bound.max_other_modulus}])
        if not ok:
            failures.append(f"k={k}")
    return leaf("intro.unit_disk", anchor, {"k_max": k_max}, failures, witnesses)


# -- derivative family -----------------------------------------------------


def _complex_bound_leaf(claim_id, anchor, params, table, indices, seed, label) -> VerificationReport:
    failures, witnesses = [], []
    unit_disk = []
    for n in indices:
        p = table.poly(n)
        if p.degree > FLOAT_DEGREE_CAP or p.degree < 1:
            continue
        rs = all_roots(p, seed=seed)
        if not rs.converged:
            failures.append(f"{label}={n} not converged")
            continue
        bound = check_modulus_bound(p, table.positive(n), rs)
        vieta = vieta_check(p, rs)
        others = [abs(z) for i, z in enumerate(rs.roots) if i != bound.dominant_index]
        unit_disk.append(max(others, default=0.0))
        witnesses.append([n, bound.margin])
        if not bound.ok:
            failures.append(f"{label}={n} margin {bound.margin:.3e}")
        if not vieta.ok:
            failures.append(f"{label}={n} Vieta")
    note = f"max non-dominant modulus over sweep {max(unit_disk, default=0.0):.6f} (unit-disk question left open)"
    return leaf(claim_id, anchor, params, failures, witnesses, note)


def verify_derivative_theorem(l: int, j_max: int = 40, tol=DEFAULT_TOL, seed: int = 0x5EED) -> VerificationReport:  # noqa: E741
    if l < 1 or j_max < 4:
        raise ValueError("need l >= 1 and j_max >= 4")
    params = {"l": l, "j_max": j_max, "tol": frac_str(tol)}
    table = RootTable(lambda j: make_D(j, l), tol)
    js = list(range(1, j_max + 1))
    children = []

    # item 2: root counts by parity
    failures, witnesses = [], []
    for j in js:
        n_neg, n_pos = table.counts(j)
        want = (1 if j % 2 == 0 else 0, 1)
        witnesses.append([j, [n_pos, n_neg]])
        if (n_neg, n_pos) != want:
            failures.append(f"j={j}")
        if sign_variations(table.poly(j)) != 1:
            failures.append(f"j={j} Descartes")
        v_neg = sign_variations(reflect(table.poly(j)))
        if v_neg % 2 != n_neg % 2 or v_neg < n_neg:
            failures.append(f"j={j} Descartes(-x)")
    children.append(leaf(
        "thm1.item2", "one positive root and no/one negative root by parity of j",
        params, failures, witnesses,
    ))

    # item 3: u_{j+1} > u_j for j >= 2, with the crossing-point certificate
    failures, witnesses = [], []
    partial = False
    d2 = evaluate(make_D(2, l), Fraction(4, l + 2))
    want_d2 = math.factorial(l) * Fraction(3 * l + 2, l + 2)
    if d2 != want_d2 or d2 <= 0:
        failures.append(f"D_2(4/(l+2)) = {d2}")
    witnesses.append(["D_2(x_2)", frac_str(d2)])
    for j in range(2, j_max):
        less = certified_less(table, j, j + 1, "pos")
        cp = crossing_points("D", j + 1, l)
        cert = evaluate(table.poly(j), cp.positive) > 0
        witnesses.append([j, {"increasing": less, "crossing": frac_str(cp.positive), "D_j(x_{j+1})>0": cert}])
        if less is None:
            partial = True
        elif not less:
            failures.append(f"j={j}")
    children.append(leaf(
        "thm1.item3", "u_{j+1} > u_j for j >= 2; x_k = 2k/(k+l)",
        params, failures, witnesses, partial=partial,
    ))

    # item 1: limits (trend) and complex bound
    q = [max(2, j_max // 4), max(3, j_max // 2), j_max]
    u = [table.positive(j) for j in q]
    failures = [] if gap_shrinks(u, 2) else [f"|u_j - 2| not shrinking over j={q}"]
    in_12 = {j: 1 < table.positive(j).lo and table.positive(j).hi < 2 for j in js}
    j0 = discover_threshold(js, in_12)
    if j0 is None:
        failures.append("1 < u_j < 2 fails at j_max")
    witnesses = [[j, float(r.approx)] for j, r in zip(q, u)]
    children.append(leaf(
        "thm1.item1.limit_u", "lim u_j = 2", params, failures, witnesses,
        notes=f"1 < u_j < 2 for all j >= {j0} in sweep",
    ))
    evens = [j for j in js if j % 2 == 0]
    qv = [e for e in (_even_at_most(j_max // 4), _even_at_most(j_max // 2), _even_at_most(j_max)) if e >= 2]
    v = [table.negative(j) for j in qv]
    failures = [] if gap_shrinks(v, -1) else [f"|v_j + 1| not shrinking over j={qv}"]
    children.append(leaf(
        "thm1.item1.limit_v", "lim v_j = -1 (j even)", params, failures,
        [[j, float(r.approx)] for j, r in zip(qv, v)],
    ))
    children.append(_complex_bound_leaf(
        "thm1.item1.complex_bound", "other complex roots inside |z| < u_j",
        params, table, js, seed, "j",
    ))

    # item 4: eventual v_{n+2} < v_n for even n
    holds, witnesses = {}, []
    partial = False
    for n in evens[:-1]:
        less = certified_less(table, n + 2, n, "neg")
        if less is None:
            partial = True
        holds[n] = bool(less)
        cert = None
        if n + 2 >= 4:
            cp = crossing_points("D", n + 2, l)
            cert = sign_on_interval(table.poly(n), cp.negative.lo, cp.negative.hi) > 0
        witnesses.append([n, {"v_{n+2}<v_n": less, "D_n(x_{n+2})>0": cert}])
    idx = evens[:-1]
    n0 = discover_threshold(idx, holds)
    failures = []
    if n0 is None:
        partial = True
    elif n0 > idx[0] and holds[n0 - 2]:
        failures.append(f"threshold {n0} not minimal")
    fp = central_difference(lambda x: _dnmon_f(x, l))
    if fp <= 0:
        failures.append(f"f'(0) = {fp}")
    witnesses.append(["f'(0)", fp])
    notes = f"finite-difference f'(0) = {fp:.6f}; stated value 5l/2 = {5 * l / 2}; sign checked only"
    children.append(leaf(
        "thm1.item4", "exists even N_0 with v_{n+2} < v_n for even n > N_0",
        params, failures, witnesses, notes=notes, threshold=n0, partial=partial,
    ))
    return group(f"thm1.l{l}", "derivative family theorem", params, children)


def _even_at_most(n: int) -> int:
    return n - (n % 2)


def _odd_at_most(n: int) -> int:
    return n if n % 2 else n - 1


def _dnmon_f(x, l):  # noqa: E741
    return 0.5 * (1 - l * x) - 0.5 * math.sqrt((1 - l * x) ** 2 + 8 * (1 - l * x) * (1 - (l + 1) * x) / (1 - x))


def _nmon_f(x, l):  # noqa: E741
    a = 1 + (l + 2) * x
    return a - math.sqrt(a * a + 8 * a * (1 + (l + 1) * x) / (1 - x))


# -- first integral --------------------------------------------------------


def verify_first_integral_theorem(k_max: int = 60, tol=DEFAULT_TOL, seed: int = 0x5EED) -> VerificationReport:
    if k_max < 19:
        raise ValueError("k_max must be >= 19")
    params = {"k_max": k_max, "tol": frac_str(tol)}
    table = RootTable(make_I, tol)
    ks = list(range(1, k_max + 1))
    children = []

    # item 1: one positive simple root in (2, 3)
    failures, witnesses = [], []
    for k in ks:
        p, chain = table.poly(k), table.chain(k)
        _, n_pos = table.counts(k)
        in23 = count_open(chain, 2, 3)
        at2, at3 = evaluate(p, 2), evaluate(p, 3)
        if n_pos != 1 or in23 != 1 or not chain.was_squarefree or sign_variations(p) != 1:
            failures.append(f"k={k} count")
        if not (at2 < 0 < at3):
            failures.append(f"k={k} signs at 2,3")
        if k > 1:
            d2 = at2 - evaluate(make_I(k - 1), 2)
            d3 = at3 - evaluate(make_I(k - 1), 3)
            if d2 != Fraction(-(2 ** (k + 1)), k * (k + 1)):
                failures.append(f"k={k} I_k(2)-I_(k-1)(2)")
            if d3 != Fraction(3**k * (k - 2), k * (k + 1)):
                failures.append(f"k={k} I_k(3)-I_(k-1)(3)")
        witnesses.append([k, float(table.positive(k).approx)])
    children.append(leaf(
        "thm2.item1", "positive simple root 2 < phi_k < 3", params, failures, witnesses,
    ))

    # item 2: phi_{k+1} < phi_k for k >= 2 (needs phi_{k_max+1})
    failures, witnesses = [], []
    partial = False
    for k in range(2, k_max + 1):
        less = certified_less(table, k + 1, k, "pos")
        cp = crossing_points("I", k + 1)
        cert = evaluate(make_I(k + 1), cp.positive) < 0
        witnesses.append([k, {"decreasing": less, "I_{k+1}(2+2/(k+1))<0": cert}])
        if less is None:
            partial = True
        elif not less:
            failures.append(f"k={k}")
    first = certified_less(table, 2, 1, "pos")
    notes = f"phi_2 < phi_1: {first} (claim starts at k=2)"
    children.append(leaf(
        "thm2.item2", "phi_{k+1} < phi_k for k >= 2", params, failures, witnesses,
        notes=notes, partial=partial,
    ))

    # item 3: lim phi_k = 2 (trend)
    q = [max(2, k_max // 4), k_max // 2, k_max]
    recs = [table.positive(k) for k in q]
    failures = [] if gap_shrinks(recs, 2) else [f"|phi_k - 2| not shrinking over k={q}"]
    children.append(leaf(
        "thm2.item3", "lim phi_k = 2", params, failures,
        [[k, float(r.approx)] for k, r in zip(q, recs)],
    ))

    odds = [k for k in ks if k % 2 == 1]

    # item 4a: odd k, one negative simple root in (-2, -1); k in {1, 3} recorded
    failures, witnesses = [], []
    exceptions = []
    for k in odds:
        p, chain = table.poly(k), table.chain(k)
        n_neg, _ = table.counts(k)
        th = table.negative(k) if n_neg == 1 else None
        in_range = count_open(chain, -2, -1) == 1
        witnesses.append([k, float(th.approx) if th else None])
        if n_neg != 1:
            failures.append(f"k={k} has {n_neg} negative roots")
            continue
        if k >= 5:
            if not in_range or not (evaluate(p, -1) < 0 < evaluate(p, -2)):
                failures.append(f"k={k}")
        elif not in_range:
            exceptions.append(f"k={k}: I_k(-1)={frac_str(evaluate(p, -1))} > 0, theta_k={float(th.approx):.6f} in (-1,0)")
    i5m1, i5m2 = evaluate(make_I(5), -1), evaluate(make_I(5), -2)
    if i5m1 != Fraction(-1, 20) or i5m2 != Fraction(221, 15):
        failures.append("I_5(-1) or I_5(-2)")
    witnesses.append(["I_5(-1)", frac_str(i5m1)])
    witnesses.append(["I_5(-2)", frac_str(i5m2)])
    notes = "certified for odd k >= 5; statement disagrees with computation at " + "; ".join(exceptions)
    children.append(leaf(
        "thm2.item4a", "odd k, negative simple root -2 < theta_k < -1",
        params, failures, witnesses, notes=notes,
    ))

    # item 4b: lim theta_k = -1 (trend), I_k(-1) -> ln 2 - 1
    qo = [_odd_at_most(max(5, k_max // 4)), _odd_at_most(k_max // 2), _odd_at_most(k_max)]
    recs = [table.negative(k) for k in qo]
    failures = [] if gap_shrinks(recs, -1) else [f"|theta_k + 1| not shrinking over k={qo}"]
    target = math.log(2) - 1
    gaps = [abs(float(evaluate(make_I(k), -1)) - target) for k in qo]
    if not all(b < a for a, b in zip(gaps, gaps[1:])):
        failures.append("I_k(-1) not approaching ln 2 - 1")
    children.append(leaf(
        "thm2.item4b", "lim theta_k = -1", params, failures,
        [[k, float(r.approx)] for k, r in zip(qo, recs)],
    ))

    # item 4c: theta_k > theta_{k-2} for odd k >= 17
    holds, witnesses = {}, []
    partial = False
    idx = [k for k in odds if k >= 5]
    for k in idx:
        less = certified_less(table, k - 2, k, "neg")
        if less is None:
            partial = True
        holds[k] = bool(less)
        cp = crossing_points("I", k)
        cert = sign_on_interval(make_I(k - 2), cp.negative.lo, cp.negative.hi) < 0
        witnesses.append([k, {"theta_k>theta_{k-2}": less, "I_{k-2}(x_k)<0": cert}])
    failures = [f"k={k}" for k in idx if k >= 17 and not holds[k]]
    k0 = discover_threshold(idx, holds)
    if k0 is not None and k0 > idx[0] and holds[k0 - 2]:
        failures.append(f"threshold {k0} not minimal")
    pivot = crossing_points("I", 17)
    s17 = sign_on_interval(make_I(17), pivot.negative.lo, pivot.negative.hi)
    mid = (pivot.negative.lo + pivot.negative.hi) / 2
    val = float(evaluate(make_I(17), mid))
    if s17 >= 0 or abs(val - PIVOT_I17) >= 1e-8:
        failures.append(f"I_17(x_17) = {val}")
    witnesses.append(["x_17", pivot.negative.to_json()])
    witnesses.append(["I_17(x_17)", val])
    notes = (
        f"discovered threshold {k0}; x_17 closed form {pivot.closed_form_negative:.12f} "
        f"vs certified root {pivot.negative.value:.12f}"
    )
    children.append(leaf(
        "thm2.item4c", "theta_k > theta_{k-2} for k >= 17; I_17(x_17) = -0.0337812682",
        params, failures, witnesses, notes=notes, threshold=k0, partial=partial,
    ))

    # item 5: even k, no negative root
    failures, witnesses = [], []
    for k in ks:
        if k % 2:
            continue
        p, chain = table.poly(k), table.chain(k)
        b = cauchy_bound(p)
        n = chain.count(-b, 0)
        witnesses.append([k, n])
        if n != 0 or evaluate(p, -1) >= 0:
            failures.append(f"k={k}")
    children.append(leaf(
        "thm2.item5", "even k, I_k has no negative root", params, failures, witnesses,
    ))

    children.append(_complex_bound_leaf(
        "thm2.complex_bound", "complex zeros of I_k satisfy |z| < phi_k < 3",
        params, table, ks, seed, "k",
    ))
    return group("thm2", "first integral theorem", params, children)


def verify_integral_bound_and_limit(k_max: int = 60, grid=None) -> VerificationReport:
    """|I_k(x)| <= 1/(1-|x|) exactly, and I_k(x) -> -1 + ln(1-x)."""
    if grid is None:
        grid = [Fraction(s * n, d) for n, d in ((1, 10), (1, 2), (9, 10)) for s in (1, -1)]
    grid = [Fraction(x) for x in grid]
    if any(not (-1 < x < 1) for x in grid):
        raise ValueError("grid points must lie strictly inside (-1, 1)")
    anchor = "|I_k(x)| <= 1/(1-|x|) and lim I_k(x) = -1 + ln(1-x)"
    params = {"k_max": k_max, "grid": [frac_str(x) for x in grid]}
    mp = mpmath.mp.clone()
    mp.dps = 60
    failures, witnesses = [], []
    half = max(1, math.ceil(k_max / 2))
    for x in grid:
        bound = 1 / (1 - abs(x))
        bad = [k for k in range(1, k_max + 1) if abs(evaluate(make_I(k), x)) > bound]
        if bad:
            failures.append(f"bound at x={x}, k={bad[:3]}")
        limit = -1 + mp.log(1 - mp.mpf(x.numerator) / x.denominator)

        def gap(k):
            v = evaluate(make_I(k), x)
            return abs(mp.mpf(v.numerator) / v.denominator - limit)

        g_end, g_half = gap(k_max), gap(half)
        ax = mp.mpf(abs(x).numerator) / abs(x).denominator
        tau = 4 * ax**k_max / (1 - ax)
        shrinking = g_end < g_half or g_end == 0
        witnesses.append([frac_str(x), {"gap": float(g_end), "tau": float(tau)}])
        if not shrinking:
            failures.append(f"gap not shrinking at x={x}")
        if g_end > tau:
            failures.append(f"gap {float(g_end):.3e} > tau at x={x}")
    return leaf("thm2.bound_limit", anchor, params, failures, witnesses)


# -- general integral ------------------------------------------------------


def verify_general_integral_theorem(l: int, k_max: int = 40, tol=DEFAULT_TOL, seed: int = 0x5EED) -> VerificationReport:  # noqa: E741
    if l < 0 or k_max <= l + 5:
        raise ValueError("need l >= 0 and k_max > l + 5")
    params = {"l": l, "k_max": k_max, "tol": frac_str(tol)}
    table = RootTable(lambda k: make_H(k, l), tol)
    ks = list(range(l + 2, k_max + 1))
    evens = [k for k in ks if k % 2 == 0]
    odds = [k for k in ks if k % 2 == 1]
    children = []

    # items 2 and 3: negative-root counts, thresholds discovered
    neg_counts = {k: table.counts(k)[0] for k in ks}
    holds = {k: neg_counts[k] == 0 for k in evens}
    k_even = discover_threshold(evens, holds)
    children.append(leaf(
        "thm3.item2", "large even k, H_k(x) < 0 for x < 0", params, [],
        [[k, neg_counts[k]] for k in evens], threshold=k_even, partial=k_even is None,
        notes=f"no negative root for every even k >= {k_even} in sweep",
    ))
    holds = {k: neg_counts[k] == 1 for k in odds}
    k_odd = discover_threshold(odds, holds)
    children.append(leaf(
        "thm3.item3", "large odd k, exactly one negative root", params, [],
        [[k, neg_counts[k]] for k in odds], threshold=k_odd, partial=k_odd is None,
        notes=f"one negative root for every odd k >= {k_odd} in sweep",
    ))

    # item 4: alpha_{j+1} < alpha_j for j >= l+3
    failures, witnesses = [], []
    partial = False
    pivot = evaluate(make_H(l + 3, l), l + 4)
    if pivot >= 0:
        failures.append(f"H_(l+3)(l+4) = {pivot}")
    witnesses.append(["H_{l+3}(l+4)", frac_str(pivot)])
    for j in range(l + 3, k_max):
        less = certified_less(table, j + 1, j, "pos")
        cp = crossing_points("H", j + 1, l)
        cert = evaluate(table.poly(j), cp.positive) < 0
        witnesses.append([j, {"decreasing": less, "crossing": frac_str(cp.positive), "H_j(x_{j+1})<0": cert}])
        if less is None:
            partial = True
        elif not less:
            failures.append(f"j={j}")
    at_k1 = []
    for k in ks:
        v = evaluate(table.poly(k), k + 1)
        witnesses.append([f"H_{k}({k + 1})", frac_str(v)])
        if v < 0:
            at_k1.append(k)
    notes = f"H_k(k+1) < 0 holds only for k in {at_k1}; the crossing point is 2(k+1)/(k-l-1), equal to k+1 at k=l+3"
    children.append(leaf(
        "thm3.item4", "alpha_{j+1} < alpha_j for j >= l+3; H_k(k+1) < 0 at k = l+3",
        params, failures, witnesses, notes=notes, partial=partial,
    ))

    # item 5: beta_{n+2} > beta_n for odd n >= N_0
    holds, witnesses = {}, []
    partial = False
    idx = [n for n in odds if n + 2 <= k_max and neg_counts[n] == 1 and neg_counts[n + 2] == 1]
    for n in idx:
        less = certified_less(table, n, n + 2, "neg")
        if less is None:
            partial = True
        holds[n] = bool(less)
        cp = crossing_points("H", n + 2, l)
        cert = sign_on_interval(table.poly(n), cp.negative.lo, cp.negative.hi) < 0
        witnesses.append([n, {"beta_{n+2}>beta_n": less, "H_n(x_{n+2})<0": cert}])
    n0 = discover_threshold(idx, holds)
    failures = []
    if n0 is None:
        partial = True
    elif n0 > idx[0] and holds[n0 - 2]:
        failures.append(f"threshold {n0} not minimal")
    fp = central_difference(lambda x: _nmon_f(x, l))
    if abs(fp - (-2 * (l + 2))) > 1e-5:
        failures.append(f"f'(0) = {fp}, expected {-2 * (l + 2)}")
    witnesses.append(["f'(0)", fp])
    children.append(leaf(
        "thm3.item5", "exists odd N_0 with beta_{n+2} > beta_n; f'(0) = -2(l+2)",
        params, failures, witnesses, threshold=n0, partial=partial,
        notes=f"discovered N_0 = {n0}",
    ))

    # item 1: limits and complex bound
    q = [max(l + 3, k_max // 2), k_max]
    recs = [table.positive(k) for k in q]
    failures = [] if gap_shrinks(recs, 2) else [f"|alpha_k - 2| not shrinking over k={q}"]
    children.append(leaf(
        "thm3.item1.limit_alpha", "lim alpha_k = 2", params, failures,
        [[k, float(r.approx)] for k, r in zip(q, recs)],
    ))
    qo = [_odd_at_most(max(l + 3, k_max // 2)), _odd_at_most(k_max)]
    recs = [table.negative(k) for k in qo]
    failures = [] if gap_shrinks(recs, -1) else [f"|beta_k + 1| not shrinking over k={qo}"]
    children.append(leaf(
        "thm3.item1.limit_beta", "lim beta_k = -1 (k odd)", params, failures,
        [[k, float(r.approx)] for k, r in zip(qo, recs)],
    ))
    children.append(_complex_bound_leaf(
        "thm3.item1.complex_bound", "other complex roots inside |z| < alpha_k",
        params, table, ks, seed, "k",
    ))
    return group(f"thm3.l{l}", "general integral theorem", params, children)


def verify_numerator_form(k_max: int = 12, l_max: int = 5) -> VerificationReport:
    """D_{k-l} (x-1)^{l+1} has the closed numerator shape; recurrence signs compared."""
    anchor = "D_{k-l} = (sum (-1)^t a_t x^{k+1-t} + (-1)^l l!)/(x-1)^{l+1}"
    from .families import make_D_numerator

    failures, witnesses = [], []
    plus = minus = 0
    for l in range(1, l_max + 1):  # noqa: E741
        for k in range(l + 1, k_max + 1):
            num = make_D_numerator(k, l)
            c = num.coeffs
            middle = [c[i] for i in range(1, k - l)]
            if any(middle) or c[0] != (-1) ** l * math.factorial(l):
                failures.append(f"k={k},l={l} shape")
            if k == l + 1 or True:
                a = [(-1) ** t * c[k + 1 - t] for t in range(l + 2)]
                if a[0] <= 0:
                    failures.append(f"k={k},l={l} a_0")
            rec = numerator_recurrence_check(k, l) if l >= 2 else {"plus": True, "minus": True}
            plus += rec["plus"]
            minus += rec["minus"]
    witnesses.append(["recurrence with +a_{t-1} matches", plus])
    witnesses.append(["recurrence with -a_{t-1} matches", minus])
    notes = "first displayed form of b_t (with +a_{t-1}(k+2-t)) agrees with exact multiplication"
    return leaf("thm1.numerator_form", anchor, {"k_max": k_max, "l_max": l_max}, failures, witnesses, notes)


# -- whole run -------------------------------------------------------------

CLAIM_GROUPS = (
    "table1", "special_values", "g_ratio", "identity", "c_limit", "unit_disk",
    "numerator", "thm1", "thm2", "bound_limit", "thm3",
)

REQUIRED_COVERAGE = [
    "table1", "intro.c_identity", "intro.c_limit_identity", "thm2.bound_limit",
    "thm1.item1.limit_u", "thm1.item1.limit_v", "thm1.item1.complex_bound",
    "thm1.item2", "thm1.item3", "thm1.item4",
    "thm2.item1", "thm2.item2", "thm2.item3", "thm2.item4a", "thm2.item4b",
    "thm2.item4c", "thm2.item5", "thm2.complex_bound",
    "thm3.item1.limit_alpha", "thm3.item1.limit_beta", "thm3.item1.complex_bound",
    "thm3.item2", "thm3.item3", "thm3.item4", "thm3.item5",
]


@dataclass
class SweepConfig:
    table_kmax: int = 12
    d_ls: tuple = (1, 2, 3, 4)
    d_jmax: int = 40
    i_kmax: int = 60
    h_ls: tuple = (0, 1, 2)
    h_kmax: int = 40
    tol: Fraction = DEFAULT_TOL
    seed: int = 0x5EED

    def to_json(self) -> dict:
        return {
            "table_kmax": self.table_kmax,
            "d_ls": list(self.d_ls),
            "d_jmax": self.d_jmax,
            "i_kmax": self.i_kmax,
            "h_ls": list(self.h_ls),
            "h_kmax": self.h_kmax,
            "tol": frac_str(self.tol),
            "seed": self.seed,
        }


def run_group(name: str, cfg: SweepConfig) -> list[VerificationReport]:
    if name == "table1":
        return [verify_table1(cfg.table_kmax)]
    if name == "special_values":
        return [verify_special_values()]
    if name == "g_ratio":
        return [verify_g_sequence()]
    if name == "identity":
        return [verify_c_identity(seed=cfg.seed)]
    if name == "c_limit":
        return [verify_polya_limit()]
    if name == "unit_disk":
        return [verify_fibonacci_zeros(min(30, cfg.i_kmax), seed=cfg.seed)]
    if name == "numerator":
        return [verify_numerator_form()]
    if name == "thm1":
        return [verify_derivative_theorem(l, cfg.d_jmax, cfg.tol, cfg.seed) for l in cfg.d_ls]
    if name == "thm2":
        return [verify_first_integral_theorem(cfg.i_kmax, cfg.tol, cfg.seed)]
    if name == "bound_limit":
        return [verify_integral_bound_and_limit(cfg.i_kmax)]
    if name == "thm3":
        return [verify_general_integral_theorem(l, cfg.h_kmax, cfg.tol, cfg.seed) for l in cfg.h_ls]
    raise KeyError(f"unknown claim group {name!r}")


def merge_reports(reports: list[VerificationReport]) -> list[VerificationReport]:
    """Order-independent merge: sort by claim_id."""
    return sorted(reports, key=lambda r: r.claim_id)


def coverage_missing(reports: list[VerificationReport]) -> list[str]:
    ids = set()
    for r in reports:
        ids.add(r.claim_id)
        for leaf_ in r.leaves():
            ids.add(leaf_.claim_id)
    prefixes = {i.split(".l")[0] if i.startswith(("thm1.l", "thm3.l")) else i for i in ids}
    out = []
    for want in REQUIRED_COVERAGE:
        if want in ids or want in prefixes:
            continue
        if any(i.startswith(want) for i in ids):
            continue
        out.append(want)
    return out


def manifest(reports: list[VerificationReport], cfg: SweepConfig, groups) -> dict:
    reports = merge_reports(reports)
    leaves = [leaf_ for r in reports for leaf_ in r.leaves()]
    return {
        "tool": "polyzero",
        "version": __version__,
        "config": cfg.to_json(),
        "groups": sorted(groups, key=lambda g: CLAIM_GROUPS.index(g) if g in CLAIM_GROUPS else len(CLAIM_GROUPS)),
        "status": combine_status(r.status for r in reports),
        "summary": {s: sum(1 for x in leaves if x.status == s) for s in (PASS, PARTIAL, FAIL)},
        "reports": [r.to_json() for r in reports],
    }


def _run_group_task(args):
    name, cfg = args
    return run_group(name, cfg)


def verify_all(cfg: Optional[SweepConfig] = None, groups=None, jobs: int = 1) -> dict:
    """Run the selected claim groups and return the merged manifest.

    With ``jobs > 1`` groups run in worker processes; the merged result is
    identical to the serial one because reports are sorted by claim id.
    """
    cfg = cfg or SweepConfig()
    groups = list(CLAIM_GROUPS if groups is None else groups)
    unknown = [g for g in groups if g not in CLAIM_GROUPS]
    if unknown:
        raise KeyError(f"unknown claim groups: {unknown}")
    reports: list[VerificationReport] = []
    if jobs > 1 and len(groups) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_run_group_task, [(g, cfg) for g in groups]):
                reports.extend(part)
    else:
        for g in groups:
            reports.extend(run_group(g, cfg))
    out = manifest(reports, cfg, groups)
    if set(groups) == set(CLAIM_GROUPS):
        missing = coverage_missing(reports)
        if missing:
            raise AssertionError(f"claims without a report: {missing}")
    return out
