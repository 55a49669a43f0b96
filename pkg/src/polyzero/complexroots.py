"""All complex roots in double precision, and modulus-bound checks.

Roots come from Aberth-Ehrlich iteration started on a circle of radius
equal to the Cauchy bound.  Nothing here is certified: results carry
per-root backward-error residuals and an honest convergence flag, and the
modulus checks compare against the exact enclosure of the dominant root.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from . import kernels
from .families import FamilySpec
from .polycore import ExactPoly, cauchy_bound, integer_clear_denominators
from .realroots import RootRecord

DEFAULT_SEED = 0x5EED
DEFAULT_MAX_ITER = 2000
DEFAULT_RESIDUAL_TOL = 1e-10
MAX_FLOAT_DEGREE = 200
MATCH_SLACK = 1e-6


class AmbiguousRootMatch(RuntimeError):
    """More than one computed root sits within slack of the dominant root."""


@dataclass
class ComplexRootSet:
    roots: np.ndarray
    residuals: np.ndarray
    converged: bool
    iterations: int
    spec: Optional[FamilySpec] = None

    def __len__(self):
        return len(self.roots)

    @property
    def moduli(self) -> np.ndarray:
        return np.abs(self.roots)

    def to_rows(self) -> list[dict]:
        fam = self.spec.family.value if self.spec else ""
        k = self.spec.k if self.spec else ""
        l = self.spec.l if self.spec else ""  # noqa: E741
        return [
            {
                "family": fam,
                "k": k,
                "l": l,
                "re": repr(float(z.real)),
                "im": repr(float(z.imag)),
                "modulus": repr(float(abs(z))),
                "residual": repr(float(r)),
            }
            for z, r in zip(self.roots, self.residuals)
        ]


CSV_FIELDS = ["family", "k", "l", "re", "im", "modulus", "residual"]


def to_csv(sets, handle=None) -> str:
    """One row per root across every set; returns the text when no handle is given."""
    buf = handle if handle is not None else io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    for s in sets:
        w.writerows(s.to_rows())
    return buf.getvalue() if handle is None else ""


def monic_float_coeffs(p: ExactPoly) -> np.ndarray:
    """Descending float coefficients of ``p / lc(p)``, denominators cleared first."""
    q = integer_clear_denominators(p)
    lead = q.leading
    out = np.array([float(c / lead) for c in reversed(q.coeffs)], dtype=np.float64)
    if not np.all(np.isfinite(out)):
        raise OverflowError("coefficients do not fit in double precision")
    return out


def initial_guesses(n: int, radius: float, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    base = 2.0 * math.pi * np.arange(n) / n
    jitter = rng.uniform(-0.25, 0.25, size=n) * (2.0 * math.pi / n)
    phases = base + rng.uniform(0.0, 2.0 * math.pi) + jitter
    return radius * np.exp(1j * phases)


def backward_residuals(coeffs_desc: np.ndarray, z: np.ndarray) -> np.ndarray:
    """|p(z)| divided by sum |a_i| |z|^i."""
    num = np.abs(np.polyval(coeffs_desc, z))
    den = np.polyval(np.abs(coeffs_desc), np.abs(z))
    return num / np.where(den > 0, den, 1.0)


def all_roots(
    p: ExactPoly,
    max_iter: int = DEFAULT_MAX_ITER,
    residual_tol: float = DEFAULT_RESIDUAL_TOL,
    seed: int = DEFAULT_SEED,
    spec: Optional[FamilySpec] = None,
    step_tol: float = 1e-15,
) -> ComplexRootSet:
    if p.is_zero() or p.degree < 1:
        raise ValueError("need a polynomial of degree >= 1")
    n = p.degree
    if n > MAX_FLOAT_DEGREE:
        raise ValueError(f"degree {n} exceeds the float cap {MAX_FLOAT_DEGREE}")
    a = monic_float_coeffs(p)
    if n == 1:
        z = np.array([-a[1] + 0j])
        return ComplexRootSet(z, backward_residuals(a, z), True, 0, spec)
    radius = float(cauchy_bound(p))
    z0 = initial_guesses(n, radius, seed)
    z, iters, _ = kernels.aberth(a.astype(np.complex128), z0, max_iter, step_tol)
    z = np.asarray(z)
    res = backward_residuals(a, z)
    converged = bool(np.all(np.isfinite(z)) and np.all(res <= residual_tol))
    order = np.argsort(-np.abs(z), kind="stable")
    return ComplexRootSet(z[order], res[order], converged, int(iters), spec)


@dataclass
class VietaCheck:
    sum_error: float
    product_error: float
    tol: float

    @property
    def ok(self) -> bool:
        return self.sum_error <= self.tol and self.product_error <= self.tol


def vieta_check(p: ExactPoly, rs: ComplexRootSet, tol: float = 1e-6) -> VietaCheck:
    """Relative errors of the root sum and product against the coefficients."""
    n = p.degree
    c = p.coeffs
    want_sum = -(c[n - 1] / c[n])
    want_prod = (-1) ** n * (c[0] / c[n])
    got_sum = complex(np.sum(rs.roots))
    logs = np.log(rs.roots.astype(np.complex128))
    got_prod = complex(np.exp(np.sum(logs)))
    es = abs(got_sum - float(want_sum)) / max(1.0, abs(float(want_sum)))
    ep = abs(got_prod - float(want_prod)) / max(1.0, abs(float(want_prod)))
    return VietaCheck(es, ep, tol)


@dataclass
class ModulusBound:
    ok: bool
    margin: float
    dominant_index: int
    max_other_modulus: float
    bound: float
    unit_disk_outside: int = 0
    notes: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "margin": self.margin,
            "dominant_index": self.dominant_index,
            "max_other_modulus": self.max_other_modulus,
            "bound": self.bound,
            "outside_unit_disk": self.unit_disk_outside,
        }


def check_modulus_bound(
    p: ExactPoly,
    dominant: RootRecord,
    roots: Optional[ComplexRootSet] = None,
    slack: float = MATCH_SLACK,
    **kwargs,
) -> ModulusBound:
    """Every root except the dominant one must lie strictly inside |z| < dominant.

    The comparison uses the lower end of the dominant root's exact
    enclosure, so a pass does not lean on the float approximation of the
    dominant root itself.
    """
    rs = roots if roots is not None else all_roots(p, **kwargs)
    if not rs.converged:
        raise ValueError("root iteration did not converge; refusing to compare moduli")
    lo, hi = float(dominant.lo), float(dominant.hi)
    near = [
        i for i, z in enumerate(rs.roots)
        if lo - slack <= z.real <= hi + slack and abs(z.imag) <= slack
    ]
    if len(near) != 1:
        if len(near) == 0:
            raise AmbiguousRootMatch(f"no computed root within {slack} of [{lo}, {hi}]")
        raise AmbiguousRootMatch(f"{len(near)} computed roots within {slack} of [{lo}, {hi}]")
    idx = near[0]
    others = np.delete(rs.moduli, idx)
    bound = float(Fraction(dominant.lo))
    max_other = float(others.max()) if others.size else 0.0
    margin = bound - max_other
    outside = int(np.sum(rs.moduli > 1.0))
    return ModulusBound(max_other < bound, margin, idx, max_other, bound, outside)
