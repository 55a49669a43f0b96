from fractions import Fraction

import numpy as np
import pytest

from polyzero.complexroots import (
    AmbiguousRootMatch,
    CSV_FIELDS,
    all_roots,
    check_modulus_bound,
    initial_guesses,
    to_csv,
    vieta_check,
)
from polyzero.families import FamilySpec, make_D, make_F, make_H, make_I
from polyzero.polycore import ExactPoly, from_roots
from polyzero.realroots import positive_root

import oracles


@pytest.mark.parametrize("p", [make_F(5), make_I(6), make_D(7, 2), make_H(8, 1), from_roots([1, 2, 3])])
def test_aberth_matches_companion(p):
    rs = all_roots(p)
    assert rs.converged
    assert oracles.match_distance(rs.roots, oracles.companion_roots(p)) < 1e-8


def test_deterministic_given_seed():
    a = all_roots(make_I(20), seed=11)
    b = all_roots(make_I(20), seed=11)
    assert np.array_equal(a.roots, b.roots)


def test_initial_guesses_on_circle():
    z = initial_guesses(9, 3.0, 1)
    assert np.allclose(np.abs(z), 3.0)


def test_degree_one():
    rs = all_roots(ExactPoly([Fraction(-1, 2), 1]))
    assert rs.converged and abs(rs.roots[0] - 0.5) < 1e-15


def test_rejects_constants():
    with pytest.raises(ValueError):
        all_roots(ExactPoly([3]))


def test_vieta():
    p = make_F(12)
    v = vieta_check(p, all_roots(p))
    assert v.ok and v.sum_error < 1e-10


def test_modulus_bound_fibonacci():
    p = make_F(9)
    b = check_modulus_bound(p, positive_root(p))
    assert b.ok and b.margin > 0 and b.unit_disk_outside == 1


def test_ambiguous_match_detected():
    p = from_roots([2, 2 + Fraction(1, 10**9), -1])
    rec = positive_root(ExactPoly([-2, 1]))
    with pytest.raises(AmbiguousRootMatch):
        check_modulus_bound(p, rec, slack=1e-3)


def test_csv_rows():
    rs = all_roots(make_F(3), spec=FamilySpec("F", 3))
    text = to_csv([rs])
    lines = text.strip().splitlines()
    assert lines[0].split(",") == CSV_FIELDS
    assert len(lines) == 4
