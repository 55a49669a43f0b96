from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyzero.families import FamilySpec, make_F, make_I
from polyzero.polycore import ExactPoly, evaluate, from_roots
from polyzero.realroots import (
    IsolatingInterval,
    RootIsolationError,
    SturmChain,
    count_closed,
    count_open,
    decimal_string,
    isolate_real_roots,
    negative_roots,
    positive_root,
    real_roots,
    refine_root,
    sign_variations,
    sturm_count,
)

import oracles


def test_sturm_endpoint_semantics():
    p = from_roots([0, 1, 2])
    assert sturm_count(p, 0, 2) == 2  # (0, 2] holds 1 and 2
    chain = SturmChain(p)
    assert count_open(chain, 0, 2) == 1
    assert count_closed(chain, 0, 2) == 3


def test_sturm_multiple_roots_counted_once():
    p = from_roots([1, 1, 1, -2])
    chain = SturmChain(p)
    assert not chain.was_squarefree
    assert chain.count() == 2


def test_empty_interval_rejected():
    with pytest.raises(ValueError):
        sturm_count(make_F(2), 1, 1)


def test_descartes():
    assert sign_variations(make_F(7)) == 1
    assert sign_variations(ExactPoly([1, -1, 1, -1])) == 3


def test_isolation_with_roots_on_dyadic_points():
    p = from_roots([0, Fraction(1, 2), -4, 8, Fraction(1, 3)])
    ivs = isolate_real_roots(p)
    assert len(ivs) == 5
    for a, b in zip(ivs, ivs[1:]):
        assert a.hi <= b.lo
    chain = SturmChain(p)
    for iv in ivs:
        assert chain.sign(iv.lo) != 0 and chain.sign(iv.hi) != 0


def test_golden_ratio():
    rec = positive_root(make_F(2), Fraction(1, 10**12))
    assert rec.hi - rec.lo <= Fraction(1, 10**12)
    assert rec.lo < Fraction(16180339887498948, 10**16) < rec.hi
    assert rec.approx_decimal().startswith("1.6180339887")


def test_refine_exact_rational_root():
    p = from_roots([Fraction(3, 2), 5])
    recs = real_roots(p, Fraction(1, 10**6))
    assert recs[0].lo <= Fraction(3, 2) <= recs[0].hi
    assert any(r.approx == Fraction(3, 2) or r.interval.exact_root == Fraction(3, 2) for r in recs) or \
        recs[0].hi - recs[0].lo <= Fraction(1, 10**6)


def test_refine_rejects_bad_interval():
    p = from_roots([1, 2])
    with pytest.raises(RootIsolationError):
        refine_root(p, IsolatingInterval(Fraction(0), Fraction(3), 1, 1))


def test_interval_invariant():
    with pytest.raises(ValueError):
        IsolatingInterval(Fraction(1), Fraction(1), 1, -1)


def test_negative_root_of_I():
    (th,) = negative_roots(make_I(17))
    assert -2 < th.lo and th.hi < -1


def test_record_json_shape():
    rec = positive_root(make_F(2), Fraction(1, 10**12), spec=FamilySpec("F", 2))
    js = rec.to_json()
    assert set(js) == {"spec", "lo", "hi", "approx_decimal", "tol"}
    assert js["tol"] == "1/1000000000000"
    assert js["spec"] == {"family": "F", "k": 2}


def test_decimal_string():
    assert decimal_string(Fraction(-1, 8), 4) == "-0.1250"


@settings(max_examples=40, deadline=None)
@given(st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=6), min_size=1, max_size=6, unique=True))
def test_isolation_finds_planted_roots(roots):
    p = from_roots(roots)
    recs = real_roots(p, Fraction(1, 10**9))
    assert len(recs) == len(roots)
    for r, want in zip(recs, sorted(roots)):
        assert r.lo <= want <= r.hi


@pytest.mark.parametrize("k", range(2, 7))
def test_isolation_matches_float_roots(k):
    for p in (make_F(k), make_I(k)):
        if p.degree > 6:
            continue
        got = [float(r) for r in real_roots(p)]
        want = oracles.float_real_roots(p)
        assert len(got) == len(want)
        assert max(abs(a - b) for a, b in zip(got, want)) < 1e-8
