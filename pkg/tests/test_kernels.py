from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from polyzero import kernels
from polyzero.families import make_F, make_I
from polyzero.realroots import SturmChain

BACKENDS = kernels.backends()
ints = st.lists(st.integers(min_value=-10**6, max_value=10**6), min_size=1, max_size=12)


def test_pure_backend_always_available():
    assert "pure" in BACKENDS
    assert kernels.BACKEND in ("compiled", "pure")


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_homogeneous_eval(name):
    mod = BACKENDS[name]
    # 1 + 2x + 3x^2 at 1/2, times 2^2
    assert mod.homogeneous_eval([1, 2, 3], 1, 2) == 4 + 4 + 3
    assert mod.sign_at([-1, 0, 1], 1, 1) == 0


@given(ints, st.integers(-1000, 1000), st.integers(1, 1000))
def test_backends_agree_on_evaluation(c, num, den):
    vals = {name: (m.homogeneous_eval(c, num, den), m.sign_at(c, num, den)) for name, m in BACKENDS.items()}
    assert len(set(vals.values())) == 1


@pytest.mark.parametrize("p", [make_F(9), make_I(13)])
def test_backends_agree_on_sturm(p):
    chain = SturmChain(p).chain
    for x in (Fraction(-3), Fraction(-1, 3), Fraction(0), Fraction(7, 4), Fraction(5)):
        got = {m.sturm_variations(chain, x.numerator, x.denominator) for m in BACKENDS.values()}
        assert len(got) == 1
    for pos in (True, False):
        assert len({m.sturm_variations_inf(chain, pos) for m in BACKENDS.values()}) == 1


def test_backends_agree_on_aberth():
    a = np.array([1, -1, -1, -1, -1], dtype=np.complex128)
    z0 = 3.0 * np.exp(1j * (np.arange(4) * np.pi / 2 + 0.3))
    outs = [np.sort_complex(np.asarray(m.aberth(a, z0.copy(), 500, 1e-15)[0])) for m in BACKENDS.values()]
    for o in outs[1:]:
        assert np.allclose(o, outs[0], atol=1e-12)
