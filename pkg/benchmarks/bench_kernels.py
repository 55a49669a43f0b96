"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--repeat N]

Times the three hot paths (exact homogeneous evaluation, Sturm sign
variations, Aberth iteration) on each importable backend and prints a
table plus the speedup of the compiled backend.
"""

from __future__ import annotations

import argparse
import timeit
from fractions import Fraction

import numpy as np

from polyzero import kernels
from polyzero.complexroots import initial_guesses, monic_float_coeffs
from polyzero.families import make_H, make_I
from polyzero.polycore import cauchy_bound
from polyzero.realroots import SturmChain


def workloads():
    p = make_I(60)
    ints, _ = p.integer_form()
    chain = SturmChain(make_I(41)).chain
    x = Fraction(-1061272621528, 10**12)
    q = make_H(30, 1)
    a = monic_float_coeffs(q).astype(np.complex128)
    z0 = initial_guesses(q.degree, float(cauchy_bound(q)), 0x5EED)
    return {
        "homogeneous_eval I_60": lambda m: m.homogeneous_eval(ints, x.numerator, x.denominator),
        "sturm_variations I_41": lambda m: m.sturm_variations(chain, x.numerator, x.denominator),
        "aberth H_30 (l=1)": lambda m: m.aberth(a, z0.copy(), 2000, 1e-15),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--number", type=int, default=20)
    args = ap.parse_args(argv)
    backends = kernels.backends()
    names = sorted(backends)
    print(f"{'workload':28s}" + "".join(f"{n + ' (ms)':>16s}" for n in names) + f"{'speedup':>10s}")
    for label, fn in workloads().items():
        times = {}
        for n in names:
            t = timeit.repeat(lambda: fn(backends[n]), repeat=args.repeat, number=args.number)
            times[n] = min(t) / args.number * 1e3
        speed = times["pure"] / times["compiled"] if "compiled" in times else float("nan")
        print(f"{label:28s}" + "".join(f"{times[n]:16.4f}" for n in names) + f"{speed:10.1f}x")


if __name__ == "__main__":
    main()
