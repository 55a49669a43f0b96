"""Exact root location for k-step Fibonacci polynomials and their derivative and integral families."""

__version__ = "0.1.0"

from .kernels import BACKEND  # noqa: E402
from .polycore import ExactPoly  # noqa: E402
from .families import Family, FamilySpec, make_D, make_F, make_H, make_I  # noqa: E402

__all__ = [
    "BACKEND",
    "ExactPoly",
    "Family",
    "FamilySpec",
    "make_D",
    "make_F",
    "make_H",
    "make_I",
    "__version__",
]
