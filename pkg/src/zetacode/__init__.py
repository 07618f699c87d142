"""Exact-arithmetic toolkit for weight enumerators, code zeta polynomials,
and algebraic-geometry codes of genus 0 and 1."""

from .gf import GF, FieldElement, FieldSpec
from .linear_code import (
    BudgetExceededError,
    LinearCode,
    Matrix,
    WeightDistribution,
)
from .enumerator import WeightEnumerator
from .zeta import RhVerdict, ZetaPolynomial
from .ag import CurvePoint, CurveZeta, Divisor, EllipticCurve, ProjectiveLine

__version__ = "0.1.0"

__all__ = [
    "GF",
    "FieldElement",
    "FieldSpec",
    "BudgetExceededError",
    "LinearCode",
    "Matrix",
    "WeightDistribution",
    "WeightEnumerator",
    "RhVerdict",
    "ZetaPolynomial",
    "CurvePoint",
    "CurveZeta",
    "Divisor",
    "EllipticCurve",
    "ProjectiveLine",
    "__version__",
]
