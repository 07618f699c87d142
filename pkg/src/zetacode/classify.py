"""Divisibility and self-duality classification of weight enumerators.

Covers the Gleason-Pierce type system (I-IV plus the degenerate product
pattern V), the Mallows-Sloane extremality bounds, and the companion
theory of 4-divisible enumerators that the binary MacWilliams substitution
negates rather than fixes ("formal" enumerators below).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .enumerator import (
    WeightEnumerator,
    is_virtually_self_dual,
    macwilliams_substitute,
)
from .zeta import (
    RhVerdict,
    ZetaPolynomial,
    anti_self_reciprocal_check,
    riemann_hypothesis,
    zeta_from_mds_basis,
)

# Generators of the order-16 matrix group whose invariant ring is spanned by
# w8 and w12; documentation-level constants, the checkers themselves only
# use exact integral substitutions.
G8_SIGMA_1 = "((1-i)/2) * [[1, -1], [1, 1]]"
G8_SIGMA_2 = "[[-i, 0], [0, 1]]"

_BOUNDS = {
    "I": lambda n: 2 * (n // 8) + 2,
    "II": lambda n: 4 * (n // 24) + 4,
    "III": lambda n: 3 * (n // 12) + 3,
    "IV": lambda n: 2 * (n // 6) + 2,
}


def w8() -> WeightEnumerator:
    """x^8 + 14 x^4 y^4 + y^8, the doubly-even self-dual invariant of degree 8."""
    return WeightEnumerator(8, (1, 0, 0, 0, 14, 0, 0, 0, 1), q=2)


def w12() -> WeightEnumerator:
    """x^12 - 33 x^8 y^4 - 33 x^4 y^8 + y^12, the degree-12 anti-invariant."""
    return WeightEnumerator(12, (1, 0, 0, 0, -33, 0, 0, 0, -33, 0, 0, 0, 1), q=2)


@dataclass(frozen=True)
class DivisibilityReport:
    """Classification of a virtually self-dual enumerator.

    ``b_max`` is the largest b > 1 with support inside b * Z (1 when
    none); ``type_label`` one of I/II/III/IV/V/none, with the strongest
    applicable label preferred (II over I).  The pure product pattern
    (x^2 + (q-1) y^2)^(n/2) is reported through ``v_pattern`` as a flag
    alongside any type it overlaps.
    """

    virtually_self_dual: bool
    reason: str | None
    b_max: int
    type_label: str
    v_pattern: bool
    d: int | None
    d_bound: int | None
    extremal: bool


def extremal_bound(type_label: str, n: int) -> int:
    """Minimum-distance bound for a type I-IV enumerator of length n."""
    try:
        return _BOUNDS[type_label](n)
    except KeyError:
        raise ValueError(f"no extremality bound for type {type_label!r}") from None


def _b_max(enum: WeightEnumerator) -> int:
    positive = [i for i in enum.support if i > 0]
    if not positive:
        return 1
    g = 0
    for i in positive:
        g = math.gcd(g, i)
    return g if g > 1 else 1


def _is_v_pattern(enum: WeightEnumerator, q: int) -> bool:
    if enum.n % 2:
        return False
    base = WeightEnumerator(2, (1, 0, q - 1), q=q)
    return (base ** (enum.n // 2)).coeffs == enum.coeffs


def classify(enum: WeightEnumerator, q: int) -> DivisibilityReport:
    """Assign a Gleason-Pierce type and extremality verdict.

    Inputs that are not virtually self-dual over q come back with type
    "none" and a reason rather than an error.
    """
    n = enum.n
    d = enum.min_distance
    b = _b_max(enum)
    if n % 2:
        return DivisibilityReport(False, "odd length", b, "none", False, d, None, False)
    if not is_virtually_self_dual(enum, q):
        return DivisibilityReport(
            False, f"not virtually self-dual over GF({q})", b, "none", False, d, None, False
        )
    v_flag = b % 2 == 0 and _is_v_pattern(enum, q)
    label = "none"
    if b > 1:
        if q == 2 and b % 4 == 0 and n % 8 == 0:
            label = "II"
        elif q == 2 and b % 2 == 0 and n % 2 == 0:
            label = "I"
        elif q == 3 and b % 3 == 0 and n % 4 == 0:
            label = "III"
        elif q == 4 and b % 2 == 0 and n % 2 == 0:
            label = "IV"
        elif v_flag:
            label = "V"
    if label in _BOUNDS:
        bound = extremal_bound(label, n)
        extremal = d == bound
    else:
        bound = None
        extremal = False
    return DivisibilityReport(True, None, b, label, v_flag, d, bound, extremal)


def is_formal_weight_enumerator(enum: WeightEnumerator) -> bool:
    """4-divisible support and exact sign-flip under the binary transform.

    Condition (b) is the integral identity
    W(x + y, x - y) = -2^(n/2) W(x, y); odd lengths cannot satisfy it.
    """
    if enum.n % 2:
        return False
    if any(c and i % 4 for i, c in enumerate(enum.coeffs)):
        return False
    scale = -(Fraction(2) ** (enum.n // 2))
    sub = macwilliams_substitute(enum, 2)
    return all(s == scale * c for s, c in zip(sub.coeffs, enum.coeffs))


@dataclass(frozen=True)
class FormalReport:
    """Verification results for one formal weight enumerator."""

    n: int
    d: int
    n_mod_8: int
    symmetric: bool
    support_multiple_of_4: bool
    zeta: ZetaPolynomial
    anti_functional_equation: bool
    d_bound: int
    extremal: bool
    rh: RhVerdict


def formal_checks(enum: WeightEnumerator, tol: float = 1e-8) -> FormalReport:
    """Run the full battery on a formal weight enumerator.

    Verifies symmetry in x and y, support in 4Z, the sign-flipped zeta
    functional equation a_j = -2^(j-g) a_(2g-j) with g = n/2 + 1 - d, the
    extremality bound 4*floor((n-12)/24) + 4, and reports the root-circle
    verdict (an open question in general, so measured rather than assumed).
    """
    if not is_formal_weight_enumerator(enum):
        raise ValueError("input fails the formal-weight-enumerator conditions")
    n = enum.n
    d = enum.min_distance
    if d is None:
        raise ValueError("formal enumerator with empty support")
    symmetric = all(enum.coeffs[i] == enum.coeffs[n - i] for i in range(n + 1))
    support_ok = all(i % 4 == 0 for i in enum.support)
    p = zeta_from_mds_basis(enum, 2, dimension=n // 2)
    bound = 4 * ((n - 12) // 24) + 4
    return FormalReport(
        n=n,
        d=d,
        n_mod_8=n % 8,
        symmetric=symmetric,
        support_multiple_of_4=support_ok,
        zeta=p,
        anti_functional_equation=anti_self_reciprocal_check(p),
        d_bound=bound,
        extremal=d == bound,
        rh=riemann_hypothesis(p, tol),
    )


def classification_report(enum: WeightEnumerator, q: int, tol: float = 1e-8) -> dict:
    """JSON-ready classification summary, including the formal verdict."""
    from .zeta import zeta_report  # local import to keep module load light

    rep = classify(enum, q)
    formal = is_formal_weight_enumerator(enum)
    out = {
        "n": enum.n,
        "q": q,
        "virtually_self_dual": rep.virtually_self_dual,
        "reason": rep.reason,
        "b_max": rep.b_max,
        "type": rep.type_label,
        "v_pattern": rep.v_pattern,
        "d": rep.d,
        "d_bound": rep.d_bound,
        "extremal": rep.extremal,
        "formal_weight_enumerator": formal,
    }
    try:
        if formal:
            fr = formal_checks(enum, tol)
            out["formal"] = {
                "n_mod_8": fr.n_mod_8,
                "symmetric": fr.symmetric,
                "anti_functional_equation": fr.anti_functional_equation,
                "d_bound": fr.d_bound,
                "extremal": fr.extremal,
            }
            out["zeta"] = zeta_report(fr.zeta, tol)
        else:
            p = zeta_from_mds_basis(enum, q)
            out["zeta"] = zeta_report(p, tol)
    except ValueError as exc:
        out["zeta"] = {"error": str(exc)}
    return out
