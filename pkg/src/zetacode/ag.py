"""Curves over finite fields (genus 0 and 1) and the codes they produce.

Elliptic curves are kept in long Weierstrass form with the full
characteristic-2/3 group-law formulas, so every small field works.  Weight
statistics of the evaluation codes can be cross-checked three independent
ways: brute-force codeword enumeration (module linear_code), the
minimum-count recursion for [n, k, n-k] elliptic codes, and a direct count
of effective divisors in a divisor class (``fiber_count``), which reduces
linear equivalence to the group structure on the rational points.

Closed points of degree r are realized as Frobenius orbits of points over
GF(q^r); the enumeration of effective divisors is therefore exact but
meant for desk-scale parameters, not production point counting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .gf import GF, FieldElement, FieldSpec, extension_field
from .linear_code import (
    BudgetExceededError,
    LinearCode,
    Matrix,
    WeightDistribution,
)
from .zeta import RhVerdict, roots_on_circle_verdict

DEFAULT_FIBER_BUDGET = 10**6


# -- points and curves ----------------------------------------------------


@dataclass(frozen=True)
class CurvePoint:
    """A rational point: affine (x, y) or the distinguished point at infinity."""

    x: FieldElement | None
    y: FieldElement | None

    @classmethod
    def infinity(cls) -> "CurvePoint":
        return cls(None, None)

    @classmethod
    def affine(cls, x: FieldElement, y: FieldElement) -> "CurvePoint":
        if x is None or y is None:
            raise ValueError("affine points need both coordinates")
        return cls(x, y)

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def sort_key(self) -> tuple[int, int, int]:
        if self.is_infinity:
            return (0, 0, 0)
        return (1, self.x.index, self.y.index)

    def __str__(self) -> str:
        if self.is_infinity:
            return "O"
        return f"{self.x.index},{self.y.index}"


@dataclass(frozen=True)
class LinePoint:
    """A rational point of the projective line: an x value or infinity."""

    x: FieldElement | None

    @classmethod
    def infinity(cls) -> "LinePoint":
        return cls(None)

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def sort_key(self) -> tuple[int, int, int]:
        return (0, 0, 0) if self.is_infinity else (1, self.x.index, 0)

    def __str__(self) -> str:
        return "O" if self.is_infinity else str(self.x.index)


@dataclass(frozen=True)
class EllipticCurve:
    """y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6, nonsingular."""

    spec: FieldSpec
    a1: FieldElement
    a2: FieldElement
    a3: FieldElement
    a4: FieldElement
    a6: FieldElement

    def __post_init__(self):
        for a in (self.a1, self.a2, self.a3, self.a4, self.a6):
            if a.spec != self.spec:
                raise ValueError("curve coefficient from a different field")
        if self.discriminant().is_zero:
            raise ValueError("singular curve: discriminant is zero")

    @classmethod
    def from_indices(cls, spec: FieldSpec, coeffs) -> "EllipticCurve":
        a1, a2, a3, a4, a6 = (spec.element(int(c)) for c in coeffs)
        return cls(spec, a1, a2, a3, a4, a6)

    def coefficient_indices(self) -> tuple[int, int, int, int, int]:
        return (self.a1.index, self.a2.index, self.a3.index, self.a4.index, self.a6.index)

    def discriminant(self) -> FieldElement:
        s = self.spec
        a1, a2, a3, a4, a6 = (a.index for a in (self.a1, self.a2, self.a3, self.a4, self.a6))
        mul, addi, sub, im = s.mul_idx, s.add_idx, s.sub_idx, s.int_mul_idx
        b2 = addi(mul(a1, a1), im(4, a2))
        b4 = addi(im(2, a4), mul(a1, a3))
        b6 = addi(mul(a3, a3), im(4, a6))
        b8 = sub(
            addi(
                addi(mul(mul(a1, a1), a6), im(4, mul(a2, a6))),
                mul(a2, mul(a3, a3)),
            ),
            addi(mul(a1, mul(a3, a4)), mul(a4, a4)),
        )
        disc = sub(
            addi(im(9, mul(b2, mul(b4, b6))), 0),
            addi(
                addi(mul(mul(b2, b2), b8), im(8, mul(b4, mul(b4, b4)))),
                im(27, mul(b6, b6)),
            ),
        )
        return s.element(disc)

    def contains(self, point: CurvePoint) -> bool:
        if point.is_infinity:
            return True
        s = self.spec
        x, y = point.x.index, point.y.index
        a1, a2, a3, a4, a6 = self.coefficient_indices()
        lhs = s.add_idx(s.mul_idx(y, y), s.add_idx(s.mul_idx(s.mul_idx(a1, x), y), s.mul_idx(a3, y)))
        x2 = s.mul_idx(x, x)
        rhs = s.add_idx(
            s.add_idx(s.mul_idx(x2, x), s.mul_idx(a2, x2)),
            s.add_idx(s.mul_idx(a4, x), a6),
        )
        return lhs == rhs


def _affine_point_indices(spec: FieldSpec, coeffs) -> list[tuple[int, int]]:
    """All (x, y) index pairs satisfying the Weierstrass equation, lex order."""
    a1, a2, a3, a4, a6 = (int(c) for c in coeffs)
    q = spec.q
    tab = spec.tables
    mulb, addb = tab.mul, tab.add
    xs = np.repeat(np.arange(q, dtype=np.int64), q)
    ys = np.tile(np.arange(q, dtype=np.int64), q)
    lhs = addb[addb[mulb[ys, ys], mulb[mulb[a1, xs], ys]], mulb[a3, ys]]
    x2 = mulb[xs, xs]
    rhs = addb[addb[mulb[x2, xs], mulb[a2, x2]], addb[mulb[a4, xs], a6]]
    mask = lhs == rhs
    return list(zip(xs[mask].tolist(), ys[mask].tolist()))


def points(curve: EllipticCurve) -> list[CurvePoint]:
    """All rational points: infinity first, then affine points in lex order."""
    spec = curve.spec
    out = [CurvePoint.infinity()]
    for x, y in _affine_point_indices(spec, curve.coefficient_indices()):
        out.append(CurvePoint.affine(spec.element(x), spec.element(y)))
    return out


def negate_point(curve: EllipticCurve, point: CurvePoint) -> CurvePoint:
    if point.is_infinity:
        return point
    s = curve.spec
    x, y = point.x.index, point.y.index
    a1, _, a3, _, _ = curve.coefficient_indices()
    ny = s.neg_idx(s.add_idx(y, s.add_idx(s.mul_idx(a1, x), a3)))
    return CurvePoint.affine(s.element(x), s.element(ny))


def add_points(curve: EllipticCurve, p1: CurvePoint, p2: CurvePoint) -> CurvePoint:
    """Chord-and-tangent addition with identity at infinity."""
    if not curve.contains(p1) or not curve.contains(p2):
        raise ValueError("point is not on the curve")
    if p1.is_infinity:
        return p2
    if p2.is_infinity:
        return p1
    s = curve.spec
    a1, a2, a3, a4, a6 = curve.coefficient_indices()
    x1, y1 = p1.x.index, p1.y.index
    x2, y2 = p2.x.index, p2.y.index
    mul, addi, sub, im = s.mul_idx, s.add_idx, s.sub_idx, s.int_mul_idx
    if x1 == x2 and y2 == s.neg_idx(addi(y1, addi(mul(a1, x1), a3))):
        return CurvePoint.infinity()
    if x1 == x2 and y1 == y2:
        den = addi(im(2, y1), addi(mul(a1, x1), a3))
        num_l = sub(addi(im(3, mul(x1, x1)), addi(im(2, mul(a2, x1)), a4)), mul(a1, y1))
        lam = s.div_idx(num_l, den)
        num_n = sub(addi(mul(a4, x1), im(2, a6)), addi(mul(mul(x1, x1), x1), mul(a3, y1)))
        nu = s.div_idx(num_n, den)
    else:
        dx = sub(x2, x1)
        lam = s.div_idx(sub(y2, y1), dx)
        nu = s.div_idx(sub(mul(y1, x2), mul(y2, x1)), dx)
    x3 = sub(sub(addi(mul(lam, lam), mul(a1, lam)), a2), addi(x1, x2))
    y3 = s.neg_idx(addi(addi(mul(addi(lam, a1), x3), nu), a3))
    return CurvePoint.affine(s.element(x3), s.element(y3))


def scalar_point_mul(curve: EllipticCurve, m: int, point: CurvePoint) -> CurvePoint:
    if m < 0:
        return scalar_point_mul(curve, -m, negate_point(curve, point))
    acc = CurvePoint.infinity()
    base = point
    while m:
        if m & 1:
            acc = add_points(curve, acc, base)
        m >>= 1
        if m:
            base = add_points(curve, base, base)
    return acc


@dataclass(frozen=True)
class ProjectiveLine:
    """The genus-0 curve; divisor classes are determined by degree alone."""

    spec: FieldSpec

    def points(self) -> list[LinePoint]:
        out = [LinePoint.infinity()]
        out.extend(LinePoint(e) for e in self.spec.elements())
        return out


# -- divisors -------------------------------------------------------------


@dataclass(frozen=True)
class Divisor:
    """A finite integer combination of points, stored sorted without zeros."""

    entries: tuple[tuple[object, int], ...]

    @classmethod
    def of(cls, items) -> "Divisor":
        """Build from a dict or an iterable of (point, multiplicity) pairs."""
        acc: dict = {}
        pairs = items.items() if isinstance(items, dict) else items
        for point, mult in pairs:
            mult = int(mult)
            if mult:
                acc[point] = acc.get(point, 0) + mult
        cleaned = [(p, m) for p, m in acc.items() if m]
        cleaned.sort(key=lambda pm: pm[0].sort_key())
        return cls(tuple(cleaned))

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.entries)

    @property
    def support(self) -> tuple:
        return tuple(p for p, _ in self.entries)

    def multiplicity(self, point) -> int:
        for p, m in self.entries:
            if p == point:
                return m
        return 0

    @property
    def is_effective(self) -> bool:
        return all(m > 0 for _, m in self.entries)


# -- curve zeta -----------------------------------------------------------


@dataclass(frozen=True)
class CurveZeta:
    """The numerator polynomial (degree 2g, integer coefficients) of a
    curve zeta function, validated against its functional equation."""

    q: int
    g: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.g < 0:
            raise ValueError(f"genus must be nonnegative, got {self.g}")
        if len(self.coeffs) != 2 * self.g + 1:
            raise ValueError(
                f"numerator of a genus-{self.g} zeta must have degree {2 * self.g}"
            )
        if self.coeffs[0] != 1:
            raise ValueError("curve zeta numerator must have constant term 1")
        for i in range(self.g + 1):
            if self.coeffs[i] * self.q ** (self.g - i) != self.coeffs[2 * self.g - i]:
                raise ValueError(
                    "coefficients violate the functional equation "
                    f"at index {i}: {self.coeffs}"
                )


def zeta_from_point_counts(q: int, g: int, counts) -> CurveZeta:
    """Recover the zeta numerator from the first g point counts.

    The log of the numerator matches sum_k (N_k - q^k - 1) T^k / k up to
    order g; the remaining coefficients follow from the functional
    equation.  Non-integer intermediate coefficients mean the counts are
    not those of a curve, and raise.
    """
    counts = [int(c) for c in counts]
    if g < 0:
        raise ValueError(f"genus must be nonnegative, got {g}")
    if len(counts) != g:
        raise ValueError(f"need exactly g = {g} point counts, got {len(counts)}")
    if g == 0:
        return CurveZeta(q, 0, (1,))
    s = [Fraction(0)] + [Fraction(counts[k - 1] - q**k - 1, k) for k in range(1, g + 1)]
    ell: list[Fraction] = [Fraction(1)]
    for m in range(1, g + 1):
        acc = sum((j * s[j] * ell[m - j] for j in range(1, m + 1)), start=Fraction(0))
        ell.append(acc / m)
    out = []
    for i, c in enumerate(ell):
        if c.denominator != 1:
            raise ValueError(f"inconsistent point counts: coefficient {i} is {c}")
        out.append(c.numerator)
    for i in range(g + 1, 2 * g + 1):
        out.append(q ** (i - g) * out[2 * g - i])
    return CurveZeta(q, g, tuple(out))


def curve_rh(z: CurveZeta, tol: float = 1e-8) -> RhVerdict:
    """Root-circle check |T| = 1/sqrt(q) for the zeta numerator."""
    return roots_on_circle_verdict(z.coeffs, z.q, tol)


# -- evaluation codes -----------------------------------------------------


def grs_code(spec: FieldSpec, alphas, multipliers, k: int) -> LinearCode:
    """Generalized Reed-Solomon code: rows v_j alpha_j^i, i = 0..k-1."""
    alphas = list(alphas)
    multipliers = list(multipliers)
    n = len(alphas)
    if len(multipliers) != n:
        raise ValueError(f"need {n} column multipliers, got {len(multipliers)}")
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n = {n}, got k = {k}")
    idx_alpha = []
    for a in alphas:
        a = a.index if isinstance(a, FieldElement) else int(a)
        if not 0 <= a < spec.q:
            raise ValueError(f"evaluation point {a} out of range for GF({spec.q})")
        idx_alpha.append(a)
    if len(set(idx_alpha)) != n:
        raise ValueError("repeated evaluation points")
    idx_v = []
    for v in multipliers:
        v = v.index if isinstance(v, FieldElement) else int(v)
        if v == 0:
            raise ValueError("zero column multiplier")
        idx_v.append(v)
    rows = [
        [spec.mul_idx(idx_v[j], spec.pow_idx(idx_alpha[j], i)) for j in range(n)]
        for i in range(k)
    ]
    return LinearCode(Matrix.from_indices(spec, rows))


def one_point_basis(k: int) -> list[tuple[int, int]]:
    """Monomial exponents (i, j) of x^i y^j with j <= 1 and 2i + 3j <= k.

    x and y have pole orders 2 and 3 at the point at infinity, so these
    are k functions with poles bounded by k * O, distinct pole orders, for
    any k >= 1.
    """
    if k < 1:
        raise ValueError(f"pole bound must be >= 1, got k = {k}")
    monos = [(i, 0) for i in range(k // 2 + 1)]
    monos += [(i, 1) for i in range((k - 3) // 2 + 1)] if k >= 3 else []
    monos.sort(key=lambda ij: 2 * ij[0] + 3 * ij[1])
    return monos


def elliptic_code(
    curve: EllipticCurve, k: int, eval_points: list[CurvePoint] | None = None
) -> LinearCode:
    """One-point evaluation code with pole divisor k * O.

    Evaluation points default to every rational point except infinity.
    The dimension is exactly k, and the minimum distance is n - k or
    n - k + 1.
    """
    spec = curve.spec
    if eval_points is None:
        eval_points = points(curve)[1:]
    eval_points = list(eval_points)
    n = len(eval_points)
    seen = set()
    for p in eval_points:
        if p.is_infinity:
            raise ValueError("evaluation points must avoid the pole point at infinity")
        if not curve.contains(p):
            raise ValueError(f"evaluation point {p} is not on the curve")
        if p in seen:
            raise ValueError(f"repeated evaluation point {p}")
        seen.add(p)
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n = {n}, got k = {k}")
    rows = []
    for i, j in one_point_basis(k):
        row = [
            spec.mul_idx(spec.pow_idx(p.x.index, i), spec.pow_idx(p.y.index, j))
            for p in eval_points
        ]
        rows.append(row)
    return LinearCode(Matrix.from_indices(spec, rows))


def elliptic_distribution_from_amin(
    n: int, k: int, q: int, a_min: int
) -> WeightDistribution:
    """Full weight distribution of an [n, k, n-k]_q elliptic-type code.

    Only the minimum-weight count is free; the rest follows from the
    binomial-moment identities:

        A_(n-k+l) = C(n, k-l) sum_{i=0}^{l-1} (-1)^i C(n-k+l, i) (q^(l-i) - 1)
                    + (-1)^l C(k, k-l) A_(n-k).

    Raises on any negative intermediate count or when the completed counts
    do not sum to q^k (both signal an invalid A_(n-k)).
    """
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got n={n}, k={k}")
    a_min = int(a_min)
    if a_min <= 0:
        raise ValueError(f"minimum-weight count must be positive, got {a_min}")
    counts = [0] * (n + 1)
    counts[0] = 1
    for l in range(k + 1):
        s = sum(
            (-1) ** i * comb(n - k + l, i) * (q ** (l - i) - 1) for i in range(l)
        )
        val = comb(n, k - l) * s + (-1) ** l * comb(k, k - l) * a_min
        if val < 0:
            raise ValueError(
                f"invalid minimum-weight count {a_min}: A_{n - k + l} would be {val}"
            )
        counts[n - k + l] = val
    if sum(counts) != q**k:
        raise ValueError(
            f"invalid minimum-weight count {a_min}: counts sum to {sum(counts)}, not q^k"
        )
    return WeightDistribution(n, tuple(counts))


def amin_coprime(n: int, k: int, q: int) -> int:
    """Minimum-weight count (q-1) C(n, k) / n when gcd(k, n) = 1.

    Applies to a non-MDS code evaluated at all n rational points with a
    pole divisor of degree k supported away from them.
    """
    if math.gcd(k, n) != 1:
        raise ValueError(f"requires gcd(k, n) = 1, got k={k}, n={n}")
    val = Fraction((q - 1) * comb(n, k), n)
    if val.denominator != 1:
        raise ValueError(f"count {val} is not an integer; hypothesis violated")
    return val.numerator


def amin_onepoint(n: int, k: int, q: int) -> int:
    """Minimum-weight count for the one-point code at all non-identity points.

    Requires k! coprime to n + 1 (the number of rational points) and a
    non-MDS code; the count is (q-1)/(n+1) (C(n, k) + (-1)^k n).
    """
    if any(math.gcd(i, n + 1) != 1 for i in range(2, k + 1)):
        raise ValueError(f"requires gcd(k!, n+1) = 1, got k={k}, n+1={n + 1}")
    val = Fraction((q - 1) * (comb(n, k) + (-1) ** k * n), n + 1)
    if val.denominator != 1:
        raise ValueError(f"count {val} is not an integer; hypothesis violated")
    return val.numerator


# -- closed places and the divisor-class counting oracle -------------------


@dataclass(frozen=True)
class Place:
    """A closed point: a Frobenius orbit of geometric points.

    ``rational_point`` is set for degree-1 places; ``class_point`` is the
    group sum of the orbit mapped back to the base curve (genus 1 only).
    """

    degree: int
    key: tuple
    rational_point: object | None
    class_point: object | None


def _elliptic_places(curve: EllipticCurve, max_degree: int) -> list[Place]:
    spec = curve.spec
    q = spec.q
    out = [
        Place(1, (1,) + p.sort_key(), p, p)
        for p in points(curve)
    ]
    for r in range(2, max_degree + 1):
        ext, embed = extension_field(spec, r)
        inv_embed = {e: i for i, e in enumerate(embed)}
        ext_curve = EllipticCurve.from_indices(
            ext, [embed[c] for c in curve.coefficient_indices()]
        )
        frob = {i: ext.pow_idx(i, q) for i in range(ext.q)}
        seen: set[tuple[int, int]] = set()
        for x, y in _affine_point_indices(ext, ext_curve.coefficient_indices()):
            if (x, y) in seen:
                continue
            orbit = [(x, y)]
            cx, cy = frob[x], frob[y]
            while (cx, cy) != (x, y):
                orbit.append((cx, cy))
                cx, cy = frob[cx], frob[cy]
            for pt in orbit:
                seen.add(pt)
            if len(orbit) != r:
                continue  # defined over a proper subfield; counted at its degree
            acc = CurvePoint.infinity()
            for ox, oy in orbit:
                acc = add_points(
                    ext_curve,
                    acc,
                    CurvePoint.affine(ext.element(ox), ext.element(oy)),
                )
            if acc.is_infinity:
                cls = CurvePoint.infinity()
            else:
                bx = inv_embed.get(acc.x.index)
                by = inv_embed.get(acc.y.index)
                if bx is None or by is None:
                    raise RuntimeError("orbit sum not fixed by Frobenius")
                cls = CurvePoint.affine(spec.element(bx), spec.element(by))
            rep = min(orbit)
            out.append(Place(r, (r, 1, rep[0], rep[1]), None, cls))
    out.sort(key=lambda pl: pl.key)
    return out


def _line_places(line: ProjectiveLine, max_degree: int) -> list[Place]:
    spec = line.spec
    q = spec.q
    out = [Place(1, (1,) + p.sort_key(), p, None) for p in line.points()]
    for r in range(2, max_degree + 1):
        ext, _ = extension_field(spec, r)
        frob = {i: ext.pow_idx(i, q) for i in range(ext.q)}
        seen: set[int] = set()
        for x in range(ext.q):
            if x in seen:
                continue
            orbit = [x]
            cx = frob[x]
            while cx != x:
                orbit.append(cx)
                cx = frob[cx]
            seen.update(orbit)
            if len(orbit) != r:
                continue
            out.append(Place(r, (r, 1, min(orbit), 0), None, None))
    out.sort(key=lambda pl: pl.key)
    return out


def places_up_to(curve, max_degree: int) -> list[Place]:
    """All closed points of degree <= max_degree, deterministically ordered."""
    if max_degree < 1:
        return []
    if isinstance(curve, EllipticCurve):
        return _elliptic_places(curve, max_degree)
    if isinstance(curve, ProjectiveLine):
        return _line_places(curve, max_degree)
    raise TypeError(f"unsupported curve type {type(curve).__name__}")


def _divisor_class_point(curve: EllipticCurve, div: Divisor) -> CurvePoint:
    acc = CurvePoint.infinity()
    for point, mult in div.entries:
        if not isinstance(point, CurvePoint):
            raise TypeError("elliptic divisors must be supported on curve points")
        acc = add_points(curve, acc, scalar_point_mul(curve, mult, point))
    return acc


def fiber_counts(
    curve, G: Divisor, D_points, budget: int = DEFAULT_FIBER_BUDGET
) -> tuple[int, ...]:
    """Counts a_i of codewords with exactly i zeros, i = 0..deg G.

    a_i is (q - 1) times the number of effective divisors H linearly
    equivalent to G whose support meets D in exactly i places.  Genus 1
    tests equivalence through the group structure of the rational points;
    on the projective line every divisor class of one degree coincides.
    """
    delta = G.degree
    if delta < 0:
        raise ValueError(f"divisor degree must be nonnegative, got {delta}")
    if isinstance(curve, EllipticCurve):
        genus1 = True
        target = _divisor_class_point(curve, G)
    elif isinstance(curve, ProjectiveLine):
        genus1 = False
        target = None
    else:
        raise TypeError(f"unsupported curve type {type(curve).__name__}")
    q = curve.spec.q
    place_list = places_up_to(curve, delta)
    d_set = set(D_points)
    hist = [0] * (delta + 1)
    visited = 0

    def rec(idx: int, remaining: int, cls, in_d: int) -> None:
        nonlocal visited
        if remaining == 0:
            visited += 1
            if visited > budget:
                raise BudgetExceededError(
                    f"effective-divisor enumeration exceeded budget {budget}"
                )
            if not genus1 or cls == target:
                hist[in_d] += 1
            return
        if idx == len(place_list):
            return
        pl = place_list[idx]
        rec(idx + 1, remaining, cls, in_d)
        hit = 1 if (pl.degree == 1 and pl.rational_point in d_set) else 0
        cur = cls
        for m in range(1, remaining // pl.degree + 1):
            if genus1:
                cur = add_points(curve, cur, pl.class_point)
            rec(idx + 1, remaining - m * pl.degree, cur, in_d + hit)

    rec(0, delta, CurvePoint.infinity() if genus1 else None, 0)
    return tuple((q - 1) * h for h in hist)


def fiber_count(
    curve, G: Divisor, D_points, i: int, budget: int = DEFAULT_FIBER_BUDGET
) -> int:
    """The single count a_i; see :func:`fiber_counts`."""
    counts = fiber_counts(curve, G, D_points, budget)
    if not 0 <= i <= G.degree:
        return 0
    return counts[i]


# -- binomial-moment coefficients of AG codes ------------------------------


def bl_coefficients(dist: WeightDistribution, m: int) -> list[int]:
    """Coefficients B_l of the expansion x^n + sum_l B_l (x-y)^l y^(n-l).

    Defined for distributions with d >= n - m (true for any code evaluated
    from a pole divisor of degree m):  B_l = sum_{i=n-m}^{n-l} C(n-i, l) A_i.
    """
    n = dist.n
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= n, got m={m}")
    d = dist.min_distance
    if d is not None and d < n - m:
        raise ValueError(f"distribution has weight {d} below n - m = {n - m}")
    return [
        sum(comb(n - i, l) * dist.counts[i] for i in range(n - m, n - l + 1))
        for l in range(m + 1)
    ]


def bl_bounds(n: int, m: int, g: int, q: int) -> list[tuple[int, int]]:
    """Per-index (lower, upper) bounds on B_l for a genus-g code.

    Exact (lower == upper) for l <= m - 2g + 1; the remaining 2g - 1
    indices only admit the interval
    [max(0, C(n,l)(q^(m-l-g+1) - 1)), C(n,l)(q^(floor((m-l)/2)+1) - 1)].
    """
    if g < 0 or m < 0:
        raise ValueError("need g >= 0 and m >= 0")
    out = []
    for l in range(m + 1):
        base = Fraction(q) ** (m - l - g + 1) - 1
        if l <= m - 2 * g + 1:
            v = comb(n, l) * base
            if v.denominator != 1:
                raise RuntimeError("exact bound is not an integer")
            out.append((v.numerator, v.numerator))
        else:
            lo = comb(n, l) * base
            lo_int = max(0, math.ceil(lo))
            hi = comb(n, l) * (q ** ((m - l) // 2 + 1) - 1)
            out.append((lo_int, hi))
    return out


# -- text formats ----------------------------------------------------------
#
# curve:    one line "q a1 a2 a3 a4 a6" of element indices
# divisor:  one line per entry, "O mult" or "x,y mult"


def parse_curve_text(text: str) -> EllipticCurve:
    toks = text.split()
    if len(toks) != 6:
        raise ValueError(f"expected 6 fields 'q a1 a2 a3 a4 a6', found {len(toks)}")
    vals = []
    for pos, tok in enumerate(toks, start=1):
        try:
            vals.append(int(tok))
        except ValueError:
            raise ValueError(f"field {pos}: not an integer: {tok!r}") from None
    spec = GF(vals[0])
    for pos, v in enumerate(vals[1:], start=2):
        if not 0 <= v < spec.q:
            raise ValueError(f"field {pos}: index {v} out of range for GF({spec.q})")
    return EllipticCurve.from_indices(spec, vals[1:])


def format_curve_text(curve: EllipticCurve) -> str:
    return " ".join(
        str(v) for v in (curve.spec.q,) + curve.coefficient_indices()
    ) + "\n"


def parse_divisor_text(curve: EllipticCurve, text: str) -> Divisor:
    spec = curve.spec
    items = []
    for ln, line in enumerate(text.splitlines(), start=1):
        toks = line.split()
        if not toks:
            continue
        if len(toks) != 2:
            raise ValueError(f"line {ln}: expected 'point multiplicity', found {len(toks)} fields")
        pt_tok, mult_tok = toks
        try:
            mult = int(mult_tok)
        except ValueError:
            raise ValueError(f"line {ln}: multiplicity is not an integer: {mult_tok!r}") from None
        if pt_tok == "O":
            point = CurvePoint.infinity()
        else:
            pieces = pt_tok.split(",")
            if len(pieces) != 2:
                raise ValueError(f"line {ln}: point must be 'O' or 'x,y', got {pt_tok!r}")
            try:
                xi, yi = int(pieces[0]), int(pieces[1])
            except ValueError:
                raise ValueError(f"line {ln}: non-integer coordinate in {pt_tok!r}") from None
            if not (0 <= xi < spec.q and 0 <= yi < spec.q):
                raise ValueError(f"line {ln}: coordinate out of range for GF({spec.q})")
            point = CurvePoint.affine(spec.element(xi), spec.element(yi))
            if not curve.contains(point):
                raise ValueError(f"line {ln}: point {pt_tok} is not on the curve")
        items.append((point, mult))
    return Divisor.of(items)


def format_divisor_text(div: Divisor) -> str:
    return "".join(f"{point} {mult}\n" for point, mult in div.entries)
