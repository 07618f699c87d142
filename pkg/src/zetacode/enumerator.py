"""Exact weight-enumerator algebra.

A weight enumerator is the coefficient vector (f_0, ..., f_n) of a
homogeneous degree-n polynomial sum f_i x^(n-i) y^i.  Coefficients are
exact rationals throughout; nothing in this module touches floating
point.  The same type carries code enumerators (nonnegative integers),
virtual enumerators (arbitrary rationals with f_0 = 1), and the
4-divisible sign-alternating enumerators used by the classifier.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .linear_code import WeightDistribution

_F0 = Fraction(0)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def _convolve(u: list[Fraction], v: list[Fraction]) -> list[Fraction]:
    out = [_F0] * (len(u) + len(v) - 1)
    for i, ui in enumerate(u):
        if ui:
            for j, vj in enumerate(v):
                if vj:
                    out[i + j] += ui * vj
    return out


@dataclass(frozen=True)
class WeightEnumerator:
    """Coefficients of a homogeneous bivariate polynomial of degree n.

    ``coeffs[i]`` multiplies x^(n-i) y^i.  The optional ``q`` records the
    field order the enumerator is attached to; it is metadata and does not
    participate in equality.
    """

    n: int
    coeffs: tuple[Fraction, ...]
    q: int | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.coeffs) != self.n + 1:
            raise ValueError(f"need {self.n + 1} coefficients, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", tuple(_as_fraction(c) for c in self.coeffs))

    # -- structure -------------------------------------------------------

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted({0} | {i for i, c in enumerate(self.coeffs) if c and i > 0}))

    @property
    def min_distance(self) -> int | None:
        """Least positive index with a nonzero coefficient."""
        for i in range(1, self.n + 1):
            if self.coeffs[i]:
                return i
        return None

    @property
    def has_negative(self) -> bool:
        return any(c < 0 for c in self.coeffs)

    def evaluate(self, x, y) -> Fraction:
        x, y = _as_fraction(x), _as_fraction(y)
        return sum(
            (c * x ** (self.n - i) * y**i for i, c in enumerate(self.coeffs)),
            start=_F0,
        )

    def total(self) -> Fraction:
        """The value at (1, 1); q^k for the enumerator of an [n, k] code."""
        return sum(self.coeffs, start=_F0)

    def __mul__(self, other: "WeightEnumerator") -> "WeightEnumerator":
        if not isinstance(other, WeightEnumerator):
            return NotImplemented
        q = self.q if self.q == other.q else None
        return WeightEnumerator(
            self.n + other.n,
            tuple(_convolve(list(self.coeffs), list(other.coeffs))),
            q=q,
        )

    def __pow__(self, e: int) -> "WeightEnumerator":
        if e < 1:
            raise ValueError("enumerator powers need e >= 1")
        out = self
        for _ in range(e - 1):
            out = out * self
        return out


def from_distribution(dist: WeightDistribution, q: int | None = None) -> WeightEnumerator:
    """Homogenize a weight distribution into its enumerator."""
    return WeightEnumerator(dist.n, tuple(Fraction(c) for c in dist.counts), q=q)


def to_distribution(enum: WeightEnumerator) -> WeightDistribution:
    counts = []
    for i, c in enumerate(enum.coeffs):
        if c.denominator != 1 or c < 0:
            raise ValueError(f"coefficient {c} at index {i} is not a nonnegative integer")
        counts.append(c.numerator)
    return WeightDistribution(enum.n, tuple(counts))


def macwilliams_substitute(enum: WeightEnumerator, q: int) -> WeightEnumerator:
    """The unscaled substitution F(x + (q-1)y, x - y), expanded exactly."""
    if q < 2:
        raise ValueError(f"field order must be >= 2, got {q}")
    n = enum.n
    out = [_F0] * (n + 1)
    for i, fi in enumerate(enum.coeffs):
        if not fi:
            continue
        u = [Fraction(comb(n - i, a) * (q - 1) ** a) for a in range(n - i + 1)]
        v = [Fraction(comb(i, b) * (-1) ** b) for b in range(i + 1)]
        for j, wj in enumerate(_convolve(u, v)):
            out[j] += fi * wj
    return WeightEnumerator(n, tuple(out), q=q)


def macwilliams_dual(enum: WeightEnumerator, q: int, k: int) -> WeightEnumerator:
    """q^(-k) F(x + (q-1)y, x - y): the enumerator of the dual code.

    The result may have negative coefficients when the input is only a
    virtual enumerator; callers can inspect ``has_negative`` on the result.
    """
    if not 0 <= k <= enum.n:
        raise ValueError(f"dimension k={k} out of range for length {enum.n}")
    sub = macwilliams_substitute(enum, q)
    scale = Fraction(1, q**k)
    return WeightEnumerator(enum.n, tuple(scale * c for c in sub.coeffs), q=q)


def is_virtually_self_dual(enum: WeightEnumerator, q: int) -> bool:
    """Whether q^(n/2) F equals F(x + (q-1)y, x - y) exactly.

    This integral identity is equivalent to invariance under the
    sqrt(q)-normalized substitution and avoids irrational arithmetic;
    it only makes sense for even n.
    """
    if enum.n % 2:
        raise ValueError(f"virtual self-duality needs an even length, got n={enum.n}")
    scale = Fraction(q) ** (enum.n // 2)
    sub = macwilliams_substitute(enum, q)
    return all(scale * c == s for c, s in zip(enum.coeffs, sub.coeffs))


def _mds_coeffs(n: int, d: int, q: int) -> tuple[Fraction, ...]:
    """Closed-form MDS coefficient vector; d = n+1 encodes x^n.

    Internal variant that also admits d = n (needed as one rung of the
    triangular basis used for zeta expansion).
    """
    if d == n + 1:
        return tuple([Fraction(1)] + [_F0] * n)
    out = [_F0] * (n + 1)
    out[0] = Fraction(1)
    for i in range(d, n + 1):
        s = sum(
            comb(i - 1, m) * (-1) ** m * q ** (i - d - m) for m in range(i - d + 1)
        )
        out[i] = Fraction(comb(n, i) * (q - 1) * s)
    return tuple(out)


def mds_enumerator(n: int, d: int, q: int) -> WeightEnumerator:
    """The weight enumerator an [n, n+1-d, d]_q MDS code must have.

    d = n is rejected: the MDS basis used for zeta expansion skips that
    slot, and no op needs it publicly.
    """
    if q < 2:
        raise ValueError(f"field order must be >= 2, got {q}")
    if d == n:
        raise ValueError(f"d = n = {n} is excluded from the MDS enumerator basis")
    if not (1 <= d <= n - 1 or d == n + 1):
        raise ValueError(f"need 1 <= d <= n-1 or d = n+1, got d={d}, n={n}")
    return WeightEnumerator(n, _mds_coeffs(n, d, q), q=q)


def solve_macwilliams(
    n: int, k: int, q: int, d: int, d_dual: int, knowns=()
) -> WeightDistribution:
    """Complete a weight distribution from its low-weight counts.

    ``knowns`` supplies A_d .. A_(n - d_dual); the remaining counts
    A_(n - d_dual + 1) .. A_n come from back-substitution through the
    binomial-moment equations

        sum_{i=d}^{n-l} C(n-i, l) A_i = C(n, l) (q^(k-l) - 1),
        l = d_dual - 1, ..., 0.

    When d + d_dual = n + 2 both the code and its dual meet the Singleton
    bound and no knowns are needed; the then-redundant top equation is
    still validated.  Inconsistent inputs raise instead of being clamped.
    """
    if d < 1 or d_dual < 1 or d > n + 1:
        raise ValueError(f"bad distance parameters d={d}, d_dual={d_dual}")
    expected = max(0, n - d_dual - d + 1)
    knowns = list(knowns)
    if len(knowns) != expected:
        raise ValueError(
            f"need {expected} known counts A_{d}..A_{n - d_dual}, got {len(knowns)}"
        )
    if expected == 0 and d + d_dual != n + 2:
        raise ValueError(
            f"no knowns admissible only in the MDS case d + d_dual = n + 2; "
            f"got d={d}, d_dual={d_dual}, n={n}"
        )
    counts: dict[int, int] = {0: 1}
    for i in range(1, d):
        counts[i] = 0
    for off, a in enumerate(knowns):
        a = int(a)
        if a < 0:
            raise ValueError(f"known count A_{d + off} = {a} is negative")
        counts[d + off] = a
    for l in range(d_dual - 1, -1, -1):
        rhs = comb(n, l) * (q ** (k - l) - 1)
        top = n - l
        acc = 0
        for i in range(d, top):
            if i in counts:
                acc += comb(n - i, l) * counts[i]
        if top < d or top in counts:
            if top >= d:
                acc += comb(n - top, l) * counts[top]
            if acc != rhs:
                raise ValueError(
                    f"inconsistent knowns: moment equation l={l} gives {acc} != {rhs}"
                )
            continue
        val = rhs - acc
        if val < 0:
            raise ValueError(
                f"inconsistent knowns: A_{top} would be negative ({val})"
            )
        counts[top] = val
    return WeightDistribution(n, tuple(counts.get(i, 0) for i in range(n + 1)))


# -- enumerator text format ----------------------------------------------
#
# whitespace-separated tokens: first the length n, then the n+1
# coefficients as "p/q" rationals or bare integers, index order 0..n.


def parse_enumerator_text(text: str) -> WeightEnumerator:
    toks = text.split()
    if not toks:
        raise ValueError("empty enumerator text")
    try:
        n = int(toks[0])
    except ValueError:
        raise ValueError(f"token 1: length is not an integer: {toks[0]!r}") from None
    if n < 0:
        raise ValueError(f"token 1: negative length {n}")
    if len(toks) != n + 2:
        raise ValueError(f"expected {n + 1} coefficients after the length, found {len(toks) - 1}")
    coeffs = []
    for pos, tok in enumerate(toks[1:], start=2):
        try:
            coeffs.append(Fraction(tok))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"token {pos}: not a rational: {tok!r}") from None
    return WeightEnumerator(n, tuple(coeffs))


def format_enumerator_text(enum: WeightEnumerator) -> str:
    return " ".join([str(enum.n)] + [str(c) for c in enum.coeffs]) + "\n"
