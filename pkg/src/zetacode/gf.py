"""Exact arithmetic in finite fields GF(p^m) for small prime powers.

An element of GF(p^m) is identified by an integer index in [0, q): the
base-p digits of the index, little endian, are the coefficients of the
element's polynomial representative.  Index 0 is the additive identity and
index 1 the multiplicative identity.  The decimal index is also the text
encoding used by every file format in this package.

Multiplication, inversion and powers run on discrete-log tables built once
per field and cached at module level; addition is digit-wise modular
arithmetic.  Field specs, elements and tables are immutable after
construction, so they can be shared between threads without locking.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DEFAULT_ORDER_CAP = 1024

# Pinned moduli (full little-endian coefficient tuples, monic) for the
# extension fields used most often.  Any other (p, m) gets the
# lexicographically smallest monic irreducible, computed on demand; that
# search is deterministic, so element encodings are stable across runs.
_PINNED_MODULI = {
    (2, 2): (1, 1, 1),     # t^2 + t + 1
    (2, 3): (1, 1, 0, 1),  # t^3 + t + 1
    (3, 2): (1, 0, 1),     # t^2 + 1
}

_SPEC_CACHE: dict[tuple, "FieldSpec"] = {}
_TABLE_CACHE: dict[tuple, "_Tables"] = {}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_power(q: int) -> tuple[int, int]:
    """Factor q = p^m with p prime; raise ValueError otherwise."""
    if q < 2:
        raise ValueError(f"field order must be at least 2, got {q}")
    p = 2
    while q % p:
        p += 1
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, m


def _digits(index: int, p: int, m: int) -> tuple[int, ...]:
    return tuple((index // p**j) % p for j in range(m))


def _undigits(digits, p: int) -> int:
    return sum(int(d) * p**j for j, d in enumerate(digits))


def _poly_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    """Little-endian polynomial division over GF(p); b must be monic-led."""
    a = list(a)
    db, da = len(b) - 1, len(a) - 1
    inv_lead = pow(b[-1], -1, p)
    quot = [0] * max(0, da - db + 1)
    for i in range(da - db, -1, -1):
        c = (a[i + db] * inv_lead) % p
        if c:
            quot[i] = c
            for j, bj in enumerate(b):
                a[i + j] = (a[i + j] - c * bj) % p
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return quot, a


def _poly_is_irreducible(coeffs: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    m = len(coeffs) - 1
    if m < 1 or coeffs[-1] != 1:
        return False
    work = list(coeffs)
    for deg in range(1, m // 2 + 1):
        for low in range(p**deg):
            g = list(_digits(low, p, deg)) + [1]
            _, rem = _poly_divmod(work, g, p)
            if rem == [0]:
                return False
    return True


def _smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    for low in range(p**m):
        cand = _digits(low, p, m) + (1,)
        if _poly_is_irreducible(cand, p):
            return cand
    raise RuntimeError(f"no irreducible polynomial of degree {m} over GF({p})")


@dataclass(frozen=True)
class FieldSpec:
    """A concrete finite field GF(p^m) with a fixed modulus.

    ``modulus`` is the full little-endian coefficient tuple of the monic
    irreducible reduction polynomial; it is None exactly when m == 1.
    Instances are interned by :func:`GF`, so equality is cheap.
    """

    p: int
    m: int
    q: int
    modulus: tuple[int, ...] | None

    # -- element handles ------------------------------------------------

    def element(self, index: int) -> "FieldElement":
        return FieldElement(self, index)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> tuple["FieldElement", ...]:
        """All q elements in index order (deterministic, no duplicates)."""
        return tuple(FieldElement(self, i) for i in range(self.q))

    def from_int(self, n: int) -> "FieldElement":
        """The image of the integer n in the prime subfield."""
        return FieldElement(self, n % self.p)

    # -- index arithmetic ------------------------------------------------

    @property
    def tables(self) -> "_Tables":
        key = (self.p, self.m, self.modulus)
        tab = _TABLE_CACHE.get(key)
        if tab is None:
            tab = _Tables(self)
            _TABLE_CACHE[key] = tab
        return tab

    def add_idx(self, a: int, b: int) -> int:
        return int(self.tables.add[a, b])

    def neg_idx(self, a: int) -> int:
        return int(self.tables.neg[a])

    def sub_idx(self, a: int, b: int) -> int:
        return int(self.tables.add[a, self.tables.neg[b]])

    def mul_idx(self, a: int, b: int) -> int:
        return int(self.tables.mul[a, b])

    def inv_idx(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.q})")
        return int(self.tables.inv[a])

    def div_idx(self, a: int, b: int) -> int:
        return self.mul_idx(a, self.inv_idx(b))

    def pow_idx(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError(f"0 has no inverse in GF({self.q})")
            return 0
        order = self.q - 1
        if order == 0:
            return 1
        tab = self.tables
        return int(tab.exp[(int(tab.log[a]) * e) % order])

    def int_mul_idx(self, n: int, a: int) -> int:
        """n * a for an ordinary integer n (reduced through the prime subfield)."""
        return self.mul_idx(n % self.p, a)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"GF({self.q})"


class _Tables:
    """Dense operation tables for one field; built once, then read only."""

    __slots__ = ("add", "neg", "mul", "inv", "exp", "log")

    def __init__(self, spec: FieldSpec):
        p, m, q = spec.p, spec.m, spec.q
        if m == 1:
            idx = np.arange(q, dtype=np.int64)
            self.add = ((idx[:, None] + idx[None, :]) % q).astype(np.int32)
            self.neg = ((-idx) % q).astype(np.int32)
        else:
            dig = np.array([_digits(i, p, m) for i in range(q)], dtype=np.int16)
            w = np.array([p**j for j in range(m)], dtype=np.int64)
            sums = (dig[:, None, :] + dig[None, :, :]) % p
            self.add = (sums.astype(np.int64) @ w).astype(np.int32)
            self.neg = (((-dig) % p).astype(np.int64) @ w).astype(np.int32)

        gen = _find_generator(spec)
        order = q - 1
        exp = np.zeros(order, dtype=np.int32)
        log = np.full(q, -1, dtype=np.int64)
        x = 1
        for i in range(order):
            exp[i] = x
            log[x] = i
            x = _raw_mul(spec, x, gen)
        if x != 1:
            raise RuntimeError(f"generator {gen} of GF({q}) has wrong order")
        self.exp = exp
        self.log = log

        mul = exp[(log[:, None] + log[None, :]) % order]
        mul[0, :] = 0
        mul[:, 0] = 0
        self.mul = mul.astype(np.int32)

        inv = np.zeros(q, dtype=np.int32)
        inv[exp] = exp[(order - np.arange(order)) % order]
        self.inv = inv


def _raw_mul(spec: FieldSpec, a: int, b: int) -> int:
    """Table-free product, used only while bootstrapping the exp table."""
    p, m = spec.p, spec.m
    if m == 1:
        return (a * b) % spec.q
    da, db = _digits(a, p, m), _digits(b, p, m)
    prod = [0] * (2 * m - 1)
    for i, ai in enumerate(da):
        if ai:
            for j, bj in enumerate(db):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    mod = spec.modulus
    for i in range(2 * m - 2, m - 1, -1):
        c = prod[i]
        if c:
            for j in range(m + 1):
                prod[i - m + j] = (prod[i - m + j] - c * mod[j]) % p
    return _undigits(prod[:m], p)


def _raw_pow(spec: FieldSpec, a: int, e: int) -> int:
    r = 1
    while e:
        if e & 1:
            r = _raw_mul(spec, r, a)
        a = _raw_mul(spec, a, a)
        e >>= 1
    return r


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def _find_generator(spec: FieldSpec) -> int:
    order = spec.q - 1
    factors = _prime_factors(order)
    for g in range(1, spec.q):
        if all(_raw_pow(spec, g, order // f) != 1 for f in factors):
            return g
    raise RuntimeError(f"GF({spec.q}) has no multiplicative generator")


def GF(q: int, modulus=None, cap: int = DEFAULT_ORDER_CAP) -> FieldSpec:
    """Return the (interned) field of order q.

    For m > 1 an explicit little-endian ``modulus`` may be supplied; it must
    be monic of degree m and irreducible over GF(p).  Without one, the
    built-in choice for (p, m) is used.
    """
    p, m = _prime_power(q)
    if q > cap:
        raise ValueError(f"field order {q} exceeds the cap {cap}")
    if m == 1:
        if modulus is not None:
            raise ValueError("prime fields take no reduction modulus")
        mod = None
    else:
        if modulus is None:
            mod = _PINNED_MODULI.get((p, m))
            if mod is None:
                mod = _smallest_irreducible(p, m)
        else:
            mod = tuple(int(c) % p for c in modulus)
            if len(mod) != m + 1 or mod[-1] != 1:
                raise ValueError(f"modulus must be monic of degree {m}")
            if not _poly_is_irreducible(mod, p):
                raise ValueError(f"modulus {mod} is reducible over GF({p})")
    key = (p, m, mod)
    spec = _SPEC_CACHE.get(key)
    if spec is None:
        spec = FieldSpec(p=p, m=m, q=q, modulus=mod)
        _SPEC_CACHE[key] = spec
    return spec


@dataclass(frozen=True)
class FieldElement:
    """One element of a finite field, addressed by its canonical index."""

    spec: FieldSpec
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.spec.q:
            raise ValueError(f"index {self.index} out of range for GF({self.spec.q})")

    def _match(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.spec != self.spec:
            raise ValueError(f"mismatched field specs: {self.spec!r} vs {other.spec!r}")

    @property
    def is_zero(self) -> bool:
        return self.index == 0

    def __add__(self, other):
        self._match(other)
        return FieldElement(self.spec, self.spec.add_idx(self.index, other.index))

    def __sub__(self, other):
        self._match(other)
        return FieldElement(self.spec, self.spec.sub_idx(self.index, other.index))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg_idx(self.index))

    def __mul__(self, other):
        self._match(other)
        return FieldElement(self.spec, self.spec.mul_idx(self.index, other.index))

    def __truediv__(self, other):
        self._match(other)
        return FieldElement(self.spec, self.spec.div_idx(self.index, other.index))

    def __pow__(self, e: int):
        return FieldElement(self.spec, self.spec.pow_idx(self.index, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.inv_idx(self.index))

    def __str__(self) -> str:
        return str(self.index)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"GF({self.spec.q})[{self.index}]"


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def inv(a: FieldElement) -> FieldElement:
    if a.is_zero:
        raise ZeroDivisionError(f"0 has no inverse in GF({a.spec.q})")
    return a.inverse()


def elements(spec: FieldSpec) -> tuple[FieldElement, ...]:
    return spec.elements()


def extension_field(base: FieldSpec, r: int, cap: int = DEFAULT_ORDER_CAP):
    """GF(q^r) together with the index table embedding ``base`` into it.

    Returns (ext_spec, embed) where embed[i] is the index in the extension
    of base element i.  The embedding fixes the prime subfield and sends
    the base generator t to the smallest-index root of the base modulus in
    the extension, so it is deterministic.
    """
    if r < 1:
        raise ValueError(f"extension degree must be >= 1, got {r}")
    if r == 1:
        return base, tuple(range(base.q))
    ext = GF(base.p ** (base.m * r), cap=cap)
    if base.m == 1:
        return ext, tuple(range(base.p))
    mod = base.modulus
    theta = None
    for cand in range(ext.q):
        acc = 0
        for c in reversed(mod):
            acc = ext.add_idx(ext.mul_idx(acc, cand), c)
        if acc == 0:
            theta = cand
            break
    if theta is None:
        raise RuntimeError(f"base modulus has no root in GF({ext.q})")
    powers = [1]
    for _ in range(base.m - 1):
        powers.append(ext.mul_idx(powers[-1], theta))
    embed = []
    for a in range(base.q):
        s = 0
        for j, d in enumerate(_digits(a, base.p, base.m)):
            s = ext.add_idx(s, ext.mul_idx(d, powers[j]))
        embed.append(s)
    return ext, tuple(embed)
