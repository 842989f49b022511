"""Small finite fields GF(p^m) with log/antilog tables, plus splitting fields.

Elements of a :class:`FieldSpec` are addressed by index: ``0`` is zero and
``k >= 1`` is ``gamma**(k-1)`` where ``gamma`` is a root of the Conway
polynomial.  The same indexing drives the symbol alphabet, so the character
``alphabet[k]`` names ``gamma**(k-1)``.

Splitting fields GF(p^M) can be far too large for tables (M reaches ~20), so
:class:`ExtensionField` works on coefficient tuples over GF(p) instead.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from math import gcd

import numpy as np
import conway_polynomials

__all__ = [
    "FieldSpec",
    "FieldElement",
    "ExtensionField",
    "SplittingField",
    "field_make",
    "f_add",
    "f_sub",
    "f_mul",
    "f_inv",
    "f_conj",
    "splitting_field",
    "prime_power",
    "conway_poly",
]

_SYMBOLS = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ"


def prime_power(order: int) -> tuple[int, int]:
    """Return ``(p, m)`` with ``order == p**m``; raise ValueError otherwise."""
    if order < 2:
        raise ValueError(f"{order} is not a prime power")
    p = next(d for d in range(2, order + 1) if order % d == 0)
    m, rest = 0, order
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1:
        raise ValueError(f"{order} is not a prime power")
    return p, m


@lru_cache(maxsize=None)
def conway_poly(p: int, m: int) -> tuple[int, ...]:
    """Ascending coefficients of the Conway polynomial of GF(p^m)."""
    try:
        return tuple(int(c) for c in conway_polynomials.database()[p][m])
    except KeyError:
        raise ValueError(f"no Conway polynomial known for GF({p}^{m})") from None


def _poly_mulmod_p(a, b, f, p):
    m = len(f) - 1
    r = [0] * (2 * m - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    r[i + j] = (r[i + j] + x * y) % p
    for k in range(2 * m - 2, m - 1, -1):
        c = r[k]
        if c:
            for j in range(m + 1):
                r[k - m + j] = (r[k - m + j] - c * f[j]) % p
    return tuple(r[:m])


@dataclass(frozen=True, eq=False)
class FieldSpec:
    """GF(p^m) with precomputed index-based arithmetic tables.

    Tables are ``uint8``/``int64`` numpy arrays indexed by element index, so the
    distance kernels can use them directly.
    """

    p: int
    m: int
    conway_coeffs: tuple[int, ...]
    alphabet: str | None
    vec: np.ndarray = dc_field(repr=False)  # index -> base-p packed coefficient vector
    add_tab: np.ndarray = dc_field(repr=False)
    mul_tab: np.ndarray = dc_field(repr=False)
    neg_tab: np.ndarray = dc_field(repr=False)
    inv_tab: np.ndarray = dc_field(repr=False)
    sub_tab: np.ndarray = dc_field(repr=False)

    @property
    def order(self) -> int:
        return self.p**self.m

    @property
    def q(self) -> int:
        """Square root of the order, for fields of the form GF(q^2)."""
        if self.m % 2:
            raise ValueError(f"GF({self.order}) is not of the form GF(q^2)")
        return self.p ** (self.m // 2)

    @property
    def is_quadratic(self) -> bool:
        return self.m % 2 == 0

    @property
    def conj_tab(self) -> np.ndarray:
        """Frobenius a -> a^q as an index table."""
        return self.pow_tab(self.q)

    def pow_tab(self, e: int) -> np.ndarray:
        out = np.zeros(self.order, dtype=np.uint8)
        n = self.order - 1
        for k in range(1, self.order):
            out[k] = ((k - 1) * e) % n + 1
        if e == 0:
            out[0] = 1
        return out

    def __repr__(self) -> str:
        return f"FieldSpec(GF({self.order}))"

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldSpec) and (self.p, self.m) == (other.p, other.m)

    def __hash__(self) -> int:
        return hash((self.p, self.m))

    def __reduce__(self):
        return field_make, (self.order,)

    # scalar helpers on plain indices; the FieldElement wrapper is for callers
    # that want operator syntax and field checking.
    def add(self, a: int, b: int) -> int:
        return int(self.add_tab[a, b])

    def sub(self, a: int, b: int) -> int:
        return int(self.sub_tab[a, b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return (a + b - 2) % (self.order - 1) + 1

    def neg(self, a: int) -> int:
        return int(self.neg_tab[a])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in GF(%d)" % self.order)
        return int(self.inv_tab[a])

    def conj(self, a: int) -> int:
        if a == 0:
            return 0
        return ((a - 1) * self.q) % (self.order - 1) + 1

    def power(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        return ((a - 1) * e) % (self.order - 1) + 1

    def gamma_pow(self, e: int) -> int:
        """Index of gamma**e."""
        return e % (self.order - 1) + 1

    def log(self, a: int) -> int:
        if a == 0:
            raise ValueError("log of zero")
        return a - 1

    def element(self, value: int) -> "FieldElement":
        return FieldElement(self, value)

    def symbol(self, a: int) -> str:
        if self.alphabet is None:
            raise ValueError(f"GF({self.order}) has no symbol alphabet")
        return self.alphabet[a]

    def from_symbol(self, ch: str) -> int:
        if self.alphabet is None:
            raise ValueError(f"GF({self.order}) has no symbol alphabet")
        idx = self.alphabet.find(ch.upper() if self.order > 10 else ch)
        if idx < 0:
            raise ValueError(f"symbol {ch!r} is not in the GF({self.order}) alphabet")
        return idx

    @property
    def prime_subfield(self) -> list[int]:
        """Indices of the elements of GF(p)."""
        step = (self.order - 1) // (self.p - 1)
        return [0] + [k * step + 1 for k in range(self.p - 1)]

    @property
    def elements(self) -> range:
        return range(self.order)


@lru_cache(maxsize=None)
def field_make(order: int) -> FieldSpec:
    """Build GF(order) from its Conway polynomial.

    >>> field_make(4).conway_coeffs
    (1, 1, 1)
    """
    p, m = prime_power(order)
    f = conway_poly(p, m)
    if order > 256:
        raise ValueError(f"GF({order}) is too large for table arithmetic")
    # antilog: gamma^e as coefficient tuple, packed base p
    one = tuple([1] + [0] * (m - 1))
    x = tuple([0, 1] + [0] * (m - 2)) if m > 1 else (f[0] and (-f[0]) % p,)
    vec = np.zeros(order, dtype=np.int64)
    cur = one
    seen = set()
    for e in range(order - 1):
        packed = sum(c * p**i for i, c in enumerate(cur))
        if packed in seen:
            raise ValueError(f"Conway polynomial of GF({order}) is not primitive")
        seen.add(packed)
        vec[e + 1] = packed
        cur = _poly_mulmod_p(cur, x, f, p) if m > 1 else ((cur[0] * x[0]) % p,)
    index_of = np.zeros(order, dtype=np.int64)
    index_of[vec] = np.arange(order)

    def vadd(u, v):
        out = 0
        for i in range(m):
            out += ((u // p**i + v // p**i) % p) * p**i
        return out

    add_tab = np.zeros((order, order), dtype=np.uint8)
    for a in range(order):
        for b in range(order):
            add_tab[a, b] = index_of[vadd(int(vec[a]), int(vec[b]))]
    idx = np.arange(order)
    mul_tab = np.zeros((order, order), dtype=np.uint8)
    nz = idx[1:]
    mul_tab[1:, 1:] = ((nz[:, None] - 1) + (nz[None, :] - 1)) % (order - 1) + 1
    neg_tab = np.array([int(np.flatnonzero(add_tab[a] == 0)[0]) for a in range(order)], dtype=np.uint8)
    inv_tab = np.zeros(order, dtype=np.uint8)
    inv_tab[1:] = (-(nz - 1)) % (order - 1) + 1
    sub_tab = add_tab[:, neg_tab]
    alphabet = _SYMBOLS[:order] if order <= len(_SYMBOLS) else None
    for arr in (vec, add_tab, mul_tab, neg_tab, inv_tab, sub_tab):
        arr.setflags(write=False)
    return FieldSpec(p, m, f, alphabet, vec, add_tab, mul_tab, neg_tab, inv_tab, sub_tab)


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.field.order:
            raise ValueError(f"{self.value} is not an element index of GF({self.field.order})")

    def _other(self, other) -> int:
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field != self.field:
            raise ValueError(f"mixing GF({self.field.order}) and GF({other.field.order})")
        return other.value

    def __add__(self, other):
        return f_add(self, other)

    def __sub__(self, other):
        return f_sub(self, other)

    def __mul__(self, other):
        return f_mul(self, other)

    def __truediv__(self, other):
        return f_mul(self, f_inv(other))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.power(self.value, e))

    def conj(self) -> "FieldElement":
        return f_conj(self)

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return self.field.symbol(self.value) if self.field.alphabet else str(self.value)


def _check_same(a: FieldElement, b: FieldElement) -> FieldSpec:
    if a.field != b.field:
        raise ValueError(f"mixing GF({a.field.order}) and GF({b.field.order})")
    return a.field


def f_add(a: FieldElement, b: FieldElement) -> FieldElement:
    F = _check_same(a, b)
    return FieldElement(F, F.add(a.value, b.value))


def f_sub(a: FieldElement, b: FieldElement) -> FieldElement:
    F = _check_same(a, b)
    return FieldElement(F, F.sub(a.value, b.value))


def f_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    F = _check_same(a, b)
    return FieldElement(F, F.mul(a.value, b.value))


def f_inv(a: FieldElement) -> FieldElement:
    return FieldElement(a.field, a.field.inv(a.value))


def f_conj(a: FieldElement) -> FieldElement:
    return FieldElement(a.field, a.field.conj(a.value))


class ExtensionField:
    """GF(p^M) on coefficient tuples over GF(p), modulo the Conway polynomial.

    Only the operations needed to build generator polynomials from roots of
    unity are provided.
    """

    def __init__(self, p: int, M: int):
        self.p = p
        self.M = M
        self.modulus = conway_poly(p, M)
        self.zero = (0,) * M
        self.one = (1,) + (0,) * (M - 1)
        if M > 1:
            self.gen = (0, 1) + (0,) * (M - 2)
        else:
            self.gen = ((-self.modulus[0]) % p,)

    @property
    def order(self) -> int:
        return self.p**self.M

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def mul(self, a, b):
        if self.M == 1:
            return ((a[0] * b[0]) % self.p,)
        return _poly_mulmod_p(a, b, self.modulus, self.p)

    def pow(self, a, e: int):
        r = self.one
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def __repr__(self) -> str:
        return f"ExtensionField(GF({self.p}^{self.M}))"


@dataclass
class SplittingField:
    """GF(q^(2s)) holding a primitive n-th root of unity, with GF(q^2) embedded."""

    n: int
    base: FieldSpec
    s: int
    ext: ExtensionField
    zeta: tuple
    zeta_powers: list = dc_field(repr=False)
    embed_table: list = dc_field(repr=False)
    _project: dict = dc_field(repr=False)

    def embed(self, a: int):
        return self.embed_table[a]

    def project(self, x) -> int:
        try:
            return self._project[tuple(x)]
        except KeyError:
            raise ArithmeticError("element does not lie in the embedded base field") from None

    def in_base(self, x) -> bool:
        return tuple(x) in self._project

    def zeta_pow(self, i: int):
        return self.zeta_powers[i % self.n]


@lru_cache(maxsize=None)
def splitting_field(n: int, base: FieldSpec) -> SplittingField:
    """Smallest extension of ``base`` containing a primitive n-th root of unity.

    The root is ``g**((p^M - 1) // n)`` for the Conway generator ``g`` of the
    extension; Conway compatibility makes ``gamma -> g**((p^M-1)/(p^m-1))`` a
    field embedding.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if gcd(n, base.p) != 1:
        raise ValueError(f"gcd({n}, {base.p}) != 1: no primitive {n}-th root of unity")
    Q = base.order
    s = 1
    while pow(Q, s, n) != 1 % n:
        s += 1
    M = base.m * s
    ext = ExtensionField(base.p, M)
    N = ext.order - 1
    zeta = ext.pow(ext.gen, N // n)
    powers = [ext.one]
    for _ in range(n - 1):
        powers.append(ext.mul(powers[-1], zeta))
    if n > 1 and len(set(powers)) != n:
        raise ArithmeticError(f"root of unity of order {n} not found in GF({base.p}^{M})")
    g = ext.pow(ext.gen, N // (Q - 1))
    emb = [ext.zero]
    cur = ext.one
    for _ in range(Q - 1):
        emb.append(cur)
        cur = ext.mul(cur, g)
    project = {e: i for i, e in enumerate(emb)}
    return SplittingField(n, base, s, ext, zeta, powers, emb, project)
