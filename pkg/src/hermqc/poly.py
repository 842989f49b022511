"""Polynomials over GF(q^2) and the ring GF(q^2)[x]/(x^n - 1).

Coefficients are element indices (see :mod:`hermqc.fields`) stored in
ascending degree order.  The text codec follows the compressed notation used
in the code tables: one symbol per coefficient, with ``s^k`` (or ``s^{k}``)
standing for ``k`` consecutive copies of ``s``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .fields import FieldSpec

__all__ = [
    "Poly",
    "PolyParseError",
    "p_parse",
    "p_format",
    "p_add",
    "p_sub",
    "p_mul",
    "p_scale",
    "p_divmod",
    "p_mod",
    "p_mul_mod",
    "p_gcd",
    "p_lcm",
    "p_divides",
    "p_monic",
    "p_bar",
    "p_conj",
    "p_bar_conj",
    "p_dual_gen",
    "p_reduce",
    "ideal_gen",
    "ring_divides",
    "xn_minus_1",
    "monomial",
]


def _trim(coeffs) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(int(v) for v in c)


@dataclass(frozen=True)
class Poly:
    field: FieldSpec
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = _trim(self.coeffs)
        if any(not 0 <= v < self.field.order for v in c):
            raise ValueError(f"coefficient outside GF({self.field.order})")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def zero(cls, field: FieldSpec) -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field: FieldSpec) -> "Poly":
        return cls(field, (1,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def vector(self, n: int) -> list[int]:
        """Coefficient vector of length ``n`` (``[g(x)]`` in ring notation)."""
        if self.degree >= n:
            raise ValueError(f"degree {self.degree} does not fit in length {n}")
        return list(self.coeffs) + [0] * (n - len(self.coeffs))

    def __add__(self, other: "Poly") -> "Poly":
        return p_add(self, other)

    def __sub__(self, other: "Poly") -> "Poly":
        return p_sub(self, other)

    def __mul__(self, other: "Poly") -> "Poly":
        return p_mul(self, other)

    def __neg__(self) -> "Poly":
        F = self.field
        return Poly(F, [F.neg(c) for c in self.coeffs])

    def __str__(self) -> str:
        return p_format(self)

    def __repr__(self) -> str:
        return f"Poly(GF({self.field.order}), {p_format(self)!r})"


def _same(a: Poly, b: Poly) -> FieldSpec:
    if a.field != b.field:
        raise ValueError(f"mixing GF({a.field.order}) and GF({b.field.order}) polynomials")
    return a.field


def monomial(field: FieldSpec, k: int, c: int = 1) -> Poly:
    return Poly(field, [0] * k + [c])


def xn_minus_1(field: FieldSpec, n: int) -> Poly:
    return Poly(field, [field.neg(1)] + [0] * (n - 1) + [1])


# -- notation codec ----------------------------------------------------------

class PolyParseError(ValueError):
    def __init__(self, msg: str, text: str, pos: int):
        super().__init__(f"{msg} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


_COUNT = re.compile(r"\^(?:\{(\d+)\}|(\d))")


def p_parse(s: str, field: FieldSpec) -> Poly:
    """Parse the compressed ascending-order notation, e.g. ``"10^2101"``.

    A bare ``^`` takes a single digit; longer counts need braces
    (``"1^{10}"``).  Whitespace is ignored.
    """
    coeffs: list[int] = []
    i, n = 0, len(s)
    while i < n:
        ch = s[i]
        if ch.isspace():
            i += 1
            continue
        try:
            val = field.from_symbol(ch)
        except ValueError:
            raise PolyParseError(f"unknown symbol {ch!r}", s, i) from None
        i += 1
        while i < n and s[i].isspace():
            i += 1
        count = 1
        if i < n and s[i] == "^":
            m = _COUNT.match(s, i)
            if m is None:
                raise PolyParseError("malformed repeat count", s, i)
            count = int(m.group(1) or m.group(2))
            if count < 2:
                raise PolyParseError("repeat count must be at least 2", s, i)
            i = m.end()
        coeffs.extend([val] * count)
    if not coeffs:
        raise PolyParseError("empty polynomial string", s, 0)
    return Poly(field, coeffs)


def p_format(p: Poly, braces: bool = True) -> str:
    """Compact notation; runs of 2+ equal coefficients become ``a^{k}``.

    ``braces=False`` drops the braces around one-digit counts (``a^3``).
    """
    if p.is_zero():
        return "0"
    out = []
    c = p.coeffs
    i = 0
    while i < len(c):
        j = i
        while j < len(c) and c[j] == c[i]:
            j += 1
        run = j - i
        sym = p.field.symbol(c[i])
        if run == 1:
            out.append(sym)
        elif run < 10 and not braces:
            out.append(f"{sym}^{run}")
        else:
            out.append(f"{sym}^{{{run}}}")
        i = j
    return "".join(out)


# -- arithmetic ----------------------------------------------------------------

def p_add(a: Poly, b: Poly) -> Poly:
    F = _same(a, b)
    n = max(len(a.coeffs), len(b.coeffs))
    return Poly(F, [F.add(a[i], b[i]) for i in range(n)])


def p_sub(a: Poly, b: Poly) -> Poly:
    F = _same(a, b)
    n = max(len(a.coeffs), len(b.coeffs))
    return Poly(F, [F.sub(a[i], b[i]) for i in range(n)])


def p_scale(a: Poly, c: int) -> Poly:
    F = a.field
    return Poly(F, [F.mul(c, v) for v in a.coeffs])


def p_mul(a: Poly, b: Poly) -> Poly:
    F = _same(a, b)
    if a.is_zero() or b.is_zero():
        return Poly.zero(F)
    add, mul = F.add_tab, F.mul_tab
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    bc = b.coeffs
    for i, x in enumerate(a.coeffs):
        if x:
            row = mul[x]
            for j, y in enumerate(bc):
                if y:
                    out[i + j] = add[out[i + j], row[y]]
    return Poly(F, out)


def p_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    F = _same(a, b)
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a.coeffs)
    db = b.degree
    inv_lead = F.inv(b.lead)
    if len(r) - 1 < db:
        return Poly.zero(F), a
    quot = [0] * (len(r) - db)
    add, mul = F.add_tab, F.mul_tab
    negb = [F.neg(c) for c in b.coeffs]
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        if c:
            f = F.mul(c, inv_lead)
            quot[k - db] = f
            row = mul[f]
            for j, y in enumerate(negb):
                if y:
                    r[k - db + j] = add[r[k - db + j], row[y]]
    return Poly(F, quot), Poly(F, r[:db])


def p_mod(a: Poly, b: Poly) -> Poly:
    return p_divmod(a, b)[1]


def p_reduce(a: Poly, n: int) -> Poly:
    """Reduce modulo x^n - 1 by folding degrees >= n."""
    if a.degree < n:
        return a
    F = a.field
    out = [0] * n
    for i, c in enumerate(a.coeffs):
        if c:
            out[i % n] = F.add(out[i % n], c)
    return Poly(F, out)


def p_mul_mod(a: Poly, b: Poly, n: int) -> Poly:
    """Product in GF(q^2)[x]/(x^n - 1); inputs must have degree < n."""
    if a.degree >= n or b.degree >= n:
        raise ValueError(f"ring elements must have degree < {n}")
    return p_reduce(p_mul(a, b), n)


def p_monic(a: Poly) -> Poly:
    if a.is_zero():
        return a
    return p_scale(a, a.field.inv(a.lead))


def p_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by Euclid's algorithm."""
    _same(a, b)
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, p_mod(a, b)
    return p_monic(a)


def p_lcm(a: Poly, b: Poly) -> Poly:
    if a.is_zero() or b.is_zero():
        raise ValueError("lcm with the zero polynomial is undefined")
    q, r = p_divmod(p_mul(a, b), p_gcd(a, b))
    assert r.is_zero()
    return p_monic(q)


def p_divides(a: Poly, b: Poly) -> bool:
    """True iff ``a`` divides ``b`` in GF(q^2)[x]."""
    if a.is_zero():
        raise ValueError("divisibility by the zero polynomial")
    return p_mod(b, a).is_zero()


# -- ring operators ---------------------------------------------------------

def p_bar(g: Poly, n: int) -> Poly:
    """Index reversal i -> -i mod n of the length-n coefficient window."""
    v = g.vector(n)
    return Poly(g.field, [v[(-i) % n] for i in range(n)])


def p_conj(g: Poly) -> Poly:
    F = g.field
    return Poly(F, [F.conj(c) for c in g.coeffs])


def p_bar_conj(t: Poly, n: int) -> Poly:
    return p_conj(p_bar(t, n))


def p_dual_gen(g: Poly, n: int) -> Poly:
    """Monic generator of the Hermitian dual of the cyclic code <g>."""
    h, r = p_divmod(xn_minus_1(g.field, n), g)
    if not r.is_zero():
        raise ValueError(f"{p_format(g)} does not divide x^{n} - 1")
    recip = Poly(g.field, reversed(h.coeffs))
    return p_monic(p_conj(recip))


def ideal_gen(f: Poly, n: int) -> Poly:
    """Monic divisor of x^n - 1 generating the same ideal as ``f`` in the ring.

    The zero element maps to x^n - 1 itself (the zero ideal).
    """
    return p_gcd(p_reduce(f, n), xn_minus_1(f.field, n))


def ring_divides(divisor: Poly, dividend: Poly, n: int) -> bool:
    """Ideal membership: is the ring element ``dividend`` in <divisor>?

    The dividend is reduced mod x^n - 1 first; zero is in every ideal.
    ``divisor`` should itself divide x^n - 1.
    """
    d = p_reduce(dividend, n)
    if d.is_zero():
        return True
    return p_divides(divisor, p_gcd(d, xn_minus_1(d.field, n)))
