"""Cyclic codes of length n over GF(q^2) and their defining sets."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable

import numpy as np

from .cosets import DefiningSet, defining_set
from .fields import FieldSpec, splitting_field
from .poly import Poly, p_divides, p_format, p_monic, p_reduce, xn_minus_1

__all__ = [
    "CyclicCode",
    "gen_from_defining_set",
    "defining_set_of",
    "cyclic_dim",
    "circulant_rows",
    "cyclic_code",
]


def gen_from_defining_set(n: int, field: FieldSpec, T: DefiningSet | Iterable[int]) -> Poly:
    """Monic product of (x - zeta^i) over i in T, projected back into GF(q^2)."""
    if not isinstance(T, DefiningSet):
        T = defining_set(n, field.order, elements=T)
    if T.n != n or T.q2 != field.order:
        raise ValueError("defining set was built for different (n, q^2)")
    sf = splitting_field(n, field)
    ext = sf.ext
    poly = [ext.one]
    for i in sorted(T.elements):
        root = ext.neg(sf.zeta_pow(i))
        new = [ext.zero] * (len(poly) + 1)
        for k, c in enumerate(poly):
            new[k + 1] = ext.add(new[k + 1], c)
            new[k] = ext.add(new[k], ext.mul(c, root))
        poly = new
    try:
        coeffs = [sf.project(c) for c in poly]
    except ArithmeticError:
        raise ArithmeticError("generator coefficients fall outside GF(q^2)") from None
    return Poly(field, coeffs)


def _eval_ext(g: Poly, x, sf):
    ext = sf.ext
    acc = ext.zero
    for c in reversed(g.coeffs):
        acc = ext.add(ext.mul(acc, x), sf.embed(c))
    return acc


def defining_set_of(g: Poly, n: int) -> DefiningSet:
    """Exponents i with g(zeta^i) = 0."""
    F = g.field
    if g.is_zero() or not p_divides(g, xn_minus_1(F, n)):
        raise ValueError(f"{p_format(g)} does not divide x^{n} - 1")
    sf = splitting_field(n, F)
    zero = sf.ext.zero
    roots = [i for i in range(n) if _eval_ext(g, sf.zeta_pow(i), sf) == zero]
    return defining_set(n, F.order, elements=roots)


def circulant_rows(f: Poly, n: int, count: int) -> np.ndarray:
    """Rows [x^i f mod x^n - 1] for 0 <= i < count."""
    v = np.array(p_reduce(f, n).vector(n), dtype=np.uint8)
    return np.stack([np.roll(v, i) for i in range(count)]) if count else np.zeros((0, n), np.uint8)


@dataclass(frozen=True)
class CyclicCode:
    n: int
    field: FieldSpec
    g: Poly
    _T: list = dc_field(default_factory=list, repr=False, compare=False)

    def __post_init__(self):
        if self.g.is_zero() or not p_divides(self.g, xn_minus_1(self.field, self.n)):
            raise ValueError(f"{p_format(self.g)} does not divide x^{self.n} - 1")

    @property
    def dim(self) -> int:
        return self.n - self.g.degree

    @property
    def T(self) -> DefiningSet:
        if not self._T:
            self._T.append(defining_set_of(self.g, self.n))
        return self._T[0]

    def generator_matrix(self) -> np.ndarray:
        return circulant_rows(self.g, self.n, self.dim)


def cyclic_code(n: int, field: FieldSpec, g: Poly) -> CyclicCode:
    return CyclicCode(n, field, p_monic(g))


def cyclic_dim(code: CyclicCode) -> int:
    return code.n - code.g.degree
