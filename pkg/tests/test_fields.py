import itertools
import pickle

import numpy as np
import pytest

from hermqc.fields import (
    FieldElement,
    f_add,
    f_conj,
    f_inv,
    f_mul,
    field_make,
    prime_power,
    splitting_field,
)

BASE = [4, 9, 16, 25]


def _unpack(x, p, m):
    return [(x // p**i) % p for i in range(m)]


def _polymulmod(a, b, f, p):
    """Schoolbook product of coefficient lists modulo the monic f, over GF(p)."""
    m = len(f) - 1
    prod = [0] * (2 * m)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(2 * m - 1, m - 1, -1):
        c = prod[k]
        if c:
            for i in range(m + 1):
                prod[k - m + i] = (prod[k - m + i] - c * f[i]) % p
    return prod[:m]


@pytest.mark.parametrize("order,coeffs", [(4, (1, 1, 1)), (9, (2, 2, 1)), (16, (1, 1, 0, 0, 1)), (25, (2, 4, 1))])
def test_conway_polynomials(order, coeffs):
    assert field_make(order).conway_coeffs == coeffs


@pytest.mark.parametrize("order", BASE)
def test_defining_polynomial_irreducible(order):
    F = field_make(order)
    p, m = F.p, F.m
    f = F.conway_coeffs
    # brute division by every monic polynomial of degree 1..m//2
    for d in range(1, m // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            div = list(tail) + [1]
            rem = list(f)
            for k in range(len(rem) - 1, d - 1, -1):
                c = rem[k]
                if c:
                    for i in range(d + 1):
                        rem[k - d + i] = (rem[k - d + i] - c * div[i]) % p
            assert any(rem[:d]), f"{div} divides the defining polynomial"


@pytest.mark.parametrize("order", BASE)
def test_tables_match_polynomial_oracle(order):
    F = field_make(order)
    p, m = F.p, F.m
    vec = [_unpack(int(v), p, m) for v in F.vec]
    index = {tuple(v): i for i, v in enumerate(vec)}
    for a in range(order):
        for b in range(order):
            s = tuple((x + y) % p for x, y in zip(vec[a], vec[b]))
            assert F.add(a, b) == index[s]
            assert F.mul(a, b) == index[tuple(_polymulmod(vec[a], vec[b], F.conway_coeffs, p))]


@pytest.mark.parametrize("order", BASE)
def test_field_axioms_exhaustive(order):
    F = field_make(order)
    add, mul = F.add_tab.astype(int), F.mul_tab.astype(int)
    E = range(order)
    for a in E:
        assert add[a, 0] == a and mul[a, 1] == a and mul[a, 0] == 0
        assert add[a, F.neg(a)] == 0
        if a:
            assert mul[a, F.inv(a)] == 1
        for b in E:
            assert add[a, b] == add[b, a] and mul[a, b] == mul[b, a]
    A = np.arange(order)
    # associativity and distributivity over all triples, vectorised
    assert (add[add[A[:, None, None], A[None, :, None]], A[None, None, :]]
            == add[A[:, None, None], add[A[None, :, None], A[None, None, :]]]).all()
    assert (mul[mul[A[:, None, None], A[None, :, None]], A[None, None, :]]
            == mul[A[:, None, None], mul[A[None, :, None], A[None, None, :]]]).all()
    assert (mul[A[:, None, None], add[A[None, :, None], A[None, None, :]]]
            == add[mul[A[:, None, None], A[None, :, None]], mul[A[:, None, None], A[None, None, :]]]).all()


@pytest.mark.parametrize("order", BASE)
def test_conjugation_is_frobenius_automorphism(order):
    F = field_make(order)
    q = F.q
    for a in range(order):
        assert F.conj(a) == F.power(a, q)
        assert F.conj(F.conj(a)) == a
        for b in range(order):
            assert F.conj(F.mul(a, b)) == F.mul(F.conj(a), F.conj(b))
            assert F.conj(F.add(a, b)) == F.add(F.conj(a), F.conj(b))
    fixed = {a for a in range(order) if F.conj(a) == a}
    assert len(fixed) == q
    assert fixed == {a for a in range(order) if F.power(a, q) == a}


def test_spec_examples():
    F4, F9, F25 = field_make(4), field_make(9), field_make(25)
    w = F4.element(2)
    assert (w + w).value == 0
    assert (w * F4.element(3)).value == 1
    assert f_inv(w) == F4.element(3)
    assert f_conj(w) == F4.element(3)
    assert f_add(F9.element(1), F9.element(0)).value == 1
    g = F9.element(2)
    assert f_conj(g) == F9.element(4)  # gamma^3
    assert f_inv(F9.element(4)) == F9.element(6)  # gamma^5
    assert f_mul(F25.element(3), F25.element(4)) == F25.element(6)  # zeta^2 * zeta^3
    assert (F25.element(7) * F25.element(0)).value == 0


def test_gf9_doubling_against_vectors():
    F = field_make(9)
    v = _unpack(int(F.vec[2]), 3, 2)
    doubled = [(2 * c) % 3 for c in v]
    idx = {tuple(_unpack(int(x), 3, 2)): i for i, x in enumerate(F.vec)}
    assert F.add(2, 2) == idx[tuple(doubled)]


def test_errors():
    with pytest.raises(ValueError):
        field_make(6)
    with pytest.raises(ValueError):
        prime_power(1)
    with pytest.raises(ValueError):
        f_add(field_make(4).element(1), field_make(9).element(1))
    with pytest.raises(ZeroDivisionError):
        f_inv(field_make(4).element(0))
    with pytest.raises(ValueError):
        splitting_field(6, field_make(4))


def test_alphabets():
    assert field_make(4).alphabet == "0123"
    assert field_make(9).alphabet == "012345678"
    assert field_make(16).alphabet == "0123456789ABCDEF"
    assert field_make(25).alphabet == "0123456789ABCDEFGHIJKLMNO"
    F = field_make(16)
    for a in range(16):
        assert F.from_symbol(F.symbol(a)) == a


def test_field_is_picklable_and_shared():
    F = field_make(25)
    G = pickle.loads(pickle.dumps(F))
    assert G == F and G.mul(5, 7) == F.mul(5, 7)


@pytest.mark.parametrize("n,order,s", [(41, 4, 10), (5, 4, 2), (3, 4, 1), (35, 4, 6), (13, 9, 3), (7, 16, 3)])
def test_splitting_field(n, order, s):
    F = field_make(order)
    sf = splitting_field(n, F)
    assert sf.s == s
    ext = sf.ext
    assert ext.pow(sf.zeta, n) == ext.one
    assert len({sf.zeta_pow(i) for i in range(n)}) == n
    for d in range(1, n):
        if n % d == 0:
            assert ext.pow(sf.zeta, d) != ext.one


@pytest.mark.parametrize("order", BASE)
def test_embedding_is_ring_homomorphism(order):
    F = field_make(order)
    sf = splitting_field(7 if order != 25 else 6, F)
    e = sf.ext
    for a in range(order):
        assert sf.project(sf.embed(a)) == a
        for b in range(order):
            assert sf.embed(F.add(a, b)) == e.add(sf.embed(a), sf.embed(b))
            assert sf.embed(F.mul(a, b)) == e.mul(sf.embed(a), sf.embed(b))


def test_field_element_rejects_out_of_range():
    with pytest.raises(ValueError):
        FieldElement(field_make(4), 4)
