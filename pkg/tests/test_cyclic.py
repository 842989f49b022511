import random

import conway_polynomials
import pytest

from hermqc.cosets import all_cosets, coset_of, defining_set
from hermqc.cyclic import CyclicCode, cyclic_code, cyclic_dim, defining_set_of, gen_from_defining_set
from hermqc.fields import field_make
from hermqc.linalg import rank
from hermqc.poly import Poly, p_dual_gen, p_format, p_lcm, p_parse, xn_minus_1

from conftest import random_divisor

F4 = field_make(4)


def test_example_generators():
    g1 = gen_from_defining_set(41, F4, defining_set(41, 4, [1]))
    g2 = gen_from_defining_set(41, F4, defining_set(41, 4, [3]))
    assert p_format(g1) == "10320102301"
    assert p_format(g2) == "12^{3}1312^{3}1"
    assert cyclic_dim(cyclic_code(41, F4, g1)) == 31


@pytest.mark.parametrize(
    "q2,n,reps,text",
    [
        (4, 35, [0, 1], "1^{2}3023^{2}1"),
        (4, 35, [5, 7], "12^{2}031"),
        (4, 133, [1, 2], "1010101^{2}0^{3}1^{3}01^{2}01"),
        (4, 133, [1, 19], "10^{4}1231301^{2}"),
        (9, 247, [1, 38], "176853^{2}185651"),
    ],
)
def test_published_generators(q2, n, reps, text):
    F = field_make(q2)
    assert p_format(gen_from_defining_set(n, F, defining_set(n, q2, reps))) == text


def test_trivial_defining_sets():
    for n in (5, 7, 9):
        assert gen_from_defining_set(n, F4, defining_set(n, 4, [])) == Poly.one(F4)
        assert gen_from_defining_set(n, F4, range(n)) == xn_minus_1(F4, n)
        assert defining_set_of(Poly.one(F4), n).elements == frozenset()
        assert defining_set_of(xn_minus_1(F4, n), n).elements == frozenset(range(n))
        assert cyclic_dim(cyclic_code(n, F4, Poly.one(F4))) == n
        assert cyclic_dim(cyclic_code(n, F4, xn_minus_1(F4, n))) == 0


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        gen_from_defining_set(41, F4, [1, 2])
    with pytest.raises(ValueError):
        defining_set_of(p_parse("1101", F4), 5)
    with pytest.raises(ValueError):
        cyclic_code(5, F4, p_parse("1101", F4))


def _lengths(F, hi):
    """Lengths whose splitting field has a tabulated Conway polynomial."""
    db = conway_polynomials.database()[F.p]
    out = []
    for n in range(2, hi + 1):
        if n % F.p == 0:
            continue
        s = 1
        while pow(F.order, s, n) != 1:
            s += 1
        if F.m * s in db and F.order ** s < 10**12:
            out.append(n)
    return out


@pytest.mark.parametrize("q2", [4, 9, 16, 25])
def test_round_trip_and_lcm(q2):
    F = field_make(q2)
    rng = random.Random(q2 * 3)
    for _ in range(20):
        n = rng.choice(_lengths(F, 100))
        cos = all_cosets(n, q2)
        a = [c.rep for c in cos if rng.random() < 0.3]
        b = [c.rep for c in cos if c.rep not in a and rng.random() < 0.3]
        Ta, Tb = defining_set(n, q2, a), defining_set(n, q2, b)
        ga, gb = gen_from_defining_set(n, F, Ta), gen_from_defining_set(n, F, Tb)
        assert defining_set_of(ga, n).elements == Ta.elements
        assert ga.degree == len(Ta)
        both = defining_set(n, q2, a + b)
        assert gen_from_defining_set(n, F, both) == p_lcm(ga, gb)


@pytest.mark.parametrize("q2", [4, 9])
def test_dual_defining_set(q2):
    F = field_make(q2)
    q = F.q
    rng = random.Random(11 * q2)
    for _ in range(40):
        n = rng.choice([k for k in range(2, 31) if k % F.p])
        g = random_divisor(rng, n, F)
        T = defining_set_of(g, n).elements
        expected = frozenset(range(n)) - frozenset((-q * t) % n for t in T)
        assert defining_set_of(p_dual_gen(g, n), n).elements == expected


def test_circulant_rank():
    rng = random.Random(5)
    for F in (F4, field_make(9)):
        for _ in range(20):
            n = rng.choice([k for k in range(2, 25) if k % F.p])
            g = random_divisor(rng, n, F)
            code = CyclicCode(n, F, g)
            G = code.generator_matrix()
            assert G.shape == (n - g.degree, n)
            if G.shape[0]:
                assert rank(G, F) == n - g.degree
