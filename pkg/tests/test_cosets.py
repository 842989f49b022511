import random
from math import gcd

import pytest

from hermqc.cosets import all_cosets, coset_of, defining_set, ds_dual_containing, neg_q, skew_classify
from hermqc.cyclic import gen_from_defining_set
from hermqc.fields import field_make
from hermqc.poly import p_divides, p_dual_gen


def test_spec_examples():
    c1 = coset_of(1, 41, 4)
    assert set(c1.members) == {1, 4, 16, 23, 10, 40, 37, 25, 18, 31} and len(c1) == 10
    assert [set(c.members) for c in all_cosets(5, 4)] == [{0}, {1, 4}, {2, 3}]
    assert skew_classify(coset_of(1, 5, 4), 5, 2) == ("asymmetric", 2)
    assert skew_classify(coset_of(0, 7, 9), 7, 3) == ("symmetric", None)
    kind, partner = skew_classify(c1, 41, 2)
    assert kind == "asymmetric" and 39 in coset_of(partner, 41, 4)
    assert ds_dual_containing(defining_set(41, 4, [1]), 2)
    assert ds_dual_containing(defining_set(41, 4, []), 2)


def test_rejects_non_coprime_length():
    with pytest.raises(ValueError):
        all_cosets(6, 4)
    with pytest.raises(ValueError):
        defining_set(41, 4, elements=[1, 2])


@pytest.mark.parametrize("q2", [4, 9, 16, 25])
def test_partition(q2):
    for n in range(1, 501):
        if gcd(n, q2) != 1:
            continue
        cos = all_cosets(n, q2)
        seen = [m for c in cos for m in c.members]
        assert sorted(seen) == list(range(n))
        for c in cos:
            assert c.rep == min(c.members)
            assert all((m * q2) % n in c for m in c.members)


@pytest.mark.parametrize("q2", [4, 9, 16, 25])
def test_partner_is_involution(q2):
    q = int(round(q2 ** 0.5))
    for n in range(2, 120):
        if gcd(n, q2) != 1:
            continue
        for c in all_cosets(n, q2):
            kind, partner = skew_classify(c, n, q)
            if kind == "asymmetric":
                k2, back = skew_classify(coset_of(partner, n, q2), n, q)
                assert k2 == "asymmetric" and back == c.rep
            else:
                # a skew-symmetric coset alone already breaks dual containment
                assert not ds_dual_containing(defining_set(n, q2, [c.rep]), q)


def test_neg_q_maps_cosets_to_cosets():
    T = defining_set(35, 4, [1, 5])
    image = neg_q(T.elements, 35, 2)
    assert all((x * 4) % 35 in image for x in image)


@pytest.mark.parametrize("q2", [4, 9])
def test_soundness_bridge(q2):
    F = field_make(q2)
    q = F.q
    rng = random.Random(q2)
    hits = 0
    for _ in range(300):
        n = rng.choice([k for k in range(2, 31) if k % F.p])
        reps = [c.rep for c in all_cosets(n, q2) if rng.random() < 0.3]
        T = defining_set(n, q2, reps)
        if ds_dual_containing(T, q):
            hits += 1
            g = gen_from_defining_set(n, F, T)
            assert p_divides(g, p_dual_gen(g, n))
    assert hits > 30
