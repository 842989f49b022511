import os
import random

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from hermqc.cosets import all_cosets, defining_set
from hermqc.cyclic import gen_from_defining_set
from hermqc.fields import field_make
from hermqc.fixtures import load_fixtures
from hermqc.poly import Poly

settings.register_profile("ci", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("ci")

Q_OF = {4: 2, 9: 3, 16: 4, 25: 5}


def pytest_collection_modifyitems(config, items):
    if os.environ.get("HERMQC_HOURS") == "1":
        return
    skip = pytest.mark.skip(reason="hours-scale; set HERMQC_HOURS=1")
    for item in items:
        if "hours" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def fixtures():
    return {r.id: r for r in load_fixtures()}


def coprime_lengths(q2, lo=2, hi=12):
    return [n for n in range(lo, hi + 1) if n % Q_OF[q2] != 0]


def random_divisor(rng: random.Random, n: int, F) -> Poly:
    """Generator of a random cyclic code: product over a random coset union."""
    reps = [c.rep for c in all_cosets(n, F.order) if rng.random() < 0.4]
    return gen_from_defining_set(n, F, defining_set(n, F.order, reps))


def random_poly(rng: random.Random, n: int, F) -> Poly:
    return Poly(F, [rng.randrange(F.order) for _ in range(n)])


def skew_poly(rng: random.Random, n: int, F) -> Poly:
    """Random t with conj-reciprocal equal to -t, so t + tbar^q vanishes."""
    c = [0] * n
    anti = [a for a in range(F.order) if F.conj(a) == F.neg(a)]
    c[0] = rng.choice(anti)
    for i in range(1, n):
        j = (n - i) % n
        if i < j:
            c[i] = rng.randrange(F.order)
            c[j] = F.neg(F.conj(c[i]))
        elif i == j:
            c[i] = rng.choice(anti)
    return Poly(F, c)


def random_instance(rng: random.Random, q2: int, max_n: int = 12):
    """(n, F, g1, g2, t) mixing plain random t with structured choices."""
    F = field_make(q2)
    n = rng.choice(coprime_lengths(q2, 2, max_n))
    g1 = random_divisor(rng, n, F)
    g2 = random_divisor(rng, n, F) if rng.random() < 0.8 else Poly.one(F)
    r = rng.random()
    if r < 0.15:
        t = Poly.zero(F)
    elif r < 0.55:
        t = skew_poly(rng, n, F)
    else:
        t = random_poly(rng, n, F)
    return n, F, g1, g2, t


def random_matrix(rng: np.random.Generator, k: int, n: int, order: int) -> np.ndarray:
    return rng.integers(0, order, size=(k, n)).astype(np.uint8)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    from test_acceptance import ACCEPTANCE_KEY

    lines = config.stash.get(ACCEPTANCE_KEY, None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
