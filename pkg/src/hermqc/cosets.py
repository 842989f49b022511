"""q^2-cyclotomic cosets modulo n and defining sets of cyclic codes."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable

__all__ = [
    "Coset",
    "DefiningSet",
    "all_cosets",
    "coset_of",
    "skew_classify",
    "neg_q",
    "ds_dual_containing",
    "defining_set",
]


@dataclass(frozen=True)
class Coset:
    rep: int  # minimal element
    members: tuple[int, ...]  # in generation order i, i*q^2, i*q^4, ...

    def __contains__(self, i: int) -> bool:
        return i in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __str__(self) -> str:
        return f"C{self.rep}"


def _check(n: int, q2: int) -> None:
    if n < 1:
        raise ValueError("n must be positive")
    if gcd(n, q2) != 1:
        raise ValueError(f"gcd({n}, {q2}) != 1")


def coset_of(i: int, n: int, q2: int) -> Coset:
    _check(n, q2)
    i %= n
    members = [i]
    j = (i * q2) % n
    while j != i:
        members.append(j)
        j = (j * q2) % n
    return Coset(min(members), tuple(members))


def all_cosets(n: int, q2: int) -> list[Coset]:
    """Partition of {0, ..., n-1} into q^2-cyclotomic cosets, by representative."""
    _check(n, q2)
    seen = [False] * n
    out = []
    for i in range(n):
        if not seen[i]:
            c = coset_of(i, n, q2)
            for j in c.members:
                seen[j] = True
            out.append(c)
    return out


def skew_classify(coset: Coset, n: int, q: int) -> tuple[str, int | None]:
    """``("symmetric", None)`` or ``("asymmetric", partner_rep)``.

    The partner of C_i is the coset of -q*i mod n.
    """
    j = (-q * coset.rep) % n
    if j in coset.members:
        return "symmetric", None
    return "asymmetric", coset_of(j, n, q * q).rep


def neg_q(elements: Iterable[int], n: int, q: int) -> frozenset[int]:
    return frozenset((-q * t) % n for t in elements)


@dataclass(frozen=True)
class DefiningSet:
    n: int
    q2: int
    cosets: tuple[int, ...]  # sorted representatives
    elements: frozenset[int]

    def __post_init__(self):
        for t in self.elements:
            if (t * self.q2) % self.n not in self.elements:
                raise ValueError("defining set is not a union of cyclotomic cosets")

    def __len__(self) -> int:
        return len(self.elements)

    def __str__(self) -> str:
        return " u ".join(f"C{r}" for r in self.cosets) or "{}"


def defining_set(n: int, q2: int, reps: Iterable[int] = (), elements: Iterable[int] | None = None) -> DefiningSet:
    """Defining set from coset representatives, or from an explicit element set."""
    _check(n, q2)
    if elements is not None:
        elems = frozenset(int(e) % n for e in elements)
    else:
        elems = frozenset(j for r in reps for j in coset_of(r, n, q2).members)
    cos = sorted({coset_of(e, n, q2).rep for e in elems})
    return DefiningSet(n, q2, tuple(cos), elems)


def ds_dual_containing(T: DefiningSet, q: int) -> bool:
    """True iff T and -qT are disjoint, i.e. <g>^perp_h is contained in <g>."""
    if q * q != T.q2:
        raise ValueError(f"q={q} does not match q^2={T.q2}")
    image = neg_q(T.elements, T.n, q)
    # -q maps cosets onto cosets; anything else means q and q^2 got mixed up
    assert all((x * T.q2) % T.n in image for x in image)
    return not (T.elements & image)
