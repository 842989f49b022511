"""Quantum code parameters: Hermitian construction, propagation, GV bound."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

__all__ = [
    "QuantumParams",
    "hermitian_construct",
    "propagate",
    "propagation_closure",
    "gv_sides",
    "gv_kmax",
    "beats_gv",
    "gv_is_vacuous",
]


@dataclass(frozen=True, order=True)
class QuantumParams:
    n: int
    k: int
    d: int
    q: int
    d_status: str = "exact"  # exact | lower_bound
    pure: bool = True

    def __post_init__(self):
        if not 0 <= self.k <= self.n:
            raise ValueError(f"need 0 <= k <= n, got n={self.n}, k={self.k}")
        if self.d < 1:
            raise ValueError("distance must be positive")

    def __str__(self) -> str:
        return f"[[{self.n},{self.k},{self.d}]]_{self.q}"

    @property
    def key(self) -> tuple[int, int, int, int]:
        return (self.n, self.k, self.d, self.q)


def hermitian_construct(
    length: int,
    dim: int,
    d: int,
    q: int,
    certified_dual_containing: bool,
    d_status: str = "exact",
) -> QuantumParams:
    """[length, dim, d]_{q^2} dual-containing  ->  [[length, 2*dim - length, d]]_q, pure."""
    if not certified_dual_containing:
        raise ValueError("the classical code is not certified Hermitian dual-containing")
    if 2 * dim < length:
        raise ValueError(f"dimension {dim} is below half the length {length}")
    return QuantumParams(length, 2 * dim - length, d, q, d_status=d_status, pure=True)


def propagate(p: QuantumParams) -> set[QuantumParams]:
    """One-step derivatives of a pure code: [[n, k-1, d]] and [[n+1, k, d]]."""
    if not p.pure:
        return set()
    out = set()
    if p.k >= 1:
        out.add(QuantumParams(p.n, p.k - 1, p.d, p.q, p.d_status, True))
        out.add(QuantumParams(p.n + 1, p.k, p.d, p.q, p.d_status, True))
    return out


def propagation_closure(
    base: list[QuantumParams] | set[QuantumParams],
    max_n: int | None = None,
    min_k: int = 0,
    max_steps: int | None = None,
) -> dict[tuple, int]:
    """Reachable parameters with the least number of steps, bounded by a target box.

    Returns ``{(n, k, d, q): steps}``.  Exploration stops above ``max_n``,
    below ``min_k``, or after ``max_steps`` steps.
    """
    if max_n is None and max_steps is None:
        raise ValueError("the closure is infinite without max_n or max_steps")
    seen: dict[tuple, int] = {}
    frontier = [p for p in base]
    for p in frontier:
        seen.setdefault(p.key, 0)
    step = 0
    while frontier and (max_steps is None or step < max_steps):
        step += 1
        nxt = []
        for p in frontier:
            for c in propagate(p):
                if max_n is not None and c.n > max_n:
                    continue
                if c.k < min_k or c.key in seen:
                    continue
                seen[c.key] = step
                nxt.append(c)
        frontier = nxt
    return seen


def gv_sides(n: int, kk: int, d: int, q: int) -> tuple[int, int]:
    """Both sides of the GV inequality, cleared of the denominator q^2 - 1.

    The condition (q^(n-kk+2) - 1)/(q^2 - 1) > sum_{i=1}^{d-1} (q^2-1)^(i-1) C(n,i)
    is compared as lhs > rhs with lhs = q^(n-kk+2) - 1 and rhs = (q^2 - 1) * sum.
    """
    s = sum((q * q - 1) ** (i - 1) * comb(n, i) for i in range(1, d))
    return q ** (n - kk + 2) - 1, (q * q - 1) * s


def gv_kmax(n: int, d: int, q: int) -> int:
    """Largest kk with 2 <= kk < n, kk = n mod 2, meeting the GV inequality; 0 if none."""
    if n <= 2 or d < 2:
        raise ValueError("need n > 2 and d >= 2")
    # the left side shrinks as kk grows, so scan down from the top
    for kk in range(n - 2, 1, -2):
        lhs, rhs = gv_sides(n, kk, d, q)
        if lhs > rhs:
            return kk
    return 0


def gv_is_vacuous(n: int, d: int, q: int) -> bool:
    return gv_kmax(n, d, q) == 0


def beats_gv(p: QuantumParams) -> bool:
    return p.k >= gv_kmax(p.n, p.d, p.q)
