"""Minimum distance of linear codes over small fields.

Four engines share the compiled kernels:

* :func:`dmin_exhaustive` walks the whole message space in Gray-code order.
* :func:`dmin_bz` is the Brouwer-Zimmermann information-set algorithm with
  matching lower and upper bounds.
* :func:`dmin_syndrome` is a meet-in-the-middle search on parity-check
  columns; it is the cheap route for high-rate codes and can exploit a
  cyclic or quasi-cyclic shift symmetry.
* :func:`find_low_weight` samples information sets (Lee-Brickell) to find
  light codewords, giving upper bounds only.

Every engine returns a :class:`DistanceResult`.  Parallel runs split the work
statically and reduce with ``min``, so results never depend on worker count.
"""
from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from math import comb
from typing import Callable

import numpy as np

from ..fields import FieldSpec
from ..linalg import null_space, rref
from . import kernels

log = logging.getLogger(__name__)

__all__ = [
    "DistanceResult",
    "BudgetExceeded",
    "dmin_exhaustive",
    "dmin_bz",
    "dmin_syndrome",
    "find_low_weight",
    "minimum_distance",
    "exhaustive_cost",
    "syndrome_cost",
]

Progress = Callable[[dict], None]
DEFAULT_EXHAUSTIVE_BUDGET = 2 * 10**8
# left-half syndrome table rows; each row costs about r + 16 bytes
DEFAULT_SYNDROME_TABLE = 3 * 10**7


class BudgetExceeded(RuntimeError):
    pass


@dataclass
class DistanceResult:
    lower: int
    upper: int
    work: int = 0
    method: str = ""
    codeword: np.ndarray | None = dc_field(default=None, repr=False)
    seconds: float = 0.0

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> int | None:
        return self.lower if self.exact else None

    def __str__(self) -> str:
        if self.exact:
            return str(self.lower)
        return f"[{self.lower},{self.upper}]"


def _generator(code_or_G, F: FieldSpec | None):
    if hasattr(code_or_G, "generator_matrix"):
        G = code_or_G.generator_matrix()
        F = code_or_G.field
    else:
        G = code_or_G
    if F is None:
        raise ValueError("a field is required with a bare matrix")
    G = np.asarray(G, dtype=np.uint8)
    if G.size == 0:
        raise ValueError("the zero code has no minimum distance")
    B = rref(G, F)[0]
    if B.shape[0] == 0:
        raise ValueError("the zero code has no minimum distance")
    return B, F


def _rowmult(M, F: FieldSpec) -> np.ndarray:
    """rowmult[i, c] = c * M[i] as a (rows, Q, n) uint8 array."""
    return np.ascontiguousarray(F.mul_tab[:, M].transpose(1, 0, 2))


def _split(items: list, workers: int) -> list[list]:
    return [items[w::workers] for w in range(workers)] if workers > 1 else [items]


def _run(jobs, workers: int):
    if workers <= 1 or len(jobs) <= 1:
        return [job() for job in jobs]
    with ThreadPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(lambda j: j(), jobs))


def exhaustive_cost(k: int, Q: int) -> int:
    return Q**k


def dmin_exhaustive(
    code,
    F: FieldSpec | None = None,
    budget: int = DEFAULT_EXHAUSTIVE_BUDGET,
    workers: int = 1,
    progress: Progress | None = None,
) -> DistanceResult:
    """Exact minimum distance by enumerating every message up to scaling."""
    t0 = time.perf_counter()
    G, F = _generator(code, F)
    k, n = G.shape
    Q = F.order
    if exhaustive_cost(k, Q) > budget:
        raise BudgetExceeded(f"{Q}^{k} codewords exceed the budget of {budget}")
    rm = _rowmult(G, F)
    units = [(0, -1)] + [(L, v) for L in range(1, k) for v in range(Q)]
    # heavy units last so the round-robin split stays balanced
    parts = [np.array(p, dtype=np.int64).reshape(-1, 2) for p in _split(units, workers)]
    best, work = n + 1, 0
    chunks = []
    for p in parts:
        chunks.append(lambda p=p: kernels.exhaustive_units(rm, F.add_tab, F.sub_tab, p, 1))
    for b, c in _run(chunks, workers):
        best = min(best, int(b))
        work += int(c)
    if progress:
        progress({"method": "exhaustive", "work": work, "upper": best})
    return DistanceResult(best, best, work, "exhaustive", seconds=time.perf_counter() - t0)


def _info_set_matrices(G: np.ndarray, F: FieldSpec):
    """Systematic forms on (nearly) disjoint information sets, with ranks."""
    k, n = G.shape
    remaining = list(range(n))
    mats = []
    while remaining:
        A, piv = rref(G, F, col_order=remaining, keep_all=True)
        if not piv:
            break
        mats.append((A, len(piv)))
        used = set(piv)
        remaining = [c for c in remaining if c not in used]
    return mats


def dmin_bz(
    code,
    F: FieldSpec | None = None,
    time_budget: float | None = 60.0,
    workers: int = 1,
    cap: int | None = None,
    progress: Progress | None = None,
) -> DistanceResult:
    """Brouwer-Zimmermann with Zimmermann's rank-deficient matrices.

    After all combinations of ``w`` rows have been tried in every systematic
    matrix that still contributes, no unseen codeword can have weight below
    ``sum_j max(0, w + 1 - (k - r_j))``.  Stops when that lower bound meets the
    lightest word found, when the lower bound exceeds ``cap``, or at the time
    budget (returning the interval reached).
    """
    t0 = time.perf_counter()
    deadline = None if time_budget is None else t0 + time_budget
    G, F = _generator(code, F)
    k, n = G.shape
    Q = F.order
    mats = [(A, r, _rowmult(A, F)) for A, r in _info_set_matrices(G, F)]
    upper = n + 1
    best_word = None
    # every row of every systematic matrix is a codeword
    for A, _, _ in mats:
        wts = np.count_nonzero(A, axis=1)
        i = int(np.argmin(wts))
        if wts[i] < upper:
            upper, best_word = int(wts[i]), A[i].copy()
    lower = 1
    work = 0
    for w in range(1, k + 1):
        contrib = [max(0, w + 1 - (k - r)) for _, r, _ in mats]
        active = [j for j, c in enumerate(contrib) if c > 0]
        done = True
        for j in active:
            A, r, rm = mats[j]
            firsts = list(range(0, k - w + 1))
            step = max(1, len(firsts) // (8 * max(1, workers)))
            blocks = [(lo, min(lo + step, k - w + 1)) for lo in range(0, k - w + 1, step)]
            for bi in range(0, len(blocks), max(1, workers)):
                batch = blocks[bi:bi + max(1, workers)]
                jobs = []
                for lo, hi in batch:
                    def job(lo=lo, hi=hi, rm=rm):
                        rows = np.zeros(w, dtype=np.int64)
                        cfs = np.zeros(w, dtype=np.int64)
                        b, c = kernels.combo_min(rm, F.add_tab, w, lo, hi, lower, rows, cfs)
                        return int(b), int(c), rows, cfs
                    jobs.append(job)
                for b, c, rows, cfs in _run(jobs, workers):
                    work += c
                    if b < upper:
                        upper = b
                        word = np.zeros(n, dtype=np.uint8)
                        for rr, cc in zip(rows, cfs):
                            word = F.add_tab[word, F.mul_tab[cc, A[rr]]]
                        best_word = word
                if upper <= lower:
                    break
                if deadline is not None and time.perf_counter() > deadline:
                    done = False
                    break
            if not done or upper <= lower:
                break
        if done and upper > lower:
            lower = max(lower, sum(contrib))
        if progress:
            progress({"method": "bz", "w": w, "lower": lower, "upper": upper, "work": work})
        if upper <= lower:
            lower = upper
            break
        if cap is not None and lower > cap:
            break
        if not done:
            break
    return DistanceResult(min(lower, upper), upper, work, "bz", best_word, time.perf_counter() - t0)


def _symmetry_anchors(n: int, symmetry) -> np.ndarray:
    """Positions that can be assumed to be the first support element."""
    if symmetry is None:
        return np.arange(n, dtype=np.int64)
    if symmetry == "cyclic":
        return np.array([0], dtype=np.int64)
    if isinstance(symmetry, tuple) and symmetry[0] == "quasi-cyclic":
        block = symmetry[1]
        if n % block:
            raise ValueError("block length must divide n")
        return np.arange(0, n, block, dtype=np.int64)
    raise ValueError(f"unknown symmetry {symmetry!r}")


def _left_count(n: int, anchors, size: int, Q: int) -> int:
    return sum(comb(n - 1 - int(a), size - 1) for a in anchors) * (Q - 1) ** (size - 1)


def syndrome_cost(n: int, k: int, w: int, Q: int, symmetry=None) -> int:
    """Rough pattern count to rule out (or find) a codeword of weight ``w``."""
    if w < 1:
        return 0
    anchors = _symmetry_anchors(n, symmetry)
    wl = (w + 1) // 2
    wr = w - wl
    return _left_count(n, anchors, wl, Q) + comb(n, wr) * (Q - 1) ** wr


def dmin_syndrome(
    code,
    F: FieldSpec | None = None,
    cap: int | None = None,
    start: int = 1,
    symmetry=None,
    workers: int = 1,
    time_budget: float | None = None,
    max_table: int = DEFAULT_SYNDROME_TABLE,
    progress: Progress | None = None,
) -> DistanceResult:
    """Smallest weight ``w >= start`` with a codeword, by syndrome collision.

    A weight-``w`` codeword splits, by position, into a left part carrying the
    first ``ceil(w/2)`` support positions and a right part with the rest; their
    parity-check syndromes cancel.  Left syndromes are sorted, right patterns
    are streamed and looked up.  ``start`` must not exceed the true distance
    (weights below it are assumed absent).  With ``cap`` the search stops after
    weight ``cap`` and reports ``d > cap`` as a lower bound.  A weight whose
    left table would exceed ``max_table`` rows ends the search the same way a
    time budget does, with the interval reached.
    """
    t0 = time.perf_counter()
    deadline = None if time_budget is None else t0 + time_budget
    G, F = _generator(code, F)
    k, n = G.shape
    Q = F.order
    if k == n:
        return DistanceResult(1, 1, 0, "syndrome", np.eye(1, n, dtype=np.uint8)[0])
    H = null_space(G, F)
    r = H.shape[0]
    colmult = np.ascontiguousarray(F.mul_tab[:, H.T].transpose(1, 0, 2))  # (n, Q, r)
    bits = max(1, (Q - 1).bit_length())
    anchors = _symmetry_anchors(n, symmetry)
    limit = n if cap is None else min(cap, n)
    work = 0
    w = max(1, start)
    while w <= limit:
        wl = (w + 1) // 2
        wr = w - wl
        m = _left_count(n, anchors, wl, Q)
        if m > max_table:
            return DistanceResult(w, n - k + 1, work, "syndrome", None, time.perf_counter() - t0)
        keys = np.zeros(m, dtype=np.uint64)
        synd = np.zeros((m, r), dtype=np.uint8)
        maxpos = np.zeros(m, dtype=np.int64)
        got = kernels.left_patterns(colmult, F.add_tab, anchors, wl, bits, keys, synd, maxpos)
        assert got == m, (got, m)
        work += m
        if wr == 0:
            hit = np.flatnonzero(~synd.any(axis=1))
            if hit.size:
                word = _word(n, [anchors[hit[0]]], [1])
                return DistanceResult(w, w, work, "syndrome", word, time.perf_counter() - t0)
        else:
            order = np.argsort(keys, kind="stable")
            keys, synd, maxpos = keys[order], synd[order], maxpos[order]
            lo_j = int(anchors.min()) + 1
            spans = _spans(lo_j, n - wr + 1, max(1, workers) * 8)
            found = None
            for bi in range(0, len(spans), max(1, workers)):
                batch = spans[bi:bi + max(1, workers)]
                jobs = []
                for lo, hi in batch:
                    def job(lo=lo, hi=hi):
                        hp = np.zeros(wr, dtype=np.int64)
                        hc = np.zeros(wr, dtype=np.int64)
                        idx, c = kernels.right_search(
                            colmult, F.add_tab, F.neg_tab, wr, lo, hi, bits, keys, synd, maxpos, hp, hc
                        )
                        return int(idx), int(c), hp, hc
                    jobs.append(job)
                for idx, c, hp, hc in _run(jobs, workers):
                    work += c
                    if idx >= 0 and found is None:
                        found = (idx, hp, hc)
                if found is not None:
                    break
                if deadline is not None and time.perf_counter() > deadline:
                    return DistanceResult(w, n - k + 1, work, "syndrome", None, time.perf_counter() - t0)
            if found is not None:
                idx, hp, hc = found
                lp, lc = _recover_left(colmult, F.add_tab, anchors, wl, int(hp[0]), synd[idx])
                word = _word(n, list(lp) + list(hp), list(lc) + list(hc))
                return DistanceResult(w, w, work, "syndrome", word, time.perf_counter() - t0)
        if progress:
            progress({"method": "syndrome", "w": w, "lower": w + 1, "work": work})
        w += 1
    return DistanceResult(limit + 1, n - k + 1, work, "syndrome", None, time.perf_counter() - t0)


def _spans(lo: int, hi: int, parts: int) -> list[tuple[int, int]]:
    if hi <= lo:
        return []
    step = max(1, -(-(hi - lo) // parts))
    return [(a, min(a + step, hi)) for a in range(lo, hi, step)]


def _recover_left(colmult, add_tab, anchors, size, before, target):
    """Positions and coefficients of a left pattern with the given syndrome."""
    from ._np import _patterns

    for a in anchors:
        a = int(a)
        if a >= before:
            continue
        for S, pos, cfs in _patterns(colmult[:before], add_tab, a + 1, size - 1, colmult[a, 1].copy(), (a,), (1,)):
            hit = np.flatnonzero((S == target[None, :]).all(axis=1))
            if hit.size:
                return pos[hit[0]], cfs[hit[0]]
    raise AssertionError("left pattern not found")


def _word(n, pos, cfs, F=None, word=None):
    word = np.zeros(n, dtype=np.uint8) if word is None else word
    for p, c in zip(pos, cfs):
        word[int(p)] = int(c)
    return word


def find_low_weight(
    code,
    F: FieldSpec | None = None,
    target: int = 1,
    time_budget: float = 60.0,
    seed: int = 0,
    p: int = 2,
    max_iters: int | None = None,
    progress: Progress | None = None,
) -> DistanceResult:
    """Lee-Brickell information-set sampling for a codeword of weight <= target.

    Only the upper bound is meaningful (lower stays 1).  Deterministic for a
    given seed.
    """
    t0 = time.perf_counter()
    G, F = _generator(code, F)
    k, n = G.shape
    rng = np.random.Generator(np.random.Philox(key=seed))
    best, best_word, work, it = n + 1, None, 0, 0
    while True:
        it += 1
        perm = rng.permutation(n)
        A, piv = rref(G, F, col_order=perm, keep_all=True)
        rm = _rowmult(A, F)
        for w in range(1, min(p, k) + 1):
            rows = np.zeros(w, dtype=np.int64)
            cfs = np.zeros(w, dtype=np.int64)
            b, c = kernels.combo_min(rm, F.add_tab, w, 0, k, target, rows, cfs)
            work += int(c)
            if b < best:
                best = int(b)
                word = np.zeros(n, dtype=np.uint8)
                for rr, cc in zip(rows, cfs):
                    word = F.add_tab[word, F.mul_tab[cc, A[rr]]]
                best_word = word
        if progress:
            progress({"method": "isd", "iter": it, "upper": best, "work": work})
        if best <= target:
            break
        if max_iters is not None and it >= max_iters:
            break
        if time.perf_counter() - t0 > time_budget:
            break
    return DistanceResult(1, best, work, "isd", best_word, time.perf_counter() - t0)


def minimum_distance(
    code,
    F: FieldSpec | None = None,
    budget_secs: float = 60.0,
    exhaustive_budget: int = DEFAULT_EXHAUSTIVE_BUDGET,
    symmetry=None,
    cap: int | None = None,
    workers: int = 1,
    syndrome_budget: int = 5 * 10**8,
    progress: Progress | None = None,
) -> DistanceResult:
    """Pick an engine by cost: exhaustive when small, else BZ refined by syndromes.

    With ``cap`` the answer only has to be exact when d <= cap; otherwise a
    lower bound above ``cap`` is acceptable.
    """
    G, F = _generator(code, F)
    k, n = G.shape
    Q = F.order
    if exhaustive_cost(k, Q) <= exhaustive_budget:
        return dmin_exhaustive(G, F, budget=exhaustive_budget, workers=workers, progress=progress)
    t0 = time.perf_counter()
    # a quick sampling pass gives an upper bound; high-rate codes are then
    # settled by syndrome collision without any information-set enumeration
    probe = find_low_weight(G, F, target=1, time_budget=min(5.0, budget_secs / 10), seed=0, max_iters=32)
    if probe.upper == 1:
        return _merged(DistanceResult(1, 1, 0, "isd", probe.codeword), probe, "isd", t0)
    stop = probe.upper - 1 if cap is None else min(probe.upper - 1, cap)
    if syndrome_cost(n, k, stop, Q, symmetry) <= syndrome_budget:
        sres = dmin_syndrome(G, F, cap=stop, symmetry=symmetry, workers=workers,
                             time_budget=budget_secs, progress=progress)
        if sres.exact:
            return _merged(sres, probe, "syndrome", t0)
        if sres.lower > stop:
            upper = probe.upper
            lower = min(sres.lower, upper)
            return DistanceResult(lower, upper, sres.work + probe.work, "syndrome", probe.codeword,
                                  time.perf_counter() - t0)
    res = dmin_bz(G, F, time_budget=budget_secs / 2, workers=workers, cap=cap, progress=progress)
    if res.upper > probe.upper:
        res = DistanceResult(res.lower, probe.upper, res.work, res.method, probe.codeword, res.seconds)
    if res.exact or (cap is not None and res.lower > cap):
        return res
    stop = res.upper - 1 if cap is None else min(res.upper - 1, cap)
    if stop >= res.lower and syndrome_cost(n, k, stop, Q, symmetry) <= syndrome_budget:
        remaining = max(1.0, budget_secs - (time.perf_counter() - t0))
        sres = dmin_syndrome(
            G, F, cap=stop, start=res.lower, symmetry=symmetry, workers=workers, time_budget=remaining, progress=progress
        )
        if sres.exact:
            return _merged(sres, res, "bz+syndrome", t0)
        lower = min(max(res.lower, sres.lower), res.upper)
        return DistanceResult(lower, res.upper, res.work + sres.work, "bz+syndrome", res.codeword,
                              time.perf_counter() - t0)
    return res


def _merged(sres: DistanceResult, other: DistanceResult, method: str, t0: float) -> DistanceResult:
    return DistanceResult(sres.lower, sres.upper, sres.work + other.work, method, sres.codeword,
                          time.perf_counter() - t0)
