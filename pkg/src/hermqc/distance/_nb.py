"""numba kernels for codeword enumeration.

All arrays hold field elements as uint8 indices; ``add_tab`` is the field's
addition table and ``rowmult[i, c]`` is row ``i`` scaled by element ``c``.
"""
import numpy as np
from numba import njit

_opts = dict(cache=True, nogil=True)


@njit(**_opts)
def _weight(v):
    w = 0
    for x in v:
        if x != 0:
            w += 1
    return w


@njit(**_opts)
def exhaustive_units(rowmult, add_tab, sub_tab, units, stop_at):
    """Minimum weight over the message classes listed in ``units``.

    Unit ``(L, v)`` covers messages whose highest nonzero digit is digit ``L``
    (fixed to 1), with digit ``L-1`` fixed to ``v`` (ignored for L == 0) and
    all lower digits free.  Lower digits run through a modular Gray code, so
    each step costs one scaled-row addition.
    """
    k, Q, n = rowmult.shape
    best = n + 1
    count = 0
    cw = np.empty(n, dtype=np.uint8)
    for u in range(units.shape[0]):
        L = units[u, 0]
        v = units[u, 1]
        for j in range(n):
            cw[j] = rowmult[L, 1, j]
        if L >= 1 and v > 0:
            for j in range(n):
                cw[j] = add_tab[cw[j], rowmult[L - 1, v, j]]
        w = _weight(cw)
        count += 1
        if w < best:
            best = w
            if best <= stop_at:
                return best, count
        free = L - 1 if L >= 1 else 0
        if free <= 0:
            continue
        digits = np.zeros(free, dtype=np.int64)
        total = Q**free
        for c in range(1, total):
            i = 0
            cc = c
            while cc % Q == 0:
                cc //= Q
                i += 1
            old = digits[i]
            new = (old + 1) % Q
            digits[i] = new
            delta = sub_tab[new, old]
            row = rowmult[i, delta]
            w = 0
            for j in range(n):
                x = add_tab[cw[j], row[j]]
                cw[j] = x
                if x != 0:
                    w += 1
            count += 1
            if w < best:
                best = w
                if best <= stop_at:
                    return best, count
    return best, count


@njit(**_opts)
def combo_min(rowmult, add_tab, w, first_lo, first_hi, stop_at, best_rows, best_coefs):
    """Minimum weight over combinations of ``w`` rows with nonzero coefficients.

    The first (lowest) row index ranges over ``[first_lo, first_hi)`` with
    coefficient 1, which enumerates every projective class once.  The rows and
    coefficients of the lightest word found are written to ``best_rows`` /
    ``best_coefs``.
    """
    k, Q, n = rowmult.shape
    best = n + 1
    count = 0
    partial = np.zeros((w, n), dtype=np.uint8)
    pos = np.zeros(w, dtype=np.int64)
    cf = np.ones(w, dtype=np.int64)
    for first in range(first_lo, min(first_hi, k - w + 1)):
        pos[0] = first
        cf[0] = 1
        for j in range(n):
            partial[0, j] = rowmult[first, 1, j]
        if w == 1:
            wt = _weight(partial[0])
            count += 1
            if wt < best:
                best = wt
                best_rows[0] = first
                best_coefs[0] = 1
                if best <= stop_at:
                    return best, count
            continue
        # depth-first over (position, coefficient) for levels 1..w-1
        level = 1
        pos[1] = first
        cf[1] = Q - 1  # forces the position advance on entry
        while level >= 1:
            if cf[level] < Q - 1:
                cf[level] += 1
            else:
                pos[level] += 1
                cf[level] = 1
                if pos[level] > k - (w - level):
                    level -= 1
                    continue
            prev = partial[level - 1]
            row = rowmult[pos[level], cf[level]]
            cur = partial[level]
            for j in range(n):
                cur[j] = add_tab[prev[j], row[j]]
            if level == w - 1:
                wt = _weight(cur)
                count += 1
                if wt < best:
                    best = wt
                    for l in range(w):
                        best_rows[l] = pos[l]
                        best_coefs[l] = cf[l]
                    if best <= stop_at:
                        return best, count
            else:
                level += 1
                pos[level] = pos[level - 1]
                cf[level] = Q - 1
    return best, count


@njit(**_opts)
def _pack(s, bits):
    key = np.uint64(14695981039346656037)
    acc = np.uint64(0)
    used = 0
    for x in s:
        acc = (acc << np.uint64(bits)) | np.uint64(x)
        used += bits
        if used + bits > 64:
            key = (key ^ acc) * np.uint64(1099511628211)
            acc = np.uint64(0)
            used = 0
    key = (key ^ acc) * np.uint64(1099511628211)
    return key


@njit(**_opts)
def left_patterns(colmult, add_tab, anchors, size, bits, keys, synd, maxpos):
    """Fill syndromes of patterns {a} + (size-1) later positions, anchor coef 1.

    Output arrays must be sized by the caller; returns the number written.
    """
    n, Q, r = colmult.shape
    out = 0
    partial = np.zeros((size, r), dtype=np.uint8)
    pos = np.zeros(size, dtype=np.int64)
    cf = np.ones(size, dtype=np.int64)
    for ai in range(anchors.shape[0]):
        a = anchors[ai]
        for j in range(r):
            partial[0, j] = colmult[a, 1, j]
        if size == 1:
            keys[out] = _pack(partial[0], bits)
            synd[out] = partial[0]
            maxpos[out] = a
            out += 1
            continue
        level = 1
        pos[0] = a
        pos[1] = a
        cf[1] = Q - 1
        while level >= 1:
            if cf[level] < Q - 1:
                cf[level] += 1
            else:
                pos[level] += 1
                cf[level] = 1
                if pos[level] > n - (size - level):
                    level -= 1
                    continue
            prev = partial[level - 1]
            col = colmult[pos[level], cf[level]]
            cur = partial[level]
            for j in range(r):
                cur[j] = add_tab[prev[j], col[j]]
            if level == size - 1:
                keys[out] = _pack(cur, bits)
                synd[out] = cur
                maxpos[out] = pos[level]
                out += 1
            else:
                level += 1
                pos[level] = pos[level - 1]
                cf[level] = Q - 1
    return out


@njit(**_opts)
def right_search(colmult, add_tab, neg_tab, size, lo, hi, bits, keys, synd, maxpos, hit_pos, hit_cf):
    """Look for a right pattern whose negated syndrome matches a left one.

    Right patterns have ``size`` positions j1 < ... with j1 in [lo, hi) and any
    nonzero coefficients; a match needs the left pattern to end before j1.
    ``keys`` must be sorted with ``synd`` / ``maxpos`` permuted alongside.
    Returns (matched left index or -1, patterns examined).
    """
    n, Q, r = colmult.shape
    m = keys.shape[0]
    count = 0
    partial = np.zeros((size, r), dtype=np.uint8)
    target = np.zeros(r, dtype=np.uint8)
    pos = np.zeros(size, dtype=np.int64)
    cf = np.ones(size, dtype=np.int64)
    for j1 in range(lo, min(hi, n - size + 1)):
        pos[0] = j1
        cf[0] = 0
        level = 0
        while level >= 0:
            if cf[level] < Q - 1:
                cf[level] += 1
            else:
                if level == 0:
                    break
                pos[level] += 1
                cf[level] = 1
                if pos[level] > n - (size - level):
                    level -= 1
                    continue
            col = colmult[pos[level], cf[level]]
            cur = partial[level]
            if level == 0:
                for j in range(r):
                    cur[j] = col[j]
            else:
                prev = partial[level - 1]
                for j in range(r):
                    cur[j] = add_tab[prev[j], col[j]]
            if level == size - 1:
                count += 1
                for j in range(r):
                    target[j] = neg_tab[cur[j]]
                key = _pack(target, bits)
                idx = np.searchsorted(keys, key)
                while idx < m and keys[idx] == key:
                    if maxpos[idx] < j1:
                        same = True
                        for j in range(r):
                            if synd[idx, j] != target[j]:
                                same = False
                                break
                        if same:
                            for l in range(size):
                                hit_pos[l] = pos[l]
                                hit_cf[l] = cf[l]
                            return idx, count
                    idx += 1
            else:
                level += 1
                pos[level] = pos[level - 1]
                cf[level] = Q - 1
    return -1, count
