"""Pure-numpy versions of the enumeration kernels in :mod:`._nb`.

Same signatures and results; vectorised over the innermost level instead of
compiled.  Selected with ``HERMQC_NUMBA=0`` or when numba is unavailable.
"""
import itertools

import numpy as np

_BLOCK = 1 << 15


def _low_words(rowmult, add_tab, j):
    k, Q, n = rowmult.shape
    words = np.zeros((1, n), dtype=np.uint8)
    for i in range(j):
        words = add_tab[words[None, :, :], rowmult[i][:, None, :]].reshape(-1, n)
    return words


def exhaustive_units(rowmult, add_tab, sub_tab, units, stop_at):
    k, Q, n = rowmult.shape
    best = n + 1
    count = 0
    cache = {}
    for L, v in np.asarray(units):
        base = rowmult[L, 1].copy()
        if L >= 1 and v > 0:
            base = add_tab[base, rowmult[L - 1, v]]
        free = L - 1 if L >= 1 else 0
        j = 0
        while j < free and Q ** (j + 1) <= _BLOCK:
            j += 1
        if j not in cache:
            cache[j] = _low_words(rowmult, add_tab, j)
        low = cache[j]
        for high in itertools.product(range(Q), repeat=free - j):
            off = base
            for i, c in enumerate(high):
                if c:
                    off = add_tab[off, rowmult[j + i, c]]
            w = np.count_nonzero(add_tab[low, off[None, :]], axis=1)
            count += w.shape[0]
            # the all-zero lower part of L >= 1 units is nonzero thanks to digit L
            m = int(w.min())
            if m < best:
                best = m
                if best <= stop_at:
                    return best, count
    return best, count


def _combos_last(partial, rowmult, add_tab, start):
    """Extend one partial word by every (row >= start, nonzero coef)."""
    k, Q, n = rowmult.shape
    ext = add_tab[partial[None, None, :], rowmult[start:, 1:, :]]
    return ext.reshape(-1, n)


def combo_min(rowmult, add_tab, w, first_lo, first_hi, stop_at, best_rows, best_coefs):
    k, Q, n = rowmult.shape
    best = n + 1
    count = 0
    for first in range(first_lo, min(first_hi, k - w + 1)):
        base = rowmult[first, 1]
        if w == 1:
            wt = int(np.count_nonzero(base))
            count += 1
            if wt < best:
                best = wt
                best_rows[0], best_coefs[0] = first, 1
                if best <= stop_at:
                    return best, count
            continue
        for mids in itertools.combinations(range(first + 1, k - 1), w - 2):
            if mids and mids[-1] >= k - 1:
                continue
            for mcf in itertools.product(range(1, Q), repeat=w - 2):
                part = base
                for r_, c_ in zip(mids, mcf):
                    part = add_tab[part, rowmult[r_, c_]]
                start = (mids[-1] if mids else first) + 1
                if start >= k:
                    continue
                words = _combos_last(part, rowmult, add_tab, start)
                wts = np.count_nonzero(words, axis=1)
                count += wts.shape[0]
                i = int(np.argmin(wts))
                if wts[i] < best:
                    best = int(wts[i])
                    last, c = divmod(i, Q - 1)
                    rows = (first,) + mids + (start + last,)
                    coefs = (1,) + mcf + (c + 1,)
                    for l in range(w):
                        best_rows[l], best_coefs[l] = rows[l], coefs[l]
                    if best <= stop_at:
                        return best, count
    return best, count


_FNV_OFF = np.uint64(14695981039346656037)
_FNV_PRIME = np.uint64(1099511628211)


def pack_rows(S, bits):
    """Row-wise hash of syndromes; identical to the compiled ``_pack``."""
    S = np.asarray(S, dtype=np.uint64)
    m, r = S.shape
    key = np.full(m, _FNV_OFF, dtype=np.uint64)
    acc = np.zeros(m, dtype=np.uint64)
    used = 0
    b = np.uint64(bits)
    with np.errstate(over="ignore"):
        for j in range(r):
            acc = (acc << b) | S[:, j]
            used += bits
            if used + bits > 64:
                key = (key ^ acc) * _FNV_PRIME
                acc[:] = 0
                used = 0
        key = (key ^ acc) * _FNV_PRIME
    return key


def _patterns(colmult, add_tab, start, size, prefix_synd, prefix_pos, prefix_cf):
    """Yield (synd block, pos tuples, coef tuples) for size more positions >= start."""
    n, Q, r = colmult.shape
    if size == 0:
        yield prefix_synd[None, :], [prefix_pos], [prefix_cf]
        return
    if size == 1:
        if start >= n:
            return
        S = add_tab[prefix_synd[None, None, :], colmult[start:, 1:, :]].reshape(-1, r)
        pos = [prefix_pos + (p,) for p in range(start, n) for _ in range(1, Q)]
        cfs = [prefix_cf + (c,) for _ in range(start, n) for c in range(1, Q)]
        yield S, pos, cfs
        return
    for p in range(start, n - size + 1):
        for c in range(1, Q):
            s = add_tab[prefix_synd, colmult[p, c]]
            yield from _patterns(colmult, add_tab, p + 1, size - 1, s, prefix_pos + (p,), prefix_cf + (c,))


def left_patterns(colmult, add_tab, anchors, size, bits, keys, synd, maxpos):
    n, Q, r = colmult.shape
    out = 0
    for a in anchors:
        a = int(a)
        for S, pos, _ in _patterns(colmult, add_tab, a + 1, size - 1, colmult[a, 1].copy(), (a,), (1,)):
            m = S.shape[0]
            synd[out:out + m] = S
            keys[out:out + m] = pack_rows(S, bits)
            maxpos[out:out + m] = [p[-1] for p in pos]
            out += m
    return out


def right_search(colmult, add_tab, neg_tab, size, lo, hi, bits, keys, synd, maxpos, hit_pos, hit_cf):
    n, Q, r = colmult.shape
    count = 0
    zero = np.zeros(r, dtype=np.uint8)
    for j1 in range(lo, min(hi, n - size + 1)):
        for c1 in range(1, Q):
            s0 = add_tab[zero, colmult[j1, c1]]
            for S, pos, cfs in _patterns(colmult, add_tab, j1 + 1, size - 1, s0, (j1,), (c1,)):
                T = neg_tab[S]
                count += T.shape[0]
                kk = pack_rows(T, bits)
                idx = np.searchsorted(keys, kk)
                if keys.shape[0] == 0:
                    continue
                ok = keys[np.minimum(idx, keys.shape[0] - 1)] == kk
                cand = np.flatnonzero(ok)
                for ci in cand:
                    i = int(idx[ci])
                    while i < keys.shape[0] and keys[i] == kk[ci]:
                        if maxpos[i] < j1 and np.array_equal(synd[i], T[ci]):
                            hit_pos[:size] = pos[ci]
                            hit_cf[:size] = cfs[ci]
                            return i, count
                        i += 1
    return -1, count
