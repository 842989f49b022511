"""Dense matrices over a small field, stored as uint8 element-index arrays."""
from __future__ import annotations

import numpy as np

from .fields import FieldSpec

__all__ = [
    "rref",
    "rank",
    "row_basis",
    "null_space",
    "in_rowspace",
    "hermitian_gram",
    "mat_conj",
    "hermitian_dual",
    "combine",
    "weights",
]


def _as_u8(M) -> np.ndarray:
    return np.ascontiguousarray(np.asarray(M, dtype=np.uint8))


def rref(M, F: FieldSpec, col_order=None, keep_all: bool = False) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns.

    ``col_order`` lets the caller choose the order in which columns are tried
    as pivots (used for information-set selection).  Rows without a pivot are
    dropped unless ``keep_all`` is set, in which case they follow the pivot
    rows (they are zero on the pivot columns, not necessarily elsewhere).
    """
    A = _as_u8(M).copy()
    if A.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    rows, cols = A.shape
    add, mul, inv = F.add_tab, F.mul_tab, F.inv_tab
    neg = F.neg_tab
    pivots: list[int] = []
    r = 0
    order = range(cols) if col_order is None else col_order
    for c in order:
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = mul[inv[A[r, c]], A[r]]
        f = A[:, c].copy()
        f[r] = 0
        hit = np.flatnonzero(f)
        if hit.size:
            A[hit] = add[A[hit], mul[neg[f[hit]][:, None], A[r][None, :]]]
        pivots.append(int(c))
        r += 1
    return (A if keep_all else A[:r]), pivots


def rank(M, F: FieldSpec) -> int:
    A = _as_u8(M)
    if A.size == 0:
        return 0
    return len(rref(A, F)[1])


def row_basis(M, F: FieldSpec) -> np.ndarray:
    return rref(M, F)[0]


def null_space(M, F: FieldSpec, ncols: int | None = None) -> np.ndarray:
    """Basis of {v : M v^T = 0} (Euclidean), one vector per row."""
    A = _as_u8(M)
    if A.size == 0:
        n = A.shape[1] if A.ndim == 2 else ncols
        return np.eye(n, dtype=np.uint8)
    R, piv = rref(A, F)
    n = A.shape[1]
    free = [c for c in range(n) if c not in set(piv)]
    N = np.zeros((len(free), n), dtype=np.uint8)
    neg = F.neg_tab
    for k, c in enumerate(free):
        N[k, c] = 1
        for i, pc in enumerate(piv):
            N[k, pc] = neg[R[i, c]]
    return N


def mat_conj(M, F: FieldSpec) -> np.ndarray:
    return F.conj_tab[_as_u8(M)]


def hermitian_gram(A, B, F: FieldSpec) -> np.ndarray:
    """Matrix of Hermitian products <a_i, b_j> = sum a_i[k] * b_j[k]^q."""
    A = _as_u8(A)
    Bc = mat_conj(B, F)
    out = np.zeros((A.shape[0], Bc.shape[0]), dtype=np.uint8)
    add, mul = F.add_tab, F.mul_tab
    for k in range(A.shape[1]):
        out = add[out, mul[A[:, k][:, None], Bc[:, k][None, :]]]
    return out


def hermitian_dual(G, F: FieldSpec) -> np.ndarray:
    """Basis of the Hermitian dual of the row space of G."""
    return mat_conj(null_space(G, F), F)


def in_rowspace(M, V, F: FieldSpec) -> bool:
    """True iff every row of V lies in the row space of M."""
    V = _as_u8(V)
    if V.size == 0:
        return True
    M = _as_u8(M)
    if M.size == 0:
        return not V.any()
    return rank(np.vstack([M, V]), F) == rank(M, F)


def combine(rows, coefs, F: FieldSpec) -> np.ndarray:
    """Linear combination sum coefs[i] * rows[i]."""
    rows = _as_u8(rows)
    out = np.zeros(rows.shape[1], dtype=np.uint8)
    for c, r in zip(coefs, rows):
        if c:
            out = F.add_tab[out, F.mul_tab[c, r]]
    return out


def weights(M) -> np.ndarray:
    return np.count_nonzero(_as_u8(M), axis=-1)
