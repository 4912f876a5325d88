"""Dense linear algebra over prime fields F_p.

Matrices are numpy int64 arrays with entries in ``range(p)``.  Subspaces of
F_p^d are stored canonically as ``d x k`` matrices whose columns are the
rows of the reduced row echelon form of any spanning set.
"""

from __future__ import annotations

import numpy as np


def as_matrix(a, p: int, shape=None) -> np.ndarray:
    m = np.array(a, dtype=np.int64)
    if shape is not None:
        m = m.reshape(shape)
    return m % p


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if a.shape[1] == 0:
        return zeros(a.shape[0], b.shape[1])
    return (a @ b) % p


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F_p.

    Returns:
        (R, pivots): R has the same shape as ``a``; ``pivots`` lists the
        pivot column of each nonzero row of R, in order.
    """
    r = np.array(a, dtype=np.int64) % p
    rows, cols = r.shape
    pivots: list[int] = []
    row = 0
    for col in range(cols):
        if row == rows:
            break
        nz = np.nonzero(r[row:, col])[0]
        if nz.size == 0:
            continue
        k = row + int(nz[0])
        if k != row:
            r[[row, k]] = r[[k, row]]
        inv = pow(int(r[row, col]), -1, p)
        r[row] = (r[row] * inv) % p
        factors = r[:, col].copy()
        factors[row] = 0
        if factors.any():
            r = (r - np.outer(factors, r[row])) % p
        pivots.append(col)
        row += 1
    return r, pivots


def rank(a: np.ndarray, p: int) -> int:
    if a.size == 0:
        return 0
    return len(rref(a, p)[1])


def nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Basis of ``{x : a x = 0}`` as columns, in the canonical free-variable order."""
    cols = a.shape[1]
    if a.shape[0] == 0:
        return identity(cols)
    r, pivots = rref(a, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = zeros(cols, len(free))
    for j, f in enumerate(free):
        basis[f, j] = 1
        for i, pc in enumerate(pivots):
            basis[pc, j] = (-r[i, f]) % p
    return basis


def span(vectors: np.ndarray, p: int) -> np.ndarray:
    """Canonical basis (as columns) of the column span of ``vectors``."""
    d = vectors.shape[0]
    if vectors.shape[1] == 0:
        return zeros(d, 0)
    r, pivots = rref(vectors.T, p)
    return r[: len(pivots)].T.copy()


def span_sum(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return span(np.hstack([a, b]), p)


def intersect(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Canonical basis of col(a) ∩ col(b)."""
    d = a.shape[0]
    if a.shape[1] == 0 or b.shape[1] == 0:
        return zeros(d, 0)
    ns = nullspace(np.hstack([a, (-b) % p]), p)
    return span(matmul(a, ns[: a.shape[1]], p), p)


def contains(space: np.ndarray, vectors: np.ndarray, p: int) -> bool:
    """Whether every column of ``vectors`` lies in the column span of ``space``."""
    if vectors.shape[1] == 0:
        return True
    return rank(np.hstack([space, vectors]), p) == rank(space, p)


def complement(space: np.ndarray, p: int) -> np.ndarray:
    """Standard basis vectors completing a canonical ``space`` to F_p^d.

    Picks the unit vectors at the non-pivot positions, so the result is
    deterministic for a canonical input.
    """
    d = space.shape[0]
    pivots = set()
    if space.shape[1]:
        pivots = set(rref(space.T, p)[1])
    cols = [i for i in range(d) if i not in pivots]
    out = zeros(d, len(cols))
    for j, i in enumerate(cols):
        out[i, j] = 1
    return out


def solve(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray | None:
    """A solution of ``a x = b`` (free variables set to 0); None when inconsistent."""
    n = a.shape[1]
    if n == 0:
        return zeros(0, b.shape[1]) if not (b % p).any() else None
    r, pivots = rref(np.hstack([a, b]), p)
    if any(pc >= n for pc in pivots):
        return None
    x = zeros(n, b.shape[1])
    for row, pc in enumerate(pivots):
        x[pc] = r[row, n:]
    return x


def inverse(a: np.ndarray, p: int) -> np.ndarray:
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    r, pivots = rref(np.hstack([a, identity(n)]), p)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return r[:, n:].copy()


def is_invertible(a: np.ndarray, p: int) -> bool:
    return a.shape[0] == a.shape[1] and rank(a, p) == a.shape[0]


def is_nilpotent(a: np.ndarray, p: int) -> bool:
    n = a.shape[0]
    if n == 0:
        return True
    return not matrix_power(a, n, p).any()


def matrix_power(a: np.ndarray, k: int, p: int) -> np.ndarray:
    result = identity(a.shape[0])
    base = a % p
    while k:
        if k & 1:
            result = matmul(result, base, p)
        base = matmul(base, base, p)
        k >>= 1
    return result


def block_diag(blocks: list[np.ndarray]) -> np.ndarray:
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    out = zeros(rows, cols)
    r = c = 0
    for b in blocks:
        out[r : r + b.shape[0], c : c + b.shape[1]] = b
        r += b.shape[0]
        c += b.shape[1]
    return out
