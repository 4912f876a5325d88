"""Brute-force reference implementations used as test oracles.

They enumerate whole matrix spaces or subspace lattices, so they only
work for tiny modules, but share no code with the package.
"""

from fractions import Fraction
from itertools import combinations, product

import numpy as np

from newtmod import linalg
from newtmod.modules import Module

def all_matrices(rows, cols, p):
    for e in product(range(p), repeat=rows * cols):
        yield np.array(e, dtype=np.int64).reshape(rows, cols)


def brute_hom_count(m: Module, n: Module) -> int:
    """Number of commuting tuples M -> N, by trying every tuple."""
    p = m.p
    alg = m.algebra
    count = 0
    for fs in product(*(list(all_matrices(n.dims[v], m.dims[v], p)) for v in range(alg.n))):
        if all(
            np.array_equal((fs[a.target] @ m.mats[a.name]) % p, (n.mats[a.name] @ fs[a.source]) % p)
            for a in alg.quiver.arrows
        ):
            count += 1
    return count


def all_subspaces(d, p):
    """Every subspace of F_p^d as a frozenset of its vectors."""
    vecs = [np.array(v, dtype=np.int64) for v in product(range(p), repeat=d)]
    found = {frozenset([(0,) * d])}
    frontier = list(found)
    while frontier:
        new = []
        for s in frontier:
            for v in vecs:
                if tuple(v) in s:
                    continue
                t = frozenset(tuple((np.array(u) + c * v) % p) for u in s for c in range(p))
                if t not in found:
                    found.add(t)
                    new.append(t)
        frontier = new
    return found


def brute_submodule_count(m: Module) -> int:
    return len(brute_submodule_dims(m))


def random_base_change(m: Module, seed: int) -> Module:
    rng = np.random.default_rng(seed)
    p = m.p
    gs = []
    for d in m.dims:
        while True:
            g = rng.integers(0, p, size=(d, d))
            if linalg.is_invertible(g, p):
                gs.append(g)
                break
    mats = {
        a.name: linalg.matmul(linalg.matmul(gs[a.target], m.mats[a.name], p), linalg.inverse(gs[a.source], p), p)
        for a in m.algebra.quiver.arrows
    }
    return Module(m.algebra, m.dims, mats)


def brute_homs(m: Module, n: Module):
    """Every homomorphism M -> N as a tuple of vertex matrices."""
    p = m.p
    alg = m.algebra
    for fs in product(*(list(all_matrices(n.dims[v], m.dims[v], p)) for v in range(alg.n))):
        if all(
            np.array_equal((fs[a.target] @ m.mats[a.name]) % p, (n.mats[a.name] @ fs[a.source]) % p)
            for a in alg.quiver.arrows
        ):
            yield fs


def brute_trace_dims(m: Module, x: Module) -> tuple[int, ...]:
    """Dimension vector of the sum of images of all maps M -> X."""
    p = x.p
    out = []
    for v in range(x.algebra.n):
        cols = [f[v] for f in brute_homs(m, x)]
        stacked = np.hstack(cols) if cols else np.zeros((x.dims[v], 0), dtype=np.int64)
        out.append(linalg.rank(stacked, p))
    return tuple(out)


def brute_submodule_dims(m: Module) -> list[tuple[int, ...]]:
    """Dimension vectors (with repetition) of all submodules."""
    p = m.p
    alg = m.algebra
    spaces = [all_subspaces(d, p) for d in m.dims]
    out = []
    for choice in product(*spaces):
        if all(
            tuple((m.mats[a.name] @ np.array(v, dtype=np.int64)) % p) in choice[a.target]
            for a in alg.quiver.arrows
            for v in choice[a.source]
        ):
            out.append(tuple(_log(len(c), p) for c in choice))
    return out


def _log(size: int, p: int) -> int:
    k = 0
    while p**k < size:
        k += 1
    return k


def _solve_unique(rows, rhs):
    """Unique solution of a square-or-tall rational system, or None."""
    m = [list(map(Fraction, r)) + [Fraction(b)] for r, b in zip(rows, rhs)]
    ncols = len(rows[0])
    piv_row = 0
    for c in range(ncols):
        pr = next((r for r in range(piv_row, len(m)) if m[r][c] != 0), None)
        if pr is None:
            return None
        m[piv_row], m[pr] = m[pr], m[piv_row]
        lead = m[piv_row][c]
        m[piv_row] = [x / lead for x in m[piv_row]]
        for r in range(len(m)):
            if r != piv_row and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[piv_row])]
        piv_row += 1
    if any(row[-1] != 0 for row in m[piv_row:]):
        return None
    return [m[r][-1] for r in range(ncols)]


def caratheodory_contains(points, v) -> bool:
    """v in conv(points), by trying every subset of at most n+1 points."""
    n = len(v)
    pts = [tuple(p) for p in points]
    for k in range(1, min(len(pts), n + 1) + 1):
        for subset in combinations(pts, k):
            rows = [[p[r] for p in subset] for r in range(n)] + [[1] * k]
            lam = _solve_unique(rows, list(v) + [1])
            if lam is not None and all(x >= 0 for x in lam):
                return True
    return False


def brute_extremes(points) -> list[tuple[int, ...]]:
    pts = sorted({tuple(p) for p in points})
    return [p for p in pts if not caratheodory_contains([q for q in pts if q != p], p)]
