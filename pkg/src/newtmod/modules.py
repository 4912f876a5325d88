"""Modules over kQ/I as quiver representations over F_p.

A module assigns ``dims[v]`` to each vertex and a ``dims[t] x dims[s]``
matrix to each arrow ``s -> t``; matrices act on column vectors.  Vertices
are 0-based indices into ``algebra.quiver.vertices``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from typing import NamedTuple, Sequence

import numpy as np

from . import linalg
from .algebra import AlgebraBasis, Path
from .errors import AlgebraMismatch, DimensionMismatch, EndTooLarge, NotArrowStable, TooLarge

EXHAUSTIVE_LIMIT = 4096
RANDOM_TRIES = 64
SUBMODULE_MAX_DIM = 12
SUBMODULE_MAX_VECTORS = 2**20

Submodule = tuple  # per-vertex canonical column bases (d_v x k_v arrays)


class Module:
    """A finite-dimensional representation satisfying the algebra's relations.

    Instances are immutable; equality is exact equality of the matrices,
    not isomorphism (use :func:`is_isomorphic` for that).
    """

    def __init__(self, algebra: AlgebraBasis, dims: Sequence[int], mats=None, check: bool = True):
        p = algebra.p
        dims = tuple(int(d) for d in dims)
        if len(dims) != algebra.n or any(d < 0 for d in dims):
            raise ValueError(f"dimension vector {dims} invalid for {algebra.n} vertices")
        mats = dict(mats or {})
        unknown = set(mats) - set(algebra.quiver.arrow_index)
        if unknown:
            raise ValueError(f"unknown arrows {sorted(unknown)}")
        fixed = {}
        for a in algebra.quiver.arrows:
            shape = (dims[a.target], dims[a.source])
            if a.name in mats:
                m = np.array(mats[a.name], dtype=np.int64).reshape(shape) % p
            else:
                m = linalg.zeros(*shape)
            m.setflags(write=False)
            fixed[a.name] = m
        self.algebra = algebra
        self.dims = dims
        self.mats = fixed
        if check:
            self._check_relations()

    def _check_relations(self):
        p = self.algebra.p
        for k, rel in enumerate(self.algebra.relations.relations):
            total = linalg.zeros(self.dims[rel.target], self.dims[rel.source])
            for c, path in rel.terms:
                total = (total + c * self.path_matrix(path)) % p
            if total.any():
                raise ValueError(f"relation {k} is not satisfied")

    @property
    def p(self) -> int:
        return self.algebra.p

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def path_matrix(self, path: Path) -> np.ndarray:
        out = linalg.identity(self.dims[path.source])
        for name in path.arrows:
            out = linalg.matmul(self.mats[name], out, self.p)
        return out

    @cached_property
    def key(self) -> tuple:
        """Canonical hashable encoding: dims plus matrices in arrow order."""
        return (self.dims,) + tuple(self.mats[a.name].tobytes() for a in self.algebra.quiver.arrows)

    def __eq__(self, other):
        return isinstance(other, Module) and other.algebra is self.algebra and other.key == self.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        mats = {k: v.tolist() for k, v in self.mats.items()}
        return f"Module(dims={list(self.dims)}, arrows={mats})"


@dataclass(frozen=True, eq=False)
class ModuleMap:
    """Homomorphism given by one ``target.dims[v] x source.dims[v]`` matrix per vertex."""

    source: Module
    target: Module
    mats: tuple

    def __post_init__(self):
        if self.source.algebra is not self.target.algebra:
            raise AlgebraMismatch("maps must stay over one algebra")
        p = self.source.p
        if len(self.mats) != self.source.algebra.n:
            raise DimensionMismatch(f"expected {self.source.algebra.n} vertex matrices, got {len(self.mats)}")
        fixed = []
        for v, m in enumerate(self.mats):
            shape = (self.target.dims[v], self.source.dims[v])
            m = np.array(m, dtype=np.int64)
            if m.shape != shape and not (m.size == 0 and 0 in shape):
                raise DimensionMismatch(f"vertex {v}: matrix of shape {m.shape}, expected {shape}")
            m = m.reshape(shape) % p
            m.setflags(write=False)
            fixed.append(m)
        object.__setattr__(self, "mats", tuple(fixed))

    def is_valid(self) -> bool:
        p = self.source.p
        for a in self.source.algebra.quiver.arrows:
            lhs = linalg.matmul(self.mats[a.target], self.source.mats[a.name], p)
            rhs = linalg.matmul(self.target.mats[a.name], self.mats[a.source], p)
            if not np.array_equal(lhs, rhs):
                return False
        return True

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """``self ∘ other``."""
        p = self.source.p
        return ModuleMap(other.source, self.target, tuple(linalg.matmul(a, b, p) for a, b in zip(self.mats, other.mats)))

    def is_zero(self) -> bool:
        return not any(m.any() for m in self.mats)

    def is_isomorphism(self) -> bool:
        return all(linalg.is_invertible(m, self.source.p) for m in self.mats)

    def flat(self) -> np.ndarray:
        return np.concatenate([m.ravel() for m in self.mats]) if self.mats else np.zeros(0, dtype=np.int64)


def identity_map(m: Module) -> ModuleMap:
    return ModuleMap(m, m, tuple(linalg.identity(d) for d in m.dims))


def zero_map(m: Module, n: Module) -> ModuleMap:
    return ModuleMap(m, n, tuple(linalg.zeros(b, a) for a, b in zip(m.dims, n.dims)))


def _same_algebra(*mods: Module) -> None:
    if any(m.algebra is not mods[0].algebra for m in mods):
        raise AlgebraMismatch("modules live over different algebras")


# -- standard modules ---------------------------------------------------------


def zero_module(algebra: AlgebraBasis) -> Module:
    return Module(algebra, [0] * algebra.n, check=False)


def simple(algebra: AlgebraBasis, i: int) -> Module:
    return standard_module(algebra, "simple", i)


def projective(algebra: AlgebraBasis, i: int) -> Module:
    return standard_module(algebra, "projective", i)


def injective(algebra: AlgebraBasis, i: int) -> Module:
    return standard_module(algebra, "injective", i)


@lru_cache(maxsize=None)
def standard_module(algebra: AlgebraBasis, kind: str, i: int) -> Module:
    """S_i, P_i = e_i A or I_i = D(A e_i) for a 0-based vertex index ``i``."""
    n = algebra.n
    if not 0 <= i < n:
        raise IndexError(f"vertex index {i} out of range for {n} vertices")
    t = algebra.structure
    if kind == "simple":
        dims = [0] * n
        dims[i] = 1
        return Module(algebra, dims, check=False)
    if kind == "projective":
        dims = [len(algebra.paths_between(i, j)) for j in range(n)]
        mats = {}
        for a in algebra.quiver.arrows:
            ai = algebra.arrow_basis_index(a.name)
            cols = algebra.paths_between(i, a.source)
            rows = algebra.paths_between(i, a.target)
            mats[a.name] = t[np.ix_(cols, [ai], rows)][:, 0, :].T
        return Module(algebra, dims, mats)
    if kind == "injective":
        dims = [len(algebra.paths_between(j, i)) for j in range(n)]
        mats = {}
        for a in algebra.quiver.arrows:
            ai = algebra.arrow_basis_index(a.name)
            cols = algebra.paths_between(a.source, i)
            rows = algebra.paths_between(a.target, i)
            mats[a.name] = t[np.ix_([ai], rows, cols)][0]
        return Module(algebra, dims, mats)
    raise ValueError(f"unknown module kind {kind!r}")


def projective_sum(algebra: AlgebraBasis, vertices: Sequence[int]) -> Module:
    return direct_sum([projective(algebra, i) for i in vertices], algebra)


def injective_sum(algebra: AlgebraBasis, vertices: Sequence[int]) -> Module:
    return direct_sum([injective(algebra, i) for i in vertices], algebra)


def direct_sum(parts: Sequence[Module], algebra: AlgebraBasis | None = None) -> Module:
    if not parts:
        if algebra is None:
            raise ValueError("direct_sum of no modules needs the algebra")
        return zero_module(algebra)
    _same_algebra(*parts)
    alg = parts[0].algebra
    if algebra is not None and algebra is not alg:
        raise AlgebraMismatch("modules live over a different algebra")
    if len(parts) == 1:
        return parts[0]
    dims = [sum(m.dims[v] for m in parts) for v in range(alg.n)]
    mats = {a.name: linalg.block_diag([m.mats[a.name] for m in parts]) for a in alg.quiver.arrows}
    return Module(alg, dims, mats, check=False)


def direct_sum_map(maps: Sequence[ModuleMap]) -> ModuleMap:
    src = direct_sum([f.source for f in maps])
    tgt = direct_sum([f.target for f in maps])
    n = src.algebra.n
    return ModuleMap(src, tgt, tuple(linalg.block_diag([f.mats[v] for f in maps]) for v in range(n)))


# -- Hom spaces -----------------------------------------------------------------


@lru_cache(maxsize=65536)
def _hom_nullspace(m: Module, n: Module) -> np.ndarray:
    """Columns are the flattened per-vertex matrices of a basis of Hom(m, n)."""
    p = m.p
    alg = m.algebra
    offsets = np.cumsum([0] + [m.dims[v] * n.dims[v] for v in range(alg.n)])
    unknowns = int(offsets[-1])
    blocks = []
    for a in alg.quiver.arrows:
        s, t = a.source, a.target
        eq = linalg.zeros(n.dims[t] * m.dims[s], unknowns)
        if eq.shape[0] == 0:
            continue
        eq[:, offsets[t] : offsets[t + 1]] += np.kron(linalg.identity(n.dims[t]), m.mats[a.name].T)
        eq[:, offsets[s] : offsets[s + 1]] -= np.kron(n.mats[a.name], linalg.identity(m.dims[s]))
        blocks.append(eq % p)
    if unknowns == 0:
        return linalg.zeros(0, 0)
    system = np.vstack(blocks) if blocks else linalg.zeros(0, unknowns)
    basis = linalg.nullspace(system, p)
    basis.setflags(write=False)
    return basis


def _unflatten(m: Module, n: Module, vec: np.ndarray) -> ModuleMap:
    mats = []
    pos = 0
    for v in range(m.algebra.n):
        size = m.dims[v] * n.dims[v]
        mats.append(vec[pos : pos + size].reshape(n.dims[v], m.dims[v]))
        pos += size
    return ModuleMap(m, n, tuple(mats))


def hom_basis(m: Module, n: Module) -> list[ModuleMap]:
    """An F_p-basis of Hom(m, n), deterministic for fixed inputs."""
    _same_algebra(m, n)
    basis = _hom_nullspace(m, n)
    return [_unflatten(m, n, basis[:, k]) for k in range(basis.shape[1])]


def hom_dim(m: Module, n: Module) -> int:
    _same_algebra(m, n)
    return _hom_nullspace(m, n).shape[1]


def _coefficient_vectors(h: int, p: int, seed: int = 0):
    """Deterministic pseudo-random nonzero coefficient vectors."""
    rng = random.Random(seed)
    for _ in range(RANDOM_TRIES):
        c = [rng.randrange(p) for _ in range(h)]
        if any(c):
            yield np.array(c, dtype=np.int64)


def _all_coefficient_vectors(h: int, p: int):
    for c in product(range(p), repeat=h):
        if any(c):
            yield np.array(c, dtype=np.int64)


def _combination(m: Module, n: Module, basis: np.ndarray, c: np.ndarray) -> ModuleMap:
    return _unflatten(m, n, linalg.matmul(basis, c.reshape(-1, 1), m.p).ravel())


# -- kernels, images, subquotients ------------------------------------------


def sub_dims(s: Submodule) -> tuple[int, ...]:
    return tuple(b.shape[1] for b in s)


def sub_key(s: Submodule) -> tuple:
    return (sub_dims(s),) + tuple(tuple(b.T.ravel().tolist()) for b in s)


def canonical_submodule(m: Module, vectors) -> Submodule:
    return tuple(linalg.span(np.array(b, dtype=np.int64).reshape(m.dims[v], -1), m.p) for v, b in enumerate(vectors))


def is_arrow_stable(m: Module, s: Submodule) -> bool:
    for a in m.algebra.quiver.arrows:
        img = linalg.matmul(m.mats[a.name], s[a.source], m.p)
        if not linalg.contains(s[a.target], img, m.p):
            return False
    return True


def submodule(m: Module, s: Submodule) -> tuple[Module, ModuleMap]:
    """The module carried by an arrow-stable subspace tuple, with its inclusion."""
    p = m.p
    mats = {}
    for a in m.algebra.quiver.arrows:
        img = linalg.matmul(m.mats[a.name], s[a.source], p)
        x = linalg.solve(s[a.target], img, p)
        if x is None:
            raise NotArrowStable(f"arrow {a.name} leaves the subspace")
        mats[a.name] = x
    sub = Module(m.algebra, sub_dims(s), mats, check=False)
    return sub, ModuleMap(sub, m, tuple(s))


def quotient_by(m: Module, s: Submodule) -> tuple[Module, ModuleMap]:
    """M/S with the projection M -> M/S.

    Raises:
        NotArrowStable: S is not a submodule.
    """
    p = m.p
    if not is_arrow_stable(m, s):
        raise NotArrowStable("subspace tuple is not arrow-stable")
    comps, projs = [], []
    for v in range(m.algebra.n):
        c = linalg.complement(s[v], p)
        full = np.hstack([s[v], c])
        inv = linalg.inverse(full, p) if full.shape[0] else linalg.zeros(0, 0)
        comps.append(c)
        projs.append(inv[s[v].shape[1] :])
    mats = {}
    for a in m.algebra.quiver.arrows:
        mats[a.name] = linalg.matmul(projs[a.target], linalg.matmul(m.mats[a.name], comps[a.source], p), p)
    q = Module(m.algebra, [c.shape[1] for c in comps], mats, check=False)
    return q, ModuleMap(m, q, tuple(projs))


class MapSpaces(NamedTuple):
    kernel: Module
    kernel_inclusion: ModuleMap
    image: Module
    image_inclusion: ModuleMap
    cokernel: Module
    cokernel_projection: ModuleMap


def kernel_submodule(f: ModuleMap) -> Submodule:
    p = f.source.p
    return tuple(linalg.span(linalg.nullspace(m, p), p) if m.shape[1] else linalg.zeros(0, 0) for m in f.mats)


def image_submodule(f: ModuleMap) -> Submodule:
    return tuple(linalg.span(m, f.source.p) for m in f.mats)


def map_spaces(f: ModuleMap) -> MapSpaces:
    ker, ki = submodule(f.source, kernel_submodule(f))
    im_sub = image_submodule(f)
    im, ii = submodule(f.target, im_sub)
    cok, cp = quotient_by(f.target, im_sub)
    return MapSpaces(ker, ki, im, ii, cok, cp)


def zero_submodule(m: Module) -> Submodule:
    return tuple(linalg.zeros(d, 0) for d in m.dims)


def full_submodule(m: Module) -> Submodule:
    return tuple(linalg.identity(d) for d in m.dims)


def sum_submodules(m: Module, a: Submodule, b: Submodule) -> Submodule:
    return tuple(linalg.span_sum(x, y, m.p) for x, y in zip(a, b))


def intersect_submodules(m: Module, a: Submodule, b: Submodule) -> Submodule:
    return tuple(linalg.intersect(x, y, m.p) for x, y in zip(a, b))


def trace(m: Module, x: Module) -> Submodule:
    """Sum of the images of all maps m -> x, as a submodule of x."""
    basis = hom_basis(m, x)
    out = zero_submodule(x)
    for f in basis:
        out = sum_submodules(x, out, image_submodule(f))
    return out


# -- isomorphism, endomorphisms, decomposition -----------------------------------


def is_isomorphic(m: Module, n: Module) -> bool:
    """Exact isomorphism test by searching Hom(m, n) for an invertible map.

    Raises:
        TooLarge: the Hom space exceeds the exhaustive bound and no
            isomorphism was found among the pseudo-random candidates.
    """
    _same_algebra(m, n)
    if m.dims != n.dims:
        return False
    if m == n:
        return True
    h = hom_dim(m, n)
    if h == 0:
        return False
    if not (hom_dim(n, m) == h == hom_dim(m, m) == hom_dim(n, n)):
        return False
    basis = _hom_nullspace(m, n)
    p = m.p
    for c in _coefficient_vectors(h, p):
        if _combination(m, n, basis, c).is_isomorphism():
            return True
    if p**h > EXHAUSTIVE_LIMIT:
        raise TooLarge(f"Hom space of size {p}^{h} exceeds the isomorphism search bound")
    return any(_combination(m, n, basis, c).is_isomorphism() for c in _all_coefficient_vectors(h, p))


def end_basis(m: Module) -> list[ModuleMap]:
    return hom_basis(m, m)


def end_and_brick(m: Module) -> tuple[list[ModuleMap], bool]:
    """End(m) and whether it is a division algebra.

    Raises:
        ValueError: m is the zero module.
        EndTooLarge: End(m) has more than 4096 elements.
    """
    if m.is_zero():
        raise ValueError("the zero module is not a brick")
    basis = end_basis(m)
    h = len(basis)
    if h == 1:
        return basis, True
    p = m.p
    if p**h > EXHAUSTIVE_LIMIT:
        raise EndTooLarge(f"End has {p}^{h} elements; exhaustive brick test refused")
    flat = _hom_nullspace(m, m)
    for f in basis:
        if not f.is_isomorphism():
            return basis, False
    for c in _all_coefficient_vectors(h, p):
        if not _combination(m, m, flat, c).is_isomorphism():
            return basis, False
    return basis, True


def is_brick(m: Module) -> bool:
    return end_and_brick(m)[1]


def _is_nilpotent(f: ModuleMap) -> bool:
    return all(linalg.is_nilpotent(x, f.source.p) for x in f.mats)


def _splitting_endomorphism(m: Module) -> ModuleMap | None:
    """A non-nilpotent, non-invertible endomorphism, or None if End(m) is local.

    Raises:
        EndTooLarge: End(m) is too big to certify locality exhaustively.
    """
    basis = end_basis(m)
    h = len(basis)
    if h <= 1:
        return None
    p = m.p
    flat = _hom_nullspace(m, m)
    candidates = list(basis) + [_combination(m, m, flat, c) for c in _coefficient_vectors(h, p)]
    for f in candidates:
        if not f.is_isomorphism() and not _is_nilpotent(f):
            return f
    if p**h > EXHAUSTIVE_LIMIT:
        raise EndTooLarge(f"End has {p}^{h} elements; cannot certify indecomposability")
    for c in _all_coefficient_vectors(h, p):
        f = _combination(m, m, flat, c)
        if not f.is_isomorphism() and not _is_nilpotent(f):
            return f
    return None


def _fitting_split(m: Module, f: ModuleMap) -> tuple[Module, Module]:
    p = m.p
    power = max(m.dims)
    g = ModuleMap(m, m, tuple(linalg.matrix_power(x, power, p) for x in f.mats))
    im, _ = submodule(m, image_submodule(g))
    ker, _ = submodule(m, kernel_submodule(g))
    return im, ker


def is_indecomposable(m: Module) -> bool:
    if m.is_zero():
        return False
    return _splitting_endomorphism(m) is None


def _indecomposable_parts(m: Module) -> list[Module]:
    if m.is_zero():
        return []
    f = _splitting_endomorphism(m)
    if f is None:
        return [m]
    im, ker = _fitting_split(m, f)
    return _indecomposable_parts(im) + _indecomposable_parts(ker)


def decompose(m: Module) -> list[tuple[Module, int]]:
    """Krull-Schmidt decomposition as (indecomposable, multiplicity) pairs.

    The result is sorted by dimension vector, then by matrix encoding.
    """
    groups: list[list[Module]] = []
    for part in _indecomposable_parts(m):
        for g in groups:
            if is_isomorphic(g[0], part):
                g.append(part)
                break
        else:
            groups.append([part])
    out = [(min(g, key=lambda x: x.key), len(g)) for g in groups]
    return sorted(out, key=lambda pair: pair[0].key)


def summand_count(m: Module) -> int:
    """|M|: the number of pairwise non-isomorphic indecomposable summands."""
    return len(decompose(m))


# -- submodule enumeration ---------------------------------------------------------


def _cyclic(m: Module, vertex: int, vec: np.ndarray) -> Submodule:
    p = m.p
    spaces = [linalg.zeros(d, 0) for d in m.dims]
    spaces[vertex] = linalg.span(vec.reshape(-1, 1), p)
    changed = True
    while changed:
        changed = False
        for a in m.algebra.quiver.arrows:
            img = linalg.matmul(m.mats[a.name], spaces[a.source], p)
            if img.any() and not linalg.contains(spaces[a.target], img, p):
                spaces[a.target] = linalg.span_sum(spaces[a.target], img, p)
                changed = True
    return tuple(spaces)


def _projective_points(d: int, p: int):
    """Nonzero vectors of F_p^d normalised to leading coefficient 1."""
    for lead in range(d):
        for tail in product(range(p), repeat=d - lead - 1):
            v = np.zeros(d, dtype=np.int64)
            v[lead] = 1
            v[lead + 1 :] = tail
            yield v


def check_submodule_guard(m: Module) -> None:
    if m.total_dim > SUBMODULE_MAX_DIM or m.p**m.total_dim > SUBMODULE_MAX_VECTORS:
        raise TooLarge(
            f"submodule enumeration refused: total dimension {m.total_dim} over F_{m.p} exceeds the guard"
        )


def enumerate_submodules(m: Module) -> list[Submodule]:
    """Every submodule of ``m``, in canonical order (dims, then echelon bases).

    Every submodule is a sum of cyclic submodules generated by vectors
    living at a single vertex, so closing those under sums is complete.

    Raises:
        TooLarge: total dimension above 12 or more than 2^20 vectors.
    """
    check_submodule_guard(m)
    return list(_submodules_cached(m))


@lru_cache(maxsize=4096)
def _submodules_cached(m: Module) -> tuple:
    cyclics: dict[tuple, Submodule] = {}
    for v, d in enumerate(m.dims):
        for vec in _projective_points(d, m.p):
            c = _cyclic(m, v, vec)
            cyclics.setdefault(sub_key(c), c)
    found: dict[tuple, Submodule] = {}
    zero = zero_submodule(m)
    found[sub_key(zero)] = zero
    for c in cyclics.values():
        for s in list(found.values()):
            t = sum_submodules(m, s, c)
            found.setdefault(sub_key(t), t)
    return tuple(found[k] for k in sorted(found))
