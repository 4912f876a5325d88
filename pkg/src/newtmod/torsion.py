"""Torsion-theoretic predicates: Fac, generated torsion classes, semistable
classes, tau-rigidity of pairs, Ext^1 and the brick of a tau-rigid module."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Sequence

import numpy as np

from . import linalg
from .errors import EndTooLarge, PostconditionFailed
from .homological import delta_vector, is_projective, projective_cover, syzygy, tau
from .modules import (
    EXHAUSTIVE_LIMIT,
    Module,
    Submodule,
    _all_coefficient_vectors,
    _combination,
    _hom_nullspace,
    _is_nilpotent,
    decompose,
    end_and_brick,
    enumerate_submodules,
    hom_basis,
    hom_dim,
    image_submodule,
    is_indecomposable,
    quotient_by,
    sub_dims,
    sum_submodules,
    trace,
    zero_module,
)


def fac_membership(x: Module, m: Module) -> tuple[Submodule, bool]:
    """X ∈ Fac M iff the trace of M in X is all of X."""
    t = trace(m, x)
    return t, sub_dims(t) == x.dims


def in_fac(x: Module, m: Module) -> bool:
    return fac_membership(x, m)[1]


def tors_gen_membership(x: Module, n: Module) -> bool:
    """Membership in the smallest torsion class containing N.

    That class is the iterated extensions of factor modules of N, so peel
    off the trace of N and recurse on the quotient until nothing is left.
    """
    while not x.is_zero():
        t = trace(n, x)
        if not any(sub_dims(t)):
            return False
        x, _ = quotient_by(x, t)
    return True


def pairing(delta: Sequence, dims: Sequence[int]):
    return sum(Fraction(d) * k for d, k in zip(delta, dims))


def _integral(delta: Sequence) -> tuple[int, ...]:
    """A positive integer multiple of delta; signs of pairings are unchanged."""
    fr = [Fraction(d) for d in delta]
    scale = math.lcm(*(f.denominator for f in fr)) if fr else 1
    return tuple(int(f * scale) for f in fr)


@lru_cache(maxsize=16384)
def submodule_dimension_vectors(x: Module) -> frozenset:
    return frozenset(sub_dims(s) for s in enumerate_submodules(x))


def semistable_membership(delta: Sequence, x: Module) -> bool:
    """Whether every quotient X/S pairs non-negatively with delta.

    Raises:
        TooLarge: X is beyond the submodule enumeration guard.
    """
    if len(delta) != x.algebra.n:
        raise ValueError("delta has the wrong length")
    d = _integral(delta)
    top = sum(a * b for a, b in zip(d, x.dims))
    return all(top >= sum(a * b for a, b in zip(d, s)) for s in submodule_dimension_vectors(x))


class RigidityFlags(NamedTuple):
    tau_rigid: bool
    pair: bool
    tilting: bool


def projective_vertices(p: Module) -> tuple[int, ...]:
    """Vertices k with P ≅ ⊕ P_k; raises ValueError if P is not projective."""
    if p.is_zero():
        return ()
    if not is_projective(p):
        raise ValueError("P is not a projective module")
    return tuple(sorted(projective_cover(p).summands))


def tau_rigidity(m: Module, p: Module | None = None) -> RigidityFlags:
    """Flags for Hom(M, τM) = 0, Hom(P, M) = 0 and |M| + |P| = n.

    Raises:
        ValueError: P is not projective.
        EndTooLarge: decomposition of M could not be certified.
    """
    if p is None:
        p = zero_module(m.algebra)
    verts = projective_vertices(p)
    rigid = hom_dim(m, tau(m)) == 0
    pair = rigid and hom_dim(p, m) == 0
    tilting = pair and len(decompose(m)) + len(set(verts)) == m.algebra.n
    return RigidityFlags(rigid, pair, tilting)


@dataclass(frozen=True, eq=False)
class TauRigidPair:
    """A basic tau-rigid pair (M, P), with M given by its indecomposable summands.

    Attributes:
        m_summands: pairwise non-isomorphic indecomposable summands of M.
        p_vertices: P = ⊕ P_k over these vertices (each at most once).
    """

    m: Module
    p: Module
    m_summands: tuple
    p_vertices: tuple
    tau_rigid: bool
    pair: bool
    tilting: bool

    @property
    def rank(self) -> int:
        return len(self.m_summands) + len(self.p_vertices)


def make_pair(m: Module, p: Module | None = None, m_summands=None) -> TauRigidPair:
    """Build a TauRigidPair, checking the pair conditions.

    Raises:
        ValueError: (M, P) is not a tau-rigid pair.
    """
    alg = m.algebra
    if p is None:
        p = zero_module(alg)
    verts = projective_vertices(p)
    if len(set(verts)) != len(verts):
        raise ValueError("P is not basic")
    if m_summands is None:
        parts = decompose(m)
        if any(k > 1 for _, k in parts):
            raise ValueError("M is not basic")
        m_summands = tuple(x for x, _ in parts)
    rigid = hom_dim(m, tau(m)) == 0
    pair = rigid and hom_dim(p, m) == 0
    if not pair:
        raise ValueError("(M, P) is not a tau-rigid pair")
    tilting = len(m_summands) + len(verts) == alg.n
    return TauRigidPair(m, p, tuple(m_summands), verts, rigid, pair, tilting)


def delta_of_pair(pair: TauRigidPair) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(delta, g) with delta = δ_M − δ_P and g = −delta."""
    dm = delta_vector(pair.m)
    dp = delta_vector(pair.p)
    delta = tuple(a - b for a, b in zip(dm, dp))
    return delta, tuple(-d for d in delta)


def ext1_dim(x: Module, y: Module) -> int:
    """dim Ext^1(X, Y) = dim Hom(ΩX, Y) − rank(Hom(P0, Y) → Hom(ΩX, Y))."""
    omega, incl, cover = syzygy(x)
    h = hom_dim(omega, y)
    if h == 0:
        return 0
    restricted = [g.compose(incl).flat() for g in hom_basis(cover.source, y)]
    if not restricted:
        return h
    return h - linalg.rank(np.array(restricted), x.p)


def _radical_image(n: Module) -> Submodule:
    """Sum of the images of all non-invertible endomorphisms of an indecomposable N."""
    basis = hom_basis(n, n)
    h = len(basis)
    out = tuple(linalg.zeros(d, 0) for d in n.dims)
    if h <= 1:
        return out
    p = n.p
    flat = _hom_nullspace(n, n)
    # End(N) is local, so its radical is the set of nilpotent elements.
    nilpotent = [f for f in basis if _is_nilpotent(f)]
    span = np.array([f.flat() for f in nilpotent]).T if nilpotent else linalg.zeros(flat.shape[0], 0)
    if linalg.rank(span, p) < h - 1:
        if p**h > EXHAUSTIVE_LIMIT:
            raise EndTooLarge(f"End has {p}^{h} elements; radical not determined")
        for c in _all_coefficient_vectors(h, p):
            f = _combination(n, n, flat, c)
            if _is_nilpotent(f):
                nilpotent.append(f)
    for f in nilpotent:
        out = sum_submodules(n, out, image_submodule(f))
    return out


def brick_of_tau_rigid(n: Module, pool: Sequence[Module] = ()) -> Module:
    """The brick S with Fac N = <S>_tors, realised as N / rad(End N)·N.

    The result is checked to be a brick, and Fac N and <S>_tors are
    compared on every module of ``pool``.

    Raises:
        ValueError: N is not indecomposable and tau-rigid.
        PostconditionFailed: the brick or torsion-class check fails.
    """
    if not is_indecomposable(n):
        raise ValueError("N must be indecomposable")
    if hom_dim(n, tau(n)) != 0:
        raise ValueError("N must be tau-rigid")
    s, _ = quotient_by(n, _radical_image(n))
    if not end_and_brick(s)[1]:
        raise PostconditionFailed("N / rad End(N) N is not a brick")
    for x in pool:
        if in_fac(x, n) != tors_gen_membership(x, s):
            raise PostconditionFailed(f"Fac N and <S>_tors disagree on {x!r}")
    return s


class LeftFinite(NamedTuple):
    status: str  # "yes" or "unknown"
    witness: TauRigidPair | None


def left_finite_under_bound(n: Module, pairs: Sequence[TauRigidPair], pool: Sequence[Module] = ()) -> LeftFinite:
    """Look for a tilting pair (M, P) with <N>_tors = Fac M.

    It suffices that N ∈ Fac M and every summand of M lies in <N>_tors.
    Never answers "no": failing to find a witness only means "unknown".
    """
    for pr in pairs:
        if not pr.tilting:
            continue
        if in_fac(n, pr.m) and all(tors_gen_membership(u, n) for u in pr.m_summands):
            return LeftFinite("yes", pr)
    return LeftFinite("unknown", None)
