"""Projective covers, minimal projective presentations and the AR translate."""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

import numpy as np

from . import linalg
from .modules import (
    Module,
    ModuleMap,
    Submodule,
    injective_sum,
    map_spaces,
    projective_sum,
    quotient_by,
)


class ProjectiveCover(NamedTuple):
    top: Module
    radical: Submodule
    cover: ModuleMap
    summands: tuple[int, ...]  # vertex of each indecomposable projective summand, in order


class PresentationData(NamedTuple):
    p1_mults: tuple[int, ...]
    p0_mults: tuple[int, ...]
    map: ModuleMap
    cover: ModuleMap
    delta: tuple[int, ...]
    p1_summands: tuple[int, ...]
    p0_summands: tuple[int, ...]


def radical(m: Module) -> Submodule:
    """Sum of the images of all arrows; equals rad M since the ideal is admissible."""
    p = m.p
    spaces = [linalg.zeros(d, 0) for d in m.dims]
    for a in m.algebra.quiver.arrows:
        spaces[a.target] = np.hstack([spaces[a.target], m.mats[a.name]])
    return tuple(linalg.span(s, p) for s in spaces)


def projective_cover(m: Module) -> ProjectiveCover:
    alg = m.algebra
    p = m.p
    rad = radical(m)
    top, _ = quotient_by(m, rad)
    gens = [linalg.complement(rad[v], p) for v in range(alg.n)]
    summands = tuple(v for v in range(alg.n) for _ in range(gens[v].shape[1]))
    source = projective_sum(alg, summands)
    gen_vectors = [gens[v][:, k] for v in range(alg.n) for k in range(gens[v].shape[1])]
    mats = []
    for j in range(alg.n):
        cols = []
        for i, g in zip(summands, gen_vectors):
            for q in alg.paths_between(i, j):
                cols.append(linalg.matmul(m.path_matrix(alg.paths[q]), g.reshape(-1, 1), p))
        mats.append(np.hstack(cols) if cols else linalg.zeros(m.dims[j], 0))
    return ProjectiveCover(top, rad, ModuleMap(source, m, tuple(mats)), summands)


def _mults(summands, n) -> tuple[int, ...]:
    return tuple(summands.count(v) for v in range(n))


@lru_cache(maxsize=8192)
def minimal_presentation(m: Module) -> PresentationData:
    """Minimal projective presentation P1 -> P0 -> M -> 0 and the delta-vector a - b."""
    n = m.algebra.n
    c0 = projective_cover(m)
    spaces = map_spaces(c0.cover)
    c1 = projective_cover(spaces.kernel)
    f = spaces.kernel_inclusion.compose(c1.cover)
    a = _mults(c0.summands, n)
    b = _mults(c1.summands, n)
    delta = tuple(x - y for x, y in zip(a, b))
    return PresentationData(b, a, f, c0.cover, delta, c1.summands, c0.summands)


def delta_vector(m: Module) -> tuple[int, ...]:
    return minimal_presentation(m).delta


def _generator_offsets(alg, summands, vertex):
    """Position of each summand's block inside the vertex-``vertex`` space of ⊕P_i."""
    out, pos = [], 0
    for i in summands:
        out.append(pos)
        pos += len(alg.paths_between(i, vertex))
    return out


def _presentation_coefficients(alg, pres: PresentationData):
    """x[t][s] in e_{j_t} A e_{i_s}: the P1 summand s maps by left multiplication by x[t][s]."""
    f = pres.map
    x = [[None] * len(pres.p1_summands) for _ in pres.p0_summands]
    for s, i in enumerate(pres.p1_summands):
        src_pos = _generator_offsets(alg, pres.p1_summands, i)[s]
        column = f.mats[i][:, src_pos]
        tgt_offsets = _generator_offsets(alg, pres.p0_summands, i)
        for t, j in enumerate(pres.p0_summands):
            vec = np.zeros(alg.dim, dtype=np.int64)
            idx = alg.paths_between(j, i)
            vec[idx] = column[tgt_offsets[t] : tgt_offsets[t] + len(idx)]
            x[t][s] = vec
    return x


def nakayama_map(pres: PresentationData) -> ModuleMap:
    """ν applied to the presentation map, as ⊕I_{i_s} -> ⊕I_{j_t}.

    A map P_i -> P_j given by left multiplication with x becomes
    D(A e_i) -> D(A e_j), φ ↦ φ(- · x).
    """
    alg = pres.map.source.algebra
    p = alg.p
    t_struct = alg.structure
    source = injective_sum(alg, pres.p1_summands)
    target = injective_sum(alg, pres.p0_summands)
    x = _presentation_coefficients(alg, pres)
    mats = []
    for k in range(alg.n):
        rows = []
        for t, j in enumerate(pres.p0_summands):
            zs = alg.paths_between(k, j)
            blocks = []
            for s, i in enumerate(pres.p1_summands):
                ws = alg.paths_between(k, i)
                # entry (z, w) = coefficient of w in z·x
                prod = np.einsum("zbk,b->zk", t_struct[zs], x[t][s]) % p if zs else np.zeros((0, alg.dim), dtype=np.int64)
                blocks.append(prod[:, ws])
            rows.append(np.hstack(blocks) if blocks else linalg.zeros(len(zs), 0))
        mats.append(np.vstack(rows) if rows else linalg.zeros(0, source.dims[k]))
    return ModuleMap(source, target, tuple(mats))


@lru_cache(maxsize=8192)
def tau(m: Module) -> Module:
    """Auslander-Reiten translate: the kernel of ν(P1 -> P0)."""
    pres = minimal_presentation(m)
    if not pres.p1_summands:
        return Module(m.algebra, [0] * m.algebra.n, check=False)
    return map_spaces(nakayama_map(pres)).kernel


def syzygy(m: Module) -> tuple[Module, ModuleMap, ModuleMap]:
    """(ΩM, inclusion ΩM -> P0, cover P0 -> M)."""
    c0 = projective_cover(m)
    spaces = map_spaces(c0.cover)
    return spaces.kernel, spaces.kernel_inclusion, c0.cover


def is_projective(m: Module) -> bool:
    return not minimal_presentation(m).p1_summands

