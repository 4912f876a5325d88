"""Quivers with relations over F_p and the basis of their quotient path algebra.

Paths are written in traversal order: ``("a", "b")`` means "a, then b", so
it runs from ``source(a)`` to ``target(b)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

import numpy as np

from . import linalg
from .errors import NotFiniteDimensional, ParseError

DEFAULT_MAX_PATH_LEN = 32
MAX_PATHS = 200_000


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % k for k in range(2, int(n**0.5) + 1))


@dataclass(frozen=True)
class FieldSpec:
    p: int

    def __post_init__(self):
        if not (isinstance(self.p, int) and is_prime(self.p) and 2 <= self.p <= 97):
            raise ValueError(f"characteristic must be a prime in [2, 97], got {self.p!r}")


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        if not self.vertices:
            raise ValueError("a quiver needs at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex label")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("duplicate arrow name")
        n = len(self.vertices)
        for a in self.arrows:
            if not (0 <= a.source < n and 0 <= a.target < n):
                raise ValueError(f"arrow {a.name} has an undeclared endpoint")

    @property
    def n(self) -> int:
        return len(self.vertices)

    @cached_property
    def arrow_index(self) -> dict[str, int]:
        return {a.name: k for k, a in enumerate(self.arrows)}

    def arrow(self, name: str) -> Arrow:
        return self.arrows[self.arrow_index[name]]

    def vertex_index(self, label: str) -> int:
        return self.vertices.index(label)


@dataclass(frozen=True, order=True)
class Path:
    """A path in a quiver; trivial paths carry their vertex and no arrows."""

    source: int
    target: int
    arrows: tuple[str, ...] = ()

    @property
    def length(self) -> int:
        return len(self.arrows)

    def label(self, quiver: Quiver) -> str:
        if not self.arrows:
            return f"e{quiver.vertices[self.source]}"
        return "".join(self.arrows) if all(len(a) == 1 for a in self.arrows) else "*".join(self.arrows)


def make_path(quiver: Quiver, arrows) -> Path:
    arrows = tuple(arrows)
    if not arrows:
        raise ValueError("empty arrow list")
    first = quiver.arrow(arrows[0])
    prev = first
    for name in arrows[1:]:
        a = quiver.arrow(name)
        if a.source != prev.target:
            raise ValueError(f"arrows {prev.name} and {a.name} are not composable")
        prev = a
    return Path(first.source, prev.target, arrows)


@dataclass(frozen=True)
class Relation:
    terms: tuple[tuple[int, Path], ...]

    @property
    def source(self) -> int:
        return self.terms[0][1].source

    @property
    def target(self) -> int:
        return self.terms[0][1].target


@dataclass(frozen=True)
class RelationSet:
    relations: tuple[Relation, ...] = ()


def parse_algebra(text: str) -> tuple[Quiver, RelationSet, FieldSpec]:
    """Parse the JSON algebra file format and validate it.

    Raises:
        ParseError: with a location (``line:col`` or a JSON path) on any
            syntactic or semantic problem.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    if not isinstance(data, dict):
        raise ParseError("top level must be an object", "$")
    for key in ("field", "vertices"):
        if key not in data:
            raise ParseError(f"missing key {key!r}", "$")

    fld = data["field"]
    if not isinstance(fld, dict) or not isinstance(fld.get("p"), int):
        raise ParseError("field must be an object with integer 'p'", "$.field")
    try:
        fspec = FieldSpec(fld["p"])
    except ValueError as exc:
        raise ParseError(str(exc), "$.field.p") from None
    p = fspec.p

    labels = data["vertices"]
    if not isinstance(labels, list) or not labels:
        raise ParseError("vertices must be a non-empty list", "$.vertices")
    seen: set[str] = set()
    for k, v in enumerate(labels):
        if not isinstance(v, str):
            raise ParseError("vertex labels must be strings", f"$.vertices[{k}]")
        if v in seen:
            raise ParseError(f"duplicate vertex {v!r}", f"$.vertices[{k}]")
        seen.add(v)

    arrows = []
    names: set[str] = set()
    raw_arrows = data.get("arrows", [])
    if not isinstance(raw_arrows, list):
        raise ParseError("arrows must be a list", "$.arrows")
    for k, a in enumerate(raw_arrows):
        loc = f"$.arrows[{k}]"
        if not isinstance(a, dict) or not all(isinstance(a.get(x), str) for x in ("name", "from", "to")):
            raise ParseError("arrow needs string fields name/from/to", loc)
        if not a["name"]:
            raise ParseError("empty arrow name", loc)
        if a["name"] in names:
            raise ParseError(f"duplicate arrow {a['name']!r}", loc)
        for end in ("from", "to"):
            if a[end] not in seen:
                raise ParseError(f"undeclared vertex {a[end]!r}", f"{loc}.{end}")
        names.add(a["name"])
        arrows.append(Arrow(a["name"], labels.index(a["from"]), labels.index(a["to"])))
    quiver = Quiver(tuple(labels), tuple(arrows))

    rels = []
    raw_rels = data.get("relations", [])
    if not isinstance(raw_rels, list):
        raise ParseError("relations must be a list", "$.relations")
    for k, rel in enumerate(raw_rels):
        loc = f"$.relations[{k}]"
        if not isinstance(rel, list) or not rel:
            raise ParseError("relation must be a non-empty list of terms", loc)
        coeffs: dict[Path, int] = {}
        for t, term in enumerate(rel):
            tloc = f"{loc}[{t}]"
            if not isinstance(term, dict) or not isinstance(term.get("coef"), int) or not isinstance(term.get("path"), list):
                raise ParseError("term needs integer 'coef' and list 'path'", tloc)
            arrs = term["path"]
            for name in arrs:
                if name not in names:
                    raise ParseError(f"unknown arrow {name!r}", f"{tloc}.path")
            if len(arrs) < 2:
                raise ParseError("relation paths must have length >= 2", f"{tloc}.path")
            try:
                path = make_path(quiver, arrs)
            except ValueError as exc:
                raise ParseError(str(exc), f"{tloc}.path") from None
            coeffs[path] = (coeffs.get(path, 0) + term["coef"]) % p
        paths = list(coeffs)
        if any((q.source, q.target) != (paths[0].source, paths[0].target) for q in paths):
            raise ParseError("paths in a relation must be parallel", loc)
        terms = tuple((c, q) for q, c in sorted(coeffs.items(), key=lambda kv: _path_key(quiver, kv[0])) if c)
        if terms:
            rels.append(Relation(terms))
    return quiver, RelationSet(tuple(rels)), fspec


def _path_key(quiver: Quiver, path: Path):
    return (path.length, tuple(quiver.arrow_index[a] for a in path.arrows), path.source)


@dataclass(eq=False)
class AlgebraBasis:
    """Finite basis of kQ/I with structure constants.

    Attributes:
        paths: basis paths; the trivial paths ``e_1..e_n`` come first.
        structure: array ``T`` with ``b_i * b_j = sum_k T[i, j, k] b_k``.
        nilpotency: smallest ``L`` with every path of length ``L`` zero.
    """

    quiver: Quiver
    relations: RelationSet
    field: FieldSpec
    paths: tuple[Path, ...]
    structure: np.ndarray
    nilpotency: int
    _normal_forms: dict = field(repr=False, default_factory=dict)

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def n(self) -> int:
        return self.quiver.n

    @property
    def dim(self) -> int:
        return len(self.paths)

    @cached_property
    def index(self) -> dict[Path, int]:
        return {q: k for k, q in enumerate(self.paths)}

    @property
    def idempotents(self) -> list[int]:
        return list(range(self.n))

    def arrow_basis_index(self, name: str) -> int:
        a = self.quiver.arrow(name)
        return self.index[Path(a.source, a.target, (name,))]

    @cached_property
    def _between(self) -> dict[tuple[int, int], list[int]]:
        out: dict[tuple[int, int], list[int]] = {(i, j): [] for i in range(self.n) for j in range(self.n)}
        for k, q in enumerate(self.paths):
            out[(q.source, q.target)].append(k)
        return out

    def paths_between(self, i: int, j: int) -> list[int]:
        """Indices of basis paths from vertex i to vertex j, in basis order."""
        return self._between[(i, j)]

    def reduce(self, path: Path) -> np.ndarray:
        """Coordinates of an arbitrary path over the basis."""
        vec = np.zeros(self.dim, dtype=np.int64)
        if path.length >= self.nilpotency:
            return vec
        if path in self.index:
            vec[self.index[path]] = 1
            return vec
        for k, c in self._normal_forms.get(path, ()):
            vec[k] = c
        return vec

    def multiply(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        return np.einsum("i,j,ijk->k", u, v, self.structure) % self.p

    def unit(self, k: int) -> np.ndarray:
        vec = np.zeros(self.dim, dtype=np.int64)
        vec[k] = 1
        return vec

    def label(self, k: int) -> str:
        return self.paths[k].label(self.quiver)

    def check_associative(self) -> bool:
        t = self.structure
        left = np.einsum("ijm,mkl->ijkl", t, t) % self.p
        right = np.einsum("jkm,iml->ijkl", t, t) % self.p
        return bool((left == right).all())


def _paths_of_length(quiver: Quiver, shorter: list[Path]) -> list[Path]:
    out = []
    for q in shorter:
        for a in quiver.arrows:
            if a.source == q.target:
                out.append(Path(q.source, a.target, q.arrows + (a.name,)))
    return out


def compute_basis(
    quiver: Quiver,
    relations: RelationSet,
    fspec: FieldSpec,
    max_path_len: int = DEFAULT_MAX_PATH_LEN,
) -> AlgebraBasis:
    """Basis and multiplication table of kQ/I.

    For L = 1, 2, ... the ideal is spanned inside the paths of length <= L
    (terms longer than L dropped), and elimination runs per
    (source, target) bucket with longer paths pivoted first.  The search
    stops at the first L where every path of length L lies in that span;
    the surviving non-pivot paths of length < L are the basis.

    Raises:
        NotFiniteDimensional: paths of length ``max_path_len`` survive.
    """
    if max_path_len < 1:
        raise ValueError("max_path_len must be >= 1")
    p = fspec.p
    trivial = [Path(i, i) for i in range(quiver.n)]
    by_len: list[list[Path]] = [trivial]
    for L in range(1, max_path_len + 1):
        by_len.append(_paths_of_length(quiver, by_len[-1]))
        if sum(len(ps) for ps in by_len) > MAX_PATHS:
            raise NotFiniteDimensional(f"more than {MAX_PATHS} paths of length <= {L}; ideal is not admissible")
        solved = _reduce_up_to(quiver, relations, p, by_len, L)
        if solved is not None:
            basis_paths, normal_forms = solved
            return _assemble(quiver, relations, fspec, basis_paths, normal_forms, L)
    raise NotFiniteDimensional(
        f"irreducible paths of length {max_path_len} remain; algebra is not finite dimensional within the bound"
    )


def _reduce_up_to(quiver, relations, p, by_len, L):
    key = lambda q: _path_key(quiver, q)  # noqa: E731
    buckets: dict[tuple[int, int], list[Path]] = {}
    for ell in range(1, L + 1):
        for q in by_len[ell]:
            buckets.setdefault((q.source, q.target), []).append(q)
    # Column order: longest first, then lexicographic by arrow index.
    cols = {st: sorted(qs, key=lambda q: (-q.length,) + key(q)[1:]) for st, qs in buckets.items()}
    col_index = {st: {q: k for k, q in enumerate(qs)} for st, qs in cols.items()}

    rows: dict[tuple[int, int], list[np.ndarray]] = {}
    for rel in relations.relations:
        minlen = min(q.length for _, q in rel.terms)
        for lu in range(0, L - minlen + 1):
            lefts = [u for u in by_len[lu] if u.target == rel.source]
            for lv in range(0, L - minlen - lu + 1):
                rights = [v for v in by_len[lv] if v.source == rel.target]
                for u, v in product(lefts, rights):
                    st = (u.source, v.target)
                    vec = np.zeros(len(cols[st]), dtype=np.int64)
                    for c, q in rel.terms:
                        full = u.arrows + q.arrows + v.arrows
                        if len(full) <= L:
                            vec[col_index[st][Path(u.source, v.target, full)]] += c
                    vec %= p
                    if vec.any():
                        rows.setdefault(st, []).append(vec)

    basis_paths: list[Path] = []
    normal_forms: dict[Path, list[tuple[Path, int]]] = {}
    for st, qs in cols.items():
        if st in rows:
            r, pivots = linalg.rref(np.array(rows[st]), p)
        else:
            r, pivots = np.zeros((0, len(qs)), dtype=np.int64), []
        pivot_set = set(pivots)
        for k, q in enumerate(qs):
            if q.length == L and k not in pivot_set:
                return None
        for i, pc in enumerate(pivots):
            q = qs[pc]
            if q.length == L:
                if np.count_nonzero(r[i]) != 1:
                    return None
                continue
            normal_forms[q] = [(qs[c], int((-r[i, c]) % p)) for c in range(len(qs)) if c != pc and r[i, c]]
        basis_paths.extend(q for k, q in enumerate(qs) if k not in pivot_set)
    return basis_paths, normal_forms


def _assemble(quiver, relations, fspec, basis_paths, normal_forms, nilpotency):
    p = fspec.p
    nontrivial = sorted(basis_paths, key=lambda q: _path_key(quiver, q))
    paths = tuple([Path(i, i) for i in range(quiver.n)] + nontrivial)
    alg = AlgebraBasis(quiver, relations, fspec, paths, np.zeros((0, 0, 0), dtype=np.int64), nilpotency)
    index = alg.index
    alg._normal_forms = {
        q: tuple((index[b], c) for b, c in terms) for q, terms in normal_forms.items()
    }
    d = len(paths)
    t = np.zeros((d, d, d), dtype=np.int64)
    for i, a in enumerate(paths):
        for j, b in enumerate(paths):
            if a.target != b.source:
                continue
            if not a.arrows:
                t[i, j, j] = 1
            elif not b.arrows:
                t[i, j, i] = 1
            else:
                t[i, j] = alg.reduce(Path(a.source, b.target, a.arrows + b.arrows))
    alg.structure = t % p
    return alg


def load_algebra(text: str, max_path_len: int = DEFAULT_MAX_PATH_LEN) -> AlgebraBasis:
    q, r, f = parse_algebra(text)
    return compute_basis(q, r, f, max_path_len)


def read_algebra(path, max_path_len: int = DEFAULT_MAX_PATH_LEN) -> AlgebraBasis:
    with open(path, encoding="utf-8") as fh:
        return load_algebra(fh.read(), max_path_len)
