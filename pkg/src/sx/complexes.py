"""Immutable facet-based simplicial complexes and their basic queries.

A complex is stored by its inclusion-maximal faces only; the face lattice
is enumerated lazily and memoized per dimension.  Vertex labels are
integers or short strings, ordered numerically when every label of the
complex is an integer and by string value otherwise, so that all derived
orderings (facet lists, digests, move enumerations) are deterministic
across runs.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import (
    EmptyFace,
    EmptyInput,
    NotAFace,
    NotWeakPseudomanifold,
    UnknownVertex,
    VertexClash,
)

Label = int | str
FaceSet = frozenset


def _label_order_key(v: Label, numeric: bool):
    if numeric:
        return v
    # mixed or string labels: string order, integers before equal-looking strings
    return (str(v), isinstance(v, str))


class Complex:
    """An immutable simplicial complex given by its facets.

    The empty complex ``{∅}`` (single face: the empty set) is
    representable; it is the boundary of every closed weak pseudomanifold.
    """

    __slots__ = ("_facets", "__dict__")

    def __init__(self, facets: Iterable[Iterable[Label]], _normalized: bool = False):
        if _normalized:
            self._facets: frozenset[FaceSet] = frozenset(facets)
            return
        candidate = {frozenset(f) for f in facets}
        if not candidate:
            candidate = {frozenset()}
        # keep inclusion-maximal members only
        maximal = {
            f for f in candidate
            if not any(f < g for g in candidate)
        }
        self._facets = frozenset(maximal)

    # -- construction -----------------------------------------------------

    @classmethod
    def empty(cls) -> "Complex":
        return cls([frozenset()], _normalized=True)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Complex):
            return NotImplemented
        return self._facets == other._facets

    def __hash__(self) -> int:
        return hash(self._facets)

    def __repr__(self) -> str:
        return f"Complex(dim={self.dimension}, facets={len(self._facets)}, vertices={len(self.vertices)})"

    # -- canonical ordering ------------------------------------------------

    @cached_property
    def _numeric(self) -> bool:
        return all(isinstance(v, int) for f in self._facets for v in f)

    @cached_property
    def vertices(self) -> tuple[Label, ...]:
        vs = set().union(*self._facets) if self._facets else set()
        return tuple(sorted(vs, key=lambda v: _label_order_key(v, self._numeric)))

    @cached_property
    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    @cached_property
    def _vertex_pos(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}

    def face_tuple(self, face: Iterable[Label]) -> tuple:
        """Render a face as a tuple in the complex's canonical vertex order."""
        pos = self._vertex_pos
        return tuple(sorted(face, key=lambda v: pos.get(v, len(pos))))

    def sorted_faces(self, faces: Iterable[Iterable[Label]]) -> list[tuple]:
        pos = self._vertex_pos
        rendered = [self.face_tuple(f) for f in faces]
        rendered.sort(key=lambda t: (len(t), [pos.get(v, len(pos)) for v in t]))
        return rendered

    # -- basic structure ---------------------------------------------------

    @cached_property
    def facet_sets(self) -> frozenset[FaceSet]:
        return self._facets

    @cached_property
    def facets(self) -> tuple[tuple, ...]:
        return tuple(self.sorted_faces(self._facets))

    @cached_property
    def dimension(self) -> int:
        return max(len(f) for f in self._facets) - 1

    @cached_property
    def is_pure(self) -> bool:
        sizes = {len(f) for f in self._facets}
        return len(sizes) == 1

    @property
    def is_empty_complex(self) -> bool:
        return self.dimension == -1

    def has_face(self, face: Iterable[Label]) -> bool:
        f = frozenset(face)
        if len(f) - 1 > self.dimension:
            return False
        return any(f <= g for g in self._facets)

    def __contains__(self, face) -> bool:
        return self.has_face(face)

    @cached_property
    def _faces_by_dim(self) -> dict[int, frozenset]:
        by_dim: dict[int, set] = {k: set() for k in range(-1, self.dimension + 1)}
        by_dim[-1].add(frozenset())
        for facet in self._facets:
            fs = sorted(facet, key=self._vertex_pos.get)
            for r in range(1, len(fs) + 1):
                tier = by_dim[r - 1]
                for c in itertools.combinations(fs, r):
                    tier.add(frozenset(c))
        return {k: frozenset(v) for k, v in by_dim.items()}

    def faces(self, dim: int) -> frozenset:
        """All faces of the given dimension (``-1`` yields ``{∅}``)."""
        if dim < -1 or dim > self.dimension:
            return frozenset()
        return self._faces_by_dim[dim]

    def all_faces(self, include_empty: bool = False):
        for k in range(-1 if include_empty else 0, self.dimension + 1):
            yield from self._faces_by_dim[k]

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(self._faces_by_dim[k]) for k in range(0, self.dimension + 1))

    @cached_property
    def euler_characteristic(self) -> int:
        chi = 0
        for k, count in enumerate(self.f_vector()):
            chi += count if k % 2 == 0 else -count
        return chi

    # -- serialization helpers ---------------------------------------------

    @cached_property
    def digest(self) -> str:
        """SHA-256 of the canonical sorted facet list serialization."""
        lines = [" ".join(str(v) for v in f) for f in self.facets]
        return hashlib.sha256("\n".join(lines).encode("utf-8")).hexdigest()

    # -- subcomplexes --------------------------------------------------------

    def link(self, face: Iterable[Label]) -> "Complex":
        f = frozenset(face)
        if not self.has_face(f):
            raise NotAFace(f"not a face: {sorted(map(str, f))}")
        return Complex(g - f for g in self._facets if f <= g)

    def star(self, face: Iterable[Label]) -> "Complex":
        f = frozenset(face)
        if not self.has_face(f):
            raise NotAFace(f"not a face: {sorted(map(str, f))}")
        return Complex(g for g in self._facets if f <= g)

    def antistar(self, vertex: Label) -> "Complex":
        if vertex not in self.vertex_set:
            raise UnknownVertex(f"unknown vertex: {vertex}")
        return Complex(g - {vertex} for g in self._facets)

    def induced(self, vertices: Iterable[Label]) -> "Complex":
        u = frozenset(vertices)
        extra = u - self.vertex_set
        if extra:
            raise UnknownVertex(f"unknown vertices: {sorted(map(str, extra))}")
        return Complex(g & u for g in self._facets)

    def skeleton(self, dim: int) -> "Complex":
        """The subcomplex of all faces of dimension at most ``dim``."""
        if dim >= self.dimension:
            return self
        if dim < 0:
            return Complex.empty()
        maximal = set(self._faces_by_dim[dim])
        for k in range(0, dim):
            for f in self._faces_by_dim[k]:
                if not any(f < g for g in maximal):
                    maximal.add(f)
        return Complex(maximal)

    def join(self, other: "Complex") -> "Complex":
        clash = self.vertex_set & other.vertex_set
        if clash:
            raise VertexClash(f"shared labels: {sorted(map(str, clash))}")
        return Complex(f | g for f in self._facets for g in other._facets)

    def rename(self, mapping: dict) -> "Complex":
        """Relabel vertices; labels absent from ``mapping`` are kept."""
        return Complex(frozenset(mapping.get(v, v) for v in f) for f in self._facets)

    # -- pseudomanifold structure --------------------------------------------

    @cached_property
    def _ridge_incidence(self) -> dict[FaceSet, tuple[FaceSet, ...]]:
        """Map each (d-1)-face to the facets containing it (pure complexes)."""
        ridges: dict[FaceSet, list] = {}
        for facet in self._facets:
            for v in facet:
                ridges.setdefault(facet - {v}, []).append(facet)
        return {r: tuple(fs) for r, fs in ridges.items()}

    @cached_property
    def is_weak_pseudomanifold(self) -> bool:
        if self.is_empty_complex or not self.is_pure:
            return False
        return all(len(fs) <= 2 for fs in self._ridge_incidence.values())

    def _require_weak_pseudomanifold(self):
        if not self.is_weak_pseudomanifold:
            raise NotWeakPseudomanifold(
                "operation requires a pure complex with every ridge in at most two facets"
            )

    def boundary(self) -> "Complex":
        """Facets are the ridges lying in exactly one facet; ``{∅}`` if none."""
        self._require_weak_pseudomanifold()
        rim = [r for r, fs in self._ridge_incidence.items() if len(fs) == 1]
        if not rim:
            return Complex.empty()
        return Complex(rim)

    def dual_graph(self) -> "DualGraph":
        self._require_weak_pseudomanifold()
        nodes = self.facets
        index = {frozenset(f): i for i, f in enumerate(nodes)}
        edges = set()
        for fs in self._ridge_incidence.values():
            if len(fs) == 2:
                i, j = index[fs[0]], index[fs[1]]
                edges.add((min(i, j), max(i, j)))
        return DualGraph(nodes=nodes, edges=tuple(sorted(edges)))

    @cached_property
    def is_connected(self) -> bool:
        if self.is_empty_complex:
            return False
        verts = self.vertices
        if len(verts) == 1:
            return True
        adj: dict = {v: set() for v in verts}
        for e in self._faces_by_dim.get(1, ()):
            a, b = tuple(e)
            adj[a].add(b)
            adj[b].add(a)
        seen = {verts[0]}
        stack = [verts[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(verts)

    def classify(self) -> "Classification":
        """Exact pseudomanifold-hierarchy flags for this complex."""
        pure = not self.is_empty_complex and self.is_pure
        weak = self.is_weak_pseudomanifold
        pseudo = weak and self.dual_graph().is_connected()
        normal = weak and self._has_connected_low_links()
        closed = weak and not [
            1 for fs in self._ridge_incidence.values() if len(fs) == 1
        ]
        return Classification(
            pure=pure,
            weak_pseudomanifold=weak,
            pseudomanifold=pseudo,
            normal_pseudomanifold=normal,
            closed=closed,
        )

    def _has_connected_low_links(self) -> bool:
        # links of faces of dimension <= d-2; the empty face (its link is the
        # whole complex) takes part only when d >= 1
        if self.dimension >= 1 and not self.is_connected:
            return False
        for k in range(0, self.dimension - 1):
            for f in self._faces_by_dim[k]:
                if not self.link(f).is_connected:
                    return False
        return True

    # -- combinatorial queries -------------------------------------------------

    def missing_faces(self, max_dim: int) -> list[tuple]:
        """All non-faces of dimension <= max_dim with every proper subset a face."""
        found = []
        for size in range(2, max_dim + 2):
            lower = self._faces_by_dim.get(size - 2, frozenset())
            present = self._faces_by_dim.get(size - 1, frozenset())
            seen = set()
            for f in lower:
                for v in self.vertices:
                    if v in f:
                        continue
                    cand = f | {v}
                    if cand in seen or cand in present:
                        continue
                    seen.add(cand)
                    if all(cand - {u} in lower for u in cand):
                        found.append(cand)
        return self.sorted_faces(found)

    def is_l_neighborly(self, l: int) -> bool:
        if not 1 <= l <= len(self.vertices):
            raise ValueError(f"l must be in [1, {len(self.vertices)}]")
        if l - 1 > self.dimension:
            return False
        from math import comb

        return len(self._faces_by_dim[l - 1]) == comb(len(self.vertices), l)


@dataclass(frozen=True)
class Classification:
    pure: bool
    weak_pseudomanifold: bool
    pseudomanifold: bool
    normal_pseudomanifold: bool
    closed: bool

    def as_dict(self) -> dict:
        return {
            "pure": self.pure,
            "weak_pseudomanifold": self.weak_pseudomanifold,
            "pseudomanifold": self.pseudomanifold,
            "normal_pseudomanifold": self.normal_pseudomanifold,
            "closed": self.closed,
        }


@dataclass(frozen=True)
class DualGraph:
    """Facets as nodes; edges join facets meeting in a ridge."""

    nodes: tuple[tuple, ...]
    edges: tuple[tuple[int, int], ...]

    def degree(self, i: int) -> int:
        return sum(1 for a, b in self.edges if i in (a, b))

    def is_connected(self) -> bool:
        n = len(self.nodes)
        if n == 0:
            return False
        adj = {i: [] for i in range(n)}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == n

    def is_tree(self) -> bool:
        return self.is_connected() and len(self.edges) == len(self.nodes) - 1

    def edge_faces(self) -> list[tuple[tuple, tuple]]:
        return [(self.nodes[a], self.nodes[b]) for a, b in self.edges]


def from_facets(raw: Iterable[Iterable[Label]]) -> Complex:
    """Build a complex from raw facet data; dominated members are absorbed."""
    raw = [frozenset(f) for f in raw]
    if not raw:
        raise EmptyInput("at least one facet is required")
    if any(not f for f in raw):
        raise EmptyFace("facets must be non-empty vertex sets")
    return Complex(raw)


def f_vector(x: Complex) -> tuple[int, ...]:
    return x.f_vector()


def link(x: Complex, face: Iterable[Label]) -> Complex:
    return x.link(face)


def star(x: Complex, face: Iterable[Label]) -> Complex:
    return x.star(face)


def antistar(x: Complex, vertex: Label) -> Complex:
    return x.antistar(vertex)


def induced(x: Complex, vertices: Iterable[Label]) -> Complex:
    return x.induced(vertices)


def join(x: Complex, y: Complex) -> Complex:
    return x.join(y)


def boundary(x: Complex) -> Complex:
    return x.boundary()


def dual_graph(x: Complex) -> DualGraph:
    return x.dual_graph()


def missing_faces(x: Complex, max_dim: int) -> list[tuple]:
    return x.missing_faces(max_dim)


def is_l_neighborly(x: Complex, l: int) -> bool:
    return x.is_l_neighborly(l)


def classify(x: Complex) -> Classification:
    return x.classify()


def skeleta_equal(x: Complex, y: Complex, dim: int) -> bool:
    """True iff x and y have identical faces in every dimension <= dim."""
    for k in range(0, dim + 1):
        if x.faces(k) != y.faces(k):
            return False
    return True


def fresh_label(x: Complex, reserved: Iterable[Label] = ()) -> Label:
    """A deterministic vertex label not used by ``x`` (nor in ``reserved``)."""
    used = set(x.vertex_set) | set(reserved)
    if x._numeric:
        top = max((v for v in used if isinstance(v, int)), default=-1)
        return top + 1
    i = 1
    while f"w{i}" in used:
        i += 1
    return f"w{i}"
