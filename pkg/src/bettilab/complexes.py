"""Finite simplicial complexes with explicit per-dimension face lists.

Faces are stored as bitmasks over an explicit, sorted vertex universe; the
universe matters because Alexander duality and joins are relative to it.
Every constructor applies downward closure, so each complex always holds the
full chain-level data the homology module needs, not just facets.

Two degenerate complexes are distinguished: the void complex (no faces at
all) and {empty set} (one face, the empty one).  Their reduced homologies
differ, so the empty face is tracked explicitly.
"""

from __future__ import annotations

import itertools

from .graphs import Graph, _bits


class SimplicialComplex:
    __slots__ = ("universe", "includes_empty_face", "_masks")

    def __init__(self, universe, face_masks, includes_empty_face=True):
        universe = tuple(sorted(set(universe)))
        if len(universe) > 64:
            raise ValueError("universe cap is 64 vertices")
        masks: dict[int, list[int]] = {}
        for m in set(face_masks):
            if m == 0:
                continue
            masks.setdefault(m.bit_count() - 1, []).append(m)
        for d in masks:
            masks[d].sort()
        if masks and not includes_empty_face:
            raise ValueError("a complex with faces contains the empty face")
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "includes_empty_face", bool(includes_empty_face))
        object.__setattr__(self, "_masks", masks)
        self._check_closed()

    def __setattr__(self, name, value):
        raise AttributeError("SimplicialComplex is immutable")

    def _check_closed(self):
        for d, faces in self._masks.items():
            if d == 0:
                continue
            below = set(self._masks.get(d - 1, ()))
            for m in faces:
                for v in _bits(m):
                    if m ^ (1 << v) not in below:
                        raise ValueError("face lists are not downward closed")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def void(cls, universe) -> "SimplicialComplex":
        return cls(universe, (), includes_empty_face=False)

    @classmethod
    def empty(cls, universe) -> "SimplicialComplex":
        """The complex {empty set}."""
        return cls(universe, (), includes_empty_face=True)

    @classmethod
    def from_faces(cls, universe, faces) -> "SimplicialComplex":
        """Build from arbitrary faces (vertex id iterables); closes downward."""
        universe = tuple(sorted(set(universe)))
        pos = {v: i for i, v in enumerate(universe)}
        masks = set()
        for face in faces:
            m = 0
            for v in face:
                m |= 1 << pos[v]
            masks.add(m)
        closed = set()
        for m in masks:
            _close_down(m, closed)
        return cls(universe, closed, includes_empty_face=True)

    @classmethod
    def from_facets(cls, universe, facets) -> "SimplicialComplex":
        return cls.from_faces(universe, facets)

    @classmethod
    def full_simplex(cls, universe) -> "SimplicialComplex":
        universe = tuple(sorted(set(universe)))
        return cls.from_faces(universe, [universe])

    # -- basic queries --------------------------------------------------------

    @property
    def dim(self) -> int:
        """-1 for {empty set}; conventionally -2 for the void complex."""
        if not self._masks:
            return -1 if self.includes_empty_face else -2
        return max(self._masks)

    def is_void(self) -> bool:
        return not self.includes_empty_face

    def face_masks(self, d: int) -> list[int]:
        return list(self._masks.get(d, ()))

    def f_vector(self) -> dict[int, int]:
        """Face counts by dimension, including f_{-1} for the empty face."""
        out = {-1: 1} if self.includes_empty_face else {}
        for d, faces in self._masks.items():
            out[d] = len(faces)
        return out

    def faces(self, d: int | None = None) -> list[tuple[int, ...]]:
        dims = sorted(self._masks) if d is None else [d]
        out = []
        for dd in dims:
            for m in self._masks.get(dd, ()):
                out.append(self._mask_to_face(m))
        return out

    def face_set(self) -> frozenset[frozenset[int]]:
        all_faces = {frozenset(f) for f in self.faces()}
        if self.includes_empty_face:
            all_faces.add(frozenset())
        return frozenset(all_faces)

    def facets(self) -> list[tuple[int, ...]]:
        masks = [m for faces in self._masks.values() for m in faces]
        maximal = [m for m in masks if not any(o != m and o & m == m for o in masks)]
        if not masks:
            return []
        return sorted(self._mask_to_face(m) for m in maximal)

    def vertex_set(self) -> set[int]:
        return {self.universe[i] for m in self._masks.get(0, ()) for i in _bits(m)}

    def absent_vertices(self) -> set[int]:
        return set(self.universe) - self.vertex_set()

    def contains(self, face) -> bool:
        try:
            m = self._face_to_mask(face)
        except KeyError:
            return False
        if m == 0:
            return self.includes_empty_face
        return m in set(self._masks.get(m.bit_count() - 1, ()))

    def _face_to_mask(self, face) -> int:
        pos = {v: i for i, v in enumerate(self.universe)}
        m = 0
        for v in face:
            m |= 1 << pos[v]
        return m

    def _mask_to_face(self, m: int) -> tuple[int, ...]:
        return tuple(self.universe[i] for i in _bits(m))

    # -- subcomplexes and duality ----------------------------------------------

    def link(self, face) -> "SimplicialComplex":
        if not self.contains(face):
            raise ValueError(f"{tuple(face)} is not a face, link undefined")
        sigma = self._face_to_mask(face)
        all_masks = {m for faces in self._masks.values() for m in faces}
        out = [m & ~sigma for m in all_masks if m & sigma == sigma]
        has_empty = sigma in all_masks or (sigma == 0 and self.includes_empty_face)
        return SimplicialComplex(self.universe, out, includes_empty_face=has_empty)

    def deletion(self, face) -> "SimplicialComplex":
        if not self.contains(face):
            raise ValueError(f"{tuple(face)} is not a face, deletion undefined")
        sigma = self._face_to_mask(face)
        out = [m for faces in self._masks.values() for m in faces if m & sigma == 0]
        return SimplicialComplex(self.universe, out, self.includes_empty_face)

    def join(self, other: "SimplicialComplex") -> "SimplicialComplex":
        if set(self.universe) & set(other.universe):
            raise ValueError("join requires disjoint vertex universes")
        if self.is_void() or other.is_void():
            return SimplicialComplex.void(self.universe + other.universe)
        mine = [frozenset(f) for f in self.faces()] + [frozenset()]
        theirs = [frozenset(f) for f in other.faces()] + [frozenset()]
        faces = [a | b for a in mine for b in theirs]
        return SimplicialComplex.from_faces(self.universe + other.universe, faces)

    def minimal_non_faces(self) -> list[tuple[int, ...]]:
        """Inclusion-minimal subsets of the universe that are not faces.

        A minimal non-face of size s has all its (s-1)-subsets as faces, so
        sizes beyond dim+2 cannot occur and the search stays shallow.
        """
        if self.is_void():
            return [()]
        u = len(self.universe)
        out = []
        face_sets = {d: set(faces) for d, faces in self._masks.items()}
        for size in range(1, min(u, self.dim + 2) + 1):
            for combo in itertools.combinations(range(u), size):
                m = 0
                for i in combo:
                    m |= 1 << i
                if m in face_sets.get(size - 1, ()):
                    continue
                # for size 1 the only proper subset is the empty face, mask 0
                if all(m ^ (1 << i) in face_sets.get(size - 2, {0}) for i in combo):
                    out.append(self._mask_to_face(m))
        return sorted(out, key=lambda f: (len(f), f))

    def alexander_dual(self) -> "SimplicialComplex":
        """Faces are complements of non-faces; facets come from minimal non-faces."""
        mnf = self.minimal_non_faces()
        if not mnf:
            return SimplicialComplex.void(self.universe)
        full = set(self.universe)
        facets = [tuple(sorted(full - set(f))) for f in mnf]
        return SimplicialComplex.from_facets(self.universe, facets)

    # -- comparisons and export -------------------------------------------------

    def same_faces(self, other: "SimplicialComplex") -> bool:
        """Equality of face families, ignoring the ambient universes."""
        return self.face_set() == other.face_set() and (
            self.includes_empty_face == other.includes_empty_face
        )

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialComplex)
            and self.universe == other.universe
            and self.includes_empty_face == other.includes_empty_face
            and self._masks == other._masks
        )

    def __hash__(self):
        frozen = tuple(sorted((d, tuple(m)) for d, m in self._masks.items()))
        return hash((self.universe, self.includes_empty_face, frozen))

    def __repr__(self):
        fv = self.f_vector()
        return f"SimplicialComplex(universe={len(self.universe)}, f={fv})"

    def to_json_dict(self) -> dict:
        return {"universe": list(self.universe), "facets": [list(f) for f in self.facets()]}


def _close_down(mask: int, seen: set[int]):
    if mask in seen:
        return
    seen.add(mask)
    for v in _bits(mask):
        _close_down(mask ^ (1 << v), seen)


def independence_complex(g: Graph) -> SimplicialComplex:
    """Faces are the independent vertex sets of g, named by g's labels.

    The graph with no vertices yields {empty set}.
    """
    universe = g.labels
    masks = _independent_set_masks(g.adj)
    face_masks = []
    for by_size in masks:
        face_masks.extend(by_size)
    return SimplicialComplex(universe, face_masks, includes_empty_face=True)


def _independent_set_masks(adj) -> list[list[int]]:
    """All independent sets of the bitmask graph, grouped by size (0..n)."""
    n = len(adj)
    by_size: list[list[int]] = [[] for _ in range(n + 1)]
    by_size[0].append(0)
    stack = [(0, (1 << n) - 1)]
    while stack:
        mask, cand = stack.pop()
        c = cand
        while c:
            low = c & -c
            v = low.bit_length() - 1
            c ^= low
            nm = mask | low
            by_size[nm.bit_count()].append(nm)
            stack.append((nm, c & ~adj[v]))
    return by_size
