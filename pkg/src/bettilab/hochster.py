"""Graded Betti numbers of edge ideals, computed combinatorially.

The central identity: beta_{i,i+j} of the edge ideal of G is the sum, over
induced subgraphs W on i+j vertices, of dim H~_{j-2} of the independence
complex of W.  The engine therefore walks all vertex subsets, evaluates one
homology profile per subset, and accumulates the dimensions into a sparse
diagram.

Two engine-independent routes cross-check the two extreme strands:

* row j = 2 (the linear strand) also equals the sum over induced W of
  (number of connected components of the complement of W) - 1, computed here
  by pure component counting;
* the main diagonal beta_{i,2(i+1)} equals the number of induced matchings
  of size i+1, computed by direct enumeration.

When the input graph is invariant under the cyclic shift v -> v+1 (every
circulant is), subsets are collapsed to rotation-orbit representatives and
each profile is counted with its orbit size, a near n-fold saving.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .complexes import SimplicialComplex
from .graphs import Graph, _bits, enumerate_induced_matchings
from .homology import (
    GF2,
    FieldSpec,
    _field_char,
    _profile_from_sizes,
    _relabel,
    graph_profile,
)

HOCHSTER_VERTEX_CAP = 20


@dataclass(frozen=True)
class BettiDiagram:
    """Sparse graded Betti numbers of a (squarefree monomial) ideal.

    ``entries[(i, j)]`` is beta_{i,j} with j the internal degree; the usual
    table places that value in column i, row j - i.  Equality compares the
    ambient vertex count and the entries; the field is bookkeeping metadata
    so that diagrams computed over different primes can be compared directly.
    """

    n: int
    field: FieldSpec
    entries: tuple[tuple[tuple[int, int], int], ...]

    @classmethod
    def from_dict(cls, n: int, field: FieldSpec, entries: dict) -> "BettiDiagram":
        items = tuple(sorted((k, v) for k, v in entries.items() if v))
        return cls(n, field, items)

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.entries)

    def get(self, i: int, j: int) -> int:
        return dict(self.entries).get((i, j), 0)

    def is_zero(self) -> bool:
        return not self.entries

    def row(self, r: int) -> dict[int, int]:
        """Nonzero entries of table row r, i.e. beta_{i,i+r} keyed by i."""
        return {i: v for (i, j), v in self.entries if j - i == r}

    def linear_strand(self) -> dict[int, int]:
        return self.row(2)

    def max_column(self) -> int:
        if self.is_zero():
            raise ValueError("zero diagram")
        return max(i for (i, _), _ in self.entries)

    def max_row(self) -> int:
        if self.is_zero():
            raise ValueError("zero diagram")
        return max(j - i for (i, j), _ in self.entries)

    def __eq__(self, other):
        return (
            isinstance(other, BettiDiagram)
            and self.n == other.n
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.n, self.entries))

    # -- rendering ------------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "char": self.field.characteristic,
            "entries": [[i, j, v] for (i, j), v in self.entries],
        }

    def to_csv_text(self) -> str:
        lines = ["i,j,beta"]
        lines.extend(f"{i},{j},{v}" for (i, j), v in self.entries)
        return "\n".join(lines) + "\n"

    def to_table_text(self) -> str:
        """Plain-text table, rows labelled by j-i starting at 2, columns by i."""
        if self.is_zero():
            return "(zero ideal: empty Betti diagram)\n"
        cols = self.max_column()
        rows = self.max_row()
        width = max(len(str(v)) for _, v in self.entries)
        width = max(width, len(str(cols)), len(str(rows)))
        head = " " * (width + 2) + " ".join(f"{i:>{width}}" for i in range(cols + 1))
        sep = "-" * len(head)
        out = [head, sep]
        table = self.as_dict()
        for r in range(2, rows + 1):
            cells = []
            for i in range(cols + 1):
                v = table.get((i, i + r), 0)
                cells.append(f"{v:>{width}}" if v else f"{'.':>{width}}")
            out.append(f"{r:>{width}}: " + " ".join(cells))
        return "\n".join(out) + "\n"

    def summary_line(self) -> str:
        if self.is_zero():
            return f"n={self.n} char={self.field.characteristic} zero ideal: reg and pd undefined"
        return (
            f"n={self.n} char={self.field.characteristic} "
            f"reg={regularity(self)} pd={projective_dimension(self)}"
        )


def regularity(diagram: BettiDiagram) -> int:
    """Largest row index j-i carrying a nonzero entry."""
    if diagram.is_zero():
        raise ValueError("regularity undefined for the zero ideal")
    return diagram.max_row()


def projective_dimension(diagram: BettiDiagram) -> int:
    """Largest column index i carrying a nonzero entry."""
    if diagram.is_zero():
        raise ValueError("projective dimension undefined for the zero ideal")
    return diagram.max_column()


@dataclass(frozen=True)
class DiagramShape:
    """Support of a Betti diagram in (column i, row j-i) coordinates."""

    support: frozenset[tuple[int, int]]

    def __post_init__(self):
        for i, r in self.support:
            if i < 0 or r < 0:
                raise ValueError(f"negative shape coordinate ({i},{r})")
            if r > i + 2:
                raise ValueError(f"cell ({i},{r}) violates the degree bound r <= i+2")

    def __eq__(self, other):
        return isinstance(other, DiagramShape) and self.support == other.support

    def __hash__(self):
        return hash(self.support)

    def sorted_cells(self) -> list[tuple[int, int]]:
        return sorted(self.support)


def diagram_shape(diagram: BettiDiagram) -> DiagramShape:
    return DiagramShape(frozenset((i, j - i) for (i, j), _ in diagram.entries))


# -- the subset-scan engine -----------------------------------------------------


def _rotation(mask: int, n: int, full: int) -> int:
    return ((mask << 1) & full) | (mask >> (n - 1))


def _orbit_rep(mask: int, n: int, full: int) -> tuple[int, int]:
    """Smallest rotation of mask and the orbit size."""
    best = mask
    cur = mask
    size = 0
    while True:
        cur = _rotation(cur, n, full)
        size += 1
        if cur == mask:
            return best, size
        if cur < best:
            best = cur


def _is_shift_invariant(adj: tuple[int, ...]) -> bool:
    n = len(adj)
    if n < 2:
        return False
    full = (1 << n) - 1
    return all(adj[(v + 1) % n] == _rotation(adj[v], n, full) for v in range(n))


def _hochster_scan(adj, n, char, lo, hi, symmetric) -> dict[tuple[int, int], int]:
    full = (1 << n) - 1
    entries: dict[tuple[int, int], int] = {}
    cache: dict = {}
    for mask in range(max(lo, 1), hi):
        if symmetric:
            rep, mult = _orbit_rep(mask, n, full)
            if rep != mask:
                continue
        else:
            mult = 1
        isolated = False
        mm = mask
        while mm:
            low = mm & -mm
            mm ^= low
            if adj[low.bit_length() - 1] & mask == 0:
                isolated = True
                break
        if isolated:
            continue
        size = mask.bit_count()
        profile = graph_profile(_relabel(adj, mask), char, cache)
        for d, dim in profile.items():
            i = size - d - 2
            assert i >= 0
            key = (i, size)
            entries[key] = entries.get(key, 0) + mult * dim
    return entries


def _hochster_worker(args) -> dict[tuple[int, int], int]:
    return _hochster_scan(*args)


def hochster_betti(g: Graph, fld=GF2, threads: int = 1,
                   max_vertices: int = HOCHSTER_VERTEX_CAP) -> BettiDiagram:
    """Full Betti diagram of the edge ideal of g by per-subset homology.

    Refuses graphs above ``max_vertices``: the scan costs one independence
    complex homology per vertex subset, 2^n in total.
    """
    n = g.n
    if n > max_vertices:
        raise ValueError(
            f"{n} vertices means {2 ** n} subset homology computations; "
            f"cap is {max_vertices} vertices"
        )
    char = _field_char(fld)
    symmetric = _is_shift_invariant(g.adj)
    total = 1 << n
    if threads > 1 and n >= 12:
        chunks = []
        parts = threads * 4
        step = (total + parts - 1) // parts
        for lo in range(1, total, step):
            chunks.append((g.adj, n, char, lo, min(lo + step, total), symmetric))
        entries: dict[tuple[int, int], int] = {}
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(_hochster_worker, chunks):
                for key, v in part.items():
                    entries[key] = entries.get(key, 0) + v
    else:
        entries = _hochster_scan(g.adj, n, char, 1, total, symmetric)
    return BettiDiagram.from_dict(n, FieldSpec(char), entries)


# -- independent strand oracles ---------------------------------------------------


def _complement_component_count(adj, mask: int) -> int:
    count = 0
    rem = mask
    while rem:
        count += 1
        comp = rem & -rem
        frontier = comp
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= mask & ~adj[v] & ~(1 << v)
            frontier = nxt & ~comp
            comp |= frontier
        rem &= ~comp
    return count


def linear_strand_rvt(g: Graph) -> list[int]:
    """beta_{i,i+2} for i = 0..n-2 via complement component counting only.

    Independent of the homology engine; used as the linear-strand oracle.
    """
    n = g.n
    full = (1 << n) - 1
    symmetric = _is_shift_invariant(g.adj)
    out = [0] * max(n - 1, 0)
    for mask in range(1, 1 << n):
        size = mask.bit_count()
        if size < 2:
            continue
        if symmetric:
            rep, mult = _orbit_rep(mask, n, full)
            if rep != mask:
                continue
        else:
            mult = 1
        comps = _complement_component_count(g.adj, mask)
        if comps > 1:
            out[size - 2] += mult * (comps - 1)
    return out


def main_diagonal_katzman(g: Graph) -> list[int]:
    """beta_{i,2(i+1)} for 2(i+1) <= n via induced matching enumeration."""
    return [len(enumerate_induced_matchings(g, i + 1)) for i in range(g.n // 2)]


# -- Alexander-dual Betti numbers ---------------------------------------------------


def dual_betti_via_links(g: Graph, fld=GF2,
                         max_vertices: int = HOCHSTER_VERTEX_CAP) -> BettiDiagram:
    """Betti diagram of the Alexander dual of the edge ideal of g.

    beta_{i,m} of the dual ideal is the sum of dim H~_{i-1} of the links of
    the faces of the independence complex on n-m vertices; for independence
    complexes the link of a face F is the independence complex of g minus the
    closed neighborhood of F, so everything stays at the graph level.
    """
    n = g.n
    if n > max_vertices:
        raise ValueError(
            f"{n} vertices means up to {2 ** n} link homology computations; "
            f"cap is {max_vertices} vertices"
        )
    char = _field_char(fld)
    adj = g.adj
    full = (1 << n) - 1
    entries: dict[tuple[int, int], int] = {}
    cache: dict = {}
    rest_profiles: dict[int, dict[int, int]] = {}

    # walk the independent sets of g (faces of the independence complex)
    stack: list[tuple[int, int]] = [(0, full)]
    while stack:
        fmask, cand = stack.pop()
        closed = fmask
        for v in _bits(fmask):
            closed |= adj[v]
        rest = full & ~closed
        if rest in rest_profiles:
            profile = rest_profiles[rest]
        else:
            profile = graph_profile(_relabel(adj, rest), char, cache)
            rest_profiles[rest] = profile
        m = n - fmask.bit_count()
        for d, dim in profile.items():
            # the link-sum identity is stated for m >= i+1; outside that range
            # (the one face of an edgeless graph using all vertices) there is
            # no syzygy to record
            if m < d + 2:
                continue
            key = (d + 1, m)
            entries[key] = entries.get(key, 0) + dim
        c = cand
        while c:
            low = c & -c
            v = low.bit_length() - 1
            c ^= low
            stack.append((fmask | low, c & ~adj[v]))
    return BettiDiagram.from_dict(n, FieldSpec(char), entries)


def stanley_reisner_betti(complex_: SimplicialComplex, fld=GF2,
                          max_universe: int = 16) -> BettiDiagram:
    """Betti diagram of the Stanley-Reisner ideal of an arbitrary complex.

    beta_{i,j} is the sum over j-subsets W of the universe of dim H~_{j-i-2}
    of the subcomplex induced on W.  Exponential in the universe size; meant
    for cross-checks on small complexes, not production runs.
    """
    u = len(complex_.universe)
    if u > max_universe:
        raise ValueError(f"universe of {u} vertices exceeds the cap {max_universe}")
    char = _field_char(fld)
    by_dim = {d: complex_.face_masks(d) for d in range(0, max(complex_.dim, -1) + 1)}
    entries: dict[tuple[int, int], int] = {}
    has_empty = complex_.includes_empty_face
    for wmask in range(1, 1 << u):
        size = wmask.bit_count()
        masks_by_size: list[list[int]] = [[0] if has_empty else []]
        for d in range(0, size):
            kept = [m for m in by_dim.get(d, ()) if m & ~wmask == 0]
            masks_by_size.append(kept)
        dims = _profile_from_sizes(masks_by_size, char)
        for d, dim in dims.items():
            i = size - d - 2
            if i < 0:
                continue
            key = (i, size)
            entries[key] = entries.get(key, 0) + dim
    return BettiDiagram.from_dict(u, FieldSpec(char), entries)
