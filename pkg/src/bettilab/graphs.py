"""Bitset-backed simple graphs and the circulant constructions used everywhere else.

Vertices are integers ``0..n-1`` and adjacency is one machine word per vertex,
so induced subgraphs, neighborhood unions and independence tests are a couple
of integer instructions.  The cap of 64 vertices is far above the scale this
package targets (the largest instance of interest has n = 17).

Induced subgraphs remember the vertex labels of the graph they were cut from;
interval bookkeeping on circulant layouts always talks about those original
positions, never about re-indexed ones.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

MAX_VERTICES = 64


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    ``adj[v]`` is the neighbor bitmask of v.  ``labels[v]`` is the original
    identity of v in whatever graph this one was carved out of (the identity
    map for graphs built from scratch).
    """

    __slots__ = ("n", "adj", "labels")

    def __init__(self, adj, labels=None):
        adj = tuple(adj)
        n = len(adj)
        if n > MAX_VERTICES:
            raise ValueError(f"graph has {n} vertices, cap is {MAX_VERTICES}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"neighbor index out of range in row {v}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
        for v in range(n):
            for u in _bits(adj[v]):
                if not adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v},{u})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        if labels is None:
            labels = tuple(range(n))
        else:
            labels = tuple(labels)
            if len(labels) != n or len(set(labels)) != n:
                raise ValueError("labels must be distinct and one per vertex")
        object.__setattr__(self, "labels", labels)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges, labels=None) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(adj, labels)

    # -- basic queries ------------------------------------------------------

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            row = self.adj[v] >> (v + 1) << (v + 1)
            out.extend((v, u) for u in _bits(row))
        return out

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    def neighbors(self, v: int) -> set[int]:
        self._check_vertex(v)
        return set(_bits(self.adj[v]))

    def closed_neighborhood(self, v: int) -> set[int]:
        self._check_vertex(v)
        return set(_bits(self.adj[v] | (1 << v)))

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def min_degree(self) -> int:
        return min((r.bit_count() for r in self.adj), default=0)

    def regular_degree(self) -> int | None:
        """Common degree if the graph is regular, else None."""
        degs = {r.bit_count() for r in self.adj}
        return degs.pop() if len(degs) == 1 else None

    def label(self, v: int) -> int:
        self._check_vertex(v)
        return self.labels[v]

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise ValueError(f"vertex {v!r} out of range for n={self.n}")

    # -- derived graphs -----------------------------------------------------

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(
            tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)),
            self.labels,
        )

    def induced_subgraph(self, vertex_set) -> "Graph":
        verts = sorted(set(vertex_set))
        for v in verts:
            self._check_vertex(v)
        pos = {v: i for i, v in enumerate(verts)}
        adj = [0] * len(verts)
        for i, v in enumerate(verts):
            for u in _bits(self.adj[v]):
                if u in pos:
                    adj[i] |= 1 << pos[u]
        return Graph(adj, tuple(self.labels[v] for v in verts))

    # -- structural tests ---------------------------------------------------

    def connected_component_count(self) -> int:
        count = 0
        rem = (1 << self.n) - 1
        while rem:
            count += 1
            comp = rem & -rem
            frontier = comp
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            rem &= ~comp
        return count

    def is_connected(self) -> bool:
        return self.n > 0 and self.connected_component_count() == 1

    def is_triangle_free(self) -> bool:
        for v in range(self.n):
            for u in _bits(self.adj[v] >> (v + 1) << (v + 1)):
                if self.adj[v] & self.adj[u]:
                    return False
        return True

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    # -- serialization ------------------------------------------------------

    def to_json_dict(self) -> dict:
        out = {"n": self.n, "edges": [list(e) for e in self.edges()]}
        if self.labels != tuple(range(self.n)):
            out["labels"] = list(self.labels)
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.adj == other.adj
            and self.labels == other.labels
        )

    def __hash__(self):
        return hash((self.adj, self.labels))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edge_count})"


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# -- circulant family --------------------------------------------------------


def circulant(n: int, connection_set) -> Graph:
    """Cayley graph of Z_n with respect to the given difference set.

    The set is symmetrized: each s also contributes the edges of n - s.
    A residue congruent to 0 would create loops and is rejected.
    """
    if n < 1:
        raise ValueError("n must be positive")
    edges = set()
    for s in connection_set:
        s = s % n
        if s == 0:
            raise ValueError("0 in connection set would create a loop")
        for a in range(n):
            b = (a + s) % n
            edges.add((min(a, b), max(a, b)))
    return Graph.from_edges(n, edges)


def generalized_andrasfai(t: int, k: int) -> Graph:
    """k-regular circulant on t(k-1)+2 vertices with differences 1+jt, 0 <= j < k."""
    if t < 1 or k < 2:
        raise ValueError("need t >= 1 and k >= 2")
    n = t * (k - 1) + 2
    return circulant(n, {1 + j * t for j in range(k)})


def ga_prime(t: int, k: int) -> Graph:
    """generalized_andrasfai(t, k) with the exterior cycle {i, i+1} removed.

    Equals the circulant with differences 1+jt for 1 <= j <= k-2; edgeless
    when k = 2 and a perfect matching when k = 3.
    """
    if t < 1 or k < 2:
        raise ValueError("need t >= 1 and k >= 2")
    n = t * (k - 1) + 2
    return circulant(n, {1 + j * t for j in range(1, k - 1)})


def remove_cycle_edges(g: Graph, cycle) -> Graph:
    """Delete the edges of a Hamiltonian cycle given as a vertex sequence.

    The sequence may or may not repeat its first vertex at the end.  It must
    visit every vertex exactly once and each consecutive pair (including the
    wrap-around) must be an edge of g.
    """
    seq = list(cycle)
    if len(seq) > 1 and seq[0] == seq[-1]:
        seq = seq[:-1]
    if len(set(seq)) != len(seq):
        raise ValueError("cycle repeats a vertex")
    if len(seq) != g.n:
        raise ValueError(f"cycle visits {len(seq)} of {g.n} vertices, must be Hamiltonian")
    drop = set()
    for a, b in zip(seq, seq[1:] + seq[:1]):
        if not g.has_edge(a, b):
            raise ValueError(f"({a},{b}) in the cycle is not an edge")
        drop.add((min(a, b), max(a, b)))
    kept = [e for e in g.edges() if e not in drop]
    return Graph.from_edges(g.n, kept, g.labels)


# -- counting queries ---------------------------------------------------------


def count_induced_complete_bipartite(g: Graph, a: int, b: int) -> int:
    """Number of induced subgraphs isomorphic to K_{a,b} (0 < a <= b).

    Exhaustive: every (a+b)-subset is tested with a specialized bipartition
    check, so no general isomorphism machinery is involved.
    """
    if not 0 < a <= b:
        raise ValueError("need 0 < a <= b")
    count = 0
    for combo in itertools.combinations(range(g.n), a + b):
        if _is_complete_bipartite(g, combo, a, b):
            count += 1
    return count


def _is_complete_bipartite(g: Graph, verts, a: int, b: int) -> bool:
    smask = 0
    for v in verts:
        smask |= 1 << v
    v0 = verts[0]
    side_b = g.adj[v0] & smask
    side_a = smask & ~side_b
    sizes = {side_a.bit_count(), side_b.bit_count()}
    if sizes != {a, b}:
        return False
    for v in _bits(side_a):
        if g.adj[v] & smask != side_b:
            return False
    for v in _bits(side_b):
        if g.adj[v] & smask != side_a:
            return False
    return True


def enumerate_induced_matchings(g: Graph, m: int) -> list[tuple[int, ...]]:
    """All vertex sets of size 2m that induce exactly m disjoint edges.

    Returned as sorted vertex tuples in lexicographic order.
    """
    if m < 1:
        raise ValueError("matching size must be positive")
    edges = g.edges()
    results: list[tuple[int, ...]] = []

    def extend(start: int, chosen_mask: int, forbidden: int, depth: int):
        if depth == m:
            results.append(tuple(_bits(chosen_mask)))
            return
        for idx in range(start, len(edges)):
            u, v = edges[idx]
            if forbidden >> u & 1 or forbidden >> v & 1:
                continue
            closed = g.adj[u] | g.adj[v] | (1 << u) | (1 << v)
            extend(idx + 1, chosen_mask | (1 << u) | (1 << v), forbidden | closed, depth + 1)

    extend(0, 0, 0, 0)
    return sorted(results)


def induced_matching_number(g: Graph) -> int:
    best = 0
    for m in range(1, g.n // 2 + 1):
        if not enumerate_induced_matchings(g, m):
            break
        best = m
    return best


def vertex_connectivity(g: Graph) -> int:
    """Exact vertex connectivity via max vertex-disjoint paths (Menger).

    Complete graphs return n-1 by convention, disconnected graphs 0.
    Intended for n <= 40, where the flow computation is still instant.
    """
    n = g.n
    if n < 2:
        raise ValueError("vertex connectivity needs at least 2 vertices")
    if not g.is_connected():
        return 0
    if g.is_complete():
        return n - 1
    best = n - 1
    for s in range(n):
        for t in range(s + 1, n):
            if g.has_edge(s, t):
                continue
            best = min(best, _max_vertex_disjoint_paths(g, s, t))
    return best


def _max_vertex_disjoint_paths(g: Graph, s: int, t: int) -> int:
    # Unit-capacity max flow on the vertex-split digraph: node 2v is "in",
    # 2v+1 is "out"; interior vertices get capacity 1 on in->out.
    n = g.n
    cap: dict[tuple[int, int], int] = {}
    succ: dict[int, list[int]] = {}

    def arc(a, b, c):
        cap[(a, b)] = c
        cap.setdefault((b, a), 0)
        succ.setdefault(a, []).append(b)
        succ.setdefault(b, []).append(a)

    for v in range(n):
        arc(2 * v, 2 * v + 1, 1 if v not in (s, t) else n)
    for u, v in g.edges():
        arc(2 * u + 1, 2 * v, n)
        arc(2 * v + 1, 2 * u, n)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        parent = {source: None}
        queue = [source]
        while queue and sink not in parent:
            node = queue.pop(0)
            for nxt in succ.get(node, ()):
                if cap[(node, nxt)] > 0 and nxt not in parent:
                    parent[nxt] = node
                    queue.append(nxt)
        if sink not in parent:
            return flow
        node = sink
        while parent[node] is not None:
            prev = parent[node]
            cap[(prev, node)] -= 1
            cap[(node, prev)] += 1
            node = prev
        flow += 1


# -- circulant interval bookkeeping -------------------------------------------


@dataclass(frozen=True)
class GAParams:
    """Parameters (t, k) of a Generalized Andrasfai instance.

    ``deleted_cycle`` distinguishes the plain graph from the one with the
    exterior cycle removed.
    """

    t: int
    k: int
    deleted_cycle: bool = True

    def __post_init__(self):
        if self.t < 1 or self.k < 2:
            raise ValueError("need t >= 1 and k >= 2")

    @property
    def n(self) -> int:
        return self.t * (self.k - 1) + 2

    def graph(self) -> Graph:
        if self.deleted_cycle:
            return ga_prime(self.t, self.k)
        return generalized_andrasfai(self.t, self.k)


@dataclass(frozen=True)
class IntervalDecomposition:
    """Cyclic gaps between removed vertices of a circulant instance.

    ``intervals[i]`` is the (start, length) of the run of retained vertices
    that follows ``removed[i]`` going clockwise; length 0 means the next
    removed vertex is immediately adjacent.
    """

    ambient: GAParams
    removed: tuple[int, ...]
    intervals: tuple[tuple[int, int], ...] = field(default=())

    def lengths(self) -> tuple[int, ...]:
        return tuple(length for _, length in self.intervals)

    def count_at_least(self, threshold: int) -> int:
        return sum(1 for length in self.lengths() if length >= threshold)

    def consecutive_pairs(self) -> list[tuple[int, int]]:
        """Index pairs of intervals separated only by zero-length intervals."""
        m = len(self.intervals)
        lens = self.lengths()
        pairs = set()
        for i in range(m):
            for j in range(m):
                if i == j:
                    continue
                between = [(i + s) % m for s in range(1, (j - i) % m)]
                if all(lens[b] == 0 for b in between):
                    pairs.add((min(i, j), max(i, j)))
        return sorted(pairs)


def intervals(params: GAParams, removed) -> IntervalDecomposition:
    """Decompose the retained vertices into cyclic intervals between removals."""
    n = params.n
    rem = sorted(set(removed))
    if not rem:
        raise ValueError("removed set must be nonempty, intervals are undefined")
    if len(rem) >= n:
        raise ValueError("removed set must be a proper subset of the vertices")
    for v in rem:
        if not 0 <= v < n:
            raise ValueError(f"removed vertex {v} out of range")
    ivs = []
    m = len(rem)
    for idx in range(m):
        x = rem[idx]
        y = rem[(idx + 1) % m]
        ivs.append(((x + 1) % n, (y - x - 1) % n))
    dec = IntervalDecomposition(params, tuple(rem), tuple(ivs))
    assert sum(dec.lengths()) + m == n
    return dec
