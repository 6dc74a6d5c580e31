"""Closed-form predictions for the cycle-deleted circulant family.

Everything here is plain integer arithmetic on the parameters (t, k), with no
graph or complex objects involved, so these values are genuinely independent
of the enumeration engine they are checked against.

Validity notes kept next to each formula: most closed forms are exact for
every t >= 1, but the complete-bipartite count and the linear strand are
wrong for t = 1 with k >= 5 (those graphs contain triangles, which breaks the
counting argument); the engine-side verification gates on that.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .hochster import BettiDiagram, DiagramShape
from .homology import GF2


def vertex_count(t: int, k: int) -> int:
    """Number of vertices of the (t, k) instance."""
    if t < 1 or k < 2:
        raise ValueError("need t >= 1 and k >= 2")
    return t * (k - 1) + 2


def kab_formula(t: int, k: int, a: int, b: int) -> int:
    """Induced K_{a,b} count: n*C(k-2, a+b-1), halved when a = b.

    Exact for t >= 2 (engine-validated at t = 2, proven for t >= 3); for
    t = 1 the triangle-free hypothesis behind it fails.
    """
    if not 0 < a <= b:
        raise ValueError("need 0 < a <= b")
    n = vertex_count(t, k)
    value = n * comb(k - 2, a + b - 1)
    if a == b:
        assert value % 2 == 0
        value //= 2
    return value


def linear_strand_formula(t: int, k: int, i: int) -> int:
    """beta_{i,i+2} prediction: n*C(k-2, i+1)*(i+1)/2; zero past i = k-3.

    Same validity range as kab_formula (it is the sum of those counts over
    a+b = i+2).
    """
    if i < 0:
        raise ValueError("need i >= 0")
    n = vertex_count(t, k)
    value = n * comb(k - 2, i + 1) * (i + 1)
    assert value % 2 == 0
    return value // 2


def matching_number_formula(t: int, k: int) -> int:
    """Induced matching number: t for k >= 4, t+1 for the perfect-matching k = 3."""
    if k >= 4:
        return t
    if k == 3:
        return t + 1
    return 0


def matching_count_formula(t: int, k: int) -> int:
    """Number of induced matchings of maximum size.

    n(t(k-3)+1)/2 for k >= 4; for k = 3 the whole graph is the unique
    maximum matching.
    """
    if k == 3:
        return 1
    if k < 3:
        raise ValueError("no induced matchings for k <= 2")
    n = vertex_count(t, k)
    value = n * (t * (k - 3) + 1)
    assert value % 2 == 0
    return value // 2


def reg_formula(t: int) -> int:
    """Regularity of the edge ideal after cycle deletion."""
    return t + 2


def pd_formula(t: int, k: int) -> int:
    """Projective dimension t(k-2) = n - t - 2."""
    return t * (k - 2)


def last_row_entry(t: int, k: int, i: int) -> int:
    """beta_{i,n}: a single 1 in column n-t-2."""
    return 1 if i == vertex_count(t, k) - t - 2 else 0


def penultimate_diag_entry(t: int, k: int, i: int) -> int:
    """beta_{i,n-2}: n(t(k-3)+1)/2 in column n-t-3, zero elsewhere."""
    n = vertex_count(t, k)
    if i != n - t - 3:
        return 0
    value = n * (t * (k - 3) + 1)
    assert value % 2 == 0
    return value // 2


def connectivity_formula(t: int, k: int) -> int:
    """Vertex connectivity of the complement graph: (t-1)(k-1)+2."""
    return (t - 1) * (k - 1) + 2


def k3_diagram(t: int) -> BettiDiagram:
    """Exact diagram for k = 3: binomials C(t+1, i+1) down the main diagonal."""
    if t < 1:
        raise ValueError("need t >= 1")
    entries = {(i, 2 * i + 2): comb(t + 1, i + 1) for i in range(t + 1)}
    return BettiDiagram.from_dict(vertex_count(t, 3), GF2, entries)


def t3_shape(k: int) -> DiagramShape:
    """Exact diagram support for t = 3 in (column, row) coordinates.

    Row 2 spans columns 0..k-3, row 3 spans 1..2k-5, row 4 spans 2..3k-7,
    and row 5 is the single corner cell at column 3k-6.
    """
    if k < 3:
        raise ValueError("need k >= 3")
    cells = set()
    cells.update((i, 2) for i in range(0, k - 2))
    cells.update((i, 3) for i in range(1, 2 * k - 4))
    cells.update((i, 4) for i in range(2, 3 * k - 6))
    cells.add((3 * k - 6, 5))
    return DiagramShape(frozenset(cells))


def conjecture_shape(t: int, k: int) -> DiagramShape:
    """Conjectured support for t, k >= 3: rows 2..t+1 span columns j-2 through
    (j-1)(k-2)-1, plus the corner cell (t(k-2), t+2)."""
    if t < 3 or k < 3:
        raise ValueError("the conjectured shape is stated for t, k >= 3")
    cells = set()
    for j in range(2, t + 2):
        cells.update((i, j) for i in range(j - 2, (j - 1) * (k - 2)))
    cells.add((t * (k - 2), t + 2))
    return DiagramShape(frozenset(cells))


def ga_full_invariants(t: int, k: int) -> tuple[int, int]:
    """(reg, pd) claimed for the undeleted graph: (t, t(k-2)+2).

    Known not to hold at t = 1, where the edge ideal of the complete graph
    has regularity 2; callers report rather than assert that case.
    """
    if t < 1 or k < 3:
        raise ValueError("need t >= 1 and k >= 3")
    return t, t * (k - 2) + 2


def embedding_bound(t: int, k: int) -> int:
    """Smallest k' must exceed this for the (t,k) graph to embed in the
    cycle-deleted (t,k') graph via x -> (t+1)x."""
    return t * (k - 1) + k + 1


def embedding_map(t: int, k: int, k_prime: int) -> dict[int, int]:
    """The vertex map x -> (t+1)x realizing the induced embedding."""
    bound = embedding_bound(t, k)
    if k_prime <= bound:
        raise ValueError(f"need k' > {bound}, got {k_prime}")
    n = vertex_count(t, k)
    mapping = {x: (t + 1) * x for x in range(n)}
    n_target = vertex_count(t, k_prime)
    assert max(mapping.values()) < n_target
    return mapping


@dataclass(frozen=True)
class FormulaReport:
    """One evaluated closed form, ready for JSON serialization."""

    quantity: str
    params: tuple[tuple[str, int], ...]
    value: int
    source: str

    @classmethod
    def build(cls, quantity: str, value: int, source: str, **params) -> "FormulaReport":
        return cls(quantity, tuple(sorted(params.items())), int(value), source)

    def to_dict(self) -> dict:
        return {
            "quantity": self.quantity,
            "params": dict(self.params),
            "value": self.value,
            "source": self.source,
        }


def instance_reports(t: int, k: int) -> list[FormulaReport]:
    """Every closed form evaluated at (t, k), for machine-readable output."""
    build = FormulaReport.build
    reports = [
        build("regularity", reg_formula(t), "reg_formula", t=t, k=k),
        build("projective-dimension", pd_formula(t, k), "pd_formula", t=t, k=k),
        build("complement-connectivity", connectivity_formula(t, k),
              "connectivity_formula", t=t, k=k),
        build("induced-matching-number", matching_number_formula(t, k),
              "matching_number_formula", t=t, k=k),
        build("induced-matching-count", matching_count_formula(t, k),
              "matching_count_formula", t=t, k=k),
        build("penultimate-diagonal-value", penultimate_diag_entry(t, k, vertex_count(t, k) - t - 3),
              "penultimate_diag_entry", t=t, k=k),
    ]
    if t >= 2:
        for i in range(max(k - 2, 1)):
            reports.append(build("linear-strand", linear_strand_formula(t, k, i),
                                 "linear_strand_formula", t=t, k=k, i=i))
    return reports
