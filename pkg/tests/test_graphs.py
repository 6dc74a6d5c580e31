import itertools

import pytest

from bettilab.graphs import (
    GAParams,
    Graph,
    circulant,
    count_induced_complete_bipartite,
    enumerate_induced_matchings,
    ga_prime,
    generalized_andrasfai,
    induced_matching_number,
    intervals,
    remove_cycle_edges,
    vertex_connectivity,
)


def complete_graph(n):
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def complete_bipartite(a, b):
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cycle_graph(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


class TestCirculant:
    def test_perfect_matching(self):
        g = circulant(6, {3})
        assert sorted(g.edges()) == [(0, 3), (1, 4), (2, 5)]

    def test_full_connection_set_is_complete(self):
        assert circulant(5, {1, 2}) == complete_graph(5)

    def test_seventeen_vertex_instance(self):
        g = circulant(17, {1, 4, 7, 10, 13, 16})
        assert g.n == 17
        assert g.regular_degree() == 6
        assert g.edge_count == 51

    def test_zero_residue_rejected(self):
        with pytest.raises(ValueError):
            circulant(6, {0, 2})
        with pytest.raises(ValueError):
            circulant(6, {6})

    def test_symmetrization(self):
        # 4 and 13 give the same edges mod 17
        assert circulant(17, {4}) == circulant(17, {13})


class TestFamily:
    @pytest.mark.parametrize("k", [2, 3, 4, 5])
    def test_t1_is_complete(self, k):
        assert generalized_andrasfai(1, k) == complete_graph(k + 1)

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_t2_is_complete_bipartite(self, k):
        g = generalized_andrasfai(2, k)
        # parts are the parity classes
        evens = [v for v in range(g.n) if v % 2 == 0]
        for u, v in g.edges():
            assert (u % 2) != (v % 2)
        assert g.edge_count == k * k
        assert len(evens) == k

    @pytest.mark.parametrize("t,k", [(t, k) for t in range(1, 7) for k in range(2, 7)])
    def test_regular_degree(self, t, k):
        g = generalized_andrasfai(t, k)
        assert g.n == t * (k - 1) + 2
        assert g.regular_degree() == k

    @pytest.mark.parametrize("t,k", [(t, k) for t in range(2, 7) for k in range(2, 7)])
    def test_triangle_free_for_t_at_least_2(self, t, k):
        assert generalized_andrasfai(t, k).is_triangle_free()

    @pytest.mark.parametrize("k", [2, 3, 4, 5])
    def test_t1_has_triangles(self, k):
        # complete graphs on >= 3 vertices are not triangle-free
        assert not generalized_andrasfai(1, k).is_triangle_free()


class TestGaPrime:
    def test_k3_is_disjoint_edges(self):
        g = ga_prime(2, 3)
        assert sorted(g.edges()) == [(0, 3), (1, 4), (2, 5)]
        for t in range(1, 5):
            g = ga_prime(t, 3)
            assert g.edge_count == t + 1
            assert g.regular_degree() == 1

    def test_k2_is_edgeless(self):
        for t in range(1, 5):
            assert ga_prime(t, 2).edge_count == 0

    def test_36_instance(self):
        g = ga_prime(3, 6)
        assert g.n == 17
        assert g.regular_degree() == 4
        assert g.edge_count == 34

    @pytest.mark.parametrize("t,k", [(t, k) for t in range(1, 6) for k in range(3, 7)])
    def test_equals_exterior_cycle_deletion(self, t, k):
        full = generalized_andrasfai(t, k)
        assert remove_cycle_edges(full, list(range(full.n))) == ga_prime(t, k)


class TestRemoveCycleEdges:
    def test_closed_form_of_sequence_accepted(self):
        g = generalized_andrasfai(2, 3)
        seq = list(range(g.n))
        assert remove_cycle_edges(g, seq) == remove_cycle_edges(g, seq + [0])

    def test_other_hamiltonian_cycle_differs(self):
        ga = generalized_andrasfai(3, 6)
        cycle4 = [4 * i % 17 for i in range(17)]
        g = remove_cycle_edges(ga, cycle4)
        assert g.regular_degree() == 4
        assert g != ga_prime(3, 6)

    def test_non_hamiltonian_rejected(self):
        ga = generalized_andrasfai(3, 6)
        with pytest.raises(ValueError, match="Hamiltonian"):
            remove_cycle_edges(ga, [0, 1, 2])

    def test_non_edge_rejected(self):
        with pytest.raises(ValueError, match="not an edge"):
            remove_cycle_edges(ga_prime(2, 3), [0, 1, 2, 3, 4, 5])

    def test_repeated_vertex_rejected(self):
        ga = generalized_andrasfai(1, 4)
        with pytest.raises(ValueError, match="repeats"):
            remove_cycle_edges(ga, [0, 1, 2, 1, 3])


class TestBasicQueries:
    def test_complement_of_complete_is_edgeless(self):
        assert complete_graph(5).complement().edge_count == 0

    def test_neighbors(self):
        g = ga_prime(3, 6)
        assert g.neighbors(0) == {4, 7, 10, 13}
        assert g.closed_neighborhood(0) == {0, 4, 7, 10, 13}
        with pytest.raises(ValueError):
            g.neighbors(17)

    def test_induced_k23(self):
        # one K_{2,3} inside the 17-vertex instance: {0,3} against {7,10,13}
        g = ga_prime(3, 6)
        sub = g.induced_subgraph({0, 3, 7, 10, 13})
        assert sub.labels == (0, 3, 7, 10, 13)
        parts = ({0, 1}, {2, 3, 4})
        for i in parts[0]:
            assert set(u for u in range(5) if sub.has_edge(i, u)) == parts[1]

    def test_component_count_of_complement_of_one_edge_in_k4(self):
        w = complete_graph(4).induced_subgraph({0, 1})
        assert w.edge_count == 1
        assert w.complement().connected_component_count() == 2

    def test_labels_compose(self):
        g = ga_prime(3, 6).induced_subgraph({2, 5, 9, 12})
        h = g.induced_subgraph({0, 2})
        assert h.labels == (2, 9)


class TestCompleteBipartiteCount:
    def test_known_values_36(self):
        g = ga_prime(3, 6)
        assert count_induced_complete_bipartite(g, 2, 3) == 17
        assert count_induced_complete_bipartite(g, 2, 2) == 34

    def test_edgeless(self):
        g = Graph.from_edges(4, [])
        assert count_induced_complete_bipartite(g, 1, 1) == 0

    def test_k11_counts_edges(self):
        g = ga_prime(2, 5)
        assert count_induced_complete_bipartite(g, 1, 1) == g.edge_count

    def test_bad_sizes_rejected(self):
        with pytest.raises(ValueError):
            count_induced_complete_bipartite(ga_prime(2, 3), 2, 1)


class TestInducedMatchings:
    @pytest.mark.parametrize("t", [1, 2, 3])
    def test_k4_matching_number_is_t(self, t):
        g = ga_prime(t, 4)
        assert induced_matching_number(g) == t
        assert len(enumerate_induced_matchings(g, t)) == g.n * (t + 1) // 2

    def test_36_count(self):
        assert len(enumerate_induced_matchings(ga_prime(3, 6), 3)) == 85

    @pytest.mark.parametrize("t", [1, 2, 3])
    def test_disjoint_edges_number(self, t):
        assert induced_matching_number(ga_prime(t, 3)) == t + 1

    def test_matchings_are_induced(self):
        g = ga_prime(2, 4)
        for verts in enumerate_induced_matchings(g, 2):
            sub = g.induced_subgraph(verts)
            assert sub.edge_count == 2
            assert all(sub.degree(v) == 1 for v in range(sub.n))


class TestVertexConnectivity:
    def test_complement_of_36_instance(self):
        assert vertex_connectivity(ga_prime(3, 6).complement()) == 12

    @pytest.mark.parametrize("n", [4, 5, 8])
    def test_cycles(self, n):
        assert vertex_connectivity(cycle_graph(n)) == 2

    @pytest.mark.parametrize("a,b", [(1, 3), (2, 3), (3, 3)])
    def test_complete_bipartite(self, a, b):
        assert vertex_connectivity(complete_bipartite(a, b)) == min(a, b)

    def test_complete(self):
        assert vertex_connectivity(complete_graph(5)) == 4

    def test_disconnected(self):
        assert vertex_connectivity(Graph.from_edges(4, [(0, 1), (2, 3)])) == 0


class TestIntervals:
    def test_worked_example(self):
        params = GAParams(3, 6)
        dec = intervals(params, {3, 4, 7, 12})
        assert dec.lengths() == (0, 2, 4, 7)
        assert dec.intervals[1] == (5, 2)
        assert dec.intervals[3] == (13, 7)
        # the long wrap-around interval and the one after vertex 4 are
        # separated only by the empty interval between 3 and 4
        assert (1, 3) in dec.consecutive_pairs()
        assert (2, 3) in dec.consecutive_pairs()  # cyclically adjacent
        assert (1, 2) in dec.consecutive_pairs()  # adjacent indices

    def test_single_removal(self):
        dec = intervals(GAParams(2, 4), {5})
        assert dec.lengths() == (7,)

    def test_two_opposite_removals(self):
        dec = intervals(GAParams(2, 4), {0, 4})
        assert dec.lengths() == (3, 3)

    def test_lengths_sum(self):
        params = GAParams(3, 5)
        dec = intervals(params, {0, 1, 2, 9})
        assert sum(dec.lengths()) + 4 == params.n

    def test_empty_removed_rejected(self):
        with pytest.raises(ValueError):
            intervals(GAParams(2, 4), set())

    def test_full_removed_rejected(self):
        with pytest.raises(ValueError):
            intervals(GAParams(1, 3), set(range(5)))


class TestGraphValidation:
    def test_loop_rejected(self):
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(0, 0)])

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(0, 3)])

    def test_immutable(self):
        g = ga_prime(2, 3)
        with pytest.raises(AttributeError):
            g.n = 5

    def test_cap(self):
        with pytest.raises(ValueError):
            Graph.from_edges(65, [])
