import pytest

from bettilab import formulas as fm
from bettilab.graphs import ga_prime, generalized_andrasfai
from bettilab.hochster import diagram_shape


class TestBasicCounts:
    def test_vertex_count(self):
        assert fm.vertex_count(3, 6) == 17
        assert fm.vertex_count(1, 4) == 5
        with pytest.raises(ValueError):
            fm.vertex_count(0, 4)

    def test_kab_known_values(self):
        assert fm.kab_formula(3, 6, 2, 3) == 17
        assert fm.kab_formula(3, 6, 2, 2) == 34
        assert fm.kab_formula(3, 6, 1, 5) == 0
        with pytest.raises(ValueError):
            fm.kab_formula(3, 6, 3, 2)

    def test_linear_strand_values(self):
        assert fm.linear_strand_formula(3, 6, 1) == 102
        assert [fm.linear_strand_formula(3, 6, i) for i in range(5)] == [34, 102, 102, 34, 0]

    def test_strand_index_zero_is_edge_count(self):
        for t, k in [(2, 4), (3, 5), (4, 3), (3, 6)]:
            g = ga_prime(t, k)
            assert fm.linear_strand_formula(t, k, 0) == g.edge_count

    def test_matching_formulas(self):
        assert fm.matching_count_formula(3, 6) == 85
        assert fm.matching_number_formula(5, 4) == 5
        assert fm.matching_number_formula(5, 3) == 6
        assert fm.matching_count_formula(4, 3) == 1
        assert fm.matching_number_formula(2, 2) == 0

    def test_connectivity(self):
        assert fm.connectivity_formula(3, 6) == 12
        assert fm.connectivity_formula(1, 4) == 2


class TestDiagramPredictions:
    def test_reg_pd(self):
        assert (fm.reg_formula(3), fm.pd_formula(3, 6)) == (5, 12)
        # pd equals n - t - 2 in every case
        for t in range(1, 6):
            for k in range(3, 7):
                assert fm.pd_formula(t, k) == fm.vertex_count(t, k) - t - 2

    def test_last_row_entry(self):
        assert fm.last_row_entry(2, 4, 4) == 1
        assert [fm.last_row_entry(2, 4, i) for i in range(8)].count(1) == 1

    def test_penultimate_diag(self):
        assert fm.penultimate_diag_entry(2, 4, 3) == 12
        assert fm.penultimate_diag_entry(2, 4, 2) == 0
        # for k = 3 the value collapses to the binomial on the diagonal
        assert fm.penultimate_diag_entry(4, 3, 3) == 5

    def test_k3_diagram(self):
        assert fm.k3_diagram(1).as_dict() == {(0, 2): 2, (1, 4): 1}
        assert [v for _, v in fm.k3_diagram(3).entries] == [4, 6, 4, 1]

    def test_t3_shape_rows(self):
        shape = fm.t3_shape(4).support
        assert {i for i, r in shape if r == 2} == {0, 1}
        assert {i for i, r in shape if r == 3} == {1, 2, 3}
        assert {i for i, r in shape if r == 4} == {2, 3, 4, 5}
        assert {i for i, r in shape if r == 5} == {6}

    def test_t3_shape_k5_corner(self):
        assert {i for i, r in fm.t3_shape(5).support if r == 5} == {9}


class TestConjecturedShape:
    @pytest.mark.parametrize("k", [3, 4, 5, 6])
    def test_agrees_with_t3(self, k):
        assert fm.conjecture_shape(3, k) == fm.t3_shape(k)

    def test_k3_is_the_diagonal(self):
        for t in (3, 4, 5):
            assert fm.conjecture_shape(t, 3) == diagram_shape(fm.k3_diagram(t))

    def test_corner_always_present(self):
        for t in range(3, 6):
            for k in range(3, 7):
                assert (t * (k - 2), t + 2) in fm.conjecture_shape(t, k).support

    def test_stated_range(self):
        with pytest.raises(ValueError):
            fm.conjecture_shape(2, 4)


class TestUndeletedInvariants:
    def test_values(self):
        assert fm.ga_full_invariants(3, 6) == (3, 14)
        assert fm.ga_full_invariants(1, 5) == (1, 5)


class TestEmbedding:
    def test_bound_rejection(self):
        assert fm.embedding_bound(1, 3) == 6
        with pytest.raises(ValueError):
            fm.embedding_map(1, 3, 6)

    def test_complete_graph_into_big_instance(self):
        # the (1,3) graph is complete on 4 vertices; its image stays complete
        for k_prime in (8, 9):
            mapping = fm.embedding_map(1, 3, k_prime)
            target = ga_prime(1, k_prime)
            image = sorted(mapping.values())
            source = generalized_andrasfai(1, 3)
            for x in range(source.n):
                for y in range(x + 1, source.n):
                    assert source.has_edge(x, y) == target.has_edge(mapping[x], mapping[y])

    def test_smallest_admissible_target_for_24(self):
        assert fm.embedding_bound(2, 4) == 11
        mapping = fm.embedding_map(2, 4, 12)
        source = generalized_andrasfai(2, 4)
        target = ga_prime(2, 12)
        for x in range(source.n):
            for y in range(x + 1, source.n):
                assert source.has_edge(x, y) == target.has_edge(mapping[x], mapping[y])

    @pytest.mark.parametrize("t,k,k_prime", [(1, 4, 9), (2, 3, 10), (3, 3, 13)])
    def test_adjacency_preserved_and_reflected(self, t, k, k_prime):
        mapping = fm.embedding_map(t, k, k_prime)
        source = generalized_andrasfai(t, k)
        target = ga_prime(t, k_prime)
        for x in range(source.n):
            for y in range(x + 1, source.n):
                assert source.has_edge(x, y) == target.has_edge(mapping[x], mapping[y])


class TestFormulaReport:
    def test_serialization(self):
        rep = fm.FormulaReport.build("regularity", fm.reg_formula(3),
                                     "reg_formula", t=3, k=6)
        data = rep.to_dict()
        assert data == {
            "quantity": "regularity",
            "params": {"k": 6, "t": 3},
            "value": 5,
            "source": "reg_formula",
        }
