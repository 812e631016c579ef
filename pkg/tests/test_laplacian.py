import random

import pytest
from hypothesis import given, settings, strategies as st

from forestlink import (
    GraphError,
    IntegerMatrix,
    MatrixError,
    RootSpec,
    build_graph,
    determinant,
    forest_weight_enum,
    laplacian_matrix,
    minor,
    rooted_forest_weight_mtt,
    tree_weight_enum,
    tree_weight_mtt,
)
from forestlink.selftest import random_graph
from oracles import cofactor_determinant
from shared import (
    DET25_MATRIX_ROWS,
    DET25_ROOTED_12,
    DET25_TREE_WEIGHT,
    seven_vertex_graph,
)
from strategies import multigraphs

square_matrices = st.integers(0, 4).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n
    )
)


class TestLaplacianMatrix:
    def test_seven_vertex_matrix_is_exact(self):
        lap = laplacian_matrix(seven_vertex_graph())
        assert lap.to_rows() == DET25_MATRIX_ROWS
        assert lap.row_labels == lap.col_labels == tuple(range(1, 8))

    def test_single_vertex(self):
        assert laplacian_matrix(build_graph([1], [])).to_rows() == [[0]]

    def test_two_vertices_one_edge(self):
        lap = laplacian_matrix(build_graph([1, 2], [(1, 2, 4)]))
        assert lap.to_rows() == [[4, -4], [-4, 4]]

    def test_loops_contribute_nothing(self):
        lap = laplacian_matrix(build_graph([1, 2], [(1, 2, 1), (1, 1, 9)]))
        assert lap.to_rows() == [[1, -1], [-1, 1]]

    @settings(max_examples=60)
    @given(multigraphs())
    def test_symmetric_with_zero_row_sums(self, g):
        lap = laplacian_matrix(g)
        rows = lap.to_rows()
        for i in range(lap.rows):
            assert sum(rows[i]) == 0
            for j in range(lap.cols):
                assert rows[i][j] == rows[j][i]


class TestDeterminant:
    def test_empty_matrix(self):
        assert determinant(IntegerMatrix.from_rows([])) == 1

    def test_two_by_two(self):
        assert determinant(IntegerMatrix.from_rows([[2, 1], [1, 2]])) == 3

    def test_six_by_six_principal_submatrix(self):
        # delete row/col 1 of the Goeritz matrix by hand
        sub = [row[1:] for row in DET25_MATRIX_ROWS[1:]]
        value = determinant(IntegerMatrix.from_rows(sub))
        assert value == DET25_TREE_WEIGHT
        assert abs(value) == 25

    def test_non_square_rejected(self):
        with pytest.raises(MatrixError):
            determinant(IntegerMatrix.from_rows([[1, 2]]))

    @settings(max_examples=150)
    @given(square_matrices)
    def test_matches_cofactor_expansion(self, rows):
        assert determinant(IntegerMatrix.from_rows(rows)) == cofactor_determinant(rows)

    def test_arbitrary_precision_row_scaling(self):
        rows = [[3, 1, 4], [1, 5, 9], [2, 6, 5]]
        base = determinant(IntegerMatrix.from_rows(rows))
        scaled = [[x * 10**9 for x in rows[0]]] + rows[1:]
        assert determinant(IntegerMatrix.from_rows(scaled)) == base * 10**9


class TestMinor:
    def test_delete_nothing_gives_zero(self):
        lap = laplacian_matrix(seven_vertex_graph())
        assert minor(lap, [], []) == 0

    def test_every_principal_minor_is_the_tree_weight(self):
        lap = laplacian_matrix(seven_vertex_graph())
        values = [minor(lap, [v], [v]) for v in range(1, 8)]
        assert values == [DET25_TREE_WEIGHT] * 7
        assert {abs(v) for v in values} == {25}

    def test_offdiagonal_minor_magnitude(self):
        g = build_graph([1, 2, 3], [(1, 2, 1), (1, 3, 1), (2, 3, 1)])
        value = minor(laplacian_matrix(g), [1], [2])
        assert abs(value) == abs(forest_weight_enum(g, RootSpec((1,), (2,)))) == 3

    def test_errors(self):
        lap = laplacian_matrix(seven_vertex_graph())
        with pytest.raises(MatrixError):
            minor(lap, [1], [])
        with pytest.raises(MatrixError):
            minor(lap, [99], [99])
        with pytest.raises(MatrixError):
            minor(IntegerMatrix.from_rows([[1]]), [1], [1])


class TestMatrixTreeWeights:
    def test_seven_vertex(self):
        g = seven_vertex_graph()
        assert tree_weight_mtt(g) == DET25_TREE_WEIGHT

    def test_disconnected(self):
        assert tree_weight_mtt(build_graph([1, 2], [])) == 0

    def test_empty_graph_rejected(self):
        with pytest.raises(GraphError):
            tree_weight_mtt(build_graph([], []))

    def test_rooted_whole_vertex_set(self):
        g = seven_vertex_graph()
        assert rooted_forest_weight_mtt(g, range(1, 8)) == 1

    def test_rooted_singleton_is_tree_weight(self):
        g = seven_vertex_graph()
        assert rooted_forest_weight_mtt(g, [4]) == tree_weight_mtt(g)

    def test_rooted_pair(self):
        g = seven_vertex_graph()
        assert rooted_forest_weight_mtt(g, [1, 2]) == DET25_ROOTED_12

    def test_bad_gamma_rejected(self):
        g = seven_vertex_graph()
        with pytest.raises(GraphError):
            rooted_forest_weight_mtt(g, [])
        with pytest.raises(GraphError):
            rooted_forest_weight_mtt(g, [1, 1])
        with pytest.raises(GraphError):
            rooted_forest_weight_mtt(g, [42])

    def test_random_graphs_agree_with_enumeration(self):
        rng = random.Random(11)
        for _ in range(60):
            g = random_graph(rng)
            assert tree_weight_mtt(g) == tree_weight_enum(g)
            verts = g.sorted_vertices()
            gamma = rng.sample(verts, rng.randint(1, len(verts)))
            assert rooted_forest_weight_mtt(g, gamma) == forest_weight_enum(
                g, RootSpec.rooted(gamma)
            )

    def test_all_principal_minors_agree(self):
        rng = random.Random(12)
        for _ in range(40):
            g = random_graph(rng)
            lap = laplacian_matrix(g)
            values = {minor(lap, [v], [v]) for v in g.sorted_vertices()}
            assert len(values) == 1
