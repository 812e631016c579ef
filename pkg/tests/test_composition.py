import random

import pytest

from forestlink import (
    CompositionError,
    GluedPair,
    build_graph,
    gcd_list,
    glue,
    krebes_verdict,
    tree_weight_enum,
    verify_gluing_three,
    verify_gluing_two,
)
from forestlink.selftest import random_glued_pair


class TestGcdAndVerdicts:
    def test_gcd_list(self):
        assert gcd_list([25, 30]) == 5
        assert gcd_list([0, 0]) == 0
        assert gcd_list([6, 10, 15]) == 1
        assert gcd_list([0, 8]) == 8

    def test_gcd_list_rejects_empty_and_negative(self):
        with pytest.raises(CompositionError):
            gcd_list([])
        with pytest.raises(CompositionError):
            gcd_list([-1, 2])

    def test_worked_example_consistent(self):
        v = krebes_verdict([25, 30], 25)
        assert (v.gcd, v.divides, v.conclusion) == (5, True, "consistent")

    def test_obstructed(self):
        v = krebes_verdict([25, 30], 7)
        assert (v.gcd, v.divides, v.conclusion) == (5, False, "obstructed")

    def test_zero_conventions(self):
        v = krebes_verdict([0, 0], 4)
        assert (v.gcd, v.divides, v.conclusion) == (0, False, "obstructed")
        assert krebes_verdict([0, 0], 0).conclusion == "consistent"

    def test_empty_determinant_list_rejected(self):
        with pytest.raises(CompositionError):
            krebes_verdict([], 5)


class TestGluedPair:
    def test_overlap_must_match_shared(self):
        h = build_graph([1, 2, 3], [])
        k = build_graph([1, 2, 3], [])
        with pytest.raises(CompositionError):
            GluedPair(h, k, (1, 2))

    def test_wrong_shared_size_rejected(self):
        h = build_graph([1, 2, 3], [])
        k = build_graph([1, 2, 4], [])
        pair = GluedPair(h, k, (1, 2))
        with pytest.raises(CompositionError):
            verify_gluing_three(pair)


class TestTwoVertexIdentity:
    def test_parallel_edge_case(self):
        h = build_graph([1, 2], [(1, 2, 5)])
        k = build_graph([1, 2], [(1, 2, 7)])
        report = verify_gluing_two(GluedPair(h, k, (1, 2)))
        assert report.lhs == 12
        assert report.terms == (5, 7)
        assert report.factors == ((5, 1), (1, 7))
        assert report.equal

    def test_path_closed_into_triangle(self):
        h = build_graph([1, 2, 3], [(1, 3, 1), (3, 2, 1)])
        k = build_graph([1, 2], [(1, 2, 1)])
        report = verify_gluing_two(GluedPair(h, k, (1, 2)))
        assert report.lhs == 3
        assert report.terms == (1, 2)
        assert report.equal

    def test_shared_vertices_can_have_any_labels(self):
        h = build_graph([4, 9, 12], [(4, 9, 2), (9, 12, -1)])
        k = build_graph([4, 9, 30], [(4, 30, 1), (30, 9, 1)])
        report = verify_gluing_two(GluedPair(h, k, (4, 9)))
        assert report.equal

    def test_randomized(self):
        rng = random.Random(101)
        for _ in range(40):
            assert verify_gluing_two(random_glued_pair(rng, 2)).equal

    def test_report_json_shape(self):
        h = build_graph([1, 2], [(1, 2, 5)])
        k = build_graph([1, 2], [(1, 2, 7)])
        report = verify_gluing_two(GluedPair(h, k, (1, 2)))
        assert report.to_json_dict() == {"lhs": 12, "terms": [5, 7], "equal": True}


class TestThreeVertexIdentity:
    def test_edgeless_side_reduces_to_other_weight(self):
        h = build_graph([1, 2, 3, 4], [(1, 4, 1), (2, 4, 1), (3, 4, -2), (1, 2, 1)])
        k = build_graph([1, 2, 3], [])
        report = verify_gluing_three(GluedPair(h, k, (1, 2, 3)))
        assert report.equal
        assert report.factors[0][1] == 1  # rooted weight of the edgeless side
        assert report.terms[1] == report.terms[2] == report.terms[3] == 0
        assert report.lhs == tree_weight_enum(h)

    def test_star_glued_to_triangle(self):
        h = build_graph([1, 2, 3, 4], [(4, 1, 1), (4, 2, 1), (4, 3, 1)])
        k = build_graph([1, 2, 3], [(1, 2, 1), (1, 3, 1), (2, 3, 1)])
        report = verify_gluing_three(GluedPair(h, k, (1, 2, 3)))
        assert report.lhs == 16
        assert report.terms == (1, 2, 2, 2, 9)
        assert report.equal

    def test_randomized(self):
        rng = random.Random(202)
        for _ in range(25):
            assert verify_gluing_three(random_glued_pair(rng, 3)).equal


class TestGraphLevelDivisibility:
    def test_join_multiplicativity(self):
        rng = random.Random(303)
        for _ in range(30):
            pair = random_glued_pair(rng, 1)
            glued = glue(pair.h, pair.k, {1: 1})
            assert tree_weight_enum(glued) == tree_weight_enum(pair.h) * tree_weight_enum(pair.k)

    def test_two_vertex_gcd_divides_whole(self):
        rng = random.Random(404)
        for _ in range(30):
            pair = random_glued_pair(rng, 2)
            report = verify_gluing_two(pair)
            wh, wh_rooted = report.factors[0][0], report.factors[1][0]
            g = gcd_list([abs(wh), abs(wh_rooted)])
            whole = abs(report.lhs)
            assert whole == 0 if g == 0 else whole % g == 0

    def test_three_vertex_gcd_divides_whole(self):
        rng = random.Random(505)
        for _ in range(20):
            pair = random_glued_pair(rng, 3)
            report = verify_gluing_three(pair)
            side_weights = [abs(f[0]) for f in report.factors]
            g = gcd_list(side_weights)
            whole = abs(report.lhs)
            assert whole == 0 if g == 0 else whole % g == 0
