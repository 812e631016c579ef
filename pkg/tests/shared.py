"""Shared test data: the 7-vertex worked example and its frozen facts."""

from forestlink import build_graph

# Unreduced Goeritz matrix of the 11-crossing knot fixture; every principal
# minor equals -25 (absolute value 25, the knot determinant).
DET25_MATRIX_ROWS = [
    [0, 1, -1, -1, 0, 0, 1],
    [1, 0, 0, 0, -1, -1, 1],
    [-1, 0, 2, 0, -1, 0, 0],
    [-1, 0, 0, 2, 0, -1, 0],
    [0, -1, -1, 0, 0, 2, 0],
    [0, -1, 0, -1, 2, 0, 0],
    [1, 1, 0, 0, 0, 0, -2],
]

# The signed graph read off that matrix (off-diagonal entries are minus the
# summed edge weights; the two parallel (5,6) edges are merged into one
# edge of weight -2, which changes no tree or forest weight).
DET25_EDGES = [
    (1, 2, -1),
    (1, 3, 1),
    (1, 4, 1),
    (1, 7, -1),
    (2, 5, 1),
    (2, 6, 1),
    (2, 7, -1),
    (3, 5, 1),
    (4, 6, 1),
    (5, 6, -2),
]

# Relabeling taking the Tait graph of fixtures/knot_det25.pd (vertex labels
# assigned in face order) onto the matrix labeling above.
TAIT_TO_MATRIX = {1: 1, 2: 2, 3: 3, 4: 4, 5: 7, 6: 5, 7: 6}

# Frozen weights of the worked example (hand-checked by deletion and
# contraction, and reproduced independently by enumeration and by minors).
DET25_TREE_WEIGHT = -25
DET25_ROOTED_12 = 30


def seven_vertex_graph():
    return build_graph(range(1, 8), DET25_EDGES)
