"""Spanning-forest weights, Goeritz matrices, link determinants, and
tangle embedding obstructions, all in exact integer arithmetic."""

from .composition import (
    CompositionError,
    CrossCheckError,
    GluedPair,
    GluingReport,
    KrebesVerdict,
    gcd_list,
    krebes_verdict,
    verify_gluing_three,
    verify_gluing_two,
)
from .diagram import (
    DENOMINATOR,
    NUMERATOR,
    ClosurePattern,
    Crossing,
    DiagramError,
    PDSyntaxError,
    PlanarDiagramCode,
    TangleCode,
    TangleSizeError,
    TaitGraph,
    checkerboard_shading,
    close_tangle,
    closure_determinants,
    enumerate_closures,
    krebes_check,
    link_determinant,
    parse_pd,
    parse_tangle,
    pd_text,
    tait_graph,
    tangle_text,
    trace_faces,
)
from .graph import (
    GraphError,
    RootSpec,
    SpanningForest,
    WeightedEdge,
    WeightedMultigraph,
    build_graph,
    collapse_parallel,
    contract_vertices,
    enumerate_forests,
    forest_weight_enum,
    glue,
    graph_from_json_dict,
    graph_to_json_dict,
    relabel,
    tree_weight_enum,
)
from .laplacian import (
    IntegerMatrix,
    LaplacianMatrix,
    MatrixError,
    determinant,
    laplacian_matrix,
    minor,
    rooted_forest_weight_mtt,
    tree_weight_mtt,
)

__version__ = "0.1.0"

__all__ = [
    "ClosurePattern",
    "CompositionError",
    "CrossCheckError",
    "Crossing",
    "DENOMINATOR",
    "DiagramError",
    "GluedPair",
    "GluingReport",
    "GraphError",
    "IntegerMatrix",
    "KrebesVerdict",
    "LaplacianMatrix",
    "MatrixError",
    "NUMERATOR",
    "PDSyntaxError",
    "PlanarDiagramCode",
    "RootSpec",
    "SpanningForest",
    "TaitGraph",
    "TangleCode",
    "TangleSizeError",
    "WeightedEdge",
    "WeightedMultigraph",
    "build_graph",
    "checkerboard_shading",
    "close_tangle",
    "closure_determinants",
    "collapse_parallel",
    "contract_vertices",
    "determinant",
    "enumerate_closures",
    "enumerate_forests",
    "forest_weight_enum",
    "gcd_list",
    "glue",
    "graph_from_json_dict",
    "graph_to_json_dict",
    "krebes_check",
    "krebes_verdict",
    "laplacian_matrix",
    "link_determinant",
    "minor",
    "parse_pd",
    "parse_tangle",
    "pd_text",
    "relabel",
    "rooted_forest_weight_mtt",
    "tait_graph",
    "tangle_text",
    "trace_faces",
    "tree_weight_enum",
    "tree_weight_mtt",
    "verify_gluing_three",
    "verify_gluing_two",
]
