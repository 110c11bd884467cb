"""Sierpinski products of graphs and their (upper) Sierpinski metric dimension."""

from .convexity import ConvexityReport, is_convex_subgraph, verify_layer_convexity
from .errors import (
    BudgetExceeded,
    Disconnected,
    EmptySetOnNontrivialGraph,
    FunctionShapeMismatch,
    FunctionSpaceTooLarge,
    GraphError,
    HypothesisViolated,
    InducedDisconnected,
    IsAPath,
    NotATree,
    OutOfRange,
    ParseError,
    SelfLoop,
    WrongFactors,
)
from .families import (
    complete_graph,
    cycle_graph,
    double_spider,
    fk_graph,
    fk_u,
    nonisomorphic_trees,
    path_graph,
    spider,
    star_graph,
)
from .graph import (
    UNREACHABLE,
    Graph,
    TreeMetrics,
    build_graph,
    distance_matrix,
    is_connected,
    is_path_graph,
    is_tree,
    tree_metrics,
)
from .isomorphism import are_isomorphic, find_isomorphism
from .metric import (
    DimensionReport,
    MetricRepresentation,
    SearchLimits,
    is_resolving_set,
    metric_dimension,
    metric_dimension_exact,
    metric_representation,
    standard_metric_basis,
    tree_metric_dimension,
    twin_classes,
    twin_lower_bound,
)
from .product import (
    SierpinskiProduct,
    constant_function,
    cycle_triangle_function,
    layer_vertices,
    path_mod4_function,
    path_tree_witness_function,
    sierpinski_product,
    z_resolving_set,
)
from .search import (
    EnumerationBudget,
    SierpinskiDimensionReport,
    cycle_triangle_dims,
    enumerate_functions,
    path_tree_formula,
    sierpinski_dims,
    sierpinski_dims_exhaustive,
    sierpinski_dims_formula,
    tree_lower_bound,
    tree_upper_formula,
)

__version__ = "0.1.0"
