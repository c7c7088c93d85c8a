"""Minimal delta-separated clustering of plane point sets.

Partitions points (typically matrix eigenvalues) into the connected
components of the graph whose edges join points at Euclidean distance at
most delta, via three interchangeable algorithms: a quadratic pairwise scan,
sort-and-split for purely real inputs, and a pruned Delaunay triangulation
at O(n log n).
"""

from .delaunay import DelaunayEdge, Triangulation, build
from .delaunay_cluster import cluster_delaunay, pruned_edge_count
from .dsu import ForestDsu, LabelVectorDsu, make_dsu
from .errors import (
    ClusteringError,
    CollinearInputError,
    DuplicatePointError,
    EmptySpectrumError,
    LabelDomainError,
    NonRealSpectrumError,
)
from .genbench import (
    BenchCase,
    BenchRecord,
    Distribution,
    ExponentEstimate,
    exponent_estimates,
    gen_circles,
    gen_squares,
    run_bench,
    write_records_csv,
)
from .naive_cluster import cluster_naive, count_distance_evaluations
from .pipeline import check_labels, cluster_points, generate_points
from .predicates import ArithmeticMode, GeometryKernel, KernelStats, Sign, incircle, orient2d
from .real_cluster import GapVector, cluster_real, gap_vector, prefix_sum
from .spectrum import (
    Clustering,
    PlanePoint,
    Spectrum,
    broadcast_labels,
    deduplicate,
    perturb,
    reduce_conjugate_pairs,
    squared_distance,
)
from .validate import (
    AdmissibilityReport,
    components_refine_admissible,
    is_admissible,
    oracle_components,
)

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityReport",
    "ArithmeticMode",
    "BenchCase",
    "BenchRecord",
    "Clustering",
    "ClusteringError",
    "CollinearInputError",
    "DelaunayEdge",
    "Distribution",
    "DuplicatePointError",
    "EmptySpectrumError",
    "ExponentEstimate",
    "ForestDsu",
    "GapVector",
    "GeometryKernel",
    "KernelStats",
    "LabelDomainError",
    "LabelVectorDsu",
    "NonRealSpectrumError",
    "PlanePoint",
    "Sign",
    "Spectrum",
    "Triangulation",
    "broadcast_labels",
    "build",
    "check_labels",
    "cluster_delaunay",
    "cluster_naive",
    "cluster_points",
    "cluster_real",
    "components_refine_admissible",
    "count_distance_evaluations",
    "deduplicate",
    "exponent_estimates",
    "gap_vector",
    "gen_circles",
    "gen_squares",
    "generate_points",
    "incircle",
    "is_admissible",
    "make_dsu",
    "oracle_components",
    "orient2d",
    "perturb",
    "prefix_sum",
    "pruned_edge_count",
    "reduce_conjugate_pairs",
    "run_bench",
    "squared_distance",
    "write_records_csv",
]
