"""Parameter-free line detection from raster images via skeleton graphs.

The pipeline binarizes an image, thins it to a one-pixel-wide skeleton,
builds a pixel adjacency graph, simplifies junction cliques, and
segments the result into open and cycle paths whose edges partition the
graph. See the README for the CLI and the JSON/SVG output formats.
"""

from .errors import (
    ContractViolationError,
    DecodeError,
    DegenerateHistogramError,
    FormatError,
    InternalInvariantError,
    InvalidNodeError,
    InvalidReferenceError,
    SkeletraceError,
)
from .export import SvgStyle, parse_json, to_json, to_svg
from .graph import Edge, Graph, edge_key
from .pipeline import (
    DetectionResult,
    Metrics,
    SubgraphRecord,
    compute_metrics,
    detect_from_gray,
    detect_from_skeleton,
)
from .raster_io import (
    BinaryImage,
    GrayImage,
    binarize_fixed,
    binarize_otsu,
    invert,
    load_gray,
    otsu_threshold,
)
from .segment import PathKind, PathSeq, SegmentationOutcome, segment_subgraph, verify_span
from .simplify import (
    NodeClass,
    SimplifiedSubgraph,
    classify_nodes,
    junction_triangles,
    select_removable_edges,
    simplify_subgraph,
)
from .skeleton_graph import (
    DEFAULT_SPECKLE_THRESHOLD,
    SkeletonGraph,
    SubgraphSet,
    build_skeleton_graph,
    split_and_despeckle,
)
from .thinning import thin_zhang_suen

__version__ = "0.1.0"

__all__ = [
    "BinaryImage",
    "ContractViolationError",
    "DEFAULT_SPECKLE_THRESHOLD",
    "DecodeError",
    "DegenerateHistogramError",
    "DetectionResult",
    "Edge",
    "FormatError",
    "Graph",
    "GrayImage",
    "InternalInvariantError",
    "InvalidNodeError",
    "InvalidReferenceError",
    "Metrics",
    "NodeClass",
    "PathKind",
    "PathSeq",
    "SegmentationOutcome",
    "SimplifiedSubgraph",
    "SkeletonGraph",
    "SkeletraceError",
    "SubgraphRecord",
    "SubgraphSet",
    "SvgStyle",
    "binarize_fixed",
    "binarize_otsu",
    "build_skeleton_graph",
    "classify_nodes",
    "compute_metrics",
    "detect_from_gray",
    "detect_from_skeleton",
    "edge_key",
    "invert",
    "junction_triangles",
    "load_gray",
    "otsu_threshold",
    "parse_json",
    "segment_subgraph",
    "select_removable_edges",
    "simplify_subgraph",
    "split_and_despeckle",
    "thin_zhang_suen",
    "to_json",
    "to_svg",
    "verify_span",
]
