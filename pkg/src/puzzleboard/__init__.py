"""Checkerboard calibration patterns with per-edge position encoding.

The package constructs 501x501-piece coded checkerboards, renders them as
printable vector graphics or synthetic camera views, and detects/decodes
them in grayscale images, recovering globally identified corner
correspondences even under occlusion and at a few pixels per checkerboard
edge.
"""

from .codec import (
    BOARD_SIZE,
    UNKNOWN,
    EDGE_CORRECT,
    EDGE_INCORRECT,
    EDGE_UNREAD,
    BoardCode,
    CollisionReport,
    DeBruijnRing,
    DecodeResult,
    DecodeStatus,
    HammingProfile,
    ObservedCode,
    RingSearchError,
    ValidationReport,
    compose_board,
    decode_position,
    expected_bits,
    fold_and_vote,
    generate_ring,
    hamming_profile,
    load_default_rings,
    map_corner,
    optimize_ring_pair,
    orientation_collisions,
    rotate_observed,
    validate_subperfect,
)
from .image import GrayImage, read_image, write_image
from .render import (
    BoardGeometry,
    board_geometry,
    export_svg,
    ground_truth,
    homography_for_view,
    render_view,
)
from .detector import (
    Corner,
    ResponseMap,
    centrosymmetric_test,
    find_corners,
    hessian_response,
)
from .grid import (
    CandidateEdge,
    LatticeComponent,
    build_forest,
    classify_neighbors,
    edge_weight,
    nearest_neighbors,
)
from .pipeline import (
    ComponentResult,
    DetectionResult,
    DetectorConfig,
    decode_component,
    detect,
    sample_bits,
)

__version__ = "0.1.0"

__all__ = [
    "BOARD_SIZE",
    "UNKNOWN",
    "EDGE_CORRECT",
    "EDGE_INCORRECT",
    "EDGE_UNREAD",
    "BoardCode",
    "BoardGeometry",
    "CandidateEdge",
    "CollisionReport",
    "ComponentResult",
    "Corner",
    "DeBruijnRing",
    "DecodeResult",
    "DecodeStatus",
    "DetectionResult",
    "DetectorConfig",
    "GrayImage",
    "HammingProfile",
    "LatticeComponent",
    "ObservedCode",
    "ResponseMap",
    "RingSearchError",
    "ValidationReport",
    "board_geometry",
    "build_forest",
    "centrosymmetric_test",
    "classify_neighbors",
    "compose_board",
    "decode_component",
    "decode_position",
    "detect",
    "edge_weight",
    "expected_bits",
    "export_svg",
    "find_corners",
    "fold_and_vote",
    "generate_ring",
    "ground_truth",
    "hamming_profile",
    "hessian_response",
    "homography_for_view",
    "load_default_rings",
    "map_corner",
    "nearest_neighbors",
    "optimize_ring_pair",
    "orientation_collisions",
    "read_image",
    "render_view",
    "rotate_observed",
    "sample_bits",
    "validate_subperfect",
    "write_image",
    "__version__",
]
