"""Counting workbench for short paths in maximal outerplanar graphs."""

from .graphs import (
    PathCopy,
    SimpleGraph,
    count_p4_via_degrees,
    count_paths,
    count_paths_through,
    count_triangles,
    format_graph_text,
    iter_paths,
    parse_graph_text,
)
from .triangulations import (
    ChordSides,
    DualEdge,
    DualTree,
    RecognitionError,
    Triangulation,
    balanced_chord,
    chord_sides,
    degree_two_vertices,
    dual_tree,
    faces_of,
    format_triangulation_text,
    parse_triangulation_text,
    recognize_mop,
    recognize_mop_labeled,
    to_graph,
    tree_split_edge,
    validate_triangulation,
)
from .enumeration import (
    CanonicalCode,
    canonical_code,
    class_codes,
    enumerate_classes,
    enumerate_labeled,
    shard,
    triangulation_from_code,
)
from .constructions import EarPlacement, eared_fan, fan, p5_extremal, p6_extremal
from .crossing import (
    CrossingReport,
    CrossingType,
    classify_crossing,
    count_crossing,
    count_crossing_paths,
    decompose_count,
)
from .experiments import (
    asymptotic_scan,
    crossing_suite,
    f_op,
    p6_lower_bound_report,
    per_vertex_bound_check,
    verify_p3_suite,
    verify_p4_suite,
)
from .report import ExperimentRecord, all_passed, write_csv, write_jsonl

__version__ = "0.1.0"
