"""Exact-arithmetic toolkit for Koch chains and their dual line arrangements.

Builds the recursively flattened chain of 2^s + 1 points, certifies its
validity conditions, dualizes it to a simple line arrangement, enumerates all
faces in the Euclidean and projective planes, and machine-checks the face
census (in particular the pentagon counts 3*2^(s-1) - 2s - 1 bounded and
3*2^(s-1) - 3 projective).
"""

from .arrangement import (
    Arrangement,
    ConcurrentLines,
    DuplicateSlope,
    EuclideanCensus,
    Face,
    FaceKind,
    build_arrangement,
    dualize_chain,
    euclidean_census,
    expected_euclidean_pentagons,
    pentagon_recurrence_check,
    verify_euclidean_face_counts,
)
from .chain import (
    Chain,
    ChainValidity,
    ChainValidityError,
    Chirotope,
    DegenerateTriple,
    FlatteningDivergence,
    chirotope,
    dump_chain,
    generate_chain,
    load_chain,
    map_left,
    map_right,
    validate_chain,
)
from .geometry import (
    Line,
    ParallelLines,
    Point,
    Rational,
    Segment,
    dual_of_line,
    dual_of_point,
    format_rational,
    intersect_lines,
    orient,
    parse_rational,
    point_side_of_line,
    segments_cross_properly,
)
from .oracle import (
    arrangement_identities,
    compare_census,
    projective_histogram,
    signvector_census,
)
from .projective import (
    MissingAntipode,
    ProjectiveCensus,
    antipodal_pairs,
    expected_projective_pentagons,
    projective_census,
    verify_projective_face_counts,
)
from .report import CheckResult, VerificationReport

__version__ = "1.0.0"
