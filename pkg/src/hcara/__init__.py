"""hcara: exact rational computation of Caratheodory-type invariants for
convexity restricted to a finite normal set, and for strong convexity by
intersections of polytope translates."""

__version__ = "0.1.0"

from .errors import (
    HcaraError,
    InputError,
    InternalConsistencyError,
    NotMaximalWitnessError,
    PreconditionError,
    SamplingError,
)
from .hconvex import (
    ExclusionAssignment,
    NormalSet,
    PointSet,
    covering_holds,
    excluding_holds,
    h_hull_contains,
    minimal_h_witness,
    support,
)
from .invariants import (
    InvariantReport,
    caratheodory_number,
    cone_number,
    helly_number,
    is_conical_position,
    is_simplex_with_origin,
    positive_hull_contains,
    relaxed_cone_number,
)
from .linear import Vector, dot, rank, solve_linear
from .lp import LinearProgram, LpOutcome, LpStatus, solve
from .strong import (
    Polytope,
    fits_in_translate,
    guard_assignment,
    h_subset_strong_check,
    minimal_strong_witness,
    strong_hull_contains,
)
from .witness import (
    WitnessReport,
    cone_witness_points,
    helly_witness_points,
    validate_witness,
)

__all__ = [
    "__version__",
    "HcaraError",
    "InputError",
    "PreconditionError",
    "NotMaximalWitnessError",
    "SamplingError",
    "InternalConsistencyError",
    "Vector",
    "dot",
    "rank",
    "solve_linear",
    "LinearProgram",
    "LpOutcome",
    "LpStatus",
    "solve",
    "NormalSet",
    "PointSet",
    "ExclusionAssignment",
    "support",
    "h_hull_contains",
    "covering_holds",
    "excluding_holds",
    "minimal_h_witness",
    "InvariantReport",
    "positive_hull_contains",
    "is_simplex_with_origin",
    "is_conical_position",
    "helly_number",
    "cone_number",
    "relaxed_cone_number",
    "caratheodory_number",
    "WitnessReport",
    "helly_witness_points",
    "cone_witness_points",
    "validate_witness",
    "Polytope",
    "fits_in_translate",
    "strong_hull_contains",
    "minimal_strong_witness",
    "guard_assignment",
    "h_subset_strong_check",
]
