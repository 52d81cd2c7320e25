"""Directed 4-cycles in oriented bipartite graphs and rainbow 4-cycles in colored ones."""

from .constructions import (
    DivisibilityError,
    GenerationError,
    PaddingResult,
    gen_dstar,
    gen_proper_coloring_complete,
    gen_random_colored,
    gen_random_oriented,
    pad_to_multiple_of_three,
)
from .cycles import (
    DirectedC4Certificate,
    RainbowC4Certificate,
    find_directed_c4,
    find_rainbow_c4_exhaustive,
    verify_directed_c4,
    verify_rainbow_c4,
)
from .graphs import (
    SIDE_A,
    SIDE_B,
    Arc,
    ColoredBipartiteGraph,
    Direction,
    Edge,
    OrientedBipartiteGraph,
    color_degree,
    color_neighborhood,
    in_degree,
    out_degree,
    validate,
)
from .harness import VerificationReport, verify_thm9_exhaustive, verify_thm9_random, verify_thm10_random
from .recognize import BlockDecomposition, HypothesisViolation, check_thm9_hypothesis, check_thm10_hypothesis, is_dstar
from .reduction import (
    EarlyRainbow,
    GuidedResult,
    ReductionContext,
    build_reduction,
    extremal_escape,
    find_rainbow_c4_guided,
    lift_directed_c4,
)

__version__ = "0.1.0"
