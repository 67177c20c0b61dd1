"""Dynamic graph coloring: an exact oracle, a 4-coloring construction for
K5-minor-free graphs, and colorers for larger palettes."""

from .budget import BudgetMode, Mode, budget, color_apex, color_degenerate, color_no_kt
from .core import Coloring, HappyReport, chi, chi_d, is_happy, solve_exact, verify_dynamic
from .exceptions import (
    CycleInput,
    DegeneracyViolation,
    DyncolorError,
    InternalError,
    NotApplicable,
    NotColorable,
    ParseError,
    PreconditionError,
    SolverTimeout,
    TheoremViolation,
)
from .generators import GenSpec, generate
from .graph import (
    Graph,
    Separation,
    SuppressionMap,
    add_edge,
    components,
    contract_edge,
    cut_vertices,
    enumerate_separations,
    is_isomorphic,
    suppress_degree_two,
)
from .io import emit_edgelist, emit_graph6, parse_edgelist, parse_graph6
from .k5free import (
    ReductionTrace,
    color_k5free,
    lift_three_cut,
    merge_order1,
    merge_order2,
    merge_order3,
    select_separation2,
)
from .minors import HalinTag, HalinVerdict, classify_3connected, has_minor, has_topological_minor, is_planar
from .sweep import sweep_compare

__version__ = "0.1.0"
