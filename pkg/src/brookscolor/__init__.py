"""Graph coloring toolkit around Brooks' theorem.

The main entry points are re-exported here; see the submodules for the rest.
"""

from .errors import (BrooksColorError, DisconnectedError, GreedyStuck, InvariantViolation,
                     ParseError, PreconditionError, ScaleRefusal, ValidationError)
from .graph import Graph, is_proper
from .digraph import Digraph
from .formats import parse, serialize, sniff
from .oracle import chi_exact, chi_list_exact, is_f_choosable, is_list_colorable, oracle_report
from .report import STRATEGIES, Certificate, StrategyReport, brooks_bound
from .brooks import color_brooks, find_good_p3, find_obstruction_free_partition, kempe_repair
from .choosability import (brooks_list_color, degree_choose_color, find_independency_tree,
                           gallai_bad_lists, kernel_orient, kernel_whittle)
from .alon_tarsi import at_certify_degree_choosable, eulerian_counts
from .paintability import chi_paint_exact, paint_game_solve
from .structure import classify, is_gallai_tree
from .families import FamilySpec, bounds_report, generate

__version__ = "0.1.0"

__all__ = [
    "BrooksColorError", "DisconnectedError", "GreedyStuck", "InvariantViolation", "ParseError",
    "PreconditionError", "ScaleRefusal", "ValidationError", "Graph", "Digraph", "is_proper",
    "parse", "serialize", "sniff", "chi_exact", "chi_list_exact", "is_f_choosable",
    "is_list_colorable", "oracle_report", "STRATEGIES", "Certificate", "StrategyReport",
    "brooks_bound", "color_brooks", "find_good_p3", "find_obstruction_free_partition",
    "kempe_repair", "brooks_list_color", "degree_choose_color", "find_independency_tree",
    "gallai_bad_lists", "kernel_orient", "kernel_whittle", "at_certify_degree_choosable",
    "eulerian_counts", "chi_paint_exact", "paint_game_solve", "classify", "is_gallai_tree",
    "FamilySpec", "bounds_report", "generate",
]
