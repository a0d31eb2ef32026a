"""Action graphs for Catalan-type integer sequences.

Build the classic, Fuss-Catalan and super Catalan graph families, check
them against the generalized action graph axioms, test arbitrary sequences
for feasibility, and verify the super Catalan n-table recurrences.
"""

from .axioms import GateReport, check_axiom1, check_axiom2, check_axiom3, check_axioms, gate
from .builders import (
    GraphFamily,
    PathRules,
    build_by_rules,
    build_classic,
    build_fuss,
    build_super,
)
from .errors import (
    ActionGraphError,
    NonIntegralEntry,
    NonIntegralGrowth,
    NotCoprimeError,
    RuleMissing,
    SizeLimitExceeded,
    UnknownVertex,
)
from .graph import (
    CondensedGraph,
    ExpandedGraph,
    canonicalize,
    census,
    condense,
    count_paths,
    expand,
    iso_shifted,
    leaves_all_labeled,
    subtree_at,
)
from .inference import InferenceReport, certify_infeasible, infer_rules
from .ntables import NTable, compute_ntable, predict_next_super, predict_ntable, verify_conjectures
from .sequences import (
    SequenceSpec,
    catalan,
    catalan_triangle,
    fuss_catalan,
    internal_triangles,
    sequence_values,
    strict_cat,
    super_catalan,
    weak_cat,
)

__version__ = "0.1.0"
