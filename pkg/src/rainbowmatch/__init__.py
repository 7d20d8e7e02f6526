"""Rainbow numbers of matchings: exact values, extremal colorings, and the
matching-theoretic machinery (maximum matchings, Ore deficiency,
Gallai-Edmonds decomposition, extremal numbers) they rest on, each backed
by brute-force oracles at small scale."""

from .antiramsey import (
    OracleResult,
    RbRecord,
    SamplingReport,
    exact_f_oracle,
    rb_formula,
    rb_table,
    verify_lower_bound,
    verify_upper_bound_sampled,
)
from .extremal import (
    ExtremalWitness,
    brute_force_ext,
    brute_force_ext_bipartite,
    ext_2k_case,
    ext_bipartite_matching,
    ext_matching,
    ext_value,
)
from .gallai import GEDecomposition, StructureReport, brute_force_D, decompose, verify_structure
from .graphcore import (
    EdgeColoring,
    FormatError,
    Graph,
    GuardError,
    Matching,
    complete_graph,
    parse_coloring,
    parse_graph,
    serialize_coloring,
    serialize_graph,
)
from .matching import (
    BipartitionedGraph,
    MatchingError,
    bipartite_deficiency,
    is_factor_critical,
    matching_number,
    max_matching,
    near_perfect_matching_avoiding,
)
from .rainbow import (
    GadgetColoring,
    RainbowResult,
    complete_gadget,
    gadget_coloring,
    has_rainbow_k_matching,
    lower_bound_coloring,
    max_rainbow_matching,
    representative_subgraph,
    sweep_completions,
)

__version__ = "0.1.0"
