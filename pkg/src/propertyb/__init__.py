"""Constructions, verification and bound tables for non-2-colorable uniform
hypergraphs (Property B)."""

from .bounds import (
    BoundError,
    BoundTable,
    CountPrediction,
    build_paper_table,
    eval_expr,
    legacy_table,
    predicted_count,
)
from .constructions import (
    BlockSpec,
    ConstructionError,
    MultiCoreParams,
    abbott_hanson_toft,
    abbott_moser,
    block,
    gaht_k_heuristic,
    generalized_aht,
    mathews_first,
    mathews_second,
    mathews_third,
    modified_block,
    multi_core,
)
from .hypergraph import (
    BLUE,
    RED,
    Coloring,
    Edge,
    HgFormatError,
    Hypergraph,
    HypergraphError,
    canonicalize,
    complete_hypergraph,
    disjoint_union,
    drop_edge,
    format_hg,
    has_monochromatic_edge,
    parse_hg,
    read_hg,
    relabel,
    seed,
    write_hg,
)
from .lowerbounds import (
    Certificate,
    LowerBoundError,
    RsParams,
    admissible_degree_sequences,
    blocked_bound,
    goldberg_lower,
    m5_certificate,
    pair_intersection_cap,
    rs_check,
    rs_integral,
    schonheim,
)
from .recipes import (
    PRESETS,
    Recipe,
    RecipeError,
    build_recipe,
    parse_recipe,
    print_recipe,
    recipe_info,
    stream_count_recipe,
)
from .solver import (
    ColorabilityVerdict,
    SolveBudget,
    VerdictKind,
    decide,
    export_nae_cnf,
    verify_witness,
)

__version__ = "0.1.0"
