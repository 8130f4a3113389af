"""Graphs on finite semigroups and their completeness/equality criteria."""

from .characterizations import (
    TheoremId,
    VerificationReport,
    chain_condition,
    gamma_complete_pred,
    gamma_eq_pc_pred,
    gamma_eq_pow_pred,
    pc_complete_pred,
    pe_complete_pred,
    pe_eq_gamma_pred,
    pe_eq_pc_pred,
    pe_eq_pow_pred,
    pow_complete_pred,
    pow_eq_pc_pred,
    verify,
    verify_all,
)
from .constructors import (
    FamilySpec,
    build,
    make_brandt,
    make_cyclic_group,
    make_direct_product,
    make_monogenic,
    make_zn_mult,
    parse_construct,
    signs_semigroup,
)
from .core import (
    ElementSet,
    MonogenicProfile,
    Semigroup,
    cyclic_subgroups,
    generated,
    has_cpxcp_subgroup,
    idempotents,
    is_monogenic,
    load_semigroup,
    maximal_subgroup_at,
    monogenic_profile,
    product,
    s_f_partition,
    validate_table,
)
from .enumeration import CensusConfig, enumerate_semigroups, fuzz_theorems
from .graphs import (
    GraphKind,
    SimpleGraph,
    commuting_graph,
    cyclic_graph,
    enhanced_power_graph,
    export_graph,
    graphs_equal,
    is_complete,
    is_spanning_subgraph,
    power_graph,
)

__version__ = "0.1.0"
