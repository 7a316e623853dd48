"""Well-covered graphs, WCW(G) weight spaces and hardness reductions."""

from ._core import (
    Budget,
    Cnf,
    Graph,
    ParseError,
    ResourceExhausted,
    contains_cycle,
    dsat_to_gs,
    is_3sat,
    is_bipartite,
    is_dsat,
    is_generating,
    is_k1t_free,
    is_relating,
    is_usat,
    is_well_covered,
    maximal_independent_sets,
    parse_dimacs,
    parse_graph,
    sat_to_usat,
    serialize_dimacs,
    serialize_graph,
    solve,
    threesat_to_dsat,
    usat_to_re,
    wcw_basis,
)

__all__ = [name for name in dir() if not name.startswith("_")]
