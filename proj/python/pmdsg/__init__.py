"""Generalized p-mean densest subgraph toolkit."""

from ._pmdsg import (
    FWState,
    Graph,
    IterState,
    PeelResult,
    SimplePPResult,
    bickle_graph,
    brute_force_opt,
    degeneracy_maxcore,
    f_p,
    frank_wolfe,
    greedy_p,
    greedy_pp,
    lazy_greedy_p,
    m_p,
    round_fractional,
    simple_greedy_order,
    simple_greedy_p,
    simple_pp,
    x3c_decide,
)

__all__ = [
    "FWState",
    "Graph",
    "IterState",
    "PeelResult",
    "SimplePPResult",
    "bickle_graph",
    "brute_force_opt",
    "degeneracy_maxcore",
    "f_p",
    "frank_wolfe",
    "greedy_p",
    "greedy_pp",
    "lazy_greedy_p",
    "m_p",
    "round_fractional",
    "simple_greedy_order",
    "simple_greedy_p",
    "simple_pp",
    "x3c_decide",
]
