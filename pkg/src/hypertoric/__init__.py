"""Toric ideals of hypergraphs: bases, splitting sets and degree certificates."""

from .balanced import (
    BalancedEdgeSet,
    Binomial,
    balanced_of_binomial,
    binomial_of,
    is_balanced,
    is_primitive,
)
from .families import (
    complete_kpartite,
    cumulant_hypergraph,
    group_based_16,
    group_based_walk,
    no_three_way,
    printed_walk_233,
    slim_table_walk,
)
from .hypergraph import Hypergraph
from .multiset import Multiset
from .splitting import (
    Decomposition,
    DegreeCertificate,
    check_decomposition,
    check_lemma_proper_split,
    check_nonuniform_conditions,
    find_degree_certificate,
    find_splitting_sets,
    rewrite_with_decomposition,
)
from .toric import (
    IncompleteResult,
    graver_basis,
    graver_equals_markov,
    is_indispensable,
    markov_basis,
    markov_width,
)

__all__ = [
    "BalancedEdgeSet",
    "Binomial",
    "Decomposition",
    "DegreeCertificate",
    "Hypergraph",
    "IncompleteResult",
    "Multiset",
    "balanced_of_binomial",
    "binomial_of",
    "check_decomposition",
    "check_lemma_proper_split",
    "check_nonuniform_conditions",
    "complete_kpartite",
    "cumulant_hypergraph",
    "find_degree_certificate",
    "find_splitting_sets",
    "graver_basis",
    "graver_equals_markov",
    "group_based_16",
    "group_based_walk",
    "is_balanced",
    "is_indispensable",
    "is_primitive",
    "markov_basis",
    "markov_width",
    "no_three_way",
    "printed_walk_233",
    "rewrite_with_decomposition",
    "slim_table_walk",
]
