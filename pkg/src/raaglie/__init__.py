"""Lyndon bases and Magnus expansions for right-angled Artin groups."""
from .errors import (
    GraphError,
    NonHomogeneous,
    NotAUnit,
    NotInFiltration,
    NotInLieSubalgebra,
    NotLyndon,
    RaagError,
    ResourceLimitError,
    TruncationMismatch,
    WordSyntaxError,
)
from .graph import CommutationGraph, cliques, parse_graph, serialize_graph
from .groupwords import GroupWord, equal, fully_reduce, is_identity, normal_form, parse_word
from .liealg import LyndonCoordinates, expand, graded_rank, lyndon_coordinates, structure_constants
from .lyndon import LyndonTree, enumerate_lyndon, is_lyndon_element, is_lyndon_word, standard_factorization
from .magnus import AtLeast, commutator_word, derivation, filtration_degree, lcs_coordinates, magnus
from .series import clique_polynomial, growth_series, witt_product_check
from .tensor import Polynomial, invert_unit, lie_bracket
from .traces import Trace, canonicalize, enumerate_traces

__version__ = "0.1.0"
