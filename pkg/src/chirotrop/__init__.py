"""Exact computation of chirotropical Dressians from rays of the Dressian."""

from .chirotope import (
    Chirotope,
    ChirotopeSet,
    InvalidChirotopeError,
    expand_orbit,
    parse_negative_triple_notation,
    relabel,
    reorient,
    validate,
)
from .cliques import maximal_cliques_bitsets
from .dressian import (
    CompatibilityGraph,
    IngestionError,
    PurityError,
    build_graph,
    chi_rays,
    compute_chirotropical_dressian,
    maximal_cliques,
)
from .fan import Fan, check_two_determined, face_lattice
from .lineality import LinealityBasis, bareiss_rank, equal_mod_lineality, rank_mod_lineality
from .membership import satisfy_eqn, satisfy_eqn_chi
from .relations import ThreeTermRelation, generate_three_term, relations_containing
from .subsets import PlueckerVector, lex_rank, lex_unrank

__version__ = "0.1.0"
