"""Jets of clutters and principal jets of squarefree monomial ideals.

The package is organised bottom-up: :mod:`jetcover.ideals` (monomial
arithmetic), :mod:`jetcover.clutter` (clutters, graphs, simplicial
complexes), :mod:`jetcover.covers`, :mod:`jetcover.jets`,
:mod:`jetcover.invariants`, and the batch checks in :mod:`jetcover.verify`.
"""

from .clutter import (
    Clutter,
    FVector,
    Graph,
    SimplicialComplex,
    canonicalize,
    clutter_of_ideal,
    complex_from_ideal,
    edge_ideal,
    f_vector,
    induced_subgraph,
    is_bipartite,
    is_chordal,
    neighbor_set,
)
from .covers import (
    KCover,
    cover_ideal,
    irreducible_two_covers,
    is_very_well_covered,
    is_well_covered,
    jet_covers_via_polarization,
    minimal_vertex_covers,
    perfect_matchings,
    symbolic_power,
)
from .errors import (
    ConsistencyError,
    DomainError,
    JetcoverError,
    OrderTooSmallError,
    ResourceLimitError,
    StructuralError,
)
from .ideals import Monomial, MonomialIdeal, depolarize, intersect, minimalize, polarize, power, quotient
from .invariants import (
    BettiTable,
    HilbertSeries,
    LiftingMatrix,
    betti_numbers_hochster,
    dimension_and_multiplicity,
    has_linear_resolution,
    hilbert_series,
    is_cochordal,
    lifting_function,
    lifting_matrix,
    regularity,
    transform_betti,
    transform_f_vector,
)
from .jets import (
    JetClutter,
    JetIdealPresentation,
    jet_clutter,
    jet_ideal_generators,
    jet_variables,
    lifted_cover,
    principal_jet_clutter,
    principal_jet_decomposition,
    principal_jet_ideal,
    principal_jet_via_colon,
)

__version__ = "0.1.0"

__all__ = [
    "BettiTable",
    "Clutter",
    "ConsistencyError",
    "DomainError",
    "FVector",
    "Graph",
    "HilbertSeries",
    "JetClutter",
    "JetIdealPresentation",
    "JetcoverError",
    "KCover",
    "LiftingMatrix",
    "Monomial",
    "MonomialIdeal",
    "OrderTooSmallError",
    "ResourceLimitError",
    "SimplicialComplex",
    "StructuralError",
    "betti_numbers_hochster",
    "canonicalize",
    "clutter_of_ideal",
    "complex_from_ideal",
    "cover_ideal",
    "depolarize",
    "dimension_and_multiplicity",
    "edge_ideal",
    "f_vector",
    "has_linear_resolution",
    "hilbert_series",
    "induced_subgraph",
    "intersect",
    "irreducible_two_covers",
    "is_bipartite",
    "is_chordal",
    "is_cochordal",
    "is_very_well_covered",
    "is_well_covered",
    "jet_clutter",
    "jet_covers_via_polarization",
    "jet_ideal_generators",
    "jet_variables",
    "lifted_cover",
    "lifting_function",
    "lifting_matrix",
    "minimal_vertex_covers",
    "minimalize",
    "neighbor_set",
    "perfect_matchings",
    "polarize",
    "power",
    "principal_jet_clutter",
    "principal_jet_decomposition",
    "principal_jet_ideal",
    "principal_jet_via_colon",
    "quotient",
    "regularity",
    "symbolic_power",
    "transform_betti",
    "transform_f_vector",
    "__version__",
]
