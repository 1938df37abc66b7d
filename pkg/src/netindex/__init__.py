"""Degree-based topological indices of silicate, chain silicate, hexagonal,
oxide and honeycomb networks, with exact arithmetic and a verifier for the
published closed forms."""

from .factored import FactoredInteger, fi_log10, fi_mul, fi_pow
from .generators import (
    FAMILIES,
    DimensionError,
    Family,
    LabeledNetwork,
    NetworkSpec,
    gen_chain_silicate,
    gen_hexagonal,
    gen_honeycomb,
    gen_oxide,
    gen_silicate,
    generate,
)
from .graph import (
    DegreePairSpectrum,
    DegreeSpectrum,
    Graph,
    GraphError,
    build_graph,
    degree_pair_spectrum,
    degree_spectrum,
)
from .indices import (
    UndefinedIndexError,
    first_zagreb,
    mult_zagreb_1,
    mult_zagreb_1_star,
    mult_zagreb_2,
    mult_zagreb_2_vertex_form,
    narumi_katayama,
    second_zagreb,
    sum_connectivity,
)

__version__ = "0.1.0"
