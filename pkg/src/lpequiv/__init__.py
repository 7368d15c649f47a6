"""Equivalence group of Legendre pairs: algebra, orbits, verification and search."""

from .group import (
    DElement,
    GGElement,
    PairPermutation,
    d_act_index,
    d_act_sequence,
    d_compose,
    d_inverse,
    gg_act_pair,
    gg_compose,
    gg_enumerate,
    gg_identity,
    gg_inverse,
    gg_order,
    to_pair_permutation,
)
from .modring import phi, unit_inverse, units
from .orbits import OrbitReport, are_equivalent, canonical_pair, decimation_class, pair_orbit
from .search import ClassificationReport, SearchConfig, classify_lps, enumerate_lps, search_canonical_only
from .seqops import (
    Sequence,
    SequencePair,
    column_sum,
    cyclic_shift,
    decimate,
    is_legendre_pair,
    paf,
    paf_spectrum,
    parse_pair,
    parse_sequence,
)
from .verifier import TheoremCertificate, run_checks

__version__ = "0.1.0"
