"""Spread of outerplanar graphs: eigenvalues, certificates and extremal search."""

from .bounds import (
    AlterationResult,
    LemmaCheck,
    b_set_diagnostic,
    bound_suite,
    degree_bound_diagnostic,
    entry_estimate_residual,
    refined_eigenvalue_prediction,
    star_reattach,
)
from .canon import canonical_form, canonical_graph, canonical_labeling
from .codec import Graph6Error, graph6_decode, graph6_encode, write_report
from .enumeration import count_outerplanar, enumerate_outerplanar
from .graph import (
    Graph,
    LinearForestSpec,
    complete,
    cycle,
    empty,
    fan,
    join,
    linear_forest,
    parse_graph,
    path,
    star,
    wheel,
)
from .minors import K4, K23, MinorWitness, find_minor, has_minor, is_outerplanar
from .search import (
    FanFamilyResult,
    SearchResult,
    conjecture_scan,
    exhaustive_max_spread,
    fan_family_max,
    local_search,
    spectral_radius_scan,
)
from .spectra import (
    ConvergenceError,
    ExtremalPairs,
    Spectrum,
    SpreadReport,
    eig_symmetric,
    extremal_pairs,
    fan_spread_lower_bound,
    rayleigh,
    spread,
)

__version__ = "0.1.0"
