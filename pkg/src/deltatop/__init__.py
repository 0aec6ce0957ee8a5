"""deltatop: exact regular-open / delta-open set topology engines.

Finite spaces with bit-mask set algebra, rational-endpoint interval sets
on the real line, delta-compactness machinery, map classification, and an
exhaustive theorem-verification suite over enumerated small spaces.
"""

from .realline import (
    Interval,
    IntervalSet,
    Rat,
    closure_r,
    format_interval_set,
    interior_r,
    is_regular_open_r,
    normalize,
    parse_interval_set,
    preimage_square,
    relative_int_cl,
)
from .sets import PtSet, SetFamily, family_is_topology
from .space import FinSpace, SeparationProfile
from .covers import (
    Cover,
    extract_min_subcover,
    fip_check,
    is_delta_compact,
    locally_delta_compact_at,
    minimum_interval_subcover,
)
from .maps import SpaceMap, classify_map
from .theorems import StreamSpec, TheoremReport, run_all, run_theorem, theorem_ids
from .topogen import canonical_form, count_topologies_bruteforce, enumerate_maps, enumerate_spaces

__version__ = "0.1.0"

__all__ = [
    "Cover",
    "FinSpace",
    "Interval",
    "IntervalSet",
    "PtSet",
    "Rat",
    "SeparationProfile",
    "SetFamily",
    "SpaceMap",
    "StreamSpec",
    "TheoremReport",
    "canonical_form",
    "classify_map",
    "closure_r",
    "count_topologies_bruteforce",
    "enumerate_maps",
    "enumerate_spaces",
    "extract_min_subcover",
    "family_is_topology",
    "fip_check",
    "format_interval_set",
    "interior_r",
    "is_delta_compact",
    "is_regular_open_r",
    "locally_delta_compact_at",
    "minimum_interval_subcover",
    "normalize",
    "parse_interval_set",
    "preimage_square",
    "relative_int_cl",
    "run_all",
    "run_theorem",
    "theorem_ids",
]
