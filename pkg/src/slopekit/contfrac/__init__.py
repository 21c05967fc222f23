from .core import (
    CLAIM1_ROWS,
    ContFrac,
    ContFracError,
    ZeroDenominator,
    cf_equivalent,
    cf_eval,
    claim1_normalize,
    claim1_row,
    in_claim1_range,
    reduced_fraction,
    simple_cf,
    two_bridge_relation,
)
from .fourplat import FourPlat, linking_number
from .hatcher_thurston import all_even_expansion, expansion_slopes, expansions, ht_boundary_slopes

__all__ = [
    "CLAIM1_ROWS",
    "ContFrac",
    "ContFracError",
    "FourPlat",
    "ZeroDenominator",
    "all_even_expansion",
    "cf_equivalent",
    "cf_eval",
    "claim1_normalize",
    "claim1_row",
    "expansion_slopes",
    "expansions",
    "ht_boundary_slopes",
    "in_claim1_range",
    "linking_number",
    "reduced_fraction",
    "simple_cf",
    "two_bridge_relation",
]
