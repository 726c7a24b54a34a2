"""Resource caps, each overridable through an environment variable.

ELABCAT_ELEMENT_CAP    max group order enumerated by close_generators (65536)
ELABCAT_CATALOG_CAP    max subgroups in one catalog (5000)
ELABCAT_HOM_COUNT_CAP  max estimated morphisms in a materialized category (2000000)
ELABCAT_TERM_CAP       max stored monomials per polynomial (200000)
"""

import os

DEFAULTS = {
    "element_cap": 65536,
    "catalog_cap": 5000,
    "hom_count_cap": 2_000_000,
    "term_cap": 200_000,
}


def cap(name: str) -> int:
    """Current value of a named cap, honoring environment overrides."""
    if name not in DEFAULTS:
        raise KeyError(f"unknown cap {name!r}")
    raw = os.environ.get("ELABCAT_" + name.upper())
    if raw is None:
        return DEFAULTS[name]
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"ELABCAT_{name.upper()} must be an integer, got {raw!r}")
