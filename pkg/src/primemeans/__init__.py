"""Certified computation of prime means.

Computes the arithmetic mean A_n, geometric mean G_n, and ratio A_n/G_n of
the first n primes with guaranteed error radii, derives the exact rational
coefficients of their asymptotic expansions, and verifies a catalog of
explicit inequalities over index ranges with interval-certain verdicts.
"""

from .quantity import DomainError, Quantity, render_quantity
from .sieve import (
    DEFAULT_SEGMENT_ODDS,
    SieveConfig,
    SieveError,
    prime_blocks,
    primes_first,
)
from .kernel import (
    CorruptStateError,
    DerivedQuantities,
    PrimeState,
    advance,
    quantities,
    stream_states,
)
from .series import (
    SeriesError,
    SeriesPoly,
    UntabulatedError,
    cipolla,
    d_expansion,
    d_expansion_in_n,
    eval_series,
    k_sequence,
    r_sequence,
    ratio_expansion,
    render_e_scaled,
)
from .bounds import (
    Basis,
    BoundSpec,
    CatalogError,
    UnknownBoundError,
    Verdict,
    catalog,
    catalog_ids,
    check,
    eval_bound,
    lookup,
    render_catalog_table,
)
from .verifier import (
    CAPACITY_ENV,
    DEFAULT_CAPACITY,
    DEFAULT_LIMIT,
    BoundReport,
    CapacityError,
    CheckpointError,
    Halted,
    MonotoneReport,
    Report,
    VerificationJob,
    VerifierError,
    capacity,
    crossover,
    monotone_check,
    resume,
    run,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # quantity
    "DomainError", "Quantity", "render_quantity",
    # sieve
    "DEFAULT_SEGMENT_ODDS", "SieveConfig", "SieveError",
    "prime_blocks", "primes_first",
    # kernel
    "CorruptStateError", "DerivedQuantities", "PrimeState",
    "advance", "quantities", "stream_states",
    # series
    "SeriesError", "SeriesPoly", "UntabulatedError",
    "cipolla", "d_expansion", "d_expansion_in_n", "eval_series",
    "k_sequence", "r_sequence", "ratio_expansion", "render_e_scaled",
    # bounds
    "Basis", "BoundSpec", "CatalogError", "UnknownBoundError", "Verdict",
    "catalog", "catalog_ids", "check", "eval_bound", "lookup",
    "render_catalog_table",
    # verifier
    "CAPACITY_ENV", "DEFAULT_CAPACITY", "DEFAULT_LIMIT",
    "BoundReport", "CapacityError", "CheckpointError", "Halted",
    "MonotoneReport", "Report", "VerificationJob", "VerifierError",
    "capacity", "crossover", "monotone_check", "resume", "run",
]
