"""Finite commutative semirings and the coarse lower topology on their
ideal spectra (Iseki spaces), with exhaustive small-model verification."""

from .errors import (
    AxiomViolation,
    ContractionFails,
    EmptyFamily,
    HypothesisUnmet,
    ImproperIdeal,
    InvalidHomomorphism,
    IsekiError,
    NoMaximalIdeal,
    NotSurjective,
    NoUnitDecomposition,
    ParseError,
    RangeError,
    SizeLimitExceeded,
    SpectrumTooLarge,
)
from .semiring import (
    FiniteSemiring,
    Homomorphism,
    bourne_quotient,
    direct_product,
    nontrivial_idempotents,
    validate_homomorphism,
    validate_semiring,
)
from .enumeration import enumerate_semirings
from .ideals import (
    Ideal,
    IdealClassification,
    all_ideals,
    classify,
    generated_ideal,
    ideal_from_mask,
    ideal_from_members,
    intersect_ideals,
    jacobson_radical,
    maximal_cover,
    min_generators,
    product_ideals,
    radical,
    radical_via_primes,
    sum_ideals,
)
from .topology import (
    ClosedFamily,
    Spectrum,
    SpectrumClass,
    check_connected,
    check_fg_spectrum_maximals,
    check_irreducible_upsets,
    check_quasi_compact,
    check_sober,
    check_t0,
    check_t1,
    closed_family,
    closure,
    idempotent_from_disconnection,
    parse_class,
    spectrum,
    strong_disconnection_witness,
    up_set,
    verify_upset_laws,
)

__version__ = "0.1.0"
