"""Exact arithmetic for the summatory totient function and its
prime-restricted pieces: tables, sublinear summation, identity
verification, and main-term error profiles."""

from .asymptotics import (
    QUANTITIES,
    ErrorRecord,
    average_profile,
    cumulative_profile,
    delta_error_profile,
    main_term_constant,
    main_term_constant_via_series,
)
from .config import Config, apply_overrides, load_config
from .errors import CapacityError
from .identities import (
    SUITES,
    BigRational,
    VerifyReport,
    cumulative_delta_closed,
    gcd_identity_sides,
    ogf_lhs,
    ogf_rhs,
    omega_identity_sides,
    verify_suite,
)
from .restricted import (
    RestrictedSumResult,
    delta_direct,
    delta_residue,
    delta_step,
    delta_via_psi,
    restricted_sums,
    upsilon,
)
from .sieve import (
    MEMORY_CEILING,
    FactorSieve,
    build_sieve,
    factorize,
    is_prime,
    omega,
    phi,
    phi_from_factorization,
    primes_up_to,
)
from .summatory import (
    DESK_CEILING,
    PI_SQUARED,
    PsiCache,
    divisor_blocks,
    exact_array_sum,
    psi_fast,
    psi_main_term,
    psi_naive,
)

__version__ = "0.1.0"

__all__ = [
    "BigRational",
    "CapacityError",
    "Config",
    "DESK_CEILING",
    "ErrorRecord",
    "FactorSieve",
    "MEMORY_CEILING",
    "PI_SQUARED",
    "PsiCache",
    "QUANTITIES",
    "RestrictedSumResult",
    "SUITES",
    "VerifyReport",
    "apply_overrides",
    "average_profile",
    "build_sieve",
    "cumulative_delta_closed",
    "cumulative_profile",
    "delta_direct",
    "delta_error_profile",
    "delta_residue",
    "delta_step",
    "delta_via_psi",
    "divisor_blocks",
    "exact_array_sum",
    "factorize",
    "gcd_identity_sides",
    "is_prime",
    "load_config",
    "main_term_constant",
    "main_term_constant_via_series",
    "ogf_lhs",
    "ogf_rhs",
    "omega",
    "omega_identity_sides",
    "phi",
    "phi_from_factorization",
    "primes_up_to",
    "psi_fast",
    "psi_main_term",
    "psi_naive",
    "restricted_sums",
    "upsilon",
    "verify_suite",
    "__version__",
]
