"""Exact operator algebra with pq - qp = c, and verification of the
Euler/Bernoulli bracket identities it supports.

The package keeps every computation over the Gaussian rationals with the
central symbol c formal, so identity checks are equalities of normal forms,
not floating-point comparisons.  Three independent realizations back each
other up: the symbolic normal-ordering engine, the shift action on
polynomials, and truncated oscillator matrices over numpy.
"""

from .report import ERROR, FAIL, PASS, VerificationReport, reports_to_json, run_check
from .scalars import (
    CPoly,
    GaussianRational,
    I,
    MINUS_I,
    NonDivisible,
    ONE,
    Rational,
    ZERO,
    format_rational,
    parse_cpoly,
    parse_gaussian,
    parse_rational,
)
from .sequences import (
    RatPoly,
    bernoulli_number,
    euler_at_half,
    euler_number,
    euler_polynomial,
    euler_zero,
    kappa,
    lam,
    shifted_euler,
    solve_midpoint,
)
from .weyl import (
    NonTerminatingSeries,
    WeylElement,
    anticommutator,
    commutator,
    hadamard_conjugate,
    hamiltonian,
    left_nested_commutator,
    monomial,
    nested_anticommutator,
    nested_commutator,
    p_op,
    parse_element,
    poly_of_element,
    q_op,
    scalar,
    shifted_nested_anticomm,
)
from .realization import (
    PreconditionViolation,
    XPoly,
    apply_element,
    monomial_anticommutator_action,
    monomial_commutator_action,
    validate_reordering,
)
from .oscillator import (
    OscillatorMatrices,
    build_operators,
    element_to_matrix,
    safe_margin,
)
from .suites import (
    SELECTORS,
    b_sum,
    combinatorial_sums,
    extract_convolution_coefficients,
    random_poly_pair,
    run_suite,
    sequence_tables,
    standard_conjugation_fixtures,
    trinomial_sum,
    verify_bender,
    verify_binomial,
    verify_exp_series,
    verify_figueira,
    verify_function_identities,
    verify_mccoy,
    verify_pain,
    verify_reciprocal,
    verify_superoperators,
)

__version__ = "0.1.0"
