"""Graded Betti numbers, Groebner bases and uniform bound verification for
homogeneous ideals over a prime field."""

from .polyring import (
    GREVLEX,
    LEX,
    MonomialOrder,
    Poly,
    PolyRing,
    apply_linear_change,
    format_poly,
    order_by_name,
)
from .groebner import (
    GBasis,
    Ideal,
    QuotientBasis,
    buchberger_iteration,
    divide,
    groebner_basis,
    ideal_intersection,
    ideal_quotient,
    ideal_quotient_ideal,
    ideals_equal,
    initial_exponents,
    irrelevant_ideal,
    normal_form,
    reduced_gb,
    s_polynomial,
    saturation,
    truncated_initial_generators,
)
from .resolution import (
    BettiTable,
    IncompleteTableError,
    TaylorComplex,
    derived_invariants,
    format_betti,
    koszul_betti,
    minimize_taylor,
    monomial_betti,
    taylor_complex,
    truncate_ideal,
)
from .invariants import (
    FilterVerdict,
    GenericityError,
    InvariantBundle,
    SectionResult,
    alpha_of,
    borel_fixed_test,
    filter_regular_test,
    frac_reg,
    generic_section,
    gin,
    invariant_bundle,
    socle_degrees,
)
from .verifier import (
    Bound,
    BoundReport,
    CheckContext,
    InstanceSpec,
    check_coroll_pd_reg,
    check_coroll_reg,
    check_coroll_syz_reg,
    check_lemma_reduction,
    check_mccullough,
    check_remark_deg,
    check_semicontinuity_and_taylor,
    check_thm_jason,
    check_thm_lc,
    check_thm_prime,
    check_thm_syz,
    generate_instance,
    run_all_checks,
    run_corpus,
)
from .ideal_io import ParseError, format_ideal, parse_ideal

__version__ = "0.1.0"
