"""Exact scalar partition functions and the linear relations among them."""

from .algebra import RationalPolynomial, TruncatedSeries, gcd_lcm_vec, poly_add_scale, poly_eval, series_divide, series_multiply
from .bernoulli_bell import (
    bell_args_from_generators,
    bernoulli_numbers,
    complete_bell,
    higher_bernoulli_number,
    higher_bernoulli_poly,
    poly_part,
)
from .denumerant import (
    GeneratorVector,
    SignedTerm,
    brute_force_count,
    denumerant,
    denumerant_table,
    eval_signed_term,
    normalize_signed,
)
from .quasipoly import (
    Quasipolynomial,
    WaveDecomposition,
    build_quasipoly,
    check_parity,
    circulator_psi,
    qp_eval_integer,
    wave_decompose,
    wave_eval_real,
)
from .relations import (
    DeltaVector,
    InvalidDelta,
    Relation,
    check_bell_conjecture,
    generate_relation,
    lift_solution,
    numeric_identities,
    relation_continuous_profile,
    validate_delta,
    verify_bernoulli_relations,
    verify_poly_relation,
    verify_relation_integer,
)

__version__ = "0.1.0"
