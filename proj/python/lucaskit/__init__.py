"""Binomial coefficients modulo a prime via symmetry reductions."""

from ._lucaskit import (  # noqa: F401
    __version__,
    bench,
    binom_exact,
    binom_mod,
    classify_region,
    digits,
    duality_check,
    extended_factors,
    fib_mod,
    harmonic_mod,
    is_prime,
    leibniz_prime_test,
    mod_inverse,
    reduce_canonical,
    reduce_trace,
    triangle,
    verify_congruence,
    verify_identity,
)
