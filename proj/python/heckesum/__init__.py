"""Character sums over Z[i] and Z[omega]: residue symbols, Gauss sums,
smooth-weight transforms, and the S_j(X,Y) experiments."""

from ._core import (
    compare,
    count_primary,
    direct_sum,
    divmod,
    euler_phi,
    factor,
    factorization_check,
    format_elt,
    gauss_sum,
    gcd,
    m0_term,
    main_term,
    mobius,
    norm,
    poisson_check,
    symbol,
    to_primary,
    transform,
    zeta2,
)

__all__ = [
    "compare", "count_primary", "direct_sum", "divmod", "euler_phi", "factor",
    "factorization_check", "format_elt", "gauss_sum", "gcd", "m0_term",
    "main_term", "mobius", "norm", "poisson_check", "symbol", "to_primary",
    "transform", "zeta2",
]
