"""thetachi: exact Euler characteristics of theta divisors of spectral-curve
Jacobians, via graded-ring characters and Gamma-product closed forms.
"""

from .arith import (
    DomainError,
    binomial,
    catalan,
    factorial,
    format_rational,
    parse_rational,
)
from .gammaprod import (
    GammaProduct,
    IrrationalResidueError,
    SpectralCurveParams,
    chi_theta_gamma_product,
    chi_theta_generic,
    chi_theta_spectral,
    eval_exact,
    genus,
    reduce,
)
from .gradedring import (
    Prop1Report,
    WeightedSystem,
    ideal_dim,
    monomials_of_degree,
    poly_mul,
    quotient_dims,
    verify_prop1,
    weighted_degree,
)
from .qchar import (
    CharProduct,
    PowerSeries,
    char_poly_ring,
    char_quotient,
    div,
    expand,
    limit_q1,
    mul,
    q_euler,
)

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "IrrationalResidueError",
    "factorial",
    "binomial",
    "catalan",
    "parse_rational",
    "format_rational",
    "CharProduct",
    "PowerSeries",
    "char_poly_ring",
    "char_quotient",
    "mul",
    "div",
    "q_euler",
    "limit_q1",
    "expand",
    "GammaProduct",
    "SpectralCurveParams",
    "genus",
    "reduce",
    "eval_exact",
    "chi_theta_gamma_product",
    "chi_theta_spectral",
    "chi_theta_generic",
    "WeightedSystem",
    "Prop1Report",
    "weighted_degree",
    "monomials_of_degree",
    "poly_mul",
    "ideal_dim",
    "quotient_dims",
    "verify_prop1",
    "__version__",
]
