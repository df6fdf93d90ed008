from .arith import (
    GammaDecomposition,
    IntPoly,
    Rational,
    basis_decompose,
    multiplicity_at_minus_one,
    poly_div_exact,
    poly_eval_rational,
)

__all__ = [
    "GammaDecomposition", "IntPoly", "Rational", "basis_decompose",
    "multiplicity_at_minus_one", "poly_div_exact", "poly_eval_rational",
]
