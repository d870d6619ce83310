from .factor import FactorizationError, PrimeFactorization, factor_univariate, is_irreducible
from .forms import (
    PrimeSmithProfile, SmithForm, SmithInvariantError, TransformPair,
    smith_candidate, smith_univariate, smith_wrt_prime,
)

__all__ = [
    "FactorizationError", "PrimeFactorization", "factor_univariate", "is_irreducible",
    "PrimeSmithProfile", "SmithForm", "SmithInvariantError", "TransformPair",
    "smith_candidate", "smith_univariate", "smith_wrt_prime",
]
