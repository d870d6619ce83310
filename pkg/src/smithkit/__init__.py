"""Exact minors, Smith forms and the Smith-form equivalence test for
multivariate polynomial matrices over QQ or GF(p)."""

from .polycore import (
    GF, QQ, Polynomial, PrimeField, RationalField, Residue, VariableContext,
    divides, exact_div, poly_divrem, poly_gcd, poly_gcd_many, substitute,
)
from .ideal import (
    IdealBasis, NotReducedError, NotUnitIdealError, groebner, is_unit_ideal, normal_form,
    unit_cofactors,
)
from .polymatrix import (
    ElementaryOp, MinorProfile, MinorTable, PolyMatrix, PreconditionError, apply_elementary,
    d_chain, determinant, is_unimodular, minors_of_order, rank, reduced_minor_profile,
)
from .smith import (
    FactorizationError, PrimeFactorization, PrimeSmithProfile, SmithForm, SmithInvariantError,
    TransformPair, factor_univariate, is_irreducible, smith_candidate, smith_univariate,
    smith_wrt_prime,
)
from .equivalence import (
    EQUIVALENT, NOT_EQUIVALENT, PRECONDITION_VIOLATED, EquivalenceReport, OrderRecord,
    check_equivalence_invariants, decide, random_smith_instance, random_unimodular,
    verify_cauchy_binet, verify_multiplicativity,
)
from .cli.parser import ParseError, parse_polynomial
from .cli.printer import format_polynomial
from .cli.matrixfile import MatrixDocument, format_matrix_document, parse_matrix_file

__version__ = "0.1.0"
