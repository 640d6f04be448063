"""Regular primes by two exact routes: Bernoulli numerators and h^- of Q(zeta_p)."""

__version__ = "0.1.0"

from kummer.arith import BigComplex, Polynomial, cyclotomic_polynomial, resultant
from kummer.bernoulli import (
    BernoulliTable,
    IrregularPair,
    bernoulli,
    bernoulli_mod,
    bernoulli_table,
    is_regular_bernoulli,
    vsc_check,
)
from kummer.characters import (
    CharacterValue,
    DirichletCharacter,
    characters_mod,
    chi,
    gauss_sum,
    gen_bernoulli_b1,
    primitive_root,
)
from kummer.classnumber import (
    HMinusResult,
    h_minus_exact,
    h_minus_numeric,
    is_regular_classnumber,
    regularity_crosscheck,
)
from kummer.cycfield import (
    CycInt,
    SplittingData,
    cyc_mul,
    cyc_norm,
    cyclotomic_unit,
    fermat_factorization_check,
    galois_apply,
    lambda_check,
    splitting_data,
)
from kummer.lseries import LValue, l_one_closed, l_one_series, l_product

__all__ = [
    "BernoulliTable",
    "BigComplex",
    "CharacterValue",
    "CycInt",
    "DirichletCharacter",
    "HMinusResult",
    "IrregularPair",
    "LValue",
    "Polynomial",
    "SplittingData",
    "bernoulli",
    "bernoulli_mod",
    "bernoulli_table",
    "characters_mod",
    "chi",
    "cyc_mul",
    "cyc_norm",
    "cyclotomic_polynomial",
    "cyclotomic_unit",
    "fermat_factorization_check",
    "galois_apply",
    "gauss_sum",
    "gen_bernoulli_b1",
    "h_minus_exact",
    "h_minus_numeric",
    "is_regular_bernoulli",
    "is_regular_classnumber",
    "l_one_closed",
    "l_one_series",
    "l_product",
    "lambda_check",
    "primitive_root",
    "regularity_crosscheck",
    "resultant",
    "splitting_data",
    "vsc_check",
]
