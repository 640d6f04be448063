"""L(1, chi) for characters mod p: Gauss-sum closed form and a series oracle."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from kummer.arith import BigComplex, big_prod, big_sum, is_prime
from kummer.bernoulli import bernoulli
from kummer.characters import DirichletCharacter, Subset, characters_mod, chi, gauss_sum

DEFAULT_BITS = 192

# number of Bernoulli correction terms in the digamma tail
_TAIL_TERMS = 8


@dataclass(frozen=True)
class LValue:
    chi_index: int
    value: BigComplex
    route: Literal["closed_form", "series"]
    precision_bits: int


def _require_nontrivial(character: DirichletCharacter) -> None:
    if character.is_trivial:
        raise ValueError("L(1,chi_0) diverges; excluded per the paper's product over nontrivial characters")


def l_one_closed(character: DirichletCharacter, precision_bits: int = DEFAULT_BITS) -> LValue:
    """L(1, chi) = -(1/p) * sum_{i=1}^{p-1} tau_i(chi) * log(1 - omega^-i)."""
    _require_nontrivial(character)
    p = character.modulus
    bits = precision_bits
    terms = []
    for i in range(1, p):
        arg = 1 - BigComplex.root_of_unity(-i, p, bits)
        terms.append(gauss_sum(character, i, bits) * arg.log())
    value = big_sum(terms, bits).scale(Fraction(-1, p))
    return LValue(character.index, value, "closed_form", bits)


def _tail_remainder(p: int, k: int) -> float:
    # |digamma remainder| <= first omitted term, for each residue a; y >= k
    b = abs(bernoulli(2 * _TAIL_TERMS + 2))
    per_residue = float(b) / ((2 * _TAIL_TERMS + 2) * float(k) ** (2 * _TAIL_TERMS + 2))
    return per_residue * (p - 1) / p


def l_one_series(character: DirichletCharacter, tolerance: float) -> LValue:
    """Direct sum of chi(n)/n over n <= K*p plus the exact tail.

    Since sum_a chi(a) = 0 the tail after K full periods equals
    -(1/p) * sum_a chi(a) * digamma(K + a/p); the digamma is taken from
    its asymptotic expansion, whose remainder is bounded by the first
    omitted term.  K is the smallest value (>= 4) that pushes that
    remainder under tolerance/4; the bound is folded into the error.
    """
    _require_nontrivial(character)
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    p = character.modulus
    bits = max(64, math.ceil(-math.log2(tolerance)) + 40 + p.bit_length())
    k = 4
    while _tail_remainder(p, k) > tolerance / 4:
        k += 1

    head = big_sum(
        (chi(character, n).to_complex(bits).scale(Fraction(1, n)) for n in range(1, k * p + 1) if n % p),
        bits,
    )

    tail_terms = []
    for a in range(1, p):
        y = Fraction(k * p + a, p)
        psi = BigComplex.from_rational(y, bits).log()
        corr = Fraction(1, 2) / y + sum(
            bernoulli(2 * j) / (2 * j * y ** (2 * j)) for j in range(1, _TAIL_TERMS + 1)
        )
        psi = psi - BigComplex.from_rational(corr, bits)
        tail_terms.append(chi(character, a).to_complex(bits) * psi)
    tail = big_sum(tail_terms, bits).scale(Fraction(-1, p))

    total = head + tail
    bounded = BigComplex(total.real, total.imag, bits, total.error_bound + _tail_remainder(p, k))
    return LValue(character.index, bounded, "series", bits)


def l_product(p: int, subset: Subset, precision_bits: int = DEFAULT_BITS) -> BigComplex:
    """Product of L(1, chi) (closed form) over a parity class, in index order."""
    if not is_prime(p) or p < 5:
        raise ValueError("l_product requires a prime p >= 5")
    values = [l_one_closed(c, precision_bits).value for c in characters_mod(p, subset)]
    return big_prod(values, precision_bits)
