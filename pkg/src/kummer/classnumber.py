"""Relative class number h^- of Q(zeta_p) and the class-number regularity test.

h^- = 2p * prod over odd chi of (-B_{1,chi} / 2), evaluated exactly in
Q(zeta_(p-1)).  Characters are multiplied in conjugate pairs so every
partial product lies in the real subfield.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from kummer.arith import BigComplex, Polynomial, big_prod, cyclotomic_polynomial, is_prime
from kummer.bernoulli import is_regular_bernoulli
from kummer.characters import (
    DirichletCharacter,
    conjugate_element,
    evaluate_element,
    gen_bernoulli_b1,
)

DEFAULT_BITS = 192
ROUNDING_THRESHOLD = 0.25


class ExactnessError(ArithmeticError):
    """An exact computation produced a value it provably cannot have."""


class InsufficientPrecision(ArithmeticError):
    pass


class RouteDisagreement(RuntimeError):
    pass


@dataclass(frozen=True)
class HMinusResult:
    p: int
    h_minus: int
    route: Literal["exact_product", "numeric_rounded"]
    numeric_residual: float = 0.0


@dataclass(frozen=True)
class CrossCheck:
    p: int
    bernoulli_flag: bool
    classnumber_flag: bool
    agree: bool


def _check_prime(p: int, lowest: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p < lowest:
        raise ValueError(f"p must be >= {lowest}")


def _odd_pairs(p: int) -> list[tuple[int, ...]]:
    """Odd character indices grouped with their conjugates: (j, p-1-j) or (j,)."""
    n = p - 1
    groups = []
    for j in range(1, n, 2):
        if j < n - j:
            groups.append((j, n - j))
        elif j == n - j:
            groups.append((j,))
    return groups


def paired_factors(p: int) -> list[tuple[tuple[int, ...], Polynomial]]:
    """Per conjugate group, the product of -B_{1,chi}/2, reduced mod Phi_(p-1).

    Raises ExactnessError if a group product is not fixed by conjugation.
    """
    n = p - 1
    phi = cyclotomic_polynomial(n)
    out = []
    for group in _odd_pairs(p):
        prod = Polynomial((1,))
        values = [gen_bernoulli_b1(DirichletCharacter(p, j)) for j in group]
        if len(values) == 2 and values[1] != conjugate_element(values[0], n):
            raise ExactnessError(f"B_1 of chi_{group[1]} is not the conjugate of chi_{group[0]}")
        for v in values:
            prod = (prod * (v * Fraction(-1, 2))) % phi
        if conjugate_element(prod, n) != prod:
            raise ExactnessError(f"pair product for {group} not real")
        out.append((group, prod))
    return out


def h_minus_exact(p: int) -> HMinusResult:
    _check_prime(p, 3)
    phi = cyclotomic_polynomial(p - 1)
    total = Polynomial((2 * p,))
    for _, factor in paired_factors(p):
        total = (total * factor) % phi
    if not total.is_constant() or not total.is_integral() or total[0] < 1:
        raise ExactnessError(f"exactness violation: h^-({p}) reduced to {total!r}")
    return HMinusResult(p, int(total[0]), "exact_product", 0.0)


def h_minus_numeric(p: int, precision_bits: int = DEFAULT_BITS) -> HMinusResult:
    """Same product with B_{1,chi} evaluated at a numeric root of unity, then rounded."""
    _check_prime(p, 5)
    n = p - 1
    factors = [
        evaluate_element(gen_bernoulli_b1(DirichletCharacter(p, j)), n, precision_bits).scale(Fraction(-1, 2))
        for j in range(1, n, 2)
    ]
    value = big_prod(factors, precision_bits).scale(2 * p)
    nearest = int(round(value.real))
    residual = max(value.distance(BigComplex.from_rational(nearest, precision_bits)), value.error_bound)
    if residual >= ROUNDING_THRESHOLD:
        raise InsufficientPrecision(f"insufficient precision ({precision_bits} bits) for h^-({p})")
    return HMinusResult(p, nearest, "numeric_rounded", residual)


def is_regular_classnumber(p: int) -> bool:
    _check_prime(p, 5)
    return h_minus_exact(p).h_minus % p != 0


def regularity_crosscheck(p: int) -> CrossCheck:
    """Run both regularity routes; they must agree (Kummer's criterion)."""
    _check_prime(p, 5)
    b_flag, _ = is_regular_bernoulli(p)
    c_flag = is_regular_classnumber(p)
    if b_flag != c_flag:
        raise RouteDisagreement(f"routes disagree at p={p}: bernoulli={b_flag}, classnumber={c_flag}")
    return CrossCheck(p, b_flag, c_flag, True)
