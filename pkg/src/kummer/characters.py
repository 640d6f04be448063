"""Dirichlet characters mod a prime p, with exact values in Z/(p-1).

A character is fixed by the smallest primitive root g and an index j:
chi_j(g^a) = zeta^(j*a), zeta = exp(2*pi*i/(p-1)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Literal

from kummer.arith import (
    BigComplex,
    Polynomial,
    big_sum,
    cyclotomic_polynomial,
    is_prime,
)

Subset = Literal["odd", "even_nontrivial", "all_nontrivial"]


@lru_cache(maxsize=None)
def primitive_root(p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return 1
    n = p - 1
    factors = [q for q in range(2, n + 1) if n % q == 0 and is_prime(q)]
    for g in range(2, p):
        if all(pow(g, n // q, p) != 1 for q in factors):
            return g
    raise AssertionError("unreachable: F_p* is cyclic")


@lru_cache(maxsize=None)
def _dlog_table(p: int) -> tuple[int, ...]:
    # entry x holds log_g(x) for 1 <= x < p; entry 0 unused
    g = primitive_root(p)
    table = [0] * p
    x = 1
    for a in range(p - 1):
        table[x] = a
        x = x * g % p
    return tuple(table)


def dlog(x: int, p: int) -> int:
    return _dlog_table(p)[x % p]


@dataclass(frozen=True)
class CharacterValue:
    """zeta_(p-1)^exponent, or 0 when ``zero`` is set."""

    zero: bool
    exponent: int
    order: int

    def __mul__(self, other: CharacterValue) -> CharacterValue:
        if self.order != other.order:
            raise ValueError("character values of different moduli")
        if self.zero or other.zero:
            return CharacterValue(True, 0, self.order)
        return CharacterValue(False, (self.exponent + other.exponent) % self.order, self.order)

    def conjugate(self) -> CharacterValue:
        return CharacterValue(self.zero, -self.exponent % self.order, self.order)

    def to_complex(self, bits: int) -> BigComplex:
        if self.zero:
            return BigComplex.from_rational(0, bits)
        return BigComplex.root_of_unity(self.exponent, self.order, bits)


@dataclass(frozen=True)
class DirichletCharacter:
    modulus: int
    index: int
    generator: int = 0

    def __post_init__(self):
        p = self.modulus
        if not is_prime(p) or p < 3:
            raise ValueError("modulus must be an odd prime")
        object.__setattr__(self, "index", self.index % (p - 1))
        if self.generator == 0:
            object.__setattr__(self, "generator", primitive_root(p))
        elif self.generator != primitive_root(p):
            raise ValueError("generator must be the smallest primitive root")

    @property
    def order_base(self) -> int:
        return self.modulus - 1

    @property
    def is_trivial(self) -> bool:
        return self.index == 0

    @property
    def is_odd(self) -> bool:
        # -1 = g^((p-1)/2), so chi(-1) = (-1)^j
        return self.index % 2 == 1

    @property
    def conductor(self) -> int:
        return 1 if self.is_trivial else self.modulus

    def conjugate(self) -> DirichletCharacter:
        return DirichletCharacter(self.modulus, -self.index)

    def __mul__(self, other: DirichletCharacter) -> DirichletCharacter:
        if self.modulus != other.modulus:
            raise ValueError("characters of different moduli")
        return DirichletCharacter(self.modulus, self.index + other.index)


def characters_mod(p: int, subset: Subset | Literal["all"] = "all") -> list[DirichletCharacter]:
    """Characters mod p in index order, filtered by parity."""
    chars = [DirichletCharacter(p, j) for j in range(p - 1)]
    if subset == "all":
        return chars
    if subset == "all_nontrivial":
        return chars[1:]
    if subset == "odd":
        return [c for c in chars if c.is_odd]
    if subset == "even_nontrivial":
        return [c for c in chars[1:] if not c.is_odd]
    raise ValueError(f"unknown character subset {subset!r}")


def chi(character: DirichletCharacter, x: int) -> CharacterValue:
    p = character.modulus
    n = p - 1
    if x % p == 0:
        return CharacterValue(True, 0, n)
    return CharacterValue(False, character.index * dlog(x, p) % n, n)


def gauss_sum(character: DirichletCharacter, i: int, precision_bits: int) -> BigComplex:
    """tau_i(chi) = sum over x in (Z/p)* of chi(x) * exp(2*pi*i*i*x/p).

    Each term chi(x) * omega^(i*x) is a single root of unity of order
    p*(p-1), so it is evaluated in one correctly rounded step.
    """
    p = character.modulus
    n = p * (p - 1)
    terms = (
        BigComplex.root_of_unity(chi(character, x).exponent * p + (i * x % p) * (p - 1), n, precision_bits)
        for x in range(1, p)
    )
    return big_sum(terms, precision_bits)


def gen_bernoulli_b1(character: DirichletCharacter) -> Polynomial:
    """B_{1,chi} = (1/p) * sum_{a=1}^{p-1} chi(a) * a, reduced mod Phi_(p-1).

    The result is an element of Q(zeta_(p-1)) in the power basis of zeta.
    """
    if character.is_trivial:
        raise ValueError("B_{1,chi} undefined for trivial character in this artifact")
    p = character.modulus
    n = p - 1
    acc = [0] * n
    for a in range(1, p):
        acc[chi(character, a).exponent] += a
    return (Polynomial(acc) % cyclotomic_polynomial(n)) * Fraction(1, p)


def conjugate_element(value: Polynomial, n: int) -> Polynomial:
    """Complex conjugation zeta -> zeta^-1 on Q(zeta_n), result reduced mod Phi_n."""
    return value.map_exponents(-1, n) % cyclotomic_polynomial(n)


def evaluate_element(value: Polynomial, n: int, bits: int) -> BigComplex:
    """Numeric value of an element of Q(zeta_n) at zeta = exp(2*pi*i/n)."""
    return big_sum(
        (BigComplex.root_of_unity(e, n, bits).scale(c) for e, c in enumerate(value.coeffs) if c),
        bits,
    )
