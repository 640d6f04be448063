"""Exact arithmetic in Z[omega], omega = exp(2*pi*i/p), in the basis 1, omega, ..., omega^(p-2)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from kummer.arith import Polynomial, cyclotomic_polynomial, is_prime, resultant


@dataclass(frozen=True)
class CycInt:
    p: int
    coeffs: tuple[int, ...]

    @classmethod
    def from_powers(cls, p: int, powers: Sequence[int]) -> CycInt:
        """Element sum_e powers[e] * omega^e for any length; reduced to canonical form."""
        folded = [0] * p
        for e, c in enumerate(powers):
            folded[e % p] += c
        top = folded[p - 1]
        return cls(p, tuple(c - top for c in folded[: p - 1]))

    @classmethod
    def integer(cls, p: int, n: int) -> CycInt:
        return cls(p, (n,) + (0,) * (p - 2))

    @classmethod
    def omega(cls, p: int, e: int = 1) -> CycInt:
        powers = [0] * p
        powers[e % p] = 1
        return cls.from_powers(p, powers)

    def _same(self, other: CycInt) -> None:
        if self.p != other.p:
            raise ValueError(f"elements of Z[zeta_{self.p}] and Z[zeta_{other.p}] do not mix")

    def __add__(self, other: CycInt) -> CycInt:
        if isinstance(other, int):
            other = CycInt.integer(self.p, other)
        self._same(other)
        return CycInt(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> CycInt:
        return CycInt(self.p, tuple(-a for a in self.coeffs))

    def __sub__(self, other: CycInt) -> CycInt:
        if isinstance(other, int):
            other = CycInt.integer(self.p, other)
        return self + (-other)

    def __rsub__(self, other: int) -> CycInt:
        return CycInt.integer(self.p, other) - self

    def __mul__(self, other: CycInt) -> CycInt:
        if isinstance(other, int):
            return CycInt(self.p, tuple(a * other for a in self.coeffs))
        return cyc_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> CycInt:
        result, base = CycInt.integer(self.p, 1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def divexact(self, n: int) -> CycInt:
        """Divide by a rational integer; valid because the basis is a Z-basis of Z[omega]."""
        if any(c % n for c in self.coeffs):
            raise ArithmeticError(f"{self} is not divisible by {n}")
        return CycInt(self.p, tuple(c // n for c in self.coeffs))

    def as_polynomial(self) -> Polynomial:
        return Polynomial(self.coeffs)


def cyc_mul(a: CycInt, b: CycInt) -> CycInt:
    a._same(b)
    p = a.p
    prod = [0] * p
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                prod[(i + j) % p] += x * y
    return CycInt.from_powers(p, prod)


def cyc_norm(a: CycInt) -> int:
    """N(a) = Res(Phi_p, a(x)) = product of all Galois conjugates."""
    if a.is_zero():
        return 0
    n = resultant(cyclotomic_polynomial(a.p), a.as_polynomial())
    assert n.denominator == 1
    return int(n)


def galois_apply(a: CycInt, t: int) -> CycInt:
    """The automorphism omega -> omega^t; t = p - 1 is complex conjugation."""
    p = a.p
    if t % p == 0:
        raise ValueError("t must be coprime to p")
    powers = [0] * p
    for e, c in enumerate(a.coeffs):
        powers[e * t % p] += c
    return CycInt.from_powers(p, powers)


def cyclotomic_unit(p: int, j: int) -> CycInt:
    """u_j = (1 - omega^j)/(1 - omega) = 1 + omega + ... + omega^(j-1)."""
    if not 2 <= j <= p - 1:
        raise ValueError(f"j must lie in [2, {p - 1}]")
    return CycInt.from_powers(p, [1] * j)


@dataclass(frozen=True)
class LambdaReport:
    p: int
    norm_is_p: bool
    unit_cofactor_norm: int


def lambda_check(p: int) -> LambdaReport:
    """N(1 - omega) = p and lambda^(p-1) = (unit) * p."""
    if not is_prime(p) or p < 5:
        raise ValueError("lambda_check requires a prime p >= 5")
    lam = 1 - CycInt.omega(p)
    if cyc_norm(lam) != p:
        raise ArithmeticError(f"N(1 - omega) != {p}")
    cofactor = (lam ** (p - 1)).divexact(p)
    unit_norm = cyc_norm(cofactor)
    if unit_norm not in (1, -1):
        raise ArithmeticError(f"lambda^(p-1)/p has norm {unit_norm}, not a unit")
    return LambdaReport(p, True, unit_norm)


@dataclass(frozen=True)
class SplittingData:
    q: int
    p: int
    f: int
    g: int


def splitting_data(q: int, p: int) -> SplittingData:
    """Residue degree f = ord_p(q) and number g = (p-1)/f of primes above q."""
    if not (is_prime(q) and is_prime(p)):
        raise ValueError("q and p must be prime")
    if q == p:
        raise ValueError("ramified case: handled by lambda_check")
    f, x = 1, q % p
    while x != 1:
        x = x * q % p
        f += 1
    return SplittingData(q, p, f, (p - 1) // f)


def fermat_factorization_check(p: int) -> bool:
    """prod_j (X + omega^j * y) == X^p + y^p in Z[omega][X], for y = 1..p+1.

    Raises ArithmeticError on a mismatch.
    """
    if not is_prime(p) or p < 5:
        raise ValueError("fermat_factorization_check requires a prime p >= 5")
    for y in range(1, p + 2):
        poly = [CycInt.integer(p, 1)]
        for j in range(p):
            root = CycInt.omega(p, j) * y
            shifted = [CycInt.integer(p, 0)] + poly
            scaled = [c * root for c in poly] + [CycInt.integer(p, 0)]
            poly = [s + t for s, t in zip(shifted, scaled)]
        expected = [CycInt.integer(p, 0)] * (p + 1)
        expected[0] = CycInt.integer(p, y**p)
        expected[p] = CycInt.integer(p, 1)
        if poly != expected:
            raise ArithmeticError(f"factorization identity fails for p={p}, y={y}")
    return True
