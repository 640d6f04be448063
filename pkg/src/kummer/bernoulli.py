"""Bernoulli numbers (B_1 = -1/2) and the Bernoulli-numerator regularity test."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from kummer.arith import is_prime, primes_between

__all__ = [
    "BernoulliTable",
    "IrregularPair",
    "bernoulli",
    "bernoulli_mod",
    "bernoulli_table",
    "is_regular_bernoulli",
    "vsc_check",
]


@dataclass(frozen=True)
class BernoulliTable:
    values: tuple[Fraction, ...]

    @property
    def max_index(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n]


@dataclass(frozen=True, order=True)
class IrregularPair:
    p: int
    k: int


_lock = threading.Lock()
_cache: list[Fraction] = [Fraction(1)]


def _extend(n_max: int) -> None:
    # B_n = -1/(n+1) * sum_{k<n} C(n+1, k) B_k; odd k >= 3 contribute nothing
    with _lock:
        for n in range(len(_cache), n_max + 1):
            if n >= 3 and n % 2:
                _cache.append(Fraction(0))
                continue
            s = sum(comb(n + 1, k) * _cache[k] for k in range(n) if k < 2 or k % 2 == 0)
            _cache.append(-s / (n + 1))


def reset_cache() -> None:
    """Drop every cached value except B_0 (used to time cold runs)."""
    with _lock:
        del _cache[1:]


def bernoulli_table(n_max: int) -> BernoulliTable:
    """B_0..B_{n_max}.  Grows a shared cache, so repeated calls are cheap."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if len(_cache) <= n_max:
        _extend(n_max)
    return BernoulliTable(tuple(_cache[: n_max + 1]))


def bernoulli(n: int) -> Fraction:
    if n < 0:
        raise ValueError("n must be >= 0")
    if len(_cache) <= n:
        _extend(n)
    return _cache[n]


def _check_kummer_args(k: int, p: int) -> None:
    if not is_prime(p):
        raise ValueError("modulus not prime")
    if p < 5 or k % 2 or not 2 <= k <= p - 3:
        raise ValueError("index outside Kummer range")


def _bernoulli_residues(p: int, n_max: int) -> list[int]:
    """B_0..B_{n_max} mod p via the recursion run in F_p (needs n_max <= p - 3)."""
    b = [1]
    for n in range(1, n_max + 1):
        if n >= 3 and n % 2:
            b.append(0)
            continue
        s = sum(comb(n + 1, k) * b[k] for k in range(n) if k < 2 or k % 2 == 0)
        b.append(-s * pow(n + 1, -1, p) % p)
    return b


def bernoulli_mod(k: int, p: int) -> int:
    """B_k mod p for even 2 <= k <= p - 3, never leaving F_p."""
    _check_kummer_args(k, p)
    return _bernoulli_residues(p, k)[k]


def is_regular_bernoulli(
    p: int, table: BernoulliTable | None = None
) -> tuple[bool, list[IrregularPair]]:
    """Kummer's numerator test over even k in [2, p-3].

    With ``table`` the exact values are reduced mod p; otherwise the
    recursion runs in F_p.  Both give the same answer.
    """
    if not is_prime(p):
        raise ValueError("modulus not prime")
    if p < 5:
        raise ValueError("index outside Kummer range")
    if table is not None and table.max_index >= p - 3:
        residues = [table[k].numerator % p for k in range(p - 2)]
    else:
        residues = _bernoulli_residues(p, p - 3)
    pairs = [IrregularPair(p, k) for k in range(2, p - 2, 2) if residues[k] == 0]
    return not pairs, pairs


def vsc_check(k: int) -> int:
    """Product of the primes q with (q - 1) | k; the denominator of B_k."""
    if k < 2 or k % 2:
        raise ValueError("k must be even and >= 2")
    out = 1
    for q in primes_between(2, k + 1):
        if k % (q - 1) == 0:
            out *= q
    return out
