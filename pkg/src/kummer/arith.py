"""Exact rational/polynomial kernels and an error-tracked complex type.

``Rational`` is :class:`fractions.Fraction`.  Polynomials are dense and
immutable, constant term first.  ``BigComplex`` carries its own precision
and an absolute per-component error bound; every operation takes its
precision from the operands, never from process-wide state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

import gmpy2

Rational = Fraction
Number = Union[int, Fraction]


def is_prime(n: int) -> bool:
    return n >= 2 and bool(gmpy2.is_prime(n))


def primes_between(lo: int, hi: int) -> list[int]:
    """All primes q with lo <= q <= hi, ascending."""
    out = []
    q = int(gmpy2.next_prime(max(lo, 2) - 1))
    while q <= hi:
        out.append(q)
        q = int(gmpy2.next_prime(q))
    return out


def _trim(coeffs: Iterable[Number]) -> tuple[Fraction, ...]:
    c = [Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class Polynomial:
    """Dense univariate polynomial over Q, constant term first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def x(cls) -> Polynomial:
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree: int, c: Number = 1) -> Polynomial:
        return cls([0] * degree + [c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial((other,))
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __add__(self, other) -> Polynomial:
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> Polynomial:
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> Polynomial:
        return _as_poly(other) - self

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self.coeffs)
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        a, da = _integerize(self.coeffs)
        b, db = _integerize(other.coeffs)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return _from_scaled(out, da * db)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        result, base = Polynomial((1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        dq = other.degree
        if other.lc == 1 and other.is_integral():
            # monic integral divisor: stay in Z after clearing denominators
            rem, d = _integerize(self.coeffs)
            div = [int(c) for c in other.coeffs]
            quot = [0] * max(len(rem) - dq, 0)
            for k in range(len(rem) - 1, dq - 1, -1):
                c = rem[k]
                if c:
                    quot[k - dq] = c
                    for j, oc in enumerate(div):
                        rem[k - dq + j] -= c * oc
            return _from_scaled(quot, d), _from_scaled(rem[:dq], d)
        rem = list(self.coeffs)
        inv = 1 / other.lc
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] * inv
            if c:
                quot[k - dq] = c
                for j, oc in enumerate(other.coeffs):
                    rem[k - dq + j] -= c * oc
        return Polynomial(quot), Polynomial(rem[:dq] if dq > 0 else ())

    def __floordiv__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[0]

    def __mod__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[1]

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def map_exponents(self, t: int, n: int) -> Polynomial:
        """Substitute x -> x**(t mod n), folding exponents mod n (for Q(zeta_n))."""
        out: dict[int, Fraction] = {}
        for e, c in enumerate(self.coeffs):
            if c:
                k = (e * t) % n
                out[k] = out.get(k, Fraction(0)) + c
        dense = [Fraction(0)] * (max(out, default=-1) + 1)
        for k, c in out.items():
            dense[k] = c
        return Polynomial(dense)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)


def _integerize(coeffs: Sequence[Fraction]) -> tuple[list[int], int]:
    """(integer coefficients, common denominator d) with coeffs == ints / d."""
    d = math.lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    return [c.numerator * (d // c.denominator) for c in coeffs], d


def _from_scaled(ints: Sequence[int], d: int) -> Polynomial:
    if d == 1:
        return Polynomial(ints)
    return Polynomial(Fraction(c, d) for c in ints)


def _as_poly(v) -> Polynomial:
    if isinstance(v, Polynomial):
        return v
    if isinstance(v, (int, Fraction)):
        return Polynomial((v,))
    raise TypeError(f"cannot treat {type(v).__name__} as Polynomial")


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> Polynomial:
    """Phi_n as the exact quotient of x^n - 1 by the Phi_d, d | n, d < n."""
    if n < 1:
        raise ValueError("cyclotomic_polynomial requires n >= 1")
    num = Polynomial.monomial(n) - 1
    for d in _divisors(n)[:-1]:
        q, r = divmod(num, cyclotomic_polynomial(d))
        assert r.is_zero()
        num = q
    return num


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


# -- resultants ---------------------------------------------------------------

def _content(a: Sequence[int]) -> int:
    g = 0
    for c in a:
        g = math.gcd(g, c)
    return g


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b over Z."""
    rem = list(a)
    db, lb = len(b) - 1, b[-1]
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        rem = [x * lb for x in rem]
        if c:
            for j in range(db + 1):
                rem[k - db + j] -= c * b[j]
        rem.pop()
    while rem and rem[-1] == 0:
        rem.pop()
    return rem


def _resultant_zz(a: list[int], b: list[int]) -> int:
    # subresultant PRS over Z, after Collins/Brown
    ca, cb = _content(a), _content(b)
    a = [x // ca for x in a]
    b = [x // cb for x in b]
    da, db = len(a) - 1, len(b) - 1
    t = ca**db * cb**da
    s = 1
    if da < db:
        a, b = b, a
        da, db = db, da
        if da % 2 and db % 2:
            s = -s
    g = h = 1
    while db > 0:
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        r = _prem(a, b)
        if not r:
            return 0
        a = b
        denom = g * h**delta
        b = [x // denom for x in r]
        g = a[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = g**delta // h ** (delta - 1)
        da, db = len(a) - 1, len(b) - 1
    # b is a nonzero constant here
    if da == 1:
        h = b[0]
    else:
        h = b[0] ** da // h ** (da - 1)
    return s * t * h


def resultant(f: Polynomial, g: Polynomial) -> Fraction:
    """Res(f, g) = lc(f)**deg(g) * prod of g over the roots of f.

    Denominators are cleared first; the integer core is a fraction-free
    subresultant remainder sequence.  Res(x - a, x - b) = a - b.
    """
    if f.is_zero() or g.is_zero():
        raise ValueError("undefined resultant")
    df = math.lcm(*(c.denominator for c in f.coeffs))
    dg = math.lcm(*(c.denominator for c in g.coeffs))
    fi = [int(c * df) for c in f.coeffs]
    gi = [int(c * dg) for c in g.coeffs]
    if f.degree == 0:
        core = fi[0] ** g.degree
    elif g.degree == 0:
        core = gi[0] ** f.degree
    else:
        core = _resultant_zz(fi, gi)
    return Fraction(core, df ** g.degree * dg ** f.degree)


# -- error-tracked complex numbers --------------------------------------------

_SLACK = 1.0 + 2.0**-40


def _ctx(bits: int) -> gmpy2.context:
    if bits < 2:
        raise ValueError("precision_bits must be >= 2")
    return gmpy2.context(precision=bits)


def _up(x) -> float:
    """Float upper bound for a nonnegative mpfr/float quantity."""
    return float(x) * _SLACK + 1e-300


@dataclass(frozen=True)
class BigComplex:
    """Complex value at a fixed binary precision with an absolute error bound.

    ``error_bound`` bounds the error of each component separately.
    """

    real: gmpy2.mpfr
    imag: gmpy2.mpfr
    precision_bits: int
    error_bound: float = 0.0

    @classmethod
    def from_rational(cls, q: Number, bits: int, imag: Number = 0) -> BigComplex:
        ctx = _ctx(bits)
        re = ctx.div(gmpy2.mpz(Fraction(q).numerator), gmpy2.mpz(Fraction(q).denominator))
        im = ctx.div(gmpy2.mpz(Fraction(imag).numerator), gmpy2.mpz(Fraction(imag).denominator))
        err = 0.0 if Fraction(q) == re and Fraction(imag) == im else _up(max(abs(re), abs(im))) * 2.0**-bits
        return cls(re, im, bits, err)

    @classmethod
    def root_of_unity(cls, k: int, n: int, bits: int) -> BigComplex:
        """exp(2*pi*i*k/n), correctly rounded per component."""
        k %= n
        if k == 0:
            return cls.from_rational(1, bits)
        z = _ctx(bits).root_of_unity(n, k)
        return cls(z.real, z.imag, bits, 2.0 ** (1 - bits))

    @property
    def _u(self) -> float:
        return 2.0**-self.precision_bits

    def magnitude_bound(self) -> float:
        """Upper bound for |re| + |im| of the exact value."""
        return _up(abs(self.real) + abs(self.imag)) + 2 * self.error_bound

    def __add__(self, other) -> BigComplex:
        other = _as_big(other, self.precision_bits)
        bits = min(self.precision_bits, other.precision_bits)
        ctx = _ctx(bits)
        re, im = ctx.add(self.real, other.real), ctx.add(self.imag, other.imag)
        err = self.error_bound + other.error_bound + _up(max(abs(re), abs(im))) * 2.0**-bits
        return BigComplex(re, im, bits, _up(err))

    __radd__ = __add__

    def __neg__(self) -> BigComplex:
        ctx = _ctx(self.precision_bits)
        return BigComplex(ctx.minus(self.real), ctx.minus(self.imag), self.precision_bits, self.error_bound)

    def __sub__(self, other) -> BigComplex:
        return self + (-_as_big(other, self.precision_bits))

    def __rsub__(self, other) -> BigComplex:
        return _as_big(other, self.precision_bits) - self

    def __mul__(self, other) -> BigComplex:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        bits = min(self.precision_bits, other.precision_bits)
        ctx = _ctx(bits)
        a, b, c, d = self.real, self.imag, other.real, other.imag
        re = ctx.fmms(a, c, b, d)
        im = ctx.fmma(a, d, b, c)
        e1, e2 = self.error_bound, other.error_bound
        prop = e1 * _up(abs(c) + abs(d)) + e2 * _up(abs(a) + abs(b)) + 2 * e1 * e2
        rnd = _up(max(abs(re), abs(im))) * 2.0**-bits
        return BigComplex(re, im, bits, _up(prop + rnd))

    __rmul__ = __mul__

    def scale(self, q: Number) -> BigComplex:
        """Multiply by an exact rational."""
        q = Fraction(q)
        ctx = _ctx(self.precision_bits)
        num, den = gmpy2.mpz(q.numerator), gmpy2.mpz(q.denominator)
        re = ctx.div(ctx.mul(self.real, num), den)
        im = ctx.div(ctx.mul(self.imag, num), den)
        rnd = 2 * _up(max(abs(re), abs(im))) * self._u
        return BigComplex(re, im, self.precision_bits, _up(self.error_bound * abs(float(q)) + rnd))

    def conjugate(self) -> BigComplex:
        ctx = _ctx(self.precision_bits)
        return BigComplex(self.real, ctx.minus(self.imag), self.precision_bits, self.error_bound)

    def log(self) -> BigComplex:
        """Principal logarithm.

        Raises if the uncertainty disk may touch 0 or the negative real axis.
        """
        ctx = _ctx(self.precision_bits)
        dz = math.sqrt(2.0) * self.error_bound
        mod = float(ctx.hypot(self.real, self.imag))
        if mod <= 2 * dz or mod == 0:
            raise ValueError("log argument indistinguishable from zero")
        if self.real <= self.error_bound and abs(self.imag) <= self.error_bound:
            raise ValueError("log argument may straddle the branch cut")
        w = ctx.log(gmpy2.mpc(self.real, self.imag, precision=(self.precision_bits,) * 2))
        prop = dz / (mod - dz) if dz else 0.0
        rnd = _up(max(abs(w.real), abs(w.imag))) * self._u
        return BigComplex(w.real, w.imag, self.precision_bits, _up(prop + rnd))

    def abs2(self) -> tuple[gmpy2.mpfr, float]:
        """(|z|^2, absolute error bound)."""
        ctx = _ctx(self.precision_bits)
        v = ctx.fmma(self.real, self.real, self.imag, self.imag)
        e = self.error_bound
        prop = 2 * e * _up(abs(self.real) + abs(self.imag)) + 2 * e * e
        return v, _up(prop + _up(v) * self._u)

    def distance(self, other) -> float:
        """max(|dRe|, |dIm|) between the stored values (bounds not included)."""
        other = _as_big(other, self.precision_bits)
        ctx = _ctx(max(self.precision_bits, other.precision_bits) + 8)
        return float(max(abs(ctx.sub(self.real, other.real)), abs(ctx.sub(self.imag, other.imag))))

    def contains(self, other, slack: float = 0.0) -> bool:
        """True if the two error boxes (widened by ``slack``) overlap."""
        other = _as_big(other, self.precision_bits)
        return self.distance(other) <= self.error_bound + other.error_bound + slack

    def __complex__(self) -> complex:
        return complex(float(self.real), float(self.imag))

    def __repr__(self) -> str:
        return (
            f"BigComplex({float(self.real)!r}, {float(self.imag)!r}, "
            f"bits={self.precision_bits}, err={self.error_bound:.3g})"
        )


def _as_big(v, bits: int) -> BigComplex:
    if isinstance(v, BigComplex):
        return v
    if isinstance(v, (int, Fraction)):
        return BigComplex.from_rational(v, bits)
    raise TypeError(f"cannot treat {type(v).__name__} as BigComplex")


def big_sum(terms: Iterable[BigComplex], bits: int) -> BigComplex:
    acc = BigComplex.from_rational(0, bits)
    for t in terms:
        acc = acc + t
    return acc


def big_prod(factors: Iterable[BigComplex], bits: int) -> BigComplex:
    acc = BigComplex.from_rational(1, bits)
    for f in factors:
        acc = acc * f
    return acc
