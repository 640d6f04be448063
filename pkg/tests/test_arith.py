from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kummer.arith import BigComplex, Polynomial, cyclotomic_polynomial, euler_phi, resultant

from oracles import sylvester_resultant

x = Polynomial.x()

fractions = st.fractions(max_denominator=50).filter(lambda q: abs(q.numerator) < 10**6)
small_polys = st.lists(st.integers(-6, 6), min_size=1, max_size=6).map(Polynomial).filter(lambda f: not f.is_zero())


def test_cyclotomic_examples():
    assert cyclotomic_polynomial(1) == x - 1
    assert cyclotomic_polynomial(5) == Polynomial([1, 1, 1, 1, 1])
    assert cyclotomic_polynomial(6) == x**2 - x + 1


def test_cyclotomic_rejects_nonpositive():
    with pytest.raises(ValueError):
        cyclotomic_polynomial(0)


@pytest.mark.parametrize("n", range(1, 61))
def test_cyclotomic_product_identity(n):
    prod = Polynomial([1])
    for d in range(1, n + 1):
        if n % d == 0:
            prod = prod * cyclotomic_polynomial(d)
    assert prod == Polynomial.monomial(n) - 1
    phi = cyclotomic_polynomial(n)
    assert phi.degree == euler_phi(n)
    assert phi.is_integral()


@given(fractions, fractions, fractions)
def test_rational_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a * b).denominator > 0


def test_polynomial_divmod_roundtrip():
    f = Polynomial([Fraction(1, 3), 2, -5, 7, Fraction(2, 9)])
    g = Polynomial([3, 0, 2])
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.degree < g.degree


@given(small_polys, small_polys)
@settings(max_examples=60)
def test_divmod_property(f, g):
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.degree < g.degree


class TestResultant:
    def test_linear_convention(self):
        assert resultant(x - 2, x - 3) == -1

    def test_phi5_at_one(self):
        assert resultant(cyclotomic_polynomial(5), x - 1) == 5

    def test_phi5_at_minus_one(self):
        assert resultant(cyclotomic_polynomial(5), x + 1) == 1

    def test_zero_rejected(self):
        with pytest.raises(ValueError, match="undefined resultant"):
            resultant(Polynomial(), x)

    def test_constants(self):
        assert resultant(Polynomial([3]), x**2 + 1) == 9
        assert resultant(x**3 + 2, Polynomial([Fraction(1, 2)])) == Fraction(1, 8)

    @given(small_polys, small_polys)
    @settings(max_examples=120)
    def test_matches_sylvester(self, f, g):
        assert resultant(f, g) == sylvester_resultant(list(f.coeffs), list(g.coeffs))

    @given(small_polys, small_polys)
    @settings(max_examples=120)
    def test_antisymmetry(self, f, g):
        assert resultant(f, g) == (-1) ** (f.degree * g.degree) * resultant(g, f)

    def test_rational_coefficients(self):
        f = Polynomial([Fraction(1, 2), Fraction(-3, 4), 1])
        g = Polynomial([Fraction(2, 3), 0, Fraction(5, 7)])
        assert resultant(f, g) == sylvester_resultant(list(f.coeffs), list(g.coeffs))


class TestBigComplex:
    def _pipeline(self, bits):
        z = BigComplex.root_of_unity(3, 17, bits)
        w = 1 - BigComplex.root_of_unity(-5, 11, bits)
        acc = (z * w + w.log()).scale(Fraction(-7, 3))
        for k in range(1, 30):
            acc = acc + BigComplex.root_of_unity(k, 29, bits) * acc.scale(Fraction(1, 40))
        return acc

    @pytest.mark.parametrize("bits", [40, 64, 128, 192])
    def test_error_bound_sound_under_doubling(self, bits):
        lo, hi = self._pipeline(bits), self._pipeline(2 * bits)
        assert lo.distance(hi) <= lo.error_bound
        assert lo.error_bound < 2.0 ** (-bits + 20)

    def test_exact_inputs_have_no_error(self):
        assert BigComplex.from_rational(3, 64).error_bound == 0
        assert BigComplex.root_of_unity(0, 7, 64).error_bound == 0

    def test_precision_is_per_value(self):
        a = BigComplex.from_rational(Fraction(1, 3), 40)
        b = BigComplex.from_rational(Fraction(1, 3), 200)
        assert (a + b).precision_bits == 40
        assert b.precision_bits == 200

    def test_log_rejects_zero(self):
        with pytest.raises(ValueError):
            BigComplex.from_rational(0, 64).log()

    def test_log_rejects_branch_cut(self):
        with pytest.raises(ValueError, match="branch cut"):
            BigComplex.from_rational(-1, 64).log()

    def test_abs2(self):
        z = BigComplex.from_rational(3, 64, imag=4)
        v, err = z.abs2()
        assert v == 25 and err < 1e-15

    def test_negation_keeps_precision(self):
        z = BigComplex.root_of_unity(3, 20, 192)
        assert (-z).real.precision == 192
        assert z.conjugate().imag.precision == 192
        assert (z + (-z)).distance(BigComplex.from_rational(0, 192)) == 0
