import cmath
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kummer.arith import BigComplex, Polynomial, cyclotomic_polynomial, primes_between
from kummer.characters import (
    DirichletCharacter,
    characters_mod,
    chi,
    conjugate_element,
    evaluate_element,
    gauss_sum,
    gen_bernoulli_b1,
    primitive_root,
)

from oracles import brute_primitive_root, character_values, gauss_sum_float

SMALL_PRIMES = primes_between(3, 31)


@pytest.mark.parametrize("p, g", [(3, 2), (5, 2), (7, 3)])
def test_primitive_root_examples(p, g):
    assert primitive_root(p) == g


def test_primitive_root_brute_force():
    for p in primes_between(3, 101):
        assert primitive_root(p) == brute_primitive_root(p)


def test_primitive_root_nonprime():
    with pytest.raises(ValueError):
        primitive_root(21)


def test_chi_examples():
    assert chi(DirichletCharacter(5, 0), 3).exponent == 0
    v = chi(DirichletCharacter(5, 1), 4)
    assert (v.zero, v.exponent) == (False, 2)
    assert chi(DirichletCharacter(5, 3), 10).zero


def test_character_properties():
    c = DirichletCharacter(13, 5)
    assert c.generator == 2 and c.conductor == 13 and c.is_odd
    assert DirichletCharacter(13, 0).conductor == 1
    assert c.conjugate().index == 7
    assert len(characters_mod(13, "odd")) == 6
    assert len(characters_mod(13, "even_nontrivial")) == 5
    with pytest.raises(ValueError):
        DirichletCharacter(12, 1)


@pytest.mark.parametrize("p", primes_between(5, 101))
def test_orthogonality_exact(p):
    n = p - 1
    for c in characters_mod(p, "all_nontrivial"):
        counts = [0] * n
        for x in range(1, p):
            counts[chi(c, x).exponent] += 1
        assert (Polynomial(counts) % cyclotomic_polynomial(n)).is_zero()


@given(st.sampled_from(primes_between(5, 61)), st.integers(0, 200), st.integers(0, 200), st.integers(-500, 500))
def test_group_law(p, j, k, x):
    a, b = DirichletCharacter(p, j), DirichletCharacter(p, k)
    assert chi(a, x) * chi(b, x) == chi(a * b, x)


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_parity(p):
    for c in characters_mod(p):
        v = chi(c, -1)
        assert v.exponent == (0 if c.index % 2 == 0 else (p - 1) // 2)
        assert c.is_odd == (c.index % 2 == 1)


def test_values_match_float_oracle():
    for p in (7, 11, 13):
        for j in range(p - 1):
            ref = character_values(p, j)
            for x in range(1, p):
                z = complex(chi(DirichletCharacter(p, j), x).to_complex(64))
                assert abs(z - ref[x]) < 1e-12


class TestGaussSums:
    def test_tau0_vanishes(self):
        for p in SMALL_PRIMES:
            for c in characters_mod(p, "all_nontrivial"):
                t = gauss_sum(c, 0, 128)
                assert t.contains(BigComplex.from_rational(0, 128))

    def test_quadratic_mod5(self):
        t = gauss_sum(DirichletCharacter(5, 2), 1, 128)
        assert abs(complex(t) - 5**0.5) < 1e-15
        assert abs(float(t.real) - 2.2360679774997896) < 1e-15

    def test_float_oracle(self):
        for p in (7, 11):
            for j in range(1, p - 1):
                for i in range(p):
                    assert abs(complex(gauss_sum(DirichletCharacter(p, j), i, 96)) - gauss_sum_float(p, j, i)) < 1e-11

    @pytest.mark.parametrize("p", SMALL_PRIMES)
    def test_modulus_law(self, p):
        for c in characters_mod(p, "all_nontrivial"):
            v, err = gauss_sum(c, 1, 128).abs2()
            assert abs(v - p) < 1e-10
            assert err < 1e-10

    @pytest.mark.parametrize("p", SMALL_PRIMES)
    def test_twist_law(self, p):
        for c in characters_mod(p, "all_nontrivial"):
            tau1 = gauss_sum(c, 1, 128)
            for i in range(2, p):
                lhs = gauss_sum(c, i, 128)
                rhs = chi(c, i).conjugate().to_complex(128) * tau1
                assert lhs.contains(rhs)


class TestGeneralizedBernoulli:
    def test_mod5_odd(self):
        assert gen_bernoulli_b1(DirichletCharacter(5, 1)) == Polynomial([Fraction(-3, 5), Fraction(-1, 5)])
        assert gen_bernoulli_b1(DirichletCharacter(5, 3)) == Polynomial([Fraction(-3, 5), Fraction(1, 5)])

    def test_even_vanishes(self):
        assert gen_bernoulli_b1(DirichletCharacter(5, 2)).is_zero()
        for p in SMALL_PRIMES:
            for c in characters_mod(p, "even_nontrivial"):
                assert gen_bernoulli_b1(c).is_zero()

    def test_odd_nonzero(self):
        for p in SMALL_PRIMES:
            for c in characters_mod(p, "odd"):
                assert not gen_bernoulli_b1(c).is_zero()

    def test_trivial_rejected(self):
        with pytest.raises(ValueError, match="trivial character"):
            gen_bernoulli_b1(DirichletCharacter(7, 0))

    @pytest.mark.parametrize("p", primes_between(5, 61))
    def test_conjugate_pairing(self, p):
        for c in characters_mod(p, "all_nontrivial"):
            assert gen_bernoulli_b1(c.conjugate()) == conjugate_element(gen_bernoulli_b1(c), p - 1)

    def test_numeric_value(self):
        for p in (7, 13):
            for j in range(1, p - 1):
                ref = character_values(p, j)
                expected = sum(ref[a] * a for a in range(1, p)) / p
                got = complex(evaluate_element(gen_bernoulli_b1(DirichletCharacter(p, j)), p - 1, 80))
                assert cmath.isclose(got, expected, abs_tol=1e-12)
