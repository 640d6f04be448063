import cmath
import math

import pytest

from kummer.arith import BigComplex, primes_between
from kummer.characters import DirichletCharacter, characters_mod, evaluate_element, gauss_sum, gen_bernoulli_b1
from kummer.lseries import l_one_closed, l_one_series, l_product

from oracles import H_MINUS, L_QUADRATIC_5, L_QUADRATIC_7, l_value_digamma

PRIMES_TO_31 = primes_between(5, 31)


def test_quadratic_mod5():
    v = l_one_closed(DirichletCharacter(5, 2)).value
    assert abs(complex(v) - L_QUADRATIC_5) < 1e-15


def test_quadratic_mod7():
    c = DirichletCharacter(7, 3)
    assert c.is_odd
    assert abs(complex(l_one_closed(c).value) - L_QUADRATIC_7) < 1e-15
    assert abs(complex(l_one_series(c, 1e-10).value) - L_QUADRATIC_7) < 1e-10
    # classical value pi / sqrt(7)
    assert abs(L_QUADRATIC_7 - math.pi / math.sqrt(7)) < 1e-15


def test_conjugate_pair_mod5():
    a = l_one_closed(DirichletCharacter(5, 1)).value
    b = l_one_closed(DirichletCharacter(5, 3)).value
    assert a.contains(b.conjugate())


def test_trivial_character_rejected():
    with pytest.raises(ValueError, match="diverges"):
        l_one_closed(DirichletCharacter(5, 0))
    with pytest.raises(ValueError, match="diverges"):
        l_one_series(DirichletCharacter(5, 0), 1e-6)


def test_series_route_label_and_tolerance():
    lv = l_one_series(DirichletCharacter(5, 2), 1e-8)
    assert lv.route == "series" and lv.chi_index == 2
    assert lv.value.error_bound < 1e-8
    assert abs(complex(lv.value) - complex(l_one_closed(DirichletCharacter(5, 2)).value)) < 1e-8


def test_series_tolerance_monotone():
    c = DirichletCharacter(11, 3)
    tol = 1e-4
    prev = l_one_series(c, tol).value
    for _ in range(6):
        tol /= 2
        cur = l_one_series(c, tol).value
        assert prev.distance(cur) <= 2 * tol
        prev = cur


@pytest.mark.parametrize("p", PRIMES_TO_31)
def test_route_agreement(p):
    for c in characters_mod(p, "all_nontrivial"):
        closed = l_one_closed(c, 192).value
        series = l_one_series(c, 1e-10).value
        assert closed.distance(series) <= 1e-9


@pytest.mark.parametrize("p", [5, 11, 23, 31])
def test_closed_form_matches_digamma_oracle(p):
    for c in characters_mod(p, "all_nontrivial"):
        assert abs(complex(l_one_closed(c).value) - l_value_digamma(p, c.index)) < 1e-14


@pytest.mark.parametrize("p", PRIMES_TO_31)
def test_conjugation_and_nonvanishing(p):
    for c in characters_mod(p, "all_nontrivial"):
        v = l_one_closed(c).value
        assert v.contains(l_one_closed(c.conjugate()).value.conjugate())
        mod = abs(complex(v))
        assert mod > 10 * v.error_bound


@pytest.mark.parametrize("p", PRIMES_TO_31)
def test_full_product_positive(p):
    prod = l_product(p, "all_nontrivial")
    assert abs(prod.imag) <= prod.error_bound
    assert prod.real > 0


def test_odd_product_mod5_is_squared_modulus():
    prod = l_product(5, "odd")
    l1 = complex(l_one_closed(DirichletCharacter(5, 1)).value)
    assert abs(complex(prod) - abs(l1) ** 2) < 1e-15


def test_odd_product_mod7_positive():
    prod = l_product(7, "odd")
    assert prod.real > 0 and abs(prod.imag) <= prod.error_bound


def test_l_product_rejects_small_prime():
    with pytest.raises(ValueError):
        l_product(3, "odd")


@pytest.mark.parametrize("p", [5, 7, 11, 13, 23])
def test_odd_l_value_against_generalized_bernoulli(p):
    # L(1, chi) = pi * i * tau(chi) * B_{1, conj chi} / p for odd chi
    for c in characters_mod(p, "odd"):
        lhs = complex(l_one_closed(c).value)
        b = complex(evaluate_element(gen_bernoulli_b1(c.conjugate()), p - 1, 128))
        rhs = math.pi * 1j * complex(gauss_sum(c, 1, 128)) * b / p
        assert cmath.isclose(lhs, rhs, abs_tol=1e-14)


@pytest.mark.parametrize("p", [5, 7, 11, 13, 23, 31, 37])
def test_h_minus_from_odd_l_product(p):
    # h^- = 2p * prod_{odd} sqrt(p) |L(1, chi)| / (2 pi)
    prod = abs(complex(l_product(p, "odd")))
    h = 2 * p * prod * (math.sqrt(p) / (2 * math.pi)) ** ((p - 1) // 2)
    assert abs(h - H_MINUS[p]) < 1e-9 * H_MINUS[p]


def test_precision_changes_value_within_bound():
    c = DirichletCharacter(13, 5)
    lo, hi = l_one_closed(c, 96).value, l_one_closed(c, 192).value
    assert lo.distance(hi) <= lo.error_bound
    assert isinstance(lo, BigComplex) and lo.precision_bits == 96
