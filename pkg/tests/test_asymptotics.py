from fractions import Fraction

import pytest

from freelog.asymptotics import (
    boundary_contribution,
    main_term_coefficient,
    partial_sum_main_term,
    pochhammer_asymptotic,
    pochhammer_sum,
    pochhammer_term,
    powersum_partial_check,
    signed_singular_part,
    theorem_main_term,
    to_decimal,
)
from freelog.ratfunc import SingularPart, singular_part_at
from freelog.zeta import G0, BouquetParams, count_cyclic

P2, P3 = BouquetParams(2), BouquetParams(3)


def strictly_decreasing(xs):
    return all(a > b for a, b in zip(xs, xs[1:]))


def test_pochhammer_sum_examples():
    assert pochhammer_sum(1, 7, weighted=False) == 8
    assert pochhammer_sum(1, 3, 3) == 40
    assert pochhammer_sum(2, 4, weighted=False) == 15


def test_pochhammer_sum_matches_direct_products():
    for k in (1, 2, 5):
        for q in (Fraction(3), Fraction(7, 2)):
            assert pochhammer_sum(k, 25, q) == sum(pochhammer_term(k, m, q) for m in range(26))


def test_pochhammer_ratio_identity():
    for q in (3, 5):
        for k in range(2, 8):
            for m in range(51):
                assert pochhammer_term(k, m, q) * (k - 1) == (k + m - 1) * pochhammer_term(k - 1, m, q)


def test_pochhammer_asymptotic_examples():
    l = 100
    r = pochhammer_sum(2, l, weighted=False) / pochhammer_asymptotic(2, l, weighted=False)
    # exact ratio is 5151/5000, so the deviation is just over 0.03 at l = 100
    assert r == Fraction((l + 1) * (l + 2), l * l) == Fraction(5151, 5000)
    r1 = pochhammer_sum(1, 10, 3) / pochhammer_asymptotic(1, 10, 3)
    assert r1 == 1 - Fraction(1, 3**11)
    r3 = pochhammer_sum(3, 60, 3) / pochhammer_asymptotic(3, 60, 3)
    assert abs(r3 - 1) < Fraction(1, 10)


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("weighted", [True, False])
@pytest.mark.parametrize("q", [3, 5])
def test_pochhammer_ratio_converges(k, weighted, q):
    devs = [abs(pochhammer_sum(k, l, q, weighted) / pochhammer_asymptotic(k, l, q, weighted) - 1) for l in (20, 40, 80, 160)]
    assert strictly_decreasing(devs)


def test_main_term_for_G0():
    sp = singular_part_at(G0(P2), Fraction(1, 3))
    l = 20
    assert partial_sum_main_term(sp, l) == Fraction(3 ** (l + 1), 2)
    exact = sum(count_cyclic(P2, m) for m in range(1, l + 1))
    assert abs(exact / partial_sum_main_term(sp, l) - 1) < Fraction(1, 1000)


def test_main_term_for_G2():
    sp = signed_singular_part(P2, 2)
    assert sp.order == 2 and sp.leading == Fraction(1, 9)
    for l in (5, 17):
        assert partial_sum_main_term(sp, l) == Fraction(3 ** (l + 1) * l, 2) == theorem_main_term(P2, 2, l)


def test_zero_singular_part():
    assert partial_sum_main_term(SingularPart(Fraction(1, 3), ()), 10) == 0


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("k", [2, 4, 6])
def test_main_term_coefficient_matches_closed_form(n, k):
    params = BouquetParams(n)
    sp = signed_singular_part(params, k)
    # compare the l-coefficients: main = coeff * q^(l+1) l^(k/2)
    closed = theorem_main_term(params, k, 1) / params.q**2
    assert main_term_coefficient(sp) == closed


def test_boundary_contribution_is_exact_partial_sum():
    sp = SingularPart(Fraction(1), (Fraction(2), Fraction(-3)))
    f = sp.as_rational_function()
    assert boundary_contribution(sp, 15) == sum(f.series_coefficients(15))


def test_powersum_partial_examples():
    p = powersum_partial_check(P2, 2, 3)
    assert p.exact_value == 96
    assert p.main_term == Fraction(243, 2)
    assert p.ratio == Fraction(96 * 2, 243)
    assert powersum_partial_check(P2, 3, 10).exact_value == 0
    assert theorem_main_term(P2, 3, 10) == 0


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("k", [2, 4])
def test_powersum_ratio_trend(n, k):
    preds = [powersum_partial_check(BouquetParams(n), k, l) for l in (10, 20, 40)]
    assert strictly_decreasing([p.deviation for p in preds])


def test_powersum_ratio_at_40():
    for k in (2, 4):
        assert abs(powersum_partial_check(P2, k, 40).ratio - 1) <= Fraction(1, 10)


def test_to_decimal():
    assert str(to_decimal(Fraction(1, 3))) == "0.333333333333"
