from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from artifact.algebra import Polynomial, parse, var
from artifact.grr import (
    ChernVector,
    GradedSeries,
    ch_from_chern,
    grr_rhs,
    koszul_ch,
    koszul_factor,
    power_sums,
    td_series,
    todd_generator,
)


def test_todd_generator():
    assert todd_generator(4) == [1, Fraction(1, 2), Fraction(1, 12), 0, Fraction(-1, 720)]


def test_td_display():
    td = td_series(ChernVector.symbolic(4), 4)
    assert td[1] == parse("1/2*c_1")
    assert td[2] == parse("1/12*(c_1^2 + c_2)")
    assert td[3] == parse("1/24*c_1*c_2")
    assert td[4] == parse("1/720*(-c_1^4 + 4*c_1^2*c_2 + c_1*c_3 + 3*c_2^2 - c_4)")


def test_power_sums_rank_two():
    p = power_sums(ChernVector.symbolic(2), 3)
    assert p[1] == parse("c_1")
    assert p[2] == parse("c_1^2 - 2*c_2")
    assert p[3] == parse("c_1^3 - 3*c_1*c_2")


def _named(rank, prefix):
    return ChernVector.symbolic(rank, [f"{prefix}{i}" for i in range(1, rank + 1)])


@given(st.integers(1, 3), st.integers(1, 3))
def test_whitney_multiplicativity(r, s):
    a, b = _named(r, "a"), _named(s, "b")
    order = 4
    assert td_series(a.direct_sum(b), order) == td_series(a, order) * td_series(b, order)
    assert ch_from_chern(a.direct_sum(b), order) == ch_from_chern(a, order) + ch_from_chern(b, order)


@given(st.integers(1, 3))
def test_dual_ch(r):
    a = _named(r, "a")
    ch, chd = ch_from_chern(a, 4), ch_from_chern(a.dual(), 4)
    for d in range(5):
        assert chd[d] == ch[d] * (-1) ** d


@pytest.mark.parametrize("order", range(1, 6))
def test_koszul_rank_one(order):
    # 1 - e^{-Σ} = Σ · td(O(Σ))^{-1}
    lhs = koszul_ch(1, order)
    rhs = GradedSeries([Polynomial()] + [Polynomial()] * order)
    td_inv = td_series(ChernVector([var("Σ")], 1), order).inverse()
    rhs = GradedSeries([Polynomial()] + [var("Σ") * td_inv[d - 1] for d in range(1, order + 1)])
    assert lhs == rhs


@pytest.mark.parametrize("order", range(2, 6))
def test_koszul_rank_two(order):
    lhs = koszul_ch(2, order)
    td_inv = td_series(ChernVector([var("N_1"), var("N_2")], 2), order).inverse()
    rhs = GradedSeries([Polynomial(), Polynomial()] + [var("N_2") * td_inv[d - 2] for d in range(2, order + 1)])
    assert lhs == rhs


def test_koszul_factor_low_degrees():
    k = koszul_factor(3)
    assert k[1] == parse("-1/2*N_1")
    # derived value; the c_2-coefficient is -1/12, not +1/12·(N_1^2 - N_2)
    assert k[2] == parse("1/6*N_1^2 - 1/12*N_2")
    assert k[3] == parse("-1/24*(N_1^3 - N_1*N_2)")


def test_grr_levels():
    got = {d: (c, cls) for d, c, cls in grr_rhs(6)}
    assert sorted(got) == [1, 2, 4, 6]
    assert got[1] == (Fraction(1, 2), parse("c1ω"))
    assert got[2] == (Fraction(1, 12), parse("c1ω^2 + Δ"))
    assert got[4] == (Fraction(-1, 720), parse("c1ω^4 + N^2*Δ - 3*Δ^2"))
    assert got[6] == (Fraction(1, 30240), parse("c1ω^6 + N^4*Δ - 5*N^2*Δ^2 + 5*Δ^3"))


def test_order_bounds():
    with pytest.raises(ValueError):
        td_series(ChernVector.symbolic(2), 7)
    with pytest.raises(ValueError):
        koszul_ch(3, 2)
