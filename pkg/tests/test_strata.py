from fractions import Fraction

import pytest

from artifact import tables
from artifact.algebra import parse, var
from artifact.ring import genus0_reduce
from artifact.strata import (
    ConventionMismatch,
    DimensionMismatch,
    UnknownLabel,
    UnknownMonomialDegree,
    assemble,
    cayley_sum,
    correction,
    degree,
    degree_closed_form,
    degree_from_hurwitz,
    h_closed_form,
    hurwitz_number,
    i_infty,
    mzn_psi_integral,
    sigma_g0,
    sigma_general,
)

LABELS = tables.LABELS


@pytest.mark.parametrize("label", LABELS)
def test_general_lines(label):
    assert sigma_general(label) == tables.parsed("STRATA_GENERAL", label)
    assemble(label, check=True)


@pytest.mark.parametrize("label", LABELS)
def test_genus0_lines(label):
    assert sigma_g0(label) == tables.parsed("STRATA_GENUS0", label)
    assert genus0_reduce(tables.parsed("STRATA_GENERAL", label)) == tables.parsed("STRATA_GENUS0", label)


def test_examples():
    assert sigma_general("2^1") == parse("-ψ*ξ_0 + 2*ξ_1 - δ_{0,0}")
    assert sigma_g0("1^2") == parse("2*(n - 6)*(n - 1)*ψ + 4*δ_{0,0}")


def test_codim_bound():
    with pytest.raises(ValueError):
        sigma_g0("1^4")
    with pytest.raises(ValueError):
        sigma_general("1^1")


def test_degree_examples():
    assert degree(parse("1"), 4) == 4
    assert degree(var("δ_{0,0}"), 4) == 15
    assert degree(sigma_g0("2^1"), 3) == 3
    assert degree(var("ψ") ** 2 * var("δ_{0,0}"), 5) == degree(var("δ_{0,0}"), 5)
    with pytest.raises(UnknownMonomialDegree):
        degree(var("ξ_3"), 6)


@pytest.mark.parametrize("label", LABELS)
def test_strata_degrees(label):
    form = degree_closed_form(label)
    for n in range(3, 13):
        assert degree(sigma_g0(label), n) == form.evaluate(n)


@pytest.mark.parametrize("label", LABELS)
def test_hurwitz_closed_forms(label):
    form = h_closed_form(label)
    for n in range(4, 13):
        if form.defined_at(n):
            h = hurwitz_number(label, n)
            assert h == form.evaluate(n)
            assert degree_from_hurwitz(label, n, h) == degree(sigma_g0(label), n)


def test_hurwitz_examples():
    assert hurwitz_number("2^1", 3) == 1
    assert hurwitz_number("1^2", 4) == 12
    assert hurwitz_number("2^1;2^1", 4) == 6


def test_psi_integrals():
    assert mzn_psi_integral((0, 0, 0)) == 1
    assert mzn_psi_integral((1, 0, 0, 0)) == 1
    assert mzn_psi_integral((2, 0, 0, 0, 0)) == 1
    assert mzn_psi_integral((1, 1, 0, 0, 0)) == 2
    with pytest.raises(DimensionMismatch):
        mzn_psi_integral((1, 1, 0))


@pytest.mark.parametrize("n", range(3, 10))
def test_cayley(n):
    assert cayley_sum(n) == Fraction(n) ** (n - 3)


def test_infinity_data():
    assert i_infty(4) == 24
    assert correction("4^1") == 5
    assert correction("2^2") == -9
    with pytest.raises(UnknownLabel):
        correction("2^1")
    with pytest.raises(UnknownLabel):
        h_closed_form("4^1")


def test_infinity_normalizations():
    from artifact.strata import i_infty_codim3

    for n in range(4, 13):
        assert i_infty_codim3(n) * n == i_infty(n)
