from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from artifact.algebra import (
    LOCAL_WEIGHTS,
    LinearSystem,
    MissingWeight,
    NotHomogeneous,
    ParseError,
    Polynomial,
    SolveStatus,
    ZeroPolynomial,
    homogeneous_part,
    parse,
    solve_linear,
    var,
    weighted_degree,
)

NAMES = ["Σ", "Ψ", "Δ", "N"]
SYM = {v: sympy.Symbol(f"x{i}") for i, v in enumerate(NAMES)}

coefs = st.fractions(min_value=-20, max_value=20, max_denominator=6)
monos = st.dictionaries(st.sampled_from(NAMES), st.integers(1, 3), max_size=3)
polys = st.lists(st.tuples(monos, coefs), max_size=5).map(
    lambda ts: sum((c * Polynomial({tuple(sorted(m.items())): 1}) for m, c in ts), Polynomial())
)


def to_sympy(p: Polynomial):
    out = sympy.Integer(0)
    for m, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for v, e in m:
            term *= SYM[v] ** e
        out += term
    return sympy.expand(out)


# ---- arithmetic against sympy
@given(polys, polys)
def test_add_mul_match_sympy(a, b):
    assert to_sympy(a + b) == sympy.expand(to_sympy(a) + to_sympy(b))
    assert to_sympy(a * b) == sympy.expand(to_sympy(a) * to_sympy(b))


@given(polys, st.integers(0, 3))
def test_pow_matches_sympy(a, e):
    assert to_sympy(a ** e) == sympy.expand(to_sympy(a) ** e)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Polynomial()
    assert a * 1 == a


@given(polys, polys, polys, polys)
def test_substitution_is_a_homomorphism(a, b, x, y):
    sub = {"Σ": x, "Ψ": y}
    assert (a * b).substitute(sub) == a.substitute(sub) * b.substitute(sub)
    assert (a + b).substitute(sub) == a.substitute(sub) + b.substitute(sub)


def test_substitution_is_simultaneous():
    p = parse("Σ + 2*Ψ")
    assert p.substitute({"Σ": var("Ψ"), "Ψ": var("Σ")}) == parse("Ψ + 2*Σ")


# ---- text and json
def test_canonical_text():
    assert parse("2*(Σ*Ψ - 3*Σ^2 + Δ)").to_text() == "2*Σ*Ψ - 6*Σ^2 + 2*Δ"
    assert Polynomial().to_text() == "0"
    assert parse("-1/2*ψ").to_text() == "-1/2*ψ"


@given(polys)
def test_text_round_trip(p):
    assert parse(p.to_text()) == p
    assert parse(p.to_text()).to_text() == p.to_text()


@given(polys)
def test_json_round_trip(p):
    assert Polynomial.from_json(p.to_json()) == p


def test_parse_names_and_aliases():
    assert parse("δ_{0,0}") == var("δ_{0,0}")
    assert parse("delta_{1,0} + xi2") == var("δ_{1,0}") + var("ξ_2")
    assert parse("Sigma*Psi") == var("Σ") * var("Ψ")
    assert parse("c1ω") == var("c1ω")
    assert parse("3*ξ_2*ψ^2") == 3 * var("ξ_2") * var("ψ") ** 2


@pytest.mark.parametrize("bad", ["Σ +", "(Σ", "Σ^", "2**", "Σ $ Ψ"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse(bad)


# ---- grading
def test_weighted_degree():
    assert weighted_degree(parse("Σ*Ψ + Δ")) == 2
    with pytest.raises(NotHomogeneous):
        weighted_degree(parse("Σ + Δ"))
    with pytest.raises(ZeroPolynomial):
        weighted_degree(Polynomial())
    with pytest.raises(MissingWeight):
        weighted_degree(parse("Σ*q"))


def test_homogeneous_part():
    p = parse("Σ + Δ + Σ*Ψ + 3")
    assert homogeneous_part(p, 2, LOCAL_WEIGHTS) == parse("Δ + Σ*Ψ")


# ---- linear systems
def test_solve_unique():
    s = LinearSystem(["x", "y"])
    s.add_row([1, 1], 3)
    s.add_row([1, -1], 1)
    assert solve_linear(s) == {"x": 2, "y": 1}


def test_solve_status():
    s = LinearSystem(["x", "y"])
    s.add_row([1, 1], 3)
    assert solve_linear(s) is SolveStatus.UNDERDETERMINED
    s.add_row([2, 2], 5)
    # inconsistency wins over rank deficiency
    assert solve_linear(s) is SolveStatus.INCONSISTENT


@given(st.integers(1, 5).flatmap(lambda k: st.tuples(
    st.just(k),
    st.lists(st.lists(st.integers(-5, 5), min_size=k, max_size=k), min_size=k, max_size=k),
    st.lists(st.fractions(-10, 10, max_denominator=5), min_size=k, max_size=k))))
def test_solve_matches_sympy(data):
    k, rows, x = data
    m = sympy.Matrix(rows)
    names = [f"u{i}" for i in range(k)]
    s = LinearSystem(names)
    for r in rows:
        s.add_row(r, sum(Fraction(a) * b for a, b in zip(r, x)))
    sol = solve_linear(s)
    if m.rank() == k:
        assert sol == dict(zip(names, x))
    else:
        assert sol is SolveStatus.UNDERDETERMINED


def test_from_polynomials_rejects_nonlinear():
    from artifact.algebra import AlgebraError

    with pytest.raises(AlgebraError):
        LinearSystem.from_polynomials([parse("u*v - 1")], ["u", "v"])
