from fractions import Fraction

from hypothesis import given, strategies as st

from artifact import tables
from artifact.algebra import parse
from artifact.render import factor_univariate, latex_var, to_latex
from artifact.strata import sigma_g0


def test_latex_style():
    assert to_latex(sigma_g0("2^1")) == "6(n-1)\\psi-3\\delta_{0,0}"
    assert to_latex(sigma_g0("1^2")) == "2(n-6)(n-1)\\psi+4\\delta_{0,0}"
    assert to_latex(sigma_g0("2^1;1^2")).startswith("12(n-9)(n-1)n\\psi^2-6(n^2-13n+11)\\delta_{0,0}\\psi")


def test_vars():
    assert latex_var("ξ_2") == "\\xi_{2}"
    assert latex_var("δ_{1,0}") == "\\delta_{1,0}"
    assert to_latex(parse("0")) == "0"


def _expand(content, roots, prim):
    coeffs = [c * content for c in prim]
    for r in roots:
        shifted = [Fraction(0)] + coeffs
        for i in range(len(coeffs)):
            shifted[i] -= r * coeffs[i]
        coeffs = shifted
    return coeffs


@given(st.lists(st.fractions(-9, 9, max_denominator=3), min_size=1, max_size=5).filter(lambda c: c[-1] != 0))
def test_factorization_reconstructs(coeffs):
    content, roots, prim = factor_univariate(coeffs)
    assert _expand(content, roots, prim) == coeffs
    assert all(x.denominator == 1 for x in prim) and prim[-1] > 0
