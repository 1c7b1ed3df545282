"""Reference data: stratum classes, degrees and Hurwitz numbers.

Expressions are stored as text in the package's own polynomial syntax and
parsed on demand, so a typo shows up as a test failure rather than as a
silently different constant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, Tuple

from .algebra import Polynomial, parse, var

LABELS = ("2^1", "1^2", "3^1", "1^1,2^1", "1^3", "2^1;2^1", "2^1;1^2", "1^2;1^2")

STRATA_GENERAL = {
    "2^1": "-ψ*ξ_0 + 2*ξ_1 - δ_{0,0}",
    "1^2": "1/2*ψ*ξ_0*(ξ_0 + 2) - 3*ξ_1 + δ_{0,0}",
    "3^1": "2*ξ_0*ψ^2 - 7*ξ_1*ψ - 5*δ_{0,0}*ψ + 6*ξ_2 + 2*δ_{1,0}",
    "1^1,2^1": "-ξ_0*(ξ_0 + 6)*ψ^2 + 2*(ξ_0 + 12)*ξ_1*ψ + (18 - ξ_0)*δ_{0,0}*ψ - 24*ξ_2 - 6*δ_{1,0}",
    "1^3": "1/6*ξ_0*(ξ_0^2 + 6*ξ_0 + 24)*ψ^2 - 1/3*(9*ξ_0 + 52)*ξ_1*ψ"
    " + 1/3*(3*ξ_0 - 40)*δ_{0,0}*ψ + 20*ξ_2 + 4*δ_{1,0}",
    "2^1;2^1": "1/2*(ξ_0 - 6)*ξ_0*ψ^2 - (2*ξ_0 - 11)*ξ_1*ψ + 1/2*δ_{0,0}^2 + 2*ξ_1^2 - 10*ξ_2"
    " + (ξ_0 + 7)*δ_{0,0}*ψ - 2*ξ_1*δ_{0,0} - 5/2*δ_{1,0}",
    "2^1;1^2": "-1/2*ξ_0*(ξ_0^2 - 2*ξ_0 - 12)*ψ^2 + (ξ_0^2 + ξ_0 - 27)*ξ_1*ψ - δ_{0,0}^2 - 6*ξ_1^2"
    " + 30*ξ_2 - 1/2*(ξ_0^2 + 42)*δ_{0,0}*ψ + 5*ξ_1*δ_{0,0} + 6*δ_{1,0}",
    "1^2;1^2": "1/8*(ξ_0 - 4)*ξ_0*(ξ_0^2 + 4*ξ_0 + 6)*ψ^2 - 3/4*(2*ξ_0^2 - 4*ξ_0 - 21)*ξ_1*ψ"
    " + 1/2*δ_{0,0}^2 + 9/2*ξ_1^2 - 45/2*ξ_2 + 1/4*(2*ξ_0^2 - 4*ξ_0 + 57)*δ_{0,0}*ψ"
    " - 3*ξ_1*δ_{0,0} - 7/2*δ_{1,0}",
}

STRATA_GENUS0 = {
    "2^1": "6*(n - 1)*ψ - 3*δ_{0,0}",
    "1^2": "2*(n - 6)*(n - 1)*ψ + 4*δ_{0,0}",
    "3^1": "-24*(n - 1)*ψ^2 + 2*δ_{0,0}*ψ + 6*ξ_2 + 2*δ_{1,0}",
    "1^1,2^1": "12*(n - 1)*(n + 6)*ψ^2 - 6*n*δ_{0,0}*ψ - 24*ξ_2 - 6*δ_{1,0}",
    "1^3": "4/3*(n - 1)*(n^2 - 17*n - 30)*ψ^2 + 4*(2*n - 1)*δ_{0,0}*ψ + 20*ξ_2 + 4*δ_{1,0}",
    "2^1;2^1": "2*(n - 1)*(9*n + 10)*ψ^2 - 2*(9*n - 7)*δ_{0,0}*ψ + 9/2*δ_{0,0}^2 - 10*ξ_2"
    " - 5/2*δ_{1,0}",
    "2^1;1^2": "12*(n - 9)*(n - 1)*n*ψ^2 - 6*(n^2 - 13*n + 11)*δ_{0,0}*ψ - 12*δ_{0,0}^2"
    " + 30*ξ_2 + 6*δ_{1,0}",
    "1^2;1^2": "(n - 1)*(2*n^3 - 30*n^2 + 145*n - 60)*ψ^2 + 1/2*(16*n^2 - 144*n + 125)*δ_{0,0}*ψ"
    " + 8*δ_{0,0}^2 - 45/2*ξ_2 - 7/2*δ_{1,0}",
}

RESIDUALS = {
    "1^2": "2*(Σ*Ψ - 3*Σ^2 + Δ)",
    "1^1,2^1": "-6*Σ*(2*Σ - Ψ)^2 + 6*Δ*(3*Ψ - N)",
    "1^3": "8*Σ*(15*Σ^2 - 13*Σ*Ψ + 3*Ψ^2) - 8*Δ*(10*Ψ - 3*N)",
    "1^1,3^1": "-4*Σ*(5*Σ - 3*Ψ)*(3*Σ - 2*Ψ)*(2*Σ - Ψ) + 4*Δ*(20*Ψ^2 - 17*N*Ψ + 6*N^2 - 8*Δ)",
    "2^2": "-3*Σ*(2*Σ - Ψ)*(20*Σ^2 - 25*Σ*Ψ + 8*Ψ^2) + 3*Δ*(25*Ψ^2 - 21*N*Ψ + 8*N^2 - 12*Δ)",
    "1^2,2^1": "24*Σ*(2*Σ - Ψ)*(15*Σ^2 - 17*Σ*Ψ + 5*Ψ^2) - 24*Δ*(20*Ψ^2 - 15*N*Ψ + 5*N^2 - 7*Δ)",
    "1^4": "-48*Σ*(105*Σ^3 - 160*Σ^2*Ψ + 84*Σ*Ψ^2 - 15*Ψ^3) + 48*Δ*(70*Ψ^2 - 48*N*Ψ + 15*N^2 - 21*Δ)",
}

# Σ,Ψ-parts obtained from the generating series alone
RESIDUALS_SIGMA_PSI = {
    "1^2": "-2*Σ*(3*Σ - Ψ)",
    "1^1,2^1": "-6*Σ*(2*Σ - Ψ)^2",
    "1^3": "8*Σ*(15*Σ^2 - 13*Σ*Ψ + 3*Ψ^2)",
    "1^1,3^1": "-4*Σ*(5*Σ - 3*Ψ)*(3*Σ - 2*Ψ)*(2*Σ - Ψ)",
    "2^2": "-3*Σ*(2*Σ - Ψ)*(20*Σ^2 - 25*Σ*Ψ + 8*Ψ^2)",
    "1^2,2^1": "24*Σ*(2*Σ - Ψ)*(15*Σ^2 - 17*Σ*Ψ + 5*Ψ^2)",
    "1^4": "-48*Σ*(105*Σ^3 - 160*Σ^2*Ψ + 84*Σ*Ψ^2 - 15*Ψ^3)",
}

RESIDUALS_PAIRS = {
    "2^1;2^1": "-2*Σ*(2*Σ - Ψ)*(5*Σ - 3*Ψ) + Δ*(14*Ψ - 5*N)",
    "2^1;1^2": "6*Σ*(2*Σ - Ψ)*(5*Σ - 2*Ψ) - 6*Δ*(7*Ψ - 2*N)",
    "1^2;1^2": "-6*Σ*(30*Σ^2 - 21*Ψ*Σ + 4*Ψ^2) + 2*Δ*(57*Ψ - 14*N)",
}

Q_POLYNOMIALS = {
    0: "-1",
    1: "2*N - 5*Ψ",
    2: "-(6*N^2 - 15*N*Ψ + 15*Ψ^2 - 8*Δ)",
    3: "24*N^3 - 62*N^2*Ψ + 63*N*Ψ^2 - 35*Ψ^3 - 60*N*Δ + 84*Ψ*Δ",
    4: "-(120*N^4 - 322*N^3*Ψ + 343*N^2*Ψ^2 - 196*N*Ψ^3 + 70*Ψ^4"
    " - 432*N^2*Δ + 812*N*Ψ*Δ - 469*Ψ^2*Δ + 180*Δ^2)",
}


@dataclass(frozen=True)
class ClosedForm:
    """c · P(n) · (a·n - b)! / (n - d)! · n^(n - e); factorial parts optional."""

    prefactor: str
    power_shift: int
    fact_num: Tuple[int, int] | None = None
    fact_den: int | None = None

    def poly(self) -> Polynomial:
        return parse(self.prefactor)

    def evaluate(self, n: int) -> Fraction:
        value = self.poly().evaluate({"n": n}) * Fraction(n) ** (n - self.power_shift)
        if self.fact_num is not None:
            a, b = self.fact_num
            top = a * n - b
            bottom = n - self.fact_den
            if top < 0 or bottom < 0:
                raise ValueError(f"factorial undefined at n={n}")
            value *= Fraction(factorial(top), factorial(bottom))
        return value

    def defined_at(self, n: int) -> bool:
        if self.fact_num is None:
            return True
        a, b = self.fact_num
        return a * n - b >= 0 and n - self.fact_den >= 0

    def text(self) -> str:
        s = f"({self.prefactor})"
        if self.fact_num is not None:
            a, b = self.fact_num
            s += f"*({a}n-{b})!/(n-{self.fact_den})!"
        return s + f"*n^(n-{self.power_shift})"


BASIC_DEGREES = {
    "1": ClosedForm("1", 3),
    "δ_{0,0}": ClosedForm("1/2*(n - 1)*(n + 6)", 4),
    "ξ_2": ClosedForm("1/3*(n - 1)*(17*n^2 - 28*n + 12)", 5),
    "δ_{1,0}": ClosedForm("-1/6*(n - 1)*(n^2 + 10*n - 120)", 5),
    "δ_{0,0}^2": ClosedForm("1/12*(n - 1)*(3*n^3 + 31*n^2 + 82*n - 120)", 5),
}

STRATA_DEGREES = {
    "2^1": ClosedForm("9/2*(n - 2)*(n - 1)", 4),
    "1^2": ClosedForm("2*(n - 3)*(n - 2)*(n - 1)", 4),
    "3^1": ClosedForm("32/3*(n - 3)*(n - 2)*(n - 1)", 5),
    "1^1,2^1": ClosedForm("9*(n - 4)*(n - 3)*(n - 2)*(n - 1)", 5),
    "1^3": ClosedForm("4/3*(n - 5)*(n - 4)*(n - 3)*(n - 2)*(n - 1)", 5),
    "2^1;2^1": ClosedForm("3/8*(n - 2)*(n - 1)*(27*n^2 - 137*n + 180)", 5),
    "2^1;1^2": ClosedForm("3*(n - 3)*(n - 2)*(n - 1)*(3*n^2 - 15*n + 20)", 5),
    "1^2;1^2": ClosedForm("(n - 3)*(n - 2)*(n - 1)*(2*n^3 - 16*n^2 + 43*n - 40)", 5),
}

HURWITZ = {
    "2^1": ClosedForm("9/2", 5, (2, 4), 3),
    "1^2": ClosedForm("2", 5, (2, 4), 4),
    "3^1": ClosedForm("32/3", 6, (2, 5), 4),
    "1^1,2^1": ClosedForm("9", 6, (2, 5), 5),
    "1^3": ClosedForm("4/3", 6, (2, 5), 6),
    "2^1;2^1": ClosedForm("3/4*(27*n^2 - 137*n + 180)", 6, (2, 6), 3),
    "2^1;1^2": ClosedForm("3*(3*n^2 - 15*n + 20)", 6, (2, 6), 4),
    "1^2;1^2": ClosedForm("2*(2*n^3 - 16*n^2 + 43*n - 40)", 6, (2, 6), 4),
}

I_INFTY = ClosedForm("1/8*(n - 1)*(n^3 + 11*n^2 + 34*n - 120)", 5)
# same prefactor with the n^(n-6) of a codimension-3 class; this is the
# normalization under which the corrections agree with the Hurwitz side
I_INFTY_CODIM3 = ClosedForm("1/8*(n - 1)*(n^3 + 11*n^2 + 34*n - 120)", 6)

CORRECTIONS = {"4^1": 5, "1^1,3^1": -16, "2^2": -9, "1^2,2^1": 36, "1^4": -16}


@lru_cache(maxsize=None)
def parsed(table: str, key) -> Polynomial:
    return parse(globals()[table][key])
