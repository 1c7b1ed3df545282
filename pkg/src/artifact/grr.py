"""Chern character, Todd class and Koszul resolvents as graded series.

Chern roots are never introduced: classes are turned into power sums by
Newton's identities and every series in the roots is written through
``log`` of its one-variable generating function.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import List, Sequence, Tuple

from .algebra import Polynomial, WeightTable, homogeneous_part, var

MAX_ORDER = 6

CHERN_WEIGHTS = WeightTable(
    {**{f"c_{i}": i for i in range(1, 13)}, "N_1": 1, "N_2": 2, "N": 1, "Δ": 2, "Σ": 1, "Ψ": 1,
     "Π": 1, "c1ω": 1}
)


def c(i: int) -> Polynomial:
    return var(f"c_{i}")


@dataclass
class GradedSeries:
    components: List[Polynomial]

    @property
    def order(self) -> int:
        return len(self.components) - 1

    def __getitem__(self, d: int) -> Polynomial:
        return self.components[d] if d < len(self.components) else Polynomial()

    def total(self) -> Polynomial:
        out = Polynomial()
        for p in self.components:
            out = out + p
        return out

    def __add__(self, other: "GradedSeries") -> "GradedSeries":
        k = max(self.order, other.order)
        return GradedSeries([self[d] + other[d] for d in range(k + 1)])

    def __sub__(self, other: "GradedSeries") -> "GradedSeries":
        k = max(self.order, other.order)
        return GradedSeries([self[d] - other[d] for d in range(k + 1)])

    def __mul__(self, other: "GradedSeries") -> "GradedSeries":
        k = min(self.order, other.order)
        out = [Polynomial() for _ in range(k + 1)]
        for i in range(k + 1):
            for j in range(k + 1 - i):
                out[i + j] = out[i + j] + self[i] * other[j]
        return GradedSeries(out)

    def scale(self, x) -> "GradedSeries":
        return GradedSeries([p * x for p in self.components])

    def inverse(self) -> "GradedSeries":
        a0 = self[0]
        if not a0.is_constant() or a0.is_zero():
            raise ValueError("series needs a nonzero constant term")
        inv0 = 1 / a0.constant_term()
        out = [Polynomial.const(inv0)]
        for d in range(1, self.order + 1):
            s = Polynomial()
            for i in range(1, d + 1):
                s = s + self[i] * out[d - i]
            out.append(s * (-inv0))
        return GradedSeries(out)

    def __eq__(self, other):
        if not isinstance(other, GradedSeries):
            return NotImplemented
        k = max(self.order, other.order)
        return all(self[d] == other[d] for d in range(k + 1))


@dataclass
class ChernVector:
    c: List[Polynomial] = field(default_factory=list)
    rank: int = 0

    @classmethod
    def symbolic(cls, rank: int, names: Sequence[str] | None = None) -> "ChernVector":
        names = names or [f"c_{i}" for i in range(1, rank + 1)]
        return cls([var(v) for v in names], rank)

    def chern(self, i: int) -> Polynomial:
        if i == 0:
            return Polynomial.const(1)
        return self.c[i - 1] if i <= len(self.c) else Polynomial()

    def dual(self) -> "ChernVector":
        return ChernVector([p * (-1) ** (i + 1) for i, p in enumerate(self.c)], self.rank)

    def direct_sum(self, other: "ChernVector") -> "ChernVector":
        k = max(len(self.c), len(other.c))
        out = []
        for i in range(1, k + len(other.c) + 1):
            s = Polynomial()
            for j in range(0, i + 1):
                s = s + self.chern(j) * other.chern(i - j)
            out.append(s)
        while out and out[-1].is_zero():
            out.pop()
        return ChernVector(out, self.rank + other.rank)


def power_sums(cv: ChernVector, order: int) -> List[Polynomial]:
    """p_0..p_order of the Chern roots, by Newton's identities."""
    p = [Polynomial.const(cv.rank)]
    for k in range(1, order + 1):
        s = cv.chern(k) * ((-1) ** (k - 1) * k)
        for i in range(1, k):
            s = s + cv.chern(i) * p[k - i] * (-1) ** (i - 1)
        p.append(s)
    return p


def _check_order(order: int):
    if order > MAX_ORDER or order < 0:
        raise ValueError(f"order must be in 0..{MAX_ORDER}")


def ch_from_chern(cv: ChernVector, order: int) -> GradedSeries:
    _check_order(order)
    p = power_sums(cv, order)
    return GradedSeries([p[0]] + [p[d] / factorial(d) for d in range(1, order + 1)])


# ---- one-variable series with Fraction coefficients
def _series_log(a: List[Fraction]) -> List[Fraction]:
    """log of a power series with a[0] = 1."""
    k = len(a) - 1
    out = [Fraction(0)] * (k + 1)
    for m in range(1, k + 1):
        s = m * a[m]
        for j in range(1, m):
            s -= j * out[j] * a[m - j]
        out[m] = s / m
    return out


def _series_exp(g: GradedSeries) -> GradedSeries:
    """exp of a graded series without constant term."""
    out = [Polynomial.const(1)]
    k = g.order
    for m in range(1, k + 1):
        s = Polynomial()
        for j in range(1, m + 1):
            s = s + g[j] * out[m - j] * j
        out.append(s / m)
    return GradedSeries(out)


def _multiplicative(cv: ChernVector, order: int, gen: List[Fraction]) -> GradedSeries:
    """∏ Q(e_i) over Chern roots where Q has Taylor coefficients ``gen``."""
    _check_order(order)
    lg = _series_log(gen[: order + 1])
    p = power_sums(cv, order)
    return _series_exp(GradedSeries([Polynomial()] + [p[d] * lg[d] for d in range(1, order + 1)]))


def todd_generator(order: int) -> List[Fraction]:
    """Taylor coefficients of x/(1-e^{-x})."""
    f = [Fraction((-1) ** j, factorial(j + 1)) for j in range(order + 1)]  # (1-e^{-x})/x
    inv = [Fraction(1)]
    for d in range(1, order + 1):
        inv.append(-sum(f[i] * inv[d - i] for i in range(1, d + 1)))
    return inv


def td_series(cv: ChernVector, order: int) -> GradedSeries:
    return _multiplicative(cv, order, todd_generator(order))


def exp_class(x: Polynomial, order: int) -> GradedSeries:
    """exp(x) for a degree-one class x."""
    return GradedSeries([x ** d / factorial(d) for d in range(order + 1)])


def koszul_ch(codim: int, order: int) -> GradedSeries:
    """ch of the structure sheaf of a codim 1 (class Σ) or codim 2
    (normal bundle with N_1, N_2) zero locus, from the Koszul complex."""
    _check_order(order)
    if codim == 1:
        return GradedSeries([Polynomial.const(1)] + [Polynomial()] * order) - exp_class(-var("Σ"), order)
    if codim == 2:
        dual = ChernVector([-var("N_1"), var("N_2")], 2)
        one = GradedSeries([Polynomial.const(1)] + [Polynomial()] * order)
        return exp_class(-var("N_1"), order) + one - ch_from_chern(dual, order)
    raise ValueError("codim must be 1 or 2")


def koszul_factor(order: int) -> GradedSeries:
    """ch(i_*O_Z) / Z for codim 2, Z identified with N_2."""
    s = koszul_ch(2, order + 2)
    return GradedSeries([s[d + 2].divide_by_var("N_2") for d in range(order + 1)])


def grr_rhs(order: int = MAX_ORDER) -> List[Tuple[int, Fraction, Polynomial]]:
    """Levels d of ch(ω)·td(p)^{-1} as (d, coefficient, class).

    Since c₁(ω)·Δ = 0 the product splits into x/(1-e^{-x}) at x = c₁(ω)
    plus the Todd class of the virtual sheaf with c = 1 + Δ/(1+N).  The
    class is normalized so the c₁(ω)^d term has coefficient 1; levels with
    zero contribution are omitted.
    """
    _check_order(order)
    x = var("c1ω")
    gen = todd_generator(order)
    cvec = [Polynomial()] + [var("Δ") * (-var("N")) ** (i - 2) for i in range(2, order + 1)]
    td_virtual = td_series(ChernVector(cvec, 0), order)
    out = []
    for d in range(1, order + 1):
        level = x ** d * gen[d] + td_virtual[d]
        if level.is_zero():
            continue
        lead = level.coeff({"c1ω": d})
        if lead == 0:
            raise ArithmeticError(f"level {d} lacks a c1ω^{d} term")
        out.append((d, lead, level / lead))
    return out
