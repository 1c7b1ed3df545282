"""Stratum classes on the base, genus-zero degrees and Hurwitz numbers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial, prod
from typing import Dict, Iterable, List, Optional

from . import clusters, tables
from .algebra import AlgebraError, Polynomial, var
from .local_models import CACHE, ResidualCache, residual
from .partitions import MultiPartition, aut_set_order, codim, m_count
from .ring import genus0_reduce, p_push, psi


class ConventionMismatch(AlgebraError):
    pass


class UnknownMonomialDegree(AlgebraError):
    pass


class UnknownLabel(KeyError):
    pass


class DimensionMismatch(ValueError):
    pass


def _label(label) -> MultiPartition:
    if isinstance(label, MultiPartition):
        return label
    return MultiPartition.parse(label)


@dataclass(frozen=True)
class StratumExpression:
    label: MultiPartition
    general_g: Polynomial
    genus0: Polynomial


def sigma_general(label, cache: ResidualCache = CACHE) -> Polynomial:
    """Class of the stratum in ψ, ξ_k, δ_{k,l} (ξ₀ kept symbolic)."""
    m = _label(label)
    if not m.is_stratum_label():
        raise ValueError("stratum labels exclude the simple partition 1^1")
    key = m.key()
    residual(key, cache)
    return clusters.evaluate(key, lambda I: p_push(cache.get(I)), psi, Polynomial())


def assemble(label, cache: ResidualCache = CACHE, check: bool = False) -> StratumExpression:
    m = _label(label)
    general = sigma_general(m, cache)
    expr = StratumExpression(m, general, genus0_reduce(general))
    if check and str(m) in tables.STRATA_GENERAL:
        if general != tables.parsed("STRATA_GENERAL", str(m)):
            raise ConventionMismatch(str(m))
    return expr


def sigma_g0(label, cache: ResidualCache = CACHE) -> Polynomial:
    m = _label(label)
    if codim(m) > 2:
        raise ValueError("genus-zero classes beyond codimension 2 involve nonisolated singularities")
    return genus0_reduce(sigma_general(m, cache))


def sigma_expected_g0(label, cache: ResidualCache = CACHE) -> Polynomial:
    """Genus-zero expression of any label ignoring nonisolated singularities."""
    return genus0_reduce(sigma_general(label, cache))


# ---------------------------------------------------------------- degrees
class DegreeTable:
    def __init__(self, forms: Dict[str, tables.ClosedForm] | None = None):
        self.forms = dict(forms or tables.BASIC_DEGREES)

    def value(self, name: str, n: int) -> Fraction:
        if name not in self.forms:
            raise UnknownMonomialDegree(name)
        return self.forms[name].evaluate(n)

    def names(self) -> List[str]:
        return list(self.forms)


DEGREES = DegreeTable()


def _basic_name(mono) -> str:
    rest = tuple((v, e) for v, e in mono if v not in ("ψ", "n"))
    if not rest:
        return "1"
    return "*".join(v if e == 1 else f"{v}^{e}" for v, e in rest)


def degree(b: Polynomial, n: int, table: DegreeTable = DEGREES) -> Fraction:
    """deg β = ∫ β/(1-ψ); a factor ψ^k does not change the degree."""
    b = genus0_reduce(b, n).substitute({"n": n})
    total = Fraction(0)
    for m, c in b.terms.items():
        total += c * table.value(_basic_name(m), n)
    return total


def mzn_psi_integral(a) -> Fraction:
    """∫ ψ_1^{a_1}⋯ψ_n^{a_n} over the moduli of n-pointed rational curves."""
    a = list(a)
    nn = len(a)
    if any(x < 0 for x in a) or sum(a) != nn - 3:
        raise DimensionMismatch(f"exponents {a} do not sum to {nn - 3}")
    return Fraction(factorial(nn - 3), prod(factorial(x) for x in a))


def compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def cayley_sum(n: int) -> Fraction:
    return sum((mzn_psi_integral(a) for a in compositions(n - 3, n)), Fraction(0))


# ---------------------------------------------------------------- Hurwitz numbers
def hurwitz_number(label, n: int, cache: ResidualCache = CACHE) -> Fraction:
    """aut · m!/n! · deg σ, m the number of simple critical values."""
    m = _label(label)
    mm = m_count(m, n, 0)
    return Fraction(aut_set_order(m) * factorial(mm), factorial(n)) * degree(sigma_g0(m, cache), n)


def degree_from_hurwitz(label, n: int, h: Fraction) -> Fraction:
    m = _label(label)
    return h * Fraction(factorial(n), aut_set_order(m) * factorial(m_count(m, n, 0)))


def h_closed_form(label) -> tables.ClosedForm:
    key = str(_label(label))
    if key not in tables.HURWITZ:
        raise UnknownLabel(key)
    return tables.HURWITZ[key]


def degree_closed_form(label) -> tables.ClosedForm:
    key = str(_label(label))
    if key not in tables.STRATA_DEGREES:
        raise UnknownLabel(key)
    return tables.STRATA_DEGREES[key]


def i_infty(n: int) -> Fraction:
    """deg(I_∞) as stored, with the factor n^(n-5)."""
    return tables.I_INFTY.evaluate(n)


def i_infty_codim3(n: int) -> Fraction:
    """deg(I_∞) with the n^(n-6) normalization; equals i_infty(n)/n."""
    return tables.I_INFTY_CODIM3.evaluate(n)


def correction(label) -> int:
    key = str(_label(label))
    if key not in tables.CORRECTIONS:
        raise UnknownLabel(key)
    return tables.CORRECTIONS[key]
