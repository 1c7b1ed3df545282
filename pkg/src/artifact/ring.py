"""Basic classes on the universal curve and pushforwards to the base.

On X the generators are Ψ, Σ, Π, Δ and the operator N (meaningful only
next to Δ); c1ω stands for c₁(ω) and is always eliminated through
``c1ω = Σ - Ψ - 2Π``.  The relations

    Π² = -ΨΠ,   ΣΠ = 0,   ΠΔ = 0,   ΣΔ = ΨΔ

bring every polynomial to the form ``P1(Ψ)Π + P2(Ψ,Σ) + P3(Ψ,N,Δ)Δ``.

On the base B the classes are ψ, ξ_k = p_*(Σ^{k+1}), δ_{k,l} = p_*(N^kΔ^{l+1})
with coefficients polynomial in n and g.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .algebra import AlgebraError, Polynomial, WeightTable, parse, var

SIGMA, PSI, PI, DELTA, N, C1W = (var(v) for v in ("Σ", "Ψ", "Π", "Δ", "N", "c1ω"))
psi, n_sym, g_sym = var("ψ"), var("n"), var("g")

X_WEIGHTS = WeightTable({"Σ": 1, "Ψ": 1, "Π": 1, "N": 1, "Δ": 2, "c1ω": 1})

RULES = ("PiPi", "SigmaPi", "PiDelta", "SigmaDelta")


class MalformedClass(AlgebraError):
    pass


class PoleObstruction(AlgebraError):
    pass


def xi(k: int) -> Polynomial:
    return var(f"ξ_{k}")


def delta(k: int, l: int) -> Polynomial:
    return var(f"δ_{{{k},{l}}}")


# ---------------------------------------------------------------- reduction
def _reduce_monomial(e: Dict[str, int], disabled: FrozenSet[str] = frozenset()):
    """Normal form of one monomial: returns (sign, exponents) or None for 0."""
    e = dict(e)
    s, p, pi, d, nn = (e.get(v, 0) for v in ("Σ", "Ψ", "Π", "Δ", "N"))
    if pi and d and "PiDelta" not in disabled:
        return None
    if pi and s and "SigmaPi" not in disabled:
        return None
    sign = 1
    if pi >= 2 and "PiPi" not in disabled:
        sign = (-1) ** (pi - 1)
        p += pi - 1
        pi = 1
    if d and s and "SigmaDelta" not in disabled:
        p += s
        s = 0
    out = {"Σ": s, "Ψ": p, "Π": pi, "Δ": d, "N": nn}
    for v, x in e.items():
        if v not in out:
            out[v] = x
    return sign, {v: x for v, x in out.items() if x}


def reduce(expr, disabled: Iterable[str] = ()) -> "XClass":
    """Canonical form in the quotient ring; ``disabled`` switches rules off."""
    if isinstance(expr, str):
        expr = parse(expr)
    disabled = frozenset(disabled)
    expr = Polynomial.coerce(expr).substitute({"c1ω": SIGMA - PSI - 2 * PI})
    out: Dict = {}
    for m, c in expr.terms.items():
        r = _reduce_monomial(dict(m), disabled)
        if r is None:
            continue
        sign, e = r
        key = tuple(sorted(e.items()))
        out[key] = out.get(key, 0) + sign * c
    value = Polynomial(out)
    if not disabled:
        for m in value.terms:
            d = dict(m)
            if d.get("N") and not d.get("Δ"):
                raise MalformedClass(f"N without Δ in {value}")
    return XClass(value)


@dataclass(frozen=True)
class XClass:
    value: Polynomial

    @property
    def p1(self) -> Polynomial:
        return self.value.coeff_of("Π", 1)

    @property
    def p2(self) -> Polynomial:
        return Polynomial(
            {m: c for m, c in self.value.terms.items() if not dict(m).get("Π") and not dict(m).get("Δ")}
        )

    @property
    def p3(self) -> Polynomial:
        rest = Polynomial({m: c for m, c in self.value.terms.items() if dict(m).get("Δ")})
        return rest.divide_by_var("Δ") if rest else rest

    def __mul__(self, other):
        other = other.value if isinstance(other, XClass) else other
        return reduce(self.value * other)

    def __add__(self, other):
        other = other.value if isinstance(other, XClass) else other
        return reduce(self.value + other)

    def is_zero(self) -> bool:
        return self.value.is_zero()

    def __str__(self):
        return self.value.to_text()


def rewrite_randomly(mono: Dict[str, int], rng: random.Random, disabled: Iterable[str] = ()):
    """Apply single relations in random order until none applies.

    Independent of :func:`reduce`; used to test confluence.  Returns
    (sign, exponents) or None.
    """
    e = {v: x for v, x in mono.items() if x}
    if e.get("c1ω"):
        raise ValueError("eliminate c1ω first")
    disabled = set(disabled)
    sign = 1
    while True:
        options = []
        if e.get("Π", 0) >= 2 and "PiPi" not in disabled:
            options.append("PiPi")
        if e.get("Σ") and e.get("Π") and "SigmaPi" not in disabled:
            options.append("SigmaPi")
        if e.get("Π") and e.get("Δ") and "PiDelta" not in disabled:
            options.append("PiDelta")
        if e.get("Σ") and e.get("Δ") and "SigmaDelta" not in disabled:
            options.append("SigmaDelta")
        if not options:
            return sign, e
        rule = rng.choice(options)
        if rule in ("SigmaPi", "PiDelta"):
            return None
        if rule == "PiPi":
            # one step: Π·Π -> -Ψ·Π
            e["Π"] -= 1
            e["Ψ"] = e.get("Ψ", 0) + 1
            sign = -sign
        else:
            e["Σ"] -= 1
            e["Ψ"] = e.get("Ψ", 0) + 1
        e = {v: x for v, x in e.items() if x}


# ---------------------------------------------------------------- series helpers
def truncate(p: Polynomial, order: int, weights: WeightTable = X_WEIGHTS) -> Polynomial:
    return Polynomial({m: c for m, c in p.terms.items() if weights.mono_weight(m) <= order})


def geometric(x: Polynomial, order: int, weights: WeightTable = X_WEIGHTS) -> Polynomial:
    """1/(1-x) truncated at weighted order; x must have no constant term."""
    if x.constant_term():
        raise ValueError("geometric series needs x without constant term")
    total = Polynomial.const(1)
    power = Polynomial.const(1)
    for _ in range(order):
        power = truncate(power * x, order, weights)
        if power.is_zero():
            break
        total = total + power
    return total


def total_chern_f(order: int) -> XClass:
    """(1+Ψ)(1/(1-Σ+Ψ) - Δ/(1+N+Δ)) truncated at ``order``."""
    series = (1 + PSI) * (geometric(SIGMA - PSI, order) - DELTA * geometric(-N - DELTA, order))
    return reduce(truncate(series, order))


def chern_f_from_p_and_q(order: int, disabled: Iterable[str] = ()) -> XClass:
    """c(p)/f^*c(q) with c(q) = 1/(1+Ψ_Y+2Π_Y) pulled back and
    c(p) = (1 - Δ/(1+N+Δ))/(1 - c1ω)."""
    cp = geometric(C1W, order) * (1 - DELTA * geometric(-N - DELTA, order))
    series = truncate((1 + PSI + 2 * PI) * truncate(cp, order), order)
    return reduce(series, disabled)


def verify_thm33(order: int, disabled: Iterable[str] = ()) -> Dict[str, object]:
    lhs = chern_f_from_p_and_q(order, disabled)
    rhs = reduce(truncate(
        (1 + PSI) * (geometric(SIGMA - PSI, order) - DELTA * geometric(-N - DELTA, order)), order
    ), disabled)
    diff = lhs.value - rhs.value
    return {"order": order, "ok": diff.is_zero(), "difference": diff}


# ---------------------------------------------------------------- pushforwards
def _as_base(x, default: str) -> Polynomial:
    if x is None:
        return var(default)
    if isinstance(x, str):
        return var(x)
    return Polynomial.coerce(x)


def p_push(x, n=None, g=None, substitute_xi0: bool = False) -> Polynomial:
    """p_* on a canonical class; Π maps to n, 1 maps to 0."""
    if not isinstance(x, XClass):
        x = reduce(x)
    n_val = _as_base(n, "n")
    out = Polynomial()
    for m, c in x.value.terms.items():
        e = dict(m)
        a = e.pop("Ψ", 0)
        s = e.pop("Σ", 0)
        pi = e.pop("Π", 0)
        d = e.pop("Δ", 0)
        k = e.pop("N", 0)
        base = Polynomial({tuple(sorted(e.items())): c})
        if pi:
            image = n_val
        elif d:
            image = delta(k, d - 1)
        elif s:
            image = xi(s - 1)
        elif k:
            raise MalformedClass("N without Δ")
        else:
            continue
        out = out + base * psi ** a * image
    if substitute_xi0:
        out = out.substitute({"ξ_0": xi0_value(n, g)})
    return out


def xi0_value(n=None, g=None) -> Polynomial:
    return 2 * _as_base(n, "n") - 2 + 2 * _as_base(g, "g")


@dataclass
class YProduct:
    factors: List[XClass] = field(default_factory=list)
    psiY_exp: int = 0
    piY_exp: int = 0


def q_push_product(ys: YProduct, n=None, g=None) -> Polynomial:
    """q_*(Ψ_Y^a Π_Y^b ∏ f_*(h_i)) for classes with h_i·Π = 0."""
    pushed = []
    for h in ys.factors:
        h = h if isinstance(h, XClass) else reduce(h)
        if not (h * PI).is_zero():
            raise PoleObstruction(f"{h} does not annihilate Π")
        pushed.append(p_push(h, n, g))
    # f_*(h) = q^*(p_*h)(Ψ_Y + Π_Y); collect Ψ_Y^i Π_Y^j, then Π_Y^j = (-Ψ_Y)^{j-1} Π_Y
    s = len(pushed)
    total_pi_coeff = Polynomial()
    for j in range(s + 1):
        jj = j + ys.piY_exp
        ii = s - j + ys.psiY_exp
        if jj == 0:
            continue  # q_* kills pure Ψ_Y powers
        coeff = comb(s, j) * (-1) ** (jj - 1)
        total_pi_coeff = total_pi_coeff + coeff * psi ** (ii + jj - 1)
    result = total_pi_coeff
    for b in pushed:
        result = result * b
    return result


# ---------------------------------------------------------------- genus zero
def genus0_reduce(b: Polynomial, n=None) -> Polynomial:
    """ξ₀ = 2n-2 and ξ₁ = 4(n-1)ψ - δ_{0,0}, with g = 0."""
    n_val = _as_base(n, "n")
    b = b.substitute({"g": 0})
    return b.substitute({"ξ_0": 2 * n_val - 2, "ξ_1": 4 * (n_val - 1) * psi - delta(0, 0)})


def hodge_ch(level: int, n=None, g=None) -> Polynomial:
    """ch_level of the Hodge bundle via the GRR right-hand side."""
    from .grr import grr_rhs

    target = level + 1
    for d, coef, cls in grr_rhs(6):
        if d == target:
            return p_push(reduce(coef * cls), n, g, substitute_xi0=True)
    if target <= 6:
        return Polynomial()
    raise ValueError("levels above 5 are not expanded")


def genus0_identities(n=None) -> List[Polynomial]:
    """Vanishing relations p_*(level class) = 0 in genus zero, ξ₀ substituted."""
    from .grr import grr_rhs

    out = []
    for d, coef, cls in grr_rhs(6):
        if d >= 2:
            out.append(p_push(reduce(cls), n, 0, substitute_xi0=True))
    return out
