"""Named reproduction checks, shared by the command line and the test suite.

Each check returns a list of :class:`Item`.  Expected values come from the
stored reference tables or from an independent computation; nothing is
compared with a tolerance.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Dict, List

from . import tables
from .algebra import LinearSystem, Polynomial, SolveStatus, parse, solve_linear, var
from .grr import ChernVector, grr_rhs, td_series
from .local_models import (
    LocalModel,
    T,
    delta_monomials,
    models_I,
    pochhammer,
    residual,
    sigma_psi_part,
    solve_Q,
    thom_Ai,
)
from .oracle import TooLarge, hurwitz_oracle, naive_count, spec_for, count_connected
from .partitions import MultiPartition, NegativeSimplePoints, ReducedPartition
from .ring import genus0_identities, genus0_reduce, p_push, reduce, rewrite_randomly, verify_thm33
from .strata import (
    DEGREES,
    _basic_name,
    cayley_sum,
    degree,
    degree_from_hurwitz,
    hurwitz_number,
    i_infty,
    i_infty_codim3,
    sigma_expected_g0,
    sigma_general,
    sigma_g0,
)


@dataclass
class Item:
    name: str
    expected: str
    computed: str
    status: bool

    def to_json(self) -> dict:
        return {"name": self.name, "expected": self.expected, "computed": self.computed,
                "status": "PASS" if self.status else "FAIL"}


@dataclass
class Report:
    items: List[Item] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(i.status for i in self.items)

    def extend(self, items: List[Item]):
        self.items.extend(items)

    def to_json(self) -> dict:
        return {"items": [i.to_json() for i in self.items], "overall": "PASS" if self.overall else "FAIL"}

    def to_text(self) -> str:
        lines = [f"{'PASS' if i.status else 'FAIL'}  {i.name}" + ("" if i.status else
                 f"\n      expected: {i.expected}\n      computed: {i.computed}") for i in self.items]
        lines.append(f"{'PASS' if self.overall else 'FAIL'} ({len(self.items)} items)")
        return "\n".join(lines)


def _item(name, expected, computed) -> Item:
    return Item(name, str(expected), str(computed), expected == computed)


# ---------------------------------------------------------------- local side
def check_thom(imax: int = 8, kmax: int = 12) -> List[Item]:
    out = []
    for i in range(1, imax + 1):
        bad = [k for k in range(1, kmax + 1)
               if LocalModel.A(k).restrict(thom_Ai(i)) != pochhammer(k, i) * T ** i]
        out.append(Item(f"A_{i} on A_k, k<={kmax}", "(k)_i t^i", f"mismatch at k={bad}" if bad else "(k)_i t^i",
                        not bad))
    return out


def check_q(imax: int = 8) -> List[Item]:
    out = []
    for j, text in tables.Q_POLYNOMIALS.items():
        out.append(_item(f"Q_{j}", parse(text).to_text(), solve_Q(j + 2).to_text()))
    for i in range(2, imax + 1):
        count = len(delta_monomials(i - 2))
        ok = count == i * i // 4 == len(models_I(i))
        out.append(Item(f"unknowns for A_{i}", str(i * i // 4), f"{count} monomials, {len(models_I(i))} models", ok))
    return out


def check_residuals() -> List[Item]:
    out = []
    for lab, text in tables.RESIDUALS.items():
        out.append(_item(f"R_{{{lab}}}", parse(text).to_text(), residual(lab).to_text()))
    for lab, text in tables.RESIDUALS_SIGMA_PSI.items():
        alpha = ReducedPartition.parse(lab)
        out.append(_item(f"Σ,Ψ-part of R_{{{lab}}}", parse(text).to_text(), sigma_psi_part(alpha).to_text()))
    return out


def check_pairs() -> List[Item]:
    return [_item(f"R_{{{lab}}}", parse(text).to_text(), residual(lab).to_text())
            for lab, text in tables.RESIDUALS_PAIRS.items()]


# ---------------------------------------------------------------- universal curve
TD_DISPLAY = {
    1: "1/2*c_1",
    2: "1/12*(c_1^2 + c_2)",
    3: "1/24*c_1*c_2",
    4: "1/720*(-c_1^4 + 4*c_1^2*c_2 + c_1*c_3 + 3*c_2^2 - c_4)",
}

GRR_LEVELS = [
    (1, Fraction(1, 2), "c1ω"),
    (2, Fraction(1, 12), "c1ω^2 + Δ"),
    (4, Fraction(-1, 720), "c1ω^4 + N^2*Δ - 3*Δ^2"),
    (6, Fraction(1, 30240), "c1ω^6 + N^4*Δ - 5*N^2*Δ^2 + 5*Δ^3"),
]


def check_grr() -> List[Item]:
    out = []
    td = td_series(ChernVector.symbolic(4), 4)
    for d, text in TD_DISPLAY.items():
        out.append(_item(f"td degree {d}", parse(text).to_text(), td[d].to_text()))
    got = {d: (c, cls) for d, c, cls in grr_rhs(6)}
    if sorted(got) != [d for d, _, _ in GRR_LEVELS]:
        out.append(Item("nonzero levels", "[1, 2, 4, 6]", str(sorted(got)), False))
    for d, c, text in GRR_LEVELS:
        c2, cls = got.get(d, (None, Polynomial()))
        out.append(_item(f"level {d} coefficient", c, c2))
        out.append(_item(f"level {d} class", parse(text).to_text(), cls.to_text()))
    return out


def check_thm33(order: int = 6) -> List[Item]:
    res = verify_thm33(order)
    return [Item(f"c(T_f) = c(T_p)/c(T_q) to order {order}", "0", res["difference"].to_text(), res["ok"])]


def random_monomial(rng: random.Random) -> Dict[str, int]:
    e = {v: rng.randint(0, 4) for v in ("Σ", "Ψ", "Π", "Δ")}
    if e["Δ"]:
        e["N"] = rng.randint(0, 4)
    return e


def check_confluence(cases: int = 10_000, seed: int = 20240611) -> List[Item]:
    rng = random.Random(seed)
    bad = 0
    for _ in range(cases):
        e = random_monomial(rng)
        mono = Polynomial({tuple(sorted((v, x) for v, x in e.items() if x)): 1})
        normal = reduce(mono).value
        r = rewrite_randomly(e, rng)
        other = Polynomial() if r is None else r[0] * Polynomial({tuple(sorted(r[1].items())): 1})
        bad += normal != other
    return [Item(f"random rewriting agrees with normal form ({cases} monomials)", "0 disagreements",
                 f"{bad} disagreements", bad == 0)]


def check_genus0_identity() -> List[Item]:
    rel = p_push(reduce(parse("(Σ - Ψ - 2*Π)^2 + Δ")), None, 0, substitute_xi0=True)
    c = rel.coeff({"ξ_1": 1})
    if c == 0:
        return [Item("ξ_1 from the degree-2 level", "4*n*ψ - 4*ψ - δ_{0,0}", rel.to_text(), False)]
    solved = (rel - c * var("ξ_1")) * Fraction(-1) / c
    return [_item("ξ_1 from the degree-2 level", parse("4*(n - 1)*ψ - δ_{0,0}").to_text(), solved.to_text())]


# ---------------------------------------------------------------- base
def check_strata() -> List[Item]:
    out = []
    for lab in tables.LABELS:
        general = tables.parsed("STRATA_GENERAL", lab)
        g0 = tables.parsed("STRATA_GENUS0", lab)
        out.append(_item(f"σ_{{{lab}}} general", general.to_text(), sigma_general(lab).to_text()))
        out.append(_item(f"σ_{{{lab}}} g=0", g0.to_text(), sigma_g0(lab).to_text()))
        out.append(_item(f"σ_{{{lab}}} reduce(general)=g0", g0.to_text(), genus0_reduce(general).to_text()))
    return out


def _symbolic_degree(b: Polynomial, shift: int = 5) -> Polynomial:
    """n^(shift-n) · deg b as a polynomial in n, from the closed forms."""
    b = genus0_reduce(b)
    total = Polynomial()
    for m, c in b.terms.items():
        coef = Polynomial({tuple(x for x in m if x[0] == "n"): c})
        form = DEGREES.forms[_basic_name(m)]
        total = total + coef * form.poly() * var("n") ** (shift - form.power_shift)
    return total


def basic_degrees_from_oracle(ns=(6, 7, 8)) -> Dict[int, Dict[str, Fraction]]:
    """Solve for the five basic degrees from oracle Hurwitz numbers."""
    names = DEGREES.names()
    result = {}
    for n in ns:
        eqs = []
        for lab in tables.LABELS:
            d = degree_from_hurwitz(lab, n, hurwitz_oracle(lab, n))
            b = genus0_reduce(sigma_g0(lab), n).substitute({"n": n})
            eq = Polynomial.const(-d)
            for m, c in b.terms.items():
                eq = eq + c * var("_" + _basic_name(m))
            eqs.append(eq)
        sol = solve_linear(LinearSystem.from_polynomials(eqs, ["_" + x for x in names]))
        result[n] = sol if isinstance(sol, SolveStatus) else {k[1:]: v for k, v in sol.items()}
    return result


def check_degrees(nmin: int = 3, nmax: int = 12) -> List[Item]:
    out = []
    from_oracle = basic_degrees_from_oracle()
    for name in DEGREES.names():
        exp = {n: DEGREES.value(name, n) for n in from_oracle}
        got = {n: (s if isinstance(s, SolveStatus) else s[name]) for n, s in from_oracle.items()}
        out.append(_item(f"deg {name} from oracle Hurwitz numbers, n={sorted(from_oracle)}", exp, got))
    cay = {n: cayley_sum(n) for n in range(3, 10)}
    out.append(_item("deg 1 = sum of ψ-integrals", {n: DEGREES.value("1", n) for n in cay}, cay))
    for lab in tables.LABELS:
        form = tables.STRATA_DEGREES[lab]
        expected = form.poly() * var("n") ** (5 - form.power_shift)
        out.append(_item(f"deg σ_{{{lab}}} closed form", expected.to_text(),
                         _symbolic_degree(sigma_g0(lab)).to_text()))
        exp = [form.evaluate(n) for n in range(nmin, nmax + 1)]
        got = [degree(sigma_g0(lab), n) for n in range(nmin, nmax + 1)]
        out.append(_item(f"deg σ_{{{lab}}} n={nmin}..{nmax}", exp, got))
    return out


def check_hurwitz(nmin: int = 4, nmax: int = 12) -> List[Item]:
    out = []
    for lab in tables.LABELS:
        form = tables.HURWITZ[lab]
        ns = [n for n in range(nmin, nmax + 1) if form.defined_at(n)]
        exp = [form.evaluate(n) for n in ns]
        got = [hurwitz_number(lab, n) for n in ns]
        out.append(_item(f"h_{{{lab}}} n={ns[0]}..{ns[-1]}", exp, got))
    return out


def _feasible(lab, n) -> bool:
    try:
        spec_for(lab, n)
    except (TooLarge, NegativeSimplePoints):
        return False
    return True


def check_oracle(max_n: int = 6, naive_max: int = 5) -> List[Item]:
    out = []
    for lab in tables.LABELS:
        for n in range(3, max_n + 1):
            if not _feasible(lab, n):
                continue
            out.append(_item(f"h_{{{lab}}}({n}) oracle", hurwitz_number(lab, n), hurwitz_oracle(lab, n)))
            if n <= naive_max:
                spec = spec_for(lab, n)
                out.append(_item(f"h_{{{lab}}}({n}) naive path", count_connected(spec), naive_count(spec)))
    return out


def classical_one_point(lab, n: int) -> Fraction:
    """Hurwitz's formula for one non-simple branch point in genus zero."""
    alpha = MultiPartition.parse(lab).parts[0]
    mu = [a + 1 for a in alpha.parts]
    mu += [1] * (n - sum(mu))
    ell = len(mu)
    aut = 1
    for v in set(mu):
        aut *= factorial(mu.count(v))
    value = Fraction(factorial(n + ell - 2), aut) * Fraction(n) ** (ell - 3)
    for m in mu:
        value *= Fraction(m ** m, factorial(m))
    return value


def infty_system(n: int, i_deg, scale_unknown: bool = False):
    """deg σ^exp + c·deg I_∞ = deg σ for the five labels at degree n.

    Unknowns are the degrees of the codim-3 monomials missing from the
    degree table (and optionally a common scale on deg I_∞).
    """
    eqs, unknowns = [], set()
    for lab, c in tables.CORRECTIONS.items():
        b = genus0_reduce(sigma_expected_g0(lab), n).substitute({"n": n})
        lhs = -degree_from_hurwitz(lab, n, classical_one_point(lab, n))
        eq = (var("_scale") * c * i_deg(n) if scale_unknown else Polynomial.const(c * i_deg(n))) + lhs
        for m, coef in b.terms.items():
            name = _basic_name(m)
            if name in DEGREES.forms:
                eq = eq + coef * DEGREES.value(name, n)
            else:
                eq = eq + coef * var("_" + name)
                unknowns.add("_" + name)
        eqs.append(eq)
    names = sorted(unknowns) + (["_scale"] if scale_unknown else [])
    sol = solve_linear(LinearSystem.from_polynomials(eqs, names))
    return sol if isinstance(sol, SolveStatus) else {k[1:]: v for k, v in sol.items()}


def check_infty_data(ns=range(8, 13)) -> List[Item]:
    out = [_item("deg I_∞ at n=4 (stored formula)", Fraction(24), i_infty(4))]
    ints = all(i_infty(n).denominator == 1 for n in range(4, 13))
    out.append(Item("deg I_∞ integral for n=4..12", "True", str(ints), ints))
    out.append(_item("correction coefficients", {"4^1": 5, "1^1,3^1": -16, "2^2": -9, "1^2,2^1": 36, "1^4": -16},
                     tables.CORRECTIONS))
    labels = list(tables.CORRECTIONS)
    agree = all(classical_one_point(lab, n) == hurwitz_oracle(lab, n) for lab in labels for n in (7, 8)
                if _feasible(lab, n))
    out.append(Item("one-point Hurwitz formula = oracle at n=7,8", "True", str(agree), agree))
    level4 = genus0_identities()[1]
    for n in ns:
        # the stored n^(n-5) leaves the five equations without a solution ...
        stored = infty_system(n, i_infty)
        out.append(_item(f"n={n}: stored deg I_∞ is off by a factor n", "Inconsistent",
                         stored.value if isinstance(stored, SolveStatus) else "consistent"))
        # ... a free common scale is forced to 1/n ...
        scaled = infty_system(n, i_infty, scale_unknown=True)
        scale = None if isinstance(scaled, SolveStatus) else scaled["scale"]
        out.append(_item(f"n={n}: scale on deg I_∞ solved from the data", Fraction(1, n), scale))
        # ... and with n^(n-6) the identity holds, and the solved codim-3
        # degrees satisfy the genus-zero relation of the degree-4 level
        sol = infty_system(n, i_infty_codim3)
        ok = not isinstance(sol, SolveStatus)
        out.append(Item(f"n={n}: deg σ - deg σ^exp = c·deg I_∞ (n^(n-6))", "consistent",
                        "consistent" if ok else sol.value, ok))
        if ok:
            rel = genus0_reduce(level4, n).substitute({"n": n})
            val = sum((c * (DEGREES.value(_basic_name(m), n) if _basic_name(m) in DEGREES.forms
                            else sol[_basic_name(m)]) for m, c in rel.terms.items()), Fraction(0))
            out.append(_item(f"n={n}: solved codim-3 degrees satisfy the level-4 relation", Fraction(0), val))
    return out


def check_cayley(nmax: int = 9) -> List[Item]:
    return [_item(f"Cayley sum n={n}", Fraction(n) ** (n - 3), cayley_sum(n)) for n in range(3, nmax + 1)]


CHECKS: Dict[str, Callable[[], List[Item]]] = {
    "thom": check_thom,
    "eq2.2-Q": check_q,
    "sec2.3-R": check_residuals,
    "sec2.4-R": check_pairs,
    "eq3.6": check_grr,
    "thm3.3": check_thm33,
    "confluence": check_confluence,
    "genus0-xi1": check_genus0_identity,
    "sec4.1-strata": check_strata,
    "sec4.2-degrees": check_degrees,
    "thm1.2-h": check_hurwitz,
    "oracle-crosscheck": check_oracle,
    "sec4.3-data": check_infty_data,
    "cayley": check_cayley,
}

ALIASES = {
    "q-polynomials": "eq2.2-Q",
    "residuals": "sec2.3-R",
    "residual-pairs": "sec2.4-R",
    "grr": "eq3.6",
    "chern-f": "thm3.3",
    "strata": "sec4.1-strata",
    "degrees": "sec4.2-degrees",
    "hurwitz": "thm1.2-h",
    "infinity-data": "sec4.3-data",
}

# acceptance criterion number -> checks it consists of
ACCEPTANCE = {
    1: ["thom"],
    2: ["eq2.2-Q"],
    3: ["sec2.3-R", "sec2.4-R"],
    4: ["eq3.6"],
    5: ["thm3.3", "confluence"],
    6: ["genus0-xi1"],
    7: ["sec4.1-strata"],
    8: ["sec4.2-degrees"],
    9: ["thm1.2-h"],
    10: ["oracle-crosscheck"],
    11: ["sec4.3-data"],
    12: ["cayley"],
}


def resolve(name: str) -> str:
    name = ALIASES.get(name, name)
    if name not in CHECKS:
        raise KeyError(name)
    return name


def run(names, prefix: bool = True) -> Report:
    report = Report()
    for name in names:
        key = resolve(name)
        items = CHECKS[key]()
        if prefix:
            for it in items:
                it.name = f"[{key}] {it.name}"
        report.extend(items)
    return report


def run_all() -> Report:
    return run([c for crit in sorted(ACCEPTANCE) for c in ACCEPTANCE[crit]])
