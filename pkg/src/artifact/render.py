"""LaTeX rendering of classes on the base, with coefficients factored over n."""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from typing import Dict, List, Tuple

from .algebra import Polynomial


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _divisors(m: int) -> List[int]:
    m = abs(m)
    return [d for d in range(1, m + 1) if m % d == 0] if m else [1]


def _eval(coeffs: List[Fraction], x: Fraction) -> Fraction:
    v = Fraction(0)
    for c in reversed(coeffs):
        v = v * x + c
    return v


def _deflate(coeffs: List[Fraction], r: Fraction) -> List[Fraction]:
    """Divide by (n - r); coeffs[i] is the coefficient of n^i."""
    out = [Fraction(0)] * (len(coeffs) - 1)
    carry = Fraction(0)
    for i in range(len(coeffs) - 1, 0, -1):
        carry = coeffs[i] + carry * r
        out[i - 1] = carry
    return out


def factor_univariate(coeffs: List[Fraction]) -> Tuple[Fraction, List[Fraction], List[Fraction]]:
    """content, rational roots (with multiplicity), primitive integer remainder."""
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    roots: List[Fraction] = []
    found = True
    while found and len(coeffs) > 1:
        found = False
        den = 1
        for c in coeffs:
            den = _lcm(den, c.denominator)
        ints = [int(c * den) for c in coeffs]
        if ints[0] == 0:
            roots.append(Fraction(0))
            coeffs = coeffs[1:]
            found = True
            continue
        for p in _divisors(ints[0]):
            for q in _divisors(ints[-1]):
                for r in (Fraction(p, q), Fraction(-p, q)):
                    if not found and _eval(coeffs, r) == 0:
                        roots.append(r)
                        coeffs = _deflate(coeffs, r)
                        found = True
    den = 1
    for c in coeffs:
        den = _lcm(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    sign = -1 if ints[-1] < 0 else 1
    content = Fraction(sign * g, den)
    primitive = [Fraction(x, sign * g) for x in ints]
    return content, sorted(roots, reverse=True), primitive


def _frac(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"\\frac{{{c.numerator}}}{{{c.denominator}}}"


def _linear(r: Fraction) -> str:
    if r == 0:
        return "n"
    if r.denominator == 1:
        return f"(n{'-' if r > 0 else '+'}{abs(r.numerator)})"
    # (q n - p) keeps integer coefficients
    return f"({r.denominator}n{'-' if r > 0 else '+'}{abs(r.numerator)})"


def _poly_n(coeffs: List[Fraction]) -> str:
    out = ""
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        body = "" if a == 1 and i else _frac(a)
        if i:
            body += "n" if i == 1 else f"n^{{{i}}}" if i > 9 else f"n^{i}"
        out += (sign if out or sign == "-" else "") + body
    return out


def _factored(coeffs: List[Fraction]) -> Tuple[Fraction, str]:
    """(signed content, rest) where rest is a product of factors in n."""
    content, roots, primitive = factor_univariate(coeffs)
    for r in roots:
        if r.denominator != 1:
            content /= r.denominator
    parts = [_linear(r) for r in roots]
    if len(primitive) > 1:
        parts.append(f"({_poly_n(primitive)})")
    # a lone "n" or "(n-1)" reads fine; keep the root order of the factorization
    linear = [p for p in parts if p != "n"]
    rest = "".join(linear) + ("n" * parts.count("n"))
    return content, rest


_VAR = re.compile(r"^(ξ|δ)_(\{[\d,]+\}|\d+)$")


def latex_var(name: str) -> str:
    if name == "ψ":
        return "\\psi"
    m = _VAR.match(name)
    if m:
        sym = "\\xi" if m.group(1) == "ξ" else "\\delta"
        sub = m.group(2).strip("{}")
        return f"{sym}_{{{sub}}}"
    table = {"Σ": "\\Sigma", "Ψ": "\\Psi", "Δ": "\\Delta", "Π": "\\Pi", "c1ω": "c_1(\\omega)"}
    return table.get(name, name)


def _mono_latex(mono) -> str:
    items = [(v, e) for v, e in mono if v != "ψ"] + [(v, e) for v, e in mono if v == "ψ"]
    out = ""
    for v, e in items:
        out += latex_var(v) + ("" if e == 1 else f"^{e}" if e < 10 else f"^{{{e}}}")
    return out


def _group_key(mono) -> Tuple:
    only_psi = all(v == "ψ" for v, _ in mono)
    deg = sum(e for _, e in mono)
    return (0 if only_psi and mono else 1, -deg, mono)


def to_latex(p: Polynomial, variable: str = "n") -> str:
    """Terms grouped by their monomial in the base classes; pure ψ-powers first."""
    if p.is_zero():
        return "0"
    groups: Dict[Tuple, Dict[int, Fraction]] = {}
    for m, c in p.terms.items():
        e = dict(m).get(variable, 0)
        rest = tuple(x for x in m if x[0] != variable)
        groups.setdefault(rest, {})[e] = groups.setdefault(rest, {}).get(e, Fraction(0)) + c
    out = ""
    for mono in sorted(groups, key=_group_key):
        g = groups[mono]
        coeffs = [g.get(i, Fraction(0)) for i in range(max(g) + 1)]
        content, rest = _factored(coeffs)
        body = _mono_latex(mono)
        a = abs(content)
        if a == 1 and (rest or body):
            num = ""
        else:
            num = _frac(a)
        term = num + rest + body
        if content < 0:
            out += "-" + term
        else:
            out += ("+" if out else "") + term
    return out
