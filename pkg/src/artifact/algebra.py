"""Exact rational arithmetic and sparse multivariate polynomials.

Coefficients are :class:`fractions.Fraction`.  A monomial is a tuple of
``(name, exponent)`` pairs sorted by name, so variables are plain interned
strings and the variable set is open ended (``ξ_7``, ``δ_{2,0}``, ...).
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational as _Rational
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

Rational = Fraction
Monomial = Tuple[Tuple[str, int], ...]
Scalar = Union[int, Fraction]

ONE_MONO: Monomial = ()


class AlgebraError(Exception):
    pass


class NotHomogeneous(AlgebraError):
    pass


class ZeroPolynomial(AlgebraError):
    pass


class MissingWeight(AlgebraError):
    pass


class ParseError(AlgebraError):
    pass


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, _Rational):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _order_key(m: Monomial):
    # graded, then lexicographic on the (name, exponent) pairs
    return (-mono_degree(m), m)


def format_rational(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


class Polynomial:
    """Immutable sparse polynomial over Q with named variables."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean: Dict[Monomial, Fraction] = {}
        if terms:
            for m, c in terms.items():
                c = as_fraction(c)
                if c:
                    m = tuple(sorted((v, e) for v, e in m if e))
                    s = clean.get(m, 0) + c
                    if s:
                        clean[m] = s
                    else:
                        clean.pop(m, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Fraction]) -> "Polynomial":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def var(cls, name: str, exp: int = 1) -> "Polynomial":
        return cls._raw({((name, exp),): Fraction(1)} if exp else {(): Fraction(1)})

    @classmethod
    def const(cls, c: Scalar) -> "Polynomial":
        c = as_fraction(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def coerce(cls, x) -> "Polynomial":
        if isinstance(x, Polynomial):
            return x
        return cls.const(x)

    # -- inspection -------------------------------------------------------
    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: _order_key(kv[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def variables(self) -> set:
        return {v for m in self._terms for v, _ in m}

    def constant_term(self) -> Fraction:
        return self._terms.get((), Fraction(0))

    def is_constant(self) -> bool:
        return all(m == () for m in self._terms)

    def total_degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomial("degree of the zero polynomial")
        return max(mono_degree(m) for m in self._terms)

    def degree_in(self, name: str) -> int:
        return max((dict(m).get(name, 0) for m in self._terms), default=0)

    def coeff(self, mono: Mapping[str, int] | Monomial) -> Fraction:
        if isinstance(mono, Mapping):
            mono = tuple(sorted((v, e) for v, e in mono.items() if e))
        return self._terms.get(tuple(mono), Fraction(0))

    def coeff_of(self, name: str, exp: int) -> "Polynomial":
        """Polynomial coefficient of ``name**exp``."""
        out = {}
        for m, c in self._terms.items():
            d = dict(m)
            if d.get(name, 0) == exp:
                d.pop(name, None)
                out[tuple(sorted(d.items()))] = c
        return Polynomial._raw(out)

    def split(self, names: Iterable[str]) -> Dict[Monomial, "Polynomial"]:
        """Group by the monomial in ``names``; values are the cofactors."""
        names = set(names)
        groups: Dict[Monomial, Dict[Monomial, Fraction]] = {}
        for m, c in self._terms.items():
            inner = tuple((v, e) for v, e in m if v in names)
            outer = tuple((v, e) for v, e in m if v not in names)
            groups.setdefault(inner, {})[outer] = c
        return {k: Polynomial._raw(v) for k, v in groups.items()}

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = Polynomial.coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-Polynomial.coerce(other))

    def __rsub__(self, other):
        return Polynomial.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = as_fraction(other)
            if not c:
                return Polynomial()
            return Polynomial._raw({m: v * c for m, v in self._terms.items()})
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Polynomial._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = as_fraction(other)
        if not c:
            raise ZeroDivisionError("polynomial divided by zero")
        return self * (1 / c)

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        try:
            return self._terms == Polynomial.const(other)._terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def map_coefficients(self, fn) -> "Polynomial":
        return Polynomial({m: fn(c) for m, c in self._terms.items()})

    def divide_by_var(self, name: str, exp: int = 1) -> "Polynomial":
        """Exact division by ``name**exp``; raises if some term is not divisible."""
        out = {}
        for m, c in self._terms.items():
            d = dict(m)
            if d.get(name, 0) < exp:
                raise AlgebraError(f"{self} not divisible by {name}^{exp}")
            d[name] -= exp
            out[tuple(sorted((v, e) for v, e in d.items() if e))] = c
        return Polynomial._raw(out)

    def substitute(self, mapping: Mapping[str, object]) -> "Polynomial":
        """Simultaneous substitution; unmapped variables stay fixed."""
        if not mapping:
            return self
        images = {v: Polynomial.coerce(p) for v, p in mapping.items()}
        power_cache: Dict[Tuple[str, int], Polynomial] = {}

        def power(v, e):
            key = (v, e)
            if key not in power_cache:
                power_cache[key] = images[v] ** e
            return power_cache[key]

        acc: Dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            rest = tuple((v, e) for v, e in m if v not in images)
            piece = Polynomial._raw({rest: c})
            for v, e in m:
                if v in images:
                    piece = piece * power(v, e)
                    if not piece:
                        break
            for pm, pc in piece._terms.items():
                s = acc.get(pm, 0) + pc
                if s:
                    acc[pm] = s
                else:
                    acc.pop(pm, None)
        return Polynomial._raw(acc)

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        p = self.substitute(values)
        if not p.is_constant():
            raise AlgebraError(f"unassigned variables {sorted(p.variables())}")
        return p.constant_term()

    # -- rendering --------------------------------------------------------
    def to_text(self) -> str:
        if not self._terms:
            return "0"
        pieces: List[str] = []
        for m, c in self.items():
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)
            a = abs(c)
            if not mono:
                body = format_rational(a)
            elif a == 1:
                body = mono
            else:
                body = f"{format_rational(a)}*{mono}"
            if not pieces:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append((" - " if c < 0 else " + ") + body)
        return "".join(pieces)

    def to_json(self) -> dict:
        return {
            "terms": [
                {"mono": {v: e for v, e in m}, "coef": format_rational(c)}
                for m, c in self.items()
            ]
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Polynomial":
        return cls(
            {
                tuple(sorted((v, int(e)) for v, e in t["mono"].items())): Fraction(t["coef"])
                for t in data["terms"]
            }
        )

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Polynomial({self.to_text()!r})"


def var(name: str) -> Polynomial:
    return Polynomial.var(name)


def variables(*names: str) -> Tuple[Polynomial, ...]:
    return tuple(Polynomial.var(v) for v in names)


# ---------------------------------------------------------------- parsing
_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[^\W\d_](?:[^\W_]|_(?!\{))*(?:_\{\d+(?:,\d+)*\})?)|(?P<op>\*\*|[-+*/^()]))"
)

ALIASES = {
    "Sigma": "Σ",
    "Psi": "Ψ",
    "Delta": "Δ",
    "Pi": "Π",
    "psi": "ψ",
}


def _alias(name: str) -> str:
    if name in ALIASES:
        return ALIASES[name]
    m = re.fullmatch(r"xi_?(\d+)", name)
    if m:
        return f"ξ_{m.group(1)}"
    m = re.fullmatch(r"delta_?\{?(\d+),?(\d+)\}?", name)
    if m:
        return f"δ_{{{m.group(1)},{m.group(2)}}}"
    return name


def parse(text: str) -> Polynomial:
    """Parse ``+ - * / ^ **``, integers, parentheses and identifiers.

    Juxtaposition is not multiplication; write ``2*Σ``.
    """
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse at {text[pos:]!r}")
        pos = m.end()
        if m.group("num"):
            tokens.append(("num", int(m.group("num"))))
        elif m.group("name"):
            tokens.append(("name", _alias(m.group("name"))))
        else:
            op = m.group("op")
            tokens.append(("op", "^" if op == "**" else op))
    tokens.append(("end", None))
    i = 0

    def peek():
        return tokens[i]

    def take():
        nonlocal i
        tok = tokens[i]
        i += 1
        return tok

    def expr():
        value = term()
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            rhs = term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term():
        value = unary()
        while peek() in (("op", "*"), ("op", "/")):
            op = take()[1]
            rhs = unary()
            if op == "*":
                value = value * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    raise ParseError("division only by nonzero constants")
                value = value / rhs.constant_term()
        return value

    def unary():
        if peek() == ("op", "-"):
            take()
            return -unary()
        if peek() == ("op", "+"):
            take()
            return unary()
        return power()

    def power():
        base = atom()
        if peek() == ("op", "^"):
            take()
            tok = take()
            if tok[0] != "num":
                raise ParseError("exponent must be a nonnegative integer")
            return base ** tok[1]
        return base

    def atom():
        kind, val = take()
        if kind == "num":
            return Polynomial.const(val)
        if kind == "name":
            return Polynomial.var(val)
        if (kind, val) == ("op", "("):
            inner = expr()
            if take() != ("op", ")"):
                raise ParseError("unbalanced parentheses")
            return inner
        raise ParseError(f"unexpected token {val!r}")

    result = expr()
    if peek()[0] != "end":
        raise ParseError(f"trailing input near {peek()[1]!r}")
    return result


# ---------------------------------------------------------------- grading
@dataclass(frozen=True)
class WeightTable:
    weights: Mapping[str, int] = field(default_factory=dict)

    def mono_weight(self, mono: Monomial) -> int:
        total = 0
        for v, e in mono:
            if v not in self.weights:
                raise MissingWeight(v)
            total += self.weights[v] * e
        return total

    def extend(self, **extra: int) -> "WeightTable":
        w = dict(self.weights)
        w.update(extra)
        return WeightTable(w)


LOCAL_WEIGHTS = WeightTable({"Σ": 1, "Ψ": 1, "N": 1, "Π": 1, "Δ": 2, "t": 1})


def weighted_degree(p: Polynomial, w: WeightTable = LOCAL_WEIGHTS) -> int:
    if p.is_zero():
        raise ZeroPolynomial("weighted degree of 0")
    seen = None
    first = None
    for m, _ in p.items():
        d = w.mono_weight(m)
        if seen is None:
            seen, first = d, m
        elif d != seen:
            raise NotHomogeneous((first, m))
    return seen


def homogeneous_part(p: Polynomial, d: int, w: WeightTable) -> Polynomial:
    return Polynomial({m: c for m, c in p.terms.items() if w.mono_weight(m) == d})


# ---------------------------------------------------------------- linear solving
class SolveStatus(enum.Enum):
    UNDERDETERMINED = "UnderDetermined"
    INCONSISTENT = "Inconsistent"


UnderDetermined = SolveStatus.UNDERDETERMINED
Inconsistent = SolveStatus.INCONSISTENT


@dataclass
class LinearSystem:
    unknowns: List[str]
    rows: List[Tuple[List[Fraction], Fraction]] = field(default_factory=list)

    def __post_init__(self):
        for coeffs, _ in self.rows:
            if len(coeffs) != len(self.unknowns):
                raise ValueError("row length differs from unknown count")

    def add_row(self, coeffs: Sequence[Scalar], rhs: Scalar = 0):
        if len(coeffs) != len(self.unknowns):
            raise ValueError("row length differs from unknown count")
        self.rows.append(([as_fraction(c) for c in coeffs], as_fraction(rhs)))

    @classmethod
    def from_polynomials(cls, eqs: Iterable[Polynomial], unknowns: Sequence[str]) -> "LinearSystem":
        """Each polynomial is read as ``Σ a_i u_i + b = 0`` and must be linear
        in the unknowns with constant coefficients."""
        unknowns = list(unknowns)
        index = {u: i for i, u in enumerate(unknowns)}
        system = cls(unknowns)
        for eq in eqs:
            row = [Fraction(0)] * len(unknowns)
            rhs = Fraction(0)
            for m, c in eq.terms.items():
                if m == ():
                    rhs -= c
                elif len(m) == 1 and m[0][0] in index and m[0][1] == 1:
                    row[index[m[0][0]]] += c
                else:
                    raise AlgebraError(f"equation not linear in unknowns: {eq}")
            system.rows.append((row, rhs))
        return system


def solve_linear(sys: LinearSystem):
    """Exact Gauss-Jordan elimination.

    Returns ``{unknown: Fraction}`` or a :class:`SolveStatus`.  An
    inconsistent system is reported as such even if it is also rank
    deficient.
    """
    n = len(sys.unknowns)
    mat = [list(coeffs) + [rhs] for coeffs, rhs in sys.rows]
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(mat)) if mat[i][col] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][col]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
    for row in mat[r:]:
        if row[n] != 0:
            return Inconsistent
    if r < n:
        return UnderDetermined
    return {sys.unknowns[c]: mat[i][n] for i, c in enumerate(pivots)}
