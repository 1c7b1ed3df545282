"""Local models A_k and I_{k,l}, Thom polynomials and residual polynomials.

Residual polynomials live in Q[Σ, Ψ, N, Δ] with weights Σ=Ψ=N=1, Δ=2.
Every coefficient not forced by the generating series is found by the
method of undetermined coefficients: the class of a stratum must vanish
on each local model where that stratum is empty.
"""

from __future__ import annotations

import threading
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import clusters
from .algebra import (
    AlgebraError,
    LinearSystem,
    Polynomial,
    SolveStatus,
    solve_linear,
    var,
    weighted_degree,
)
from .partitions import MultiPartition, ReducedPartition

SIGMA, PSI, N, DELTA, T, K = (var(v) for v in ("Σ", "Ψ", "N", "Δ", "t", "k"))


class SystemNotSquare(AlgebraError):
    pass


class ResidualSolveError(AlgebraError):
    """Raised when an undetermined-coefficient system is not uniquely solvable."""

    def __init__(self, label, status):
        super().__init__(f"{label}: {status.value if isinstance(status, SolveStatus) else status}")
        self.status = status


def pochhammer(x, m: int):
    """Falling factorial x(x-1)...(x-m+1); works on ints, Fractions, Polynomials."""
    r = 1
    for i in range(m):
        r = (x - i) * r
    return r


def wps_degree(weights: Sequence[int]) -> Fraction:
    if not weights:
        raise ValueError("empty weight list")
    if any(w <= 0 for w in weights):
        raise ValueError("weights must be positive")
    return Fraction(1, prod(weights))


@dataclass(frozen=True)
class LocalModel:
    kind: str
    k: int
    l: int = 0

    def __post_init__(self):
        if self.kind == "A":
            if self.k < 1:
                raise ValueError("A_k needs k >= 1")
        elif self.kind == "I":
            if not (self.k >= self.l >= 1):
                raise ValueError("I_{k,l} needs k >= l >= 1")
        else:
            raise ValueError(f"unknown model kind {self.kind!r}")

    @classmethod
    def A(cls, k: int) -> "LocalModel":
        return cls("A", k)

    @classmethod
    def I(cls, k: int, l: int) -> "LocalModel":
        return cls("I", k, l)

    def __str__(self):
        return f"A_{self.k}" if self.kind == "A" else f"I_{{{self.k},{self.l}}}"

    @property
    def weights(self) -> List[int]:
        if self.kind == "A":
            return list(range(1, self.k + 1))
        k, l = self.k, self.l
        return [l] + [i * l for i in range(1, k)] + [k] + [j * k for j in range(1, l)]

    @property
    def degree_f(self) -> int:
        return self.k + 1 if self.kind == "A" else self.k + self.l

    @property
    def dim(self) -> int:
        return self.k - 1 if self.kind == "A" else self.k + self.l - 1

    @property
    def wps_degree(self) -> Fraction:
        return wps_degree(self.weights)

    def substitution(self) -> Dict[str, Polynomial]:
        k, l = self.k, self.l
        if self.kind == "A":
            return {"Σ": k * T, "Ψ": (k + 1) * T, "Δ": Polynomial(), "N": Polynomial()}
        return {"Σ": k * l * T, "Ψ": k * l * T, "N": (k + l) * T, "Δ": k * l * T ** 2}

    @property
    def psi(self) -> Polynomial:
        """Image of the equivariant class ψ (the ψ of the target point)."""
        return self.substitution()["Ψ"]

    def restrict(self, h: Polynomial) -> Polynomial:
        return h.substitute(self.substitution())

    def push(self, h: Polynomial) -> Polynomial:
        """Local p_*: multiply by the degree of f and divide by the local ψ."""
        value = self.restrict(h) * self.degree_f
        coeff = self.psi.coeff({"t": 1})
        return value.divide_by_var("t") / coeff


def models_A(kmax: int) -> List[LocalModel]:
    return [LocalModel.A(k) for k in range(1, kmax + 1)]


def models_I(smax: int) -> List[LocalModel]:
    """I_{k,l} with k+l <= smax, ordered by k+l then k."""
    out = []
    for s in range(2, smax + 1):
        for k in range((s + 1) // 2, s):
            out.append(LocalModel.I(k, s - k))
    return out


def thom_Ai(i: int) -> Polynomial:
    if i < 1:
        raise ValueError("i >= 1")
    p = SIGMA
    for j in range(2, i + 1):
        p = p * (j * SIGMA - (j - 1) * PSI)
    return p


def delta_monomials(w: int) -> List[Polynomial]:
    """N^a Ψ^b Δ^c of weight w (a+b+2c = w), ordered by c then a."""
    if w < 0:
        return []
    out = []
    for c in range(w // 2 + 1):
        for a in range(w - 2 * c + 1):
            b = w - 2 * c - a
            out.append(N ** a * PSI ** b * DELTA ** c)
    return out


def _solve_unknowns(label, base: Polynomial, basis: List[Polynomial], equations_for) -> Polynomial:
    if not basis:
        return base
    names = [f"_u{i}" for i in range(len(basis))]
    trial = base
    for name, b in zip(names, basis):
        trial = trial + var(name) * b
    eqs = []
    for poly in equations_for(trial):
        eqs.extend(poly.split(["t"]).values())
    sol = solve_linear(LinearSystem.from_polynomials(eqs, names))
    if isinstance(sol, SolveStatus):
        raise ResidualSolveError(label, sol)
    return trial.substitute({u: Polynomial.const(v) for u, v in sol.items()})


def solve_Q(i: int) -> Polynomial:
    """Q_{i-2} with P_i + Q_{i-2}Δ vanishing on every I_{k,l}, k+l <= i."""
    if i < 2:
        raise ValueError("i >= 2")
    basis = [m / DELTA.coeff({"Δ": 1}) for m in delta_monomials(i - 2)]
    models = models_I(i)
    if len(models) != len(basis):
        raise SystemNotSquare(f"{len(models)} models vs {len(basis)} monomials")
    names = [f"_q{j}" for j in range(len(basis))]
    Q = Polynomial()
    for name, b in zip(names, basis):
        Q = Q + var(name) * b
    R = thom_Ai(i) + Q * DELTA
    eqs = [m.restrict(R).coeff_of("t", i) for m in models]
    sol = solve_linear(LinearSystem.from_polynomials(eqs, names))
    if isinstance(sol, SolveStatus):
        raise ResidualSolveError(f"Q_{i-2}", sol)
    return Q.substitute({q: Polynomial.const(v) for q, v in sol.items()})


def thom_R(i: int) -> Polynomial:
    return thom_Ai(i) + solve_Q(i) * DELTA


# ---------------------------------------------------------------- generating series
def gen_series_coefficient(alpha: ReducedPartition, k):
    """(k+1)_{|α|+ℓ(α)}: the coefficient of ∏ t_j^{m_j}/m_j! (times t^{|α|})."""
    return pochhammer(k + 1, alpha.weight + len(alpha))


def _divide_linear(p: Polynomial, name: str, root: Fraction) -> Polynomial:
    """Exact division of p by (name - root), synthetic division in ``name``."""
    groups = {m[0][1] if m else 0: c for m, c in p.split([name]).items()}
    deg = max(groups, default=0)
    quotient = {}
    carry = Polynomial()
    for e in range(deg, 0, -1):
        carry = groups.get(e, Polynomial()) + carry * root
        quotient[e - 1] = carry
    remainder = groups.get(0, Polynomial()) + carry * root
    if not remainder.is_zero():
        raise AlgebraError(f"{p} not divisible by {name} - {root}")
    out = Polynomial()
    for e, c in quotient.items():
        out = out + c * var(name) ** e
    return out


def sigma_psi_part(alpha: ReducedPartition) -> Polynomial:
    """Σ,Ψ-part of R_α: coefficient of the α-monomial in log of the
    generating series, divided by (k+1), rewritten via kt=Σ, t=Ψ-Σ."""
    target = Counter(alpha.parts)
    tv = {j: f"_t{j}" for j in target}

    def divides(mono_counts):
        return all(target[j] >= e for j, e in mono_counts.items())

    # series X = E - 1 restricted to monomials dividing the target
    X = Polynomial()
    for mono in _sub_multisets(target):
        if not mono:
            continue
        term = Polynomial.const(1)
        for j, e in mono.items():
            term = term * var(tv[j]) ** e / factorial(e)
        w = sum(j * e for j, e in mono.items())
        ell = sum(mono.values())
        X = X + term * pochhammer(K + 1, w + ell)
    # log(1+X) = Σ (-1)^{r+1} X^r / r, truncated to divisors of the target
    total = sum(target.values())
    logX = Polynomial()
    power = Polynomial.const(1)
    for r in range(1, total + 1):
        power = _truncate(power * X, tv, target)
        logX = logX + power * Fraction((-1) ** (r + 1), r)
    mono = tuple(sorted((tv[j], e) for j, e in target.items()))
    coeff = Polynomial(
        {tuple(x for x in m if not x[0].startswith("_t")): c
         for m, c in logX.terms.items()
         if tuple(x for x in m if x[0].startswith("_t")) == mono}
    )
    coeff = coeff * prod(factorial(e) for e in target.values())
    coeff = _divide_linear(coeff, "k", Fraction(-1))
    w = alpha.weight
    out = Polynomial()
    for m, c in coeff.terms.items():
        j = dict(m).get("k", 0)
        if j > w:
            raise AlgebraError("k-degree exceeds weight")
        out = out + c * SIGMA ** j * (PSI - SIGMA) ** (w - j)
    return out


def _sub_multisets(target: Counter):
    items = sorted(target.items())

    def rec(i):
        if i == len(items):
            yield {}
            return
        j, e = items[i]
        for a in range(e + 1):
            for rest in rec(i + 1):
                d = dict(rest)
                if a:
                    d[j] = a
                yield d

    return list(rec(0))


def _truncate(p: Polynomial, tv, target) -> Polynomial:
    inv = {v: j for j, v in tv.items()}
    keep = {}
    for m, c in p.terms.items():
        if all(target[inv[v]] >= e for v, e in m if v in inv):
            keep[m] = c
    return Polynomial(keep)


# ---------------------------------------------------------------- residual cache
@dataclass(frozen=True)
class ResidualPolynomial:
    label: MultiPartition
    value: Polynomial

    def __str__(self):
        return self.value.to_text()


class ResidualCache:
    """Concurrent memo of residual polynomials keyed by canonical index."""

    def __init__(self):
        self._data: Dict[clusters.Index, Polynomial] = {}
        self._lock = threading.Lock()

    def get(self, key):
        with self._lock:
            return self._data.get(key)

    def put(self, key, value: Polynomial) -> Polynomial:
        with self._lock:
            return self._data.setdefault(key, value)

    def items(self):
        with self._lock:
            return list(self._data.items())

    def __contains__(self, key):
        with self._lock:
            return key in self._data

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "residuals": {
                str(MultiPartition(k)): v.to_json() for k, v in sorted(self.items())
            },
        }

    def load_json(self, data: dict):
        if data.get("schema") != 1:
            raise ValueError("unsupported residual cache schema")
        for text, poly in data["residuals"].items():
            self.put(MultiPartition.parse(text).key(), Polynomial.from_json(poly))


CACHE = ResidualCache()


def _key(label) -> clusters.Index:
    if isinstance(label, ReducedPartition):
        return (label.parts,)
    if isinstance(label, MultiPartition):
        return label.key()
    if isinstance(label, str):
        return MultiPartition.parse(label).key()
    return clusters.canon_index(label)


def residual(label, cache: ResidualCache = CACHE) -> Polynomial:
    """R_I for any multiset I of reduced partitions (simple ones allowed)."""
    key = _key(label)
    hit = cache.get(key)
    if hit is not None:
        return hit
    # every cluster factor of a lower weight must be known first
    for sub in clusters.factor_indices(key):
        if sub != key and sub not in cache:
            residual(sub, cache)
    return cache.put(key, _solve_residual(key, cache))


def _solve_residual(key: clusters.Index, cache: ResidualCache) -> Polynomial:
    s = clusters.index_weight(key)
    c = len(key)
    if c == 1:
        base = sigma_psi_part(ReducedPartition(key[0]))
        basis = [DELTA * m for m in delta_monomials(s - 2)]
        models = models_I(s)
    else:
        w = s - c + 1
        base = Polynomial()
        basis = [SIGMA ** j * PSI ** (w - j) for j in range(1, w + 1)]
        basis += [DELTA * m for m in delta_monomials(w - 2)]
        models = models_A(s - 1) + models_I(s - 1)

    def equations(trial):
        for model in models:
            def push(I, model=model):
                return model.push(trial if I == key else cache.get(I))
            yield clusters.evaluate(key, push, model.psi, Polynomial())

    return _solve_unknowns(str(MultiPartition(key)), base, basis, equations)


def residual_multising(alpha: ReducedPartition) -> ResidualPolynomial:
    if not len(alpha):
        raise ValueError("empty partition")
    return ResidualPolynomial(MultiPartition([alpha]), residual((alpha.parts,)))


def residual_multimulti(m: MultiPartition) -> ResidualPolynomial:
    if len(m) < 2:
        raise ValueError("need at least two critical values")
    return ResidualPolynomial(m, residual(m.key()))


def local_sigma(label, model: LocalModel, cache: ResidualCache = CACHE) -> Polynomial:
    """Value of the stratum class on a local model (zero where the stratum is empty)."""
    key = _key(label)
    residual(key, cache)
    return clusters.evaluate(key, lambda I: model.push(cache.get(I)), model.psi, Polynomial())


def check_quasihomogeneous(label) -> int:
    return weighted_degree(residual(label))
