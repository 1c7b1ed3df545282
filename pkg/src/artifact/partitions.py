"""Reduced partitions, stratum labels and the merge algebra of s-variables.

Text syntax: ``"1^2,2^1"`` (or ``"1^2 2^1"``) is a single reduced
partition with parts {1,1,2}; ``";"`` separates critical values, so
``"2^1;1^2"`` labels the stratum with a degenerate critical point of type
2^1 and a separate critical value carrying two simple critical points.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from math import factorial, prod
from typing import Dict, Iterable, Mapping, Tuple


class PartitionError(ValueError):
    pass


class NegativeSimplePoints(PartitionError):
    pass


@dataclass(frozen=True, order=True)
class ReducedPartition:
    parts: Tuple[int, ...]

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if any(p <= 0 for p in parts):
            raise PartitionError(f"parts must be positive: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "ReducedPartition":
        text = text.strip()
        parts = []
        for tok in re.split(r"[,\s]+", text):
            if not tok:
                continue
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", tok)
            if not m:
                raise PartitionError(f"bad partition token {tok!r}")
            value, mult = int(m.group(1)), int(m.group(2) or 1)
            parts.extend([value] * mult)
        if not parts:
            raise PartitionError(f"empty partition {text!r}")
        return cls(parts)

    def multiplicities(self) -> Dict[int, int]:
        return dict(sorted(Counter(self.parts).items()))

    def __str__(self):
        return ",".join(f"{v}^{m}" for v, m in self.multiplicities().items())

    def latex(self) -> str:
        return "".join(f"{v}^{{{m}}}" for v, m in self.multiplicities().items())

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def union(self, other: "ReducedPartition") -> "ReducedPartition":
        return ReducedPartition(self.parts + other.parts)

    def is_simple(self) -> bool:
        return self.parts == (1,)


def aut_order(alpha: ReducedPartition) -> int:
    return prod(factorial(m) for m in Counter(alpha.parts).values())


def weight(alpha: ReducedPartition) -> int:
    return alpha.weight


@dataclass(frozen=True)
class MultiPartition:
    """Unordered collection of reduced partitions, one per critical value."""

    parts: Tuple[ReducedPartition, ...]

    def __init__(self, parts: Iterable[ReducedPartition | Iterable[int]] = ()):
        items = [p if isinstance(p, ReducedPartition) else ReducedPartition(p) for p in parts]
        object.__setattr__(self, "parts", tuple(sorted(items, key=lambda a: a.parts, reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "MultiPartition":
        text = text.strip()
        if text in ("", "{}", "∅"):
            return cls(())
        return cls(ReducedPartition.parse(chunk) for chunk in text.split(";"))

    def __str__(self):
        if not self.parts:
            return "{}"
        return ";".join(str(p) for p in self.parts)

    def latex(self) -> str:
        return ",".join(p.latex() for p in self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __add__(self, other: "MultiPartition") -> "MultiPartition":
        return MultiPartition(self.parts + other.parts)

    @property
    def weight(self) -> int:
        return sum(p.weight for p in self.parts)

    def key(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(p.parts for p in self.parts)

    def is_stratum_label(self) -> bool:
        return all(not p.is_simple() for p in self.parts)


def label(text: str) -> MultiPartition:
    return MultiPartition.parse(text)


def aut_set_order(m: MultiPartition) -> int:
    return prod(factorial(c) for c in Counter(m.parts).values())


def codim(m: MultiPartition) -> int:
    return sum(p.weight - 1 for p in m.parts)


def m_count(labels: MultiPartition, n: int, g: int = 0) -> int:
    m = 2 * n + 2 * g - 2 - labels.weight
    if m < 0:
        raise NegativeSimplePoints(f"{labels} needs {labels.weight} > 2n+2g-2 = {2*n+2*g-2}")
    return m


# ---------------------------------------------------------------- s-variables
class SSum:
    """Formal rational combination of s-variables indexed by MultiPartition."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[MultiPartition, object] | None = None):
        clean: Dict[MultiPartition, Fraction] = {}
        for k, v in (terms or {}).items():
            v = Fraction(v)
            if v:
                clean[k] = clean.get(k, 0) + v
                if not clean[k]:
                    del clean[k]
        self.terms = clean

    @classmethod
    def s(cls, *parts) -> "SSum":
        return cls({MultiPartition(parts): 1})

    def __add__(self, other: "SSum") -> "SSum":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return SSum(out)

    def __mul__(self, other):
        if isinstance(other, SSum):
            return s_multiply(self, other)
        return SSum({k: v * Fraction(other) for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, SSum) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        body = " + ".join(
            f"{v}*s[{k}]" if v != 1 else f"s[{k}]" for k, v in sorted(self.terms.items(), key=lambda kv: str(kv[0]))
        )
        return body


def merge_products(a: MultiPartition, b: MultiPartition) -> Counter:
    """All ways of uniting pairwise distinct members of ``a`` with pairwise
    distinct members of ``b``; returns a multiset of resulting labels."""
    out: Counter = Counter()
    A, B = a.parts, b.parts
    for r in range(min(len(A), len(B)) + 1):
        for ia in combinations(range(len(A)), r):
            for ib in permutations(range(len(B)), r):
                merged = [A[i].union(B[j]) for i, j in zip(ia, ib)]
                rest = [A[i] for i in range(len(A)) if i not in ia]
                rest += [B[j] for j in range(len(B)) if j not in ib]
                out[MultiPartition(merged + rest)] += 1
    return out


def s_multiply(a: SSum, b: SSum) -> SSum:
    out: Dict[MultiPartition, Fraction] = {}
    for ka, va in a.terms.items():
        for kb, vb in b.terms.items():
            for k, mult in merge_products(ka, kb).items():
                out[k] = out.get(k, 0) + va * vb * mult
    return SSum(out)
