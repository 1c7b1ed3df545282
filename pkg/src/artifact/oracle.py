"""Hurwitz numbers by counting factorizations of the identity in S_n.

The main path convolves class sums in the centre of the group ring; a
slower path for small n walks over group elements and tracks orbits
directly.  They share nothing but the permutation helpers.
"""

from __future__ import annotations

import threading
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import comb, factorial
from typing import Dict, List, Sequence, Tuple

from .partitions import MultiPartition, ReducedPartition, m_count

CycleType = Tuple[int, ...]
RESOURCE_BOUND = 8


class ResourceBound(RuntimeError):
    pass


class TooLarge(ValueError):
    pass


def cycle_type(perm: Sequence[int]) -> CycleType:
    seen = [False] * len(perm)
    out = []
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            out.append(length)
    return tuple(sorted(out, reverse=True))


def compose(a: Sequence[int], b: Sequence[int]) -> Tuple[int, ...]:
    """(a∘b)(i) = a(b(i))."""
    return tuple(a[i] for i in b)


def partitions_of(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for p in range(min(n, largest), 0, -1):
        for rest in partitions_of(n - p, p):
            yield (p,) + rest


def reduced_to_cycle_type(alpha: ReducedPartition, n: int) -> CycleType:
    parts = [a + 1 for a in alpha.parts]
    if sum(parts) > n:
        raise TooLarge(f"{alpha} does not fit in degree {n}")
    return tuple(sorted(parts + [1] * (n - sum(parts)), reverse=True))


def transposition(n: int) -> CycleType:
    return tuple([2] + [1] * (n - 2))


@dataclass
class FactorizationSpec:
    n: int
    fixed_classes: List[CycleType] = field(default_factory=list)
    num_transpositions: int = 0
    require_transitive: bool = True

    def __post_init__(self):
        self.fixed_classes = [tuple(sorted(c, reverse=True)) for c in self.fixed_classes]
        for c in self.fixed_classes:
            if sum(c) != self.n:
                raise ValueError(f"cycle type {c} is not a partition of {self.n}")

    def parity(self) -> int:
        return (sum(self.n - len(c) for c in self.fixed_classes) + self.num_transpositions) % 2


# ---------------------------------------------------------------- class algebra
class _ClassAlgebra:
    """Structure constants of S_n, filled lazily per multiplying class."""

    def __init__(self, n: int):
        self.n = n
        self.classes = list(partitions_of(n))
        self.members: Dict[CycleType, List[Tuple[int, ...]]] = defaultdict(list)
        for p in permutations(range(n)):
            self.members[cycle_type(p)].append(p)
        self.rep = {c: self.members[c][0] for c in self.classes}
        self._mult: Dict[CycleType, Dict[CycleType, Counter]] = {}
        self._lock = threading.Lock()

    def table(self, lam: CycleType) -> Dict[CycleType, Counter]:
        """table[ν][ν'] = #{x ∈ C_λ : z·x ∈ C_ν'} for a fixed z ∈ C_ν."""
        with self._lock:
            hit = self._mult.get(lam)
        if hit is not None:
            return hit
        t = {}
        for nu in self.classes:
            z = self.rep[nu]
            t[nu] = Counter(cycle_type(compose(z, x)) for x in self.members[lam])
        with self._lock:
            return self._mult.setdefault(lam, t)

    def multiply(self, v: Dict[CycleType, int], lam: CycleType) -> Dict[CycleType, int]:
        """v ↦ v·K_λ, with v giving the (class constant) coefficient of each element."""
        t = self.table(lam)
        out = {}
        for nu in self.classes:
            s = sum(cnt * v.get(nu2, 0) for nu2, cnt in t[nu].items())
            if s:
                out[nu] = s
        return out


_algebras: Dict[int, _ClassAlgebra] = {}
_alg_lock = threading.Lock()


def class_algebra(n: int) -> _ClassAlgebra:
    with _alg_lock:
        alg = _algebras.get(n)
    if alg is None:
        alg = _ClassAlgebra(n)
        with _alg_lock:
            alg = _algebras.setdefault(n, alg)
    return alg


def _check_bound(n: int, override: bool):
    if n > RESOURCE_BOUND and not override:
        raise ResourceBound(f"n={n} exceeds {RESOURCE_BOUND}; pass override to force")


@lru_cache(maxsize=None)
def _count_all(n: int, classes: Tuple[CycleType, ...], m: int) -> int:
    if n == 0:
        return 1 if m == 0 else 0
    if n == 1:
        return 1 if m == 0 else 0
    if (sum(n - len(c) for c in classes) + m) % 2:
        return 0
    alg = class_algebra(n)
    identity = tuple([1] * n)
    v = {identity: 1}
    for c in classes:
        v = alg.multiply(v, c)
    tau = transposition(n)
    for _ in range(m):
        v = alg.multiply(v, tau)
    return v.get(identity, 0)


def count_all(spec: FactorizationSpec, override: bool = False) -> int:
    _check_bound(spec.n, override)
    return _count_all(spec.n, tuple(sorted(spec.fixed_classes)), spec.num_transpositions)


def _splits(ct: CycleType, k: int):
    """Sub-multisets of ct summing to k, with their complements."""
    items = sorted(Counter(ct).items())
    out = []

    def rec(i, chosen, total):
        if total > k:
            return
        if i == len(items):
            if total == k:
                inner = []
                outer = []
                for (v, mult), a in zip(items, chosen):
                    inner += [v] * a
                    outer += [v] * (mult - a)
                out.append((tuple(sorted(inner, reverse=True)), tuple(sorted(outer, reverse=True))))
            return
        v, mult = items[i]
        for a in range(mult + 1):
            rec(i + 1, chosen + [a], total + a * v)

    rec(0, [], 0)
    return out


@lru_cache(maxsize=None)
def _count_connected(n: int, classes: Tuple[CycleType, ...], m: int) -> int:
    if n == 1:
        return 1 if m == 0 else 0
    total = _count_all(n, classes, m)
    for k in range(1, n):
        ways = comb(n - 1, k - 1)
        split_lists = [_splits(c, k) for c in classes]
        for choice in _product(split_lists):
            inner = tuple(sorted(s[0] for s in choice))
            outer = tuple(sorted(s[1] for s in choice))
            for m1 in range(m + 1):
                if m1 and k < 2 or (m - m1) and n - k < 2:
                    continue
                c = _count_connected(k, inner, m1)
                if not c:
                    continue
                total -= ways * comb(m, m1) * c * _count_all(n - k, outer, m - m1)
    return total


def _product(lists):
    if not lists:
        yield ()
        return
    for head in lists[0]:
        for rest in _product(lists[1:]):
            yield (head,) + rest


def count_connected(spec: FactorizationSpec, override: bool = False) -> int:
    _check_bound(spec.n, override)
    return _count_connected(spec.n, tuple(sorted(spec.fixed_classes)), spec.num_transpositions)


def spec_for(label, n: int, g: int = 0) -> FactorizationSpec:
    m = label if isinstance(label, MultiPartition) else MultiPartition.parse(label)
    return FactorizationSpec(n, [reduced_to_cycle_type(a, n) for a in m.parts], m_count(m, n, g), True)


def hurwitz_oracle(label, n: int, g: int = 0, override: bool = False) -> Fraction:
    spec = spec_for(label, n, g)
    return Fraction(count_connected(spec, override), factorial(n))


# ---------------------------------------------------------------- naive path
def _orbits_join(orbits: Tuple[int, ...], perm: Sequence[int]) -> Tuple[int, ...]:
    """orbits[i] is the smallest point in the block of i."""
    lab = list(orbits)

    def find(i):
        while lab[i] != i:
            i = lab[i]
        return i

    for i, j in enumerate(perm):
        a, b = find(i), find(j)
        if a != b:
            lab[max(a, b)] = min(a, b)
    return tuple(find(i) for i in range(len(lab)))


def naive_count(spec: FactorizationSpec, limit: int = 5) -> int:
    """Element-level dynamic programme over (partial product, orbit partition)."""
    n = spec.n
    if n > limit:
        raise ResourceBound(f"naive enumeration limited to n <= {limit}")
    by_type: Dict[CycleType, List[Tuple[int, ...]]] = defaultdict(list)
    for p in permutations(range(n)):
        by_type[cycle_type(p)].append(p)
    steps = list(spec.fixed_classes) + [transposition(n)] * spec.num_transpositions if n >= 2 else list(spec.fixed_classes)
    if n < 2 and spec.num_transpositions:
        return 0
    identity = tuple(range(n))
    states: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], int] = {(identity, identity): 1}
    for ct in steps:
        nxt: Dict = defaultdict(int)
        for (prod_, orb), cnt in states.items():
            for x in by_type[ct]:
                nxt[(compose(prod_, x), _orbits_join(orb, x))] += cnt
        states = nxt
    total = 0
    for (prod_, orb), cnt in states.items():
        if prod_ == identity and (not spec.require_transitive or all(o == 0 for o in orb)):
            total += cnt
    return total
