"""Exponential of the residual generating sum in the algebra of s-variables.

Every residual class R_I (I a multiset of reduced partitions, simple ones
included) enters the sum ``Σ_I f_*(R_I) s_I / norm(I)`` where
``norm(I) = ∏ aut(α) · ∏ (multiplicity of equal α)!``.  Expanding the
exponential with the merge product, each term of ``exp`` is a product of
factors; factors whose points were united form a *cluster*.  A cluster with
factor set F and final point set P contributes

    ψ^(Σ_{I∈F} |I| − |P|) · ∏_{I∈F} p_*(R_I)

where |I| counts partitions.  This module only does the combinatorics: it
returns, for a target point configuration, the rational weight of each
cluster structure.  Callers supply p_* and ψ (local model or global).
"""

from __future__ import annotations

import threading
from collections import Counter, defaultdict
from fractions import Fraction
from itertools import combinations, permutations
from math import factorial, prod
from typing import Callable, Dict, List, Tuple

Part = Tuple[int, ...]
Index = Tuple[Part, ...]
Cluster = Tuple[Tuple[Index, ...], Tuple[Part, ...]]
Term = Tuple[Cluster, ...]


def canon_part(parts) -> Part:
    return tuple(sorted(parts, reverse=True))


def canon_index(parts) -> Index:
    return tuple(sorted((canon_part(p) for p in parts), reverse=True))


def part_aut(p: Part) -> int:
    return prod(factorial(m) for m in Counter(p).values())


def norm(I: Index) -> int:
    return prod(part_aut(p) for p in I) * prod(factorial(m) for m in Counter(I).values())


def index_weight(I) -> int:
    return sum(sum(p) for p in I)


def _submultiset(small: Part, big: Part) -> bool:
    cs, cb = Counter(small), Counter(big)
    return all(cb[v] >= m for v, m in cs.items())


def _partitions_of(n: int, largest: int):
    if n == 0:
        yield ()
        return
    for p in range(min(n, largest), 0, -1):
        for rest in _partitions_of(n - p, p):
            yield (p,) + rest


def relevant_indices(target: Index) -> List[Index]:
    """All nonempty multisets of partitions that can occur in a term whose
    final points equal ``target``."""
    s = index_weight(target)
    pieces = []
    for w in range(1, s + 1):
        for p in _partitions_of(w, w):
            if any(_submultiset(p, q) for q in target):
                pieces.append(p)
    found = set()

    def rec(cur, w, start):
        if cur:
            found.add(canon_index(cur))
        for i in range(start, len(pieces)):
            nw = w + sum(pieces[i])
            if nw <= s:
                rec(cur + [pieces[i]], nw, i)

    rec([], 0, 0)
    return sorted(found)


def _attach(term: Term, factor: Index) -> Counter:
    """Multiply a term by one more factor, enumerating partial matchings
    of the new factor's points with the existing points."""
    out: Counter = Counter()
    pts = [(ci, pi) for ci, cl in enumerate(term) for pi in range(len(cl[1]))]
    for r in range(min(len(pts), len(factor)) + 1):
        for fpos in combinations(range(len(factor)), r):
            for tpos in permutations(range(len(pts)), r):
                touched = sorted({pts[j][0] for j in tpos})
                new_points = {}
                for i, j in zip(fpos, tpos):
                    ci, pi = pts[j]
                    new_points[(ci, pi)] = canon_part(term[ci][1][pi] + factor[i])
                factors = [factor]
                points = [factor[i] for i in range(len(factor)) if i not in fpos]
                for ci in touched:
                    factors.extend(term[ci][0])
                    for pi, p in enumerate(term[ci][1]):
                        points.append(new_points.get((ci, pi), p))
                merged = (tuple(sorted(factors)), canon_part_list(points))
                rest = [cl for ci, cl in enumerate(term) if ci not in touched]
                out[tuple(sorted(rest + [merged]))] += 1
    return out


def canon_part_list(points) -> Tuple[Part, ...]:
    return tuple(sorted(points, reverse=True))


def _viable(term: Term, target: Index, s: int) -> bool:
    w = 0
    for _, points in term:
        for p in points:
            if not any(_submultiset(p, q) for q in target):
                return False
            w += sum(p)
    return w <= s


_memo: Dict[Index, Dict[Term, Fraction]] = {}
_lock = threading.Lock()


def target_terms(target) -> Dict[Term, Fraction]:
    """Cluster structures contributing to the coefficient of s_target."""
    target = canon_index(target)
    with _lock:
        hit = _memo.get(target)
    if hit is not None:
        return hit
    s = index_weight(target)
    generators = [(I, Fraction(1, norm(I))) for I in relevant_indices(target)]
    total: Dict[Term, Fraction] = defaultdict(Fraction)
    current: Dict[Term, Fraction] = {(): Fraction(1)}
    for r in range(1, s + 1):
        nxt: Dict[Term, Fraction] = defaultdict(Fraction)
        for term, c in current.items():
            for I, ci in generators:
                for new, mult in _attach(term, I).items():
                    if _viable(new, target, s):
                        nxt[new] += c * ci * mult
        current = {k: v for k, v in nxt.items() if v}
        for term, c in current.items():
            pts = canon_part_list([p for cl in term for p in cl[1]])
            if pts == target:
                total[term] += c / factorial(r)
        if not current:
            break
    result = {k: v for k, v in total.items() if v}
    with _lock:
        _memo.setdefault(target, result)
    return result


def factor_indices(target) -> List[Index]:
    """Residual indices that occur as factors for this target; all but the
    target itself have strictly smaller weight."""
    found = {I for term in target_terms(target) for cl in term for I in cl[0]}
    return sorted(found, key=lambda I: (index_weight(I), I))


def merges(cluster: Cluster) -> int:
    factors, points = cluster
    return sum(len(I) for I in factors) - len(points)


def evaluate(target, push: Callable[[Index], object], psi, zero):
    """Σ over cluster structures of weight · ∏ ψ^merges · ∏ push(I)."""
    acc = zero
    cache: Dict[Index, object] = {}
    for term, c in sorted(target_terms(target).items()):
        value = c
        for cl in term:
            e = merges(cl)
            if e:
                value = (psi ** e) * value
            for I in cl[0]:
                if I not in cache:
                    cache[I] = push(I)
                value = cache[I] * value
        acc = acc + value
    return acc
