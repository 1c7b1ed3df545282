from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from artifact import tables
from artifact.oracle import (
    FactorizationSpec,
    ResourceBound,
    TooLarge,
    count_all,
    count_connected,
    cycle_type,
    hurwitz_oracle,
    naive_count,
    partitions_of,
    reduced_to_cycle_type,
    spec_for,
)
from artifact.partitions import NegativeSimplePoints, ReducedPartition
from artifact.strata import hurwitz_number


def test_reduced_to_cycle_type():
    assert reduced_to_cycle_type(ReducedPartition.parse("2^1"), 4) == (3, 1)
    assert reduced_to_cycle_type(ReducedPartition.parse("1^2"), 4) == (2, 2)
    with pytest.raises(TooLarge):
        reduced_to_cycle_type(ReducedPartition.parse("1^3"), 5)


def test_count_examples():
    assert count_all(FactorizationSpec(2, [], 2)) == 1
    assert count_connected(FactorizationSpec(2, [], 2)) == 1
    assert count_all(FactorizationSpec(3, [(3,)], 2)) == 6
    assert count_all(FactorizationSpec(3, [], 2)) == 3
    assert count_connected(FactorizationSpec(3, [], 2)) == 0


def test_hurwitz_examples():
    assert hurwitz_oracle("2^1", 3) == 1
    assert hurwitz_oracle("{}", 2) == Fraction(1, 2)
    assert hurwitz_oracle("1^2", 4) == 12


def test_classical_simple_numbers():
    # only simple branch points: (2n-2)! n^(n-3) / n!
    for n in range(2, 7):
        assert hurwitz_oracle("{}", n) == Fraction(factorial(2 * n - 2)) * Fraction(n) ** (n - 3) / factorial(n)


def test_resource_bound():
    with pytest.raises(ResourceBound):
        hurwitz_oracle("2^1", 9)
    with pytest.raises(ResourceBound):
        naive_count(spec_for("2^1", 6))
    with pytest.raises(NegativeSimplePoints):
        spec_for("2^1;2^1;2^1", 3)


def test_cycle_type():
    assert cycle_type((1, 2, 0, 3)) == (3, 1)
    assert list(partitions_of(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


specs = st.integers(2, 5).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.sampled_from(list(partitions_of(n))), max_size=3),
    st.integers(0, 4),
))


@given(specs, st.randoms())
def test_permutation_invariance(data, rnd):
    n, classes, m = data
    shuffled = list(classes)
    rnd.shuffle(shuffled)
    assert count_all(FactorizationSpec(n, classes, m)) == count_all(FactorizationSpec(n, shuffled, m))


@given(specs)
def test_parity_and_bounds(data):
    n, classes, m = data
    spec = FactorizationSpec(n, classes, m)
    total, conn = count_all(spec), count_connected(spec)
    if spec.parity():
        assert total == 0
    assert 0 <= conn <= total
    if any(c == (n,) for c in classes):
        assert conn == total


@given(specs)
def test_naive_agrees(data):
    n, classes, m = data
    spec = FactorizationSpec(n, classes[:2], min(m, 3))
    assert naive_count(spec) == count_connected(spec)
    spec.require_transitive = False
    assert naive_count(spec) == count_all(spec)


@pytest.mark.parametrize("label", tables.LABELS)
def test_against_symbolic(label):
    for n in range(3, 7):
        try:
            h = hurwitz_oracle(label, n)
        except TooLarge:
            continue
        assert h == hurwitz_number(label, n)


def test_higher_genus_runs():
    # genus one, two simple points only: nothing to compare with, but it must be a rational >= 0
    assert hurwitz_oracle("{}", 3, g=1) > 0
