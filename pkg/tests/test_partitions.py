import pytest
from hypothesis import given, strategies as st

from artifact.partitions import (
    MultiPartition,
    NegativeSimplePoints,
    PartitionError,
    ReducedPartition,
    SSum,
    aut_order,
    aut_set_order,
    codim,
    m_count,
    merge_products,
    s_multiply,
)

reduced = st.lists(st.integers(1, 3), min_size=1, max_size=3).map(ReducedPartition)
multi = st.lists(reduced, max_size=3).map(MultiPartition)


@pytest.mark.parametrize("text", ["1^2,2^1", "2^1;1^2", "1^1,3^1", "{}", "2^1;2^1", "1^4"])
def test_round_trip(text):
    assert str(MultiPartition.parse(text)) == text


def test_equivalent_spellings():
    assert MultiPartition.parse("1^2 2^1") == MultiPartition.parse("1^2,2^1")
    assert MultiPartition.parse("1^2;2^1") == MultiPartition.parse("2^1;1^2")
    assert MultiPartition.parse("1^2,2^1") != MultiPartition.parse("1^2;2^1")


@given(multi)
def test_parse_print_property(m):
    assert MultiPartition.parse(str(m)) == m


@pytest.mark.parametrize("bad", ["0^1", "x", "1^", "2^1;;1^2"])
def test_bad_labels(bad):
    with pytest.raises(PartitionError):
        MultiPartition.parse(bad)


def test_counts():
    assert aut_order(ReducedPartition.parse("1^2,2^1")) == 2
    assert aut_order(ReducedPartition.parse("1^3")) == 6
    assert aut_set_order(MultiPartition.parse("2^1;2^1")) == 2
    assert aut_set_order(MultiPartition.parse("2^1;1^2")) == 1
    assert codim(MultiPartition.parse("1^2")) == 1
    assert codim(MultiPartition.parse("2^1;1^2")) == 2
    assert codim(MultiPartition.parse("1^4")) == 3
    assert m_count(MultiPartition.parse("1^2"), 4) == 4
    with pytest.raises(NegativeSimplePoints):
        m_count(MultiPartition.parse("3^1;3^1"), 3)


def test_latex():
    assert MultiPartition.parse("1^2,2^1").latex() == "1^{2}2^{1}"


def test_merge_product_small():
    # s_{2^1} * s_{2^1} = s_{2^1;2^1} + s_{2^2}
    prod = SSum.s([2]) * SSum.s([2])
    assert prod == SSum({MultiPartition.parse("2^1;2^1"): 1, MultiPartition.parse("2^2"): 1})
    assert sum(merge_products(MultiPartition.parse("1^1;2^1"), MultiPartition.parse("3^1")).values()) == 3


ssums = st.lists(st.tuples(multi, st.integers(-3, 3)), max_size=2).map(lambda ts: SSum(dict(ts)))


@given(ssums, ssums)
def test_s_multiply_commutative(a, b):
    assert s_multiply(a, b) == s_multiply(b, a)


@given(ssums, ssums, ssums)
def test_s_multiply_associative(a, b, c):
    assert s_multiply(s_multiply(a, b), c) == s_multiply(a, s_multiply(b, c))


@given(ssums, ssums, ssums)
def test_s_multiply_distributive(a, b, c):
    assert s_multiply(a, b + c) == s_multiply(a, b) + s_multiply(a, c)
