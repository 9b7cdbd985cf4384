from hypothesis import given, strategies as st
import pytest

from errors import DuplicateZero, NegativePart, NonIntegralPart, ZeroPartPresent
from partitions.partition import (
    Partition,
    add_partitions,
    conjugate,
    make_partition,
    parse_partition,
    square_root,
    stats,
    triangular,
)


@st.composite
def partition_strategy(draw, max_part=12, max_len=8):
    parts = draw(st.lists(st.integers(min_value=1, max_value=max_part), max_size=max_len))
    return make_partition(parts)


def test_make_partition_sorts():
    assert make_partition([1, 3, 9]).parts == (9, 3, 1)


def test_make_partition_empty():
    assert make_partition([]).parts == ()
    assert str(make_partition([])) == "()"


def test_make_partition_rejects_two_zeros():
    with pytest.raises(DuplicateZero):
        make_partition([0, 0])


def test_make_partition_rejects_negative():
    with pytest.raises(NegativePart):
        make_partition([3, -1])


@pytest.mark.parametrize("parts", [[1.5], [3, 2.25], ["3"], [True], [None]])
def test_make_partition_rejects_non_integral(parts):
    with pytest.raises(NonIntegralPart):
        make_partition(parts)


def test_make_partition_accepts_integral_floats():
    assert make_partition([3.0, 1]).parts == (3, 1)
    assert all(type(p) is int for p in make_partition([3.0, 1]).parts)


def test_parse_partition():
    assert parse_partition("20,16,11,5,3,0").parts == (20, 16, 11, 5, 3, 0)
    assert parse_partition("8+1").parts == (8, 1)
    assert parse_partition("()").parts == ()
    with pytest.raises(NonIntegralPart):
        parse_partition("5,1.5")


def test_stats_odd_parts():
    s = stats(make_partition([5, 3, 1])).to_dict()
    assert s == {"n": 9, "l": 3, "l_e": 0, "l_o": 3, "s": 1, "ss": 3}


def test_stats_zero_counts_as_even():
    s = stats(make_partition([5, 3, 1, 0])).to_dict()
    assert s == {"n": 9, "l": 4, "l_e": 1, "l_o": 3, "s": 0, "ss": 1}


def test_stats_empty():
    s = stats(Partition())
    assert s.n == 0 and s.length == 0
    assert s.smallest is None and s.second_smallest is None


def test_add_partitions():
    assert add_partitions(make_partition([3, 2, 1]), make_partition([2, 2])).parts == (5, 4, 1)
    assert add_partitions(make_partition([3, 2, 1]), make_partition([4])).parts == (7, 2, 1)
    assert (make_partition([4, 1]) + Partition()).parts == (4, 1)


@given(partition_strategy(), partition_strategy(), partition_strategy())
def test_add_partitions_commutative_associative(x, y, z):
    assert x + y == y + x
    assert (x + y) + z == x + (y + z)
    assert x + Partition() == x


def test_conjugate_known():
    assert conjugate(make_partition([5, 5, 3, 3, 2, 2, 2, 2, 1, 1])).parts == (10, 8, 4, 2, 2)
    assert conjugate(make_partition([1])).parts == (1,)
    assert conjugate(Partition()).parts == ()


def test_conjugate_rejects_zero():
    with pytest.raises(ZeroPartPresent):
        conjugate(make_partition([3, 0]))


@given(partition_strategy())
def test_conjugate_is_involution(p):
    assert conjugate(conjugate(p)) == p
    assert conjugate(p).size == p.size


def test_triangular():
    assert triangular(3).parts == (5, 3, 1)
    assert triangular(0).parts == ()
    assert triangular(5).parts == (9, 7, 5, 3, 1)
    assert all(triangular(k).size == k * k for k in range(12))


def test_square_root():
    assert square_root(49) == 7
    assert square_root(0) == 0
    assert square_root(50) is None
