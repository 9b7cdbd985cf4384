import pytest

from config import config
from errors import UnsupportedFamily
from partitions.families import FamilySpec, enumerate_family, enumerate_pairs, family_from_name, is_member
from partitions.partition import make_partition
from qseries.pochhammer import pochhammer

# число разбиений на различные части, n = 0..20
DISTINCT_COUNTS = [1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15, 18, 22, 27, 32, 38, 46, 54, 64]

Q10 = [
    (10,), (8, 2), (6, 4), (5, 3, 2),
    (10, 0), (8, 2, 0), (6, 4, 0), (5, 3, 2, 0),
    (9, 1, 0), (7, 3, 0), (4, 3, 2, 1, 0),
    (7, 2, 1, 0), (6, 3, 1, 0), (5, 4, 1, 0),
]


def brute_distinct(n, largest=None):
    """Все разбиения n на различные положительные части, независимо от библиотеки"""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for p in range(min(n, largest), 0, -1):
        for rest in brute_distinct(n - p, p - 1):
            yield (p,) + rest


def brute_family(family, n):
    found = set()
    for parts in brute_distinct(n):
        for candidate in (parts, parts + (0,)):
            if is_member(make_partition(candidate), family):
                found.add(candidate)
    return found


def test_membership_examples():
    assert is_member(make_partition([6, 5, 3, 2, 1]), FamilySpec.dk(5, 1))
    assert is_member(make_partition([19, 15, 9, 5, 3]), FamilySpec.b(3))
    assert not is_member(make_partition([4, 2]), FamilySpec.pdo(1))
    assert is_member(make_partition([0]), FamilySpec.q())
    assert not is_member(make_partition([]), FamilySpec.q())
    assert is_member(make_partition([]), FamilySpec.pdo(1))


def test_membership_modular():
    assert is_member(make_partition([20, 16, 11, 5, 3, 0]), FamilySpec.a(2))
    assert not is_member(make_partition([20, 14, 11, 5, 3, 0]), FamilySpec.a(2))
    assert is_member(make_partition([12, 8, 7, 5, 3]), FamilySpec.dk(5, 2))
    assert is_member(make_partition([12, 12, 8]), FamilySpec.ek(5, 2))
    assert not is_member(make_partition([12, 6]), FamilySpec.ek(5, 2))
    assert is_member(make_partition([5, 5, 3, 3, 2, 2, 2, 2, 1, 1]), FamilySpec.hkm(5, 3))
    assert not is_member(make_partition([5, 5, 5]), FamilySpec.hkm(5, 3))


def test_pdo_10():
    found = [p.parts for p in enumerate_family(FamilySpec.pdo(1), 10)]
    assert sorted(found) == sorted([(9, 1), (7, 3), (4, 3, 2, 1), (7, 2, 1), (6, 3, 1), (5, 4, 1)])


def test_q_10():
    found = [p.parts for p in enumerate_family(FamilySpec.q(), 10)]
    assert len(found) == 14
    assert set(found) == set(Q10)


def test_q_9_parity_classes():
    members = enumerate_family(FamilySpec.q(), 9)
    assert len(members) == 11
    assert sum(1 for p in members if p.length_even % 2 == 0) == 5
    assert sum(1 for p in members if p.length_even % 2 == 1) == 6


def test_empty_weight():
    assert [p.parts for p in enumerate_family(FamilySpec.pdo(1), 0)] == [()]
    assert [p.parts for p in enumerate_family(FamilySpec.q(), 0)] == [(0,)]
    assert [p.parts for p in enumerate_family(FamilySpec.b(2), 0)] == [()]


def test_order_is_lex_decreasing():
    found = [p.parts for p in enumerate_family(FamilySpec.q(), 12)]
    assert found == sorted(found, reverse=True)


@pytest.mark.parametrize("family", [
    FamilySpec.distinct(), FamilySpec.pdo(1), FamilySpec.pdo(2), FamilySpec.q(),
    FamilySpec.a(2), FamilySpec.a(3), FamilySpec.b(1), FamilySpec.b(2), FamilySpec.b(3),
])
def test_enumeration_matches_brute_force(family):
    for n in range(0, 26):
        found = enumerate_family(family, n)
        assert len(found) == len(set(found))
        assert all(is_member(p, family) and p.size == n for p in found)
        assert {p.parts for p in found} == brute_family(family, n)


def test_dk_brute_force():
    for k in range(0, 6):
        family = FamilySpec.dk(k, 1)
        for n in range(0, 26):
            found = {p.parts for p in enumerate_family(family, n)}
            assert found == {parts for parts in brute_distinct(n) if is_member(make_partition(parts), family)}


def test_distinct_counts():
    assert [len(enumerate_family(FamilySpec.distinct(), n)) for n in range(21)] == DISTINCT_COUNTS


@pytest.mark.slow
def test_distinct_counts_match_euler_product():
    N = config.ACCEPTANCE["census_nmax"]
    product = pochhammer(0, -1, 1, 1, None, N)
    for n in range(N + 1):
        assert len(enumerate_family(FamilySpec.distinct(), n)) == product.coefficient(n).coefficient(0)


def test_ek_and_hkm_enumeration():
    assert [p.parts for p in enumerate_family(FamilySpec.ek(2, 1), 6)] == [(4, 2), (2, 2, 2)]
    assert [p.parts for p in enumerate_family(FamilySpec.hkm(2, 2), 6)] == [(2, 2, 1, 1)]


def test_enumerate_pairs_small():
    pairs = [(pi.parts, sigma.parts) for pi, sigma in enumerate_pairs(6)]
    assert pairs == [((3, 2, 1), ()), ((3, 1), (2,))]
    assert [(pi.parts, sigma.parts) for pi, sigma in enumerate_pairs(4)] == [((3, 1), ())]
    assert [(pi.parts, sigma.parts) for pi, sigma in enumerate_pairs(0)] == [((), ())]


def test_family_from_name():
    assert family_from_name("a", 2) == FamilySpec.a(2)
    with pytest.raises(UnsupportedFamily):
        family_from_name("xyz")
    with pytest.raises(UnsupportedFamily):
        FamilySpec.pdo(0)
