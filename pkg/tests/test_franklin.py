from hypothesis import assume, given, strategies as st
import pytest

from config import config
from errors import NotInFamily
from involutions.franklin import FranklinInvolution, assemble, extract, psi_do
from involutions.models import InvolutionOutcome, PairState
from partitions.families import FamilySpec, enumerate_family
from partitions.partition import Partition, make_partition, triangular


@st.composite
def pdo_member(draw, max_n=30):
    m = draw(st.integers(min_value=1, max_value=3))
    n = draw(st.integers(min_value=0, max_value=max_n))
    members = enumerate_family(FamilySpec.pdo(m), n)
    assume(members)
    return draw(st.sampled_from(members)), m


def test_extract_known():
    state = extract(make_partition([16, 11, 9, 6, 3]), 1)
    assert state.pi.parts == (6, 5, 3, 2, 1)
    assert state.sigma.parts == (10, 8, 6, 2, 2)
    state = extract(make_partition([9, 1]), 1)
    assert (state.pi.parts, state.sigma.parts) == ((3, 1), (2, 2, 2))


def test_extract_triangular_is_untouched():
    for k in range(6):
        state = extract(triangular(k), 1)
        assert state.pi == triangular(k) and state.sigma.parts == ()


def test_extract_modulus_four():
    state = extract(make_partition([20, 16, 11, 5, 3]), 2)
    assert (state.pi.parts, state.sigma.parts) == ((12, 8, 7, 5, 3), (12, 8))


def test_extract_rejects_non_member():
    with pytest.raises(NotInFamily):
        extract(make_partition([4, 2]), 1)
    with pytest.raises(NotInFamily):
        extract(make_partition([6, 1]), 2)


def test_assemble_known():
    state = PairState(make_partition([6, 5, 3, 2, 1]), make_partition([10, 8, 6, 2, 2]), 1)
    assert assemble(state).parts == (16, 11, 9, 6, 3)
    assert assemble(PairState(make_partition([3, 2, 1]), make_partition([2, 2]), 1)).parts == (7, 2, 1)
    assert assemble(PairState(make_partition([5, 3, 1]), Partition(), 3)).parts == (5, 3, 1)


@given(pdo_member())
def test_assemble_inverts_extract(case):
    partition, m = case
    state = extract(partition, m)
    assert state.size == partition.size
    assert assemble(state) == partition


@pytest.mark.parametrize("source, image", [
    ((8, 1), (9,)),
    ((9,), (8, 1)),
    ((4, 3, 2, 1), (5, 4, 1)),
    ((9, 1), (7, 2, 1)),
    ((7, 3), (6, 3, 1)),
])
def test_psi_do_pairings(source, image):
    outcome = psi_do(make_partition(source), 1)
    assert outcome.value.parts == image
    assert psi_do(outcome.value, 1).value.parts == source


@pytest.mark.parametrize("source, image, m", [
    ((9, 3), (5, 4, 3), 2),
    ((5, 4, 3), (9, 3), 2),
    ((13, 3), (7, 6, 3), 3),
])
def test_psi_do_modular_pairings(source, image, m):
    outcome = psi_do(make_partition(source), m)
    assert outcome.value.parts == image
    assert psi_do(outcome.value, m).value.parts == source


def test_psi_do_fixed_point():
    outcome = psi_do(make_partition([5, 3, 1]), 1)
    assert outcome.is_fixed
    assert outcome.trace["image"] == [5, 3, 1]


def test_psi_do_trace():
    outcome = psi_do(make_partition([16, 11, 9, 6, 3]), 1)
    assert outcome.trace["input"] == [16, 11, 9, 6, 3]
    assert outcome.trace["extract"] == {"pi": [6, 5, 3, 2, 1], "sigma": [10, 8, 6, 2, 2]}
    assert outcome.trace["phi_case"] == outcome.case
    assert outcome.trace["image"] == outcome.value.to_list()


def test_orbits_of_nine():
    pairs, fixed = FranklinInvolution(1).orbits(9)
    assert {frozenset((x.parts, y.parts)) for x, y in pairs} == {
        frozenset(((9,), (8, 1))),
        frozenset(((6, 3), (6, 2, 1))),
    }
    assert [p.parts for p in fixed] == [(5, 3, 1)]


@given(pdo_member())
def test_psi_do_changes_even_count_by_one(case):
    partition, m = case
    outcome = psi_do(partition, m)
    if outcome.is_fixed:
        assert all(p % 2 == 1 for p in partition)
        return
    image = outcome.value
    assert image.size == partition.size
    assert abs(image.length_even - partition.length_even) == 1
    assert image.length_odd == partition.length_odd
    assert psi_do(image, m).value == partition


class HalfPairedInvolution(FranklinInvolution):
    """Отправляет 9 в 8+1, а всё остальное оставляет на месте"""

    def __init__(self):
        super().__init__(1)
        self.calls = 0

    def _apply(self, partition):
        self.calls += 1
        if partition.parts == (9,):
            return InvolutionOutcome.image(partition, make_partition([8, 1]), "B2")
        return InvolutionOutcome.fixed_point(partition)


def test_audit_applies_once_per_member_and_catches_broken_pairs():
    involution = HalfPairedInvolution()
    report = involution.audit(9)
    assert involution.calls == report["members"] == 5
    assert not report["ok"]
    assert "9 -> 8+1 -> 8+1" in report["problems"]


@pytest.mark.parametrize("m", [1, 2, 3])
def test_franklin_audit(m):
    for n in range(0, 31):
        report = FranklinInvolution(m).audit(n)
        assert report["ok"], report["problems"]


@pytest.mark.slow
@pytest.mark.parametrize("m", [1, 2, 3])
def test_franklin_audit_wide(m):
    top = config.ACCEPTANCE["involution_nmax_m1" if m == 1 else "involution_nmax_m"]
    for n in range(31, top + 1):
        report = FranklinInvolution(m).audit(n)
        assert report["ok"], report["problems"]
