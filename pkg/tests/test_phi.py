import pytest

from config import config
from errors import InvariantViolation, NotInFamily
from involutions.models import InvolutionOutcome, PairState
from involutions.phi import PhiInvolution, phi
from partitions.partition import make_partition


def pair(pi, sigma, m=1):
    return PairState(make_partition(pi), make_partition(sigma), m)


@pytest.mark.parametrize("source, image, case", [
    (((8, 6, 5, 4, 2, 1), (10,)), ((6, 4, 3, 2, 1), (10, 10)), "A1"),
    (((7, 6, 4, 3, 1), ()), ((5, 4, 3, 1), (8,)), "A1"),
    (((6, 5, 3, 2, 1), (4,)), ((5, 3, 2, 1), (6, 4)), "B1"),
    (((3, 1), (4, 2)), ((4, 3, 1), (2,)), "B2"),
])
def test_phi_cases(source, image, case):
    outcome = phi(pair(*source))
    assert outcome.case == case
    assert outcome.value == pair(*image)


@pytest.mark.parametrize("source, image, case", [
    (((6, 4, 3, 2, 1), (10, 10)), ((8, 6, 5, 4, 2, 1), (10,)), "A2"),
    (((5, 4, 3, 1), (8,)), ((7, 6, 4, 3, 1), ()), "A2"),
    (((5, 3, 2, 1), (6, 4)), ((6, 5, 3, 2, 1), (4,)), "B2"),
    (((4, 3, 1), (2,)), ((3, 1), (4, 2)), "B1"),
])
def test_phi_inverse_cases(source, image, case):
    outcome = phi(pair(*source))
    assert outcome.case == case
    assert outcome.value == pair(*image)


def test_phi_fixed_point():
    outcome = phi(pair((5, 3, 1), ()))
    assert outcome.is_fixed
    assert outcome.value == pair((5, 3, 1), ())


def test_phi_empty_pair_is_fixed():
    assert phi(pair((), ())).is_fixed


def test_phi_hook_of_length_modulus_above_pairs_with_plain_insertion():
    # крюк из второй строки при pi_1 - pi_2 = 2m: A1 в одну сторону, B2 в другую
    there = phi(pair((6, 4, 3, 1), ()))
    assert there.case == "A1"
    assert there.value == pair((4, 3, 1), (6,))
    back = phi(there.value)
    assert back.case == "B2"
    assert back.value == pair((6, 4, 3, 1), ())


def test_phi_modulus_four():
    state = pair((8, 7, 5, 3, 1), (), 2)
    outcome = phi(state)
    assert not outcome.is_fixed
    assert phi(outcome.value).value == state


def test_phi_modulus_four_hook_that_would_reorder_rows():
    # крюк строки 3 у 8+5+4+3 не удаляется: 5 - 4 оказалось бы ниже 3
    there = phi(pair((8, 5, 4, 3), (), 2))
    assert there.case == "B1"
    assert there.value == pair((5, 4, 3), (8,), 2)
    back = phi(there.value)
    assert back.case == "B2"
    assert back.value == pair((8, 5, 4, 3), (), 2)


def test_outcome_rejects_unknown_case():
    state = pair((5, 3, 1), ())
    with pytest.raises(InvariantViolation):
        InvolutionOutcome.image(state, state, "C3")
    assert InvolutionOutcome.image(state, state, "B2").case == "B2"


def test_phi_rejects_bad_pair():
    with pytest.raises(NotInFamily):
        phi(pair((4, 2), ()))
    with pytest.raises(NotInFamily):
        phi(pair((3, 1), (6,)))
    with pytest.raises(NotInFamily):
        PhiInvolution(2).apply(pair((3, 1), ()))


@pytest.mark.parametrize("m", [1, 2, 3])
def test_phi_audit(m):
    for n in range(0, 19):
        report = PhiInvolution(m).audit(n)
        assert report["ok"], report["problems"]


@pytest.mark.slow
@pytest.mark.parametrize("m", [1, 2, 3])
def test_phi_audit_wide(m):
    for n in range(19, config.ACCEPTANCE["involution_nmax_m"] + 1):
        report = PhiInvolution(m).audit(n)
        assert report["ok"], report["problems"]
