import pytest

from config import config
from errors import UnknownIdentity
from partitions.families import FamilySpec
from qseries.bridge import count_series, pair_fixed_point_sum, series_from_enumeration, series_from_pairs
from qseries.checker import IdentityChecker
from qseries.identities import EQUATION_IDS, IDENTITY_BUILDERS, build_identity_side, dk_series, ek_series
from qseries.series import TruncatedSeries, series_equal
from weights.apoly import APolynomial
from weights.weight import WeightKind


def test_equation_ids():
    assert set(EQUATION_IDS) == {
        "Ramanujan", "AndrewsTheta", "General", "AndrewsM", "AlladiAlt", "AndrewsProblemSeries",
    }


def test_theta_right_side():
    rhs = build_identity_side("AndrewsTheta", "rhs", 1, 10)
    expected = {0: APolynomial.constant(1), 1: APolynomial({1: -1}), 4: APolynomial({2: 1}), 9: APolynomial({3: -1})}
    for n in range(11):
        assert rhs.coefficient(n) == expected.get(n, APolynomial.zero())


def test_modular_right_side():
    rhs = build_identity_side("AndrewsM", "rhs", 2, 5)
    assert [rhs.coefficient(n).coefficient(0) for n in range(6)] == [1, 1, 0, 1, 1, 0]


def test_general_reduces_to_theta():
    for side in ("lhs", "rhs"):
        assert build_identity_side("General", side, 1, 30) == build_identity_side("AndrewsTheta", side, 1, 30)


@pytest.mark.parametrize("identity", ["Ramanujan", "AndrewsTheta", "AlladiAlt", "AndrewsProblemSeries"])
def test_identities_hold(identity):
    check = IdentityChecker().check_identity(identity, 60)
    assert check.equal, check.first_discrepancy
    assert check.m is None


@pytest.mark.parametrize("identity", ["General", "AndrewsM"])
@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_modular_identities_hold(identity, m):
    check = IdentityChecker().check_identity(identity, 60, m)
    assert check.equal, check.first_discrepancy
    assert check.to_dict()["m"] == m


def test_unknown_identity():
    with pytest.raises(UnknownIdentity):
        build_identity_side("Euler", "lhs", 1, 10)
    with pytest.raises(UnknownIdentity):
        build_identity_side("AmCount", "rhs", 1, 10)
    with pytest.raises(UnknownIdentity):
        build_identity_side("Ramanujan", "middle", 1, 10)
    with pytest.raises(UnknownIdentity):
        IdentityChecker().check_identity("BmCount", 10)


def test_counting_series():
    assert IDENTITY_BUILDERS["AmCount"]["uses_m"]
    for m in (1, 2):
        assert count_series(FamilySpec.a(m), 25) == build_identity_side("AmCount", "lhs", m, 25)
        assert count_series(FamilySpec.b(m), 25) == build_identity_side("BmCount", "lhs", m, 25)


def test_dk_and_ek_series():
    for k in range(5):
        assert count_series(FamilySpec.dk(k, 1), 20) == dk_series(k, 20)
        assert count_series(FamilySpec.ek(k, 1), 20) == ek_series(k, 20)


def test_odd_weight_series_matches_alternative_form():
    # сумма с n = 1: пустое разбиение веса 0 не входит
    enumerated = series_from_enumeration(FamilySpec.pdo(1), WeightKind.ODD, 25, start=1)
    assert enumerated == build_identity_side("AlladiAlt", "lhs", 1, 25)


def test_pairs_series_is_ramanujan_left_side():
    assert series_from_pairs(18) == build_identity_side("Ramanujan", "lhs", 1, 18)


def test_pair_fixed_points_carry_the_whole_sum():
    pairs = series_from_pairs(16)
    for n in range(17):
        assert pair_fixed_point_sum(n) == pairs.coefficient(n)
    assert pair_fixed_point_sum(9) == APolynomial({3: -1})
    assert pair_fixed_point_sum(10) == APolynomial.zero()


def test_specializations():
    checks = IdentityChecker().check_specializations(30, 2)
    assert len(checks) == 4
    assert all(check.equal for check in checks), [c.to_dict() for c in checks if not c.equal]


def test_bridges():
    checks = IdentityChecker().check_bridges(16, [1, 2])
    assert checks
    assert all(check.equal for check in checks), [c.to_dict() for c in checks if not c.equal]


def test_save_series_check(tmp_path):
    from database.json_db import ReportDatabase

    db = ReportDatabase(str(tmp_path / "reports.json"))
    IdentityChecker(db).check_identity("Ramanujan", 12, save=True)
    saved = db.search_series_checks("Ramanujan")
    assert len(saved) == 1 and saved[0]["equal"] is True


def test_zero_truncation():
    for identity in EQUATION_IDS:
        lhs = build_identity_side(identity, "lhs", 1, 0)
        rhs = build_identity_side(identity, "rhs", 1, 0)
        assert series_equal(lhs, rhs)[0]
    assert build_identity_side("Ramanujan", "lhs", 1, 0) == TruncatedSeries.one(0)


@pytest.mark.slow
@pytest.mark.parametrize("identity, m", [
    ("Ramanujan", 1), ("AndrewsTheta", 1), ("AlladiAlt", 1), ("AndrewsProblemSeries", 1),
    ("General", 2), ("General", 3), ("AndrewsM", 2), ("AndrewsM", 3),
])
def test_identities_acceptance_range(identity, m):
    assert IdentityChecker().check_identity(identity, config.ACCEPTANCE["series_N"], m).equal


@pytest.mark.slow
def test_bridges_wide():
    assert all(check.equal for check in IdentityChecker().check_bridges(config.ACCEPTANCE["bridge_N"]))


@pytest.mark.slow
@pytest.mark.parametrize("m", [2, 3])
def test_specializations_wide(m):
    checks = IdentityChecker().check_specializations(config.ACCEPTANCE["specialization_N"], m)
    assert all(check.equal for check in checks)
