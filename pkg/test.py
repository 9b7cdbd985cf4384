# Быстрая ручная проверка: одна трасса Psi и одна проверка тождества
import json

from involutions.franklin import FranklinInvolution
from partitions.partition import make_partition
from qseries.checker import IdentityChecker


def test_smoke():
    outcome = FranklinInvolution().apply(make_partition([16, 11, 9, 6, 3]))
    print("Psi трасса:", json.dumps(outcome.trace, ensure_ascii=False))
    check = IdentityChecker().check_identity("Ramanujan", 30)
    print("Ramanujan до q^30:", "совпадает" if check.equal else check.first_discrepancy)


if __name__ == "__main__":
    test_smoke()
