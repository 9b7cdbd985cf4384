from enum import Enum
import logging

from errors import WrongFamilyForWeight
from partitions.families import FamilySpec, enumerate_family, is_member
from partitions.partition import Partition, square_root
from weights.apoly import APolynomial

logger = logging.getLogger(__name__)


class WeightKind(str, Enum):
    GAP = "Gap"
    ODD = "Odd"
    EVEN_SMALLEST = "EvenSmallest"
    A1 = "A1"
    A2 = "A2"
    SIGN_ONLY = "SignOnly"


def _sign(length: int) -> int:
    return -1 if length % 2 else 1


def _check_shape(partition: Partition, kind: WeightKind):
    # у weight нет параметра m: проверяется объемлющее семейство
    if kind in (WeightKind.GAP, WeightKind.ODD):
        ok = is_member(partition, FamilySpec.pdo(1))
    elif kind in (WeightKind.EVEN_SMALLEST, WeightKind.A1):
        ok = is_member(partition, FamilySpec.q())
    elif kind == WeightKind.A2:
        ok = partition.is_distinct() and all(p % 2 == 1 for p in partition)
    else:
        ok = True
    if not ok:
        raise WrongFamilyForWeight(f"Вес {kind.value} не определён для {partition}")


def gap_exponent(partition: Partition) -> int:
    """Сумма delta_i = ceil((lambda_i - lambda_{i+1}) / 2)"""
    padded = partition.parts + (0,)
    return sum((a - b + 1) // 2 for a, b in zip(padded, padded[1:]))


def weight(partition: Partition, kind: WeightKind) -> APolynomial:
    kind = WeightKind(kind)
    _check_shape(partition, kind)
    length = len(partition)
    if kind == WeightKind.GAP:
        return APolynomial.monomial(_sign(length), gap_exponent(partition))
    if kind == WeightKind.ODD:
        return APolynomial.monomial(_sign(length), partition.length_odd)
    if kind in (WeightKind.EVEN_SMALLEST, WeightKind.A1):
        return APolynomial.monomial(-_sign(length), partition.length_odd)
    if kind == WeightKind.A2:
        return APolynomial.signed_power(length)
    return APolynomial.constant(_sign(length))


def pair_weight(pi: Partition, sigma: Partition) -> APolynomial:
    """(-1)^{l(pi)} a^{l(pi) + l(sigma)} для пары из Dk x Ek"""
    return APolynomial.monomial(_sign(len(pi)), len(pi) + len(sigma))


def weighted_sum(family: FamilySpec, n: int, kind: WeightKind) -> APolynomial:
    total = APolynomial.zero()
    for partition in enumerate_family(family, n):
        total = total + weight(partition, kind)
    return total


def rhs_square(n: int, kind: WeightKind) -> APolynomial:
    """(-a)^k (или (-1)^k для SignOnly) при n = k^2, иначе 0"""
    k = square_root(n)
    if k is None:
        return APolynomial.zero()
    if WeightKind(kind) == WeightKind.SIGN_ONLY:
        return APolynomial.constant(_sign(k))
    return APolynomial.signed_power(k)
