from typing import Dict, List, Tuple
import logging

from errors import InvariantViolation, NotInFamily
from partitions.families import FamilySpec, enumerate_family, is_member
from partitions.partition import Partition, add_partitions, conjugate, triangular

logger = logging.getLogger(__name__)


def b_to_pair(mu: Partition, m: int = 1) -> Tuple[int, Partition]:
    """B(m) -> {T_k} x H(k,m): снимаем столбцы, пока какой-то зазор (mu_{k+1} := -1) больше 2"""
    family = FamilySpec.b(m)
    if not is_member(mu, family):
        raise NotInFamily(mu.parts, family.name)
    parts = list(mu.parts)
    k = len(parts)
    rows: List[int] = []
    while True:
        gaps = [parts[i] - (parts[i + 1] if i + 1 < k else -1) for i in range(k)]
        wide = [i for i, gap in enumerate(gaps) if gap > 2]
        if not wide:
            break
        i = wide[-1]
        width = gaps[i] - 2
        for j in range(i + 1):
            parts[j] -= width
        rows.extend([i + 1] * width)
        logger.debug(f"{mu}: сняты {width} столбцов длины {i + 1}")

    if Partition(tuple(parts)) != triangular(k):
        raise InvariantViolation(f"После снятия столбцов из {mu} остался не T_{k}: {parts}")
    return k, Partition(tuple(rows))


def pair_to_b(k: int, rows: Partition, m: int = 1) -> Partition:
    family = FamilySpec.hkm(k, m)
    if not is_member(rows, family):
        raise NotInFamily(rows.parts, family.name)
    return add_partitions(triangular(k), conjugate(rows))


def bijection_table(n: int, m: int = 1) -> List[Dict]:
    """Все mu из B(m) веса n вместе с их парами (k, lambda_{k,m})"""
    table = []
    for mu in enumerate_family(FamilySpec.b(m), n):
        k, rows = b_to_pair(mu, m)
        table.append({"mu": mu, "k": k, "rows": rows})
    return table
