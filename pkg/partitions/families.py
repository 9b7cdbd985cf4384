from dataclasses import dataclass
from typing import Callable, Iterator, List, Optional, Tuple
from collections import Counter
import logging

from errors import NegativePart, UnsupportedFamily
from partitions.partition import Partition

logger = logging.getLogger(__name__)

FAMILY_TAGS = ("AllDistinct", "Pdo", "Q", "A", "B", "Dk", "Ek", "Hkm")


@dataclass(frozen=True)
class FamilySpec:
    """Семейство разбиений: тег плюс параметры m (модуль 2m) и k (число частей или граница)"""
    tag: str
    m: int = 1
    k: Optional[int] = None

    def __post_init__(self):
        if self.tag not in FAMILY_TAGS:
            raise UnsupportedFamily(f"Неизвестное семейство: {self.tag}")
        if self.m < 1:
            raise UnsupportedFamily(f"{self.tag}: m должно быть >= 1, получено {self.m}")
        if self.tag in ("Dk", "Ek", "Hkm") and (self.k is None or self.k < 0):
            raise UnsupportedFamily(f"{self.tag}: нужен параметр k >= 0")

    @property
    def modulus(self) -> int:
        return 2 * self.m

    @property
    def name(self) -> str:
        if self.tag in ("AllDistinct", "Q"):
            return self.tag
        if self.tag in ("Pdo", "A", "B"):
            return f"{self.tag}({self.m})"
        return f"{self.tag}({self.k},{self.m})"

    def __str__(self) -> str:
        return self.name

    @classmethod
    def distinct(cls) -> "FamilySpec":
        return cls("AllDistinct")

    @classmethod
    def pdo(cls, m: int = 1) -> "FamilySpec":
        return cls("Pdo", m)

    @classmethod
    def q(cls) -> "FamilySpec":
        return cls("Q")

    @classmethod
    def a(cls, m: int = 1) -> "FamilySpec":
        return cls("A", m)

    @classmethod
    def b(cls, m: int = 1) -> "FamilySpec":
        return cls("B", m)

    @classmethod
    def dk(cls, k: int, m: int = 1) -> "FamilySpec":
        return cls("Dk", m, k)

    @classmethod
    def ek(cls, k: int, m: int = 1) -> "FamilySpec":
        return cls("Ek", m, k)

    @classmethod
    def hkm(cls, k: int, m: int = 1) -> "FamilySpec":
        return cls("Hkm", m, k)


CLI_FAMILIES = {
    "distinct": lambda m: FamilySpec.distinct(),
    "pdo": FamilySpec.pdo,
    "q": lambda m: FamilySpec.q(),
    "a": FamilySpec.a,
    "b": FamilySpec.b,
}


def family_from_name(name: str, m: int = 1) -> FamilySpec:
    if name not in CLI_FAMILIES:
        raise UnsupportedFamily(f"Неизвестное семейство: {name}")
    return CLI_FAMILIES[name](m)


# --- предикаты ---

def _gaps_bounded(parts: Tuple[int, ...], bound: int) -> bool:
    """Разности соседних частей (с нулём снизу) не превосходят bound"""
    padded = parts + (0,)
    return all(a - b <= bound for a, b in zip(padded, padded[1:]))


def _modular_evens(parts: Tuple[int, ...], modulus: int) -> bool:
    return all(p % 2 == 1 or p % modulus == 0 for p in parts)


def is_member(partition: Partition, family: FamilySpec) -> bool:
    parts = partition.parts
    distinct = partition.is_distinct()
    modulus = family.modulus
    tag = family.tag

    if tag == "AllDistinct":
        return distinct and not partition.has_zero
    if tag == "Pdo":
        if partition.has_zero or not distinct:
            return False
        return _modular_evens(parts, modulus) and (not parts or parts[-1] % 2 == 1)
    if tag in ("Q", "A"):
        if not parts or not distinct or parts[-1] % 2 != 0:
            return False
        return tag == "Q" or _modular_evens(parts, modulus)
    if tag == "B":
        if partition.has_zero or not distinct:
            return False
        return all(p % 2 == 1 for p in parts) and _gaps_bounded(parts, modulus)
    if tag == "Dk":
        if len(parts) != family.k or partition.has_zero or not distinct:
            return False
        if parts and parts[-1] % 2 == 0:
            return False
        return _modular_evens(parts, modulus) and _gaps_bounded(parts, modulus)
    if tag == "Ek":
        return all(p > 0 and p % modulus == 0 and p <= modulus * family.k for p in parts)
    if tag == "Hkm":
        if partition.has_zero or any(p > family.k for p in parts):
            return False
        return all(c % 2 == 0 and c < modulus for c in Counter(parts).values())
    raise UnsupportedFamily(f"Неизвестное семейство: {tag}")


# --- перечисление ---

def _ascending_distinct(
    n: int,
    first_ok: Callable[[int], bool],
    part_ok: Callable[[int], bool],
    max_gap: Optional[int] = None,
    length: Optional[int] = None,
) -> Iterator[List[int]]:
    """Строго возрастающие наборы положительных частей с суммой n, от меньшей части к большей"""

    def extend(remaining: int, prev: int, acc: List[int]) -> Iterator[List[int]]:
        if remaining == 0:
            if length is None or len(acc) == length:
                yield list(acc)
            return
        if length is not None and len(acc) >= length:
            return
        hi = remaining if max_gap is None else min(remaining, prev + max_gap)
        ok = first_ok if not acc else part_ok
        # либо p последняя часть, либо после неё остаётся место для части > p
        candidates = list(range(prev + 1, min(hi, (remaining - 1) // 2) + 1))
        if prev < remaining <= hi:
            candidates.append(remaining)
        for p in candidates:
            if not ok(p):
                continue
            acc.append(p)
            yield from extend(remaining - p, p, acc)
            acc.pop()

    yield from extend(n, 0, [])


def _multiset(n: int, sizes: List[int], multiplicities: Callable[[int], range]) -> Iterator[List[int]]:
    """Разбиения n на части из sizes (по убыванию) с допустимыми кратностями"""

    def extend(remaining: int, index: int, acc: List[int]) -> Iterator[List[int]]:
        if remaining == 0:
            yield list(acc)
            return
        if index == len(sizes):
            return
        size = sizes[index]
        for count in multiplicities(size):
            if count * size > remaining:
                break
            acc.extend([size] * count)
            yield from extend(remaining - count * size, index + 1, acc)
            del acc[len(acc) - count:]

    yield from extend(n, 0, [])


def _odd(p: int) -> bool:
    return p % 2 == 1


def _any(p: int) -> bool:
    return True


def _raw(family: FamilySpec, n: int) -> Iterator[Tuple[int, ...]]:
    modulus = family.modulus
    modular = lambda p: p % 2 == 1 or p % modulus == 0  # noqa: E731
    tag = family.tag

    if tag == "AllDistinct":
        for parts in _ascending_distinct(n, _any, _any):
            yield tuple(parts)
    elif tag == "Pdo":
        for parts in _ascending_distinct(n, _odd, modular):
            yield tuple(parts)
    elif tag in ("Q", "A"):
        part_ok = _any if tag == "Q" else modular
        even_ok = (lambda p: p % 2 == 0) if tag == "Q" else (lambda p: p % modulus == 0)
        # без нуля: наименьшая часть чётная
        for parts in _ascending_distinct(n, even_ok, part_ok):
            if parts:
                yield tuple(parts)
        # с нулём: любое подходящее разбиение плюс часть 0
        for parts in _ascending_distinct(n, part_ok, part_ok):
            yield (0,) + tuple(parts)
    elif tag == "B":
        for parts in _ascending_distinct(n, _odd, _odd, max_gap=modulus):
            yield tuple(parts)
    elif tag == "Dk":
        for parts in _ascending_distinct(n, _odd, modular, max_gap=modulus, length=family.k):
            yield tuple(parts)
    elif tag == "Ek":
        sizes = [modulus * t for t in range(family.k, 0, -1)]
        for parts in _multiset(n, sizes, lambda size: range(0, n // size + 1)):
            yield tuple(parts)
    elif tag == "Hkm":
        sizes = list(range(family.k, 0, -1))
        for parts in _multiset(n, sizes, lambda size: range(0, modulus, 2)):
            yield tuple(parts)
    else:
        raise UnsupportedFamily(f"Неизвестное семейство: {tag}")


def enumerate_family(family: FamilySpec, n: int) -> List[Partition]:
    """Все разбиения n из семейства в лексикографически убывающем порядке"""
    if n < 0:
        raise NegativePart(f"Вес должен быть неотрицательным: {n}")
    result = sorted((Partition(parts) for parts in _raw(family, n)), key=lambda p: p.parts, reverse=True)
    logger.debug(f"{family}: {len(result)} разбиений веса {n}")
    return result


def enumerate_pairs(n: int, m: int = 1) -> List[Tuple[Partition, Partition]]:
    """Все пары (pi, sigma) из Dk(k,m) x Ek(k,m) суммарного веса n, по всем k"""
    pairs = []
    k = 0
    while k * (k + 1) // 2 <= n:
        for weight in range(n + 1):
            pis = enumerate_family(FamilySpec.dk(k, m), weight)
            if not pis:
                continue
            sigmas = enumerate_family(FamilySpec.ek(k, m), n - weight)
            pairs.extend((pi, sigma) for pi in pis for sigma in sigmas)
        k += 1
    pairs.sort(key=lambda pair: (pair[0].parts, pair[1].parts), reverse=True)
    return pairs
