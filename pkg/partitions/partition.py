from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Tuple
import math

from errors import DuplicateZero, NegativePart, NonIntegralPart, ZeroPartPresent


@dataclass(frozen=True)
class PartitionStats:
    n: int
    length: int
    length_even: int
    length_odd: int
    smallest: Optional[int]
    second_smallest: Optional[int]

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "l": self.length,
            "l_e": self.length_even,
            "l_o": self.length_odd,
            "s": self.smallest,
            "ss": self.second_smallest,
        }


def _integral(p) -> int:
    """Часть без потери значения приводится к int; 1.5, "3" и True отвергаются"""
    if not isinstance(p, bool):
        try:
            value = int(p)
        except (TypeError, ValueError):
            value = None
        if value is not None and value == p:
            return value
    raise NonIntegralPart(f"Часть {p!r} не является целым числом")


@dataclass(frozen=True)
class Partition:
    """Разбиение: невозрастающий кортеж неотрицательных частей, не более одного нуля"""
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(sorted((_integral(p) for p in self.parts), reverse=True))
        if parts and parts[-1] < 0:
            raise NegativePart(f"Отрицательная часть в {list(self.parts)}")
        if parts.count(0) > 1:
            raise DuplicateZero(f"Больше одного нуля в {list(self.parts)}")
        object.__setattr__(self, "parts", parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, index):
        return self.parts[index]

    def __add__(self, other: "Partition") -> "Partition":
        return add_partitions(self, other)

    def __str__(self) -> str:
        if not self.parts:
            return "()"
        return "+".join(str(p) for p in self.parts)

    def part(self, i: int) -> int:
        """Часть с номером i (с единицы); за концом разбиения считается нулём"""
        if 1 <= i <= len(self.parts):
            return self.parts[i - 1]
        return 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length_even(self) -> int:
        return sum(1 for p in self.parts if p % 2 == 0)

    @property
    def length_odd(self) -> int:
        return sum(1 for p in self.parts if p % 2 == 1)

    @property
    def smallest(self) -> Optional[int]:
        return self.parts[-1] if self.parts else None

    @property
    def second_smallest(self) -> Optional[int]:
        return self.parts[-2] if len(self.parts) >= 2 else None

    @property
    def has_zero(self) -> bool:
        return bool(self.parts) and self.parts[-1] == 0

    def is_distinct(self) -> bool:
        return all(a > b for a, b in zip(self.parts, self.parts[1:]))

    def without_zero(self) -> "Partition":
        return Partition(tuple(p for p in self.parts if p != 0))

    def with_zero(self) -> "Partition":
        return Partition(self.parts + (0,))

    def without_part(self, value: int) -> "Partition":
        parts = list(self.parts)
        parts.remove(value)
        return Partition(tuple(parts))

    def with_part(self, value: int) -> "Partition":
        return Partition(self.parts + (value,))

    def to_list(self) -> List[int]:
        return list(self.parts)


def make_partition(parts: Iterable[int]) -> Partition:
    return Partition(tuple(parts))


def parse_partition(text: str) -> Partition:
    """Разбор записи вида "20,16,11,5,3,0" (пустая строка или "()" означает пустое разбиение)"""
    text = text.strip()
    if text in ("", "()"):
        return Partition()
    parts = []
    for x in text.replace("+", ",").split(","):
        if not x.strip():
            continue
        try:
            parts.append(int(x))
        except ValueError:
            raise NonIntegralPart(f"Часть {x.strip()!r} не является целым числом") from None
    return make_partition(parts)


def stats(partition: Partition) -> PartitionStats:
    return PartitionStats(
        n=partition.size,
        length=len(partition),
        length_even=partition.length_even,
        length_odd=partition.length_odd,
        smallest=partition.smallest,
        second_smallest=partition.second_smallest,
    )


def add_partitions(left: Partition, right: Partition) -> Partition:
    size = max(len(left), len(right))
    summed = [left.part(i) + right.part(i) for i in range(1, size + 1)]
    return Partition(tuple(summed))


def conjugate(partition: Partition) -> Partition:
    if partition.has_zero:
        raise ZeroPartPresent(f"Сопряжение не определено для {partition}")
    if not partition.parts:
        return Partition()
    columns = [
        sum(1 for p in partition.parts if p >= j)
        for j in range(1, partition.parts[0] + 1)
    ]
    return Partition(tuple(columns))


def triangular(k: int) -> Partition:
    """T_k = (2k-1, 2k-3, ..., 3, 1)"""
    return Partition(tuple(range(2 * k - 1, 0, -2)))


def square_root(n: int) -> Optional[int]:
    """k, если n = k^2, иначе None"""
    if n < 0:
        return None
    k = math.isqrt(n)
    return k if k * k == n else None
