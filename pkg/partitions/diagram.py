from dataclasses import dataclass, field
from typing import List, Optional
import logging

from errors import (
    InvalidHookRow,
    InvariantViolation,
    NoValidPosition,
    NotInFamily,
    NotMultipleOfModulus,
    ZeroPartPresent,
)
from partitions.families import FamilySpec, is_member
from partitions.partition import Partition

logger = logging.getLogger(__name__)

CELL_SIZE = 24


@dataclass(frozen=True)
class ModularDiagram:
    """2m-модулярная диаграмма: в каждой строке клетки 2m и последняя клетка-остаток из [1, 2m]"""
    source: Partition
    modulus: int
    rows: List[List[int]] = field(default_factory=list)

    def to_text(self) -> str:
        return "\n".join(" ".join(str(cell) for cell in row) for row in self.rows)

    def to_svg(self) -> str:
        width = max((len(row) for row in self.rows), default=0) * CELL_SIZE + 2
        height = len(self.rows) * CELL_SIZE + 2
        lines = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">'
        ]
        for r, row in enumerate(self.rows):
            for c, cell in enumerate(row):
                x, y = c * CELL_SIZE + 1, r * CELL_SIZE + 1
                lines.append(
                    f'<rect x="{x}" y="{y}" width="{CELL_SIZE}" height="{CELL_SIZE}" '
                    f'fill="white" stroke="black"/>'
                )
                lines.append(
                    f'<text x="{x + CELL_SIZE // 2}" y="{y + CELL_SIZE * 2 // 3}" '
                    f'text-anchor="middle" font-size="12">{cell}</text>'
                )
        lines.append("</svg>")
        return "\n".join(lines)


@dataclass(frozen=True)
class ModularHook:
    row: int
    length: int
    height: int
    deletion_valid: bool

    def to_dict(self) -> dict:
        return {
            "row": self.row,
            "length": self.length,
            "height": self.height,
            "deletion_valid": self.deletion_valid,
        }


def build_diagram(partition: Partition, m: int = 1) -> ModularDiagram:
    if partition.has_zero:
        raise ZeroPartPresent(f"Диаграмма не строится для разбиения с нулём: {partition}")
    modulus = 2 * m
    rows = []
    for part in partition:
        residue = (part - 1) % modulus + 1
        rows.append([modulus] * ((part - residue) // modulus) + [residue])
    return ModularDiagram(source=partition, modulus=modulus, rows=rows)


def hook_length(pi: Partition, row: int, m: int = 1) -> int:
    """|H_i| = pi_i + 2m(i-1); клетки первого столбца выше строки обязаны быть равны 2m"""
    modulus = 2 * m
    if any(pi.part(j) <= modulus for j in range(1, row)):
        raise InvariantViolation(f"В первом столбце над строкой {row} есть клетка меньше {modulus}: {pi}")
    return pi.part(row) + modulus * (row - 1)


def delete_leg_hook(pi: Partition, row: int, m: int = 1) -> Partition:
    modulus = 2 * m
    if row < 2 or row > len(pi) or pi.part(row) % 2 != 0:
        raise InvalidHookRow(f"Строка {row} разбиения {pi} не задаёт модулярный крюк")
    # строки над крюком после сдвига остаются выше строки под ним
    if pi.part(row - 1) - modulus <= pi.part(row + 1):
        raise InvalidHookRow(f"Удаление крюка из строки {row} нарушает порядок строк {pi}")
    parts = [p - modulus for p in pi.parts[:row - 1]] + list(pi.parts[row:])
    return Partition(tuple(parts))


def _insertion_index(pi: Partition, h: int, m: int) -> Optional[int]:
    modulus = 2 * m
    best = None
    for i in range(1, len(pi) + 1):
        if h - modulus * i >= pi.part(i):
            best = i
    return best


def insertion_row(pi: Partition, h: int, m: int = 1) -> int:
    """Номер строки, в которую попадёт вставленный крюк длины h"""
    modulus = 2 * m
    if h <= 0 or h % modulus != 0:
        raise NotMultipleOfModulus(f"Длина крюка {h} не кратна {modulus}")
    i = _insertion_index(pi, h, m)
    # новая часть чётная и не может стать наименьшей
    if i is None or i >= len(pi) or h - modulus * i <= pi.part(i + 1):
        raise NoValidPosition(f"Крюк длины {h} некуда вставить в {pi}")
    return i + 1


def insert_leg_hook(pi: Partition, h: int, m: int = 1) -> Partition:
    modulus = 2 * m
    row = insertion_row(pi, h, m)
    i = row - 1
    parts = [p + modulus for p in pi.parts[:i]] + [h - modulus * i] + list(pi.parts[i:])
    return Partition(tuple(parts))


def leg_hooks(pi: Partition, k: int, m: int = 1) -> List[ModularHook]:
    if not is_member(pi, FamilySpec.dk(k, m)):
        raise NotInFamily(pi, FamilySpec.dk(k, m).name)
    smaller = FamilySpec.dk(k - 1, m) if k >= 1 else None
    hooks = []
    for row in range(2, len(pi) + 1):
        if pi.part(row) % 2 != 0:
            continue
        length = hook_length(pi, row, m)
        try:
            deleted = delete_leg_hook(pi, row, m)
        except InvalidHookRow:
            deleted = None
        valid = deleted is not None and smaller is not None and is_member(deleted, smaller)
        hooks.append(ModularHook(row=row, length=length, height=row, deletion_valid=valid))
    if logger.isEnabledFor(logging.DEBUG):
        logger.debug(f"Крюки {pi} (m={m}): {[h.row for h in hooks]}")
    return hooks


def modular_conjugate(sigma: Partition, m: int = 1) -> Partition:
    modulus = 2 * m
    if sigma.has_zero:
        raise ZeroPartPresent(f"Модулярное сопряжение не определено для {sigma}")
    if any(p % modulus != 0 for p in sigma):
        raise NotMultipleOfModulus(f"Не все части {sigma} кратны {modulus}")
    if not sigma.parts:
        return Partition()
    columns = sigma.parts[0] // modulus
    return Partition(tuple(
        modulus * sum(1 for p in sigma if p >= modulus * j)
        for j in range(1, columns + 1)
    ))
