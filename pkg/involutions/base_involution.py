from typing import Any, Dict, List, Optional, Tuple
import logging

from errors import NotInFamily
from involutions.models import InvolutionOutcome
from partitions.families import FamilySpec, enumerate_family, is_member
from partitions.partition import Partition

logger = logging.getLogger(__name__)


class BaseInvolution:
    def __init__(self, name: str, m: int = 1):
        self.name = name
        self.m = m

    def domain(self) -> FamilySpec:
        raise NotImplementedError

    def check(self, value: Any):
        family = self.domain()
        if not is_member(value, family):
            raise NotInFamily(value.parts, family.name)

    def _apply(self, value: Any) -> InvolutionOutcome:
        raise NotImplementedError

    def apply(self, value: Any) -> InvolutionOutcome:
        """Одно применение отображения с проверкой области определения"""
        self.check(value)
        outcome = self._apply(value)
        if logger.isEnabledFor(logging.DEBUG):
            if outcome.is_fixed:
                logger.debug(f"{self.name}: {value} неподвижна")
            else:
                logger.debug(f"{self.name}: {value} -> {outcome.value} [{outcome.case}]")
        return outcome

    def __call__(self, value: Any) -> InvolutionOutcome:
        return self.apply(value)

    def members(self, n: int) -> List[Partition]:
        return enumerate_family(self.domain(), n)

    def orbits(self, n: int) -> Tuple[List[Tuple[Any, Any]], List[Any]]:
        """Разбивает область веса n на пары (x, образ) и неподвижные точки"""
        pairs, fixed, seen = [], [], set()
        for value in self.members(n):
            if value in seen:
                continue
            outcome = self.apply(value)
            seen.add(value)
            if outcome.is_fixed:
                fixed.append(value)
            else:
                seen.add(outcome.value)
                pairs.append((value, outcome.value))
        return pairs, fixed

    def expected_fixed(self, n: int) -> List[Any]:
        raise NotImplementedError

    def law_violation(self, value: Any, image: Any) -> Optional[str]:
        """Закон на паре (x, образ); по умолчанию меняется чётность числа частей"""
        if (len(image) - len(value)) % 2 == 0:
            return f"{value} -> {image}: чётность числа частей не изменилась"
        return None

    def audit(self, n: int) -> Dict:
        """Проверка на всех объектах веса n: инволютивность, закон на парах, множество неподвижных точек"""
        problems = []
        members = self.members(n)
        # одно применение на объект; образ образа берётся из той же таблицы
        images = {value: self.apply(value) for value in members}
        fixed, checked = [], set()
        for value, outcome in images.items():
            if outcome.is_fixed:
                fixed.append(value)
                continue
            if value in checked:
                continue
            image = outcome.value
            back = images.get(image)
            if back is None:
                problems.append(f"{value} -> {image}: образ вне области веса {n}")
                continue
            if back.is_fixed or back.value != value:
                problems.append(f"{value} -> {image} -> {back.value}")
            checked.update((value, image))
            violation = self.law_violation(value, image)
            if violation:
                problems.append(violation)
        expected = self.expected_fixed(n)
        if set(fixed) != set(expected):
            problems.append(f"неподвижные точки {[str(x) for x in fixed]} вместо {[str(x) for x in expected]}")
        if problems:
            logger.warning(f"{self.name}, n={n}: {len(problems)} нарушений")
        return {"n": n, "members": len(members), "fixed": len(fixed), "ok": not problems, "problems": problems}
