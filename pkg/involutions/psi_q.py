from typing import List
import logging

from involutions.base_involution import BaseInvolution
from involutions.franklin import FranklinInvolution
from involutions.models import InvolutionOutcome
from partitions.families import FamilySpec, enumerate_family
from partitions.partition import Partition

logger = logging.getLogger(__name__)


class PsiQInvolution(BaseInvolution):
    """Инволюция на Q (m=1) и A(m): часть 0 добавляется, удаляется или переносится через Psi_m"""

    def __init__(self, m: int = 1):
        super().__init__(name=f"psi_{m}" if m > 1 else "psi", m=m)
        self.franklin = FranklinInvolution(m)

    def domain(self) -> FamilySpec:
        return FamilySpec.q() if self.m == 1 else FamilySpec.a(self.m)

    def expected_fixed(self, n: int) -> List[Partition]:
        return [mu.with_zero() for mu in enumerate_family(FamilySpec.b(self.m), n)]

    def _apply(self, partition: Partition) -> InvolutionOutcome:
        trace = {"input": partition.to_list()}
        if partition.smallest != 0:
            image = partition.with_zero()
            trace.update(case="psi-ii", image=image.to_list())
            return InvolutionOutcome.image(partition, image, "psi-ii", trace)

        rest = partition.without_zero()
        second = partition.second_smallest
        if second is not None and second % 2 == 0:
            trace.update(case="psi-i", image=rest.to_list())
            return InvolutionOutcome.image(partition, rest, "psi-i", trace)

        # ss нечётно или отсутствует: Psi_m на разбиении без нуля
        inner = self.franklin.apply(rest)
        trace["franklin"] = inner.trace
        if inner.is_fixed:
            trace.update(case=None, image=partition.to_list())
            return InvolutionOutcome.fixed_point(partition, trace)
        image = inner.value.with_zero()
        trace.update(case="psi-iii", image=image.to_list())
        return InvolutionOutcome.image(partition, image, "psi-iii", trace)


def psi_q(partition: Partition, m: int = 1) -> InvolutionOutcome:
    return PsiQInvolution(m).apply(partition)
