from typing import List, Optional
import logging

from errors import InvariantViolation, NotInFamily
from involutions.base_involution import BaseInvolution
from involutions.models import InvolutionOutcome, PairState
from involutions.phi import PhiInvolution
from partitions.diagram import modular_conjugate
from partitions.families import FamilySpec, enumerate_family, is_member
from partitions.partition import Partition, add_partitions

logger = logging.getLogger(__name__)


def extract(partition: Partition, m: int = 1) -> PairState:
    """Шаг 1: из каждого зазора pi_t - pi_{t+1} = 2m*i + r (1 <= r <= 2m) извлекаются i частей 2m*t"""
    family = FamilySpec.pdo(m)
    if not is_member(partition, family):
        raise NotInFamily(partition.parts, family.name)
    modulus = 2 * m
    parts = list(partition.parts)
    sigma = []
    for t in range(len(parts), 0, -1):
        below = parts[t] if t < len(parts) else 0
        i = (parts[t - 1] - below - 1) // modulus
        if i == 0:
            continue
        for j in range(t):
            parts[j] -= modulus * i
        sigma.extend([modulus * t] * i)
    state = PairState(Partition(tuple(parts)), Partition(tuple(sigma)), m)
    try:
        return state.validate()
    except NotInFamily as e:
        raise InvariantViolation(f"Извлечение из {partition} дало {state}: {e}") from e


def assemble(state: PairState) -> Partition:
    """Шаг 3: lambda = pi + c_2m(sigma)"""
    return add_partitions(state.pi, modular_conjugate(state.sigma, state.m))


class FranklinInvolution(BaseInvolution):
    """Инволюция типа Франклина на Pdo(m): извлечение, phi, обратная сборка"""

    def __init__(self, m: int = 1):
        super().__init__(name=f"Psi_{m}" if m > 1 else "Psi", m=m)
        self.phi = PhiInvolution(m)

    def domain(self) -> FamilySpec:
        return FamilySpec.pdo(self.m)

    def expected_fixed(self, n: int) -> List[Partition]:
        return enumerate_family(FamilySpec.b(self.m), n)

    def law_violation(self, partition: Partition, image: Partition) -> Optional[str]:
        if abs(len(image) - len(partition)) != 1 or abs(image.length_even - partition.length_even) != 1:
            return f"{partition} -> {image}: l и l_e должны измениться на 1"
        if image.length_odd != partition.length_odd:
            return f"{partition} -> {image}: l_o изменилось"
        return None

    def _apply(self, partition: Partition) -> InvolutionOutcome:
        state = extract(partition, self.m)
        inner = self.phi.apply(state)
        trace = {"input": partition.to_list(), "extract": state.to_dict(), "phi_case": inner.case}
        if inner.is_fixed:
            trace["image"] = partition.to_list()
            return InvolutionOutcome.fixed_point(partition, trace)
        image = assemble(inner.value)
        trace["image"] = image.to_list()
        return InvolutionOutcome.image(partition, image, inner.case, trace)


def psi_do(partition: Partition, m: int = 1) -> InvolutionOutcome:
    return FranklinInvolution(m).apply(partition)
