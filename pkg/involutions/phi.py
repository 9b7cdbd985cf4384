from typing import List, Optional
import logging

from errors import InvariantViolation, NotInFamily
from involutions.base_involution import BaseInvolution
from involutions.models import InvolutionOutcome, PairState
from partitions.diagram import delete_leg_hook, insert_leg_hook, leg_hooks
from partitions.families import FamilySpec, enumerate_family, enumerate_pairs
from partitions.partition import Partition

logger = logging.getLogger(__name__)


def largest_even_part(pi: Partition) -> int:
    return max((p for p in pi if p % 2 == 0), default=0)


class PhiInvolution(BaseInvolution):
    """Инволюция на парах Dk(k,m) x Ek(k,m): удаление/вставка модулярного крюка (A) или чётной части (B)"""

    def __init__(self, m: int = 1):
        super().__init__(name=f"phi_{m}" if m > 1 else "phi", m=m)

    def check(self, state: PairState):
        if state.m != self.m:
            raise NotInFamily(state.pi.parts, f"Dk(k,{self.m})")
        state.validate()

    def members(self, n: int) -> List[PairState]:
        return [PairState(pi, sigma, self.m) for pi, sigma in enumerate_pairs(n, self.m)]

    def expected_fixed(self, n: int) -> List[PairState]:
        return [PairState(mu, Partition(), self.m) for mu in enumerate_family(FamilySpec.b(self.m), n)]

    def law_violation(self, state: PairState, image: PairState) -> Optional[str]:
        if abs(image.pi.length_even - state.pi.length_even) != 1:
            return f"{state} -> {image}: l_e(pi) изменилось не на 1"
        if image.pi.length_odd != state.pi.length_odd:
            return f"{state} -> {image}: l_o(pi) изменилось"
        if image.k + len(image.sigma) != state.k + len(state.sigma):
            return f"{state} -> {image}: l(pi) + l(sigma) изменилось"
        return None

    def _result(self, state: PairState, pi: Partition, sigma: Partition, case: str) -> InvolutionOutcome:
        image = PairState(pi, sigma, self.m)
        try:
            image.validate()
        except NotInFamily as e:
            raise InvariantViolation(f"{self.name} [{case}] вывел {state} из области: {e}") from e
        return InvolutionOutcome.image(state, image, case)

    def _apply(self, state: PairState) -> InvolutionOutcome:
        modulus = 2 * self.m
        pi, sigma = state.pi, state.sigma
        sigma_top = state.sigma_top

        valid = [hook for hook in leg_hooks(pi, state.k, self.m) if hook.deletion_valid]
        if valid:
            hook = max(valid, key=lambda h: h.height)
            if hook.length >= sigma_top:
                return self._result(
                    state, delete_leg_hook(pi, hook.row, self.m), sigma.with_part(hook.length), "A1"
                )
            return self._result(
                state, insert_leg_hook(pi, sigma_top, self.m), sigma.without_part(sigma_top), "A2"
            )

        if pi.part(1) + modulus < sigma_top:
            return self._result(
                state, insert_leg_hook(pi, sigma_top, self.m), sigma.without_part(sigma_top), "A2"
            )

        even_top = largest_even_part(pi)
        if even_top > 0 and even_top >= sigma_top:
            return self._result(state, pi.without_part(even_top), sigma.with_part(even_top), "B1")
        if sigma.parts:
            # sigma_1 встаёт между двумя нечётными частями или наверх
            return self._result(state, pi.with_part(sigma_top), sigma.without_part(sigma_top), "B2")

        return InvolutionOutcome.fixed_point(state)


def phi(state: PairState) -> InvolutionOutcome:
    return PhiInvolution(state.m).apply(state)
