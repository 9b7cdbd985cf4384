from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from errors import InvariantViolation, NotInFamily
from partitions.families import FamilySpec, is_member
from partitions.partition import Partition

CASE_TAGS = ("A1", "A2", "B1", "B2", "psi-i", "psi-ii", "psi-iii")


@dataclass(frozen=True)
class PairState:
    """Пара (pi, sigma) из Dk(k,m) x Ek(k,m), k = число частей pi"""
    pi: Partition
    sigma: Partition
    m: int = 1

    @property
    def k(self) -> int:
        return len(self.pi)

    @property
    def sigma_top(self) -> int:
        return self.sigma.part(1)

    @property
    def size(self) -> int:
        return self.pi.size + self.sigma.size

    def validate(self) -> "PairState":
        dk = FamilySpec.dk(self.k, self.m)
        if not is_member(self.pi, dk):
            raise NotInFamily(self.pi.parts, dk.name)
        ek = FamilySpec.ek(self.k, self.m)
        if not is_member(self.sigma, ek):
            raise NotInFamily(self.sigma.parts, ek.name)
        return self

    def to_dict(self) -> Dict:
        return {"pi": self.pi.to_list(), "sigma": self.sigma.to_list()}

    def __str__(self) -> str:
        return f"({self.pi}, {self.sigma})"


@dataclass(frozen=True)
class InvolutionOutcome:
    """Образ с меткой сработавшего случая либо неподвижная точка"""
    source: Any
    value: Any
    case: Optional[str] = None
    trace: Dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.case is not None and self.case not in CASE_TAGS:
            raise InvariantViolation(f"Неизвестная метка случая: {self.case}")

    @property
    def is_fixed(self) -> bool:
        return self.case is None

    @classmethod
    def image(cls, source, value, case: str, trace: Optional[Dict] = None) -> "InvolutionOutcome":
        return cls(source=source, value=value, case=case, trace=trace or {})

    @classmethod
    def fixed_point(cls, source, trace: Optional[Dict] = None) -> "InvolutionOutcome":
        return cls(source=source, value=source, case=None, trace=trace or {})
