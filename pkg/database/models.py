from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class ReportEntry:
    n: int
    lhs: str
    rhs: str
    ok: bool
    extra: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict:
        return {"n": self.n, "lhs": self.lhs, "rhs": self.rhs, "ok": self.ok, **self.extra}


@dataclass
class TheoremReport:
    theorem: str
    n_max: int
    entries: List[ReportEntry] = field(default_factory=list)
    m: Optional[int] = None

    @property
    def passed(self) -> bool:
        return all(entry.ok for entry in self.entries)

    def failures(self) -> List[ReportEntry]:
        return [entry for entry in self.entries if not entry.ok]

    def to_dict(self) -> Dict:
        data = {"theorem": self.theorem, "n_max": self.n_max}
        if self.m is not None:
            data["m"] = self.m
        data["entries"] = [entry.to_dict() for entry in self.entries]
        data["pass"] = self.passed
        return data


@dataclass
class SeriesCheck:
    identity: str
    N: int
    equal: bool
    m: Optional[int] = None
    first_discrepancy: Optional[Dict[str, Any]] = None

    def to_dict(self) -> Dict:
        data = {"identity": self.identity, "N": self.N}
        if self.m is not None:
            data["m"] = self.m
        data["equal"] = self.equal
        data["first_discrepancy"] = self.first_discrepancy
        return data
