from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Optional, Tuple
import logging

from config import config
from database.json_db import ReportDatabase
from database.models import ReportEntry, TheoremReport
from errors import UnknownTheorem
from involutions.base_involution import BaseInvolution
from involutions.franklin import FranklinInvolution
from involutions.psi_q import PsiQInvolution
from partitions.families import FamilySpec, enumerate_family
from partitions.partition import square_root
from weights.apoly import APolynomial
from weights.weight import WeightKind, rhs_square, weight, weighted_sum

logger = logging.getLogger(__name__)

THEOREM_IDS = ("T3.1", "T3.2", "T4.1", "T5.1", "T6.1", "AndrewsProblem", "T8.2")

# теорема -> (семейство, вес) для сравнения с (-a)^k
_SQUARE_THEOREMS = {
    "T3.1": (FamilySpec.pdo(1), WeightKind.SIGN_ONLY),
    "T4.1": (FamilySpec.pdo(1), WeightKind.GAP),
    "T5.1": (FamilySpec.pdo(1), WeightKind.ODD),
    "T6.1": (FamilySpec.q(), WeightKind.EVEN_SMALLEST),
}


def parity_counts(family: FamilySpec, n: int, statistic: str) -> Tuple[int, int]:
    """(число с чётной статистикой, число с нечётной); statistic: "length" или "length_even" """
    even = odd = 0
    for partition in enumerate_family(family, n):
        value = len(partition) if statistic == "length" else partition.length_even
        if value % 2 == 0:
            even += 1
        else:
            odd += 1
    return even, odd


def theorem_entry(theorem: str, n: int, m: int = 1) -> ReportEntry:
    """Одна строка отчёта: левая и правая части при данном n"""
    if theorem in _SQUARE_THEOREMS:
        family, kind = _SQUARE_THEOREMS[theorem]
        lhs, rhs = weighted_sum(family, n, kind), rhs_square(n, kind)
        return ReportEntry(n=n, lhs=str(lhs), rhs=str(rhs), ok=lhs == rhs)

    if theorem == "T3.2":
        r_e, r_o = parity_counts(FamilySpec.pdo(1), n, "length")
        rhs = rhs_square(n, WeightKind.SIGN_ONLY)
        lhs = APolynomial.constant(r_e - r_o)
        return ReportEntry(n=n, lhs=str(lhs), rhs=str(rhs), ok=lhs == rhs, extra={"R_e": r_e, "R_o": r_o})

    if theorem == "AndrewsProblem":
        q_e, q_o = parity_counts(FamilySpec.q(), n, "length_even")
        rhs = APolynomial.constant(1 if square_root(n) is not None else 0)
        lhs = APolynomial.constant(q_o - q_e)
        return ReportEntry(n=n, lhs=str(lhs), rhs=str(rhs), ok=lhs == rhs, extra={"q_o": q_o, "q_e": q_e})

    if theorem == "T8.2":
        lhs = weighted_sum(FamilySpec.a(m), n, WeightKind.A1)
        rhs = weighted_sum(FamilySpec.b(m), n, WeightKind.A2)
        return ReportEntry(n=n, lhs=str(lhs), rhs=str(rhs), ok=lhs == rhs)

    raise UnknownTheorem(f"Неизвестная теорема: {theorem}")


def _entry_job(args: Tuple[str, int, int]) -> ReportEntry:
    return theorem_entry(*args)


class TheoremVerifier:
    def __init__(self, db: Optional[ReportDatabase] = None, workers: int = None):
        self.db = db
        self.workers = workers or config.VERIFY_WORKERS

    def verify(self, theorem: str, n_max: int, m: int = 1) -> TheoremReport:
        """Проверяет теорему для n = 1..n_max перебором"""
        if theorem not in THEOREM_IDS:
            raise UnknownTheorem(f"Неизвестная теорема: {theorem}")
        logger.info(f"Проверка {theorem} до n={n_max}" + (f", m={m}" if theorem == "T8.2" else ""))

        jobs = [(theorem, n, m) for n in range(1, n_max + 1)]
        if self.workers > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                entries = list(pool.map(_entry_job, jobs))
        else:
            entries = [_entry_job(job) for job in jobs]

        report = TheoremReport(
            theorem=theorem,
            n_max=n_max,
            entries=entries,
            m=m if theorem == "T8.2" else None,
        )
        for entry in report.failures():
            logger.warning(f"{theorem}: расхождение при n={entry.n}: {entry.lhs} != {entry.rhs}")
        logger.info(f"{theorem}: {'OK' if report.passed else 'FAIL'}")
        return report

    def verify_and_save(self, theorem: str, n_max: int, m: int = 1) -> TheoremReport:
        report = self.verify(theorem, n_max, m)
        if self.db is not None:
            self.db.add_theorem_report(report.to_dict())
        return report


def involution_for(kind: WeightKind, m: int = 1) -> BaseInvolution:
    """Инволюция, сокращающая взвешенную сумму данного веса"""
    kind = WeightKind(kind)
    if kind in (WeightKind.GAP, WeightKind.ODD, WeightKind.SIGN_ONLY):
        return FranklinInvolution(m)
    if kind in (WeightKind.EVEN_SMALLEST, WeightKind.A1):
        return PsiQInvolution(m)
    raise UnknownTheorem(f"Для веса {kind.value} нет инволюции")


def involution_balance(kind: WeightKind, n: int, m: int = 1) -> Dict:
    """Сумма весов по неподвижным точкам и проверка, что каждая пара орбиты сокращается"""
    involution = involution_for(kind, m)
    pairs, fixed = involution.orbits(n)
    cancelling = all(
        weight(left, kind) + weight(right, kind) == APolynomial.zero() for left, right in pairs
    )
    fixed_sum = APolynomial.zero()
    for partition in fixed:
        fixed_sum = fixed_sum + weight(partition, kind)
    return {"pairs": len(pairs), "fixed": fixed, "fixed_sum": fixed_sum, "cancelling": cancelling}
