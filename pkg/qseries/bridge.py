from typing import Dict, List
import logging

from involutions.phi import PhiInvolution
from partitions.families import FamilySpec, enumerate_family, enumerate_pairs
from qseries.identities import build_identity_side, dk_series, ek_series
from qseries.series import TruncatedSeries
from weights.apoly import APolynomial
from weights.weight import WeightKind, pair_weight, weighted_sum

logger = logging.getLogger(__name__)


def series_from_enumeration(family: FamilySpec, kind: WeightKind, N: int, start: int = 0) -> TruncatedSeries:
    """Коэффициент при q^n: взвешенная сумма по семейству веса n (для n >= start)"""
    coefficients = {n: weighted_sum(family, n, kind) for n in range(start, N + 1)}
    return TruncatedSeries.from_coefficients(N, coefficients)


def count_series(family: FamilySpec, N: int) -> TruncatedSeries:
    coefficients = {n: APolynomial.constant(len(enumerate_family(family, n))) for n in range(N + 1)}
    return TruncatedSeries.from_coefficients(N, coefficients)


def series_from_pairs(N: int, m: int = 1) -> TruncatedSeries:
    """Сумма (-1)^{l(pi)} a^{l(pi)+l(sigma)} по парам Dk x Ek веса n"""
    coefficients = {}
    for n in range(N + 1):
        total = APolynomial.zero()
        for pi, sigma in enumerate_pairs(n, m):
            total = total + pair_weight(pi, sigma)
        coefficients[n] = total
    return TruncatedSeries.from_coefficients(N, coefficients)


def pair_fixed_point_sum(n: int, m: int = 1) -> APolynomial:
    """Сумма весов неподвижных точек phi среди пар веса n"""
    _, fixed = PhiInvolution(m).orbits(n)
    total = APolynomial.zero()
    for state in fixed:
        total = total + pair_weight(state.pi, state.sigma)
    return total


def bridge_pairs(m_values: List[int] = None) -> List[Dict]:
    """
    Пары (комбинаторная сторона, аналитическая сторона) для сквозной проверки.
    Каждый элемент: name, m, enumerate(N), analytic(N).
    """
    ms = m_values or [1, 2, 3]
    pairs = [
        {
            "name": "Pdo/Odd~AlladiAlt",
            "m": 1,
            "enumerate": lambda N: series_from_enumeration(FamilySpec.pdo(1), WeightKind.ODD, N, start=1),
            "analytic": lambda N: build_identity_side("AlladiAlt", "lhs", 1, N),
        },
        {
            "name": "Q/EvenSmallest~AndrewsTheta",
            "m": 1,
            "enumerate": lambda N: series_from_enumeration(FamilySpec.q(), WeightKind.EVEN_SMALLEST, N),
            "analytic": lambda N: build_identity_side("AndrewsTheta", "lhs", 1, N),
        },
        {
            "name": "Pairs~Ramanujan",
            "m": 1,
            "enumerate": lambda N: series_from_pairs(N, 1),
            "analytic": lambda N: build_identity_side("Ramanujan", "lhs", 1, N),
        },
    ]
    for m in ms:
        pairs.extend([
            {
                "name": f"B({m})/A2~General",
                "m": m,
                "enumerate": lambda N, m=m: series_from_enumeration(FamilySpec.b(m), WeightKind.A2, N),
                "analytic": lambda N, m=m: build_identity_side("General", "rhs", m, N),
            },
            {
                "name": f"A({m})/A1~General",
                "m": m,
                "enumerate": lambda N, m=m: series_from_enumeration(FamilySpec.a(m), WeightKind.A1, N),
                "analytic": lambda N, m=m: build_identity_side("General", "lhs", m, N),
            },
            {
                "name": f"A({m})~AmCount",
                "m": m,
                "enumerate": lambda N, m=m: count_series(FamilySpec.a(m), N),
                "analytic": lambda N, m=m: build_identity_side("AmCount", "lhs", m, N),
            },
            {
                "name": f"B({m})~BmCount",
                "m": m,
                "enumerate": lambda N, m=m: count_series(FamilySpec.b(m), N),
                "analytic": lambda N, m=m: build_identity_side("BmCount", "lhs", m, N),
            },
        ])
    for k in range(0, 5):
        pairs.extend([
            {
                "name": f"Dk({k},1)",
                "m": 1,
                "enumerate": lambda N, k=k: count_series(FamilySpec.dk(k, 1), N),
                "analytic": lambda N, k=k: dk_series(k, N),
            },
            {
                "name": f"Ek({k},1)",
                "m": 1,
                "enumerate": lambda N, k=k: count_series(FamilySpec.ek(k, 1), N),
                "analytic": lambda N, k=k: ek_series(k, N),
            },
        ])
    return pairs
