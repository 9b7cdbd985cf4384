from typing import Optional
import logging

from errors import DivergentAtQ0
from qseries.series import TruncatedSeries

logger = logging.getLogger(__name__)


def apply_pochhammer(
    series: TruncatedSeries,
    a_exp: int,
    sign: int,
    q_shift: int,
    step: int,
    terms: Optional[int] = None,
    divide: bool = False,
) -> TruncatedSeries:
    """
    Умножает (или делит) series на (sign * a^a_exp q^q_shift; q^step)_terms,
    то есть на произведение множителей (1 - sign * a^a_exp q^{q_shift + j*step}).
    terms=None: бесконечное произведение; множители выше степени N отбрасываются.
    """
    if step < 1:
        raise DivergentAtQ0(f"Шаг произведения должен быть >= 1, получено {step}")
    if terms is None and q_shift < 1:
        raise DivergentAtQ0(f"Бесконечное произведение с множителем при q^{q_shift}")
    count = 0
    exponent = q_shift
    while (terms is None or count < terms) and exponent <= series.N:
        if divide:
            series = series.div_binomial(-sign, a_exp, exponent)
        else:
            series = series.mul_binomial(-sign, a_exp, exponent)
        count += 1
        exponent += step
    return series


def pochhammer(
    a_exp: int,
    sign: int,
    q_shift: int,
    step: int,
    terms: Optional[int],
    N: int,
) -> TruncatedSeries:
    """(sign * a^a_exp q^q_shift; q^step)_terms до степени N"""
    return apply_pochhammer(TruncatedSeries.one(N), a_exp, sign, q_shift, step, terms)
