from typing import Callable, Dict
import logging

from errors import UnknownIdentity
from qseries.pochhammer import apply_pochhammer, pochhammer
from qseries.series import TruncatedSeries

logger = logging.getLogger(__name__)


def theta_side(N: int, m: int = 1, with_a: bool = True) -> TruncatedSeries:
    """1 + sum_k (-a)^k q^{k^2} prod_{j<=k} (1 + q^{2j} + ... + q^{2(m-1)j}); без a все знаки +"""
    result = TruncatedSeries.one(N)
    product = TruncatedSeries.one(N)
    k = 1
    while k * k <= N:
        if m > 1:
            product = sum((product.shift(2 * k * t) for t in range(1, m)), product)
        if with_a:
            result = result + product.shift(k * k, k, -1 if k % 2 else 1)
        else:
            result = result + product.shift(k * k)
        k += 1
    return result


def ramanujan_lhs(N: int) -> TruncatedSeries:
    """1 + sum_k (-q;q)_{k-1} (-a)^k q^{k(k+1)/2} / (aq^2;q^2)_k"""
    result = TruncatedSeries.one(N)
    ratio = TruncatedSeries.one(N).div_binomial(-1, 1, 2)
    k = 1
    while k * (k + 1) // 2 <= N:
        result = result + ratio.shift(k * (k + 1) // 2, k, -1 if k % 2 else 1)
        ratio = ratio.mul_binomial(1, 0, k).div_binomial(-1, 1, 2 * k + 2)
        k += 1
    return result


def modular_product_sum(N: int, m: int, even_coeff: int, odd_coeff: int, odd_a_exp: int) -> TruncatedSeries:
    """
    sum_n q^{2mn} prod_{j>=1} (1 + even_coeff q^{2mn+2mj}) prod_{j>=0} (1 + odd_coeff a^odd_a_exp q^{2mn+1+2j}).
    Хвостовое произведение пересчитывается сверху вниз по n.
    """
    modulus = 2 * m
    top = N // modulus
    tail = TruncatedSeries.one(N)
    tail = apply_pochhammer(tail, 0, -even_coeff, modulus * (top + 1), modulus)
    tail = apply_pochhammer(tail, odd_a_exp, -odd_coeff, modulus * top + 1, 2)
    result = TruncatedSeries.zero(N)
    for n in range(top, -1, -1):
        result = result + tail.shift(modulus * n)
        if n == 0:
            break
        tail = tail.mul_binomial(even_coeff, 0, modulus * n)
        for i in range(m):
            tail = tail.mul_binomial(odd_coeff, odd_a_exp, modulus * (n - 1) + 1 + 2 * i)
    return result


def alladi_lhs(N: int) -> TruncatedSeries:
    """sum_{n>=1} -a q^{2n-1} (q^{2n};q^2)_inf (aq^{2n+1};q^2)_inf"""
    top = (N + 1) // 2
    if top < 1:
        return TruncatedSeries.zero(N)
    tail = TruncatedSeries.one(N)
    tail = apply_pochhammer(tail, 0, 1, 2 * top, 2)
    tail = apply_pochhammer(tail, 1, 1, 2 * top + 1, 2)
    result = TruncatedSeries.zero(N)
    for n in range(top, 0, -1):
        result = result + tail.shift(2 * n - 1, 1, -1)
        tail = tail.mul_binomial(-1, 0, 2 * n - 2).mul_binomial(-1, 1, 2 * n - 1)
    return result


def dk_series(k: int, N: int) -> TruncatedSeries:
    """(-q;q)_{k-1} q^{k(k+1)/2}: производящая функция Dk(k,1)"""
    if k == 0:
        return TruncatedSeries.one(N)
    return pochhammer(0, -1, 1, 1, k - 1, N).shift(k * (k + 1) // 2)


def ek_series(k: int, N: int) -> TruncatedSeries:
    """1/(q^2;q^2)_k: производящая функция Ek(k,1)"""
    return apply_pochhammer(TruncatedSeries.one(N), 0, 1, 2, 2, k, divide=True)


Builder = Callable[[int, int], TruncatedSeries]

# id -> {"lhs": builder, "rhs": builder или None, "uses_m": bool}
IDENTITY_BUILDERS: Dict[str, Dict] = {
    "Ramanujan": {
        "lhs": lambda N, m: ramanujan_lhs(N),
        "rhs": lambda N, m: theta_side(N),
        "uses_m": False,
    },
    "AndrewsTheta": {
        "lhs": lambda N, m: modular_product_sum(N, 1, -1, -1, 1),
        "rhs": lambda N, m: theta_side(N),
        "uses_m": False,
    },
    "General": {
        "lhs": lambda N, m: modular_product_sum(N, m, -1, -1, 1),
        "rhs": lambda N, m: theta_side(N, m),
        "uses_m": True,
    },
    "AndrewsM": {
        "lhs": lambda N, m: modular_product_sum(N, m, -1, 1, 0),
        "rhs": lambda N, m: theta_side(N, m, with_a=False),
        "uses_m": True,
    },
    "AlladiAlt": {
        "lhs": lambda N, m: alladi_lhs(N),
        "rhs": lambda N, m: theta_side(N) - 1,
        "uses_m": False,
    },
    "AndrewsProblemSeries": {
        "lhs": lambda N, m: modular_product_sum(N, 1, -1, 1, 0),
        "rhs": lambda N, m: theta_side(N, 1, with_a=False),
        "uses_m": False,
    },
    "AmCount": {
        "lhs": lambda N, m: modular_product_sum(N, m, 1, 1, 0),
        "rhs": None,
        "uses_m": True,
    },
    "BmCount": {
        "lhs": lambda N, m: theta_side(N, m, with_a=False),
        "rhs": None,
        "uses_m": True,
    },
}

# тождества, у которых есть обе части
EQUATION_IDS = tuple(name for name, spec in IDENTITY_BUILDERS.items() if spec["rhs"] is not None)


def build_identity_side(identity: str, side: str, m: int = 1, N: int = 60) -> TruncatedSeries:
    if identity not in IDENTITY_BUILDERS:
        raise UnknownIdentity(f"Неизвестное тождество: {identity}")
    builder = IDENTITY_BUILDERS[identity].get(side.lower())
    if builder is None:
        raise UnknownIdentity(f"У тождества {identity} нет стороны {side}")
    if N < 0:
        raise UnknownIdentity(f"Порядок усечения должен быть >= 0: {N}")
    logger.debug(f"Строим {identity} [{side}] m={m} N={N}")
    return builder(N, m)
