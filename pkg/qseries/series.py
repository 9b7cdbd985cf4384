from typing import Dict, Optional, Tuple
import logging

import numpy as np

from errors import InvariantViolation, MismatchedTruncation
from weights.apoly import APolynomial

logger = logging.getLogger(__name__)


class TruncatedSeries:
    """
    Степенной ряд по q до степени N включительно с коэффициентами-многочленами от a.
    Хранится как целочисленная (dtype=object) сетка grid[степень q, степень a] размера (N+1) x (N+1).
    """

    def __init__(self, N: int, grid: Optional[np.ndarray] = None):
        self.N = N
        if grid is None:
            grid = np.zeros((N + 1, N + 1), dtype=object)
        self.grid = grid

    # --- конструкторы ---

    @classmethod
    def zero(cls, N: int) -> "TruncatedSeries":
        return cls(N)

    @classmethod
    def one(cls, N: int) -> "TruncatedSeries":
        return cls.monomial(N, 1, 0, 0)

    @classmethod
    def monomial(cls, N: int, coefficient: int, a_exp: int, q_exp: int) -> "TruncatedSeries":
        series = cls(N)
        if q_exp <= N:
            series._check_a(a_exp)
            series.grid[q_exp, a_exp] = coefficient
        return series

    @classmethod
    def from_coefficients(cls, N: int, coefficients: Dict[int, APolynomial]) -> "TruncatedSeries":
        series = cls(N)
        for n, poly in coefficients.items():
            if n > N:
                continue
            for e, c in poly.coeffs.items():
                series._check_a(e)
                series.grid[n, e] = c
        return series

    def copy(self) -> "TruncatedSeries":
        return TruncatedSeries(self.N, self.grid.copy())

    def _check_a(self, a_exp: int):
        if a_exp > self.N:
            raise InvariantViolation(f"Степень a = {a_exp} больше порядка усечения {self.N}")

    def _same(self, other: "TruncatedSeries"):
        if self.N != other.N:
            raise MismatchedTruncation(self.N, other.N)

    # --- кольцевые операции ---

    def __add__(self, other):
        if isinstance(other, int):
            return self + TruncatedSeries.monomial(self.N, other, 0, 0)
        self._same(other)
        return TruncatedSeries(self.N, self.grid + other.grid)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.N, -self.grid)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries(self.N, self.grid * other)
        self._same(other)
        N = self.N
        result = np.zeros((N + 1, N + 1), dtype=object)
        for i, e in zip(*np.nonzero(self.grid)):
            block = other.grid[: N + 1 - i]
            if np.count_nonzero(block[:, N + 1 - e:]):
                raise InvariantViolation("Произведение выходит за границу степени a")
            result[i:, e:] += self.grid[i, e] * block[:, : N + 1 - e]
        return TruncatedSeries(N, result)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._same(other)
        return not np.count_nonzero(self.grid - other.grid)

    __hash__ = None

    # --- разреженные множители ---

    def shift(self, q_exp: int, a_exp: int = 0, coefficient: int = 1) -> "TruncatedSeries":
        """Умножение на coefficient * a^a_exp * q^q_exp"""
        N = self.N
        result = np.zeros((N + 1, N + 1), dtype=object)
        if q_exp > N:
            return TruncatedSeries(N, result)
        if a_exp and np.count_nonzero(self.grid[: N + 1 - q_exp, N + 1 - a_exp:]):
            raise InvariantViolation("Сдвиг выходит за границу степени a")
        result[q_exp:, a_exp:] = coefficient * self.grid[: N + 1 - q_exp, : N + 1 - a_exp]
        return TruncatedSeries(N, result)

    def mul_binomial(self, coefficient: int, a_exp: int, q_exp: int) -> "TruncatedSeries":
        """Умножение на (1 + coefficient * a^a_exp * q^q_exp)"""
        if q_exp > self.N:
            return self.copy()
        return self + self.shift(q_exp, a_exp, coefficient)

    def div_binomial(self, coefficient: int, a_exp: int, q_exp: int) -> "TruncatedSeries":
        """Деление на (1 + coefficient * a^a_exp * q^q_exp), q_exp >= 1: Y[n] = X[n] - c * a^e * Y[n - s]"""
        if q_exp < 1:
            raise InvariantViolation("Деление возможно только на биномы с q-степенью >= 1")
        N = self.N
        result = self.grid.copy()
        for n in range(q_exp, N + 1):
            previous = result[n - q_exp]
            if a_exp and np.count_nonzero(previous[N + 1 - a_exp:]):
                raise InvariantViolation("Деление выходит за границу степени a")
            result[n, a_exp:] -= coefficient * previous[: N + 1 - a_exp]
        return TruncatedSeries(N, result)

    # --- чтение ---

    def coefficient(self, n: int) -> APolynomial:
        row = self.grid[n]
        return APolynomial({int(e): int(row[e]) for e in np.nonzero(row)[0]})

    def substitute_a(self, value: int) -> "TruncatedSeries":
        powers = np.array([value ** e for e in range(self.N + 1)], dtype=object)
        result = np.zeros((self.N + 1, self.N + 1), dtype=object)
        result[:, 0] = self.grid.dot(powers)
        return TruncatedSeries(self.N, result)

    def to_text(self) -> str:
        return "\n".join(f"{n}: {self.coefficient(n)}" for n in range(self.N + 1))

    def to_dict(self) -> Dict[str, str]:
        return {str(n): str(self.coefficient(n)) for n in range(self.N + 1)}

    def __repr__(self) -> str:
        head = ", ".join(str(self.coefficient(n)) for n in range(min(self.N + 1, 5)))
        return f"TruncatedSeries(N={self.N}, [{head}, ...])"


def series_add(x: TruncatedSeries, y: TruncatedSeries) -> TruncatedSeries:
    return x + y


def series_mul(x: TruncatedSeries, y: TruncatedSeries) -> TruncatedSeries:
    return x * y


def series_neg(x: TruncatedSeries) -> TruncatedSeries:
    return -x


def series_equal(x: TruncatedSeries, y: TruncatedSeries) -> Tuple[bool, Optional[Dict]]:
    """Точное сравнение; при расхождении возвращает наименьшую степень и оба коэффициента"""
    if x.N != y.N:
        raise MismatchedTruncation(x.N, y.N)
    for n in range(x.N + 1):
        left, right = x.coefficient(n), y.coefficient(n)
        if left != right:
            return False, {"degree": n, "left": str(left), "right": str(right)}
    return True, None
