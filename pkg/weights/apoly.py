from typing import Dict, Iterator, Tuple, Union


class APolynomial:
    """Многочлен от формальной переменной a с целыми коэффициентами; нулевые коэффициенты не хранятся"""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Dict[int, int] = None):
        self.coeffs = {e: c for e, c in (coeffs or {}).items() if c != 0}

    @classmethod
    def zero(cls) -> "APolynomial":
        return cls()

    @classmethod
    def constant(cls, value: int) -> "APolynomial":
        return cls({0: value})

    @classmethod
    def monomial(cls, coefficient: int, exponent: int) -> "APolynomial":
        return cls({exponent: coefficient})

    @classmethod
    def signed_power(cls, k: int) -> "APolynomial":
        """(-a)^k"""
        return cls({k: -1 if k % 2 else 1})

    def _coerce(self, other: Union["APolynomial", int]) -> "APolynomial":
        return other if isinstance(other, APolynomial) else APolynomial.constant(other)

    def __add__(self, other) -> "APolynomial":
        other = self._coerce(other)
        result = dict(self.coeffs)
        for e, c in other.coeffs.items():
            result[e] = result.get(e, 0) + c
        return APolynomial(result)

    __radd__ = __add__

    def __neg__(self) -> "APolynomial":
        return APolynomial({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other) -> "APolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "APolynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "APolynomial":
        other = self._coerce(other)
        result: Dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                result[e1 + e2] = result.get(e1 + e2, 0) + c1 * c2
        return APolynomial(result)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = APolynomial.constant(other)
        if not isinstance(other, APolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(sorted(self.coeffs.items(), reverse=True))

    def __repr__(self) -> str:
        return f"APolynomial({self})"

    @property
    def degree(self) -> int:
        return max(self.coeffs, default=-1)

    def coefficient(self, exponent: int) -> int:
        return self.coeffs.get(exponent, 0)

    def substitute(self, value: int) -> int:
        return sum(c * value ** e for e, c in self.coeffs.items())

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        out = ""
        for e, c in self:
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if e == 0:
                body = str(magnitude)
            else:
                power = "a" if e == 1 else f"a^{e}"
                body = power if magnitude == 1 else f"{magnitude}{power}"
            if not out:
                out = body if sign == "+" else f"-{body}"
            else:
                out += f" {sign} {body}"
        return out
