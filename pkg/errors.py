class PartitionError(Exception):
    """Базовая ошибка библиотеки: неверные входные данные или нарушенный инвариант"""


class NegativePart(PartitionError):
    pass


class DuplicateZero(PartitionError):
    pass


class NonIntegralPart(PartitionError):
    pass


class ZeroPartPresent(PartitionError):
    pass


class NotInFamily(PartitionError):
    def __init__(self, parts, family):
        self.parts = tuple(parts)
        self.family = family
        super().__init__(f"{list(self.parts)} не принадлежит семейству {family}")


class UnsupportedFamily(PartitionError):
    pass


class InvalidHookRow(PartitionError):
    pass


class NoValidPosition(PartitionError):
    pass


class NotMultipleOfModulus(PartitionError):
    pass


class WrongFamilyForWeight(PartitionError):
    pass


class MismatchedTruncation(PartitionError):
    def __init__(self, left: int, right: int):
        self.left = left
        self.right = right
        super().__init__(f"Порядки усечения не совпадают: {left} != {right}")


class DivergentAtQ0(PartitionError):
    pass


class UnknownIdentity(PartitionError):
    pass


class UnknownTheorem(PartitionError):
    pass


class InvariantViolation(PartitionError):
    """Нарушен внутренний инвариант конструкции"""
