"""Exception hierarchy shared by every module of the package."""


class AlgebraError(ValueError):
    """Base class for all input and structure errors raised by semiact."""


class ShapeMismatch(AlgebraError):
    pass


class IndexOutOfRange(AlgebraError):
    pass


class NonAssociative(AlgebraError):
    def __init__(self, x: int, y: int, z: int):
        self.x, self.y, self.z = x, y, z
        super().__init__(f"(x*y)*z != x*(y*z) for x={x}, y={y}, z={z}")


class NotAGroup(AlgebraError):
    pass


class IrregularSandwich(AlgebraError):
    pass


class ZeroEntryWithoutZeroFlag(AlgebraError):
    pass


class UnknownGroup(AlgebraError):
    pass


class IncompatibleAction(AlgebraError):
    def __init__(self, a: int, s: int, t: int):
        self.a, self.s, self.t = a, s, t
        super().__init__(f"a(st) != (as)t for a={a}, s={s}, t={t}")


class SizeLimit(AlgebraError):
    pass


class NotASubact(AlgebraError):
    pass


class ActMismatch(AlgebraError):
    pass


class PreconditionViolated(AlgebraError):
    pass


class NotARectangularBand(AlgebraError):
    pass


class BudgetExceeded(AlgebraError):
    def __init__(self, raw_count: int, budget: int):
        self.raw_count, self.budget = raw_count, budget
        super().__init__(f"raw search space {raw_count} exceeds budget {budget}")


class DisagreementFound(AlgebraError):
    def __init__(self, message: str, payload: dict):
        self.payload = payload
        super().__init__(message)
