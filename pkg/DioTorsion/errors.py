class DioTorsionError(Exception):
    """Base class of every domain error raised by DioTorsion"""

    @property
    def kind(self) -> str:
        return type(self).__name__


class DegenerateRadicand(DioTorsionError):
    pass


class DivByZero(DioTorsionError, ZeroDivisionError):
    pass


class FieldMismatch(DioTorsionError):
    pass


class FactoringBudgetExceeded(DioTorsionError):
    def __init__(self, cofactor: int, message: str = None):
        self.cofactor = cofactor
        super().__init__(message or f'factoring budget exhausted on cofactor {cofactor}')


class SingularCurve(DioTorsionError):
    pass


class PointNotOnCurve(DioTorsionError):
    pass


class NormalizeFirst(DioTorsionError):
    pass


class NotHalvable(DioTorsionError):
    pass


class NotTorsion(DioTorsionError):
    pass


class NeedFullTwoTorsion(DioTorsionError):
    pass


class InadmissibleGroup(DioTorsionError):
    pass


class NotTwistPoint(DioTorsionError):
    pass


class NotDiophantine(DioTorsionError):
    def __init__(self, pair, message: str = None):
        self.pair = tuple(pair)
        super().__init__(message or f'product of {self.pair[0]} and {self.pair[1]} plus one is not a square')


class DegenerateTriple(DioTorsionError):
    pass


class ExcludedParameter(DioTorsionError):
    pass


class DegenerateParameter(DioTorsionError):
    pass


class FieldCollapse(DioTorsionError):
    pass


class MapDegenerate(DioTorsionError):
    pass


class ConditionNotSquare(DioTorsionError):
    pass
