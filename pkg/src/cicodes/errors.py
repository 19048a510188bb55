"""Exception hierarchy for the cicodes package."""


class CICodesError(Exception):
    """Base class for all errors raised by this package."""


class NotPrimeError(CICodesError):
    pass


class ReducibleModulusError(CICodesError):
    pass


class FieldTooLargeError(CICodesError):
    pass


class FieldMismatchError(CICodesError):
    pass


class DivisionByZeroError(CICodesError, ZeroDivisionError):
    pass


class PolySyntaxError(CICodesError):
    pass


class UnknownVariableError(PolySyntaxError):
    pass


class NonHomogeneousError(CICodesError):
    pass


class SpaceTooLargeError(CICodesError):
    pass


class WrongCountError(CICodesError):
    pass


class NonSplitError(CICodesError):
    """The hypersurfaces do not cut out a split reduced complete intersection."""


class NotASubsetError(CICodesError):
    pass


class NoNormalizerFoundError(CICodesError):
    pass


class NormalizerVanishesError(CICodesError):
    pass


class CapExceededError(CICodesError):
    def __init__(self, required, cap):
        super().__init__(f"enumeration needs {required} words, cap is {cap}")
        self.required = required
        self.cap = cap


class DegreeOutOfRangeError(CICodesError):
    pass
