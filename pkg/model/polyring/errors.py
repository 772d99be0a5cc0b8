"""Errors raised by the polynomial layer and shared by the engine."""


class PolynomialSyntaxError(SyntaxError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownVariableError(ValueError):
    def __init__(self, name: str, position: int):
        super().__init__(f"Unknown variable '{name}' at position {position}")
        self.name = name
        self.position = position


class FieldCoefficientError(ValueError):
    """Coefficient not representable in the coefficient field."""


class NotHomogeneousError(ValueError):
    pass


class InexactDivisionError(ArithmeticError):
    pass


class InconsistencyError(ArithmeticError):
    """An internal identity that must hold exactly did not."""
