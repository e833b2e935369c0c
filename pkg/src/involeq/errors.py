"""Exception types raised across the package."""


class AlgebraError(ValueError):
    """Base class for invalid algebraic input."""


class NotAssociative(AlgebraError):
    def __init__(self, a, b, c):
        self.witness = (a, b, c)
        super().__init__(f"operation is not associative at (a, b, c) = {self.witness}")


class NotCommutative(AlgebraError):
    def __init__(self, a, b):
        self.witness = (a, b)
        super().__init__(f"operation is not commutative at (a, b) = {self.witness}")


class NotInvolution(AlgebraError):
    pass


class EvenCharacteristic(AlgebraError):
    pass


class EvenOrder(AlgebraError):
    pass


class CarrierMismatch(AlgebraError):
    pass


class SigmaTauMismatch(AlgebraError):
    pass


class NotASolution(AlgebraError):
    def __init__(self, violations):
        self.violations = list(violations)
        first = self.violations[0] if self.violations else None
        super().__init__(
            f"function does not solve the equation "
            f"({len(self.violations)} violating quadruples, first {first})"
        )


class BudgetExceeded(RuntimeError):
    """The search visited more nodes than allowed.

    ``partial`` is the number of solutions found before giving up; it is
    informational only, the partial set is never returned.
    """

    def __init__(self, budget, partial):
        self.budget = budget
        self.partial = partial
        super().__init__(f"node budget {budget} exceeded after {partial} solutions")

    def __reduce__(self):
        # survive the trip back from worker processes
        return (type(self), (self.budget, self.partial))


class InstanceParseError(ValueError):
    def __init__(self, line, message):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}")
