class HntError(Exception):
    """Base class for all library errors."""


class ParameterError(HntError, ValueError):
    pass


class BudgetError(HntError):
    """An enumeration would exceed its configured budget."""

    def __init__(self, what, size, budget):
        super().__init__(f"{what}: {size} exceeds budget {budget}")
        self.size = size
        self.budget = budget


class UndefinedError(HntError, ValueError):
    pass


class NotInStabilizerError(HntError, ValueError):
    pass


class LevelError(HntError, ValueError):
    """Requested neighbour-transitivity level exceeds the covering radius."""
