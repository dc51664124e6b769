class MajcaError(Exception):
    """Base class for every error raised by majca operations."""


class EmptyText(MajcaError):
    """Raised when a configuration is parsed from an empty string."""

    def __init__(self, message="Configuration text is empty"):
        super().__init__(message)


class InvalidCharacter(MajcaError):
    """Raised when configuration text contains something other than '0' or '1'."""

    def __init__(self, message, text=None, position=None):
        super().__init__(message)
        self.text = text
        self.position = position

    def __str__(self):
        return f"{super().__str__()} (Text: '{self.text}', Position: {self.position})"


class BudgetExceeded(MajcaError):
    """Raised when an iteration or enumeration budget is exhausted."""

    def __init__(self, message, budget=None, what=None):
        super().__init__(message)
        self.budget = budget
        self.what = what

    def __str__(self):
        return f"{super().__str__()} (Budget: {self.budget}, What: {self.what})"


class PreconditionViolated(MajcaError):
    """Raised when an operation is called outside of its precondition."""

    def __init__(self, message, operation=None):
        super().__init__(message)
        self.operation = operation

    def __str__(self):
        return f"{super().__str__()} (Operation: {self.operation})"


class NotTemporallyPeriodic(PreconditionViolated):
    """Raised when a temporally periodic configuration is required."""

    def __init__(self, message, config=None, operation=None):
        super().__init__(message, operation=operation)
        self.config = config


class HomogeneousConfiguration(PreconditionViolated):
    """Raised when an operation needs at least two blocks."""

    def __init__(self, message, config=None, operation=None):
        super().__init__(message, operation=operation)
        self.config = config


class LengthMismatch(MajcaError):
    """Raised when two configurations that must share a ring size do not."""

    def __init__(self, message, left=None, right=None):
        super().__init__(message)
        self.left = left
        self.right = right

    def __str__(self):
        return f"{super().__str__()} (Left n: {self.left}, Right n: {self.right})"


class OverlayUnavailable(MajcaError):
    """Raised when a stability overlay is requested for a format that cannot draw it."""

    def __init__(self, message, format=None):
        super().__init__(message)
        self.format = format

    def __str__(self):
        return f"{super().__str__()} (Format: {self.format})"
