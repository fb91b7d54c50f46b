"""Exception types shared across the library and the CLI."""


class KnapscaleError(Exception):
    """Base class for every error raised by this package."""


class DomainError(KnapscaleError):
    """A parameter lies outside its admissible range (epsilon, ratio, ...)."""


class ValidationError(KnapscaleError):
    """Instance data violates a structural invariant (e.g. weight < 1)."""


class ParseError(KnapscaleError):
    """Instance text does not match the file grammar.

    ``line`` is the 1-based line number where parsing failed.
    """

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class InfeasibleInstance(KnapscaleError):
    """No subset satisfies the feasibility structure."""


class InstanceTooLarge(KnapscaleError):
    """The instance exceeds a hard size guard (brute force, n > 25)."""


class BudgetExceeded(KnapscaleError):
    """A benchmark baseline would exceed the configured cell budget."""
