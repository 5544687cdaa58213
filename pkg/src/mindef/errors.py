"""Exception types shared by the whole package."""


class MindefError(Exception):
    """Base class for all errors raised by this package."""


class UndeclaredArgument(MindefError):
    """A name was used that is not part of the framework's argument universe."""

    def __init__(self, name, line=None):
        self.name = name
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"undeclared argument {name!r}{where}")


class CrossFrameworkSet(MindefError):
    """Argument sets bound to different frameworks were combined."""


class NotWithinFocus(MindefError):
    """A set was passed where a subset of the partition's focus is required."""


class PreconditionViolated(MindefError):
    """An operation was called on inputs outside its stated domain."""


class BudgetExceeded(MindefError):
    """A search budget (size cap or wall-clock ceiling) was exhausted."""


class EmptyFamily(MindefError):
    """An acceptance query was asked against an empty extension family."""


class AfpSyntaxError(MindefError):
    """A line of AFP input did not match the statement grammar."""

    def __init__(self, message, line):
        self.line = line
        super().__init__(f"line {line}: {message}")
