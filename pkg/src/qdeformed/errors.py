"""Exception and warning types shared by all modules."""


class DomainError(ValueError):
    """An argument lies outside the region where a quantity is defined."""


class NonConvergent(ArithmeticError):
    """A series or product did not meet its tail criterion within ``max_terms``."""


class PoleError(ZeroDivisionError):
    """A denominator Pochhammer symbol vanished."""


class PositivityViolation(ArithmeticError):
    """A quantity that must be nonnegative came out negative beyond tolerance."""


class AccuracyLoss(UserWarning):
    """The requested accuracy is not guaranteed by the truncation in use."""


class TruncationWarning(UserWarning):
    """An operator pushed weight past the last retained Fock index."""
