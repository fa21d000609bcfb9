"""Exception types shared across the package."""


class ValidationError(ValueError):
    """A spec, config, or argument failed its structural preconditions."""


class DomainError(ValueError):
    """A numeric input is outside the domain an operation is defined on."""


class AnalysisError(DomainError):
    """A pattern cut lacks the feature an extraction needs (crossing, minimum)."""
