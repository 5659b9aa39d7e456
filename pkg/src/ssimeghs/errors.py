"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument violates a documented precondition or invariant."""


class FileFormatError(RuntimeError):
    """A file exists but its contents cannot be parsed."""


class ConfigError(ValueError):
    """An invalid combination of command-line options."""


class VanishingGradientError(ArithmeticError):
    """The SSIM gradient is zero, so no step size is defined."""
