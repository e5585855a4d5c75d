"""Exception types shared across the package."""


class ParameterDomainError(ValueError):
    """A parameter lies outside its documented domain (k = 0, i > n, m > k, ...)."""


class UnsupportedRegimeError(ValueError):
    """The requested cell is outside the regime where a closed form is valid.

    Callers should fall back to the brute-force oracle for these cells.
    """


class BudgetExceededError(RuntimeError):
    """An enumeration would visit more words than the allowed budget."""


class NonInvertibleSeriesError(ValueError):
    """Series inversion requires a unit constant term (a single signed power of t)."""
