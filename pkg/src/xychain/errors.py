"""Exception types shared across the package."""


class InvariantViolation(Exception):
    """An internal consistency bound was broken beyond roundoff tolerance.

    Raised when a quantity that is constrained by theorem (positivity of a
    reduced density, trace normalization, parity conservation, ...) deviates
    by more than the documented tolerance.  This always indicates a bug in
    the implementation, never bad user input.
    """


class OracleMismatch(Exception):
    """Fast-path and brute-force results disagree beyond tolerance."""
