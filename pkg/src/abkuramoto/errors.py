"""Exception types shared across the package.

The CLI maps these onto exit codes (validation 1, I/O 2, numerical 3,
search 4), so library code should raise the most specific class that fits.
"""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ContractError(ValueError):
    """Structurally inconsistent inputs (length mismatches, bad field types)."""


class SingularityError(DomainError):
    """Evaluation requested exactly on a singular locus (the interference line)."""


class StepTooLargeError(DomainError):
    """Finite-difference step too large to unwrap the phase unambiguously."""


class NumericalError(ArithmeticError):
    """Integration produced non-finite values."""


class SearchError(RuntimeError):
    """A root search failed (e.g. no sign change on the given bracket)."""
