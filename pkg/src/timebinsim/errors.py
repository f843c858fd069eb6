"""Exception types shared across the toolkit.

The CLI maps these onto exit codes: scenario/config problems exit with 2,
infeasible physics with 3, statistical failures with 4.
"""


class ScenarioError(ValueError):
    """Raised for malformed or schema-violating scenario input."""


class TimingError(RuntimeError):
    """Raised when a pulse schedule cannot be realized by the hardware."""


class StatisticsError(RuntimeError):
    """Raised when counts are insufficient for the requested estimate."""


class FitError(RuntimeError):
    """Raised when a least-squares fit cannot be performed."""
