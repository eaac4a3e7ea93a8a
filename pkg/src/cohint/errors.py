"""Exception hierarchy shared by all modules.

The three classes map onto the CLI exit codes: bad input (1), a failed
verification ledger (2), and violated internal assumptions such as an
induction numerator that does not divide out (3).
"""


class CohintError(Exception):
    """Base class for all package errors."""


class InputError(CohintError):
    """Malformed or mathematically inadmissible input data."""


class VerificationError(CohintError):
    """A verification ledger reported a mismatch."""


class InternalCheckError(CohintError):
    """An invariant that should hold for admissible inputs was violated."""
