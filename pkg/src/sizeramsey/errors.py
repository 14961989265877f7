"""Exception types shared by every module.

Each error carries a stable ``code`` string (``NON_UNIFORM``, ``BAD_DIVISIBILITY``,
...) so callers and the CLI can branch on it without parsing messages.
"""

from __future__ import annotations


class RamseyError(ValueError):
    """Base error with a machine-readable code."""

    def __init__(self, code: str, message: str = ""):
        self.code = code
        self.message = message
        super().__init__(f"{code}: {message}" if message else code)


class BudgetExceeded(RamseyError):
    """A node budget (or soft wall-clock cap) ran out before the search finished.

    This is never a negative answer: callers must report "unknown".
    """

    def __init__(self, message: str = "", nodes: int = 0):
        self.nodes = nodes
        super().__init__("BUDGET_EXCEEDED", message)


class ProofViolation(RamseyError):
    """Something the lower-bound argument forbids was observed in strict mode."""

    def __init__(self, message: str, dump: str = ""):
        self.dump = dump
        super().__init__("PROOF_VIOLATION", message)
