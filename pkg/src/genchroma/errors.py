"""Exception hierarchy shared across the package.

The CLI maps these onto distinct exit codes, so anything raised by library
code should be one of the classes below (or a plain ValueError for bad
arguments).
"""

from __future__ import annotations


class ParseError(ValueError):
    """Malformed graph input (graph6 or edge-list text)."""


class SolverLimitError(RuntimeError):
    """An exact solver was asked for an instance above its configured size limit."""


class VerificationError(RuntimeError):
    """Base class for anomalies: a tested claim failed on a concrete graph.

    Carries a graph6 reproduction string whenever one is available.
    """

    def __init__(self, message: str, graph6: str | None = None):
        if graph6 is not None:
            message = f"{message} [graph6: {graph6}]"
        super().__init__(message)
        self.graph6 = graph6


class TheoremFalsificationError(VerificationError):
    """A graph violated an inequality or equality characterization under test."""


class OracleMismatchError(VerificationError):
    """The fast partition solver and the exhaustive oracle disagreed."""
