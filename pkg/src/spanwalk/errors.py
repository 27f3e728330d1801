"""Exception hierarchy shared across the toolkit.

Every exception carries a stable machine-readable ``code`` so callers (and the
CLI, which surfaces it in its JSON error document) can dispatch on failure
kind without parsing message text.
"""

from __future__ import annotations


class ToolkitError(Exception):
    """Base class for all toolkit-specific failures."""

    code = "error"


class EdgeListParseError(ToolkitError):
    """Malformed edge-list or graph6 input; ``line`` is 1-based when known."""

    code = "parse-error"

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class InputReadError(ToolkitError):
    """An input file could not be read."""

    code = "io-error"


class DirectedUnsupportedError(ToolkitError):
    """A directed graph reached an operation defined only for undirected ones."""

    code = "directed-unsupported"


class RegularityRequiredError(ToolkitError):
    """The operation needs every vertex to have the same degree."""

    code = "regularity-required"


class ConvergenceDomainError(ToolkitError):
    """Series evaluation requested outside the guaranteed domain 2d < n."""

    code = "convergence-domain"


class PrecisionExhaustedError(ToolkitError):
    """Integer identification could not isolate a unique value within the precision cap."""

    code = "precision-exhausted"


class BipartiteRequiredError(ToolkitError):
    """The operation needs a bipartite input graph."""

    code = "bipartite-required"


class ExhaustiveBudgetError(ToolkitError):
    """An exhaustive sweep would exceed the configured subset budget."""

    code = "exhaustive-budget"


class RetryBudgetError(ToolkitError):
    """A rejection sampler ran out of attempts before producing a valid graph."""

    code = "retry-budget"
