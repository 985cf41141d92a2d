"""Domain errors raised by the library.

Every error carries a stable machine-readable ``code`` and an optional detail
mapping; the command line serializes these to JSON on the error stream.
"""

from __future__ import annotations


class CurvegraphError(Exception):
    """Base class for all domain errors in this package."""

    code = "error"

    def __init__(self, message: str, **detail):
        super().__init__(message)
        self.detail = detail

    def payload(self) -> dict:
        out = {"error": self.code, "message": str(self)}
        if self.detail:
            out["detail"] = {k: self.detail[k] for k in sorted(self.detail)}
        return out


class FormatError(CurvegraphError):
    """Malformed input data: bad JSON, bad rational, bad schema."""

    code = "format-error"


class DuplicateVertex(CurvegraphError):
    code = "duplicate-vertex"


class NonPositiveMeasure(CurvegraphError):
    code = "non-positive-measure"


class SelfLoop(CurvegraphError):
    code = "self-loop"


class AsymmetricDuplicateEdge(CurvegraphError):
    """Same unordered vertex pair listed twice with different weights."""

    code = "asymmetric-duplicate-edge"


class NonPositiveEdgeWeight(CurvegraphError):
    code = "non-positive-edge-weight"


class DisconnectedGraph(CurvegraphError):
    code = "disconnected-graph"


class UnknownVertex(CurvegraphError):
    code = "unknown-vertex"


class PartialFunction(CurvegraphError):
    """A graph function is missing values on some vertices."""

    code = "partial-function"


class HorizonExceeded(CurvegraphError):
    """A quantity was requested beyond the radius range the data supports.

    Finite inputs are treated as possible truncations of larger graphs, so
    anything needing edges past the last sphere is an error, never a silent
    zero.
    """

    code = "horizon-exceeded"


class SameVertex(CurvegraphError):
    code = "same-vertex"


class BadRadiusOrder(CurvegraphError):
    code = "bad-radius-order"


class EmptySphere(CurvegraphError):
    code = "empty-sphere"


class HorizonMismatch(CurvegraphError):
    """No common radius range to compare on."""

    code = "horizon-mismatch"


class HypothesisFailed(CurvegraphError):
    """A theorem checker was invoked with its stated hypothesis violated."""

    code = "hypothesis-failed"


class SequenceNotNonincreasing(CurvegraphError):
    code = "sequence-not-nonincreasing"


class NonPositiveEntry(CurvegraphError):
    code = "non-positive-entry"
