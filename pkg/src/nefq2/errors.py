"""Exception hierarchy.

Every failure mode is a distinct class so callers (and the CLI) can map
them to exit codes without string matching.
"""

from __future__ import annotations


class NefQ2Error(Exception):
    """Base class for all errors raised by this package."""


class MalformedClassError(NefQ2Error):
    """A K-class violates an integrality constraint (e.g. ch2 parity)."""


class VirtualClassError(NefQ2Error):
    """A virtual K-class (rank < 1) was used where an honest bundle is required."""


class HypothesisError(NefQ2Error):
    """Input violates a mathematical hypothesis of the requested operation."""


class ReconstructionError(NefQ2Error):
    """An internal exact identity failed.  This signals an implementation bug,
    never bad user input."""
