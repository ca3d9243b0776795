"""Error taxonomy shared by every module.

The CLI maps these onto exit codes: invalid input 2, solver timeout 3,
verification failure 4.
"""

from __future__ import annotations


class ZeroRateError(Exception):
    """Base class for all package errors."""


class InputError(ZeroRateError):
    """Malformed or out-of-contract input (CLI exit code 2)."""


class SizeExceeded(InputError):
    """A size guard was violated (vertex count, power size, arc count)."""


class AssumptionViolation(InputError):
    """Instance validation failed (support, values, probabilities)."""


class IsolatedVertex(InputError):
    """Graph has a degree-0 vertex where the construction needs incidences."""


class ModeMismatch(InputError):
    """Two representations with different arithmetic modes were combined."""


class ImproperColoring(InputError):
    """A supplied coloring is not proper on the required graph."""


class RepresentationMismatch(InputError):
    """A representation's vertex labels do not match the required graph."""


class InvalidCertificate(InputError):
    """A supplied representation certificate failed validation."""


class SolverTimeout(ZeroRateError):
    """Budget exhausted; carries the certified bracket found so far.

    CLI exit code 3. ``bracket`` is a (lower, upper) pair whose entries are
    ints, Fractions, or floats depending on the solver.
    """

    def __init__(self, message: str, bracket: tuple):
        super().__init__(message)
        self.bracket = bracket


class VerificationFailure(ZeroRateError):
    """A zero-error check failed; carries the offending witness (exit code 4)."""

    def __init__(self, message: str, witness: tuple = ()):
        super().__init__(message)
        self.witness = witness


class StructureViolation(ZeroRateError):
    """A structural recomputation disagreed with the required invariant."""
