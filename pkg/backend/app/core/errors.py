"""Exception hierarchy for xopenergy.

Input errors also derive from ``ValueError`` so callers that only know the
standard library still catch them.
"""

from typing import Optional


class XopEnergyError(Exception):
    """Base class for every error raised by the package."""


class InvalidPartitionError(XopEnergyError, ValueError):
    """Partition is malformed or not a double partition where one is required."""


class InadmissibleDegreeError(XopEnergyError, ValueError):
    """Requested degree is one of the missing degrees of the family."""


class ParameterRangeError(XopEnergyError, ValueError):
    """A family parameter is outside its admissible range."""


class OdeFitError(XopEnergyError):
    """No constant makes the polynomial a solution of the differential equation."""


class RootFindingError(XopEnergyError):
    """Root iteration hit its cap without converging."""

    def __init__(self, message: str, root_index: Optional[int] = None, sweeps: Optional[int] = None):
        super().__init__(message)
        self.root_index = root_index
        self.sweeps = sweeps


class UnpairedRootError(XopEnergyError):
    """A non-real root has no conjugate partner within tolerance."""


class MultipleZeroError(XopEnergyError, ValueError):
    """Polynomial has a repeated zero."""


class CoincidentPointsError(XopEnergyError, ValueError):
    """Two points of a configuration (or two zeros) coincide."""


class SingularEvaluationError(XopEnergyError, ValueError):
    """Evaluation at a pole of a coefficient function or a zero of the weight."""


class DomainError(XopEnergyError, ValueError):
    """Point or grid lies outside the orthogonality interval."""


class IllPosedWeightError(XopEnergyError, ValueError):
    """The weight denominator vanishes inside the orthogonality interval."""


class PearsonError(XopEnergyError):
    """The weight does not satisfy its Pearson equation to tolerance."""
