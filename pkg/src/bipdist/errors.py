"""Exception hierarchy.

Every error carries the process exit code the CLI should use:
1 for invalid input, 2 for mathematical degeneracy, 3 for I/O.
"""


class WorkbenchError(Exception):
    exit_code = 1


class ValidationError(WorkbenchError):
    """Input violates a precondition (duplicate or overlapping points, bad ranges)."""


class InvalidParams(ValidationError):
    pass


class InputError(ValidationError):
    pass


class StorageError(WorkbenchError):
    exit_code = 3


class DegeneracyError(WorkbenchError):
    exit_code = 2


class DegenerateInput(DegeneracyError):
    pass


class NotCoplanar(DegeneracyError):
    pass


class HorizontalLine(DegeneracyError):
    pass


class ParallelLines(DegeneracyError):
    pass


class IrrationalAngle(DegeneracyError):
    pass


class EmptyEnergy(DegeneracyError):
    pass


class NotSkew(DegeneracyError):
    pass


class DegenerateFit(DegeneracyError):
    pass


class PointNotOnLine(DegeneracyError):
    pass


class ContainmentFailure(DegeneracyError):
    pass


class InconsistentPartition(DegeneracyError):
    pass
