"""Exception hierarchy shared by the library and the command line."""


class InputError(ValueError):
    """Malformed or out-of-contract input (bad shapes, bad indices, bad arguments)."""


class NotModularError(ArithmeticError):
    """Data that fails a modularity requirement (non-integral fusion, non-unitary S)."""

    def __init__(self, message, defect=None):
        super().__init__(message)
        self.defect = defect


class StructuralError(Exception):
    """Input that is well formed but not of fermionic/graded form.

    ``report`` carries the structured list of violated conditions when available.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class FieldOrderError(ArithmeticError):
    """The cyclotomic order required by an operation exceeds the supported cap."""
