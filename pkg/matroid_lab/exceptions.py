"""Exceptions shared by the toolkit apps"""


class ToolkitError(Exception):
    """Base class for every error raised by the toolkit"""

    code = 'toolkit_error'

    def __init__(self, message, code=None):
        super().__init__(message)
        self.message = message
        if code is not None:
            self.code = code


class UnknownElementError(ToolkitError, KeyError):
    code = 'unknown_element'

    def __str__(self):
        return self.message


class DimensionMismatchError(ToolkitError, ValueError):
    code = 'dimension_mismatch'


class SizeGateExceeded(ToolkitError):
    """An exhaustive computation was requested beyond its configured gate"""

    code = 'size_gate'

    def __init__(self, what, size, limit):
        super().__init__(f"{what}: size {size} exceeds the configured limit {limit}")
        self.size = size
        self.limit = limit


class DefinitionError(ToolkitError):
    """An operation was applied outside the inputs it is defined on"""

    code = 'undefined'


class LabelCollisionError(ToolkitError, ValueError):
    code = 'label_collision'


class InconsistentOracleError(ToolkitError):
    code = 'inconsistent_oracle'


class NotGraphicError(ToolkitError):
    code = 'not_graphic'


class NotAMatroidError(ToolkitError):
    code = 'not_a_matroid'


class ImproperSetSystemError(ToolkitError):
    code = 'improper'


class InvariantViolation(ToolkitError):
    """Two independent computations of the same quantity disagreed"""

    code = 'invariant_violation'


def check_gate(what, size, limit):
    if size > limit:
        raise SizeGateExceeded(what, size, limit)
