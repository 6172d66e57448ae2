"""Exception hierarchy shared across the package."""


class WPGLError(Exception):
    """Base class for all library errors."""


class FieldMismatchError(WPGLError, TypeError):
    """Operands live over different coefficient rings."""


class NotInvertibleError(WPGLError, ZeroDivisionError):
    """Division by zero or by a non-unit."""


class SignatureError(WPGLError, ValueError):
    """Bad weight list, or operands over different signatures."""


class HomogeneityError(WPGLError, ValueError):
    """A component is not weighted-homogeneous of the required weight."""


class NotAutomorphismError(WPGLError, ValueError):
    """A linear block of an equivariant map is singular."""


class MalformedError(WPGLError, ValueError):
    """Tables or JSON input that do not describe the declared object."""


class InvalidStructureError(WPGLError, ValueError):
    """A crossed module, extension or butterfly fails its axioms.

    Carries the validation report so callers can show the witnesses.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
