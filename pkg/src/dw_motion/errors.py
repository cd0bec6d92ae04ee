"""Exception hierarchy for dw-motion.

Input problems also subclass ValueError so callers can catch them the usual
way; internal consistency failures subclass RuntimeError.
"""


class DWMotionError(Exception):
    """Base class for all dw-motion errors."""


class GroupSpecError(DWMotionError, ValueError):
    """Malformed group spec string or unsupported parameters."""


class GroupAxiomError(DWMotionError, ValueError):
    """A multiplication table that is not a group (or not closed)."""


class LabelError(DWMotionError, ValueError):
    """Unknown element label or invalid flux label."""


class PresentationSyntaxError(DWMotionError, ValueError):
    """Syntax error in a presentation or endomorphism file."""

    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class EndomorphismError(DWMotionError, ValueError):
    """Endomorphism that does not preserve relators or is not bijective."""


class TriangulationError(DWMotionError, ValueError):
    """Invalid triangulation, boundary coloring or cylinder data."""


class ColoringScopeError(DWMotionError, ValueError):
    """Coloring search would exceed the configured state cap."""


class LinkSpecError(DWMotionError, ValueError):
    """Invalid link family parameters or link-spec string."""


class VerificationError(DWMotionError, RuntimeError):
    """A construction failed a check that would falsify the implementation."""
