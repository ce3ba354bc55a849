class SyzygyError(Exception):
    pass


class SchemaError(SyzygyError, ValueError):
    """Malformed input; the message names the offending field."""

    def __init__(self, field, message):
        self.field = field
        super().__init__("%s: %s" % (field, message))


class PreconditionError(SyzygyError, ValueError):
    """Input is well formed but violates a mathematical precondition."""


class InvariantViolation(SyzygyError, RuntimeError):
    """An internal consistency check failed."""
