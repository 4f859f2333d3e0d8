"""
cydyn.utils.checks

Post-condition checks on exact results.
"""


class InvariantViolation(RuntimeError):
    """Raised when a computed result fails a check the code asserts on itself.

    This always indicates a bug (or corrupted input that slipped past
    validation), never a legitimate mathematical outcome. The CLI exits
    with status 2 when it is raised.

    """


def ensure(condition, message):
    """Raise InvariantViolation with message unless condition holds."""
    if not condition:
        raise InvariantViolation(message)
