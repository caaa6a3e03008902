"""Exception types shared across the package."""


class GraphParseError(ValueError):
    """Malformed graph file; message carries the offending line number."""


class NotEulerianError(ValueError):
    """An operation required an Eulerian digraph and did not get one."""


class CapExceededError(RuntimeError):
    """A desk-scale size cap was hit; the computation refuses to proceed."""


class InsertionError(ValueError):
    """Trail insertion precondition violated; ``clause`` names which one."""

    def __init__(self, clause, message):
        super().__init__(f"{clause}: {message}")
        self.clause = clause
