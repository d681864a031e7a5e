"""Exception hierarchy shared by every module."""


class GraphError(ValueError):
    """Malformed graph, path or cycle input."""


class ParseError(GraphError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ContractError(ValueError):
    """A precondition of an operation does not hold."""


class NoPathError(ContractError):
    pass


class ProofViolation(AssertionError):
    """An internal check failed where the underlying theorem guarantees success.

    Reaching this means an implementation bug. ``trace`` carries whatever
    bookkeeping the failing routine had collected so it can be dumped.
    """

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace if trace is not None else []
