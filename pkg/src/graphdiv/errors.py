class CapExceeded(ValueError):
    """Instance is larger than the configured size cap of an exact routine."""

    def __init__(self, what: str, n: int, cap: int):
        super().__init__(f"instance too large for {what}: n={n} exceeds cap {cap}")
        self.what = what
        self.n = n
        self.cap = cap


class OrderingError(ValueError):
    """No k-simplicial elimination ordering exists for (part of) the input."""

    def __init__(self, message: str, residual: frozenset = frozenset()):
        super().__init__(message)
        self.residual = residual


class TheoremViolation(RuntimeError):
    """The division invariant broke; signals an invalid order or a bug."""

    def __init__(self, message: str, trace=None):
        super().__init__(message)
        self.trace = list(trace or [])
