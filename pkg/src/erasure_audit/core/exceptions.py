"""
Custom exceptions for the erasure audit package.
"""


class ErasureAuditError(Exception):
    """Base exception for all erasure audit errors."""

    pass


class DomainError(ErasureAuditError):
    """Argument outside the documented range of an operation."""

    def __init__(self, parameter: str, value: object, expected: str):
        self.parameter = parameter
        self.value = value
        self.expected = expected
        super().__init__(f"{parameter}={value!r} out of range: expected {expected}")


class MachineDefinitionError(ErasureAuditError):
    """Machine definition (kernel rows, ids, file) is invalid."""

    pass


class StructuralError(ErasureAuditError):
    """Machine structure does not admit a unique stationary distribution."""

    pass


class ConvergenceError(ErasureAuditError):
    """Iterative solver hit its iteration cap."""

    def __init__(self, operation: str, iterations: int, residual: float):
        self.iterations = iterations
        self.residual = residual
        super().__init__(
            f"{operation} did not converge after {iterations} iterations (residual {residual:.3e})"
        )


class BoxStateError(ErasureAuditError):
    """Partition precondition of a box operation violated."""

    pass


class NonTerminationError(ErasureAuditError):
    """Protocol loop exceeded its iteration cap."""

    def __init__(self, protocol: str, max_iterations: int):
        self.protocol = protocol
        self.max_iterations = max_iterations
        super().__init__(f"Protocol '{protocol}' did not stop within {max_iterations} iterations")


class ConfigurationError(ErasureAuditError):
    """Configuration is invalid or missing."""

    pass
