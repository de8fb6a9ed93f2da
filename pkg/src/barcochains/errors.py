"""Exception types shared across the package."""


class BarcochainsError(Exception):
    """Base class for all package errors."""


class NotAMonomial(BarcochainsError):
    """Scalar inversion needs a single nonzero monomial term."""


class AlgebraMismatch(BarcochainsError):
    """Operands live over different algebra descriptors."""


class NonHomogeneous(BarcochainsError):
    """Operation requires homogeneous (single-parity) input."""


class NotNilpotentWithinBound(BarcochainsError):
    """Exponentiated element did not vanish within the declared bound."""


class UndefinedOnGenerator(BarcochainsError):
    """Derivation rule missing a generator occurring in the argument."""


class KindMismatch(BarcochainsError):
    """Cochain kinds are not compatible for the requested operation."""


class NotATrace(BarcochainsError):
    """Sampled functional fails to vanish on graded commutators."""


class HypothesisViolated(BarcochainsError):
    """A stated precondition of a verification failed on input data."""


class NotCentral(BarcochainsError):
    """Claimed central element fails a centrality or shape check."""


class NonCommutingScalar(BarcochainsError):
    """Perturbation does not commute with the central heat part."""


class NonIntegrableTerm(BarcochainsError):
    """Fiber integral hit a term outside the Gaussian-moment shapes."""


class DimensionMismatch(BarcochainsError):
    """Clifford or exterior operands have different ranks."""


class ModelNotNilpotent(BarcochainsError):
    """Heat model data is not nilpotent within its declared depth."""


class UnknownSuite(BarcochainsError):
    """CLI verification suite name is not recognized."""


class ParseError(BarcochainsError):
    """Expression/JSON input failed to parse."""

    def __init__(self, message: str, line: int = 1, col: int = 1):
        super().__init__(f"{message} (line {line}, col {col})")
        self.line = line
        self.col = col
