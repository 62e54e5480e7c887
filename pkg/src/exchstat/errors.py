"""Exception hierarchy shared by every module of the package."""


class ExchstatError(Exception):
    """Base class for all package errors."""


class WeightMismatchError(ExchstatError, ValueError):
    """Two partitions that must have the same weight do not."""


class InvalidPartitionError(ExchstatError, ValueError):
    pass


class UnderdeterminedError(ExchstatError):
    """The sampled linear system is rank deficient on the admissible locus."""

    def __init__(self, message: str, rank: int, unknowns: int):
        super().__init__(message)
        self.rank = rank
        self.unknowns = unknowns


class InconsistentError(ExchstatError):
    """No exact solution exists: the evaluator is not a degree-N symmetric polynomial."""


class UnsupportedFamilyError(ExchstatError, ValueError):
    pass


class DomainError(ExchstatError, ValueError):
    pass


class EmptySectorError(ExchstatError, ValueError):
    pass


class AsymmetricOperatorError(ExchstatError):
    pass


class NoConvergenceError(ExchstatError):
    pass


class NotEnergyEigenbasisError(ExchstatError, ValueError):
    pass


class ConfigError(ExchstatError, ValueError):
    """Malformed CLI configuration; ``where`` locates the offending line or field."""

    def __init__(self, message: str, where: str = ""):
        super().__init__(f"{where}: {message}" if where else message)
        self.where = where
