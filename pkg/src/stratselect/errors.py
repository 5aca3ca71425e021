"""Exception types shared across the toolkit."""


class StratSelectError(Exception):
    """Base class for every error raised by this package."""


class UnknownColumn(StratSelectError):
    """A referenced column is not present in the table."""


class NonNumericColumn(StratSelectError):
    """A column expected to be numeric holds non-numeric data."""


class NonFiniteValues(StratSelectError):
    """Covariates or outcome contain NaN or infinite entries."""


class EmptyTable(StratSelectError):
    """The table has no rows left to build a population from."""


class LengthMismatch(StratSelectError):
    """Two aligned sequences disagree in length."""


class KExceedsPopulation(StratSelectError):
    """More strata requested than there are population units."""


class BadFeatureIndex(StratSelectError):
    """Feature indices are empty, duplicated, or out of range."""


class SampleTooSmall(StratSelectError):
    """Sample size is below the number of strata."""


class SampleExceedsPopulation(StratSelectError):
    """Sample size is larger than the population."""


class InfeasibleBounds(StratSelectError):
    """Allocation box bounds admit no vector summing to the sample size."""


class InstanceTooLarge(StratSelectError):
    """Exhaustive enumeration was refused because the lattice is too big."""


class OverAllocated(StratSelectError):
    """A stratum was assigned more sample units than it contains."""


class ZeroVariance(StratSelectError):
    """A variance that must be positive is zero."""


class ThetaExceedsP(StratSelectError):
    """Requested subset size exceeds the number of candidate variables."""


class ZeroVarianceCovariate(StratSelectError):
    """The chosen adjustment covariate is constant."""


class AllConstantCovariates(StratSelectError):
    """Every candidate covariate is constant."""


class PTooSmall(StratSelectError):
    """Too few variables for the requested coefficient pattern."""


class ZeroBaselineVariance(StratSelectError):
    """The baseline sampling variance is zero, so a ratio is undefined."""


class BadConfig(StratSelectError):
    """A configuration is malformed or violates a precondition."""
