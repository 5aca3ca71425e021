"""Population data model: ingestion, preprocessing, and per-stratum statistics."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
import pandas as pd

from .errors import (
    EmptyTable,
    LengthMismatch,
    NonFiniteValues,
    NonNumericColumn,
    UnknownColumn,
)


@dataclass(frozen=True)
class PopulationFrame:
    """A finite population of units: covariate matrix plus outcome vector.

    Rows are units, columns are covariates. All entries must be finite;
    missing data has to be resolved (see :func:`preprocess`) before a frame
    can be built. Instances are immutable and safe to share across threads.
    """

    covariates: np.ndarray
    outcome: np.ndarray
    covariate_names: tuple[str, ...]
    outcome_name: str = "y"

    def __post_init__(self) -> None:
        cov = np.ascontiguousarray(np.asarray(self.covariates, dtype=float))
        out = np.ascontiguousarray(np.asarray(self.outcome, dtype=float))
        if cov.ndim != 2:
            raise ValueError("covariates must be a 2-D array")
        n, p = cov.shape
        if n < 1:
            raise EmptyTable("population must contain at least one unit")
        if p < 1:
            raise ValueError("at least one covariate column is required")
        if out.shape != (n,):
            raise LengthMismatch(
                f"outcome has {out.shape} entries for {n} units"
            )
        if not np.isfinite(cov).all():
            raise NonFiniteValues("covariates contain NaN or infinite entries")
        if not np.isfinite(out).all():
            raise NonFiniteValues("outcome contains NaN or infinite entries")
        names = tuple(str(c) for c in self.covariate_names)
        if len(names) != p:
            raise LengthMismatch(
                f"{len(names)} covariate names for {p} columns"
            )
        if len(set(names)) != p:
            raise ValueError("covariate names must be unique")
        cov.setflags(write=False)
        out.setflags(write=False)
        object.__setattr__(self, "covariates", cov)
        object.__setattr__(self, "outcome", out)
        object.__setattr__(self, "covariate_names", names)
        object.__setattr__(self, "outcome_name", str(self.outcome_name))

    @property
    def n_units(self) -> int:
        return self.covariates.shape[0]

    @property
    def p(self) -> int:
        return self.covariates.shape[1]


@dataclass(frozen=True)
class StratumStats:
    """Per-stratum sizes, outcome means, and outcome variances.

    Variances use the population convention (divide by the stratum size).
    ``labels_present[k]`` records which original label the k-th stratum
    carried before empty strata were dropped.
    """

    sizes: np.ndarray
    means: np.ndarray
    variances: np.ndarray
    overall_mean: float
    overall_variance: float
    labels_present: tuple[int, ...]

    def __post_init__(self) -> None:
        sizes = np.ascontiguousarray(np.asarray(self.sizes, dtype=np.int64))
        means = np.ascontiguousarray(np.asarray(self.means, dtype=float))
        variances = np.ascontiguousarray(np.asarray(self.variances, dtype=float))
        if not (sizes.shape == means.shape == variances.shape) or sizes.ndim != 1:
            raise LengthMismatch("sizes, means, and variances must align")
        if sizes.size < 1:
            raise ValueError("at least one stratum is required")
        if (sizes < 1).any():
            raise ValueError("every stratum must contain at least one unit")
        if (variances < 0).any():
            raise ValueError("variances must be nonnegative")
        labels = tuple(int(v) for v in self.labels_present)
        if len(labels) != sizes.size:
            raise LengthMismatch("one original label per stratum is required")
        for arr in (sizes, means, variances):
            arr.setflags(write=False)
        object.__setattr__(self, "sizes", sizes)
        object.__setattr__(self, "means", means)
        object.__setattr__(self, "variances", variances)
        object.__setattr__(self, "overall_mean", float(self.overall_mean))
        object.__setattr__(self, "overall_variance", float(self.overall_variance))
        object.__setattr__(self, "labels_present", labels)

    @property
    def n_strata(self) -> int:
        return self.sizes.size

    @property
    def total(self) -> int:
        return int(self.sizes.sum())

    @classmethod
    def from_moments(
        cls,
        sizes: Sequence[int],
        means: Sequence[float],
        variances: Sequence[float],
    ) -> "StratumStats":
        """Assemble stats from per-stratum moments; overall moments follow
        from the law of total variance."""
        sizes_arr = np.asarray(sizes, dtype=np.int64)
        means_arr = np.asarray(means, dtype=float)
        var_arr = np.asarray(variances, dtype=float)
        n_total = sizes_arr.sum()
        mu = float(np.sum(sizes_arr * means_arr) / n_total)
        sigma2 = float(np.sum(sizes_arr * (var_arr + (means_arr - mu) ** 2)) / n_total)
        return cls(
            sizes=sizes_arr,
            means=means_arr,
            variances=var_arr,
            overall_mean=mu,
            overall_variance=sigma2,
            labels_present=tuple(range(sizes_arr.size)),
        )


def build_frame(
    table: pd.DataFrame,
    outcome_column: str,
    covariate_columns: Sequence[str],
) -> PopulationFrame:
    """Package a labeled table into a :class:`PopulationFrame`.

    Columns appear in the requested order; rows keep their input order.
    """
    covariate_columns = list(covariate_columns)
    if not covariate_columns:
        raise ValueError("covariate_columns must be nonempty")
    missing = [c for c in [outcome_column, *covariate_columns] if c not in table.columns]
    if missing:
        raise UnknownColumn(f"columns not in table: {missing}")
    if len(table) == 0:
        raise EmptyTable("table has no rows")
    for col in [outcome_column, *covariate_columns]:
        if not pd.api.types.is_numeric_dtype(table[col]):
            raise NonNumericColumn(f"column {col!r} is not numeric; encode it first")
    covariates = table[covariate_columns].to_numpy(dtype=float)
    outcome = table[outcome_column].to_numpy(dtype=float)
    return PopulationFrame(
        covariates=covariates,
        outcome=outcome,
        covariate_names=tuple(covariate_columns),
        outcome_name=outcome_column,
    )


def preprocess(
    table: pd.DataFrame,
    categorical_columns: Sequence[str] = (),
    drop_missing: bool = False,
) -> pd.DataFrame:
    """One-hot encode categorical columns and optionally drop incomplete rows.

    Every level of a categorical column becomes its own indicator column
    (no reference level is dropped). Rows containing any missing cell are
    removed when ``drop_missing`` is set; otherwise row order is preserved.
    An empty result is allowed here and rejected later by build_frame.
    """
    categorical_columns = list(categorical_columns)
    missing_cols = [c for c in categorical_columns if c not in table.columns]
    if missing_cols:
        raise UnknownColumn(f"categorical columns not in table: {missing_cols}")
    result = table.copy()
    if drop_missing:
        result = result.dropna(axis=0, how="any")
    if categorical_columns:
        result = pd.get_dummies(
            result, columns=categorical_columns, prefix_sep="=", dtype=float
        )
    return result


def stratum_stats(frame: PopulationFrame, labels: Sequence[int]) -> StratumStats:
    """Population-convention outcome moments per stratum.

    Strata with zero members are dropped; ``labels_present`` records the
    remap from surviving stratum position back to the original label.
    """
    labels_arr = np.asarray(labels)
    if labels_arr.shape != (frame.n_units,):
        raise LengthMismatch(
            f"{labels_arr.shape} labels for {frame.n_units} units"
        )
    if not np.issubdtype(labels_arr.dtype, np.integer):
        raise ValueError("stratum labels must be integers")
    present, inverse = np.unique(labels_arr, return_inverse=True)
    sizes = np.bincount(inverse)
    y = frame.outcome
    sums = np.bincount(inverse, weights=y)
    means = sums / sizes
    deviations = y - means[inverse]
    variances = np.bincount(inverse, weights=deviations * deviations) / sizes
    return StratumStats(
        sizes=sizes,
        means=means,
        variances=np.maximum(variances, 0.0),
        overall_mean=float(y.mean()),
        overall_variance=float(y.var()),
        labels_present=tuple(int(v) for v in present),
    )


def read_table(path, na_token: str | None = None) -> pd.DataFrame:
    """Read a UTF-8 CSV with a header row; empty cells (and ``na_token``,
    when given) count as missing."""
    na_values = [na_token] if na_token is not None else None
    return pd.read_csv(path, encoding="utf-8", na_values=na_values)


def frame_to_csv(frame: PopulationFrame, path) -> None:
    """Write covariates plus outcome as a headered CSV."""
    data = {name: frame.covariates[:, j] for j, name in enumerate(frame.covariate_names)}
    data[frame.outcome_name] = frame.outcome
    pd.DataFrame(data).to_csv(path, index=False, encoding="utf-8")


def frame_from_csv(
    path,
    outcome_column: str,
    covariate_columns: Sequence[str] | None = None,
    na_token: str | None = None,
) -> PopulationFrame:
    """Load a CSV straight into a frame; covariates default to every column
    except the outcome."""
    table = read_table(path, na_token=na_token)
    if covariate_columns is None:
        covariate_columns = [c for c in table.columns if c != outcome_column]
    return build_frame(table, outcome_column, covariate_columns)
