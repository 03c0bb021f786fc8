"""OLS estimation for the main model, its per-column auxiliary regressions,
and the orthonormal reparameterization obtained from the thin QR.

Conventions used throughout the package:

* column variances are population variances (divide by n), so that
  n * var(X_i) equals the centered sum of squares exactly;
* stored t-statistics are absolute values;
* the total sum of squares of a regression is centered when that
  regression contains an intercept column and uncentered otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    ExactCollinearity,
    InsufficientData,
    PerfectFit,
    RankDeficient,
)
from .linalg import (
    QrResult,
    as_matrix,
    as_vector,
    qr_decompose,
    solve_upper_triangular,
)

# Intercept columns must be constant to this relative tolerance.
INTERCEPT_REL_TOL = 1e-12

# A fit is rejected as exact when the residual norm falls below this
# fraction of the response norm (sigma would be numerically zero).
PERFECT_FIT_REL_TOL = 1e-12


@dataclass(frozen=True)
class ModelSpec:
    """A regression problem: design matrix, response, and column labels.

    ``intercept_index`` flags the constant column when one is present.
    Construction validates shapes, finiteness, uniqueness of names,
    n > k, and constancy of the flagged column.
    """

    design: np.ndarray
    response: np.ndarray
    column_names: tuple[str, ...]
    intercept_index: int | None = None

    def __post_init__(self):
        design = as_matrix(self.design, name="design")
        response = as_vector(self.response, name="response")
        names = tuple(str(s) for s in self.column_names)
        n, k = design.shape
        if response.shape[0] != n:
            raise ValueError(
                f"response length {response.shape[0]} does not match {n} rows"
            )
        if len(names) != k:
            raise ValueError(f"{len(names)} column names for {k} columns")
        if len(set(names)) != k:
            raise ValueError("column names must be unique")
        if n <= k:
            raise InsufficientData(
                f"need more observations than columns, got n={n}, k={k}"
            )
        index = self.intercept_index
        if index is not None:
            index = int(index)
            if not 0 <= index < k:
                raise ValueError(f"intercept_index {index} out of range for k={k}")
            col = design[:, index]
            ref = float(col[0])
            if float(np.abs(col - ref).max()) > INTERCEPT_REL_TOL * abs(ref):
                raise ValueError(
                    f"intercept column {names[index]!r} is not constant"
                )
        object.__setattr__(self, "design", design)
        object.__setattr__(self, "response", response)
        object.__setattr__(self, "column_names", names)
        object.__setattr__(self, "intercept_index", index)

    @property
    def n_obs(self) -> int:
        return self.design.shape[0]

    @property
    def n_cols(self) -> int:
        return self.design.shape[1]

    @property
    def has_intercept(self) -> bool:
        return self.intercept_index is not None


@dataclass(frozen=True)
class OlsFit:
    """Full OLS estimation result.

    Arrays are aligned with the design columns; ``residuals`` with the
    observations. ``t_stats`` holds |coefficient| / std_error.
    """

    coefficients: np.ndarray
    std_errors: np.ndarray
    t_stats: np.ndarray
    ssr: float
    sigma2_hat: float
    r2: float
    f_stat: float
    residuals: np.ndarray
    col_means: np.ndarray
    col_pop_variances: np.ndarray
    col_sumsq: np.ndarray

    @property
    def n_obs(self) -> int:
        return self.residuals.shape[0]

    @property
    def n_cols(self) -> int:
        return self.coefficients.shape[0]

    @property
    def sigma_hat(self) -> float:
        return math.sqrt(self.sigma2_hat)


@dataclass(frozen=True)
class AuxiliaryFit:
    """Result of regressing design column ``target_index`` on the others.

    ``r2_aux`` is None for the intercept column, whose auxiliary
    regression has no intercept of its own and hence no coefficient of
    determination. ``sst_aux`` is centered exactly when the auxiliary
    regression contains the intercept column as a regressor.
    """

    target_index: int
    r2_aux: float | None
    ssr_aux: float
    sst_aux: float


@dataclass(frozen=True)
class OrthonormalFit:
    """Estimates of the orthonormal reference model y = Q b + w.

    The orthonormal design shares its residuals (and therefore sigma,
    R squared and F) with the original model; every coefficient has
    standard error ``sigma_hat``, so ``t_exp_o = |beta_o| / sigma_hat``.
    """

    beta_o: np.ndarray
    t_exp_o: np.ndarray
    p_matrix: np.ndarray
    sigma_hat: float


def _freeze(*arrays: np.ndarray) -> None:
    for a in arrays:
        a.flags.writeable = False


def _qr_or_collinear(x: np.ndarray, names: tuple[str, ...]) -> QrResult:
    try:
        return qr_decompose(x)
    except RankDeficient as exc:
        name = names[exc.column] if exc.column < len(names) else str(exc.column)
        raise ExactCollinearity(
            f"design matrix is rank deficient at column {name!r}",
            column_name=name,
        ) from exc


def _check_not_perfect(ssr: float, y: np.ndarray) -> None:
    if ssr <= (PERFECT_FIT_REL_TOL**2) * float(y @ y):
        raise PerfectFit("residual sum of squares is numerically zero")


def _column_index(spec: ModelSpec, i) -> int:
    i = int(i)
    if not 0 <= i < spec.n_cols:
        raise ValueError(f"column index {i} out of range for k={spec.n_cols}")
    return i


def ols_fit(spec: ModelSpec) -> OlsFit:
    """Estimate the model by least squares through the QR path.

    Coefficients come from back-substituting P b = Q'y; the diagonal of
    (X'X)^-1 comes from the rows of P^-1. Raises ExactCollinearity for a
    rank-deficient design and PerfectFit when the residuals vanish.
    """
    x, y = spec.design, spec.response
    n, k = x.shape
    qr = _qr_or_collinear(x, spec.column_names)
    beta = solve_upper_triangular(qr.p, qr.q.T @ y)
    residuals = y - x @ beta
    ssr = float(residuals @ residuals)
    _check_not_perfect(ssr, y)
    sigma2 = ssr / (n - k)
    p_inv = solve_upper_triangular(qr.p, np.eye(k))
    xtx_inv_diag = np.einsum("ij,ij->i", p_inv, p_inv)
    std_errors = np.sqrt(sigma2 * xtx_inv_diag)
    t_stats = np.abs(beta) / std_errors
    if spec.has_intercept:
        centered = y - y.mean()
        sst = float(centered @ centered)
        df_model = k - 1
    else:
        sst = float(y @ y)
        df_model = k
    r2 = max(0.0, 1.0 - ssr / sst)
    # F from the sums of squares directly; the (1 - r2) form loses the
    # ratio to cancellation when r2 rounds to 1.
    f_stat = (max(sst - ssr, 0.0) / df_model) / sigma2 if df_model >= 1 else 0.0
    col_means = x.mean(axis=0)
    col_pop_variances = x.var(axis=0)
    col_sumsq = np.einsum("ij,ij->j", x, x)
    _freeze(beta, std_errors, t_stats, residuals, col_means, col_pop_variances, col_sumsq)
    return OlsFit(
        coefficients=beta,
        std_errors=std_errors,
        t_stats=t_stats,
        ssr=ssr,
        sigma2_hat=sigma2,
        r2=r2,
        f_stat=f_stat,
        residuals=residuals,
        col_means=col_means,
        col_pop_variances=col_pop_variances,
        col_sumsq=col_sumsq,
    )


def auxiliary_fit(spec: ModelSpec, i) -> AuxiliaryFit:
    """Regress design column ``i`` on all remaining columns.

    The regression keeps the intercept column as a regressor whenever the
    model has one and ``i`` is not it, in which case the total sum of
    squares is centered. For the intercept itself the regressors are the
    non-intercept columns, the total sum of squares is uncentered, and
    ``r2_aux`` is None.
    """
    i = _column_index(spec, i)
    n, k = spec.design.shape
    if k < 2:
        raise ValueError("auxiliary regression needs at least two columns")
    target = spec.design[:, i]
    others = np.delete(spec.design, i, axis=1)
    other_names = spec.column_names[:i] + spec.column_names[i + 1 :]
    qr = _qr_or_collinear(others, other_names)
    alpha = solve_upper_triangular(qr.p, qr.q.T @ target)
    resid = target - others @ alpha
    ssr = float(resid @ resid)
    is_intercept = spec.intercept_index == i
    if spec.has_intercept and not is_intercept:
        centered = target - target.mean()
        sst = float(centered @ centered)
    else:
        sst = float(target @ target)
    r2 = None if is_intercept else max(0.0, 1.0 - ssr / sst)
    return AuxiliaryFit(target_index=i, r2_aux=r2, ssr_aux=ssr, sst_aux=sst)


def orthonormal_fit(spec: ModelSpec) -> OrthonormalFit:
    """Estimate the orthonormal reference model via the thin QR.

    ``beta_o = Q'y`` and the residuals ``y - Q beta_o`` coincide with the
    original model's residuals, so sigma is recomputed here from the
    orthonormal model itself and the identity is a testable fact rather
    than a construction.
    """
    x, y = spec.design, spec.response
    n, k = x.shape
    qr = _qr_or_collinear(x, spec.column_names)
    beta_o = qr.q.T @ y
    residuals = y - qr.q @ beta_o
    ssr = float(residuals @ residuals)
    _check_not_perfect(ssr, y)
    sigma_hat = math.sqrt(ssr / (n - k))
    t_exp_o = np.abs(beta_o) / sigma_hat
    _freeze(beta_o, t_exp_o)
    return OrthonormalFit(
        beta_o=beta_o,
        t_exp_o=t_exp_o,
        p_matrix=qr.p,
        sigma_hat=sigma_hat,
    )
