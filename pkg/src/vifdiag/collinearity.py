"""Collinearity diagnostics: VIF, TVIF, Stewart's index, the threshold
families c0 to c3, and the decision test that says whether the degree of
near-multicollinearity actually affects the model's statistical analysis.

The key quantity is the redefined variance inflation factor TVIF, the
reciprocal of the auxiliary regression's residual sum of squares. Unlike
the classical VIF it is defined for the intercept as well, and it admits
thresholds (c0, c3) expressed on its own scale:

* c0(i): the TVIF level above which the original model fails to reject
  coefficient i at the chosen significance level;
* c3(i): the TVIF level above which the orthonormal reference model does
  reject coefficient i.

A variable's inference is troubled by collinearity exactly when its TVIF
exceeds both, i.e. the original test fails where the orthonormal
counterpart succeeds. All threshold comparisons are strict; ties resolve
to "not affected".
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .distributions import f_sf, t_quantile
from .errors import (
    ExactCollinearity,
    NotPositiveDefinite,
    UndefinedForIntercept,
    ZeroOrthonormalCoefficient,
    ZeroTStatistic,
)
from .linalg import spd_solve
from .regression import (
    AuxiliaryFit,
    ModelSpec,
    OlsFit,
    OrthonormalFit,
    auxiliary_fit,
    ols_fit,
    orthonormal_fit,
)

__all__ = [
    "ALPHA_DEFAULT",
    "OrthonormalFit",
    "VariableDiagnostic",
    "CollinearityReport",
    "vif",
    "tvif",
    "stewart_s2",
    "bound_c0",
    "bound_c1",
    "bound_c2",
    "bound_c3",
    "stewart_threshold",
    "classify_case",
    "theorem1_test",
]

ALPHA_DEFAULT = 0.05

# The two independent computations of TVIF must agree this closely, or the
# column is treated as collinear beyond numeric resolution.
TVIF_ROUTE_REL_TOL = 1e-8


@dataclass(frozen=True)
class VariableDiagnostic:
    """Every diagnostic and verdict for one design column.

    ``vif``, ``c1`` and ``c2`` are None for the intercept, which has no
    classical VIF. ``c2``, ``c3`` and ``stewart_threshold`` are None when
    the orthonormal coefficient is numerically zero, in which case
    ``zero_orthonormal_coefficient`` is set and the variable counts as
    not affected (the orthonormal model cannot reject a zero).
    """

    index: int
    name: str
    vif: float | None
    tvif: float
    stewart_s2: float
    c0: float
    c1: float | None
    c2: float | None
    c3: float | None
    stewart_threshold: float | None
    t_exp_original: float
    t_exp_orthonormal: float
    significant_original: bool
    significant_orthonormal: bool
    case_label: str
    theorem1_affects: bool
    zero_orthonormal_coefficient: bool = False


@dataclass(frozen=True)
class CollinearityReport:
    """Per-variable diagnostics plus the model-level context."""

    per_variable: tuple[VariableDiagnostic, ...]
    alpha: float
    t_critical: float
    global_f: float
    global_f_pvalue: float
    overall_troubling: bool
    n_obs: int
    n_params: int
    intercept_index: int | None


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie strictly between 0 and 1, got {alpha!r}")
    return alpha


def _check_t_crit(t_crit: float) -> float:
    t_crit = float(t_crit)
    if not t_crit > 0.0:
        raise ValueError(f"t_crit must be positive, got {t_crit!r}")
    return t_crit


def vif(aux: AuxiliaryFit) -> float:
    """Classical variance inflation factor 1 / (1 - r2_aux).

    Undefined for the intercept column (its auxiliary regression has no
    coefficient of determination).
    """
    if aux.r2_aux is None:
        raise UndefinedForIntercept(
            "the intercept column has no classical VIF"
        )
    if aux.r2_aux >= 1.0:
        raise ExactCollinearity(
            f"auxiliary regression for column {aux.target_index} explains it completely"
        )
    # sst/ssr equals 1/(1 - r2) exactly but avoids cancellation near
    # r2 = 1; the floor absorbs roundoff when ssr exceeds sst by ulps
    return max(1.0, aux.sst_aux / aux.ssr_aux)


def tvif(spec: ModelSpec, i) -> float:
    """Redefined variance inflation factor for column ``i``.

    Computed two independent ways: as the reciprocal of the Schur
    complement of the normal equations (the direct matrix route) and as
    the reciprocal of the auxiliary regression's residual sum of squares.
    The routes must agree within ``TVIF_ROUTE_REL_TOL`` relative; the
    direct value is returned. Defined for every column, intercept
    included.
    """
    aux = auxiliary_fit(spec, i)
    if aux.ssr_aux <= 0.0:
        raise ExactCollinearity(
            f"auxiliary residuals for column {spec.column_names[aux.target_index]!r} vanish"
        )
    via_ssr = 1.0 / aux.ssr_aux
    i = aux.target_index
    target = spec.design[:, i]
    others = np.delete(spec.design, i, axis=1)
    gram = others.T @ others
    cross = others.T @ target
    try:
        solved = spd_solve(gram, cross)
    except NotPositiveDefinite as exc:
        raise ExactCollinearity(
            f"regressors for column {spec.column_names[i]!r} are exactly collinear"
        ) from exc
    schur = float(target @ target - cross @ solved)
    if schur <= 0.0:
        raise ExactCollinearity(
            f"normal equations for column {spec.column_names[i]!r} are numerically singular"
        )
    direct = 1.0 / schur
    if abs(direct - via_ssr) > TVIF_ROUTE_REL_TOL * via_ssr:
        raise ExactCollinearity(
            f"tvif routes disagree for column {spec.column_names[i]!r}; "
            "the column is collinear beyond numeric resolution"
        )
    return direct


def stewart_s2(spec: ModelSpec, i) -> float:
    """Stewart's collinearity index: tvif(i) times the squared length of
    column i. For non-intercept columns it decomposes as
    VIF(i) + n * mean(X_i)^2 / SSR_i, so it equals VIF for a zero-mean
    column and equals TVIF for a unit-length one."""
    value = tvif(spec, i)
    i = int(i)
    col = spec.design[:, i]
    return value * float(col @ col)


def bound_c0(fit: OlsFit, i, t_crit: float) -> float:
    """TVIF level above which the original model fails to reject
    coefficient i: (beta_i / (sigma * t_crit))^2."""
    t_crit = _check_t_crit(t_crit)
    return float(fit.coefficients[int(i)] / (fit.sigma_hat * t_crit)) ** 2


def bound_c1(fit: OlsFit, i, t_crit: float) -> float:
    """VIF level above which the traditional orthogonal counterpart would
    reject where the original model does not: (t_crit / t_exp)^2.

    Meaningful for non-intercept columns only (callers enforce that);
    raises ZeroTStatistic at t_exp = 0.
    """
    t_crit = _check_t_crit(t_crit)
    t_exp = float(fit.t_stats[int(i)])
    if t_exp == 0.0:
        raise ZeroTStatistic(f"t statistic for column {int(i)} is zero")
    return (t_crit / t_exp) ** 2


def bound_c2(fit: OlsFit, ofit: OrthonormalFit, i, t_crit: float,
             *, centered: bool = True) -> float:
    """VIF level above which the orthonormal reference model rejects
    coefficient i: (t_crit / beta_o_i)^2 * var(beta_i) * n * var(X_i).

    Meaningful for non-intercept columns only (callers enforce that).
    ``centered`` must state whether the model contains an intercept; a
    model without one measures VIF against the raw sum of squares of the
    column rather than n * var(X_i), and c2 scales the same way so that
    VIF > c2 remains equivalent to TVIF > c3.
    """
    i = int(i)
    if centered:
        scale = fit.n_obs * float(fit.col_pop_variances[i])
    else:
        scale = float(fit.col_sumsq[i])
    return bound_c3(fit, ofit, i, t_crit) * scale


def bound_c3(fit: OlsFit, ofit: OrthonormalFit, i, t_crit: float) -> float:
    """TVIF level above which the orthonormal reference model rejects
    coefficient i: (t_crit / beta_o_i)^2 * var(beta_i). Defined for every
    column, intercept included; raises ZeroOrthonormalCoefficient when
    beta_o_i is numerically zero."""
    t_crit = _check_t_crit(t_crit)
    i = int(i)
    beta_o = float(ofit.beta_o[i])
    if beta_o == 0.0:
        raise ZeroOrthonormalCoefficient(
            f"orthonormal coefficient for column {i} is numerically zero"
        )
    return (t_crit / beta_o) ** 2 * float(fit.std_errors[i]) ** 2


def stewart_threshold(fit: OlsFit, ofit: OrthonormalFit, i, t_crit: float) -> float:
    """Troubling level for Stewart's index: c3(i) times the squared length
    of column i, so S2_i exceeds it exactly when TVIF_i exceeds c3(i)."""
    i = int(i)
    return bound_c3(fit, ofit, i, t_crit) * float(fit.col_sumsq[i])


def classify_case(significant_original: bool, significant_orthonormal: bool) -> str:
    """Classify one variable by its two significance tests.

    A: the original model already rejects, collinearity is not masking
    anything. B1: neither model rejects, the variable is plain
    nonsignificant. B2: only the orthonormal reference rejects, so the
    degree of collinearity is what blocks rejection in the original model.
    """
    if significant_original:
        return "A"
    return "B2" if significant_orthonormal else "B1"


def theorem1_test(spec: ModelSpec, alpha: float = ALPHA_DEFAULT) -> CollinearityReport:
    """Run the full decision test on every design column.

    A variable is flagged as affected exactly when
    ``tvif(i) > max(c0(i), c3(i))``, which is algebraically the statement
    that the original t-test fails to reject while the orthonormal
    reference model rejects. The report carries every intermediate
    diagnostic so the verdict can be audited.
    """
    alpha = _check_alpha(alpha)
    if spec.n_cols < 2:
        raise ValueError("collinearity diagnosis needs at least two columns")
    fit = ols_fit(spec)
    ofit = orthonormal_fit(spec)
    n, k = spec.n_obs, spec.n_cols
    t_crit = t_quantile(1.0 - alpha / 2.0, n - k)
    diagnostics = []
    for i in range(k):
        is_intercept = spec.intercept_index == i
        aux = auxiliary_fit(spec, i)
        tv = tvif(spec, i)
        s2 = tv * float(fit.col_sumsq[i])
        vif_value = None if is_intercept else vif(aux)
        c0 = bound_c0(fit, i, t_crit)
        t_exp = float(fit.t_stats[i])
        c1 = None
        if not is_intercept and t_exp > 0.0:
            c1 = bound_c1(fit, i, t_crit)
        zero_orth = float(ofit.beta_o[i]) == 0.0
        c2 = c3 = threshold = None
        if not zero_orth:
            c3 = bound_c3(fit, ofit, i, t_crit)
            threshold = stewart_threshold(fit, ofit, i, t_crit)
            if not is_intercept:
                c2 = bound_c2(fit, ofit, i, t_crit,
                              centered=spec.has_intercept)
        sig_orig = t_exp > t_crit
        sig_orth = float(ofit.t_exp_o[i]) > t_crit
        affects = (not zero_orth) and tv > max(c0, c3)
        diagnostics.append(
            VariableDiagnostic(
                index=i,
                name=spec.column_names[i],
                vif=vif_value,
                tvif=tv,
                stewart_s2=s2,
                c0=c0,
                c1=c1,
                c2=c2,
                c3=c3,
                stewart_threshold=threshold,
                t_exp_original=t_exp,
                t_exp_orthonormal=float(ofit.t_exp_o[i]),
                significant_original=sig_orig,
                significant_orthonormal=sig_orth,
                case_label=classify_case(sig_orig, sig_orth),
                theorem1_affects=affects,
                zero_orthonormal_coefficient=zero_orth,
            )
        )
    df_model = k - 1 if spec.has_intercept else k
    pvalue = f_sf(fit.f_stat, df_model, n - k) if df_model >= 1 else 1.0
    return CollinearityReport(
        per_variable=tuple(diagnostics),
        alpha=alpha,
        t_critical=t_crit,
        global_f=fit.f_stat,
        global_f_pvalue=pvalue,
        overall_troubling=any(d.theorem1_affects for d in diagnostics),
        n_obs=n,
        n_params=k,
        intercept_index=spec.intercept_index,
    )
