import numpy as np
import pytest

from vifdiag import (
    ExactCollinearity,
    InsufficientData,
    ModelSpec,
    PerfectFit,
    auxiliary_fit,
    ols_fit,
    orthonormal_fit,
)


def toy_spec():
    # small hand-checkable design: intercept, x, x with one bumped entry
    x2 = np.array([1.0, 2.0, 3.0, 4.0, 5.0])
    x3 = np.array([1.0, 2.0, 3.0, 4.0, 6.0])
    y = np.array([2.1, 3.9, 6.2, 8.0, 9.8])
    design = np.column_stack([np.ones(5), x2, x3])
    return ModelSpec(design, y, ("const", "x2", "x3"), intercept_index=0)


def test_model_spec_validation():
    design = np.ones((5, 2))
    design[:, 1] = np.arange(5.0)
    y = np.arange(5.0)
    with pytest.raises(ValueError):
        ModelSpec(design, y[:4], ("a", "b"))
    with pytest.raises(ValueError):
        ModelSpec(design, y, ("a",))
    with pytest.raises(ValueError):
        ModelSpec(design, y, ("a", "a"))
    with pytest.raises(ValueError):
        ModelSpec(design, y, ("a", "b"), intercept_index=5)
    with pytest.raises(ValueError):
        # flagged column is not constant
        ModelSpec(design, y, ("a", "b"), intercept_index=1)


def test_model_spec_requires_n_greater_than_k():
    with pytest.raises(InsufficientData):
        ModelSpec(np.eye(3), np.ones(3), ("a", "b", "c"))


def test_ols_matches_normal_equations_oracle():
    spec = toy_spec()
    fit = ols_fit(spec)
    x, y = spec.design, spec.response
    beta_oracle, *_ = np.linalg.lstsq(x, y, rcond=None)
    np.testing.assert_allclose(fit.coefficients, beta_oracle, rtol=1e-10)
    xtx_inv = np.linalg.inv(x.T @ x)
    se_oracle = np.sqrt(fit.sigma2_hat * np.diag(xtx_inv))
    np.testing.assert_allclose(fit.std_errors, se_oracle, rtol=1e-9)
    np.testing.assert_allclose(fit.t_stats, np.abs(fit.coefficients) / fit.std_errors)
    assert fit.ssr == pytest.approx(float(fit.residuals @ fit.residuals))
    assert 0.0 <= fit.r2 <= 1.0


def test_ols_column_statistics_conventions():
    spec = toy_spec()
    fit = ols_fit(spec)
    x = spec.design
    np.testing.assert_allclose(fit.col_means, x.mean(axis=0))
    # population variance: n * var equals the centered sum of squares exactly
    centered = x - x.mean(axis=0)
    np.testing.assert_allclose(
        spec.n_obs * fit.col_pop_variances,
        (centered**2).sum(axis=0),
        rtol=1e-12,
    )
    np.testing.assert_allclose(fit.col_sumsq, (x**2).sum(axis=0), rtol=1e-15)


def test_ols_without_intercept_uses_uncentered_sst():
    rng = np.random.default_rng(5)
    x = rng.normal(size=(12, 2))
    y = x @ np.array([2.0, -1.0]) + rng.normal(size=12)
    spec = ModelSpec(x, y, ("a", "b"))
    fit = ols_fit(spec)
    sst = float(y @ y)
    assert fit.r2 == pytest.approx(1.0 - fit.ssr / sst)


def test_ols_exactly_collinear_design():
    x2 = np.arange(6.0)
    design = np.column_stack([np.ones(6), x2, 2.0 * x2 + 1.0])
    spec = ModelSpec(design, np.random.default_rng(1).normal(size=6),
                     ("const", "x", "2x+1"), intercept_index=0)
    with pytest.raises(ExactCollinearity) as exc:
        ols_fit(spec)
    assert "2x+1" in str(exc.value)


def test_ols_perfect_fit_rejected():
    x = np.column_stack([np.ones(6), np.arange(6.0)])
    y = x @ np.array([1.0, 1.0])
    spec = ModelSpec(x, y, ("const", "x"), intercept_index=0)
    with pytest.raises(PerfectFit):
        ols_fit(spec)
    with pytest.raises(PerfectFit):
        orthonormal_fit(spec)


def test_auxiliary_fit_oracle():
    spec = toy_spec()
    aux = auxiliary_fit(spec, 1)
    x, target = np.delete(spec.design, 1, axis=1), spec.design[:, 1]
    alpha = np.linalg.solve(x.T @ x, x.T @ target)
    resid = target - x @ alpha
    assert aux.ssr_aux == pytest.approx(float(resid @ resid), rel=1e-10)
    centered = target - target.mean()
    sst = float(centered @ centered)
    assert aux.sst_aux == pytest.approx(sst)
    assert aux.r2_aux == pytest.approx(1.0 - aux.ssr_aux / sst)
    assert aux.target_index == 1


def test_auxiliary_fit_intercept_has_no_r2():
    aux = auxiliary_fit(toy_spec(), 0)
    assert aux.r2_aux is None
    # uncentered total sums of squares for the constant column of ones
    assert aux.sst_aux == pytest.approx(5.0)
    assert aux.ssr_aux > 0.0


def test_auxiliary_fit_orthogonal_columns():
    x2 = np.array([-2.0, -1.0, 0.0, 1.0, 2.0])
    x3 = np.array([1.0, -1.0, 0.0, -1.0, 1.0])
    design = np.column_stack([np.ones(5), x2, x3])
    y = np.array([0.0, 1.0, -1.0, 2.0, 0.5])
    spec = ModelSpec(design, y, ("const", "a", "b"), intercept_index=0)
    aux = auxiliary_fit(spec, 1)
    assert aux.r2_aux == pytest.approx(0.0, abs=1e-14)
    assert aux.ssr_aux == pytest.approx(aux.sst_aux)


def test_auxiliary_fit_bad_index():
    with pytest.raises(ValueError):
        auxiliary_fit(toy_spec(), 3)


def test_orthonormal_fit_shares_residuals():
    spec = toy_spec()
    fit = ols_fit(spec)
    ofit = orthonormal_fit(spec)
    resid_o = spec.response - (spec.design @ np.linalg.solve(
        ofit.p_matrix, ofit.beta_o))
    np.testing.assert_allclose(resid_o, fit.residuals, atol=1e-10)
    assert ofit.sigma_hat == pytest.approx(fit.sigma_hat, rel=1e-12)
    np.testing.assert_allclose(
        ofit.t_exp_o, np.abs(ofit.beta_o) / ofit.sigma_hat, rtol=1e-12
    )


def test_orthonormal_fit_on_orthonormal_design_is_identity():
    # X with orthonormal columns and positive-diagonal P means P = I,
    # so beta_o must equal the original coefficients
    n = 9
    x = np.eye(n)[:, :3]
    y = np.array([1.0, 2.0, 3.0, 0.5, -0.5, 0.25, -0.25, 0.1, -0.1])
    spec = ModelSpec(x, y, ("e1", "e2", "e3"))
    fit = ols_fit(spec)
    ofit = orthonormal_fit(spec)
    np.testing.assert_allclose(ofit.beta_o, fit.coefficients, atol=1e-14)
    np.testing.assert_allclose(ofit.p_matrix, np.eye(3), atol=1e-14)


def test_results_are_frozen():
    fit = ols_fit(toy_spec())
    with pytest.raises(ValueError):
        fit.coefficients[0] = 0.0
    with pytest.raises(Exception):
        fit.ssr = 0.0
