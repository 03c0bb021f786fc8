"""Request and response models for the HTTP service.

Response models mirror the core dataclasses field for field, so a JSON
body from the service and one rendered by the CLI json format agree on
names and nesting.
"""

from __future__ import annotations

from pydantic import BaseModel, Field, model_validator

from ..collinearity import ALPHA_DEFAULT


class TablePayload(BaseModel):
    """Inline numeric table: header names plus rows of equal length."""

    column_names: list[str]
    rows: list[list[float]]
    name: str = "request"
    metadata_columns: list[str] = ["Year"]


class ModelRequest(BaseModel):
    """Where the data comes from and how to assemble the regression."""

    data: TablePayload | None = None
    builtin: str | None = None
    response: str
    features: list[str] | None = None
    add_intercept: bool = True

    @model_validator(mode="after")
    def _exactly_one_source(self):
        if (self.data is None) == (self.builtin is None):
            raise ValueError("provide exactly one of 'data' and 'builtin'")
        return self


class DiagnoseRequest(ModelRequest):
    alpha: float = Field(default=ALPHA_DEFAULT, gt=0.0, lt=1.0)


class FitRequest(ModelRequest):
    pass


class VariableDiagnosticOut(BaseModel):
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
    zero_orthonormal_coefficient: bool


class DiagnoseResponse(BaseModel):
    per_variable: list[VariableDiagnosticOut]
    alpha: float
    t_critical: float
    global_f: float
    global_f_pvalue: float
    overall_troubling: bool
    n_obs: int
    n_params: int
    intercept_index: int | None


class OriginalEstimates(BaseModel):
    coefficients: list[float]
    std_errors: list[float]
    t_stats: list[float]


class OrthonormalEstimates(BaseModel):
    beta_o: list[float]
    std_error: float
    t_exp_o: list[float]


class FitResponse(BaseModel):
    n_obs: int
    n_params: int
    df_resid: int
    column_names: list[str]
    original: OriginalEstimates
    orthonormal: OrthonormalEstimates
    ssr: float
    sigma2_hat: float
    sigma_hat: float
    r2: float
    f_stat: float
    f_df1: int
    f_df2: int
    f_pvalue: float


class DatasetSummary(BaseModel):
    name: str
    n_rows: int
    column_names: list[str]
    data_columns: list[str]
    metadata_columns: list[str]
    provenance: str


class DatasetDetail(DatasetSummary):
    rows: list[list[float]]
