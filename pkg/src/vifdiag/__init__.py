"""Decide whether collinearity in a linear model is statistically troubling.

The package fits a regression twice, once on the raw design and once on an
orthonormalized copy with identical fitted values, then compares a rescaled
variance inflation factor against coefficient-specific thresholds. A
coefficient is flagged only when collinearity alone moves it from
significant to insignificant.
"""

from .collinearity import (
    ALPHA_DEFAULT,
    CollinearityReport,
    VariableDiagnostic,
    bound_c0,
    bound_c1,
    bound_c2,
    bound_c3,
    classify_case,
    stewart_s2,
    stewart_threshold,
    theorem1_test,
    tvif,
    vif,
)
from .datasets import (
    BUILTIN_NAMES,
    INTERCEPT_NAME,
    NamedDataset,
    builtin,
    read_csv,
    read_table,
    write_csv,
)
from .distributions import f_sf, reg_inc_beta, t_cdf, t_quantile
from .errors import (
    ExactCollinearity,
    InsufficientData,
    MissingColumn,
    NonNumericCell,
    NotPositiveDefinite,
    ParseError,
    PerfectFit,
    RankDeficient,
    SingularTriangular,
    TooFewRows,
    UndefinedForIntercept,
    UnknownDataset,
    VifdiagError,
    ZeroOrthonormalCoefficient,
    ZeroTStatistic,
)
from .linalg import QrResult, qr_decompose, solve_upper_triangular, spd_solve
from .regression import (
    AuxiliaryFit,
    ModelSpec,
    OlsFit,
    OrthonormalFit,
    auxiliary_fit,
    ols_fit,
    orthonormal_fit,
)
from .report import (
    FORMATS,
    RenderedReport,
    fit_to_dict,
    render_datasets,
    render_diagnose,
    render_fit,
    report_to_dict,
)

__version__ = "0.1.0"

__all__ = [
    "ALPHA_DEFAULT",
    "AuxiliaryFit",
    "BUILTIN_NAMES",
    "CollinearityReport",
    "ExactCollinearity",
    "FORMATS",
    "INTERCEPT_NAME",
    "InsufficientData",
    "MissingColumn",
    "ModelSpec",
    "NamedDataset",
    "NonNumericCell",
    "NotPositiveDefinite",
    "OlsFit",
    "OrthonormalFit",
    "ParseError",
    "PerfectFit",
    "QrResult",
    "RankDeficient",
    "RenderedReport",
    "SingularTriangular",
    "TooFewRows",
    "UndefinedForIntercept",
    "UnknownDataset",
    "VariableDiagnostic",
    "VifdiagError",
    "ZeroOrthonormalCoefficient",
    "ZeroTStatistic",
    "auxiliary_fit",
    "bound_c0",
    "bound_c1",
    "bound_c2",
    "bound_c3",
    "builtin",
    "classify_case",
    "f_sf",
    "fit_to_dict",
    "ols_fit",
    "orthonormal_fit",
    "qr_decompose",
    "read_csv",
    "read_table",
    "reg_inc_beta",
    "render_datasets",
    "render_diagnose",
    "render_fit",
    "report_to_dict",
    "solve_upper_triangular",
    "spd_solve",
    "stewart_s2",
    "stewart_threshold",
    "t_cdf",
    "t_quantile",
    "theorem1_test",
    "tvif",
    "vif",
    "__version__",
]
