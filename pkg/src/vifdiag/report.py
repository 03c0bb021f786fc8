"""Report rendering for the three output formats.

text-table rounds for reading (4 significant digits for estimates,
standard errors and t-statistics, 7 for the diagnostic and threshold
columns); csv and json always carry full double precision. Rendering is
deterministic: the same inputs produce byte-identical output.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass

from .collinearity import CollinearityReport
from .distributions import f_sf
from .datasets import NamedDataset
from .regression import ModelSpec, OlsFit, OrthonormalFit

FORMATS = ("text-table", "csv", "json")

SIG_ESTIMATE = 4
SIG_DIAGNOSTIC = 7

_MISSING = "-"


@dataclass(frozen=True)
class RenderedReport:
    """One rendered document: the format tag and the exact output bytes."""

    format: str
    body: bytes


def _fmt(value, sig: int) -> str:
    if value is None:
        return _MISSING
    return f"%.{sig}g" % float(value)


def _full(value) -> str:
    # repr of a float is the shortest string that round-trips exactly
    return "" if value is None else repr(float(value))


def _yesno(flag: bool) -> str:
    return "Yes" if flag else "No"


def _table(headers: list[str], rows: list[list[str]], right_from: int = 1) -> list[str]:
    """Fixed-width table lines; columns before ``right_from`` are left
    aligned (labels), the rest right aligned (numbers)."""
    widths = [
        max(len(headers[j]), *(len(r[j]) for r in rows)) if rows else len(headers[j])
        for j in range(len(headers))
    ]
    def line(cells):
        parts = [
            c.ljust(w) if j < right_from else c.rjust(w)
            for j, (c, w) in enumerate(zip(cells, widths))
        ]
        return "  ".join(parts).rstrip()
    return [line(headers)] + [line(r) for r in rows]


def _check_format(fmt: str) -> str:
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}, expected one of {FORMATS}")
    return fmt


def report_to_dict(report: CollinearityReport) -> dict:
    """Plain-data view of a report; keys mirror the dataclass fields."""
    return asdict(report)


def fit_to_dict(spec: ModelSpec, fit: OlsFit, ofit: OrthonormalFit) -> dict:
    n, k = fit.n_obs, fit.n_cols
    df_model = k - 1 if spec.has_intercept else k
    f_pvalue = f_sf(fit.f_stat, df_model, n - k) if df_model >= 1 else 1.0
    return {
        "n_obs": n,
        "n_params": k,
        "df_resid": n - k,
        "column_names": list(spec.column_names),
        "original": {
            "coefficients": [float(v) for v in fit.coefficients],
            "std_errors": [float(v) for v in fit.std_errors],
            "t_stats": [float(v) for v in fit.t_stats],
        },
        "orthonormal": {
            "beta_o": [float(v) for v in ofit.beta_o],
            "std_error": ofit.sigma_hat,
            "t_exp_o": [float(v) for v in ofit.t_exp_o],
        },
        "ssr": fit.ssr,
        "sigma2_hat": fit.sigma2_hat,
        "sigma_hat": fit.sigma_hat,
        "r2": fit.r2,
        "f_stat": fit.f_stat,
        "f_df1": df_model,
        "f_df2": n - k,
        "f_pvalue": f_pvalue,
    }


def _json_bytes(obj) -> bytes:
    return (json.dumps(obj, indent=2) + "\n").encode("utf-8")


def _csv_bytes(sections: list[tuple[list[str], list[list[str]]]]) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for pos, (headers, rows) in enumerate(sections):
        if pos:
            buf.write("\n")
        writer.writerow(headers)
        writer.writerows(rows)
    return buf.getvalue().encode("utf-8")


_DIAG_CSV_FIELDS = (
    "index",
    "name",
    "vif",
    "tvif",
    "stewart_s2",
    "c0",
    "c1",
    "c2",
    "c3",
    "stewart_threshold",
    "t_exp_original",
    "t_exp_orthonormal",
    "significant_original",
    "significant_orthonormal",
    "case_label",
    "theorem1_affects",
    "zero_orthonormal_coefficient",
)


def _diag_csv(report: CollinearityReport) -> bytes:
    rows = []
    for d in report.per_variable:
        record = asdict(d)
        cells = []
        for name in _DIAG_CSV_FIELDS:
            value = record[name]
            if isinstance(value, bool):
                cells.append("true" if value else "false")
            elif isinstance(value, float):
                cells.append(_full(value))
            elif value is None:
                cells.append("")
            else:
                cells.append(str(value))
        rows.append(cells)
    summary_headers = [
        "alpha",
        "t_critical",
        "global_f",
        "global_f_pvalue",
        "overall_troubling",
        "n_obs",
        "n_params",
        "intercept_index",
    ]
    summary = [[
        _full(report.alpha),
        _full(report.t_critical),
        _full(report.global_f),
        _full(report.global_f_pvalue),
        "true" if report.overall_troubling else "false",
        str(report.n_obs),
        str(report.n_params),
        "" if report.intercept_index is None else str(report.intercept_index),
    ]]
    return _csv_bytes([
        (list(_DIAG_CSV_FIELDS), rows),
        (summary_headers, summary),
    ])


def _diag_text(report: CollinearityReport) -> bytes:
    n, k = report.n_obs, report.n_params
    affected = sum(1 for d in report.per_variable if d.theorem1_affects)
    head = [
        f"Collinearity diagnosis: n = {n}, k = {k}, residual df = {n - k}",
        f"alpha = {_fmt(report.alpha, SIG_ESTIMATE)}, "
        f"t_critical = {_fmt(report.t_critical, SIG_DIAGNOSTIC)}",
        f"global F = {_fmt(report.global_f, SIG_ESTIMATE)}, "
        f"p-value = {_fmt(report.global_f_pvalue, SIG_ESTIMATE)}",
        "",
    ]
    headers = [
        "variable",
        "vif",
        "tvif",
        "s2",
        "c0",
        "c1",
        "c2",
        "c3",
        "s2_threshold",
        "t_exp",
        "t_orth",
        "case",
        "affected",
    ]
    rows = []
    for d in report.per_variable:
        rows.append([
            d.name,
            _fmt(d.vif, SIG_DIAGNOSTIC),
            _fmt(d.tvif, SIG_DIAGNOSTIC),
            _fmt(d.stewart_s2, SIG_DIAGNOSTIC),
            _fmt(d.c0, SIG_DIAGNOSTIC),
            _fmt(d.c1, SIG_DIAGNOSTIC),
            _fmt(d.c2, SIG_DIAGNOSTIC),
            _fmt(d.c3, SIG_DIAGNOSTIC),
            _fmt(d.stewart_threshold, SIG_DIAGNOSTIC),
            _fmt(d.t_exp_original, SIG_ESTIMATE),
            _fmt(d.t_exp_orthonormal, SIG_ESTIMATE),
            d.case_label,
            _yesno(d.theorem1_affects),
        ])
    tail = [
        "",
        (
            f"verdict: multicollinearity is statistically troubling "
            f"({affected} of {k} columns affected)"
            if report.overall_troubling
            else f"verdict: multicollinearity is not statistically troubling "
            f"(0 of {k} columns affected)"
        ),
    ]
    lines = head + _table(headers, rows) + tail
    return ("\n".join(lines) + "\n").encode("utf-8")


def render_diagnose(report: CollinearityReport, fmt: str = "text-table") -> RenderedReport:
    """Render a collinearity report in the requested format."""
    fmt = _check_format(fmt)
    if fmt == "json":
        body = _json_bytes(report_to_dict(report))
    elif fmt == "csv":
        body = _diag_csv(report)
    else:
        body = _diag_text(report)
    return RenderedReport(format=fmt, body=body)


def _fit_text(spec: ModelSpec, fit: OlsFit, ofit: OrthonormalFit) -> bytes:
    info = fit_to_dict(spec, fit, ofit)
    n, k = fit.n_obs, fit.n_cols
    lines = [f"OLS fit: n = {n}, k = {k}, residual df = {n - k}", ""]
    headers = ["variable", "estimate", "std_error", "t_exp"]
    original = [
        [
            name,
            _fmt(fit.coefficients[i], SIG_ESTIMATE),
            _fmt(fit.std_errors[i], SIG_ESTIMATE),
            _fmt(fit.t_stats[i], SIG_ESTIMATE),
        ]
        for i, name in enumerate(spec.column_names)
    ]
    orthonormal = [
        [
            name,
            _fmt(ofit.beta_o[i], SIG_ESTIMATE),
            _fmt(ofit.sigma_hat, SIG_ESTIMATE),
            _fmt(ofit.t_exp_o[i], SIG_ESTIMATE),
        ]
        for i, name in enumerate(spec.column_names)
    ]
    lines += ["original model"] + _table(headers, original)
    lines += ["", "orthonormal reference model"] + _table(headers, orthonormal)
    lines += [
        "",
        f"sigma2_hat = {_fmt(fit.sigma2_hat, SIG_ESTIMATE)} "
        f"(sigma_hat = {_fmt(fit.sigma_hat, SIG_ESTIMATE)})",
        f"R2 = {_fmt(fit.r2, SIG_ESTIMATE)}",
        f"F = {_fmt(fit.f_stat, SIG_ESTIMATE)} "
        f"on ({info['f_df1']}, {info['f_df2']}) df, "
        f"p-value = {_fmt(info['f_pvalue'], SIG_ESTIMATE)}",
    ]
    return ("\n".join(lines) + "\n").encode("utf-8")


def _fit_csv(spec: ModelSpec, fit: OlsFit, ofit: OrthonormalFit) -> bytes:
    info = fit_to_dict(spec, fit, ofit)
    headers = [
        "name",
        "estimate",
        "std_error",
        "t_exp",
        "beta_o",
        "std_error_orthonormal",
        "t_exp_orthonormal",
    ]
    rows = [
        [
            name,
            _full(fit.coefficients[i]),
            _full(fit.std_errors[i]),
            _full(fit.t_stats[i]),
            _full(ofit.beta_o[i]),
            _full(ofit.sigma_hat),
            _full(ofit.t_exp_o[i]),
        ]
        for i, name in enumerate(spec.column_names)
    ]
    summary_headers = [
        "n_obs",
        "n_params",
        "df_resid",
        "ssr",
        "sigma2_hat",
        "r2",
        "f_stat",
        "f_df1",
        "f_df2",
        "f_pvalue",
    ]
    summary = [[
        str(info["n_obs"]),
        str(info["n_params"]),
        str(info["df_resid"]),
        _full(info["ssr"]),
        _full(info["sigma2_hat"]),
        _full(info["r2"]),
        _full(info["f_stat"]),
        str(info["f_df1"]),
        str(info["f_df2"]),
        _full(info["f_pvalue"]),
    ]]
    return _csv_bytes([(headers, rows), (summary_headers, summary)])


def render_fit(
    spec: ModelSpec, fit: OlsFit, ofit: OrthonormalFit, fmt: str = "text-table"
) -> RenderedReport:
    """Render estimates of the original and orthonormal models."""
    fmt = _check_format(fmt)
    if fmt == "json":
        body = _json_bytes(fit_to_dict(spec, fit, ofit))
    elif fmt == "csv":
        body = _fit_csv(spec, fit, ofit)
    else:
        body = _fit_text(spec, fit, ofit)
    return RenderedReport(format=fmt, body=body)


def dataset_summary(ds: NamedDataset) -> dict:
    return {
        "name": ds.name,
        "n_rows": ds.n_rows,
        "column_names": list(ds.column_names),
        "data_columns": list(ds.data_columns()),
        "metadata_columns": list(ds.metadata_columns),
        "provenance": ds.provenance,
    }


def render_datasets(datasets: list[NamedDataset], fmt: str = "text-table") -> RenderedReport:
    """Render the builtin-dataset listing (text-table or json)."""
    fmt = _check_format(fmt)
    ordered = sorted(datasets, key=lambda d: d.name)
    if fmt == "json":
        return RenderedReport(
            format=fmt,
            body=_json_bytes([dataset_summary(d) for d in ordered]),
        )
    if fmt == "csv":
        raise ValueError("dataset listing supports text-table and json only")
    headers = ["name", "rows", "data columns", "provenance"]
    rows = [
        [
            d.name,
            str(d.n_rows),
            f"{len(d.data_columns())} ({', '.join(d.data_columns())})",
            d.provenance,
        ]
        for d in ordered
    ]
    lines = _table(headers, rows, right_from=len(headers))
    return RenderedReport(format=fmt, body=("\n".join(lines) + "\n").encode("utf-8"))
