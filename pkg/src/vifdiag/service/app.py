"""HTTP front end over the core library.

Endpoints accept either a builtin dataset name or an inline table, run the
same code paths as the CLI, and return the report as JSON. Library errors
map to 400 (404 for an unknown dataset name) with the message in
``detail``, naming the offending column where one is known.
"""

from __future__ import annotations

import numpy as np
from fastapi import FastAPI, HTTPException

from .. import __version__
from ..collinearity import theorem1_test
from ..datasets import BUILTIN_NAMES, NamedDataset, builtin
from ..errors import UnknownDataset, VifdiagError
from ..regression import ModelSpec, ols_fit, orthonormal_fit
from ..report import dataset_summary, fit_to_dict, report_to_dict
from .schemas import (
    DatasetDetail,
    DatasetSummary,
    DiagnoseRequest,
    DiagnoseResponse,
    FitRequest,
    FitResponse,
    ModelRequest,
)


def _table_from_request(req: ModelRequest) -> NamedDataset:
    if req.builtin is not None:
        return builtin(req.builtin)
    payload = req.data
    return NamedDataset(
        name=payload.name,
        column_names=tuple(payload.column_names),
        rows=np.array(payload.rows, dtype=float),
        provenance="request payload",
        metadata_columns=tuple(payload.metadata_columns),
    )


def _spec_from_request(req: ModelRequest) -> ModelSpec:
    return _table_from_request(req).model_spec(
        response=req.response,
        features=req.features,
        add_intercept=req.add_intercept,
    )


def _as_http_error(exc: Exception) -> HTTPException:
    status = 404 if isinstance(exc, UnknownDataset) else 400
    return HTTPException(status_code=status, detail=str(exc))


def create_app() -> FastAPI:
    app = FastAPI(
        title="vifdiag",
        version=__version__,
        description=(
            "Decides whether collinearity in a linear model is "
            "statistically troubling."
        ),
    )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.get("/datasets", response_model=list[DatasetSummary])
    def list_datasets():
        return [dataset_summary(builtin(name)) for name in BUILTIN_NAMES]

    @app.get("/datasets/{name}", response_model=DatasetDetail)
    def get_dataset(name: str):
        try:
            ds = builtin(name)
        except UnknownDataset as exc:
            raise _as_http_error(exc) from exc
        detail = dataset_summary(ds)
        detail["rows"] = [[float(v) for v in row] for row in ds.rows]
        return detail

    @app.post("/diagnose", response_model=DiagnoseResponse)
    def diagnose(req: DiagnoseRequest):
        try:
            spec = _spec_from_request(req)
            report = theorem1_test(spec, alpha=req.alpha)
        except (VifdiagError, ValueError) as exc:
            raise _as_http_error(exc) from exc
        return report_to_dict(report)

    @app.post("/fit", response_model=FitResponse)
    def fit_endpoint(req: FitRequest):
        try:
            spec = _spec_from_request(req)
            fit = ols_fit(spec)
            ofit = orthonormal_fit(spec)
        except (VifdiagError, ValueError) as exc:
            raise _as_http_error(exc) from exc
        return fit_to_dict(spec, fit, ofit)

    return app


app = create_app()
