"""Builtin example datasets, CSV ingestion, and model assembly.

Two classic collinearity-demonstration tables ship with the package. Both
are stored at their printed precision. Year columns are metadata: they are
never selected as regressors by default, though an explicit feature list
may still name them.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    MissingColumn,
    NonNumericCell,
    ParseError,
    TooFewRows,
    UnknownDataset,
)
from .linalg import as_matrix
from .regression import ModelSpec

INTERCEPT_NAME = "const"

_WISSEL_ROWS = (
    (1996, 3.80510, 4.7703, 4.8786, 808.23),
    (1997, 3.94580, 4.7784, 5.0510, 798.03),
    (1998, 4.05790, 4.9348, 5.3620, 806.12),
    (1999, 4.19130, 5.0998, 5.5585, 865.65),
    (2000, 4.35850, 5.2907, 5.8425, 997.30),
    (2001, 4.54530, 5.4335, 6.1523, 1140.70),
    (2002, 4.81490, 5.6194, 6.5206, 1253.40),
    (2003, 5.12860, 5.8318, 6.9151, 1324.80),
    (2004, 5.61510, 6.1258, 7.4230, 1420.50),
    (2005, 6.22490, 6.4386, 7.8024, 1532.10),
    (2006, 6.78640, 6.7394, 8.4297, 1717.50),
    (2007, 7.49440, 6.9104, 8.7241, 1867.20),
    (2008, 8.39930, 7.0993, 8.8819, 1974.10),
    (2009, 9.39510, 7.2953, 9.1636, 2078.00),
    (2010, 10.68000, 7.5614, 9.7272, 2191.30),
    (2011, 12.07100, 7.8036, 10.3010, 2284.90),
    (2012, 13.44821, 8.0441, 10.9830, 2387.50),
)

_KLEIN_GOLDBERGER_ROWS = (
    (1936, 62.8, 43.41, 17.1, 3.96),
    (1937, 65, 46.44, 18.65, 5.48),
    (1938, 63.9, 44.35, 17.09, 4.37),
    (1939, 67.5, 47.82, 19.28, 4.51),
    (1940, 71.3, 51.02, 23.24, 4.88),
    (1941, 76.6, 58.71, 28.11, 6.37),
    (1945, 86.3, 87.69, 30.29, 8.96),
    (1946, 95.7, 76.73, 28.26, 9.76),
    (1947, 98.3, 75.91, 27.91, 9.31),
    (1948, 100.3, 77.62, 32.3, 9.85),
    (1949, 103.2, 78.01, 31.39, 7.21),
    (1950, 108.9, 83.57, 35.61, 7.39),
    (1951, 108.5, 90.59, 37.58, 7.98),
    (1952, 111.4, 95.47, 35.17, 7.42),
)


@dataclass(frozen=True)
class NamedDataset:
    """A labeled numeric table plus a provenance note.

    ``rows`` holds the full table, metadata columns included, one row per
    record. ``metadata_columns`` names columns (such as years) that are
    carried along but never regressed by default.
    """

    name: str
    column_names: tuple[str, ...]
    rows: np.ndarray
    provenance: str
    metadata_columns: tuple[str, ...] = ("Year",)

    def __post_init__(self):
        rows = as_matrix(self.rows, name="rows")
        names = tuple(str(s) for s in self.column_names)
        if rows.shape[1] != len(names):
            raise ValueError(
                f"{len(names)} column names for {rows.shape[1]} columns"
            )
        if len(set(names)) != len(names):
            raise ValueError("column names must be unique")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "column_names", names)
        object.__setattr__(self, "metadata_columns", tuple(self.metadata_columns))

    @property
    def n_rows(self) -> int:
        return self.rows.shape[0]

    def data_columns(self) -> tuple[str, ...]:
        """Column names that are eligible as response or features."""
        skip = {m.lower() for m in self.metadata_columns}
        return tuple(c for c in self.column_names if c.lower() not in skip)

    def column(self, name: str) -> np.ndarray:
        if name not in self.column_names:
            raise MissingColumn(name)
        return self.rows[:, self.column_names.index(name)]

    def model_spec(
        self,
        response: str,
        features=None,
        add_intercept: bool = True,
    ) -> ModelSpec:
        """Assemble a regression problem from named columns.

        ``features`` may be an explicit sequence of column names (kept in
        the given order, metadata columns allowed) or None / "all-others",
        which selects every non-metadata column except the response. With
        ``add_intercept`` a constant column named "const" is prepended and
        flagged as the intercept.
        """
        y = self.column(response)
        if features is None or features == "all-others":
            chosen = tuple(c for c in self.data_columns() if c != response)
        else:
            chosen = tuple(str(f) for f in features)
            if response in chosen:
                raise ValueError(f"response {response!r} listed among features")
            for f in chosen:
                if f not in self.column_names:
                    raise MissingColumn(f)
        if not chosen:
            raise ValueError("no feature columns selected")
        columns = [self.column(f) for f in chosen]
        names = chosen
        intercept_index = None
        if add_intercept:
            if INTERCEPT_NAME in chosen:
                raise ValueError(
                    f"a column named {INTERCEPT_NAME!r} already exists; "
                    "drop it or pass add_intercept=False"
                )
            columns.insert(0, np.ones(self.n_rows))
            names = (INTERCEPT_NAME,) + chosen
            intercept_index = 0
        return ModelSpec(
            design=np.column_stack(columns),
            response=y,
            column_names=names,
            intercept_index=intercept_index,
        )


_BUILTINS = {
    "wissel": NamedDataset(
        name="wissel",
        column_names=("Year", "D", "C", "I", "CP"),
        rows=np.array(_WISSEL_ROWS, dtype=float),
        provenance=(
            "Wissel series: US outstanding mortgage debt (D), personal "
            "consumption (C), personal income (I), and outstanding consumer "
            "credit (CP), trillions of dollars, annual 1996-2012."
        ),
    ),
    "klein-goldberger": NamedDataset(
        name="klein-goldberger",
        column_names=("Year", "C", "I", "InA", "IA"),
        rows=np.array(_KLEIN_GOLDBERGER_ROWS, dtype=float),
        provenance=(
            "Klein and Goldberger (1955): US consumption (C), wage incomes "
            "(I), non-farm incomes (InA), and farm incomes (IA), 1936-1952 "
            "with the war years 1942-1944 missing."
        ),
    ),
}

BUILTIN_NAMES: tuple[str, ...] = tuple(sorted(_BUILTINS))


def builtin(name: str) -> NamedDataset:
    """Return a builtin dataset by name ("wissel" or "klein-goldberger")."""
    key = str(name).strip().lower()
    try:
        return _BUILTINS[key]
    except KeyError:
        raise UnknownDataset(name, BUILTIN_NAMES) from None


def write_csv(dataset: NamedDataset, path) -> None:
    """Write the full table with a header row.

    Floats are serialized with repr, so reading the file back reproduces
    bit-identical entries.
    """
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(dataset.column_names)
        for row in dataset.rows:
            writer.writerow([repr(float(v)) for v in row])


def _parse_cell(cell: str, line: int, column: int) -> float:
    text = cell.strip()
    # float() quietly accepts "1_0" (underscore grouping) and nan/inf
    # literals; none of those are valid numeric cells here.
    if not text or "_" in text:
        raise NonNumericCell(line, column, cell)
    try:
        value = float(text)
    except ValueError:
        raise NonNumericCell(line, column, cell) from None
    if not math.isfinite(value):
        raise NonNumericCell(line, column, cell)
    return value


def read_table(path, name: str | None = None) -> NamedDataset:
    """Parse a CSV file (header row mandatory, UTF-8, RFC-4180 quoting)
    into a NamedDataset. Errors carry 1-based line/column positions with
    the header as line 1."""
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise TooFewRows(f"{path}: file is empty, expected a header row") from None
        header = [h.strip() for h in header]
        if any(not h for h in header):
            raise ParseError(1, header.index("") + 1, "empty header name")
        seen: dict[str, int] = {}
        for pos, h in enumerate(header, start=1):
            if h in seen:
                raise ParseError(1, pos, f"duplicate header name {h!r}")
            seen[h] = pos
        data: list[list[float]] = []
        for row in reader:
            line = reader.line_num
            if not row:
                continue
            if len(row) != len(header):
                raise ParseError(
                    line,
                    min(len(row), len(header)) + 1,
                    f"expected {len(header)} fields, got {len(row)}",
                )
            data.append(
                [_parse_cell(cell, line, pos) for pos, cell in enumerate(row, start=1)]
            )
    if not data:
        raise TooFewRows(f"{path}: no data rows below the header")
    return NamedDataset(
        name=name or str(path),
        column_names=tuple(header),
        rows=np.array(data, dtype=float),
        provenance=f"loaded from {path}",
    )


def read_csv(
    path,
    response_column: str,
    feature_columns=None,
    add_intercept: bool = True,
) -> ModelSpec:
    """Read a CSV file and assemble a ModelSpec.

    ``feature_columns`` may be an explicit list of names or None /
    "all-others", which selects every column except the response and any
    metadata column (case-insensitive "year").
    """
    table = read_table(path)
    return table.model_spec(
        response=response_column,
        features=feature_columns,
        add_intercept=add_intercept,
    )
