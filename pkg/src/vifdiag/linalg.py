"""Dense real-matrix kernel: validation, thin QR, triangular and SPD solves.

Matrices are plain float64 numpy arrays validated at the boundary (two
dimensional, non-empty, all entries finite). Results are returned with the
writeable flag cleared so fits can safely alias them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NotPositiveDefinite, RankDeficient, SingularTriangular

# Relative pivot tolerance separating diagnosable near-collinearity from
# exact collinearity at double-precision resolution.
RANK_TOL = 1e-12

# Relative symmetry tolerance accepted by spd_solve.
SYMMETRY_TOL = 1e-10


def as_matrix(values, *, name: str = "matrix") -> np.ndarray:
    """Validate and copy input into a read-only float64 2-D array."""
    a = np.array(values, dtype=float, order="C")
    if a.ndim != 2:
        raise ValueError(f"{name} must be two-dimensional, got ndim={a.ndim}")
    if a.shape[0] < 1 or a.shape[1] < 1:
        raise ValueError(f"{name} must be non-empty, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError(f"{name} contains non-finite entries")
    a.flags.writeable = False
    return a


def as_vector(values, *, name: str = "vector") -> np.ndarray:
    """Validate and copy input into a read-only float64 1-D array."""
    v = np.array(values, dtype=float)
    if v.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional, got ndim={v.ndim}")
    if v.shape[0] < 1:
        raise ValueError(f"{name} must be non-empty")
    if not np.all(np.isfinite(v)):
        raise ValueError(f"{name} contains non-finite entries")
    v.flags.writeable = False
    return v


@dataclass(frozen=True)
class QrResult:
    """Thin QR factorization ``a = q @ p``.

    ``q`` is n-by-k with orthonormal columns, ``p`` is k-by-k upper
    triangular with a strictly positive diagonal, which makes the
    factorization unique for a full-rank input.
    """

    q: np.ndarray
    p: np.ndarray


def qr_decompose(a) -> QrResult:
    """Factor ``a`` (n-by-k, n >= k) into orthonormal ``q`` and triangular ``p``.

    Signs are normalized so every diagonal entry of ``p`` is positive.
    A pivot at or below ``RANK_TOL`` times the largest pivot raises
    :class:`RankDeficient` with the offending (zero-based) column index.
    The factorization is deterministic: identical input yields bitwise
    identical output.
    """
    a = as_matrix(a)
    n, k = a.shape
    if n < k:
        raise ValueError(f"need at least as many rows as columns, got {n}x{k}")
    q, p = np.linalg.qr(a, mode="reduced")
    signs = np.where(np.diag(p) < 0.0, -1.0, 1.0)
    q = q * signs
    p = p * signs[:, None]
    diag = np.abs(np.diag(p))
    largest = float(diag.max())
    bad = np.flatnonzero(diag <= RANK_TOL * largest)
    if largest == 0.0 or bad.size:
        first = int(bad[0]) if bad.size else 0
        raise RankDeficient(first)
    q.flags.writeable = False
    p.flags.writeable = False
    return QrResult(q=q, p=p)


def solve_upper_triangular(p, b) -> np.ndarray:
    """Back-substitute ``p @ x = b`` for upper-triangular ``p``.

    ``b`` may be a vector or a matrix of stacked right-hand sides. Entries
    of ``p`` below the diagonal are ignored. An exactly zero diagonal entry
    raises :class:`SingularTriangular`.
    """
    p = as_matrix(p, name="p")
    k = p.shape[0]
    if p.shape[1] != k:
        raise ValueError(f"p must be square, got {p.shape[0]}x{p.shape[1]}")
    b_arr = np.array(b, dtype=float)
    if b_arr.shape[:1] != (k,):
        raise ValueError(f"b must have leading dimension {k}, got {b_arr.shape}")
    diag = np.diag(p)
    zero = np.flatnonzero(diag == 0.0)
    if zero.size:
        raise SingularTriangular(int(zero[0]))
    x = np.zeros_like(b_arr)
    for i in reversed(range(k)):
        x[i] = (b_arr[i] - p[i, i + 1 :] @ x[i + 1 :]) / diag[i]
    return x


def _cholesky_lower(g: np.ndarray) -> np.ndarray:
    """Lower Cholesky factor of a symmetric positive definite matrix."""
    k = g.shape[0]
    low = np.zeros((k, k))
    for j in range(k):
        d = g[j, j] - low[j, :j] @ low[j, :j]
        if not (d > 0.0) or not math.isfinite(d):
            raise NotPositiveDefinite(j)
        low[j, j] = math.sqrt(d)
        if j + 1 < k:
            low[j + 1 :, j] = (g[j + 1 :, j] - low[j + 1 :, :j] @ low[j, :j]) / low[j, j]
    return low


def spd_solve(g, b) -> np.ndarray:
    """Solve ``g @ x = b`` for symmetric positive definite ``g`` via Cholesky.

    ``g`` must be symmetric within ``SYMMETRY_TOL`` relative to its largest
    entry. A nonpositive Cholesky pivot raises :class:`NotPositiveDefinite`
    with the pivot index, which for normal-equation matrices signals exact
    collinearity among the regressors.
    """
    g = as_matrix(g, name="g")
    k = g.shape[0]
    if g.shape[1] != k:
        raise ValueError(f"g must be square, got {g.shape[0]}x{g.shape[1]}")
    scale = float(np.abs(g).max())
    if float(np.abs(g - g.T).max()) > SYMMETRY_TOL * scale:
        raise ValueError("g is not symmetric")
    b_arr = np.array(b, dtype=float)
    if b_arr.shape[:1] != (k,):
        raise ValueError(f"b must have leading dimension {k}, got {b_arr.shape}")
    low = _cholesky_lower(g)
    y = np.zeros_like(b_arr)
    for i in range(k):
        y[i] = (b_arr[i] - low[i, :i] @ y[:i]) / low[i, i]
    return solve_upper_triangular(low.T, y)
