"""Dense real-matrix substrate.

Operators and vectors are plain ``numpy.ndarray`` objects of dtype float64.
Inverses are carried in extended precision (``WORK``, the platform long
double) so that chains such as F S^-1 T stay accurate for condition numbers
far beyond 1/sqrt(eps); callers round back to float64 at their boundary.

This module supplies the few numerical primitives the rest of the package
relies on: condition-aware inversion by partial-pivoted elimination, entrywise
defects, sequence-space norms, operator p-norm estimates and Jacobi solvers for
symmetric eigenvalues and singular values.
"""
from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .errors import DimensionMismatch, InvalidExponent, NotInvertible, NotSymmetric

EPS = np.finfo(float).eps
DEFAULT_COND_LIMIT = 1e12
DEFAULT_TOLERANCE = 1e-8
RANK_RTOL = 1e-10
WORK = np.longdouble


class InversionResult(NamedTuple):
    inverse: np.ndarray  # dtype WORK
    condition_estimate: float


def work(m) -> np.ndarray:
    return np.asarray(m, dtype=WORK)


def to_float(m) -> np.ndarray:
    return np.asarray(m, dtype=float)


def as_matrix(m, name="matrix") -> np.ndarray:
    a = np.array(m, dtype=float)
    if a.ndim != 2:
        raise DimensionMismatch(f"{name} must be 2-dimensional, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError(f"{name} has non-finite entries")
    return a


def as_vector(v, name="vector") -> np.ndarray:
    a = np.array(v, dtype=float)
    if a.ndim != 1:
        raise DimensionMismatch(f"{name} must be 1-dimensional, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError(f"{name} has non-finite entries")
    return a


def check_exponent(p) -> float:
    p = float(p)
    if math.isnan(p) or p < 1:
        raise InvalidExponent(f"exponent must lie in [1, inf], got {p}")
    return p


# ---------------------------------------------------------------------------
# Jacobi solvers


def _round_robin(n):
    """Yield rounds of disjoint index pairs covering every pair once (n even)."""
    players = list(range(n))
    for _ in range(n - 1):
        yield [(min(players[k], players[n - 1 - k]), max(players[k], players[n - 1 - k]))
               for k in range(n // 2)]
        players = [players[0], players[-1]] + players[1:-1]


def singular_values(m, tol=1e-15, max_sweeps=60) -> np.ndarray:
    """Singular values in nonincreasing order by one-sided (Hestenes) Jacobi.

    Rotations act on columns in parallel round-robin order, so each round is
    one vectorized update. Small singular values are obtained with high
    relative accuracy, which the condition estimates in :func:`invert` need.
    """
    a = as_matrix(m)
    if a.shape[1] > a.shape[0]:
        a = a.T
    a = a.copy()
    k = a.shape[1]
    if k == 0:
        return np.zeros(0)
    width = k + (k % 2)
    if width != k:
        a = np.hstack([a, np.zeros((a.shape[0], 1))])
    rounds = [np.array(r).T for r in _round_robin(width)] if width > 1 else []
    for _ in range(max_sweeps):
        rotated = False
        for i, j in rounds:
            ai, aj = a[:, i], a[:, j]
            alpha = np.einsum("ij,ij->j", ai, ai)
            beta = np.einsum("ij,ij->j", aj, aj)
            gamma = np.einsum("ij,ij->j", ai, aj)
            active = np.abs(gamma) > tol * np.sqrt(alpha * beta)
            if not active.any():
                continue
            rotated = True
            i, j = i[active], j[active]
            alpha, beta, gamma = alpha[active], beta[active], gamma[active]
            with np.errstate(over="ignore"):
                zeta = (beta - alpha) / (2.0 * gamma)
                t = np.sign(zeta) / (np.abs(zeta) + np.hypot(1.0, zeta))
            t[zeta == 0] = 1.0
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = c * t
            ai, aj = a[:, i].copy(), a[:, j]
            a[:, i] = c * ai - s * aj
            a[:, j] = s * ai + c * aj
        if not rotated:
            break
    sv = np.sqrt(np.einsum("ij,ij->j", a, a))[:k]
    return np.sort(sv)[::-1]


def jacobi_eigh(m, tol=1e-12, max_sweeps=100):
    """Cyclic Jacobi eigen-decomposition of a symmetric matrix.

    Returns ``(eigenvalues, eigenvectors)`` with eigenvalues ascending and
    eigenvectors as columns. Iterates until the off-diagonal Frobenius norm is
    at most ``tol`` times the Frobenius norm of the input.
    """
    a = as_matrix(m)
    n = a.shape[0]
    if a.shape != (n, n):
        raise DimensionMismatch(f"expected a square matrix, got {a.shape}")
    scale = max(1.0, float(np.max(np.abs(a)))) if a.size else 1.0
    if np.max(np.abs(a - a.T), initial=0.0) > 1e-12 * scale:
        raise NotSymmetric("matrix is not symmetric within 1e-12")
    a = 0.5 * (a + a.T)
    v = np.eye(n)
    target = tol * np.linalg.norm(a)
    for _ in range(max_sweeps):
        off = math.sqrt(max(0.0, np.sum(a * a) - np.sum(np.diag(a) ** 2)))
        if off <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                with np.errstate(over="ignore"):
                    theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                ap, aq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                ap, aq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * ap - s * aq
                a[q, :] = s * ap + c * aq
                a[p, q] = a[q, p] = 0.0
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    w = np.diag(a).copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def symmetric_eigenvalues(m) -> np.ndarray:
    """All eigenvalues of a symmetric matrix in nondecreasing order."""
    return jacobi_eigh(m)[0]


# ---------------------------------------------------------------------------
# Inversion, rank, defects


def condition_number(m) -> float:
    sv = singular_values(m)
    if sv.size == 0:
        return 1.0
    if sv[-1] == 0.0:
        return math.inf
    return float(sv[0] / sv[-1])


def rank(m, rtol=RANK_RTOL) -> int:
    sv = singular_values(m)
    if sv.size == 0 or sv[0] == 0.0:
        return 0
    return int(np.sum(sv > rtol * sv[0]))


def invert(m, cond_limit=DEFAULT_COND_LIMIT) -> InversionResult:
    """Invert a square matrix by Gauss-Jordan elimination with partial pivoting.

    Elimination runs in extended precision and the inverse is returned with
    dtype ``WORK``. Raises NotInvertible when the 2-norm condition number
    exceeds ``cond_limit`` or a zero pivot is met.
    """
    a = as_matrix(m)
    n = a.shape[0]
    if a.shape != (n, n):
        raise DimensionMismatch(f"cannot invert non-square matrix of shape {a.shape}")
    if cond_limit < 1:
        raise ValueError("cond_limit must be >= 1")
    cond = condition_number(a)
    if cond > cond_limit:
        raise NotInvertible(f"condition number {cond:.3e} exceeds limit {cond_limit:.3e}", cond)
    aug = np.hstack([work(m), np.eye(n, dtype=WORK)])
    for col in range(n):
        piv = col + int(np.argmax(np.abs(aug[col:, col])))
        if aug[piv, col] == 0:
            raise NotInvertible("zero pivot encountered", cond)
        if piv != col:
            aug[[col, piv]] = aug[[piv, col]]
        aug[col] /= aug[col, col]
        factors = aug[:, col].copy()
        factors[col] = 0
        aug -= np.outer(factors, aug[col])
    return InversionResult(aug[:, n:], max(1.0, cond))


def solve(m, b, cond_limit=DEFAULT_COND_LIMIT) -> np.ndarray:
    """Solve ``m @ x = b`` by Gaussian elimination with partial pivoting.

    Works in extended precision and returns ``x`` with dtype ``WORK``. Applying
    m^-1 this way is backward stable, unlike multiplying by an explicit
    inverse, which matters once m is ill-conditioned.
    """
    a = as_matrix(m)
    n = a.shape[0]
    if a.shape != (n, n):
        raise DimensionMismatch(f"cannot solve with non-square matrix of shape {a.shape}")
    cond = condition_number(a)
    if cond > cond_limit:
        raise NotInvertible(f"condition number {cond:.3e} exceeds limit {cond_limit:.3e}", cond)
    a = work(m).copy()
    rhs = work(b)
    vector = rhs.ndim == 1
    x = rhs.reshape(n, -1).copy()
    for col in range(n):
        piv = col + int(np.argmax(np.abs(a[col:, col])))
        if a[piv, col] == 0:
            raise NotInvertible("zero pivot encountered", cond)
        if piv != col:
            a[[col, piv]] = a[[piv, col]]
            x[[col, piv]] = x[[piv, col]]
        factors = a[col + 1:, col] / a[col, col]
        a[col + 1:, col:] -= np.outer(factors, a[col, col:])
        x[col + 1:] -= np.outer(factors, x[col])
    for row in range(n - 1, -1, -1):
        x[row] = (x[row] - a[row, row + 1:] @ x[row + 1:]) / a[row, row]
    return x[:, 0] if vector else x


def orthonormal_columns(m) -> np.ndarray:
    """Orthonormal basis of the column space of a full-column-rank matrix.

    Householder QR in extended precision (numpy's QR has no long double
    path); returns the thin Q factor with dtype ``WORK``.
    """
    a = work(m).copy()
    rows, cols = a.shape
    q = np.eye(rows, dtype=WORK)
    for k in range(min(rows, cols)):
        x = a[k:, k]
        alpha = np.sqrt(x @ x)
        if alpha == 0:
            continue
        v = x.copy()
        v[0] += alpha if x[0] >= 0 else -alpha
        v /= np.sqrt(v @ v)
        a[k:] -= 2 * np.outer(v, v @ a[k:])
        q[:, k:] -= 2 * np.outer(q[:, k:] @ v, v)
    return q[:, :cols]


def defect(m, n) -> float:
    """Largest entrywise absolute difference between two equally shaped arrays."""
    a, b = np.asarray(m), np.asarray(n)
    if a.shape != b.shape:
        raise DimensionMismatch(f"shapes differ: {a.shape} vs {b.shape}")
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a - b)))


def identity_defect(m) -> float:
    a = np.asarray(m)
    return defect(a, np.eye(a.shape[0], a.shape[1], dtype=a.dtype))


# ---------------------------------------------------------------------------
# Norms


def vector_p_norm(v, p) -> float:
    x = np.abs(as_vector(v))
    p = check_exponent(p)
    if x.size == 0:
        return 0.0
    if math.isinf(p):
        return float(x.max())
    if p == 1:
        return float(x.sum())
    if p == 2:
        return float(np.linalg.norm(x))
    peak = x.max()
    if peak == 0.0:
        return 0.0
    # scaled to avoid overflow for large p
    return float(peak * np.sum((x / peak) ** p) ** (1.0 / p))


def _duality_map(v, p):
    """Map v to sign(v)|v|^(p-1), the support direction of the p-norm at v."""
    return np.sign(v) * np.abs(v) ** (p - 1.0)


def estimate_operator_p_norm(m, p, samples=16, seed=0, iterations=200) -> float:
    """Lower bound on the induced p-norm of ``m``.

    p = 1 and p = inf use the exact column/row sum formulas; p = 2 returns the
    top singular value. Other exponents run a seeded generalized power
    iteration (nonlinear ascent on ||Mx||_p over the unit p-sphere) from the
    standard basis vectors and ``samples`` random starts, keeping the best
    value seen, which is always attained and hence a valid lower bound.
    """
    a = as_matrix(m)
    p = check_exponent(p)
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if a.size == 0:
        return 0.0
    if p == 1:
        return float(np.abs(a).sum(axis=0).max())
    if math.isinf(p):
        return float(np.abs(a).sum(axis=1).max())
    if p == 2:
        return float(singular_values(a)[0])

    q = p / (p - 1.0)
    rng = np.random.default_rng(seed)
    starts = list(np.eye(a.shape[1])) + list(rng.standard_normal((samples, a.shape[1])))
    best = 0.0
    for x in starts:
        nx = vector_p_norm(x, p)
        if nx == 0.0:
            continue
        x = x / nx
        for _ in range(iterations):
            y = a @ x
            value = vector_p_norm(y, p)
            best = max(best, value)
            z = a.T @ _duality_map(y, p)
            if not np.any(z):
                break
            x_new = _duality_map(z, q)
            x_new /= vector_p_norm(x_new, p)
            if np.max(np.abs(x_new - x)) < 1e-15:
                break
            x = x_new
        best = max(best, vector_p_norm(a @ x, p))
    return best


# ---------------------------------------------------------------------------
# Matrix literal JSON format


def matrix_to_literal(m) -> dict:
    a = as_matrix(m)
    return {"rows": int(a.shape[0]), "cols": int(a.shape[1]),
            "entries": [float(x) for x in a.ravel()]}


def matrix_from_literal(obj) -> np.ndarray:
    rows, cols, entries = int(obj["rows"]), int(obj["cols"]), obj["entries"]
    if rows < 0 or cols < 0 or len(entries) != rows * cols:
        raise DimensionMismatch(f"entries length {len(entries)} != {rows} x {cols}")
    return as_matrix(np.array(entries, dtype=float).reshape(rows, cols))
