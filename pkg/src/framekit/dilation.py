"""Dilation of a p-ASF to a p-approximate Riesz basis.

Given (f, tau) on X = R^d with projection P = F S^-1 T on R^n, the larger
space is X1 = X (+) range(I - P), realised inside R^d x R^n as pairs (x, y)
with (I - P) y = y. The dilated pair is

    omega_k = (tau_k, (I - P) e_k),    g_k(x, y) = f_k(x) + ((I - P) y)_k,

and the projection (x, y) -> (x, 0) maps X1 onto X.

Concrete matrices on X1 are written in the basis made of the standard basis
of X followed by the columns of an orthonormal basis W of range(I - P).
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import operator_core as oc
from .errors import DegenerateComplement, DimensionMismatch, NotInComplement, NotInvertible
from .pasf import FramePair, classify, projection_work
from .report import VerificationReport


def complement_basis(Q, k, rtol=oc.RANK_RTOL) -> np.ndarray:
    """Orthonormal basis of range(Q) with exactly ``k`` columns.

    Column-pivoted Gram-Schmidt: the column of largest remaining norm is taken
    next and orthogonalised twice against those already chosen.
    """
    Q = oc.as_matrix(Q)
    n = Q.shape[0]
    if k == 0:
        return np.zeros((n, 0))
    residual = Q.copy()
    scale = max(float(np.max(np.linalg.norm(Q, axis=0))), 1e-300)
    basis = []
    for _ in range(k):
        norms = np.linalg.norm(residual, axis=0)
        j = int(np.argmax(norms))
        if norms[j] <= rtol * scale:
            raise NotInvertible(f"complement has rank {len(basis)} < {k}")
        w = residual[:, j] / norms[j]
        for b in basis:
            w -= (b @ w) * b
        w /= np.linalg.norm(w)
        basis.append(w)
        residual -= np.outer(w, w @ residual)
    return np.column_stack(basis)


@dataclass(frozen=True, eq=False)
class DilationBundle:
    """The dilated pair together with the space it lives on.

    ``omega_x`` (d x n) and ``omega_y`` (n x n) hold the two components of
    omega_k in column k; ``g`` (n x (d+n)) holds g_k as row k acting on the
    ambient vector (x, y).
    """

    base: FramePair
    complement_basis: np.ndarray
    omega_x: np.ndarray
    omega_y: np.ndarray
    g: np.ndarray

    def __post_init__(self):
        d, n = self.base.space_dim, self.base.seq_dim
        shapes = {"complement_basis": (n, n - d), "omega_x": (d, n),
                  "omega_y": (n, n), "g": (n, d + n)}
        for name, shape in shapes.items():
            value = np.array(getattr(self, name), dtype=float)
            if value.size == 0 and 0 in shape:
                value = value.reshape(shape)
            if value.shape != shape:
                raise DimensionMismatch(f"{name} has shape {value.shape}, expected {shape}")
            value.setflags(write=False)
            object.__setattr__(self, name, value)

    @property
    def p(self) -> float:
        return self.base.p

    @property
    def q(self) -> float:
        return self.base.q

    @property
    def space_dim(self) -> int:
        return self.base.space_dim

    @property
    def seq_dim(self) -> int:
        return self.base.seq_dim

    @property
    def dim(self) -> int:
        """Dimension of X1."""
        return self.space_dim + self.complement_basis.shape[1]

    @property
    def is_degenerate(self) -> bool:
        return self.complement_basis.shape[1] == 0

    @property
    def omega(self) -> list[tuple[np.ndarray, np.ndarray]]:
        return [(self.omega_x[:, k], self.omega_y[:, k]) for k in range(self.seq_dim)]

    @property
    def complement_projection(self) -> np.ndarray:
        """I - P, read off the y-parts of omega (column k is (I - P) e_k)."""
        return self.omega_y

    @property
    def projection_P(self) -> np.ndarray:
        """(x, y) -> (x, 0) as a block matrix on R^d x R^n."""
        d, n = self.space_dim, self.seq_dim
        out = np.zeros((d + n, d + n))
        out[:d, :d] = np.eye(d)
        return out

    # -- coordinates on X1 -------------------------------------------------

    @cached_property
    def embedding(self) -> np.ndarray:
        """Ambient vectors of the X1 basis as columns, shape (d+n) x dim."""
        d, n = self.space_dim, self.seq_dim
        E = np.zeros((d + n, self.dim))
        E[:d, :d] = np.eye(d)
        E[d:, d:] = self.complement_basis
        return E

    def coordinates(self, ambient) -> np.ndarray:
        """Basis coordinates of ambient vectors (columns) that lie in X1."""
        z = np.asarray(ambient)
        d = self.space_dim
        W = self.complement_basis.astype(z.dtype) if z.dtype == oc.WORK else self.complement_basis
        return np.concatenate([z[:d], W.T @ z[d:]], axis=0)

    @cached_property
    def omega_ambient(self) -> np.ndarray:
        return np.vstack([self.omega_x, self.omega_y])

    @cached_property
    def S_g_omega_work(self) -> np.ndarray:
        """xi -> sum_k g_k(xi) omega_k in X1 coordinates, summed term by term
        in extended precision from the coordinate rows of g and columns of omega."""
        g = oc.work(self.theta_g)
        omega = oc.work(self.theta_omega)
        S = np.zeros((self.dim, self.dim), dtype=oc.WORK)
        for k in range(self.seq_dim):
            S += np.outer(omega[:, k], g[k])
        return S

    @property
    def S_g_omega(self) -> np.ndarray:
        return oc.to_float(self.S_g_omega_work)

    @cached_property
    def theta_g(self) -> np.ndarray:
        """Analysis map of g: X1 -> R^n, in X1 coordinates."""
        return self.g @ self.embedding

    @cached_property
    def theta_omega(self) -> np.ndarray:
        """Synthesis map of omega: R^n -> X1, in X1 coordinates."""
        return self.coordinates(self.omega_ambient)

    def projection_g_omega(self, cond_limit=oc.DEFAULT_COND_LIMIT) -> np.ndarray:
        coeffs = oc.solve(self.S_g_omega_work, oc.work(self.theta_omega), cond_limit)
        return oc.to_float(oc.work(self.theta_g) @ coeffs)

    def dilated_pair(self) -> FramePair:
        """(g, omega) as an ordinary pair on R^dim via X1 coordinates."""
        return FramePair(self.theta_g, self.theta_omega, p=self.p, q=self.p)


def dilate(pair: FramePair, cond_limit=oc.DEFAULT_COND_LIMIT,
           tolerance=oc.DEFAULT_TOLERANCE) -> DilationBundle:
    cls = classify(pair, cond_limit, tolerance)
    if not cls.is_pasf:
        raise NotInvertible("pair is not a p-ASF: frame operator is not invertible",
                            cls.condition_of_S)
    F, T = pair.functionals, pair.vectors
    d, n = pair.space_dim, pair.seq_dim
    if n == d:
        # a rank-d idempotent on R^d is the identity, so I - P vanishes exactly
        warnings.warn("n = d: the complement is {0} and the dilation is trivial",
                      DegenerateComplement, stacklevel=2)
        Q = np.zeros((n, n))
    else:
        Q = oc.to_float(np.eye(n, dtype=oc.WORK) - projection_work(pair, cond_limit))
    W = complement_basis(Q, n - d)
    return DilationBundle(pair, W, T.copy(), Q, np.hstack([F, Q]))


def _check_complement(bundle, y, tolerance):
    y = oc.as_vector(y, "y")
    if y.shape[0] != bundle.seq_dim:
        raise DimensionMismatch(f"y has dimension {y.shape[0]}, expected {bundle.seq_dim}")
    scale = max(1.0, float(np.max(np.abs(y), initial=0.0)))
    if oc.defect(bundle.complement_projection @ y, y) > tolerance * scale:
        raise NotInComplement("y does not lie in range(I - P)")
    return y


def compress(bundle: DilationBundle, xi, tolerance=oc.DEFAULT_TOLERANCE) -> np.ndarray:
    """The projection (x, y) -> x of X1 onto X."""
    x, y = xi
    x = oc.as_vector(x, "x")
    if x.shape[0] != bundle.space_dim:
        raise DimensionMismatch(f"x has dimension {x.shape[0]}, expected {bundle.space_dim}")
    _check_complement(bundle, y, tolerance)
    return x.copy()


def embed(bundle: DilationBundle, x) -> tuple[np.ndarray, np.ndarray]:
    return oc.as_vector(x, "x").copy(), np.zeros(bundle.seq_dim)


def direct_sum_norm(bundle: DilationBundle, xi, tolerance=oc.DEFAULT_TOLERANCE) -> float:
    """(||x||_q^p + ||y||_p^p)^(1/p), or the max of the two for p = inf."""
    x, y = xi
    x = compress(bundle, xi, tolerance)
    y = _check_complement(bundle, y, tolerance)
    return oc.vector_p_norm([oc.vector_p_norm(x, bundle.q), oc.vector_p_norm(y, bundle.p)],
                            bundle.p)


def verify_dilation(bundle: DilationBundle, tolerance=oc.DEFAULT_TOLERANCE,
                    cond_limit=oc.DEFAULT_COND_LIMIT, seed=0) -> VerificationReport:
    """Measure every identity of the dilation construction as a defect."""
    base = bundle.base
    F, T = base.functionals, base.vectors
    d, n = bundle.space_dim, bundle.seq_dim
    Q = bundle.complement_projection
    W = bundle.complement_basis
    report = VerificationReport()

    probes_x = np.vstack([np.eye(d), np.zeros((n, d))])
    report.add("restriction_f", oc.defect(bundle.g @ probes_x, F), tolerance)
    report.add("restriction_tau",
               max(oc.defect(compress(bundle, w, np.inf), T[:, k])
                   for k, w in enumerate(bundle.omega)), tolerance)

    # sum_k ((I-P) y)_k tau_k and sum_k f_k(x) (I-P) e_k, on every basis probe
    report.add("zero_sum_1", oc.defect(T @ Q, np.zeros((d, n))), tolerance)
    report.add("zero_sum_2", oc.defect(Q @ F, np.zeros((n, d))), tolerance)

    block = np.eye(bundle.dim, dtype=oc.WORK)
    block[:d, :d] = oc.work(T) @ oc.work(F)
    report.add("block_S", oc.defect(bundle.S_g_omega_work, block), tolerance)
    try:
        riesz = oc.identity_defect(bundle.projection_g_omega(cond_limit))
    except NotInvertible:
        riesz = np.inf
    report.add("riesz_identity", riesz, tolerance)

    rng = np.random.default_rng(seed)
    probes = list(np.eye(d)) + list(rng.uniform(-1, 1, size=(8, d)))
    isometry = max(abs(direct_sum_norm(bundle, embed(bundle, x)) - oc.vector_p_norm(x, bundle.q))
                   for x in probes)
    report.add("isometry", isometry, 0.0)

    report.add("complement_invariance", oc.defect(Q @ W, W), tolerance)
    report.add("complement_dimension", abs(oc.rank(W) - (n - d)) if W.size else 0, 0.0)
    report.info.update(dim_X=d, dim_X1=bundle.dim, seq_dim=n, p=bundle.p)
    return report
