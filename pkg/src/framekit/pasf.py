"""Approximate Schauder frame calculus on a finite model.

A pair ``({f_k}, {tau_k})`` on X = R^d with coefficient space R^n is stored as
two matrices: ``functionals`` (n x d, row k is f_k) and ``vectors`` (d x n,
column k is tau_k). The analysis map x -> (f_k(x))_k is then the matrix F and
the synthesis map a -> sum a_k tau_k is the matrix T.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import operator_core as oc
from .errors import DimensionMismatch, NotInvertible


@dataclass(frozen=True, eq=False)
class FramePair:
    functionals: np.ndarray
    vectors: np.ndarray
    p: float = 2.0
    q: float | None = None

    def __post_init__(self):
        F = oc.as_matrix(self.functionals, "functionals")
        T = oc.as_matrix(self.vectors, "vectors")
        if F.shape != (T.shape[1], T.shape[0]):
            raise DimensionMismatch(
                f"functionals must be n x d and vectors d x n, got {F.shape} and {T.shape}")
        if F.shape[0] < 1 or F.shape[1] < 1:
            raise DimensionMismatch("space and sequence dimensions must be positive")
        F.setflags(write=False)
        T.setflags(write=False)
        p = oc.check_exponent(self.p)
        q = p if self.q is None else oc.check_exponent(self.q)
        object.__setattr__(self, "functionals", F)
        object.__setattr__(self, "vectors", T)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def space_dim(self) -> int:
        return self.vectors.shape[0]

    @property
    def seq_dim(self) -> int:
        return self.vectors.shape[1]

    @property
    def is_hilbert_style(self) -> bool:
        return self.p == 2 and np.array_equal(self.functionals, self.vectors.T)

    def __repr__(self):
        return f"FramePair(d={self.space_dim}, n={self.seq_dim}, p={self.p}, q={self.q})"


def identity_pair(d=2, p=2.0) -> FramePair:
    return FramePair(np.eye(d), np.eye(d), p=p)


def analysis_matrix(pair: FramePair) -> np.ndarray:
    return pair.functionals


def synthesis_matrix(pair: FramePair) -> np.ndarray:
    return pair.vectors


def analysis(pair: FramePair, x) -> np.ndarray:
    """Coefficients (f_1(x), ..., f_n(x))."""
    x = oc.as_vector(x, "x")
    if x.shape[0] != pair.space_dim:
        raise DimensionMismatch(f"x has dimension {x.shape[0]}, expected {pair.space_dim}")
    return pair.functionals @ x


def synthesis(pair: FramePair, a) -> np.ndarray:
    """The combination sum_k a_k tau_k."""
    a = oc.as_vector(a, "a")
    if a.shape[0] != pair.seq_dim:
        raise DimensionMismatch(f"a has dimension {a.shape[0]}, expected {pair.seq_dim}")
    return pair.vectors @ a


def frame_operator(pair: FramePair) -> np.ndarray:
    """S = synthesis . analysis, the map x -> sum_k f_k(x) tau_k."""
    return pair.vectors @ pair.functionals


class PasfKind(enum.Enum):
    SCHAUDER_FRAME = "SCHAUDER_FRAME"
    PASF = "PASF"
    NOT_PASF = "NOT_PASF"


@dataclass(frozen=True)
class PasfClassification:
    kind: PasfKind
    condition_of_S: float
    identity_defect_of_S: float

    @property
    def is_pasf(self) -> bool:
        return self.kind is not PasfKind.NOT_PASF


def classify(pair: FramePair, cond_limit=oc.DEFAULT_COND_LIMIT,
             tolerance=oc.DEFAULT_TOLERANCE) -> PasfClassification:
    S = frame_operator(pair)
    id_defect = oc.identity_defect(S)
    try:
        cond = oc.invert(S, cond_limit).condition_estimate
    except NotInvertible as exc:
        cond = math.inf if exc.condition is None else exc.condition
        return PasfClassification(PasfKind.NOT_PASF, cond, id_defect)
    kind = PasfKind.SCHAUDER_FRAME if id_defect <= tolerance else PasfKind.PASF
    return PasfClassification(kind, cond, id_defect)


def is_pasf(pair: FramePair, cond_limit=oc.DEFAULT_COND_LIMIT) -> bool:
    return classify(pair, cond_limit).is_pasf


def frame_operator_inverse(pair: FramePair, cond_limit=oc.DEFAULT_COND_LIMIT) -> np.ndarray:
    """S^-1 in extended precision, inverted from an extended-precision S."""
    cond = oc.condition_number(frame_operator(pair))
    if cond > cond_limit:
        raise NotInvertible(f"condition number {cond:.3e} exceeds limit {cond_limit:.3e}", cond)
    S = oc.work(pair.vectors) @ oc.work(pair.functionals)
    return oc.invert(S, np.inf).inverse


def canonical_dual(pair: FramePair, cond_limit=oc.DEFAULT_COND_LIMIT) -> FramePair:
    """The pair (f_k S^-1, S^-1 tau_k)."""
    S_inv = frame_operator_inverse(pair, cond_limit)
    return FramePair(oc.to_float(pair.functionals @ S_inv), oc.to_float(S_inv @ pair.vectors),
                     p=pair.p, q=pair.q)


class ReconstructionMode(enum.Enum):
    DUAL_FUNCTIONALS = "DUAL_FUNCTIONALS"
    DUAL_VECTORS = "DUAL_VECTORS"


def reconstruct(pair: FramePair, x, mode=ReconstructionMode.DUAL_FUNCTIONALS,
                cond_limit=oc.DEFAULT_COND_LIMIT) -> np.ndarray:
    """Evaluate one of the two canonical expansions of x.

    DUAL_FUNCTIONALS computes sum_k f_k(S^-1 x) tau_k, DUAL_VECTORS computes
    sum_k f_k(x) S^-1 tau_k. Both equal x for a p-ASF.
    """
    analysis(pair, x)
    return reconstruct_many(pair, oc.as_vector(x)[None, :], mode, cond_limit)[0]


def reconstruct_many(pair: FramePair, xs, mode=ReconstructionMode.DUAL_FUNCTIONALS,
                     cond_limit=oc.DEFAULT_COND_LIMIT) -> np.ndarray:
    """``reconstruct`` applied to every row of ``xs`` with a single inversion of S."""
    mode = ReconstructionMode(mode)
    xs = oc.as_matrix(xs, "xs")
    if xs.shape[1] != pair.space_dim:
        raise DimensionMismatch(f"probes have dimension {xs.shape[1]}, expected {pair.space_dim}")
    X = oc.work(xs).T
    F, T = oc.work(pair.functionals), oc.work(pair.vectors)
    S = T @ F
    if mode is ReconstructionMode.DUAL_FUNCTIONALS:
        return oc.to_float(T @ (F @ oc.solve(S, X, cond_limit))).T
    return oc.to_float(oc.solve(S, T @ (F @ X), cond_limit)).T


def projection_work(pair: FramePair, cond_limit=oc.DEFAULT_COND_LIMIT) -> np.ndarray:
    """P = F S^-1 T in extended precision.

    With F = Q_F R_F and T^T = Q_T R_T the product collapses to
    Q_F (Q_T^T Q_F)^-1 Q_T^T, whose conditioning is that of P itself rather
    than of S, so ill-conditioned pairs keep an accurate projection.
    """
    cond = oc.condition_number(frame_operator(pair))
    if cond > cond_limit:
        raise NotInvertible(f"condition number {cond:.3e} exceeds limit {cond_limit:.3e}", cond)
    q_f = oc.orthonormal_columns(pair.functionals)
    q_t = oc.orthonormal_columns(pair.vectors.T)
    cosines = oc.invert(q_t.T @ q_f, np.inf).inverse
    return q_f @ cosines @ q_t.T


def pasf_projection(pair: FramePair, cond_limit=oc.DEFAULT_COND_LIMIT) -> np.ndarray:
    """P = F S^-1 T, an idempotent on R^n with range F(R^d)."""
    return oc.to_float(projection_work(pair, cond_limit))
