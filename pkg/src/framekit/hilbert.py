"""Frames for R^d with the Euclidean inner product.

A Hilbert frame is a d x n matrix whose columns are the frame vectors; its
functionals are the inner products with those same vectors, so the induced
pair has F = T^T and p = q = 2.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import operator_core as oc
from .dilation import DilationBundle, dilate, verify_dilation
from .errors import NotAFrame, NotInvertible
from .pasf import (FramePair, PasfClassification, ReconstructionMode, classify,
                   frame_operator, pasf_projection, reconstruct_many)
from .report import VerificationReport
from .riesz import hilbert_pair, is_riesz_basis_hilbert


@dataclass(frozen=True, eq=False)
class HilbertFrame:
    vectors: np.ndarray

    def __post_init__(self):
        T = oc.as_matrix(self.vectors, "vectors")
        T.setflags(write=False)
        object.__setattr__(self, "vectors", T)

    @property
    def space_dim(self) -> int:
        return self.vectors.shape[0]

    @property
    def seq_dim(self) -> int:
        return self.vectors.shape[1]

    @property
    def pair(self) -> FramePair:
        return hilbert_pair(self.vectors)

    @property
    def frame_operator(self) -> np.ndarray:
        S = self.vectors @ self.vectors.T
        return 0.5 * (S + S.T)


class FrameBounds(NamedTuple):
    a: float
    b: float


def frame_from_vectors(T, cond_limit=oc.DEFAULT_COND_LIMIT) -> tuple[HilbertFrame, PasfClassification]:
    frame = HilbertFrame(T)
    return frame, classify(frame.pair, cond_limit)


def _require_frame(frame: HilbertFrame):
    r = oc.rank(frame.vectors)
    if r < frame.space_dim:
        raise NotAFrame(f"vectors span a subspace of dimension {r} < {frame.space_dim}")


def frame_bounds(frame: HilbertFrame) -> FrameBounds:
    """Optimal frame bounds: the extreme eigenvalues of S = T T^T."""
    _require_frame(frame)
    eig = oc.symmetric_eigenvalues(frame.frame_operator)
    return FrameBounds(float(eig[0]), float(eig[-1]))


def hilbert_fundamentals(frame: HilbertFrame, tolerance=1e-9, probes=100, seed=0,
                         cond_limit=oc.DEFAULT_COND_LIMIT) -> VerificationReport:
    """Defects of the basic identities for a Hilbert frame: the two Fourier
    expansions, the adjoint relation, S = analysis^* analysis and the
    orthogonal projection onto the coefficient range."""
    _require_frame(frame)
    pair = frame.pair
    T = frame.vectors
    d, n = frame.space_dim, frame.seq_dim
    S = frame_operator(pair)
    report = VerificationReport()

    eig = oc.symmetric_eigenvalues(frame.frame_operator)
    report.add("S_symmetric", oc.defect(S, S.T), tolerance)
    report.add("S_positive", max(0.0, -float(eig[0])), 0.0)
    report.info["S_min_eigenvalue"] = float(eig[0])

    rng = np.random.default_rng(seed)
    hs = np.vstack([np.eye(d), rng.standard_normal((probes, d))])
    for mode, name in [(ReconstructionMode.DUAL_FUNCTIONALS, "fourier_expansion_dual_functionals"),
                       (ReconstructionMode.DUAL_VECTORS, "fourier_expansion_dual_vectors")]:
        report.add(name, oc.defect(reconstruct_many(pair, hs, mode, cond_limit), hs), tolerance)

    report.add("analysis_injective", abs(oc.rank(pair.functionals) - d), 0.0)
    report.add("synthesis_surjective", abs(oc.rank(T) - d), 0.0)
    report.add("adjoint", oc.defect(pair.functionals.T, T), tolerance)
    summed = sum(np.outer(T[:, k], T[:, k]) for k in range(n))
    report.add("S_equals_adjoint_product", oc.defect(S, summed), tolerance)

    P = pasf_projection(pair, cond_limit)
    report.add("projection_symmetric", oc.defect(P, P.T), tolerance)
    report.add("projection_idempotent", oc.defect(P @ P, P), tolerance)
    report.add("projection_range", oc.defect(P @ pair.functionals, pair.functionals), tolerance)
    report.add("projection_trace", abs(float(np.trace(P)) - d), tolerance)

    a, b = float(eig[0]), float(eig[-1])
    hs = rng.standard_normal((probes, d))
    sq_norms = np.sum(hs ** 2, axis=1)
    energies = np.sum((hs @ T) ** 2, axis=1)
    # a ||h||^2 <= sum_k <h, tau_k>^2 <= b ||h||^2, measured relative to ||h||^2
    violation = np.maximum(a * sq_norms - energies, energies - b * sq_norms) / sq_norms
    report.add("frame_inequality", max(0.0, float(np.max(violation))), tolerance)
    report.info.update(lower_bound=a, upper_bound=b)
    return report


def omega_gram(bundle: DilationBundle) -> np.ndarray:
    """Gram matrix of the X1 basis under the 2-sum inner product."""
    E = bundle.embedding
    return E.T @ E


def omega_frame_operator(bundle: DilationBundle) -> np.ndarray:
    """xi -> sum_k <xi, omega_k> omega_k in X1 coordinates."""
    C = bundle.theta_omega
    return C @ C.T @ omega_gram(bundle)


def naimark_dilate(frame: HilbertFrame, tolerance=1e-9, cond_limit=oc.DEFAULT_COND_LIMIT,
                   eig_tolerance=1e-8) -> tuple[DilationBundle, VerificationReport]:
    """Dilate a Hilbert frame and check the extra Hilbert-space structure:
    orthogonality of the compression, the frame bounds of omega, the
    identity g_k = <., omega_k> and the Riesz identity for omega."""
    _require_frame(frame)
    pair = frame.pair
    bundle = dilate(pair, cond_limit)
    report = verify_dilation(bundle, tolerance, cond_limit)
    d, n = bundle.space_dim, bundle.seq_dim

    P = pasf_projection(pair, cond_limit)
    Q = bundle.complement_projection
    report.add("projection_symmetric", oc.defect(P, P.T), tolerance)
    report.add("complement_orthogonal", oc.defect(P.T @ Q, np.zeros((n, n))), tolerance)

    G = omega_gram(bundle)
    report.add("gram_identity", oc.identity_defect(G), tolerance)
    M = np.zeros((bundle.dim, bundle.dim))
    M[:d, :d] = np.eye(d)
    report.add("compress_self_adjoint", oc.defect(G @ M, (G @ M).T), tolerance)
    report.add("compress_idempotent", oc.defect(M @ M, M), tolerance)

    S_omega = omega_frame_operator(bundle)
    report.add("S_omega_equals_S_g_omega", oc.defect(S_omega, bundle.S_g_omega), tolerance)
    sym = 0.5 * (S_omega + S_omega.T)
    eig_omega = oc.symmetric_eigenvalues(sym)
    expected = np.sort(np.concatenate([oc.symmetric_eigenvalues(frame.frame_operator),
                                       np.ones(n - d)]))
    report.add("omega_spectrum", oc.defect(eig_omega, expected), eig_tolerance)
    base_bounds = frame_bounds(frame)
    a_w, b_w = float(eig_omega[0]), float(eig_omega[-1])
    # (min(a, 1), max(b, 1)) when n > d; just (a, b) when nothing is appended
    report.add("omega_bounds", max(abs(a_w - expected[0]), abs(b_w - expected[-1])),
               eig_tolerance)

    pairing = bundle.theta_omega.T @ G
    report.add("claim_g_equals_inner_product", oc.defect(bundle.theta_g, pairing), tolerance)

    try:
        C, G_work = oc.work(bundle.theta_omega), oc.work(G)
        S_work = C @ C.T @ G_work
        S_work = (S_work + S_work.T) / 2
        riesz = oc.identity_defect(C.T @ G_work @ oc.solve(S_work, C, cond_limit))
    except NotInvertible:
        riesz = np.inf
    report.add("omega_riesz_identity", riesz, tolerance)
    verdict = is_riesz_basis_hilbert(hilbert_pair(bundle.theta_omega), cond_limit, tolerance)
    report.add("omega_is_riesz_basis", 0.0 if verdict.is_riesz else 1.0, 0.0)

    report.info.update(lower_bound=base_bounds.a, upper_bound=base_bounds.b,
                       omega_lower_bound=a_w, omega_upper_bound=b_w)
    return bundle, report
