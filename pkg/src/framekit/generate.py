"""Seeded generators for test instances."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import operator_core as oc
from .errors import GenerationFailed
from .pasf import FramePair, classify, frame_operator
from .riesz import hilbert_pair

MAX_RESAMPLES = 1000

_S3 = math.sqrt(3.0) / 2.0
MERCEDES = np.array([[0.0, -_S3, _S3],
                     [1.0, -0.5, -0.5]])


class GenKind(enum.Enum):
    RANDOM_PASF = "random_pasf"
    HILBERT_FRAME = "hilbert_frame"
    RIESZ = "riesz"
    TIGHT = "tight"


@dataclass(frozen=True)
class GenSpec:
    d: int
    n: int
    p: float = 2.0
    q: float | None = None
    seed: int = 0
    kind: GenKind = GenKind.RANDOM_PASF
    condition_target: float = 1e6

    def __post_init__(self):
        object.__setattr__(self, "kind", GenKind(self.kind))
        if self.d < 1 or self.n < 1:
            raise ValueError("dimensions must be positive")
        if self.n < self.d:
            raise ValueError(f"n = {self.n} < d = {self.d}: a frame needs n >= d")
        if self.kind is GenKind.RIESZ and self.n != self.d:
            raise ValueError("RIESZ instances need n = d")
        if self.condition_target < 1:
            raise ValueError("condition_target must be >= 1")


def random_orthogonal(rng, n) -> np.ndarray:
    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    return q * np.sign(np.diag(r))


def tight_frame(d, n, rng) -> np.ndarray:
    """Vectors with T T^T = (n/d) I.

    d = 2, n = 3 gives the Mercedes frame; when d divides n the frame is a
    union of n/d rotated orthonormal bases; otherwise it is the first d rows
    of a random n x n orthogonal matrix, rescaled.
    """
    if (d, n) == (2, 3):
        return MERCEDES.copy()
    if n % d == 0:
        return np.hstack([random_orthogonal(rng, d) for _ in range(n // d)])
    return math.sqrt(n / d) * random_orthogonal(rng, n)[:d]


def generate(spec: GenSpec) -> FramePair:
    rng = np.random.default_rng(spec.seed)
    d, n = spec.d, spec.n
    if spec.kind is GenKind.TIGHT:
        return hilbert_pair(tight_frame(d, n, rng))
    for _ in range(MAX_RESAMPLES):
        T = rng.uniform(-1.0, 1.0, size=(d, n))
        if spec.kind is GenKind.HILBERT_FRAME:
            pair = hilbert_pair(T)
        else:
            F = rng.uniform(-1.0, 1.0, size=(n, d))
            pair = FramePair(F, T, p=spec.p, q=spec.q)
        if not classify(pair, spec.condition_target).is_pasf:
            continue
        if spec.kind is GenKind.RIESZ and not (
                oc.condition_number(F) <= spec.condition_target
                and oc.condition_number(T) <= spec.condition_target):
            continue
        return pair
    raise GenerationFailed(f"no admissible instance after {MAX_RESAMPLES} resamples")


def with_condition(pair: FramePair, condition: float, seed=0) -> FramePair:
    """An instance with the same projection whose S has the given 2-norm condition.

    Non-Hilbert pairs become (F B, A T) with A S B = U diag(s) V^T for random
    orthogonal U, V and log-spaced s. A and B each carry the square root of
    the conditioning, as F = T^T forces in the Hilbert case, and F S^-1 T is
    unchanged in exact arithmetic. Hilbert-style pairs are rebuilt from
    orthonormal rows with log-spaced singular values, keeping F = T^T.
    """
    rng = np.random.default_rng(seed)
    d, n = pair.space_dim, pair.seq_dim
    if pair.is_hilbert_style:
        rows = random_orthogonal(rng, n)[:d]
        sigma = np.logspace(0.0, -0.5 * math.log10(condition), d)
        return hilbert_pair(random_orthogonal(rng, d) @ np.diag(sigma) @ rows)
    s = np.logspace(0.0, -math.log10(condition), d)
    U, V = random_orthogonal(rng, d), random_orthogonal(rng, d)
    U0, s0, V0t = np.linalg.svd(frame_operator(pair))
    root = np.sqrt(s / s0)
    A = U @ np.diag(root) @ U0.T
    B = V0t.T @ np.diag(root) @ V.T
    return FramePair(pair.functionals @ B, A @ pair.vectors, p=pair.p, q=pair.q)
