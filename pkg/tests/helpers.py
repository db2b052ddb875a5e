import math

import numpy as np

from framekit.generate import GenKind, GenSpec, generate
from framekit.pasf import FramePair

S3 = math.sqrt(3.0) / 2.0
MERCEDES_T = np.array([[0.0, -S3, S3], [1.0, -0.5, -0.5]])
EXPONENTS = (1.0, 1.5, 2.0, 3.0)


def mercedes_pair():
    return FramePair(MERCEDES_T.T, MERCEDES_T, p=2.0)


def line_pair():
    """d = 1, n = 2, p = 1: f = (1, 1), tau = (1/2, 1/2)."""
    return FramePair([[1.0], [1.0]], [[0.5, 0.5]], p=1.0)


def identity_pair(d=2):
    return FramePair(np.eye(d), np.eye(d))


def random_pasf_instances(count=100, seed=2024, max_d=6, max_n=14):
    """Seeded p-ASFs with d in 1..max_d, n in d..max_n, p cycling through EXPONENTS."""
    rng = np.random.default_rng(seed)
    out = []
    for i in range(count):
        d = int(rng.integers(1, max_d + 1))
        n = int(rng.integers(d, max_n + 1))
        p = EXPONENTS[i % len(EXPONENTS)]
        out.append(generate(GenSpec(d, n, p=p, seed=int(rng.integers(2**32)),
                                    kind=GenKind.RANDOM_PASF)))
    return out


def random_hilbert_frames(count=50, seed=7, max_d=6, max_n=14):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        d = int(rng.integers(1, max_d + 1))
        n = int(rng.integers(d, max_n + 1))
        out.append(generate(GenSpec(d, n, seed=int(rng.integers(2**32)),
                                    kind=GenKind.HILBERT_FRAME)).vectors)
    return out


def hilbert_pairs(count=200, seed=31):
    """Square, redundant and rank-deficient Hilbert-style pairs in equal measure."""
    rng = np.random.default_rng(seed)
    out = []
    for i in range(count):
        d = int(rng.integers(1, 6))
        shape = i % 3
        if shape == 0:
            T = rng.standard_normal((d, d))
        elif shape == 1:
            T = rng.standard_normal((d, d + int(rng.integers(1, 5))))
        else:
            n = d + int(rng.integers(0, 4))
            r = int(rng.integers(0, d))
            T = rng.standard_normal((d, r)) @ rng.standard_normal((r, n))
        out.append(FramePair(T.T, T))
    return out
