"""Riesz bases: the invertible-operator definition, Holub frames and the
operator characterisation F S^-1 T = I, plus its p-approximate analogue."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import operator_core as oc
from .errors import NotHilbertStyle, NotInvertible, NotSurjective
from .pasf import FramePair, classify, pasf_projection


@dataclass(frozen=True)
class RieszVerdict:
    is_riesz: bool
    route_definitional: bool
    route_characterization: bool
    identity_defect: float

    @property
    def routes_agree(self) -> bool:
        return self.route_definitional == self.route_characterization


def hilbert_pair(vectors) -> FramePair:
    """The pair (<., tau_k>, tau_k) induced by the columns of ``vectors``."""
    T = oc.as_matrix(vectors, "vectors")
    return FramePair(T.T.copy(), T, p=2.0, q=2.0)


def riesz_from_invertible(T, cond_limit=oc.DEFAULT_COND_LIMIT) -> FramePair:
    """Image of the standard orthonormal basis under an invertible T."""
    T = oc.as_matrix(T, "T")
    oc.invert(T, cond_limit)
    return hilbert_pair(T)


def holub_frame_from_operator(T) -> FramePair:
    """Frame {T e_k} for a surjective T: R^n -> R^d."""
    T = oc.as_matrix(T, "T")
    r = oc.rank(T)
    if r < T.shape[0]:
        raise NotSurjective(f"operator has rank {r} < {T.shape[0]}")
    return hilbert_pair(T)


def _invertible(m, cond_limit) -> bool:
    try:
        oc.invert(m, cond_limit)
    except NotInvertible:
        return False
    return True


def is_riesz_basis_hilbert(pair: FramePair, cond_limit=oc.DEFAULT_COND_LIMIT,
                           tolerance=oc.DEFAULT_TOLERANCE) -> RieszVerdict:
    """Decide whether the vectors of a Hilbert-style pair form a Riesz basis.

    Both sides of the equivalence are evaluated independently:
    the definitional route asks for a square invertible synthesis matrix,
    the characterisation route asks for a frame (rank d) whose projection
    F S^-1 T equals the identity of R^n.
    """
    if pair.p != 2 or not np.array_equal(pair.functionals, pair.vectors.T):
        raise NotHilbertStyle("pair must have p = 2 and functionals equal to vectors^T")
    T = pair.vectors
    d, n = pair.space_dim, pair.seq_dim
    definitional = n == d and _invertible(T, cond_limit)

    characterization = False
    id_defect = math.inf
    if oc.rank(T) == d:
        try:
            P = pasf_projection(pair, cond_limit)
        except NotInvertible:
            pass
        else:
            id_defect = oc.identity_defect(P)
            characterization = id_defect <= tolerance
    return RieszVerdict(characterization, definitional, characterization, id_defect)


def is_p_approximate_riesz(pair: FramePair, cond_limit=oc.DEFAULT_COND_LIMIT,
                           tolerance=oc.DEFAULT_TOLERANCE) -> RieszVerdict:
    cls = classify(pair, cond_limit, tolerance)
    if not cls.is_pasf:
        raise NotInvertible("pair is not a p-ASF: frame operator is not invertible",
                            cls.condition_of_S)
    id_defect = oc.identity_defect(pasf_projection(pair, cond_limit))
    square = pair.seq_dim == pair.space_dim
    definitional = (square and _invertible(pair.functionals, cond_limit)
                    and _invertible(pair.vectors, cond_limit))
    verdict = id_defect <= tolerance
    return RieszVerdict(verdict, definitional, verdict, id_defect)
