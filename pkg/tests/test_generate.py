import numpy as np
import pytest

from framekit import operator_core as oc
from framekit.generate import GenKind, GenSpec, generate, tight_frame, with_condition
from framekit.pasf import classify, frame_operator, pasf_projection
from framekit.riesz import is_p_approximate_riesz

from helpers import MERCEDES_T
from oracles import direct_frame_operator


def test_riesz_kind():
    pair = generate(GenSpec(2, 2, kind=GenKind.RIESZ, seed=1))
    assert is_p_approximate_riesz(pair).is_riesz


def test_tight_mercedes_preset():
    pair = generate(GenSpec(2, 3, kind="tight", seed=0))
    np.testing.assert_array_equal(pair.vectors, MERCEDES_T)
    assert oc.defect(direct_frame_operator(pair.vectors), 1.5 * np.eye(2)) <= 1e-15


@pytest.mark.parametrize("d,n", [(2, 4), (3, 6), (3, 5), (4, 7), (1, 3)])
def test_tight_frames_are_tight(d, n):
    T = tight_frame(d, n, np.random.default_rng(0))
    assert oc.defect(direct_frame_operator(T), (n / d) * np.eye(d)) <= 1e-12


def test_rejects_bad_specs():
    with pytest.raises(ValueError):
        GenSpec(3, 2)
    with pytest.raises(ValueError):
        GenSpec(2, 3, kind=GenKind.RIESZ)
    with pytest.raises(ValueError):
        GenSpec(2, 3, condition_target=0.5)


@pytest.mark.parametrize("kind", list(GenKind))
def test_deterministic(kind):
    n = 3 if kind is not GenKind.RIESZ else 3
    a = generate(GenSpec(3, n, seed=42, kind=kind))
    b = generate(GenSpec(3, n, seed=42, kind=kind))
    assert np.array_equal(a.functionals, b.functionals)
    assert np.array_equal(a.vectors, b.vectors)


def test_random_pasf_respects_condition_target():
    for seed in range(30):
        pair = generate(GenSpec(4, 6, p=1.5, seed=seed, condition_target=50.0))
        assert classify(pair).condition_of_S <= 50.0
        assert np.all(np.abs(pair.vectors) <= 1.0) and np.all(np.abs(pair.functionals) <= 1.0)


@pytest.mark.parametrize("hilbert", [False, True])
def test_with_condition(hilbert):
    kind = GenKind.HILBERT_FRAME if hilbert else GenKind.RANDOM_PASF
    base = generate(GenSpec(4, 7, seed=3, kind=kind))
    pair = with_condition(base, 1e8, seed=1)
    assert pair.is_hilbert_style == hilbert
    assert oc.condition_number(frame_operator(pair)) == pytest.approx(1e8, rel=1e-3)
    if not hilbert:
        assert oc.defect(pasf_projection(pair, 1e12), pasf_projection(base)) <= 1e-6
