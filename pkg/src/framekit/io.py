"""JSON documents for frame pairs, Hilbert frames and dilation bundles.

Numbers are written with Python's shortest round-trip float repr, so
write -> read -> write reproduces the same bytes.
"""
from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .dilation import DilationBundle
from .errors import FrameKitError, ParseError
from .hilbert import HilbertFrame
from .pasf import FramePair
from .riesz import hilbert_pair


def _exponent_out(p: float):
    return "inf" if math.isinf(p) else float(p)


def _exponent_in(value) -> float:
    if isinstance(value, str):
        if value.lower() in ("inf", "infinity"):
            return math.inf
        raise ParseError(f"bad exponent {value!r}")
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f"bad exponent {value!r}")
    return float(value)


def _nested(m) -> list:
    return np.asarray(m, dtype=float).tolist()


def _matrix(value, rows, cols, name) -> np.ndarray:
    try:
        a = np.array(value, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{name}: not a numeric matrix") from exc
    if a.size == 0 and rows * cols == 0:
        a = a.reshape(rows, cols)
    if a.shape != (rows, cols):
        raise ParseError(f"{name}: expected shape {(rows, cols)}, got {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ParseError(f"{name}: non-finite entries")
    return a


def pair_to_dict(pair: FramePair) -> dict:
    return {
        "space_dim": pair.space_dim,
        "seq_dim": pair.seq_dim,
        "p": _exponent_out(pair.p),
        "q": _exponent_out(pair.q),
        "functionals": _nested(pair.functionals),
        "vectors": _nested(pair.vectors),
    }


def frame_to_dict(frame: HilbertFrame) -> dict:
    return {"vectors": _nested(frame.vectors)}


def pair_from_dict(obj) -> FramePair:
    """Read a FramePair document, or a bare ``{"vectors": ...}`` Hilbert frame."""
    if not isinstance(obj, dict) or "vectors" not in obj:
        raise ParseError("expected an object with a 'vectors' field")
    try:
        if "functionals" not in obj:
            T = np.array(obj["vectors"], dtype=float)
            if T.ndim != 2:
                raise ParseError("vectors must be a d x n array")
            return hilbert_pair(_matrix(T, *T.shape, "vectors"))
        d, n = int(obj["space_dim"]), int(obj["seq_dim"])
        p = _exponent_in(obj.get("p", 2.0))
        q = _exponent_in(obj["q"]) if "q" in obj else None
        F = _matrix(obj["functionals"], n, d, "functionals")
        T = _matrix(obj["vectors"], d, n, "vectors")
        return FramePair(F, T, p=p, q=q)
    except ParseError:
        raise
    except (KeyError, TypeError, ValueError, FrameKitError) as exc:
        raise ParseError(f"invalid frame pair: {exc}") from exc


def bundle_to_dict(bundle: DilationBundle) -> dict:
    return {
        "base": pair_to_dict(bundle.base),
        "complement_basis": _nested(bundle.complement_basis),
        "omega": [[_nested(x), _nested(y)] for x, y in bundle.omega],
        "g": _nested(bundle.g),
        "p": _exponent_out(bundle.p),
    }


def bundle_from_dict(obj) -> DilationBundle:
    if not isinstance(obj, dict) or "base" not in obj:
        raise ParseError("expected an object with a 'base' field")
    base = pair_from_dict(obj["base"])
    d, n = base.space_dim, base.seq_dim
    try:
        if _exponent_in(obj.get("p", base.p)) != base.p:
            raise ParseError("bundle exponent differs from its base pair")
        W = _matrix(obj["complement_basis"], n, n - d, "complement_basis")
        omega = obj["omega"]
        if not isinstance(omega, list) or len(omega) != n:
            raise ParseError(f"omega must list {n} elements")
        xs = np.column_stack([_matrix([w[0]], 1, d, "omega x-part")[0] for w in omega])
        ys = np.column_stack([_matrix([w[1]], 1, n, "omega y-part")[0] for w in omega])
        g = _matrix(obj["g"], n, d + n, "g")
        return DilationBundle(base, W, xs, ys, g)
    except ParseError:
        raise
    except (KeyError, TypeError, ValueError, IndexError, FrameKitError) as exc:
        raise ParseError(f"invalid dilation bundle: {exc}") from exc


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def loads(text: str):
    """Parse a document and return ``(kind, value)``, kind in {"pair", "bundle"}."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from exc
    if isinstance(obj, dict) and "base" in obj:
        return "bundle", bundle_from_dict(obj)
    return "pair", pair_from_dict(obj)


def read(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return loads(text)


def write(path, obj: dict):
    Path(path).write_text(dumps(obj))
