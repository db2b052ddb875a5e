"""Finite-dimensional approximate Schauder frames, Riesz bases and dilations."""
from .dilation import DilationBundle, compress, dilate, direct_sum_norm, embed, verify_dilation
from .errors import (DegenerateComplement, DimensionMismatch, FrameKitError, GenerationFailed,
                     InvalidExponent, NotAFrame, NotHilbertStyle, NotInComplement, NotInvertible,
                     NotSurjective, NotSymmetric, ParseError)
from .hilbert import (FrameBounds, HilbertFrame, frame_bounds, frame_from_vectors,
                      hilbert_fundamentals, naimark_dilate)
from .operator_core import (InversionResult, defect, estimate_operator_p_norm, invert,
                            symmetric_eigenvalues, vector_p_norm)
from .pasf import (FramePair, PasfClassification, PasfKind, ReconstructionMode, analysis,
                   canonical_dual, classify, frame_operator, is_pasf, pasf_projection,
                   reconstruct, reconstruct_many, synthesis)
from .report import Check, VerificationReport
from .riesz import (RieszVerdict, holub_frame_from_operator, is_p_approximate_riesz,
                    is_riesz_basis_hilbert, riesz_from_invertible)

__version__ = "0.1.0"
