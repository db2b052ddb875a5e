"""Command line front end: ``framekit gen | verify | dilate | dual``.

Exit codes: 0 all checks passed, 1 mathematical failure (not a p-ASF,
singular operator, threshold exceeded), 2 unreadable or malformed input.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
import warnings

import numpy as np

from . import io
from . import operator_core as oc
from .dilation import dilate, verify_dilation
from .errors import DegenerateComplement, FrameKitError, NotInvertible, ParseError
from .generate import GenKind, GenSpec, generate
from .hilbert import HilbertFrame, naimark_dilate
from .pasf import (FramePair, ReconstructionMode, canonical_dual, classify, pasf_projection,
                   reconstruct_many)
from .report import VerificationReport
from .riesz import is_p_approximate_riesz, is_riesz_basis_hilbert

EXIT_OK, EXIT_FAIL, EXIT_PARSE = 0, 1, 2


def default_tolerance() -> float:
    value = os.environ.get("FRAMEKIT_TOLERANCE")
    return float(value) if value else oc.DEFAULT_TOLERANCE


def _exponent(text: str) -> float:
    return math.inf if text.lower() in ("inf", "infinity") else float(text)


def verify_pair(pair: FramePair, tolerance, cond_limit, seed=0) -> VerificationReport:
    report = VerificationReport()
    cls = classify(pair, cond_limit, tolerance)
    report.info.update(kind=cls.kind.value, condition_of_S=cls.condition_of_S,
                       identity_defect_of_S=cls.identity_defect_of_S)
    report.add("frame_operator_condition", cls.condition_of_S, cond_limit)
    if not cls.is_pasf:
        return report

    rng = np.random.default_rng(seed)
    probes = np.vstack([np.eye(pair.space_dim), rng.uniform(-1, 1, (10, pair.space_dim))])
    scales = np.array([max(1.0, oc.vector_p_norm(x, pair.q)) for x in probes])
    for mode in ReconstructionMode:
        errors = np.abs(reconstruct_many(pair, probes, mode, cond_limit) - probes)
        worst = float(np.max(errors.max(axis=1) / scales))
        report.add(f"reconstruction_{mode.value.lower()}", worst, tolerance)

    P = pasf_projection(pair, cond_limit)
    report.add("projection_idempotent", oc.defect(P @ P, P), tolerance)
    report.add("projection_range", oc.defect(P @ pair.functionals, pair.functionals), tolerance)
    report.add("projection_rank", abs(oc.rank(P) - pair.space_dim), 0.0)
    twice = canonical_dual(canonical_dual(pair, cond_limit), cond_limit)
    report.add("dual_involution", max(oc.defect(twice.functionals, pair.functionals),
                                      oc.defect(twice.vectors, pair.vectors)), tolerance)

    verdict = is_p_approximate_riesz(pair, cond_limit, tolerance)
    report.info.update(p_approximate_riesz=verdict.is_riesz,
                       riesz_identity_defect=verdict.identity_defect)
    if pair.is_hilbert_style:
        hv = is_riesz_basis_hilbert(pair, cond_limit, tolerance)
        report.info["riesz_basis"] = hv.is_riesz
        report.add("riesz_routes_agree", 0.0 if hv.routes_agree else 1.0, 0.0)
    return report


def dilation_report(bundle, tolerance, cond_limit) -> VerificationReport:
    report = verify_dilation(bundle, tolerance, cond_limit)
    verdict = is_p_approximate_riesz(bundle.dilated_pair(), cond_limit, tolerance)
    report.add("dilated_pair_riesz", verdict.identity_defect, tolerance)
    return report


def _emit(report: VerificationReport) -> int:
    print(json.dumps(report.to_dict(), indent=2, allow_nan=False))
    return EXIT_OK if report.overall else EXIT_FAIL


def _write_or_print(doc: dict, out):
    if out:
        io.write(out, doc)
    else:
        sys.stdout.write(io.dumps(doc))


def cmd_gen(args) -> int:
    n = args.seq_dim
    if n is None:
        n = args.dim if args.kind == GenKind.RIESZ.value else 2 * args.dim
    try:
        spec = GenSpec(args.dim, n, p=args.p, q=args.q, seed=args.seed, kind=args.kind,
                       condition_target=args.condition_target)
    except ValueError as exc:
        print(f"framekit gen: {exc}", file=sys.stderr)
        return EXIT_PARSE
    _write_or_print(io.pair_to_dict(generate(spec)), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    kind, value = io.read(args.input)
    if kind == "bundle":
        report = VerificationReport()
        report.extend(verify_pair(value.base, args.tolerance, args.cond_limit), "base.")
        report.extend(dilation_report(value, args.tolerance, args.cond_limit))
    else:
        report = verify_pair(value, args.tolerance, args.cond_limit)
    return _emit(report)


def cmd_dilate(args) -> int:
    kind, pair = io.read(args.input)
    if kind != "pair":
        raise ParseError("dilate expects a frame pair document")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DegenerateComplement)
        if pair.is_hilbert_style:
            bundle, report = naimark_dilate(HilbertFrame(pair.vectors), args.tolerance,
                                            args.cond_limit)
            verdict = is_p_approximate_riesz(bundle.dilated_pair(), args.cond_limit,
                                             args.tolerance)
            report.add("dilated_pair_riesz", verdict.identity_defect, args.tolerance)
        else:
            bundle = dilate(pair, args.cond_limit, args.tolerance)
            report = dilation_report(bundle, args.tolerance, args.cond_limit)
    if args.out:
        io.write(args.out, io.bundle_to_dict(bundle))
    return _emit(report)


def cmd_dual(args) -> int:
    kind, pair = io.read(args.input)
    if kind != "pair":
        raise ParseError("dual expects a frame pair document")
    _write_or_print(io.pair_to_dict(canonical_dual(pair, args.cond_limit)), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tolerance", type=float, default=default_tolerance(),
                        help="defect threshold (default 1e-8, env FRAMEKIT_TOLERANCE)")
    common.add_argument("--cond-limit", type=float, default=oc.DEFAULT_COND_LIMIT,
                        help="largest admissible condition number (default 1e12)")

    parser = argparse.ArgumentParser(prog="framekit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", parents=[common], help="generate a seeded frame pair")
    gen.add_argument("-d", "--dim", type=int, required=True)
    gen.add_argument("-n", "--seq-dim", type=int)
    gen.add_argument("--p", type=_exponent, default=2.0)
    gen.add_argument("--q", type=_exponent)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--kind", choices=[k.value for k in GenKind], default="random_pasf")
    gen.add_argument("--condition-target", type=float, default=1e6)
    gen.add_argument("--out")
    gen.set_defaults(func=cmd_gen)

    verify = sub.add_parser("verify", parents=[common], help="check a pair or bundle")
    verify.add_argument("input")
    verify.set_defaults(func=cmd_verify)

    dil = sub.add_parser("dilate", parents=[common], help="dilate a pair to a Riesz basis")
    dil.add_argument("input")
    dil.add_argument("--out")
    dil.set_defaults(func=cmd_dilate)

    dual = sub.add_parser("dual", parents=[common], help="write the canonical dual pair")
    dual.add_argument("input")
    dual.add_argument("--out")
    dual.set_defaults(func=cmd_dual)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"framekit {args.command}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"framekit {args.command}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotInvertible as exc:
        print(f"framekit {args.command}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except FrameKitError as exc:
        print(f"framekit {args.command}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
