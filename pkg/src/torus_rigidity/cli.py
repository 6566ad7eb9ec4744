"""Command-line entry point.

Exit codes:
    0  success (for ``decide`` regardless of the YES/NO answer)
    2  malformed or invalid input document
    3  precondition of the requested decision or construction not met
    4  ``witness`` asked for a pair where no non-affine map exists
    5  ``verify`` ran and the witness failed
    6  ``sample-map`` on a source torus of dimension > 2
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

import numpy as np

from . import documents as docs
from .action import (
    MatrixAction,
    dual_action,
    finite_orbit_lattice,
    finite_orbit_subspace,
    gamma_rho,
    is_ergodic,
)
from .decide import (
    ALMOST,
    CYCLIC,
    EXACT,
    MODES,
    decide_almost,
    decide_cyclic,
    decide_factor,
    decide_nonaffine,
)
from .config import VerifyConfig, WitnessConfig
from .errors import RigidityError, SeparationFailure
from .verify import check_equivariance
from .witness import build_witness, eval_f

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_PRECONDITION = 3
EXIT_NO_WITNESS = 4
EXIT_VERIFY_FAILED = 5
EXIT_DIMENSION = 6

SAMPLES_ENV = "TORUS_RIGIDITY_SAMPLES"


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(text: str, out: str | None):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _fail(code: int, message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _load_system(path: str) -> docs.SystemPair:
    try:
        return docs.decode_system(docs.loads(_read(path)))
    except OSError as exc:
        raise docs.DocumentError(str(exc)) from exc


def _fmt_vecs(vs) -> str:
    return "[" + ", ".join("(" + ", ".join(str(x) for x in v) + ")" for v in vs) + "]"


def describe_action(name: str, a: MatrixAction) -> list[str]:
    ks = a.k_indices()
    F = finite_orbit_lattice(dual_action(a))
    W = finite_orbit_subspace(a)
    lam = gamma_rho(a)
    f_label = "full" if F.is_full() else f"rank {F.rank}"
    erg = "true" if is_ergodic(a) else "false"
    return [
        f"{name}: ergodic: {erg}; F: {f_label}; k: {', '.join(map(str, ks))}",
        f"  torus dimension: {a.dim}; generators: {a.rank}",
        f"  F basis: {_fmt_vecs(F.basis)}",
        f"  gamma_rho basis: {_fmt_vecs(lam.basis)} (index {lam.index})",
        f"  finite-orbit subspace: rank {W.rank}, basis {_fmt_vecs(W.integer_basis())}",
    ]


def cmd_analyze(args) -> int:
    pair = _load_system(args.path)
    lines = describe_action("source", pair.source) + describe_action("target", pair.target)
    _write("\n".join(lines) + "\n", None)
    return EXIT_OK


def run_decision(pair: docs.SystemPair, mode: str):
    if mode == EXACT:
        return decide_nonaffine(pair.source, pair.target)
    if mode == ALMOST:
        return decide_almost(pair.source, pair.target)
    if mode == CYCLIC:
        if pair.rank != 1:
            raise RigidityError("cyclic mode needs a single generator on each side")
        return decide_cyclic(pair.source.generators[0], pair.target.generators[0])
    if pair.factor_matrix is None:
        raise RigidityError("factor mode needs a factor_matrix in the document")
    return decide_factor(pair.source, pair.target, pair.factor_matrix)


def cmd_decide(args) -> int:
    pair = _load_system(args.path)
    try:
        report = run_decision(pair, args.mode)
    except RigidityError as exc:
        return _fail(EXIT_PRECONDITION, f"{type(exc).__name__}: {exc}")
    _write(docs.dumps(docs.encode_decision(report)), args.output)
    return EXIT_OK


def cmd_witness(args) -> int:
    pair = _load_system(args.path)
    report = decide_nonaffine(pair.source, pair.target)
    if not report.exists_nonaffine:
        return _fail(EXIT_NO_WITNESS,
                     f"no non-affine equivariant map exists ({report.certificate.kind})")
    try:
        cfg = WitnessConfig(separation=args.separation)
        w = build_witness(pair.source, pair.target, report, tol=cfg.separation,
                          max_attempts=cfg.max_attempts)
    except SeparationFailure as exc:
        return _fail(EXIT_PRECONDITION, f"SeparationFailure: {exc}")
    _write(docs.dumps(docs.encode_witness(w)), args.output)
    return EXIT_OK


def _load_witness(path: str):
    try:
        return docs.decode_witness(docs.loads(_read(path)))
    except OSError as exc:
        raise docs.DocumentError(str(exc)) from exc


def cmd_verify(args) -> int:
    w = _load_witness(args.witness)
    cfg = VerifyConfig(samples=args.samples, seed=args.seed, tol=args.tol)
    report = check_equivariance(w, w.rho, w.sigma, cfg.samples, cfg.seed, cfg.tol)
    _write(docs.dumps(docs.encode_verification(report)), args.output)
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def grid_points(m: int, k: int) -> np.ndarray:
    axis = np.arange(k) / k
    if m == 1:
        return axis[:, None]
    return np.array([(a, b) for a in axis for b in axis])


def cmd_sample_map(args) -> int:
    w = _load_witness(args.witness)
    if w.rho.dim > 2:
        return _fail(EXIT_DIMENSION, f"grid sampling needs a source torus of dimension <= 2, "
                                     f"got {w.rho.dim}")
    if args.grid < 1:
        return _fail(EXIT_INVALID, "--grid must be positive")
    X = grid_points(w.rho.dim, args.grid)
    F = eval_f(w, X)
    lines = [",".join(f"{x:.15f}" for x in (*xs, *fs)) for xs, fs in zip(X, F)]
    _write("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def _default_samples() -> int:
    return int(os.environ.get(SAMPLES_ENV, VerifyConfig.samples))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="torus-rigidity",
        description="Decide and construct non-affine equivariant maps between toral actions.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="print invariants of both actions")
    a.add_argument("path")
    a.set_defaults(func=cmd_analyze)

    d = sub.add_parser("decide", help="decide existence of a non-affine equivariant map")
    d.add_argument("path")
    d.add_argument("--mode", choices=MODES, default=EXACT)
    d.add_argument("-o", "--output")
    d.set_defaults(func=cmd_decide)

    w = sub.add_parser("witness", help="construct an explicit non-affine equivariant map")
    w.add_argument("path")
    w.add_argument("-o", "--output")
    w.add_argument("--separation", type=float, default=WitnessConfig.separation,
                   help="minimum arc gap between circle values")
    w.set_defaults(func=cmd_witness)

    v = sub.add_parser("verify", help="numerically check a witness")
    v.add_argument("witness")
    v.add_argument("--samples", type=int, default=_default_samples())
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--tol", type=float, default=VerifyConfig.tol)
    v.add_argument("-o", "--output")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("sample-map", help="tabulate a witness on a grid as CSV")
    s.add_argument("witness")
    s.add_argument("--grid", type=int, default=16)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_sample_map)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except docs.DocumentError as exc:
        return _fail(EXIT_INVALID, str(exc))


if __name__ == "__main__":
    sys.exit(main())
