"""JSON document formats.

Exact integers are written as decimal strings so that no consumer truncates
them to 64 bits; reals are written as strings with 17 significant digits,
which round-trips IEEE doubles.  Serialization is canonical (sorted keys,
fixed indentation), so equal objects give byte-identical files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .action import MatrixAction, SubgroupLattice
from .decide import MODES, Certificate, DecisionReport
from .errors import DimensionMismatch, NonCommuting, NotUnimodular, RigidityError
from .exact import IntegerMatrix
from .verify import VerificationReport
from .witness import WitnessSpec

SYSTEM_FORMAT = "torus-rigidity/system-pair/1"
DECISION_FORMAT = "torus-rigidity/decision/1"
WITNESS_FORMAT = "torus-rigidity/witness/1"
VERIFICATION_FORMAT = "torus-rigidity/verification/1"


class DocumentError(RigidityError):
    """Malformed or invalid input document."""


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise DocumentError("top-level value must be an object")
    return doc


# --- scalar codecs ---------------------------------------------------------


def enc_int(n: int) -> str:
    return str(int(n))


def dec_int(s: Any, what: str = "integer") -> int:
    if isinstance(s, bool):
        raise DocumentError(f"{what}: expected an integer, got {s!r}")
    if isinstance(s, int):
        return s
    if isinstance(s, str):
        try:
            return int(s.strip())
        except ValueError:
            pass
    raise DocumentError(f"{what}: expected an integer, got {s!r}")


def enc_real(x: float) -> str:
    return format(float(x), ".17g")


def dec_real(s: Any, what: str = "real") -> float:
    if isinstance(s, (int, float)) and not isinstance(s, bool):
        return float(s)
    if isinstance(s, str):
        try:
            return float(s)
        except ValueError:
            pass
    raise DocumentError(f"{what}: expected a real number, got {s!r}")


def enc_vec(v) -> list[str]:
    return [enc_int(a) for a in v]


def dec_vec(v: Any, what: str = "vector") -> tuple[int, ...]:
    if not isinstance(v, list):
        raise DocumentError(f"{what}: expected a list")
    return tuple(dec_int(a, what) for a in v)


def enc_matrix(M: IntegerMatrix) -> list[list[str]]:
    return [enc_vec(r) for r in M.rows]


def dec_matrix(rows: Any, what: str = "matrix") -> IntegerMatrix:
    if not isinstance(rows, list) or not rows:
        raise DocumentError(f"{what}: expected a non-empty list of rows")
    try:
        return IntegerMatrix(tuple(dec_vec(r, what) for r in rows))
    except ValueError as exc:
        raise DocumentError(f"{what}: {exc}") from exc


def _field(doc: dict, key: str, what: str):
    if key not in doc:
        raise DocumentError(f"{what}: missing field {key!r}")
    return doc[key]


def _check_format(doc: dict, expected: str):
    if doc.get("format") != expected:
        raise DocumentError(f"expected format {expected!r}, got {doc.get('format')!r}")


# --- actions and system pairs ----------------------------------------------


def encode_action(a: MatrixAction) -> dict:
    return {"dim": enc_int(a.dim), "generators": [enc_matrix(g) for g in a.generators]}


def decode_action(doc: Any, what: str, rank: int | None = None) -> MatrixAction:
    if not isinstance(doc, dict):
        raise DocumentError(f"{what}: expected an object")
    dim = dec_int(_field(doc, "dim", what), f"{what}.dim")
    gens = _field(doc, "generators", what)
    if dim < 1:
        raise DocumentError(f"{what}: torus dimension must be positive")
    if not isinstance(gens, list) or not gens:
        raise DocumentError(f"{what}: at least one generator is required")
    if rank is not None and len(gens) != rank:
        raise DocumentError(f"{what}: {len(gens)} generators for rank {rank}")
    mats = tuple(dec_matrix(g, f"{what}.generators[{i}]") for i, g in enumerate(gens))
    for i, g in enumerate(mats):
        if g.shape != (dim, dim):
            raise DocumentError(f"{what}: generator {i} has shape {g.shape}, expected ({dim}, {dim})")
    try:
        return MatrixAction(mats)
    except NonCommuting as exc:
        i, j = exc.pair
        raise DocumentError(f"{what}: generators {i} and {j} do not commute") from exc
    except (NotUnimodular, DimensionMismatch) as exc:
        raise DocumentError(f"{what}: {exc}") from exc


@dataclass(frozen=True)
class SystemPair:
    source: MatrixAction
    target: MatrixAction
    factor_matrix: IntegerMatrix | None = None

    @property
    def rank(self) -> int:
        return self.source.rank


def encode_system(p: SystemPair) -> dict:
    doc = {
        "format": SYSTEM_FORMAT,
        "rank": enc_int(p.rank),
        "source": encode_action(p.source),
        "target": encode_action(p.target),
    }
    if p.factor_matrix is not None:
        doc["factor_matrix"] = enc_matrix(p.factor_matrix)
    return doc


def decode_system(doc: dict) -> SystemPair:
    _check_format(doc, SYSTEM_FORMAT)
    rank = dec_int(_field(doc, "rank", "document"), "rank")
    if rank < 1:
        raise DocumentError("rank must be positive")
    source = decode_action(_field(doc, "source", "document"), "source", rank)
    target = decode_action(_field(doc, "target", "document"), "target", rank)
    theta = None
    if doc.get("factor_matrix") is not None:
        theta = dec_matrix(doc["factor_matrix"], "factor_matrix")
    return SystemPair(source, target, theta)


# --- decisions -------------------------------------------------------------


def _enc_value(x):
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        return enc_int(x)
    if isinstance(x, (list, tuple)):
        return [_enc_value(y) for y in x]
    return x


def _dec_value(x):
    if isinstance(x, str):
        try:
            return int(x)
        except ValueError:
            return x
    if isinstance(x, list):
        return [_dec_value(y) for y in x]
    return x


def encode_decision(r: DecisionReport) -> dict:
    c = r.certificate
    cert: dict[str, Any] = {"kind": c.kind}
    if c.f_lattice is not None:
        cert["f_lattice"] = [enc_vec(z) for z in c.f_lattice]
    if c.gamma_rho is not None:
        cert["gamma_rho"] = [enc_vec(b) for b in c.gamma_rho]
    if c.gamma_index is not None:
        cert["gamma_index"] = enc_int(c.gamma_index)
    if c.vector is not None:
        cert["vector"] = enc_vec(c.vector)
    if c.k_index is not None:
        cert["k_index"] = enc_int(c.k_index)
    if c.determinant is not None:
        cert["determinant"] = enc_int(c.determinant)
    return {
        "format": DECISION_FORMAT,
        "exists_nonaffine": bool(r.exists_nonaffine),
        "mode": r.mode,
        "certificate": cert,
        "diagnostics": {k: _enc_value(v) for k, v in r.diagnostics.items()},
    }


def decode_decision(doc: dict) -> DecisionReport:
    _check_format(doc, DECISION_FORMAT)
    exists = _field(doc, "exists_nonaffine", "decision")
    mode = _field(doc, "mode", "decision")
    if not isinstance(exists, bool) or mode not in MODES:
        raise DocumentError("decision: bad exists_nonaffine or mode")
    cd = _field(doc, "certificate", "decision")
    if not isinstance(cd, dict) or "kind" not in cd:
        raise DocumentError("decision: certificate needs a kind")

    def opt(key, dec):
        return dec(cd[key], f"certificate.{key}") if key in cd else None

    def vecs(v, what):
        if not isinstance(v, list):
            raise DocumentError(f"{what}: expected a list")
        return tuple(dec_vec(z, what) for z in v)

    cert = Certificate(
        kind=cd["kind"],
        f_lattice=opt("f_lattice", vecs),
        gamma_rho=opt("gamma_rho", vecs),
        gamma_index=opt("gamma_index", dec_int),
        vector=opt("vector", dec_vec),
        k_index=opt("k_index", dec_int),
        determinant=opt("determinant", dec_int),
    )
    diag = {k: _dec_value(v) for k, v in doc.get("diagnostics", {}).items()}
    return DecisionReport(exists, mode, cert, diag)


# --- witnesses -------------------------------------------------------------


def encode_witness(w: WitnessSpec) -> dict:
    return {
        "format": WITNESS_FORMAT,
        "source": encode_action(w.rho),
        "target": encode_action(w.sigma),
        "gamma_rho": [enc_vec(b) for b in w.gamma_rho.basis],
        "chi0": enc_vec(w.chi0),
        "x0": [enc_real(x) for x in w.x0],
        "reps": [enc_vec(g) for g in w.reps],
        "c": [enc_real(x) for x in w.c],
        "bump_center": enc_real(w.bump_center),
        "bump_radius": enc_real(w.bump_radius),
        "v": enc_vec(w.v),
        "rho_mats": [enc_matrix(M) for M in w.rho_mats],
        "sigma_inv_mats": [enc_matrix(M) for M in w.sigma_inv_mats],
    }


def decode_witness(doc: dict) -> WitnessSpec:
    """Structural validation only: a corrupted but well-formed witness must
    still load so that verification can reject it."""
    _check_format(doc, WITNESS_FORMAT)
    rho = decode_action(_field(doc, "source", "witness"), "source")
    sigma = decode_action(_field(doc, "target", "witness"), "target", rho.rank)
    try:
        lam = SubgroupLattice.from_generators(
            [dec_vec(b, "gamma_rho") for b in _field(doc, "gamma_rho", "witness")], rho.rank
        )
    except (ValueError, DimensionMismatch, TypeError) as exc:
        raise DocumentError(f"gamma_rho: {exc}") from exc
    chi0 = dec_vec(_field(doc, "chi0", "witness"), "chi0")
    x0 = tuple(dec_real(x, "x0") for x in _field(doc, "x0", "witness"))
    reps = tuple(dec_vec(g, "reps") for g in _field(doc, "reps", "witness"))
    c = tuple(dec_real(x, "c") for x in _field(doc, "c", "witness"))
    radius = dec_real(_field(doc, "bump_radius", "witness"), "bump_radius")
    center = dec_real(_field(doc, "bump_center", "witness"), "bump_center")
    v = dec_vec(_field(doc, "v", "witness"), "v")
    rho_mats = tuple(dec_matrix(M, "rho_mats") for M in _field(doc, "rho_mats", "witness"))
    sigma_inv = tuple(dec_matrix(M, "sigma_inv_mats")
                      for M in _field(doc, "sigma_inv_mats", "witness"))

    d = len(reps)
    m, n = rho.dim, sigma.dim
    problems = []
    if len(chi0) != m or len(x0) != m:
        problems.append("chi0/x0 length must equal the source dimension")
    if len(v) != n:
        problems.append("v length must equal the target dimension")
    if d == 0 or len(c) != d + 1 or len(rho_mats) != d or len(sigma_inv) != d:
        problems.append("reps, c, rho_mats and sigma_inv_mats lengths disagree")
    if any(len(g) != rho.rank for g in reps):
        problems.append("representatives must have one exponent per generator")
    if any(M.shape != (m, m) for M in rho_mats) or any(M.shape != (n, n) for M in sigma_inv):
        problems.append("matrix shapes disagree with the tori")
    if not radius > 0:
        problems.append("bump_radius must be positive")
    if c and center != c[-1]:
        problems.append("bump_center must equal the last circle value")
    if problems:
        raise DocumentError("witness: " + "; ".join(problems))
    return WitnessSpec(rho, sigma, lam, chi0, x0, reps, c, radius, v, rho_mats, sigma_inv)


# --- verification reports --------------------------------------------------


def encode_verification(r: VerificationReport) -> dict:
    return {
        "format": VERIFICATION_FORMAT,
        "samples": enc_int(r.samples),
        "seed": enc_int(r.seed),
        "max_equivariance_error": enc_real(r.max_equivariance_error),
        "per_generator_errors": [enc_real(e) for e in r.per_generator_errors],
        "nonconstancy_gap": enc_real(r.nonconstancy_gap),
        "tol": enc_real(r.tol),
        "nontriviality_threshold": enc_real(r.nontriviality_threshold),
        "pass": r.passed,
    }


def decode_verification(doc: dict) -> VerificationReport:
    _check_format(doc, VERIFICATION_FORMAT)
    r = VerificationReport(
        samples=dec_int(_field(doc, "samples", "verification")),
        seed=dec_int(_field(doc, "seed", "verification")),
        max_equivariance_error=dec_real(_field(doc, "max_equivariance_error", "verification")),
        per_generator_errors=tuple(dec_real(e) for e in doc.get("per_generator_errors", [])),
        nonconstancy_gap=dec_real(_field(doc, "nonconstancy_gap", "verification")),
        tol=dec_real(_field(doc, "tol", "verification")),
        nontriviality_threshold=dec_real(_field(doc, "nontriviality_threshold", "verification")),
    )
    if doc.get("pass") is not None and doc["pass"] != r.passed:
        raise DocumentError("verification: pass flag disagrees with the recorded numbers")
    return r
