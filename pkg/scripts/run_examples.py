"""Run the full pipeline (decide, witness, verify) on every system document in data/."""

import argparse
from pathlib import Path

from torus_rigidity import documents as docs
from torus_rigidity.action import MatrixAction
from torus_rigidity.config import PipelineConfig
from torus_rigidity.decide import decide_almost, decide_cyclic, decide_factor, decide_nonaffine
from torus_rigidity.errors import RigidityError
from torus_rigidity.fixtures import example2_generators
from torus_rigidity.verify import brute_orbit_finite, check_equivariance
from torus_rigidity.witness import build_witness

DATA = Path(__file__).resolve().parent.parent / "data"


def yes_no(report):
    return f"{'YES' if report.exists_nonaffine else 'NO':3s} {report.certificate.kind}"


def run_pair(name, pair, cfg):
    print(f"== {name}")
    print(f"  exact   {yes_no(decide_nonaffine(pair.source, pair.target))}")
    print(f"  almost  {yes_no(decide_almost(pair.source, pair.target))}")
    if pair.rank == 1:
        A, B = pair.source.generators[0], pair.target.generators[0]
        print(f"  cyclic  {yes_no(decide_cyclic(A, B))}")
    if pair.factor_matrix is not None:
        try:
            print(f"  factor  {yes_no(decide_factor(pair.source, pair.target, pair.factor_matrix))}")
        except RigidityError as exc:
            print(f"  factor  {type(exc).__name__}: {exc}")
    report = decide_nonaffine(pair.source, pair.target)
    if report.exists_nonaffine:
        w = build_witness(pair.source, pair.target, report,
                          tol=cfg.witness.separation, max_attempts=cfg.witness.max_attempts)
        v = check_equivariance(w, pair.source, pair.target,
                               cfg.verify.samples, cfg.verify.seed, cfg.verify.tol)
        print(f"  witness d={w.d} chi0={w.chi0} v={w.v}: max error {v.max_equivariance_error:.2e}, "
              f"gap {v.nonconstancy_gap:.3f} -> {'pass' if v.passed else 'FAIL'}")


def run_example2(cfg):
    print("== non-commuting affine generators (semi-decision only)")
    gens = example2_generators(3)
    try:
        MatrixAction(tuple(gens))
    except RigidityError as exc:
        print(f"  rejected by the abelian decision: {exc}")
    for i in range(3):
        e = tuple(int(i == j) for j in range(3))
        r = brute_orbit_finite(gens, e, cfg.orbit.size_bound, cfg.orbit.norm_bound)
        print(f"  orbit of e{i + 1}: {r.status.value} after {r.size} points")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--data", type=Path, default=DATA)
    parser.add_argument("--config", type=Path, help="JSON file with PipelineConfig sections")
    args = parser.parse_args()
    cfg = PipelineConfig.load(args.config) if args.config else PipelineConfig()
    for path in sorted(args.data.glob("*.json")):
        try:
            pair = docs.decode_system(docs.loads(path.read_text()))
        except docs.DocumentError as exc:
            print(f"== {path.stem}\n  invalid document: {exc}")
            continue
        run_pair(path.stem, pair, cfg)
    run_example2(cfg)


if __name__ == "__main__":
    main()
