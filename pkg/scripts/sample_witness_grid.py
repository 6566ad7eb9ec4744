"""Tabulate the two fixture witnesses on a grid and write CSV files for plotting."""

import argparse
from pathlib import Path

import numpy as np

from torus_rigidity import fixtures as fx
from torus_rigidity.cli import grid_points
from torus_rigidity.decide import decide_nonaffine
from torus_rigidity.witness import build_witness, eval_f


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--grid", type=int, default=64)
    parser.add_argument("--out", type=Path, default=Path("grids"))
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for name, make in (("unipotent_to_identity", fx.unipotent_to_identity),
                       ("order3_to_unipotent", fx.order3_to_unipotent)):
        rho, sigma = make()
        w = build_witness(rho, sigma, decide_nonaffine(rho, sigma))
        X = grid_points(rho.dim, args.grid)
        table = np.hstack([X, eval_f(w, X)])
        path = args.out / f"{name}.csv"
        np.savetxt(path, table, fmt="%.15f", delimiter=",")
        print(f"{path}: {len(table)} rows, support fraction "
              f"{np.mean(np.any(table[:, rho.dim:] != 0, axis=1)):.3f}")


if __name__ == "__main__":
    main()
