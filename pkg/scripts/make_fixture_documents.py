"""Write the fixture system-pair documents into data/."""

import argparse
from pathlib import Path

from torus_rigidity import fixtures as fx
from torus_rigidity.action import MatrixAction
from torus_rigidity.documents import SystemPair, dumps, encode_action, encode_system, SYSTEM_FORMAT


def pairs():
    yield "example1", SystemPair(*fx.example1_pair())
    yield "unipotent_to_identity", SystemPair(*fx.unipotent_to_identity())
    yield "order3_to_unipotent", SystemPair(*fx.order3_to_unipotent())
    yield "cat_source", SystemPair(fx.cat_action(), fx.identity_action(1))
    yield "cat_target", SystemPair(fx.unipotent_action(), fx.cat_action())
    yield "identity", SystemPair(fx.identity_action(2), fx.identity_action(2))
    yield "factor", SystemPair(fx.unipotent_action(), fx.identity_action(1), fx.FACTOR_THETA)
    yield "rank2", SystemPair(
        fx.orbit_fixture_actions()["unipotent_and_minus_identity"],
        MatrixAction((fx.ONE, fx.MINUS_ONE)),
    )
    yield "three_torus", SystemPair(
        MatrixAction(((((1, 1, 0), (0, 1, 0), (0, 0, 1))),)), fx.identity_action(1)
    )


def noncommuting_document():
    doc = encode_system(SystemPair(fx.identity_action(2, 2), fx.identity_action(1, 2)))
    doc["source"]["generators"] = [
        [[str(a) for a in r] for r in fx.UNIPOTENT.rows],
        [[str(a) for a in r] for r in fx.UNIPOTENT.T.rows],
    ]
    return doc


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=Path(__file__).resolve().parent.parent / "data", type=Path)
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for name, pair in pairs():
        (args.out / f"{name}.json").write_text(dumps(encode_system(pair)))
    (args.out / "noncommuting.json").write_text(dumps(noncommuting_document()))
    print(f"wrote fixture documents to {args.out}")


if __name__ == "__main__":
    main()
