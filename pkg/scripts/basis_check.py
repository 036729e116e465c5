"""Cocycle test and rank-oracle comparison for the H^2 / H^3 bases.

Also runs the alternative coefficient of the I4-3 family (``printed_i43``)
to show it fails the cocycle condition.

    python scripts/basis_check.py --fields 2:1,1,1 3:1,0,1 2:1,1,0,1
"""

from __future__ import annotations

import argparse

from qv.arith import GroundRing
from qv.cochain import basis_h2, basis_h3, is_cocycle
from qv.fqlinalg import CohomologyOracle
from qv.quandle import AlexanderQuandle


def parse_field(text: str) -> GroundRing:
    p, h = text.split(":")
    return GroundRing(int(p), tuple(int(c) for c in h.split(",")))


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--fields", nargs="+", default=["2:1,1,1", "3:1,0,1", "2:1,1,0,1"])
    ap.add_argument("--no-oracle", action="store_true")
    args = ap.parse_args()

    for R in map(parse_field, args.fields):
        for w in R.elements():
            if w in (R.zero, R.one):
                continue
            Q = AlexanderQuandle(R, w)
            b2, b3 = basis_h2(Q), basis_h3(Q)
            ok = all(is_cocycle(f, Q) for f in b2 + b3)
            line = f"{R} w={R.format(w):8s} |H2|={len(b2)} |H3|={len(b3)} cocycles={ok}"
            if not args.no_oracle:
                o = CohomologyOracle(Q)
                line += f" oracle=({o.dimension(2)}, {o.dimension(3)})"
            alt = [f for f in basis_h3(Q, printed_i43=True) if "I4-3" in f.label]
            if alt:
                line += f" alt-I4-3 cocycles={sum(is_cocycle(f, Q) for f in alt)}/{len(alt)}"
            print(line)


if __name__ == "__main__":
    main()
