"""Which units w make the divided-power 3-cochain a cocycle?

Runs over the order-9 rings F_3[w]/(h) for both monic quadratics with a unit
constant term, plus F_3 itself, and prints the verdict for every unit w.
"""

from __future__ import annotations

from qv.arith import GroundRing
from qv.cochain import is_cocycle, mochizuki_p3
from qv.quandle import AlexanderQuandle

RINGS = [GroundRing(3, (1, 1)), GroundRing(3, (1, 0, 1)), GroundRing(3, (1, 2, 1)),
         GroundRing(3, (2, 1, 1)), GroundRing(3, (2, 2, 1))]


def main() -> None:
    for R in RINGS:
        kind = "field" if R.is_field else "not a field"
        print(f"{R} ({kind})")
        for w in R.elements():
            if w == R.one or not R.is_unit(w):
                continue
            Q = AlexanderQuandle(R, w)
            print(f"  w = {R.format(w):6s} {'cocycle' if is_cocycle(mochizuki_p3(Q), Q) else '-'}")


if __name__ == "__main__":
    main()
