"""Residues of singular braid words under both preset configurations.

The resolved sum of a word with k double points should have vanishing
residues below degree k.  Prints the residues and a verdict per word, and
repeats the check with all colorings summed for comparison.
"""

from __future__ import annotations

import argparse
from dataclasses import replace

from qv.coloring import SumAll
from qv.diagram import parse_braid
from qv.expansion import singular_vassiliev
from qv.presets import PRESETS

WORDS = ["2 ; s1", "2 ; 1 1 s1", "3 ; 1 s2 -1", "2 ; 1 s1 s1", "2 ; s1 s1",
         "3 ; s1 2 s1 2", "3 ; 1 2 s1 s2 s1", "2 ; s1 s1 s1"]


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--D", type=int, default=4)
    ap.add_argument("words", nargs="*", default=WORDS)
    args = ap.parse_args()

    for name, make in PRESETS.items():
        P = make(args.D)
        for label, cfg in (("preset", P.config()), ("sum-all", replace(P.config(), policy=SumAll()))):
            print(f"== {name} ({label})")
            for text in args.words:
                b = parse_braid(text)
                rep = singular_vassiliev(b, cfg, P.params)
                k = b.singular_count
                verdict = "ok" if rep.vanishes_below(k) else "NONZERO"
                print(f"  {text:20s} k={k} residues={rep.report.residues} {verdict}")


if __name__ == "__main__":
    main()
