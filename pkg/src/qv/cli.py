"""``qv`` command line.

Exit codes: 0 success, 1 domain error (including failed checks), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .arith import GroundRing, Laurent
from .cochain import Poly, basis_h2, basis_h3, is_cocycle, load_cocycles, named_cocycle
from .coloring import SumAll, enumerate_colorings, parse_policy
from .diagram import closure_diagram, parse_braid
from .errors import ParseError, QVError
from .expansion import (InvariantConfig, SubstitutionParams, compare_lifts, expand,
                        singular_vassiliev, validate_substitution, vassiliev_coeffs)
from .fqlinalg import CohomologyOracle
from .invariant import GroupRingElement, state_sum
from .presets import PRESETS, reference_element
from .quandle import AlexanderQuandle, check_axioms
from .rmatrix import build_r_matrix, check_yang_baxter, markov_conditions, operator_invariant


# ---------------------------------------------------------------------------
# group-ring files
# ---------------------------------------------------------------------------

_TOP_FIELDS = {"p", "h", "terms", "lift_source"}
_TERM_FIELDS = {"coeff", "exp_in_S", "lift"}


def groupring_to_dict(G: GroupRingElement) -> dict:
    R = G.ring
    return {
        "p": R.p,
        "h": list(R.h),
        "lift_source": "user" if G.user_lifts else "normalized",
        "terms": [{"coeff": c, "exp_in_S": R.format(G.exponent(lift)), "lift": str(lift)}
                  for lift, c in G.terms],
    }


def emit_groupring(G: GroupRingElement, path: str | Path | None = None) -> str:
    text = json.dumps(groupring_to_dict(G), indent=2) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text


def _locate(text: str, needle: str) -> tuple[int | None, int | None]:
    k = text.find(needle)
    if k < 0:
        return None, None
    line = text.count("\n", 0, k) + 1
    return line, k - (text.rfind("\n", 0, k) + 1) + 1


def parse_groupring(text: str) -> GroupRingElement:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, dict):
        raise ParseError("expected a JSON object", 1, 1)
    for key in data:
        if key not in _TOP_FIELDS:
            raise ParseError(f"unknown field {key!r}", *_locate(text, f'"{key}"'))
    for key in ("p", "h", "terms"):
        if key not in data:
            raise ParseError(f"missing field {key!r}", 1, 1)
    try:
        R = GroundRing(int(data["p"]), tuple(int(c) for c in data["h"]))
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad ring descriptor: {exc}", *_locate(text, '"h"')) from None
    terms = []
    for t in data["terms"]:
        if not isinstance(t, dict):
            raise ParseError("each term must be an object", *_locate(text, '"terms"'))
        for key in t:
            if key not in _TERM_FIELDS:
                raise ParseError(f"unknown field {key!r}", *_locate(text, f'"{key}"'))
        if "coeff" not in t or ("lift" not in t and "exp_in_S" not in t):
            raise ParseError("a term needs 'coeff' and 'lift' or 'exp_in_S'", *_locate(text, '"terms"'))
        source = t.get("lift", t.get("exp_in_S"))
        try:
            lift = Laurent.parse(str(source))
        except ParseError as exc:
            raise ParseError(f"bad lift {source!r}: {exc}", *_locate(text, json.dumps(source))) from None
        if "exp_in_S" in t:
            want = R.parse(str(t["exp_in_S"]))
            if R.reduce(lift) != want:
                raise ParseError(f"lift {source} does not reduce to {t['exp_in_S']}",
                                 *_locate(text, json.dumps(source)))
        terms.append((lift, int(t["coeff"])))
    user = data.get("lift_source", "user") != "normalized"
    return GroupRingElement(R, tuple(terms), user_lifts=user)


def read_groupring(path: str | Path) -> GroupRingElement:
    return parse_groupring(Path(path).read_text())


# ---------------------------------------------------------------------------
# configuration
# ---------------------------------------------------------------------------

@dataclass
class RunConfig:
    command: str
    p: int | None = None
    h: tuple[int, ...] | None = None
    w: str = "w"
    braid: str | None = None
    deg: int | None = None
    cocycle: str | None = None
    policy: str = "sum-all"
    a: int | None = None
    b: int | None = None
    D: int = 8
    out: str | None = None
    diag: bool = False
    n: int = 3

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> "RunConfig":
        fields = {k: v for k, v in vars(ns).items() if k in cls.__dataclass_fields__ and v is not None}
        if "h" in fields:
            fields["h"] = tuple(fields["h"])
        return cls(**fields)

    def ring(self) -> GroundRing:
        if self.p is None or self.h is None:
            raise ParseError("--p and --h are required")
        return GroundRing(self.p, self.h)

    def quandle(self) -> AlexanderQuandle:
        R = self.ring()
        return AlexanderQuandle(R, R.parse(self.w))

    def cochains(self, Q: AlexanderQuandle) -> list[Poly]:
        if self.cocycle is None:
            raise ParseError("--cocycle is required")
        path = Path(self.cocycle)
        if path.is_file():
            return load_cocycles(path.read_text(), Q.ring.p)
        return [named_cocycle(self.cocycle, Q)]

    def single_cochain(self, Q: AlexanderQuandle) -> Poly:
        fs = self.cochains(Q)
        if len(fs) != 1:
            raise ParseError(f"expected one cochain in {self.cocycle}, found {len(fs)}")
        f = fs[0]
        if self.deg is not None and f.nvars != self.deg:
            raise ParseError(f"--deg {self.deg} but the cochain has {f.nvars} variables")
        return f


def _coeff_list(text: str) -> list[int]:
    try:
        return [int(c) for c in re.split(r"[,\s]+", text.strip()) if c]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qv", description="Quandle cocycle invariants of closed braids "
                                 "and their Vassiliev residues.")
    sub = ap.add_subparsers(dest="command", required=True)

    def ring_flags(p: argparse.ArgumentParser, required: bool = True) -> None:
        p.add_argument("--p", type=int, required=required, help="prime characteristic")
        p.add_argument("--h", type=_coeff_list, required=required,
                       help="monic modulus, coefficients constant first, e.g. 1,2,1")
        p.add_argument("--w", default="w", help="quandle parameter as an expression in w (default w)")

    def cocycle_flag(p: argparse.ArgumentParser, required: bool = True) -> None:
        p.add_argument("--cocycle", required=required,
                       help="named cocycle (example111, mochizuki-p3, basis2:v,u, basis3:F:...) or a file")

    def policy_flag(p: argparse.ArgumentParser) -> None:
        p.add_argument("--policy", default="sum-all",
                       help="sum-all | fix-arc:<id>=<expr> | fix-arc-region:<id>=<expr>,<expr>")

    def subst_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--a", type=int, required=True, help="t = exp(a*hbar)")
        p.add_argument("--b", type=int, required=True, help="w = exp(b*hbar)")
        p.add_argument("--D", type=int, default=8, help="truncation degree (default 8)")

    p = sub.add_parser("axioms", help="check the quandle axioms exhaustively")
    ring_flags(p)

    p = sub.add_parser("basis", help="list the cohomology basis")
    ring_flags(p)
    p.add_argument("--deg", type=int, choices=(2, 3), required=True)
    p.add_argument("--oracle", action="store_true", help="compare with the brute-force rank")

    p = sub.add_parser("cocycle-check", help="test cochains for the cocycle condition")
    ring_flags(p)
    cocycle_flag(p)

    p = sub.add_parser("diagram", help="dump arcs, crossings and regions of a closed braid")
    p.add_argument("--braid", required=True)

    p = sub.add_parser("color", help="count colorings of a closed braid")
    ring_flags(p)
    p.add_argument("--braid", required=True)
    policy_flag(p)
    p.add_argument("--diag", action="store_true", help="list the colorings")

    for name, text in (("invariant", "cocycle state sum"), ("operator", "braid trace of the R-matrix")):
        p = sub.add_parser(name, help=text)
        ring_flags(p)
        p.add_argument("--braid", required=True)
        if name == "invariant":
            p.add_argument("--deg", type=int, choices=(2, 3))
            policy_flag(p)
            p.add_argument("--diag", action="store_true", help="per-coloring symbolic exponents")
        cocycle_flag(p)
        p.add_argument("--out", help="write the group-ring file here")

    p = sub.add_parser("ybe", help="Yang-Baxter and Markov checks for a 2-cocycle R-matrix")
    ring_flags(p)
    cocycle_flag(p)

    p = sub.add_parser("expand", help="expand a group-ring file in hbar")
    p.add_argument("--in", dest="infile", required=True)
    subst_flags(p)

    p = sub.add_parser("vassiliev", help="state sum, expansion and residues of a (singular) braid")
    ring_flags(p)
    p.add_argument("--braid", required=True)
    p.add_argument("--deg", type=int, choices=(2, 3))
    cocycle_flag(p)
    policy_flag(p)
    subst_flags(p)

    p = sub.add_parser("repro", help="recompute one of the torus-link examples")
    p.add_argument("example", choices=sorted(PRESETS))
    p.add_argument("--n", type=int, default=3, help="exponent of sigma_1 (a multiple of 3)")
    p.add_argument("--D", type=int, default=8)
    return ap


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def _print_series(series, p: int, out) -> None:
    report = vassiliev_coeffs(series, p)
    print(report.table(), file=out)


def cmd_axioms(cfg: RunConfig, ns, out) -> int:
    Q = cfg.quandle()
    rep = check_axioms(Q)
    print(Q, file=out)
    print(rep, file=out)
    return 0 if rep.ok else 1


def cmd_basis(cfg: RunConfig, ns, out) -> int:
    Q = cfg.quandle()
    basis = basis_h2(Q) if cfg.deg == 2 else basis_h3(Q)
    print(f"H^{cfg.deg} basis over {Q}: {len(basis)} element(s)", file=out)
    for f in basis:
        print(f"{f.label}: {f}", file=out)
    if ns.oracle:
        dim = CohomologyOracle(Q).dimension(cfg.deg)
        print(f"rank oracle dimension: {dim}", file=out)
        return 0 if dim == len(basis) else 1
    return 0


def cmd_cocycle_check(cfg: RunConfig, ns, out) -> int:
    Q = cfg.quandle()
    ok = True
    for f in cfg.cochains(Q):
        good = is_cocycle(f, Q)
        ok &= good
        print(f"{f.label or f}: {'cocycle' if good else 'not a cocycle'}", file=out)
    return 0 if ok else 1


def cmd_diagram(cfg: RunConfig, ns, out) -> int:
    print(closure_diagram(parse_braid(cfg.braid)).dump(), file=out)
    return 0


def cmd_color(cfg: RunConfig, ns, out) -> int:
    Q = cfg.quandle()
    policy = parse_policy(cfg.policy, Q)
    cs = enumerate_colorings(parse_braid(cfg.braid), Q, policy)
    print(len(cs), file=out)
    if cfg.diag:
        R = Q.ring
        for c in cs:
            print("  " + " ".join(f"{a}:{R.format(v)}" for a, v in c.arc_colors().items()), file=out)
    return 0


def _emit(G: GroupRingElement, cfg: RunConfig, out) -> None:
    text = emit_groupring(G, cfg.out)
    if cfg.out:
        print(f"{G}   (t=1: {G.eval_t1()}; written to {cfg.out})", file=out)
    else:
        out.write(text)


def cmd_invariant(cfg: RunConfig, ns, out) -> int:
    Q = cfg.quandle()
    f = cfg.single_cochain(Q)
    policy = parse_policy(cfg.policy, Q)
    S = state_sum(parse_braid(cfg.braid), f, Q, policy, diagnostics=cfg.diag)
    _emit(S.value, cfg, out)
    if cfg.diag:
        R = Q.ring
        for r in S.records:
            seed = ",".join(R.format(x) for x in r.seed)
            base = "" if r.base is None else f" base {R.format(r.base)}"
            print(f"seed ({seed}){base}: t^[{R.format(r.exponent)}] symbolic {r.symbolic}",
                  file=sys.stderr)
    return 0


def cmd_operator(cfg: RunConfig, ns, out) -> int:
    Q = cfg.quandle()
    f = cfg.single_cochain(Q)
    _emit(operator_invariant(parse_braid(cfg.braid), build_r_matrix(f, Q)), cfg, out)
    return 0


def cmd_ybe(cfg: RunConfig, ns, out) -> int:
    Q = cfg.quandle()
    ok = True
    for f in cfg.cochains(Q):
        R = build_r_matrix(f, Q)
        ybe, markov = check_yang_baxter(R), markov_conditions(R)
        ok &= ybe and markov
        print(f"{f.label or f}: yang-baxter {'pass' if ybe else 'FAIL'}, "
              f"markov (h = id) {'pass' if markov else 'FAIL'}", file=out)
    return 0 if ok else 1


def cmd_expand(cfg: RunConfig, ns, out) -> int:
    G = read_groupring(ns.infile)
    params = SubstitutionParams(cfg.a, cfg.b, G.ring, cfg.D)
    validate_substitution(params)
    series = expand(G, params)
    print(f"G = {G}", file=out)
    print(f"series: {series}", file=out)
    _print_series(series, G.ring.p, out)
    return 0


def cmd_vassiliev(cfg: RunConfig, ns, out) -> int:
    Q = cfg.quandle()
    f = cfg.single_cochain(Q)
    policy = parse_policy(cfg.policy, Q)
    params = SubstitutionParams(cfg.a, cfg.b, Q.ring, cfg.D)
    validate_substitution(params)
    b = parse_braid(cfg.braid)
    rep = singular_vassiliev(b, InvariantConfig(Q, f, policy), params)
    for sign, word, G in rep.terms:
        print(f"{'+' if sign > 0 else '-'} [{word}]  {G}", file=out)
    print(f"series: {rep.series}", file=out)
    print(rep.report.table(), file=out)
    if b.singular_count:
        print(f"double points: {b.singular_count}; residues below degree {b.singular_count} "
              f"{'vanish' if rep.vanishes_below(b.singular_count) else 'do NOT vanish'}", file=out)
    return 0


def cmd_repro(cfg: RunConfig, ns, out) -> int:
    P = PRESETS[ns.example](cfg.D)
    R = P.ring
    n = cfg.n
    print(f"{P.name}: sigma_1^{n} on 2 strands over {P.Q}", file=out)
    print(f"cocycle {P.cocycle.label}: {P.cocycle}", file=out)
    ok = is_cocycle(P.cocycle, P.Q)
    print(f"cocycle condition: {'holds' if ok else 'FAILS (computed anyway)'}", file=out)
    print(f"policy: {P.policy.describe(R)}", file=out)
    validate_substitution(P.params)
    print(f"substitution: t = exp({P.params.a} hbar), w = exp({P.params.b} hbar)", file=out)
    S = state_sum(parse_braid(f"2 ; {' '.join(['1'] * n)}"), P.cocycle, P.Q, P.policy, check=False)
    G = S.value
    print(f"\ncomputed Phi = {G}   (t=1: {G.eval_t1()})", file=out)
    print(G.describe(), file=out)
    cmp = compare_lifts(G, P.params)
    print("\nexpansion with normalized lifts:", file=out)
    print(f"series: {expand(G, P.params)}", file=out)
    print(cmp.reports["normalized"].table(), file=out)
    if not cmp.agree():
        print(f"lift conventions disagree in degrees {cmp.disagreements()}", file=out)
    if n % 3 == 0:
        ref = reference_element(P.name, n)
        print(f"\nclosed form      = {ref}   (t=1: {ref.eval_t1()})", file=out)
        print(f"equal in Z[S]: {'yes' if ref.equal_in_S(G) else 'NO'}", file=out)
        series = expand(ref, P.params)
        print("expansion of the closed form with its own lifts:", file=out)
        print(f"series: {series}", file=out)
        _print_series(series, R.p, out)
    return 0


COMMANDS = {
    "axioms": cmd_axioms, "basis": cmd_basis, "cocycle-check": cmd_cocycle_check,
    "diagram": cmd_diagram, "color": cmd_color, "invariant": cmd_invariant,
    "operator": cmd_operator, "ybe": cmd_ybe, "expand": cmd_expand,
    "vassiliev": cmd_vassiliev, "repro": cmd_repro,
}


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = RunConfig.from_args(ns)
    try:
        return COMMANDS[ns.command](cfg, ns, out)
    except (QVError, ValueError) as exc:
        print(f"qv {ns.command}: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
