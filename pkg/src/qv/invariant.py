"""Cocycle state sums valued in the group ring Z[S].

A group-ring element is a finite sum ``sum c_i t^{E_i}`` where each exponent is
carried as an integer Laurent polynomial ``E_i`` in w (the ring generator).
Two exponents are the same group element when they reduce to the same element
of S, but the expansion engine needs the integer lift itself, so terms are
keyed by lift and several lifts may share one class.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arith import Elem, GroundRing, Laurent
from .coloring import (ArcColoring, ColoringPolicy, SumAll, base_colors, enumerate_colorings,
                       region_levels, seed_lift)
from .cochain import Poly, is_cocycle
from .diagram import NEGATIVE, POSITIVE, BraidWord, closure_diagram
from .errors import ArityMismatch, NotACocycle
from .quandle import AlexanderQuandle


def _lift_key(e: Laurent) -> tuple:
    return e.terms


@dataclass(frozen=True)
class GroupRingElement:
    ring: GroundRing
    terms: tuple[tuple[Laurent, int], ...] = ()
    user_lifts: bool = False

    def __post_init__(self) -> None:
        merged: dict[tuple, list] = {}
        for lift, c in self.terms:
            if lift.p is not None:
                lift = lift.lift()
            slot = merged.setdefault(_lift_key(lift), [lift, 0])
            slot[1] += c
        terms = tuple((lift, c) for lift, c in
                      sorted(merged.values(), key=lambda lc: self._order(lc[0])) if c)
        object.__setattr__(self, "terms", terms)

    def _order(self, lift: Laurent):
        return (self.ring.index(self.ring.reduce(lift)), lift.terms)

    # -- constructors --------------------------------------------------------
    @classmethod
    def from_classes(cls, ring: GroundRing, counts: dict[Elem, int]) -> "GroupRingElement":
        """One term per class, each carrying its augmentation-normalized lift."""
        return cls(ring, tuple((ring.normalized_lift(e), c) for e, c in counts.items()))

    @classmethod
    def scalar(cls, ring: GroundRing, c: int) -> "GroupRingElement":
        return cls(ring, ((Laurent.const(0), c),))

    # -- views ---------------------------------------------------------------
    def exponent(self, lift: Laurent) -> Elem:
        return self.ring.reduce(lift)

    def classes(self) -> dict[Elem, int]:
        out: dict[Elem, int] = {}
        for lift, c in self.terms:
            e = self.exponent(lift)
            out[e] = out.get(e, 0) + c
        return {e: c for e, c in sorted(out.items(), key=lambda kv: self.ring.index(kv[0])) if c}

    def equal_in_S(self, other: "GroupRingElement") -> bool:
        return self.ring == other.ring and self.classes() == other.classes()

    def eval_t1(self) -> int:
        return sum(c for _, c in self.terms)

    def normalized(self) -> "GroupRingElement":
        return GroupRingElement.from_classes(self.ring, self.classes())

    def shifted(self, index: int, delta: Laurent) -> "GroupRingElement":
        """Copy with the lift of term ``index`` replaced by ``lift + delta``."""
        terms = list(self.terms)
        lift, c = terms[index]
        terms[index] = (lift + delta, c)
        return GroupRingElement(self.ring, tuple(terms), self.user_lifts)

    # -- algebra -------------------------------------------------------------
    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        return GroupRingElement(self.ring, self.terms + other.terms, self.user_lifts or other.user_lifts)

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement(self.ring, tuple((l, -c) for l, c in self.terms), self.user_lifts)

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        return self + (-other)

    def __mul__(self, other: "GroupRingElement") -> "GroupRingElement":
        terms = tuple((a + b, c * d) for a, c in self.terms for b, d in other.terms)
        return GroupRingElement(self.ring, terms, self.user_lifts or other.user_lifts)

    def __str__(self) -> str:
        parts = []
        for e, c in self.classes().items():
            if e == self.ring.zero:
                parts.append(str(c))
            else:
                parts.append(f"{c}*t^({self.ring.format(e)})")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"

    def describe(self) -> str:
        """Terms with their lifts, one per line."""
        return "\n".join(f"{c:+d} t^[{self.ring.format(self.exponent(l))}]  lift {l}"
                         for l, c in self.terms)


def groupring_eval_t1(G: GroupRingElement) -> int:
    return G.eval_t1()


# ---------------------------------------------------------------------------
# state sums
# ---------------------------------------------------------------------------

@dataclass
class ColoringRecord:
    """Per-coloring diagnostic: seed, base region color, exponent in S and the
    symbolic exponent built from the propagated lifts."""
    seed: tuple[Elem, ...]
    base: Elem | None
    exponent: Elem
    symbolic: Laurent | None = None


@dataclass
class StateSum:
    value: GroupRingElement
    colorings: int
    cocycle_ok: bool
    records: list[ColoringRecord] = field(default_factory=list)


def _table_index(args: tuple[int, ...], q: int) -> int:
    k = 0
    for a in args:
        k = k * q + a
    return k


def crossing_arguments(Q: AlexanderQuandle, kind: int, x: Elem, y: Elem) -> tuple[int, Elem, Elem]:
    """(sign, first, second) for the crossing weight of a letter whose
    incoming colors are ``x`` (left) and ``y`` (right).

    A positive letter weighs ``+f(x, y)``; a negative one weighs ``-f(a, x)``
    with ``a*x = y``, so that it undoes the positive letter exactly.
    """
    if kind == POSITIVE:
        return 1, x, y
    if kind == NEGATIVE:
        return -1, Q.unop(y, x), x
    raise ValueError("double points have no weight")


def _symbolic_args(Q, kind, x, y):
    if kind == POSITIVE:
        return x, y
    return Q.unop_symbolic(y, x), x


def _state_sum(b: BraidWord, f: Poly, Q: AlexanderQuandle, policy: ColoringPolicy | None,
               degree: int, check: bool, diagnostics: bool) -> StateSum:
    if f.nvars != degree:
        raise ArityMismatch(f"expected a {degree}-cochain, got {f.nvars} variables")
    ok = is_cocycle(f, Q)
    if check and not ok:
        raise NotACocycle(f"{f} is not a {degree}-cocycle for {Q}")
    policy = policy or SumAll()
    R = Q.ring
    q = R.order
    D = closure_diagram(b)
    table = f.value_table(Q)
    add, neg = R.add_table, R.neg_table
    idx = R.index
    colorings = enumerate_colorings(b, Q, policy, symbolic=diagnostics, diagram=D)
    bases = base_colors(policy, Q) if degree == 3 else [None]
    counts: dict[Elem, int] = {}
    records = []
    for c in colorings:
        for base in bases:
            regions = region_levels(c, Q, base) if degree == 3 else None
            acc = 0
            sym = Laurent((), R.p) if diagnostics else None
            for L, let in enumerate(b.letters):
                i = let.index - 1
                x, y = c.levels[L][i], c.levels[L][i + 1]
                sign, u, v = crossing_arguments(Q, let.kind, x, y)
                args = (u, v) if degree == 2 else (regions[L][i], u, v)
                val = table[_table_index(tuple(idx(a) for a in args), q)]
                acc = add[acc][val if sign > 0 else neg[val]]
                if diagnostics:
                    lx, ly = c.lifts[L][i].mod(R.p), c.lifts[L][i + 1].mod(R.p)
                    su, sv = _symbolic_args(Q, let.kind, lx, ly)
                    sargs = (su, sv)
                    if degree == 3:
                        sargs = (_region_lift(Q, c, base, L, i),) + sargs
                    term = f.evaluate_symbolic(list(sargs))
                    sym = sym + term if sign > 0 else sym - term
            e = R.element(acc)
            counts[e] = counts.get(e, 0) + 1
            if diagnostics:
                records.append(ColoringRecord(c.seed, base, e, sym.lift()))
    return StateSum(GroupRingElement.from_classes(R, counts), len(colorings) * len(bases), ok, records)


def _region_lift(Q: AlexanderQuandle, c: ArcColoring, base: Elem, L: int, i: int) -> Laurent:
    z = seed_lift(Q, base).mod(Q.ring.p)
    for j in range(i):
        z = Q.op_symbolic(z, c.lifts[L][j].mod(Q.ring.p))
    return z


def state_sum_2(b: BraidWord, f: Poly, Q: AlexanderQuandle, policy: ColoringPolicy | None = None,
                check: bool = True, diagnostics: bool = False) -> GroupRingElement:
    """Sum over colorings of ``t`` to the signed total of ``f`` over crossings."""
    return _state_sum(b, f, Q, policy, 2, check, diagnostics).value


def state_sum_3(b: BraidWord, phi: Poly, Q: AlexanderQuandle, policy: ColoringPolicy | None = None,
                check: bool = True, diagnostics: bool = False) -> GroupRingElement:
    """Shadow version: the weight of a crossing is ``phi(z, ., .)`` with ``z`` the
    color of the region west of it.  Under ``SumAll`` and ``FixArc`` the
    unbounded region runs over all of S."""
    return _state_sum(b, phi, Q, policy, 3, check, diagnostics).value


def state_sum(b: BraidWord, f: Poly, Q: AlexanderQuandle, policy: ColoringPolicy | None = None,
              check: bool = True, diagnostics: bool = False) -> StateSum:
    """Full record (value, counts, cocycle status, per-coloring diagnostics)."""
    return _state_sum(b, f, Q, policy, f.nvars, check, diagnostics)


__all__ = ["GroupRingElement", "StateSum", "ColoringRecord", "state_sum", "state_sum_2",
           "state_sum_3", "groupring_eval_t1", "crossing_arguments"]
