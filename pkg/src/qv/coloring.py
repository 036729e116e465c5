"""Quandle colorings of closed braids and their shadow extensions.

Colorings are found by seeding the top colors and pushing them through the
word; a seed survives when the bottom colors equal the top ones.  Alongside the
colors in S we push integer lifts through the same formulas with w kept as an
indeterminate, so every color also has a symbolic record that reduces to it.

Crossing rules (strands oriented downward, ``x`` left and ``y`` right above
the crossing):

* positive letter: ``(x, y) -> (y, x*y)``
* negative letter: ``(x, y) -> (y / x, x)`` where ``y / x`` solves ``c*x = y``

Regions: crossing an arc colored ``c`` from its right side to its left side
sends a region color ``z`` to ``z*c``.
"""

from __future__ import annotations

import itertools
import re
from collections import deque
from dataclasses import dataclass, field

from .arith import Elem, Laurent
from .cochain import omega_poly
from .diagram import NEGATIVE, POSITIVE, BraidWord, LinkDiagram, closure_diagram
from .errors import InconsistentColoring, PolicyInvalid, SingularPresent
from .quandle import AlexanderQuandle


# ---------------------------------------------------------------------------
# policies
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SumAll:
    def describe(self, R) -> str:
        return "sum-all"


@dataclass(frozen=True)
class FixArc:
    arc: int
    color: Elem

    def describe(self, R) -> str:
        return f"fix-arc:{self.arc}={R.format(self.color)}"


@dataclass(frozen=True)
class FixArcAndRegion:
    """Fix one arc color and the color of the unbounded region."""
    arc: int
    color: Elem
    region_color: Elem

    def describe(self, R) -> str:
        return f"fix-arc-region:{self.arc}={R.format(self.color)},{R.format(self.region_color)}"


ColoringPolicy = SumAll | FixArc | FixArcAndRegion

_POLICY = re.compile(r"^(sum-all|fix-arc:(\d+)=([^,]+)|fix-arc-region:(\d+)=([^,]+),(.+))$")


def parse_policy(text: str, Q: AlexanderQuandle) -> ColoringPolicy:
    m = _POLICY.match(text.strip())
    if not m:
        raise PolicyInvalid(f"unrecognised policy {text!r}")
    R = Q.ring
    if m.group(1) == "sum-all":
        return SumAll()
    if m.group(2) is not None:
        return FixArc(int(m.group(2)), R.parse(m.group(3)))
    return FixArcAndRegion(int(m.group(4)), R.parse(m.group(5)), R.parse(m.group(6)))


def check_policy(policy: ColoringPolicy, D: LinkDiagram) -> None:
    if isinstance(policy, (FixArc, FixArcAndRegion)) and policy.arc not in D.arcs:
        raise PolicyInvalid(f"arc {policy.arc} does not exist (diagram has {len(D.arcs)} arcs)")


def base_colors(policy: ColoringPolicy, Q: AlexanderQuandle) -> list[Elem]:
    """Colors the unbounded region runs over."""
    if isinstance(policy, FixArcAndRegion):
        return [Q.ring.check(tuple(policy.region_color))]
    return Q.ring.element_list


# ---------------------------------------------------------------------------
# colorings
# ---------------------------------------------------------------------------

@dataclass
class ArcColoring:
    """A valid coloring, stored level by level.

    ``levels[L][j]`` is the color of the segment at position ``j`` (0-based)
    on level ``L``; ``lifts`` holds the matching symbolic records.
    """
    diagram: LinkDiagram
    levels: list[tuple[Elem, ...]]
    lifts: list[tuple[Laurent, ...]] | None = None

    @property
    def seed(self) -> tuple[Elem, ...]:
        return self.levels[0]

    def arc_colors(self) -> dict[int, Elem]:
        out: dict[int, Elem] = {}
        for (L, j), a in sorted(self.diagram.segment_arc.items()):
            out.setdefault(a, self.levels[L][j - 1])
        return out

    def arc_lifts(self) -> dict[int, Laurent]:
        assert self.lifts is not None
        out: dict[int, Laurent] = {}
        for (L, j), a in sorted(self.diagram.segment_arc.items()):
            out.setdefault(a, self.lifts[L][j - 1])
        return out

    def is_trivial(self) -> bool:
        return len(set(self.seed)) == 1 and all(len(set(lv)) == 1 for lv in self.levels)


@dataclass
class ShadowColoring:
    arcs: ArcColoring
    regions: dict[int, Elem]
    region_lifts: dict[int, Laurent] | None = None


def seed_lift(Q: AlexanderQuandle, e: Elem) -> Laurent:
    """Integer polynomial in w (the quandle parameter) that reduces to ``e``."""
    return omega_poly(Q, e).lift()


def crossing_step(Q: AlexanderQuandle, kind: int, x, y, symbolic: bool = False):
    op = Q.op_symbolic if symbolic else Q.op
    unop = Q.unop_symbolic if symbolic else Q.unop
    if kind == POSITIVE:
        return y, op(x, y)
    if kind == NEGATIVE:
        return unop(y, x), x
    raise SingularPresent("cannot color a double point")


def propagate(b: BraidWord, Q: AlexanderQuandle, seed, symbolic: bool = False) -> list[tuple]:
    state = list(seed)
    levels = [tuple(state)]
    for let in b.letters:
        i = let.index - 1
        state[i], state[i + 1] = crossing_step(Q, let.kind, state[i], state[i + 1], symbolic)
        levels.append(tuple(state))
    return levels


def enumerate_colorings(b: BraidWord, Q: AlexanderQuandle, policy: ColoringPolicy | None = None,
                        symbolic: bool = False, diagram: LinkDiagram | None = None) -> list[ArcColoring]:
    """All colorings allowed by ``policy`` in lexicographic seed order."""
    policy = policy or SumAll()
    D = diagram or closure_diagram(b)
    check_policy(policy, D)
    R = Q.ring
    fixed = None
    if isinstance(policy, (FixArc, FixArcAndRegion)):
        fixed = (policy.arc, R.check(tuple(policy.color)))
        fixed_segs = [s for s, a in D.segment_arc.items() if a == policy.arc]
    out = []
    for seed in itertools.product(R.element_list, repeat=b.strands):
        levels = propagate(b, Q, seed)
        if levels[-1] != levels[0]:
            continue
        if fixed is not None and any(levels[L][j - 1] != fixed[1] for L, j in fixed_segs):
            continue
        lifts = None
        if symbolic:
            lifts = propagate(b, Q, [seed_lift(Q, c) for c in seed], symbolic=True)
        out.append(ArcColoring(D, levels, lifts))
    return out


def count_colorings(b: BraidWord, Q: AlexanderQuandle, policy: ColoringPolicy | None = None) -> int:
    return len(enumerate_colorings(b, Q, policy))


def verify_coloring(c: ArcColoring, Q: AlexanderQuandle) -> bool:
    """Check the crossing relation at every crossing, arc by arc."""
    colors = c.arc_colors()
    for x in c.diagram.crossings:
        a_in, a_out, over = colors[x.under_in], colors[x.under_out], colors[x.over]
        if x.sign == POSITIVE and Q.op(a_in, over) != a_out:
            return False
        if x.sign == NEGATIVE and Q.op(a_out, over) != a_in:
            return False
    # segments of one arc must agree
    for (L, j), a in c.diagram.segment_arc.items():
        if c.levels[L][j - 1] != colors[a]:
            return False
    return True


# ---------------------------------------------------------------------------
# shadow colorings
# ---------------------------------------------------------------------------

def region_levels(c: ArcColoring, Q: AlexanderQuandle, base: Elem) -> list[tuple[Elem, ...]]:
    """Gap colors level by level: gap 0 is ``base`` and gap j = gap (j-1) * x_j."""
    out = []
    for lv in c.levels:
        row = [base]
        for x in lv:
            row.append(Q.op(row[-1], x))
        out.append(tuple(row))
    return out


def shadow_extend(D: LinkDiagram, c: ArcColoring, Q: AlexanderQuandle, base: Elem,
                  root: int | None = None, symbolic: bool = False) -> ShadowColoring:
    """Extend ``c`` to regions by breadth-first search over arc incidences.

    ``root`` picks the region the search starts from (default: the unbounded
    one, which gets ``base``); a different root gives a different spanning
    tree, and the result must not depend on it.
    """
    colors = c.arc_colors()
    lifts = c.arc_lifts() if symbolic and c.lifts is not None else None
    adj: dict[int, list[tuple[int, int, bool]]] = {r: [] for r in D.regions}
    for arc, left, right in D.sides():
        adj[right].append((left, arc, True))    # right -> left: z * c
        adj[left].append((right, arc, False))   # left -> right: z / c
    start = D.unbounded_region
    z0 = base
    if root is not None and root != D.unbounded_region:
        # find the root color from a path out of the unbounded region first
        tmp = shadow_extend(D, c, Q, base)
        start, z0 = root, tmp.regions[root]
    regions = {start: z0}
    rl = {start: seed_lift(Q, z0)} if lifts is not None else None
    queue = deque([start])
    while queue:
        r = queue.popleft()
        for nxt, arc, forward in adj[r]:
            x = colors[arc]
            val = Q.op(regions[r], x) if forward else Q.unop(regions[r], x)
            if nxt in regions:
                if regions[nxt] != val:
                    raise InconsistentColoring(f"region {nxt} gets {regions[nxt]} and {val}")
                continue
            regions[nxt] = val
            if rl is not None:
                f = Q.op_symbolic if forward else Q.unop_symbolic
                rl[nxt] = f(rl[r], lifts[arc])
            queue.append(nxt)
    return ShadowColoring(c, regions, rl)


@dataclass
class ColoringSummary:
    """Counts reported by the ``color`` command."""
    braid: str
    policy: str
    colorings: int
    shadow_colorings: int
    trivial: int = field(default=0)
