"""Braid words, closed-braid diagrams and resolution of double points.

Drawing conventions.  Strands run downward and are numbered 1..n from the
left; letter ``k`` crosses positions ``k`` and ``k+1``.  In a positive letter
the strand coming from the upper right passes over, which makes the crossing
positive for downward orientation.  Closure strands run up the right-hand side
of the braid, so the gap left of strand 1 is the unbounded region.

A "level" is a horizontal slice between two consecutive letters (level 0 is
the top, level N the bottom).  The piece of strand sitting at position ``j`` on
level ``L`` is the segment ``(L, j)``; arcs are unions of segments.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterator

from .errors import BadToken, IndexOutOfRange, SingularPresent, TooFewStrands

POSITIVE, NEGATIVE, SINGULAR = 1, -1, 0
_KIND_PREFIX = {POSITIVE: "", NEGATIVE: "-", SINGULAR: "s"}


@dataclass(frozen=True)
class Letter:
    index: int
    kind: int  # POSITIVE, NEGATIVE or SINGULAR

    def __str__(self) -> str:
        return f"{_KIND_PREFIX[self.kind]}{self.index}"


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 2:
            raise TooFewStrands(f"need at least 2 strands, got {self.strands}")
        for let in self.letters:
            if not 1 <= let.index <= self.strands - 1:
                raise IndexOutOfRange(f"generator {let.index} outside 1..{self.strands - 1}")

    @classmethod
    def from_ints(cls, strands: int, word: list[int] | tuple[int, ...]) -> "BraidWord":
        return cls(strands, tuple(Letter(abs(k), POSITIVE if k > 0 else NEGATIVE) for k in word))

    def __str__(self) -> str:
        return f"{self.strands} ; " + " ".join(str(x) for x in self.letters) if self.letters \
            else f"{self.strands} ;"

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def singular_count(self) -> int:
        return sum(1 for x in self.letters if x.kind == SINGULAR)

    def permutation(self) -> list[int]:
        """Position at the bottom of the strand that starts at top position j (0-based)."""
        where = list(range(self.strands))  # where[pos] = starting strand at pos
        for let in self.letters:
            i = let.index - 1
            where[i], where[i + 1] = where[i + 1], where[i]
        perm = [0] * self.strands
        for pos, start in enumerate(where):
            perm[start] = pos
        return perm

    def components(self) -> int:
        perm = self.permutation()
        seen, count = set(), 0
        for s in range(self.strands):
            if s not in seen:
                count += 1
                while s not in seen:
                    seen.add(s)
                    s = perm[s]
        return count


_TOKEN = re.compile(r"(-|s)?(\d+)$")


def parse_braid(text: str) -> BraidWord:
    """Parse ``"<n> ; <tok> ..."`` where a token is ``k``, ``-k`` or ``sk``."""
    head, sep, body = text.partition(";")
    if not sep:
        raise BadToken(f"missing ';' in braid text {text!r}")
    try:
        n = int(head.strip())
    except ValueError:
        raise BadToken(f"bad strand count {head.strip()!r}") from None
    if n < 2:
        raise TooFewStrands(f"need at least 2 strands, got {n}")
    letters = []
    for tok in body.split():
        m = _TOKEN.match(tok)
        if not m:
            raise BadToken(f"bad braid token {tok!r}")
        kind = {None: POSITIVE, "-": NEGATIVE, "s": SINGULAR}[m.group(1)]
        k = int(m.group(2))
        if not 1 <= k <= n - 1:
            raise IndexOutOfRange(f"generator {k} outside 1..{n - 1}")
        letters.append(Letter(k, kind))
    return BraidWord(n, tuple(letters))


def torus_braid(n: int) -> BraidWord:
    """sigma_1^n on two strands; its closure is the (2, n) torus link."""
    if n < 0:
        raise ValueError("exponent must be non-negative")
    return BraidWord(2, tuple(Letter(1, POSITIVE) for _ in range(n)))


def resolve_singulars(b: BraidWord) -> list[tuple[int, BraidWord]]:
    """Expand every double point as (positive crossing) - (negative crossing)."""
    slots = [k for k, x in enumerate(b.letters) if x.kind == SINGULAR]
    out = []
    for choice in itertools.product((POSITIVE, NEGATIVE), repeat=len(slots)):
        letters = list(b.letters)
        sign = 1
        for k, kind in zip(slots, choice):
            letters[k] = Letter(letters[k].index, kind)
            sign *= kind
        out.append((sign, BraidWord(b.strands, tuple(letters))))
    return out


# ---------------------------------------------------------------------------
# closed-braid diagrams
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Segment:
    level: int
    position: int  # 1-based
    arc: int
    left: int   # region on the left of the (downward) strand, i.e. to the east
    right: int  # region on the right, i.e. to the west


@dataclass(frozen=True)
class Crossing:
    level: int
    position: int   # the letter index k
    sign: int
    over: int
    under_in: int
    under_out: int
    west: int       # source region: both arcs' right-hand normals point away from it
    east: int
    north: int
    south: int


@dataclass
class LinkDiagram:
    word: BraidWord
    arcs: list[int]
    crossings: list[Crossing]
    regions: list[int]
    unbounded_region: int
    components: int
    segment_arc: dict[tuple[int, int], int]
    gap_region: dict[tuple[int, int], int]  # (level, gap 0..n) -> region
    segments: list[Segment] = field(default_factory=list)

    @property
    def strands(self) -> int:
        return self.word.strands

    def closure_sides(self) -> list[tuple[int, int, int]]:
        """(arc, left, right) for the closure strands on the right-hand side.

        Closure strand j runs upward with the gap-j region on its left and
        the gap-(j-1) region on its right.
        """
        N = len(self.word)
        return [(self.segment_arc[(N, j)], self.gap_region[(0, j)], self.gap_region[(0, j - 1)])
                for j in range(1, self.strands + 1)]

    def sides(self) -> Iterator[tuple[int, int, int]]:
        """Every (arc, left region, right region) incidence, braid part and closure."""
        for s in self.segments:
            yield s.arc, s.left, s.right
        yield from self.closure_sides()

    def connected_pieces(self) -> int:
        used = {c.position for c in self.crossings}
        return 1 + sum(1 for j in range(1, self.strands) if j not in used)

    def dump(self) -> str:
        lines = [f"braid: {self.word}",
                 f"arcs: {len(self.arcs)}  crossings: {len(self.crossings)}  "
                 f"regions: {len(self.regions)}  unbounded: {self.unbounded_region}  "
                 f"components: {self.components}"]
        for k, c in enumerate(self.crossings):
            lines.append(f"crossing {k}: letter {'+' if c.sign > 0 else '-'}{c.position} "
                         f"over={c.over} under={c.under_in}->{c.under_out} "
                         f"W={c.west} N={c.north} E={c.east} S={c.south}")
        for L in range(len(self.word) + 1):
            arcs = " ".join(str(self.segment_arc[(L, j)]) for j in range(1, self.strands + 1))
            regs = " ".join(str(self.gap_region[(L, j)]) for j in range(self.strands + 1))
            lines.append(f"level {L}: arcs [{arcs}] regions [{regs}]")
        return "\n".join(lines)


class _UnionFind:
    def __init__(self) -> None:
        self.parent: dict = {}

    def find(self, a):
        self.parent.setdefault(a, a)
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def over_under(letter: Letter, level: int) -> tuple[tuple, tuple, tuple, tuple]:
    """Segments (over_in, over_out, under_in, under_out) of a crossing."""
    i, L = letter.index, level
    if letter.kind == POSITIVE:
        return (L, i + 1), (L + 1, i), (L, i), (L + 1, i + 1)
    return (L, i), (L + 1, i + 1), (L, i + 1), (L + 1, i)


def closure_diagram(b: BraidWord) -> LinkDiagram:
    if b.singular_count:
        raise SingularPresent("resolve double points before building a diagram")
    n, N = b.strands, len(b)

    uf = _UnionFind()
    for L in range(N + 1):
        for j in range(1, n + 1):
            uf.find((L, j))
    for L, let in enumerate(b.letters):
        for j in range(1, n + 1):
            if j not in (let.index, let.index + 1):
                uf.union((L, j), (L + 1, j))
        o_in, o_out, _, _ = over_under(let, L)
        uf.union(o_in, o_out)
    for j in range(1, n + 1):
        uf.union((N, j), (0, j))

    arc_of_root: dict = {}
    segment_arc = {}
    for L in range(N + 1):
        for j in range(1, n + 1):
            r = uf.find((L, j))
            if r not in arc_of_root:
                arc_of_root[r] = len(arc_of_root)
            segment_arc[(L, j)] = arc_of_root[r]

    # regions: gap j (between strands j and j+1) is cut by the sigma_j letters
    counts = [0] * (n + 1)
    for let in b.letters:
        counts[let.index] += 1
    piece_region: dict[tuple[int, int], int] = {}
    gap_region = {}
    seen = [0] * (n + 1)
    for L in range(N + 1):
        for g in range(n + 1):
            if 1 <= g <= n - 1 and counts[g]:
                piece = seen[g] % counts[g]
            else:
                piece = 0
            key = (g, piece)
            if key not in piece_region:
                piece_region[key] = len(piece_region)
            gap_region[(L, g)] = piece_region[key]
        if L < N:
            seen[b.letters[L].index] += 1

    segments = [Segment(L, j, segment_arc[(L, j)],
                        left=gap_region[(L, j)], right=gap_region[(L, j - 1)])
                for L in range(N + 1) for j in range(1, n + 1)]

    crossings = []
    for L, let in enumerate(b.letters):
        o_in, _, u_in, u_out = over_under(let, L)
        i = let.index
        crossings.append(Crossing(
            level=L, position=i, sign=let.kind,
            over=segment_arc[o_in], under_in=segment_arc[u_in], under_out=segment_arc[u_out],
            west=gap_region[(L, i - 1)], east=gap_region[(L, i + 1)],
            north=gap_region[(L, i)], south=gap_region[(L + 1, i)]))

    D = LinkDiagram(word=b, arcs=list(range(len(arc_of_root))), crossings=crossings,
                    regions=list(range(len(piece_region))), unbounded_region=gap_region[(0, 0)],
                    components=b.components(), segment_arc=segment_arc, gap_region=gap_region,
                    segments=segments)
    expected = len(crossings) + 1 + D.connected_pieces()
    if len(D.regions) != expected:
        raise AssertionError(f"Euler check failed: {len(D.regions)} regions, expected {expected}")
    return D
