"""Monomial R-matrices from 2-cocycles and the braid-trace invariant.

``R`` acts on ``V (x) V`` with basis ``S x S``; the basis vector ``(x, y)`` goes
to ``t^{f(x,y)} (y, x*y)``.  Everything here is a weighted permutation, so
products and traces are computed on basis states without forming matrices.
Group-ring coefficients are stored as ``{exponent index: integer}`` maps.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from .arith import GroundRing
from .cochain import Poly, is_cocycle
from .diagram import POSITIVE, SINGULAR, BraidWord
from .errors import NotACocycle, SingularPresent
from .invariant import GroupRingElement
from .quandle import AlexanderQuandle

Pair = tuple[int, int]
ZS = dict[int, int]  # sparse element of Z[S], keyed by element index


@dataclass(frozen=True)
class RMatrix:
    """A weighted permutation of ``S x S``: ``state -> (image, exponent)``."""
    ring: GroundRing
    image: dict[Pair, Pair]
    weight: dict[Pair, int]

    @property
    def q(self) -> int:
        return self.ring.order

    @property
    def dimension(self) -> int:
        return self.q ** 2

    def apply(self, s: Pair) -> tuple[Pair, int]:
        return self.image[s], self.weight[s]

    def inverse(self) -> "RMatrix":
        neg = self.ring.neg_table
        image, weight = {}, {}
        for s, t in self.image.items():
            image[t] = s
            weight[t] = neg[self.weight[s]]
        return RMatrix(self.ring, image, weight)

    def compose(self, other: "RMatrix") -> "RMatrix":
        """``self`` after ``other``."""
        add = self.ring.add_table
        image, weight = {}, {}
        for s in other.image:
            t, w1 = other.apply(s)
            u, w2 = self.apply(t)
            image[s], weight[s] = u, add[w1][w2]
        return RMatrix(self.ring, image, weight)

    def is_monomial(self) -> bool:
        states = set(itertools.product(range(self.q), repeat=2))
        return set(self.image) == states and set(self.image.values()) == states

    def entry(self, row: Pair, col: Pair) -> ZS:
        t, w = self.apply(col)
        return {w: 1} if t == row else {}

    def is_identity(self) -> bool:
        return all(self.image[s] == s and self.weight[s] == 0 for s in self.image)


def identity_r(ring: GroundRing) -> RMatrix:
    states = list(itertools.product(range(ring.order), repeat=2))
    return RMatrix(ring, {s: s for s in states}, {s: 0 for s in states})


def build_r_matrix(f: Poly, Q: AlexanderQuandle, check: bool = True) -> RMatrix:
    if f.nvars != 2:
        raise NotACocycle("an R-matrix needs a 2-cochain")
    if check and not is_cocycle(f, Q):
        raise NotACocycle(f"{f} is not a 2-cocycle for {Q}")
    q = Q.order
    table = f.value_table(Q)
    op = Q.op_table
    image, weight = {}, {}
    for x, y in itertools.product(range(q), repeat=2):
        image[(x, y)] = (y, op[x][y])
        weight[(x, y)] = table[x * q + y]
    return RMatrix(Q.ring, image, weight)


# ---------------------------------------------------------------------------
# Yang-Baxter and Markov checks
# ---------------------------------------------------------------------------

def _on_triples(R: RMatrix, slot: int) -> Callable[[tuple[int, int, int]], tuple[tuple[int, int, int], int]]:
    def act(s):
        if slot == 0:
            (a, b), w = R.apply((s[0], s[1]))
            return (a, b, s[2]), w
        (b, c), w = R.apply((s[1], s[2]))
        return (s[0], b, c), w
    return act


def _run(acts, s, add) -> tuple[tuple, int]:
    w = 0
    for act in acts:
        s, dw = act(s)
        w = add[w][dw]
    return s, w


def check_yang_baxter(R: RMatrix) -> bool:
    """``(R x 1)(1 x R)(R x 1) = (1 x R)(R x 1)(1 x R)`` on all of ``S^3``."""
    add = R.ring.add_table
    A, B = _on_triples(R, 0), _on_triples(R, 1)
    for s in itertools.product(range(R.q), repeat=3):
        # rightmost factor acts first
        if _run([A, B, A], s, add) != _run([B, A, B], s, add):
            return False
    return True


def _zs_add(a: ZS, b: ZS, add) -> ZS:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v}


def _zs_mul(a: ZS, b: ZS, add) -> ZS:
    out: ZS = {}
    for k1, v1 in a.items():
        for k2, v2 in b.items():
            k = add[k1][k2]
            out[k] = out.get(k, 0) + v1 * v2
    return {k: v for k, v in out.items() if v}


def identity_h(ring: GroundRing) -> list[list[ZS]]:
    q = ring.order
    return [[{0: 1} if i == j else {} for j in range(q)] for i in range(q)]


def zero_h(ring: GroundRing) -> list[list[ZS]]:
    q = ring.order
    return [[{} for _ in range(q)] for _ in range(q)]


def _partial_trace_condition(R: RMatrix, h: list[list[ZS]]) -> bool:
    """``trace_2((1 x h) R) = id``; entry ``(x', x)`` is
    ``sum_y h[y][y''] R[(x', y''), (x, y)]``."""
    add = R.ring.add_table
    q = R.q
    M = [[{} for _ in range(q)] for _ in range(q)]
    for (x, y), (x2, y2) in R.image.items():
        coeff = h[y][y2]
        if coeff:
            M[x2][x] = _zs_add(M[x2][x], _zs_mul(coeff, {R.weight[(x, y)]: 1}, add), add)
    return all(M[i][j] == ({0: 1} if i == j else {}) for i in range(q) for j in range(q))


def _commutes_with_hh(R: RMatrix, h: list[list[ZS]]) -> bool:
    """``R (h x h) = (h x h) R`` as q^2 x q^2 matrices over Z[S]."""
    add = R.ring.add_table
    q = R.q
    states = list(itertools.product(range(q), repeat=2))

    def hh(row: Pair, col: Pair) -> ZS:
        return _zs_mul(h[row[0]][col[0]], h[row[1]][col[1]], add)

    inv = {t: s for s, t in R.image.items()}
    for row in states:
        for col in states:
            # (R HH)[row, col] = R[row, inv(row)] HH[inv(row), col]
            src = inv[row]
            left = _zs_mul({R.weight[src]: 1}, hh(src, col), add)
            # (HH R)[row, col] = HH[row, R(col)] R[R(col), col]
            tgt, w = R.apply(col)
            right = _zs_mul(hh(row, tgt), {w: 1}, add)
            if left != right:
                return False
    return True


def markov_conditions(R: RMatrix, h: list[list[ZS]] | None = None) -> bool:
    """Both trace conditions (for ``R`` and ``R^-1``) and commutation with
    ``h x h``.  ``h`` defaults to the identity."""
    h = identity_h(R.ring) if h is None else h
    return (_partial_trace_condition(R, h) and _partial_trace_condition(R.inverse(), h)
            and _commutes_with_hh(R, h))


# ---------------------------------------------------------------------------
# the braid trace
# ---------------------------------------------------------------------------

def operator_invariant(b: BraidWord, R: RMatrix) -> GroupRingElement:
    """``trace(psi(b))`` with ``h = id``; letters act in word order.

    Only states fixed by the braid permutation contribute, each with the
    product of its weights.
    """
    if any(x.kind == SINGULAR for x in b.letters):
        raise SingularPresent("resolve double points first")
    ring = R.ring
    add = ring.add_table
    Rinv = R.inverse()
    counts: dict[int, int] = {}
    for state in itertools.product(range(R.q), repeat=b.strands):
        s = list(state)
        w = 0
        for let in b.letters:
            i = let.index - 1
            M = R if let.kind == POSITIVE else Rinv
            (s[i], s[i + 1]), dw = M.apply((s[i], s[i + 1]))
            w = add[w][dw]
        if tuple(s) == state:
            counts[w] = counts.get(w, 0) + 1
    return GroupRingElement.from_classes(ring, {ring.element(k): c for k, c in sorted(counts.items())})
