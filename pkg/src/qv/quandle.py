"""Alexander quandles ``x*y = w x + (1-w) y`` over a ground ring."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .arith import Elem, GroundRing, Laurent


@dataclass(frozen=True)
class AlexanderQuandle:
    ring: GroundRing
    omega: Elem
    omega_inv: Elem = field(init=False)

    def __post_init__(self) -> None:
        omega = self.ring.check(tuple(self.omega))
        object.__setattr__(self, "omega", omega)
        # raises NotAUnit for zero divisors (and for 0)
        object.__setattr__(self, "omega_inv", self.ring.invert(omega))

    @classmethod
    def from_text(cls, ring: GroundRing, w: str) -> "AlexanderQuandle":
        return cls(ring, ring.parse(w))

    @property
    def order(self) -> int:
        return self.ring.order

    @property
    def is_trivial(self) -> bool:
        return self.omega == self.ring.one

    def __str__(self) -> str:
        return f"Alexander quandle on {self.ring}, w = {self.ring.format(self.omega)}"

    # -- operations on ring elements --------------------------------------
    def op(self, x: Elem, y: Elem) -> Elem:
        R = self.ring
        return R.add(R.mul(self.omega, x), R.mul(R.sub(R.one, self.omega), y))

    def unop(self, a: Elem, b: Elem) -> Elem:
        """The unique ``c`` with ``c * b = a``."""
        R = self.ring
        return R.mul(self.omega_inv, R.sub(a, R.mul(R.sub(R.one, self.omega), b)))

    # -- symbolic operations (w kept as an indeterminate, no reduction by h).
    # Coefficients live wherever the arguments do (integers or F_p).
    def op_symbolic(self, x: Laurent, y: Laurent) -> Laurent:
        w = Laurent.monomial(1, p=x.p)
        return w * x + (Laurent.const(1, x.p) - w) * y

    def unop_symbolic(self, a: Laurent, b: Laurent) -> Laurent:
        w = Laurent.monomial(1, p=a.p)
        w_inv = Laurent.monomial(-1, p=a.p)
        return w_inv * (a - (Laurent.const(1, a.p) - w) * b)

    def reduce(self, f: Laurent) -> Elem:
        """Reduce a symbolic expression, reading ``w`` as this quandle's omega."""
        return self.ring.reduce(f, at=self.omega)

    # -- index tables --------------------------------------------------------
    @cached_property
    def op_table(self) -> list[list[int]]:
        R = self.ring
        E = R.element_list
        return [[R.index(self.op(x, y)) for y in E] for x in E]

    @cached_property
    def unop_table(self) -> list[list[int]]:
        R = self.ring
        E = R.element_list
        return [[R.index(self.unop(a, b)) for b in E] for a in E]


@dataclass(frozen=True)
class AxiomReport:
    ok: bool
    axiom: str | None = None
    witness: tuple[int, ...] | None = None

    def __str__(self) -> str:
        if self.ok:
            return "quandle axioms (i), (ii), (iii): pass"
        return f"axiom {self.axiom} fails at {self.witness}"


def check_table(table: Sequence[Sequence[int]]) -> AxiomReport:
    """Exhaustively check the quandle axioms on an operation table.

    ``table[a][b]`` is the index of ``a * b``.  Reports the first failure.
    """
    n = len(table)
    for a in range(n):
        if table[a][a] != a:
            return AxiomReport(False, "(i)", (a,))
    for b in range(n):
        column = [table[c][b] for c in range(n)]
        if sorted(column) != list(range(n)):
            seen: dict[int, int] = {}
            for c, v in enumerate(column):
                if v in seen:
                    return AxiomReport(False, "(ii)", (v, b))
                seen[v] = c
            return AxiomReport(False, "(ii)", (b,))
    for a in range(n):
        for b in range(n):
            ab = table[a][b]
            for c in range(n):
                if table[ab][c] != table[table[a][c]][table[b][c]]:
                    return AxiomReport(False, "(iii)", (a, b, c))
    return AxiomReport(True)


def check_axioms(Q: AlexanderQuandle) -> AxiomReport:
    return check_table(Q.op_table)
