"""Ready-made settings for the two torus-link families.

``example111``: F_4 = F_2[w]/(w^2+w+1), w the generator, 2-cocycle
``(x-y)*y^2``, all colorings, ``t = e^{3 hbar}``, ``w = e^{2 hbar}``.

``example110``: F_3[w]/(w^2-w+1), w the generator, the mod-3 divided-power
3-cocycle, one arc and the unbounded region colored 0,
``t = e^{2 hbar}``, ``w = e^{hbar}``.

The reference group-ring elements are the closed forms for sigma_1^n with
``3 | n``, exponents written as integer Laurent polynomials in w.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import GroundRing, Laurent
from .cochain import Poly, example111 as example111_cocycle, mochizuki_p3
from .coloring import ColoringPolicy, FixArcAndRegion, SumAll
from .expansion import InvariantConfig, SubstitutionParams
from .invariant import GroupRingElement
from .quandle import AlexanderQuandle


@dataclass(frozen=True)
class Preset:
    name: str
    Q: AlexanderQuandle
    cocycle: Poly
    policy: ColoringPolicy
    params: SubstitutionParams
    cocycle_checked: bool = True

    @property
    def ring(self) -> GroundRing:
        return self.Q.ring

    @property
    def degree(self) -> int:
        return self.cocycle.nvars

    def config(self) -> InvariantConfig:
        return InvariantConfig(self.Q, self.cocycle, self.policy, check=self.cocycle_checked)


def example111_preset(D: int = 8) -> Preset:
    R = GroundRing(2, (1, 1, 1))
    Q = AlexanderQuandle(R, R.generator)
    return Preset("example111", Q, example111_cocycle(2), SumAll(), SubstitutionParams(3, 2, R, D))


def example110_preset(D: int = 8) -> Preset:
    R = GroundRing(3, (1, 2, 1))
    Q = AlexanderQuandle(R, R.generator)
    # the divided-power cocycle fails the cocycle test for this w; see
    # scripts/example110_cocycle.py
    return Preset("example110", Q, mochizuki_p3(Q), FixArcAndRegion(0, R.zero, R.zero),
                  SubstitutionParams(2, 1, R, D), cocycle_checked=False)


PRESETS = {"example111": example111_preset, "example110": example110_preset}

# (coefficient, exponent per unit of n/3)
REFERENCE_111 = [(4, "0"), (10, "w^2-1"), (1, "w^2+w-2"), (1, "w-1")]
REFERENCE_110 = [
    (3, "0"),
    (2, "(1-w)*w^-2"),
    (1, "-2+w^-1+w"),
    (2, "2-w^-1-2*w+2*w^2-w^3"),
    (1, "-2-2*w^-2+w+2*w^2+w^3"),
]


def reference_element(name: str, n: int) -> GroupRingElement:
    """The closed-form answer for sigma_1^n (``3 | n``) with its own lifts."""
    if n % 3:
        raise ValueError("the closed forms need 3 | n")
    table = {"example111": (REFERENCE_111, example111_preset),
             "example110": (REFERENCE_110, example110_preset)}[name]
    ring = table[1]().ring
    k = n // 3
    terms = tuple((Laurent.parse(e) * k, c) for c, e in table[0])
    return GroupRingElement(ring, terms, user_lifts=True)
