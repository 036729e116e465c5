"""The substitution ``t = exp(a*hbar)``, ``w = exp(b*hbar)`` and residues mod p.

A term ``c * t^{E(w)}`` becomes ``c * exp(a*hbar*E(exp(b*hbar)))``.  The
exponent series has no constant term, so its exponential is a formal power
series with exact rational coefficients.  The residue in degree ``d`` is
``d! * (coefficient of hbar^d)`` reduced mod p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import mpmath

from .arith import GroundRing, Laurent
from .cochain import Poly
from .coloring import ColoringPolicy
from .diagram import BraidWord, resolve_singulars
from .errors import RelationNotAnnihilated
from .invariant import GroupRingElement, state_sum
from .quandle import AlexanderQuandle

DEFAULT_DEGREE = 8


@dataclass(frozen=True)
class SubstitutionParams:
    a: int
    b: int
    ring: GroundRing
    D: int = DEFAULT_DEGREE

    @property
    def p(self) -> int:
        return self.ring.p


def validate_substitution(params: SubstitutionParams, tol: float = 1e-9) -> float:
    """Check numerically that ``w = exp(2 pi i b / (a p))`` is a root of ``h``.

    ``h`` is lifted to the integers with symmetric coefficients.  Returns
    ``|h(zeta)|`` on success.
    """
    if params.a <= 0 or params.b <= 0:
        raise RelationNotAnnihilated("a and b must be positive")
    with mpmath.workdps(40):
        zeta = mpmath.exp(2j * mpmath.pi * params.b / (params.a * params.p))
        value = mpmath.fsum(c * zeta ** k for k, c in params.ring.h_lift.terms)
        err = float(abs(value))
    if err >= tol:
        raise RelationNotAnnihilated(
            f"|h(zeta)| = {err:.3g} for a={params.a}, b={params.b}: "
            f"exp(2 pi i b/(a p)) is not a root of {params.ring.h_lift}")
    return err


@dataclass(frozen=True)
class HbarSeries:
    coeffs: tuple[Fraction, ...]

    @classmethod
    def zero(cls, D: int) -> "HbarSeries":
        return cls(tuple(Fraction(0) for _ in range(D + 1)))

    @classmethod
    def const(cls, c, D: int) -> "HbarSeries":
        return cls((Fraction(c),) + tuple(Fraction(0) for _ in range(D)))

    @property
    def D(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, d: int) -> Fraction:
        return self.coeffs[d]

    def __add__(self, other: "HbarSeries") -> "HbarSeries":
        return HbarSeries(tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "HbarSeries") -> "HbarSeries":
        return HbarSeries(tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def scale(self, c) -> "HbarSeries":
        return HbarSeries(tuple(x * c for x in self.coeffs))

    def __mul__(self, other: "HbarSeries") -> "HbarSeries":
        D = min(self.D, other.D)
        out = [Fraction(0)] * (D + 1)
        for i, x in enumerate(self.coeffs[:D + 1]):
            if x:
                for j in range(D + 1 - i):
                    out[i + j] += x * other.coeffs[j]
        return HbarSeries(tuple(out))

    def exp(self) -> "HbarSeries":
        """``exp`` of a series with zero constant term (``n e_n = sum k s_k e_{n-k}``)."""
        if self.coeffs[0]:
            raise ValueError("exp needs a series without constant term")
        s, D = self.coeffs, self.D
        e = [Fraction(1)] + [Fraction(0)] * D
        for n in range(1, D + 1):
            e[n] = sum((k * s[k] * e[n - k] for k in range(1, n + 1)), Fraction(0)) / n
        return HbarSeries(tuple(e))

    def valuation(self) -> int | None:
        return next((d for d, c in enumerate(self.coeffs) if c), None)

    def __str__(self) -> str:
        parts = []
        for d, c in enumerate(self.coeffs):
            if c:
                parts.append(f"{c}" if d == 0 else f"({c})*hbar^{d}")
        return (" + ".join(parts) or "0") + f" + O(hbar^{self.D + 1})"


def exponent_series(lift: Laurent, a: int, b: int, D: int) -> HbarSeries:
    """``a*hbar*E(exp(b*hbar))`` truncated at ``hbar^D``."""
    out = [Fraction(0)] * (D + 1)
    for k in range(D):
        total = sum(c * (b * j) ** k for j, c in lift.terms)
        out[k + 1] = Fraction(a * total, math.factorial(k))
    return HbarSeries(tuple(out))


def expand_terms(terms: Iterable[tuple[Laurent, int]], a: int, b: int, D: int) -> HbarSeries:
    acc = HbarSeries.zero(D)
    for lift, c in terms:
        acc = acc + exponent_series(lift, a, b, D).exp().scale(c)
    return acc


def expand(G: GroupRingElement, params: SubstitutionParams) -> HbarSeries:
    return expand_terms(G.terms, params.a, params.b, params.D)


# ---------------------------------------------------------------------------
# residues
# ---------------------------------------------------------------------------

@dataclass
class VassilievReport:
    p: int
    rationals: list[Fraction]          # coefficient of hbar^d
    residues: list[int | None]         # d! * coefficient mod p, None when not p-integral
    flags: list[str] = field(default_factory=list)

    def table(self) -> str:
        lines = ["d | u_d | d!*u_d mod p | flags"]
        for d, (u, r) in enumerate(zip(self.rationals, self.residues)):
            flag = "NonPIntegral" if r is None else ""
            lines.append(f"{d} | {u} | {'-' if r is None else r} | {flag}".rstrip(" |"))
        return "\n".join(lines)


def residue(x: Fraction, p: int) -> int | None:
    if x.denominator % p == 0:
        return None
    return x.numerator * pow(x.denominator, -1, p) % p


def vassiliev_coeffs(s: HbarSeries, p: int) -> VassilievReport:
    rationals = list(s.coeffs)
    residues = [residue(math.factorial(d) * u, p) for d, u in enumerate(rationals)]
    flags = [f"degree {d}: NonPIntegral" for d, r in enumerate(residues) if r is None]
    return VassilievReport(p, rationals, residues, flags)


@dataclass
class LiftComparison:
    """Residues of one group-ring element under several lift choices."""
    reports: dict[str, VassilievReport]

    def agree(self) -> bool:
        rs = [r.residues for r in self.reports.values()]
        return all(x == rs[0] for x in rs)

    def disagreements(self) -> list[int]:
        rs = list(self.reports.values())
        return [d for d in range(len(rs[0].residues))
                if len({r.residues[d] for r in rs}) > 1]


def compare_lifts(G: GroupRingElement, params: SubstitutionParams) -> LiftComparison:
    """As given, augmentation-normalized, and canonical (coefficients in [0, p))."""
    R = G.ring
    classes = G.classes()
    canonical = GroupRingElement(R, tuple((R.canonical_lift(e), c) for e, c in classes.items()))
    out = {
        "given": vassiliev_coeffs(expand(G, params), R.p),
        "normalized": vassiliev_coeffs(expand(G.normalized(), params), R.p),
        "canonical": vassiliev_coeffs(expand(canonical, params), R.p),
    }
    return LiftComparison(out)


# ---------------------------------------------------------------------------
# singular braids
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InvariantConfig:
    """A quandle, a cocycle (its arity picks the state sum) and a policy."""
    Q: AlexanderQuandle
    cocycle: Poly
    policy: ColoringPolicy | None = None
    check: bool = True

    def evaluate(self, b: BraidWord) -> GroupRingElement:
        return state_sum(b, self.cocycle, self.Q, self.policy, check=self.check).value


@dataclass
class SingularReport:
    series: HbarSeries
    report: VassilievReport
    double_points: int
    terms: list[tuple[int, str, GroupRingElement]]

    @property
    def lowest_nonzero_residue(self) -> int | None:
        return next((d for d, r in enumerate(self.report.residues) if r), None)

    def vanishes_below(self, k: int) -> bool:
        return all(r == 0 for r in self.report.residues[:k])


def singular_vassiliev(b: BraidWord, config: InvariantConfig, params: SubstitutionParams) -> SingularReport:
    """Signed sum of expansions over all resolutions of the double points."""
    total = HbarSeries.zero(params.D)
    terms = []
    checked = False
    for sign, word in resolve_singulars(b):
        cfg = config
        if checked:
            cfg = InvariantConfig(config.Q, config.cocycle, config.policy, check=False)
        G = cfg.evaluate(word)
        checked = True
        terms.append((sign, str(word), G))
        total = total + expand(G, params).scale(sign)
    return SingularReport(total, vassiliev_coeffs(total, params.p), b.singular_count, terms)


def series_from_values(values: Sequence) -> HbarSeries:
    return HbarSeries(tuple(Fraction(v) for v in values))
