"""Quandle cochains of Alexander quandles as polynomials.

A cochain ``f: X^n -> S`` is stored as a sparse polynomial in ``n`` variables
whose coefficients are Laurent polynomials in ``w`` over ``F_p``.  Variables are
either the colours themselves (``coords="X"``) or the difference coordinates
``U_1 = x_1 - x_2, ..., U_{n-1} = x_{n-1} - x_n, U_n = x_n`` (``coords="U"``).
Keeping ``w`` symbolic lets one object be evaluated both in ``S`` and in
``F_p[w^{+-1}]``; reduction to ``S`` always goes through the quandle's omega.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .arith import Elem, Laurent, parse_expr
from .errors import (
    ArityMismatch,
    DivisionByZero,
    NotAField,
    NotDivisibleByP,
    OmegaTrivial,
    ParseError,
)
from .quandle import AlexanderQuandle

Key = tuple[int, ...]  # (e_1, ..., e_n, e_w)


@dataclass(frozen=True, eq=False)
class Poly:
    nvars: int
    terms: dict[Key, int]
    p: int | None
    coords: str = "U"
    label: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        clean = {}
        for k, c in self.terms.items():
            if len(k) != self.nvars + 1:
                raise ValueError(f"bad exponent key {k} for {self.nvars} variables")
            if any(e < 0 for e in k[:-1]):
                raise ValueError("negative exponent on a colour variable")
            c = c % self.p if self.p else c
            if c:
                clean[k] = c
        object.__setattr__(self, "terms", clean)
        if self.coords not in ("X", "U"):
            raise ValueError(f"coords must be 'X' or 'U', not {self.coords!r}")

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, nvars: int, p: int | None, coords: str = "U") -> "Poly":
        return cls(nvars, {}, p, coords)

    @classmethod
    def const(cls, c: int, nvars: int, p: int | None, coords: str = "U") -> "Poly":
        return cls(nvars, {(0,) * (nvars + 1): c}, p, coords)

    @classmethod
    def var(cls, i: int, nvars: int, p: int | None, coords: str = "U") -> "Poly":
        k = [0] * (nvars + 1)
        k[i] = 1
        return cls(nvars, {tuple(k): 1}, p, coords)

    @classmethod
    def omega(cls, k: int, nvars: int, p: int | None, coords: str = "U") -> "Poly":
        return cls(nvars, {(0,) * nvars + (k,): 1}, p, coords)

    @classmethod
    def monomial(cls, exps: Sequence[int], p: int | None, coef: int = 1, w: int = 0) -> "Poly":
        return cls(len(exps), {tuple(exps) + (w,): coef}, p, "U")

    @classmethod
    def from_laurent(cls, c: Laurent, nvars: int, coords: str = "U") -> "Poly":
        return cls(nvars, {(0,) * nvars + (k,): v for k, v in c.terms}, c.p, coords)

    @classmethod
    def parse(cls, text: str, p: int, nvars: int | None = None, label: str = "") -> "Poly":
        """Parse an expression in ``x, y, z`` (colour coordinates) and ``w``."""
        names = ("x", "y", "z", "x4")
        d = parse_expr(text, names)
        used = max((i + 1 for k in d for i, e in enumerate(k[:-1]) if e), default=0)
        if nvars is None:
            nvars = max(used, 2)
        if used > nvars:
            raise ParseError(f"expression uses {used} colour variables, expected {nvars}", 1, 1)
        terms = {k[:nvars] + (k[-1],): c for k, c in d.items()}
        return cls(nvars, terms, p, "X", label or text)

    # -- algebra ------------------------------------------------------------
    def _like(self, terms: dict[Key, int], nvars: int | None = None) -> "Poly":
        return Poly(self.nvars if nvars is None else nvars, terms, self.p, self.coords)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return (self.nvars, self.p, self.coords, self.terms) == (other.nvars, other.p, other.coords, other.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "Poly") -> "Poly":
        d = dict(self.terms)
        for k, c in other.terms.items():
            d[k] = d.get(k, 0) + c
        return self._like(d)

    def __neg__(self) -> "Poly":
        return self._like({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly | int") -> "Poly":
        if isinstance(other, int):
            return self._like({k: c * other for k, c in self.terms.items()})
        d: dict[Key, int] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                d[k] = d.get(k, 0) + c1 * c2
        return self._like(d)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        out = Poly.const(1, self.nvars, self.p, self.coords)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def frobenius(self, k: int) -> "Poly":
        """``f^(p^k)`` via the Frobenius (coefficients lie in ``F_p``)."""
        if self.p is None:
            raise ValueError("Frobenius needs a prime modulus")
        s = self.p ** k
        d: dict[Key, int] = {}
        for key, c in self.terms.items():
            nk = tuple(e * s for e in key)
            d[nk] = d.get(nk, 0) + c
        return self._like(d)

    def times_omega(self, k: int) -> "Poly":
        return self._like({key[:-1] + (key[-1] + k,): c for key, c in self.terms.items()})

    def substitute(self, images: Sequence["Poly"]) -> "Poly":
        """``f(images[0], ..., images[n-1])``; ``w`` is left alone."""
        if len(images) != self.nvars:
            raise ArityMismatch(f"need {self.nvars} images, got {len(images)}")
        target = images[0]
        powers: list[dict[int, Poly]] = [{0: Poly.const(1, target.nvars, self.p, target.coords)} for _ in images]

        def power(i: int, e: int) -> Poly:
            cache = powers[i]
            if e not in cache:
                cache[e] = images[i] ** e
            return cache[e]

        out = Poly.zero(target.nvars, self.p, target.coords)
        acc: dict[Key, int] = {}
        for key, c in self.terms.items():
            term = Poly.omega(key[-1], target.nvars, self.p, target.coords) * c
            for i, e in enumerate(key[:-1]):
                if e:
                    term = term * power(i, e)
            for k2, c2 in term.terms.items():
                acc[k2] = acc.get(k2, 0) + c2
        return Poly(out.nvars, acc, self.p, target.coords)

    def reduce_mod(self, p: int) -> "Poly":
        return Poly(self.nvars, dict(self.terms), p, self.coords, self.label)

    def divide_exact(self, d: int) -> "Poly":
        if self.p is not None:
            raise ValueError("exact division is for integer polynomials")
        if any(c % d for c in self.terms.values()):
            raise NotDivisibleByP(f"some coefficient is not divisible by {d}")
        return self._like({k: c // d for k, c in self.terms.items()})

    def with_label(self, label: str) -> "Poly":
        return Poly(self.nvars, self.terms, self.p, self.coords, label)

    # -- coordinates --------------------------------------------------------
    def to_U(self) -> "Poly":
        if self.coords == "U":
            return self
        n = self.nvars
        # x_i = U_i + U_{i+1} + ... + U_n
        images = []
        for i in range(n):
            s = Poly.zero(n, self.p, "U")
            for j in range(i, n):
                s = s + Poly.var(j, n, self.p, "U")
            images.append(s)
        return Poly(n, self.substitute(images).terms, self.p, "U", self.label)

    def to_X(self) -> "Poly":
        if self.coords == "X":
            return self
        n = self.nvars
        images = []
        for i in range(n):
            v = Poly.var(i, n, self.p, "X")
            if i < n - 1:
                v = v - Poly.var(i + 1, n, self.p, "X")
            images.append(v)
        return Poly(n, self.substitute(images).terms, self.p, "X", self.label)

    # -- evaluation ---------------------------------------------------------
    def _u_values(self, Q: AlexanderQuandle, args: Sequence[Elem]) -> list[Elem]:
        if self.coords == "X":
            return list(args)
        R = Q.ring
        return [R.sub(args[i], args[i + 1]) for i in range(len(args) - 1)] + [args[-1]]

    def evaluate(self, Q: AlexanderQuandle, args: Sequence[Elem]) -> Elem:
        """Value at colours ``args`` in ``S`` (``w`` read as ``Q.omega``)."""
        if len(args) != self.nvars:
            raise ArityMismatch(f"{self.nvars}-cochain evaluated at {len(args)} colours")
        R = Q.ring
        vals = self._u_values(Q, [R.check(a) for a in args])
        out = R.zero
        for key, c in self.terms.items():
            t = R.scale(R.pow(Q.omega, key[-1]), c)
            for v, e in zip(vals, key[:-1]):
                if e:
                    t = R.mul(t, R.pow(v, e))
            out = R.add(out, t)
        return out

    def evaluate_symbolic(self, args: Sequence[Laurent]) -> Laurent:
        """Value at symbolic colours, with ``w`` kept as an indeterminate."""
        if len(args) != self.nvars:
            raise ArityMismatch(f"{self.nvars}-cochain evaluated at {len(args)} colours")
        p = self.p
        if self.coords == "U":
            vals = [args[i] - args[i + 1] for i in range(len(args) - 1)] + [args[-1]]
        else:
            vals = list(args)
        cache: dict[tuple[int, int], Laurent] = {}

        def power(i: int, e: int) -> Laurent:
            if (i, e) not in cache:
                cache[(i, e)] = vals[i] ** e
            return cache[(i, e)]

        out = Laurent((), p)
        for key, c in self.terms.items():
            t = Laurent.monomial(key[-1], c, p)
            for i, e in enumerate(key[:-1]):
                if e:
                    t = t * power(i, e)
            out = out + t
        return out

    def value_table(self, Q: AlexanderQuandle) -> list[int]:
        """Element indices of ``f`` on all of ``S^n`` (first argument most significant)."""
        return _value_table(self, Q)

    # -- printing -------------------------------------------------------------
    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = ["U1", "U2", "U3", "U4", "U5"] if self.coords == "U" else ["x", "y", "z", "x4", "x5"]
        # group by colour monomial, graded-lex descending
        groups: dict[Key, dict[int, int]] = {}
        for key, c in self.terms.items():
            groups.setdefault(key[:-1], {})[key[-1]] = c
        order = sorted(groups, key=lambda k: (sum(k), k), reverse=True)
        parts = []
        for mono in order:
            coef = Laurent.from_dict(groups[mono])
            mstr = "*".join(
                names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(mono) if e
            )
            cstr = str(coef)
            if not mstr:
                parts.append(cstr)
            elif cstr == "1":
                parts.append(mstr)
            elif len(coef.terms) == 1:
                parts.append(f"{cstr}*{mstr}")
            else:
                parts.append(f"({cstr})*{mstr}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        tag = f" [{self.label}]" if self.label else ""
        return f"Poly<{self.coords}{self.nvars}>({self}){tag}"


def _value_table(f: Poly, Q: AlexanderQuandle) -> list[int]:
    R = Q.ring
    q, n = R.order, f.nvars
    add, mul, neg = R.add_table, R.mul_table, R.neg_table
    # collapse w-coefficients into S per colour monomial
    coeff: dict[Key, int] = {}
    for key, c in f.terms.items():
        e = R.index(R.scale(R.pow(Q.omega, key[-1]), c))
        mono = key[:-1]
        coeff[mono] = add[coeff.get(mono, 0)][e]
    monos = [(m, c) for m, c in coeff.items() if c != 0]
    exps = {e for m, _ in monos for e in m}
    ptab = {e: [R.index(R.pow(x, e)) for x in R.element_list] for e in exps}
    table = [0] * (q ** n)
    u_mode = f.coords == "U"
    for idx, tup in enumerate(itertools.product(range(q), repeat=n)):
        if u_mode:
            vals = [add[tup[i]][neg[tup[i + 1]]] for i in range(n - 1)] + [tup[-1]]
        else:
            vals = tup
        acc = 0
        for mono, c in monos:
            t = c
            for v, e in zip(vals, mono):
                if e:
                    t = mul[t][ptab[e][v]]
                    if t == 0:
                        break
            acc = add[acc][t]
        table[idx] = acc
    return table


# ---------------------------------------------------------------------------
# coboundaries
# ---------------------------------------------------------------------------

def coboundary(f: Poly) -> Poly:
    """``delta_n f`` in U-coordinates:

    sum_{i=1}^n (-1)^(i-1) [ f(wU_1, ..., wU_{i-1}, wU_i + U_{i+1}, U_{i+2}, ...)
                            - f(U_1, ..., U_{i-1}, U_i + U_{i+1}, U_{i+2}, ...) ]
    """
    f = f.to_U()
    n, p = f.nvars, f.p
    N = n + 1
    U = [Poly.var(j, N, p) for j in range(N)]
    out = Poly.zero(N, p)
    for i in range(n):
        twisted = [U[j].times_omega(1) for j in range(i)] + [U[i].times_omega(1) + U[i + 1]] + U[i + 2:]
        plain = U[:i] + [U[i] + U[i + 1]] + U[i + 2:]
        term = f.substitute(twisted) - f.substitute(plain)
        out = out + term if i % 2 == 0 else out - term
    return out


def coboundary_table(table: Sequence[int], Q: AlexanderQuandle, n: int) -> list[int]:
    """Brute-force ``delta_n`` on a function table, in colour coordinates:

    delta f(x_1..x_{n+1}) = sum_{i=2}^{n+1} (-1)^i [ f(x_1..^x_i..x_{n+1})
                              - f(x_1*x_i, .., x_{i-1}*x_i, x_{i+1}, .., x_{n+1}) ]
    """
    R = Q.ring
    q = R.order
    add, neg, op = R.add_table, R.neg_table, Q.op_table
    weights = [q ** (n - 1 - j) for j in range(n)]

    def at(t: Sequence[int]) -> int:
        return table[sum(a * w for a, w in zip(t, weights))]

    out = []
    for tup in itertools.product(range(q), repeat=n + 1):
        acc = 0
        for i in range(1, n + 1):
            xi = tup[i]
            first = at(tup[:i] + tup[i + 1:])
            second = at(tuple(op[a][xi] for a in tup[:i]) + tup[i + 1:])
            term = add[first][neg[second]]
            acc = add[acc][term] if i % 2 == 1 else add[acc][neg[term]]
        out.append(acc)
    return out


def is_degenerate_free(table: Sequence[int], q: int, n: int) -> bool:
    """True iff the function vanishes whenever two adjacent arguments agree."""
    for idx, tup in enumerate(itertools.product(range(q), repeat=n)):
        if table[idx] and any(tup[i] == tup[i + 1] for i in range(n - 1)):
            return False
    return True


def is_cocycle(f: Poly, Q: AlexanderQuandle) -> bool:
    if f.p != Q.ring.p:
        return False
    table = f.value_table(Q)
    if not is_degenerate_free(table, Q.order, f.nvars):
        return False
    return not any(coboundary_table(table, Q, f.nvars))


# ---------------------------------------------------------------------------
# chi and the cohomology bases
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def chi(p: int) -> Poly:
    """``sum_{j=1}^{p-1} (-1)^(j-1) j^(-1) U_1^(p-j) U_2^j`` over ``F_p``."""
    terms = {}
    for j in range(1, p):
        terms[(p - j, j, 0)] = (-1) ** (j - 1) * pow(j, -1, p)
    return Poly(2, terms, p, "U", f"chi_{p}")


def _require_basis_setting(Q: AlexanderQuandle) -> None:
    if not Q.ring.is_field:
        raise NotAField(f"{Q.ring} is not a field; no basis theorem applies")
    if Q.omega in (Q.ring.zero, Q.ring.one):
        raise OmegaTrivial("basis generation needs w != 0, 1")


def omega_poly(Q: AlexanderQuandle, e: Elem) -> Laurent:
    """Write ``e`` as a polynomial in ``Q.omega`` of degree < m over ``F_p``.

    Raises ``ValueError`` when ``e`` is not in ``F_p[omega]``.
    """
    R = Q.ring
    if Q.omega == R.generator:
        return R.to_laurent(e)
    powers = [R.pow(Q.omega, k) for k in range(R.m)]
    for coeffs in itertools.product(range(R.p), repeat=R.m):
        v = R.zero
        for c, w in zip(coeffs, powers):
            v = R.add(v, R.scale(w, c))
        if v == e:
            return Laurent.from_dict(dict(enumerate(coeffs)), R.p)
    raise ValueError(f"{R.format(e)} is not a polynomial in w = {R.format(Q.omega)}")


def _omega_pow_is_one(Q: AlexanderQuandle, k: int) -> bool:
    return Q.ring.pow(Q.omega, k) == Q.ring.one


def basis_h2(Q: AlexanderQuandle) -> list[Poly]:
    """``{U_1^(p^v) U_2^(p^u) : w^(p^v + p^u) = 1, 0 <= v < u < m}``."""
    _require_basis_setting(Q)
    p, m = Q.ring.p, Q.ring.m
    out = []
    for v, u in itertools.combinations(range(m), 2):
        if _omega_pow_is_one(Q, p ** v + p ** u):
            out.append(Poly.monomial((p ** v, p ** u), p).with_label(f"basis2:{v},{u}"))
    return out


def _cond42(Q: AlexanderQuandle, v: int, u: int, t: int, s: int) -> bool:
    p, m = Q.ring.p, Q.ring.m
    return (
        u <= t
        and v < t < m
        and u < s < m
        and _omega_pow_is_one(Q, p ** v + p ** t)
        and _omega_pow_is_one(Q, p ** u + p ** s)
    )


def basis_h3(Q: AlexanderQuandle, printed_i43: bool = False) -> list[Poly]:
    """The families I_1, I_2, I_3, I_4-1..I_4-5, I_0 of 3-cocycles.

    The I_4-3 elements use the correction term
    ``+ (1 + w^{-p^t})/2 * U1^{p^v} U2^{p^u} U3^{2 p^t}``.  With
    ``printed_i43=True`` the term ``- (1 - w^{-p^t})/2 * ...`` is used instead;
    that variant is kept only to show it is not a cocycle.
    """
    _require_basis_setting(Q)
    R = Q.ring
    p, m = R.p, R.m
    P = lambda k: p ** k  # noqa: E731
    W = lambda k: R.pow(Q.omega, k)  # noqa: E731
    one = R.one
    U1, U2, U3 = (Poly.var(i, 3, p) for i in range(3))
    ch = chi(p)

    def mono(a: int, b: int, c: int) -> Poly:
        return Poly.monomial((a, b, c), p)

    def coef(e: Elem) -> Poly:
        return Poly.from_laurent(omega_poly(Q, e), 3)

    def ratio(num: Elem, den: Elem, family: str) -> Elem:
        if den == R.zero:
            raise DivisionByZero(f"vanishing denominator in family {family}")
        return R.mul(num, R.invert(den))

    out: list[Poly] = []

    for v, u, t in itertools.combinations(range(m), 3):
        if _omega_pow_is_one(Q, P(v) + P(u) + P(t)):
            out.append(mono(P(v), P(u), P(t)).with_label(f"basis3:I1:{v},{u},{t}"))

    wU1 = U1.times_omega(1)
    diff2 = ch.substitute([wU1, U2]) - ch.substitute([U1, U2])
    for u, t in itertools.combinations(range(m), 2):
        if _omega_pow_is_one(Q, P(u + 1) + P(t)):
            out.append((diff2.frobenius(u) * U3.frobenius(t)).with_label(f"basis3:I2:{u},{t}"))

    diff3 = ch.substitute([U2, U3]) - ch.substitute([U2, U3.times_omega(-1)])
    for v in range(m):
        for t in range(v, m):
            if _omega_pow_is_one(Q, P(v) + P(t + 1)):
                out.append((U1.frobenius(v) * diff3.frobenius(t)).with_label(f"basis3:I3:{v},{t}"))

    for v, u, t, s in itertools.product(range(m), repeat=4):
        if not _cond42(Q, v, u, t, s):
            continue
        idx = f"{v},{u},{t},{s}"
        lead = mono(P(v), P(u) + P(t), P(s))
        vu_one = _omega_pow_is_one(Q, P(v) + P(u))
        if vu_one:
            out.append(lead.with_label(f"basis3:I4-1:{idx}"))
            continue
        if t > s:
            c = ratio(R.sub(one, W(P(v) + P(u))), R.sub(W(P(u)), one), "I4-2")
            el = (
                lead
                - mono(P(u), P(v) + P(s), P(t))
                - coef(c) * (mono(P(v), P(u), P(t) + P(s)) - mono(P(v) + P(u), P(s), P(t)))
            )
            out.append(el.with_label(f"basis3:I4-2:{idx}"))
        if p != 2 and t == s:
            half = R.invert(R.from_int(2))
            if printed_i43:
                c = R.mul(half, R.sub(one, W(-P(t))))
                el = lead - coef(c) * mono(P(v), P(u), P(t) + P(s))
            else:
                c = R.mul(half, R.add(one, W(-P(t))))
                el = lead + coef(c) * mono(P(v), P(u), P(t) + P(s))
            out.append(el.with_label(f"basis3:I4-3:{idx}"))
        same_power = W(P(v)) == W(P(u))
        if same_power and ((p != 2 and u <= v < t < s) or (p == 2 and u < v < t < s)):
            family = "I4-4" if p != 2 else "I4-5"
            c = ratio(R.sub(one, W(2 * P(v))), R.sub(W(P(v)), one), family)
            el = lead + mono(P(u), P(v) + P(t), P(s)) - coef(c) * mono(P(v) + P(u), P(t), P(s))
            out.append(el.with_label(f"basis3:{family}:{idx}"))

    for v, u in itertools.combinations(range(m), 2):
        if _omega_pow_is_one(Q, P(v) + P(u)):
            out.append(mono(P(v), P(u), 0).with_label(f"basis3:I0:{v},{u}"))
    return out


def mochizuki_p3(Q: AlexanderQuandle) -> Poly:
    """``(x-y) * (1/p) (y^p - z^p - (y - z + w^-1 z)^p + (w^-1 z)^p)`` mod p.

    The bracket is expanded over the integers, checked for divisibility by
    ``p`` and divided before reducing.
    """
    p = Q.ring.p
    if p == 2:
        raise ValueError("the Mochizuki 3-cocycle construction needs an odd prime")
    x, y, z = (Poly.var(i, 3, None, "X") for i in range(3))
    wz = z.times_omega(-1)
    bracket = y ** p - z ** p - (y - z + wz) ** p + wz ** p
    reduced = bracket.divide_exact(p).reduce_mod(p)
    return ((x - y).reduce_mod(p) * reduced).with_label(f"mochizuki-p{p}")


def example111(p: int) -> Poly:
    return Poly.parse("(x-y)*y^2", p, 2, label="example111")


def named_cocycle(name: str, Q: AlexanderQuandle) -> Poly:
    """Resolve ``mochizuki-p3``, ``example111``, ``basis2:v,u``,
    ``basis3:<family>:<indices>``."""
    p = Q.ring.p
    if name in ("mochizuki-p3", "mochizuki"):
        return mochizuki_p3(Q)
    if name == "example111":
        return example111(p)
    if name.startswith("basis2:") or name.startswith("basis3:"):
        pool = basis_h2(Q) if name.startswith("basis2:") else basis_h3(Q)
        for f in pool:
            if f.label == name:
                return f
        have = ", ".join(f.label for f in pool) or "none"
        raise ParseError(f"no basis element {name!r} for {Q}; available: {have}")
    raise ParseError(f"unknown cocycle name {name!r}")


def load_cocycles(text: str, p: int, nvars: int | None = None) -> list[Poly]:
    """One expression in ``x, y, z, w`` per line; ``#`` starts a comment."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            out.append(Poly.parse(line, p, nvars, label=line))
        except ParseError as exc:
            raise ParseError(str(exc).split(" (line")[0], lineno, exc.column) from None
    if not out:
        raise ParseError("no cocycle expressions found")
    return out


def all_cochain_monomials(n: int, q: int) -> Iterable[tuple[int, ...]]:
    """Exponents spanning normalized n-cochains in U-coordinates."""
    ranges = [range(1, q)] * (n - 1) + [range(q)]
    return itertools.product(*ranges)
