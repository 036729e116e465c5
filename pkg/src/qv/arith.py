"""Exact arithmetic for the colour/coefficient rings.

Three layers live here:

* :class:`Laurent` -- Laurent polynomials in the symbol ``w`` (omega), either over
  the integers (``p is None``) or over ``Z/pZ``.  Integer ones are the exponent
  lifts fed to the hbar-expansion; mod-p ones are symbolic colours and cocycle
  values before reduction by ``h``.
* :class:`GroundRing` -- ``S = F_p[w]/(h(w))``.  Elements are plain tuples of
  ``m = deg h`` residues, constant term first.  ``h`` need not be irreducible.
* a small expression parser (``1+2*w``, ``w^-2``, ``(x-y)*y^2``) built on
  :mod:`ast`, shared by the CLI and the cochain module.
"""

from __future__ import annotations

import ast
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterator, Mapping, Sequence

from .errors import (
    AugmentationSingular,
    NonMonic,
    NonPrime,
    NotAUnit,
    OmegaNotUnit,
    ParseError,
)

Elem = tuple[int, ...]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def symmetric_residue(c: int, p: int) -> int:
    """Representative of ``c mod p`` in ``(-p/2, p/2]``."""
    r = c % p
    return r - p if r > p // 2 else r


# ---------------------------------------------------------------------------
# dense polynomials over F_p (constant term first); internal helpers
# ---------------------------------------------------------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pdivmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], -1, p)
    quot = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        quot[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bc) % p
        _trim(a)
    return _trim(quot), a


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _psub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _pxgcd(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    """Return ``(g, s)`` with ``s*a = g (mod b)``, ``g`` monic gcd."""
    r0, r1 = _trim([c % p for c in a]), _trim([c % p for c in b])
    s0, s1 = [1], []
    while r1:
        q, r = _pdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1, p), p)
    if not r0:
        return [], []
    inv = pow(r0[-1], -1, p)
    return [c * inv % p for c in r0], [c * inv % p for c in s0]


def _ppowmod(base: Sequence[int], e: int, mod: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _pdivmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _pdivmod(_pmul(result, base, p), mod, p)[1]
        base = _pdivmod(_pmul(base, base, p), mod, p)[1]
        e >>= 1
    return result


# ---------------------------------------------------------------------------
# expression parsing
# ---------------------------------------------------------------------------

PolyDict = dict[tuple[int, ...], int]


def parse_expr(text: str, variables: Sequence[str] = ()) -> PolyDict:
    """Parse an integer polynomial in ``variables`` and the Laurent symbol ``w``.

    Keys of the result are exponent tuples ``(e_1, ..., e_k, e_w)``.  Only ``w``
    may carry a negative exponent.  ``/`` is accepted when the divisor is a
    nonzero integer that divides every coefficient.
    """
    names = list(variables) + ["w"]
    n = len(names)
    # '^' is XOR in Python, with the wrong precedence; swap in '**' and keep a
    # column map back to the original text for error reporting.
    src, colmap = [], []
    for i, ch in enumerate(text):
        if ch == "^":
            src.append("**")
            colmap.extend([i, i])
        else:
            src.append(ch)
            colmap.append(i)
    source = "".join(src)

    def col(node: ast.AST) -> int:
        c = getattr(node, "col_offset", 0)
        return (colmap[c] if c < len(colmap) else len(text)) + 1

    try:
        tree = ast.parse(source.strip() or "0", mode="eval")
    except SyntaxError as exc:
        c = exc.offset - 1 if exc.offset else 0
        raise ParseError(f"syntax error in {text!r}", 1, (colmap[c] if c < len(colmap) else len(text)) + 1) from None

    zero_key = (0,) * n

    def add(a: PolyDict, b: PolyDict, sign: int = 1) -> PolyDict:
        out = dict(a)
        for k, v in b.items():
            out[k] = out.get(k, 0) + sign * v
            if out[k] == 0:
                del out[k]
        return out

    def mul(a: PolyDict, b: PolyDict) -> PolyDict:
        out: PolyDict = {}
        for ka, va in a.items():
            for kb, vb in b.items():
                k = tuple(x + y for x, y in zip(ka, kb))
                out[k] = out.get(k, 0) + va * vb
                if out[k] == 0:
                    del out[k]
        return out

    def walk(node: ast.AST) -> PolyDict:
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
            return {zero_key: node.value} if node.value else {}
        if isinstance(node, ast.Name):
            if node.id not in names:
                raise ParseError(f"unknown symbol {node.id!r}", 1, col(node))
            k = [0] * n
            k[names.index(node.id)] = 1
            return {tuple(k): 1}
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = walk(node.operand)
            return {k: -c for k, c in v.items()} if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Add):
                return add(walk(node.left), walk(node.right))
            if isinstance(node.op, ast.Sub):
                return add(walk(node.left), walk(node.right), -1)
            if isinstance(node.op, ast.Mult):
                return mul(walk(node.left), walk(node.right))
            if isinstance(node.op, ast.Pow):
                base = walk(node.left)
                e = walk(node.right)
                if any(k != zero_key for k in e) or len(e) > 1:
                    raise ParseError("exponent must be an integer constant", 1, col(node.right))
                k_exp = e.get(zero_key, 0)
                if k_exp < 0:
                    # only a lone power of w may be inverted
                    if len(base) == 1:
                        (k, c), = base.items()
                        if c in (1, -1) and all(x == 0 for x in k[:-1]):
                            return {k[:-1] + (k[-1] * k_exp,): c ** (-k_exp) if c == -1 else 1}
                    raise ParseError("negative powers are only allowed on w", 1, col(node))
                out: PolyDict = {zero_key: 1}
                for _ in range(k_exp):
                    out = mul(out, base)
                return out
            if isinstance(node.op, ast.Div):
                num = walk(node.left)
                den = walk(node.right)
                if len(den) != 1 or zero_key not in den:
                    raise ParseError("can only divide by a nonzero integer", 1, col(node.right))
                d = den[zero_key]
                if any(c % d for c in num.values()):
                    raise ParseError(f"division by {d} is not exact", 1, col(node))
                return {k: c // d for k, c in num.items()}
        raise ParseError(f"unsupported syntax {type(node).__name__}", 1, col(node))

    return walk(tree)


# ---------------------------------------------------------------------------
# Laurent polynomials in w
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Laurent:
    """Sparse Laurent polynomial in ``w``; hashable, no stored zeros.

    ``terms`` is a sorted tuple of ``(exponent, coefficient)`` pairs.  With
    ``p`` set the coefficients are residues in ``[0, p)``.
    """

    terms: tuple[tuple[int, int], ...] = ()
    p: int | None = None

    @classmethod
    def from_dict(cls, d: Mapping[int, int], p: int | None = None) -> "Laurent":
        items = []
        for k in sorted(d):
            c = d[k] % p if p else d[k]
            if c:
                items.append((k, c))
        return cls(tuple(items), p)

    @classmethod
    def const(cls, c: int, p: int | None = None) -> "Laurent":
        return cls.from_dict({0: c}, p)

    @classmethod
    def monomial(cls, k: int, c: int = 1, p: int | None = None) -> "Laurent":
        return cls.from_dict({k: c}, p)

    @classmethod
    def parse(cls, text: str, p: int | None = None) -> "Laurent":
        d = parse_expr(text)
        return cls.from_dict({k[0]: c for k, c in d.items()}, p)

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _check(self, other: "Laurent") -> None:
        if self.p != other.p:
            raise ValueError(f"mixing Laurent polynomials over p={self.p} and p={other.p}")

    def __add__(self, other: "Laurent") -> "Laurent":
        self._check(other)
        d = self.as_dict()
        for k, c in other.terms:
            d[k] = d.get(k, 0) + c
        return Laurent.from_dict(d, self.p)

    def __neg__(self) -> "Laurent":
        return Laurent.from_dict({k: -c for k, c in self.terms}, self.p)

    def __sub__(self, other: "Laurent") -> "Laurent":
        return self + (-other)

    def __mul__(self, other: "Laurent | int") -> "Laurent":
        if isinstance(other, int):
            return Laurent.from_dict({k: c * other for k, c in self.terms}, self.p)
        self._check(other)
        d: dict[int, int] = {}
        for k1, c1 in self.terms:
            for k2, c2 in other.terms:
                d[k1 + k2] = d.get(k1 + k2, 0) + c1 * c2
        return Laurent.from_dict(d, self.p)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Laurent":
        if e < 0:
            if len(self.terms) == 1:
                (k, c), = self.terms
                if self.p is not None:
                    return Laurent.from_dict({k * e: pow(pow(c, -1, self.p), -e, self.p)}, self.p)
                if c in (1, -1):
                    return Laurent.from_dict({k * e: c ** (-e)})
            raise ValueError("only monomials with unit coefficient can be inverted")
        out = Laurent.const(1, self.p)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def shift(self, k: int) -> "Laurent":
        return Laurent(tuple((e + k, c) for e, c in self.terms), self.p)

    def __call__(self, value: int | Fraction) -> Fraction:
        """Evaluate at a rational ``w`` (exact)."""
        v = Fraction(value)
        total = Fraction(0)
        for k, c in self.terms:
            total += c * v ** k
        return total

    def at_one(self) -> int:
        return sum(c for _, c in self.terms)

    def mod(self, p: int) -> "Laurent":
        return Laurent.from_dict(self.as_dict(), p)

    def lift(self) -> "Laurent":
        """Integer Laurent with the same (canonical, ``[0,p)``) coefficients."""
        return Laurent(self.terms, None)

    def min_exp(self) -> int:
        return self.terms[0][0] if self.terms else 0

    def max_exp(self) -> int:
        return self.terms[-1][0] if self.terms else 0

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, c in reversed(self.terms):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = "w" if k == 1 else f"w^{k}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += sign + body
        return s

    def __repr__(self) -> str:
        return f"Laurent({str(self)!r}, p={self.p})"


# ---------------------------------------------------------------------------
# the ground ring S = F_p[w]/(h)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroundRing:
    """``S = F_p[w]/(h(w))`` with ``h`` monic and ``h(0)`` a unit.

    Elements are tuples ``(c_0, ..., c_{m-1})``.  Enumeration order is
    lexicographic on that tuple; :meth:`index` is the position in it.
    """

    p: int
    h: tuple[int, ...]

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise NonPrime(f"{self.p} is not prime")
        h = _trim([int(c) % self.p for c in self.h])
        if len(h) < 2 or h[-1] != 1:
            raise NonMonic(f"modulus {list(self.h)} is not monic of degree >= 1 mod {self.p}")
        if h[0] == 0:
            raise OmegaNotUnit("h(0) = 0, so w is not invertible")
        object.__setattr__(self, "h", tuple(h))

    # -- descriptors ------------------------------------------------------
    @property
    def m(self) -> int:
        return len(self.h) - 1

    @property
    def order(self) -> int:
        return self.p ** self.m

    @property
    def h_lift(self) -> Laurent:
        """Integer lift of ``h`` with coefficients in ``(-p/2, p/2]``."""
        return Laurent.from_dict({i: symmetric_residue(c, self.p) for i, c in enumerate(self.h)})

    def __str__(self) -> str:
        return f"F_{self.p}[w]/({self.h_lift})"

    # -- element plumbing -------------------------------------------------
    @property
    def zero(self) -> Elem:
        return (0,) * self.m

    @property
    def one(self) -> Elem:
        return self.from_int(1)

    @cached_property
    def generator(self) -> Elem:
        """The class of ``w``."""
        return self.reduce_coeffs([0, 1])

    def from_int(self, c: int) -> Elem:
        return (c % self.p,) + (0,) * (self.m - 1)

    def elements(self) -> Iterator[Elem]:
        return itertools.product(range(self.p), repeat=self.m)

    def index(self, e: Elem) -> int:
        i = 0
        for c in e:
            i = i * self.p + c
        return i

    @cached_property
    def element_list(self) -> list[Elem]:
        return list(self.elements())

    def element(self, i: int) -> Elem:
        return self.element_list[i]

    def check(self, e: Elem) -> Elem:
        if len(e) != self.m or any(not 0 <= c < self.p for c in e):
            raise ValueError(f"{e!r} is not an element of {self}")
        return tuple(e)

    def reduce_coeffs(self, coeffs: Sequence[int]) -> Elem:
        r = _pdivmod(list(coeffs), list(self.h), self.p)[1]
        return tuple(r) + (0,) * (self.m - len(r))

    # -- ring operations --------------------------------------------------
    def add(self, x: Elem, y: Elem) -> Elem:
        return tuple((a + b) % self.p for a, b in zip(x, y))

    def sub(self, x: Elem, y: Elem) -> Elem:
        return tuple((a - b) % self.p for a, b in zip(x, y))

    def neg(self, x: Elem) -> Elem:
        return tuple(-a % self.p for a in x)

    def scale(self, x: Elem, c: int) -> Elem:
        return tuple(a * c % self.p for a in x)

    def mul(self, x: Elem, y: Elem) -> Elem:
        return self.reduce_coeffs(_pmul(x, y, self.p))

    def arith(self, op: str, x: Elem, y: Elem) -> Elem:
        return {"add": self.add, "sub": self.sub, "mul": self.mul}[op](x, y)

    def invert(self, x: Elem) -> Elem:
        g, s = _pxgcd(list(x), list(self.h), self.p)
        if g != [1]:
            raise NotAUnit(f"{self.format(x)} is not a unit in {self}")
        return self.reduce_coeffs(s)

    def is_unit(self, x: Elem) -> bool:
        return _pxgcd(list(x), list(self.h), self.p)[0] == [1]

    def pow(self, x: Elem, e: int) -> Elem:
        if e < 0:
            x, e = self.invert(x), -e
        out, base = self.one, x
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    @cached_property
    def is_field(self) -> bool:
        """Rabin's irreducibility test for ``h`` over ``F_p``."""
        p, m, h = self.p, self.m, list(self.h)
        x = _pdivmod([0, 1], h, p)[1]
        if _psub(_ppowmod(x, p ** m, h, p), x, p):
            return False
        for r in {d for d in range(2, m + 1) if m % d == 0 and is_prime(d)}:
            t = _psub(_ppowmod(x, p ** (m // r), h, p), x, p)
            if _pxgcd(t, h, p)[0] != [1]:
                return False
        return True

    # -- tables for hot loops ----------------------------------------------
    @cached_property
    def add_table(self) -> list[list[int]]:
        E = self.element_list
        return [[self.index(self.add(a, b)) for b in E] for a in E]

    @cached_property
    def mul_table(self) -> list[list[int]]:
        E = self.element_list
        return [[self.index(self.mul(a, b)) for b in E] for a in E]

    @cached_property
    def neg_table(self) -> list[int]:
        return [self.index(self.neg(a)) for a in self.element_list]

    # -- bridges to Laurent polynomials -----------------------------------
    def reduce(self, f: Laurent, at: Elem | None = None) -> Elem:
        """Image of ``f`` under ``F_p[w^{+-1}] -> S`` sending ``w`` to ``at``
        (default: the class of ``w``)."""
        w = self.generator if at is None else at
        if at is None and f.min_exp() >= 0:
            coeffs = [0] * (f.max_exp() + 1)
            for k, c in f.terms:
                coeffs[k] = c
            return self.reduce_coeffs(coeffs)
        out = self.zero
        for k, c in f.terms:
            out = self.add(out, self.scale(self.pow(w, k), c))
        return out

    def canonical_lift(self, e: Elem) -> Laurent:
        return Laurent.from_dict(dict(enumerate(e)))

    def to_laurent(self, e: Elem) -> Laurent:
        return Laurent.from_dict(dict(enumerate(e)), self.p)

    def normalized_lift(self, e: Elem) -> Laurent:
        """Integer lift ``E = E0 + k*h`` with ``E(1) = 0 (mod p)``.

        ``E0`` is the canonical lift (coefficients in ``[0, p)``), ``h`` is lifted
        with symmetric coefficients and ``k`` is taken in ``[0, p)``.
        """
        h1 = self.h_lift.at_one() % self.p
        if h1 == 0:
            raise AugmentationSingular(f"h(1) = 0 mod {self.p}; no augmentation-normalized lift")
        e0 = self.canonical_lift(e)
        k = (-e0.at_one() * pow(h1, -1, self.p)) % self.p
        return e0 + self.h_lift * k

    # -- text --------------------------------------------------------------
    def format(self, e: Elem) -> str:
        return str(self.canonical_lift(e))

    def parse(self, text: str) -> Elem:
        return self.reduce(Laurent.parse(text, self.p))
