"""Brute-force linear algebra over F_q for quandle cohomology.

This is the independent oracle for the cochain module: it never looks at the
U-coordinate polynomials.  Cochains are functions ``X^n -> F_q`` and the
coboundary is the colour-coordinate formula.

To keep matrices small we split the normalized cochain space by the scaling
action ``f(x) -> f(lambda x)`` of ``F_q^*``.  Its order ``q-1`` is prime to ``p``
so the action is diagonalizable; the ``d``-eigenspace has basis ``e_{a,d}``
(one per scaling orbit ``a``) with ``e_{a,d}(lambda a) = lambda^d``.  Scalings
are quandle automorphisms, so the coboundary preserves each eigenspace.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .quandle import AlexanderQuandle


def rank_fq(rows: Sequence[Sequence[int]] | np.ndarray, add: np.ndarray, mul: np.ndarray,
            neg: np.ndarray, inv: np.ndarray) -> int:
    """Rank of a matrix whose entries are element indices (0 is the zero)."""
    A = np.array(rows, dtype=np.int64)
    if A.size == 0:
        return 0
    nrows, ncols = A.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = mul[inv[A[r, c]], A[r]]
        others = np.nonzero(A[:, c])[0]
        others = others[others != r]
        if others.size:
            factors = A[others, c]
            A[others] = add[A[others], neg[mul[factors[:, None], A[r][None, :]]]]
        r += 1
    return r


@dataclass
class CohomologyOracle:
    """Quandle cohomology ``H^n_Q(X; F_q)`` of an Alexander quandle on a field."""

    Q: AlexanderQuandle

    def __post_init__(self) -> None:
        R = self.Q.ring
        if not R.is_field:
            raise ValueError("the rank oracle needs a field")
        self.q = R.order
        self.add = np.array(R.add_table)
        self.mul = np.array(R.mul_table)
        self.neg = np.array(R.neg_table)
        one = R.index(R.one)
        inv = np.zeros(self.q, dtype=np.int64)
        for a in range(1, self.q):
            inv[a] = int(np.nonzero(self.mul[a] == one)[0][0])
        self.inv = inv
        self.one = one
        # scalars lambda in F_q^* and their powers
        self.units = list(range(1, self.q))
        self._pow: dict[tuple[int, int], int] = {}
        self._orbits: dict[int, list[tuple[int, ...]]] = {}

    # -- helpers -------------------------------------------------------------
    def power(self, a: int, d: int) -> int:
        key = (a, d % (self.q - 1))
        if key not in self._pow:
            v = self.one
            for _ in range(key[1]):
                v = int(self.mul[v, a])
            self._pow[key] = v
        return self._pow[key]

    def _normalize(self, t: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
        """``t = lam * rep`` with ``rep`` having leading nonzero entry 1."""
        lead = next((a for a in t if a), 0)
        if lead == 0:
            return t, self.one
        li = int(self.inv[lead])
        return tuple(int(self.mul[li, a]) for a in t), lead

    def orbits(self, n: int) -> list[tuple[int, ...]]:
        """Scaling-orbit representatives of nondegenerate n-tuples (plus the
        zero tuple when n = 1)."""
        if n not in self._orbits:
            reps = []
            for t in itertools.product(range(self.q), repeat=n):
                if n > 1 and any(t[i] == t[i + 1] for i in range(n - 1)):
                    continue
                rep, lam = self._normalize(t)
                if rep == t:
                    reps.append(t)
            self._orbits[n] = reps
        return self._orbits[n]

    def dim_cochains(self, n: int, d: int) -> int:
        reps = self.orbits(n)
        zero = (0,) * n
        return sum(1 for r in reps if r != zero or d % (self.q - 1) == 0)

    def coboundary_matrix(self, n: int, d: int) -> np.ndarray:
        """Matrix of ``delta_n`` on the d-eigenspace (rows: (n+1)-orbits)."""
        op = self.Q.op_table
        src = [r for r in self.orbits(n) if r != (0,) * n or d % (self.q - 1) == 0]
        col = {r: j for j, r in enumerate(src)}
        dst = [r for r in self.orbits(n + 1) if r != (0,) * (n + 1) or d % (self.q - 1) == 0]
        M = np.zeros((len(dst), len(src)), dtype=np.int64)
        add, neg = self.add, self.neg
        for i, b in enumerate(dst):
            for k in range(1, n + 1):
                first = b[:k] + b[k + 1:]
                second = tuple(op[a][b[k]] for a in b[:k]) + b[k + 1:]
                sign_first = k % 2 == 1  # (-1)^(k+1) with 0-based k
                for t, positive in ((first, sign_first), (second, not sign_first)):
                    if n > 1 and any(t[j] == t[j + 1] for j in range(n - 1)):
                        continue
                    rep, lam = self._normalize(t)
                    j = col.get(rep)
                    if j is None:
                        continue
                    v = self.power(lam, d)
                    M[i, j] = add[M[i, j], v if positive else neg[v]]
        return M

    def rank(self, M: np.ndarray) -> int:
        return rank_fq(M, self.add, self.mul, self.neg, self.inv)

    def dimension(self, n: int) -> int:
        """``dim ker delta_n - dim im delta_{n-1}``, summed over eigenspaces."""
        total = 0
        for d in range(self.q - 1):
            ker = self.dim_cochains(n, d) - self.rank(self.coboundary_matrix(n, d))
            im = self.rank(self.coboundary_matrix(n - 1, d)) if n > 1 else 0
            total += ker - im
        return total

    # -- membership tests for explicit cochains --------------------------------
    def coordinates(self, table: Sequence[int], n: int) -> np.ndarray:
        """Coordinates of a normalized function table in the eigen-basis,
        concatenated over d = 0 .. q-2."""
        q = self.q
        weights = [q ** (n - 1 - j) for j in range(n)]
        out = []
        for d in range(q - 1):
            for rep in self.orbits(n):
                if rep == (0,) * n and d != 0:
                    continue
                # c = (q-1)^{-1} sum_lam lam^{-d} f(lam a) and (q-1)^{-1} = -1
                acc = 0
                for lam in (self.units if rep != (0,) * n else [self.one]):
                    t = tuple(int(self.mul[lam, a]) for a in rep)
                    val = table[sum(a * w for a, w in zip(t, weights))]
                    acc = int(self.add[acc, self.mul[self.power(lam, -d), val]])
                out.append(int(self.neg[acc]) if rep != (0,) * n else acc)
        return np.array(out, dtype=np.int64)

    def image_basis(self, n: int) -> np.ndarray:
        """Columns spanning ``im delta_{n-1}`` in the concatenated coordinates."""
        blocks = []
        sizes = [self.dim_cochains(n, d) for d in range(self.q - 1)]
        offset = 0
        total = sum(sizes)
        for d in range(self.q - 1):
            if n > 1:
                M = self.coboundary_matrix(n - 1, d)
                full = np.zeros((total, M.shape[1]), dtype=np.int64)
                full[offset:offset + sizes[d]] = M
                blocks.append(full)
            offset += sizes[d]
        return np.hstack(blocks) if blocks else np.zeros((total, 0), dtype=np.int64)

    def independent_mod_coboundaries(self, tables: Sequence[Sequence[int]], n: int) -> bool:
        """True iff the given cochains are linearly independent modulo
        coboundaries (in particular none of them is a coboundary)."""
        img = self.image_basis(n)
        vecs = np.array([self.coordinates(t, n) for t in tables], dtype=np.int64).T
        r_img = self.rank(img.T)
        both = np.hstack([img, vecs]) if vecs.size else img
        return self.rank(both.T) == r_img + len(tables)
