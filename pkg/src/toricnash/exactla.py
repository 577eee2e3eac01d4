"""Exact integer linear algebra.

Vectors are plain tuples of Python ints (arbitrary precision).  Matrices are
stored column-wise, because every matrix in this package is a list of
semigroup generators written as columns.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

LatticeVector = tuple[int, ...]


class ShapeError(ValueError):
    """Raised when matrix or vector dimensions do not fit together."""


def vec(entries: Iterable[int]) -> LatticeVector:
    """Build a lattice vector, rejecting non-integral and empty input."""
    out = []
    for x in entries:
        if isinstance(x, bool) or not isinstance(x, int):
            if isinstance(x, Fraction) and x.denominator == 1:
                x = x.numerator
            else:
                raise TypeError(f"lattice entries must be integers, got {x!r}")
        out.append(int(x))
    if not out:
        raise ShapeError("lattice vectors have dimension >= 1")
    return tuple(out)


def unit(i: int, d: int) -> LatticeVector:
    """The i-th standard basis vector of Z^d (0-based)."""
    return tuple(1 if k == i else 0 for k in range(d))


def add(u: Sequence[int], v: Sequence[int]) -> LatticeVector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def sub(u: Sequence[int], v: Sequence[int]) -> LatticeVector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def scale(c: int, v: Sequence[int]) -> LatticeVector:
    return tuple(c * a for a in v)


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v, strict=True))


def vsum(vectors: Iterable[Sequence[int]], d: int) -> LatticeVector:
    total = [0] * d
    for v in vectors:
        for k, x in enumerate(v):
            total[k] += x
    return tuple(total)


def primitive(v: Sequence) -> LatticeVector:
    """Scale a rational vector to the primitive integer vector on its ray."""
    fr = [Fraction(x) for x in v]
    den = 1
    for x in fr:
        den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = math.gcd(*ints)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


@dataclass(frozen=True)
class LatticeMatrix:
    """An integer matrix given by its columns."""

    columns: tuple[LatticeVector, ...]

    def __post_init__(self):
        cols = tuple(vec(c) for c in self.columns)
        if not cols:
            raise ShapeError("a lattice matrix needs at least one column")
        d = len(cols[0])
        if any(len(c) != d for c in cols):
            raise ShapeError("all columns must share one dimension")
        object.__setattr__(self, "columns", cols)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> LatticeMatrix:
        return cls(tuple(zip(*rows)))

    @property
    def rows(self) -> int:
        return len(self.columns[0])

    @property
    def cols(self) -> int:
        return len(self.columns)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def row_list(self) -> list[list[int]]:
        return [list(r) for r in zip(*self.columns)]

    def submatrix(self, indices: Iterable[int]) -> LatticeMatrix:
        return LatticeMatrix(tuple(self.columns[i] for i in indices))

    def __str__(self) -> str:
        rows = [[str(x) for x in r] for r in zip(*self.columns)]
        width = max(len(x) for r in rows for x in r)
        return "\n".join(" ".join(x.rjust(width) for x in r) for r in rows)


def _as_columns(M) -> tuple[LatticeVector, ...]:
    if isinstance(M, LatticeMatrix):
        return M.columns
    return LatticeMatrix(tuple(M)).columns


def det(M) -> int:
    """Determinant of a square integer matrix by Bareiss elimination.

    Every intermediate division is exact, so the result is an exact int.
    """
    cols = _as_columns(M)
    n = len(cols)
    if len(cols[0]) != n:
        raise ShapeError(f"determinant needs a square matrix, got {len(cols[0])}x{n}")
    # Rows/columns transposed relative to storage; det is invariant.
    a = [list(c) for c in cols]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (akk * row_i[j] - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def cofactor_det(M) -> int:
    """Laplace expansion along the first row; exponential, for cross-checks only."""
    cols = _as_columns(M)
    n = len(cols)
    if len(cols[0]) != n:
        raise ShapeError("determinant needs a square matrix")
    rows = [list(r) for r in zip(*cols)]

    def expand(r: list[list[int]]) -> int:
        if len(r) == 1:
            return r[0][0]
        total = 0
        for j, x in enumerate(r[0]):
            if x:
                minor = [row[:j] + row[j + 1:] for row in r[1:]]
                total += (-1) ** j * x * expand(minor)
        return total

    return expand(rows)


def rank(M) -> int:
    """Rank of an integer matrix (fraction-free row reduction)."""
    cols = _as_columns(M)
    rows = [list(r) for r in zip(*cols)]
    return _echelon_rank(rows)


def _echelon_rank(rows: list[list[int]]) -> int:
    rows = [r[:] for r in rows]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        for i in range(r + 1, len(rows)):
            f = rows[i][c]
            if f:
                rows[i] = [p * x - f * y for x, y in zip(rows[i], rows[r])]
                g = math.gcd(*rows[i])
                if g > 1:
                    rows[i] = [x // g for x in rows[i]]
        r += 1
        if r == len(rows):
            break
    return r


def rank_of_vectors(vectors: Sequence[Sequence[int]]) -> int:
    if not vectors:
        return 0
    return _echelon_rank([list(v) for v in vectors])


def smith_normal_form(M) -> list[int]:
    """Elementary divisors d1 | d2 | ... of an integer matrix.

    Only the nonzero divisors are returned, so the length is the rank.
    Uses unimodular row and column operations with gcd pivoting.
    """
    cols = _as_columns(M)
    a = [list(r) for r in zip(*cols)]
    m, n = len(a), len(a[0])
    divisors = []
    t = 0
    while t < min(m, n):
        nz = [(abs(a[i][j]), i, j) for i in range(t, m) for j in range(t, n) if a[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            done = True
            p = a[t][t]
            for i in range(t + 1, m):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    done = False
            if done:
                # Enforce divisibility of the remaining block by the pivot.
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                            if a[i][j] % p), None)
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            # A remainder is smaller than the pivot: move it into pivot position.
            _, pi, pj = min((abs(a[i][j]), i, j)
                            for i, j in [(i, t) for i in range(t, m)] + [(t, j) for j in range(t, n)]
                            if a[i][j])
            a[t], a[pi] = a[pi], a[t]
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        divisors.append(abs(a[t][t]))
        t += 1
    return divisors


def generates_full_lattice(vectors: Sequence[Sequence[int]], d: int) -> bool:
    """True iff the integer span of ``vectors`` is all of Z^d."""
    if not vectors:
        warnings.warn("empty generator list spans only the zero lattice", stacklevel=2)
        return False
    if any(len(v) != d for v in vectors):
        raise ShapeError(f"all vectors must have dimension {d}")
    divisors = smith_normal_form(vectors)
    return len(divisors) == d and all(x == 1 for x in divisors)


def nullspace(rows: Sequence[Sequence[int]], d: int) -> list[LatticeVector]:
    """Primitive integer basis of {x in Q^d : <r, x> = 0 for all rows r}."""
    a = [[Fraction(x) for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(d):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        a[r] = [x / p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    free = [c for c in range(d) if c not in pivots]
    basis = []
    for fc in free:
        x = [Fraction(0)] * d
        x[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            x[pc] = -a[i][fc]
        basis.append(primitive(x))
    return basis


def solve(cols: Sequence[Sequence[int]], rhs: Sequence[int]) -> list[Fraction] | None:
    """Solve sum x_k cols[k] = rhs for a square nonsingular system, over Q."""
    n = len(cols)
    a = [[Fraction(cols[k][i]) for k in range(n)] + [Fraction(rhs[i])] for i in range(n)]
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return None
        a[c], a[piv] = a[piv], a[c]
        p = a[c][c]
        a[c] = [x / p for x in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [a[i][n] for i in range(n)]


class IndependenceTracker:
    """Incremental linear-independence test for a growing list of vectors.

    Keeps a fraction-free echelon basis; ``push`` returns False (and leaves
    the basis unchanged) when the new vector is dependent on earlier ones.
    """

    def __init__(self, d: int):
        self.d = d
        self._basis: list[tuple[int, list[int]]] = []

    def _reduce(self, v: Sequence[int]) -> list[int]:
        w = list(v)
        for piv, b in self._basis:
            if w[piv]:
                f, p = w[piv], b[piv]
                w = [p * x - f * y for x, y in zip(w, b)]
        return w

    def push(self, v: Sequence[int]) -> bool:
        w = self._reduce(v)
        piv = next((k for k, x in enumerate(w) if x), None)
        if piv is None:
            return False
        g = math.gcd(*w)
        self._basis.append((piv, [x // g for x in w]))
        return True

    def pop(self) -> None:
        self._basis.pop()

    def __len__(self) -> int:
        return len(self._basis)
