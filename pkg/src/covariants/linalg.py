"""Exact linear algebra over the rationals (entries may also be polynomials).

Dense routines use Fraction/int arithmetic and are meant for the small
matrices that dominate this package (dimensions <= a few hundred).  Two
specialized helpers exist for the large probabilistic rank computations:
``rank_mod_p`` (numpy, single large prime) and ``sparse_rank_int``
(fraction-free elimination on sparse integer rows).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Callable, Sequence

import numpy as np

from .polynomial import canon_coeff

# Two largest primes below 2^31: squares stay inside int64 during elimination.
PRIME_A = 2147483647
PRIME_B = 2147483629


class Matrix:
    """A rectangular matrix with exact entries (numbers or polynomials)."""

    __slots__ = ("m", "n", "rows")

    def __init__(self, rows: Sequence[Sequence]):
        self.rows = tuple(tuple(r) for r in rows)
        self.m = len(self.rows)
        self.n = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.n for r in self.rows):
            raise ValueError("ragged rows")

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, m: int, n: int) -> "Matrix":
        return cls([[0] * n for _ in range(m)])

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.rows == other.rows

    __hash__ = None

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.m, self.n) != (other.m, other.n):
            raise ValueError("shape mismatch")
        return Matrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if (self.m, self.n) != (other.m, other.n):
            raise ValueError("shape mismatch")
        return Matrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        )

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.n != other.m:
                raise ValueError("shape mismatch")
            cols = list(zip(*other.rows))
            return Matrix(
                [
                    [_dot(row, col) for col in cols]
                    for row in self.rows
                ]
            )
        return Matrix([[a * other for a in row] for row in self.rows])

    def __rmul__(self, other):
        return Matrix([[other * a for a in row] for row in self.rows])

    def scale(self, c) -> "Matrix":
        return Matrix([[a * c for a in row] for row in self.rows])

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.rows)))

    def map(self, f: Callable) -> "Matrix":
        return Matrix([[f(a) for a in row] for row in self.rows])

    def is_zero(self) -> bool:
        return all(not a for row in self.rows for a in row)

    def det(self):
        """Determinant by cofactor expansion, memoized on column subsets.

        Works for numeric and polynomial entries alike; intended for n <= 8.
        """
        if self.m != self.n:
            raise ValueError("determinant of a non-square matrix")
        if self.n == 0:
            return 1
        rows = self.rows
        n = self.n
        memo: dict = {}

        def expand(cols: tuple) -> object:
            if len(cols) == 1:
                return rows[n - 1][cols[0]]
            cached = memo.get(cols)
            if cached is not None:
                return cached
            i = n - len(cols)
            total = None
            for pos, j in enumerate(cols):
                a = rows[i][j]
                if not a:
                    continue
                sub = expand(cols[:pos] + cols[pos + 1 :])
                term = a * sub if pos % 2 == 0 else -(a * sub)
                total = term if total is None else total + term
            if total is None:
                total = 0 * rows[0][0]
            memo[cols] = total
            return total

        return expand(tuple(range(n)))

    def inverse(self) -> "Matrix":
        """Exact inverse for numeric entries; raises on singular input."""
        if self.m != self.n:
            raise ValueError("inverse of a non-square matrix")
        n = self.n
        aug = [
            [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(self.rows)
        ]
        for c in range(n):
            piv = next((r for r in range(c, n) if aug[r][c]), None)
            if piv is None:
                raise ValueError("singular matrix")
            aug[c], aug[piv] = aug[piv], aug[c]
            inv = 1 / aug[c][c]
            aug[c] = [x * inv for x in aug[c]]
            for r in range(n):
                if r != c and aug[r][c]:
                    f = aug[r][c]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
        return Matrix([[canon_coeff(x) for x in row[n:]] for row in aug])

    def to_json(self) -> list:
        return [[str(Fraction(x)) for x in row] for row in self.rows]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[str]]) -> "Matrix":
        return cls([[canon_coeff(Fraction(x)) for x in row] for row in data])

    def __repr__(self) -> str:
        return "Matrix(" + ", ".join(str(list(r)) for r in self.rows) + ")"


def _dot(row, col):
    total = None
    for a, b in zip(row, col):
        if not a or not b:
            continue
        term = a * b
        total = term if total is None else total + term
    if total is None:
        return 0
    return total


def det(matrix: Matrix):
    return matrix.det()


def minor(matrix: Matrix, rows: Sequence[int], cols: Sequence[int]):
    """Determinant of the submatrix on ``rows`` x ``cols`` (0-based).

    Index lists must be strictly increasing and in range.
    """
    if len(rows) != len(cols):
        raise ValueError("minor needs equally many rows and columns")
    for idx, bound, kind in ((rows, matrix.m, "row"), (cols, matrix.n, "column")):
        if any(i < 0 or i >= bound for i in idx):
            raise ValueError(f"{kind} index out of range")
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise ValueError(f"{kind} indices must be strictly increasing")
    sub = Matrix([[matrix.rows[i][j] for j in cols] for i in rows])
    return sub.det()


# -- elimination over the rationals -----------------------------------------


def _intify(row: list) -> list:
    """Scale a rational row to a primitive integer row (kernel unchanged)."""
    if all(isinstance(x, int) for x in row):
        g = 0
        for x in row:
            if x:
                g = gcd(g, x)
                if g == 1:
                    return row
        return [x // g for x in row] if g > 1 else row
    mult = 1
    for x in row:
        if isinstance(x, Fraction):
            mult = mult * x.denominator // gcd(mult, x.denominator)
    return [int(x * mult) for x in row]


def _echelon(rows: list[list], ncols: int) -> tuple[list[list], list[int]]:
    """Fraction-free row echelon form; returns (rows, pivot column list).

    Rows are scaled to primitive integer vectors up front; elimination uses
    cross-multiplication with gcd reduction, which is much faster than
    Fraction pivoting on the kernels this package needs.
    """
    work = [_intify(list(r)) for r in rows if any(r)]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(work)):
            if work[i][c]:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        prow = work[r]
        pval = prow[c]
        for i in range(r + 1, len(work)):
            row = work[i]
            v = row[c]
            if v:
                work[i] = _combine(row, prow, pval, v, c)
        work = work[: r + 1] + [row for row in work[r + 1 :] if any(row)]
        pivots.append(c)
        r += 1
    return work[:r], pivots


def _combine(row, prow, pval, v, c):
    out = [pval * a - v * b for a, b in zip(row, prow)]
    out[c] = 0
    if all(isinstance(x, int) for x in out):
        g = 0
        for x in out:
            if x:
                g = gcd(g, x)
                if g == 1:
                    break
        if g > 1:
            out = [x // g for x in out]
    return out


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    _, pivots = _echelon(list(rows), len(rows[0]))
    return len(pivots)


def kernel_basis(rows: Sequence[Sequence], ncols: int | None = None) -> list[list]:
    """Exact basis of the right null space of the matrix given by ``rows``.

    Returns one vector per free column, in ascending free-column order, with
    a 1 in the free position.  Empty list iff the matrix has full column
    rank.
    """
    rows = list(rows)
    if ncols is None:
        if not rows:
            raise ValueError("cannot infer the number of columns")
        ncols = len(rows[0])
    ech, pivots = _echelon(rows, ncols)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        v: list = [0] * ncols
        v[f] = 1
        for i in range(len(pivots) - 1, -1, -1):
            c = pivots[i]
            row = ech[i]
            s = sum((row[j] * v[j] for j in range(c + 1, ncols) if v[j] and row[j]), start=0)
            if s:
                v[c] = canon_coeff(Fraction(-s) / row[c])
        basis.append(v)
    return basis


def solve(rows: Sequence[Sequence], rhs: Sequence) -> list | None:
    """One exact solution of ``A x = b`` (free variables set to 0), or None."""
    rows = [list(r) + [b] for r, b in zip(rows, rhs)]
    ncols = len(rows[0]) - 1
    ech, pivots = _echelon(rows, ncols + 1)
    if ncols in pivots:
        return None  # inconsistent: pivot in the augmented column
    x: list = [0] * ncols
    for i in range(len(pivots) - 1, -1, -1):
        c = pivots[i]
        row = ech[i]
        s = sum((row[j] * x[j] for j in range(c + 1, ncols) if x[j] and row[j]), start=0)
        x[c] = canon_coeff(Fraction(row[ncols] - s, 1) / row[c])
    return x


# -- large probabilistic ranks -----------------------------------------------


def rank_mod_p(matrix: np.ndarray, p: int = PRIME_A) -> int:
    """Rank of an integer matrix over F_p (numpy int64 elimination).

    For an integer (or reduced-rational) matrix this is a lower bound on the
    rational rank; callers pair it with an exact upper bound or a second
    prime to certify results.
    """
    a = np.mod(matrix.astype(np.int64), p)
    m, n = a.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        col = a[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r, c:] = (a[r, c:] * inv) % p
        rows_below = np.nonzero(a[r + 1 :, c])[0]
        if rows_below.size:
            idx = rows_below + r + 1
            factors = a[idx, c][:, None]
            a[idx, c:] = (a[idx, c:] - factors * a[r, c:]) % p
        r += 1
    return r


def sparse_rank_int(rows: list[dict[int, int]]) -> int:
    """Exact rank of sparse integer rows via fraction-free elimination.

    Rows are dicts column -> nonzero int.  Pivot selection prefers sparse
    rows, which keeps fill-in tame on the derivation matrices this serves.
    """
    buckets: dict[int, list[dict[int, int]]] = {}
    for row in rows:
        if row:
            buckets.setdefault(min(row), []).append(row)
    rank_count = 0
    while buckets:
        c = min(buckets)
        cands = buckets.pop(c)
        cands.sort(key=len)
        prow = cands[0]
        pval = prow[c]
        rank_count += 1
        for row in cands[1:]:
            v = row.pop(c)
            out: dict[int, int] = {}
            for j, a in row.items():
                out[j] = pval * a
            for j, b in prow.items():
                if j == c:
                    continue
                s = out.get(j, 0) - v * b
                if s:
                    out[j] = s
                else:
                    out.pop(j, None)
            if out:
                g = 0
                for x in out.values():
                    g = gcd(g, x)
                    if g == 1:
                        break
                if g > 1:
                    for j in list(out):
                        out[j] //= g
                buckets.setdefault(min(out), []).append(out)
    return rank_count
