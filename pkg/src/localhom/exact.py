"""Exact integer matrices and Smith normal form.

All arithmetic uses Python's arbitrary-precision integers, so there is no
overflow at any size; intermediate entries in a Smith reduction can grow
well past 64 bits even for small boundary matrices.  Rational computations
(rank, kernels) use ``fractions.Fraction``.

The Smith routine picks the nonzero entry of least absolute value as the
pivot on every round (ties broken by row-major position), which keeps
entry growth modest and makes the reduction fully deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DimensionMismatchError


class IntegerMatrix:
    """Immutable dense matrix over the integers."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries) -> None:
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        data = tuple(tuple(int(x) for x in row) for row in entries)
        if len(data) != rows or any(len(row) != cols for row in data):
            raise ValueError(f"entries do not form a {rows}x{cols} grid")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", data)

    def __setattr__(self, name, value):
        raise AttributeError("IntegerMatrix is immutable")

    @classmethod
    def from_rows(cls, rows) -> "IntegerMatrix":
        data = [list(r) for r in rows]
        n_cols = len(data[0]) if data else 0
        return cls(len(data), n_cols, data)

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls(rows, cols, [[0] * cols for _ in range(rows)])

    def __getitem__(self, key) -> int:
        i, j = key
        return self.entries[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (
            other.rows,
            other.cols,
            other.entries,
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        if self.rows == 0 or self.cols == 0:
            return f"IntegerMatrix({self.rows}x{self.cols})"
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"IntegerMatrix({self.rows}x{self.cols}: {body})"

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        return multiply(self, other)

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(
            self.cols,
            self.rows,
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
        )

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i][j] for i in range(self.rows))

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(min(self.rows, self.cols)))


def multiply(a: IntegerMatrix, b: IntegerMatrix) -> IntegerMatrix:
    """Exact matrix product; raises on incompatible shapes."""
    if a.cols != b.rows:
        raise DimensionMismatchError(
            f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}"
        )
    bt = b.transpose().entries
    out = [
        [sum(x * y for x, y in zip(row, col)) for col in bt] for row in a.entries
    ]
    return IntegerMatrix(a.rows, b.cols, out)


def determinant(a: IntegerMatrix) -> int:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    if a.rows != a.cols:
        raise DimensionMismatchError("determinant requires a square matrix")
    n = a.rows
    if n == 0:
        return 1
    m = [list(row) for row in a.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot_row = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot_row is None:
                return 0
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


@dataclass(frozen=True)
class SnfResult:
    """Smith normal form ``d = u @ a @ v`` with unimodular ``u`` and ``v``.

    The diagonal of ``d`` is non-negative, each entry divides the next,
    and zeros come last.
    """

    u: IntegerMatrix
    d: IntegerMatrix
    v: IntegerMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return self.d.diagonal()

    @property
    def rank(self) -> int:
        return sum(1 for x in self.diagonal if x != 0)

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        """Diagonal entries greater than 1 (the torsion data)."""
        return tuple(x for x in self.diagonal if x > 1)


def smith_normal_form(a: IntegerMatrix) -> SnfResult:
    """Diagonalize ``a`` over the integers.

    Returns ``SnfResult(u, d, v)`` with ``d = u @ a @ v``.  Total function:
    empty and zero matrices are already in normal form.
    """
    m, n = a.rows, a.cols
    d = [list(row) for row in a.entries]
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def row_add(i, j, q):  # row_i += q * row_j
        di, dj, ui, uj = d[i], d[j], u[i], u[j]
        for c in range(n):
            di[c] += q * dj[c]
        for c in range(m):
            ui[c] += q * uj[c]

    def col_add(j, i, q):  # col_j += q * col_i
        for r in range(m):
            d[r][j] += q * d[r][i]
        for r in range(n):
            v[r][j] += q * v[r][i]

    t = 0
    limit = min(m, n)
    while t < limit:
        # Pivot: least |entry| in the trailing block, row-major tie-break.
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                e = d[i][j]
                if e != 0 and (best is None or -best < e < best):
                    best = abs(e)
                    pivot = (i, j)
                    if best == 1:
                        break
            if best == 1:
                break
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            d[t], d[pi] = d[pi], d[t]
            u[t], u[pi] = u[pi], u[t]
        if pj != t:
            for r in range(m):
                d[r][t], d[r][pj] = d[r][pj], d[r][t]
            for r in range(n):
                v[r][t], v[r][pj] = v[r][pj], v[r][t]

        p = d[t][t]
        dirty = False
        for i in range(t + 1, m):
            if d[i][t]:
                row_add(i, t, -(d[i][t] // p))
                dirty = dirty or d[i][t] != 0
        for j in range(t + 1, n):
            if d[t][j]:
                col_add(j, t, -(d[t][j] // p))
                dirty = dirty or d[t][j] != 0
        if dirty:
            continue  # smaller remainders appeared; reselect the pivot

        # Pivot must divide the whole trailing block for the divisibility
        # chain; fold an offending row into row t and reduce again.
        offender = None
        for i in range(t + 1, m):
            if any(x % p for x in d[i][t + 1 :]):
                offender = i
                break
        if offender is not None:
            row_add(t, offender, 1)
            continue

        if p < 0:
            for c in range(n):
                d[t][c] = -d[t][c]
            for c in range(m):
                u[t][c] = -u[t][c]
        t += 1

    return SnfResult(
        IntegerMatrix(m, m, u), IntegerMatrix(m, n, d), IntegerMatrix(n, n, v)
    )


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot columns)."""
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(n_cols):
        pivot_row = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return rows, pivots


def _fraction_rows(a: IntegerMatrix) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in a.entries]


def rank_over_rationals(a: IntegerMatrix) -> int:
    """Rank of ``a`` over the rationals (exact Gaussian elimination)."""
    _, pivots = _rref(_fraction_rows(a))
    return len(pivots)


def kernel_basis_over_rationals(a: IntegerMatrix) -> list[tuple[int, ...]]:
    """Basis of the rational null space of ``a``.

    Each basis vector is cleared to integer entries of content 1, one per
    free column of the reduced echelon form, in column order; the entry at
    the free column itself is positive.
    """
    rref, pivots = _rref(_fraction_rows(a))
    pivot_set = set(pivots)
    basis = []
    for free in range(a.cols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * a.cols
        vec[free] = Fraction(1)
        for r, c in enumerate(pivots):
            if c < free:
                vec[c] = -rref[r][free]
        basis.append(clear_denominators(vec))
    return basis


def clear_denominators(vec) -> tuple[int, ...]:
    """Scale a rational vector to primitive integer form (content 1)."""
    fracs = [Fraction(x) for x in vec]
    lcm = 1
    for x in fracs:
        den = x.denominator
        lcm = lcm * den // gcd(lcm, den)
    ints = [int(x * lcm) for x in fracs]
    content = 0
    for x in ints:
        content = gcd(content, x)
    if content > 1:
        ints = [x // content for x in ints]
    return tuple(ints)
