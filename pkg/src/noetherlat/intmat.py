"""Exact integer linear algebra over arbitrary-precision integers.

Everything in this module is exact: entries are Python ints and no
floating point appears anywhere.  Matrices are immutable values, so they
are safe to share between threads and to use as dictionary keys.

Project-wide convention: matrices act on column vectors, so column j of
an action matrix holds the coordinates of the image of the j-th basis
vector, and composition of maps is ordinary matrix multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence


@dataclass(frozen=True)
class IntMatrix:
    """Immutable row-major integer matrix; degenerate shapes are legal."""

    rows: int
    cols: int
    data: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.data) != self.rows:
            raise ValueError("row count does not match declared shape")
        for row in self.data:
            if len(row) != self.cols:
                raise ValueError("column count does not match declared shape")
            for x in row:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise TypeError("matrix entries must be exact integers")

    # ------------------------------------------------------------------
    # constructors

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        data = tuple(tuple(row) for row in rows)
        if data:
            width = len(data[0])
        else:
            width = 0 if cols is None else cols
        if cols is not None and cols != width:
            raise ValueError("explicit column count disagrees with row data")
        return IntMatrix(len(data), width, data)

    @staticmethod
    def from_columns(columns: Sequence[Sequence[int]], rows: int | None = None) -> IntMatrix:
        cols = [tuple(c) for c in columns]
        if cols:
            height = len(cols[0])
        else:
            height = 0 if rows is None else rows
        if rows is not None and rows != height:
            raise ValueError("explicit row count disagrees with column data")
        data = tuple(tuple(c[i] for c in cols) for i in range(height))
        return IntMatrix(height, len(cols), data)

    @staticmethod
    def identity(n: int) -> IntMatrix:
        return IntMatrix(n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @staticmethod
    def zero(rows: int, cols: int) -> IntMatrix:
        return IntMatrix(rows, cols, tuple(tuple(0 for _ in range(cols)) for _ in range(rows)))

    @staticmethod
    def block_diag(blocks: Sequence[IntMatrix]) -> IntMatrix:
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        data = [[0] * cols for _ in range(rows)]
        r = c = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    data[r + i][c + j] = b.data[i][j]
            r += b.rows
            c += b.cols
        return IntMatrix.from_rows(data, cols=cols)

    # ------------------------------------------------------------------
    # shape and access

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def row(self, i: int) -> tuple[int, ...]:
        return self.data[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.data[i][j] for i in range(self.rows))

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def is_identity(self) -> bool:
        if not self.is_square:
            return False
        return all(self.data[i][j] == (1 if i == j else 0)
                   for i in range(self.rows) for j in range(self.cols))

    def max_abs(self) -> int:
        return max((abs(x) for row in self.data for x in row), default=0)

    # ------------------------------------------------------------------
    # arithmetic

    def __add__(self, other: IntMatrix) -> IntMatrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in matrix addition")
        return IntMatrix(self.rows, self.cols,
                         tuple(tuple(a + b for a, b in zip(ra, rb))
                               for ra, rb in zip(self.data, other.data)))

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in matrix subtraction")
        return IntMatrix(self.rows, self.cols,
                         tuple(tuple(a - b for a, b in zip(ra, rb))
                               for ra, rb in zip(self.data, other.data)))

    def __neg__(self) -> IntMatrix:
        return IntMatrix(self.rows, self.cols,
                         tuple(tuple(-a for a in row) for row in self.data))

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix multiplication")
        ot = other.transpose()
        data = tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in ot.data)
                     for row in self.data)
        return IntMatrix(self.rows, other.cols, data)

    def apply(self, vec: Sequence[int]) -> tuple[int, ...]:
        """Matrix times column vector."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.data)

    def transpose(self) -> IntMatrix:
        return IntMatrix(self.cols, self.rows,
                         tuple(tuple(self.data[i][j] for i in range(self.rows))
                               for j in range(self.cols)))

    def power(self, k: int) -> IntMatrix:
        """Exact k-th power by repeated squaring, k >= 0, square matrices only."""
        if not self.is_square:
            raise ValueError("power of a non-square matrix")
        if k < 0:
            raise ValueError("negative power")
        result = IntMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base if k > 1 else base
            k >>= 1
        return result

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.data)


# ----------------------------------------------------------------------
# Smith normal form


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = x*a + y*b and g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def smith_normal_form(a: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Decompose a as U*a*V = D with U, V unimodular and D in Smith form.

    D is diagonal with nonnegative entries and each diagonal entry divides
    the next.  Pivots are chosen by minimal absolute value to limit
    coefficient growth.  Total for every shape, including empty matrices.
    """
    m, n = a.rows, a.cols
    M = [list(row) for row in a.data]
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    V = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def row_op(i: int, j: int, x: int, y: int, z: int, w: int) -> None:
        # rows i, j <- (x*Ri + y*Rj, z*Ri + w*Rj); caller guarantees det +-1
        for mat in (M, U):
            ri, rj = mat[i], mat[j]
            for k in range(len(ri)):
                ri[k], rj[k] = x * ri[k] + y * rj[k], z * ri[k] + w * rj[k]

    def col_op(i: int, j: int, x: int, y: int, z: int, w: int) -> None:
        for mat in (M, V):
            for row in mat:
                row[i], row[j] = x * row[i] + y * row[j], z * row[i] + w * row[j]

    def row_neg(i: int) -> None:
        for mat in (M, U):
            mat[i] = [-x for x in mat[i]]

    t = 0
    limit = min(m, n)
    while t < limit:
        # minimal absolute value pivot in the remaining submatrix
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = M[i][j]
                if v != 0 and (best is None or abs(v) < abs(M[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        if bi != t:
            row_op(t, bi, 0, 1, 1, 0)
        if bj != t:
            col_op(t, bj, 0, 1, 1, 0)

        while True:
            # clear column t, then row t; gcd steps may dirty the other
            # line, so iterate until both are clear (the pivot strictly
            # shrinks on every gcd step, which bounds the iteration)
            while True:
                for i in range(t + 1, m):
                    v = M[i][t]
                    if v == 0:
                        continue
                    p = M[t][t]
                    if v % p == 0:
                        row_op(i, t, 1, -(v // p), 0, 1)
                    else:
                        g, x, y = _xgcd(p, v)
                        row_op(t, i, x, y, -(v // g), p // g)
                for j in range(t + 1, n):
                    v = M[t][j]
                    if v == 0:
                        continue
                    p = M[t][t]
                    if v % p == 0:
                        col_op(j, t, 1, -(v // p), 0, 1)
                    else:
                        g, x, y = _xgcd(p, v)
                        col_op(t, j, x, y, -(v // g), p // g)
                if all(M[i][t] == 0 for i in range(t + 1, m)) and \
                        all(M[t][j] == 0 for j in range(t + 1, n)):
                    break
            if M[t][t] < 0:
                row_neg(t)
            # the pivot must divide the whole remaining submatrix for the
            # divisibility chain to hold; pull in an offending row and redo
            pivot = M[t][t]
            offender = None
            for i in range(t + 1, m):
                if any(M[i][j] % pivot != 0 for j in range(t + 1, n)):
                    offender = i
                    break
            if offender is None:
                break
            row_op(t, offender, 1, 1, 0, 1)
        t += 1

    return (IntMatrix.from_rows(U, cols=m),
            IntMatrix.from_rows(M, cols=n),
            IntMatrix.from_rows(V, cols=n))


def smith_diagonal(a: IntMatrix) -> list[int]:
    """Diagonal of the Smith form (nonzero entries first, chain order)."""
    _, d, _ = smith_normal_form(a)
    return [d.data[i][i] for i in range(min(d.rows, d.cols))]


# ----------------------------------------------------------------------
# kernels, cokernels, solving


def kernel_basis(a: IntMatrix) -> IntMatrix:
    """Primitive basis (as columns) of the integer kernel {v : a*v = 0}.

    The basis is saturated: it spans the full lattice of integer kernel
    vectors, not a finite-index sublattice.  A zero kernel gives a matrix
    with no columns.
    """
    _, d, v = smith_normal_form(a)
    rank = sum(1 for i in range(min(d.rows, d.cols)) if d.data[i][i] != 0)
    return IntMatrix.from_columns([v.column(j) for j in range(rank, a.cols)], rows=a.cols)


class Cokernel(NamedTuple):
    """Invariant factors (> 1 only) and free rank of ambient / column span."""

    factors: tuple[int, ...]
    free_rank: int

    @property
    def is_trivial(self) -> bool:
        return not self.factors and self.free_rank == 0


def cokernel_invariants(a: IntMatrix, ambient_rank: int) -> Cokernel:
    """Structure of Z^ambient_rank modulo the column span of a."""
    if a.rows != ambient_rank:
        raise ValueError("column length does not match ambient rank")
    diag = [x for x in smith_diagonal(a) if x != 0]
    return Cokernel(tuple(x for x in diag if x > 1), ambient_rank - len(diag))


def solve_exact(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Solve a*X = b for the unique integer matrix X, or raise ValueError.

    Requires a to have full column rank (so the solution, if any, is
    unique) and every column of b to lie in the integer column span of a.
    """
    if a.rows != b.rows:
        raise ValueError("shape mismatch in solve")
    u, d, v = smith_normal_form(a)
    rank = sum(1 for i in range(min(d.rows, d.cols)) if d.data[i][i] != 0)
    if rank < a.cols:
        raise ValueError("solution is not unique: matrix has a nontrivial kernel")
    c = u @ b
    y = []
    for i in range(a.cols):
        di = d.data[i][i]
        row = []
        for k in range(b.cols):
            num = c.data[i][k]
            if num % di != 0:
                raise ValueError("no integral solution")
            row.append(num // di)
        y.append(row)
    for i in range(a.cols, a.rows):
        if any(c.data[i][k] != 0 for k in range(b.cols)):
            raise ValueError("no solution: right-hand side outside the column span")
    return v @ IntMatrix.from_rows(y, cols=b.cols)


# ----------------------------------------------------------------------
# determinants, inverses, orders


def determinant(a: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if not a.is_square:
        raise ValueError("determinant of a non-square matrix")
    n = a.rows
    if n == 0:
        return 1
    M = [list(row) for row in a.data]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def unimodular_inverse(a: IntMatrix) -> IntMatrix:
    """Exact inverse of a unimodular integer matrix."""
    if not a.is_square:
        raise ValueError("inverse of a non-square matrix")
    u, d, v = smith_normal_form(a)
    if not d.is_identity():
        raise ValueError("matrix is not unimodular")
    # U a V = I, hence a^-1 = V U
    return v @ u


def matrix_power_order(a: IntMatrix, bound: int) -> int | None:
    """Least m <= bound with a**m = identity, or None if there is none."""
    if not a.is_square:
        raise ValueError("order of a non-square matrix")
    p = IntMatrix.identity(a.rows)
    for k in range(1, bound + 1):
        p = p @ a
        if p.is_identity():
            return k
    return None


# ----------------------------------------------------------------------
# interchange format: first line "rows cols", then one line per row


def matrix_to_text(a: IntMatrix) -> str:
    lines = [f"{a.rows} {a.cols}"]
    lines.extend(" ".join(str(x) for x in row) for row in a.data)
    return "\n".join(lines) + "\n"


def matrix_from_text(text: str) -> IntMatrix:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines())
             if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty matrix text")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("matrix header must be 'rows cols'")
    try:
        rows, cols = int(head[0]), int(head[1])
    except ValueError:
        raise ValueError("matrix header must contain two integers") from None
    if len(lines) != 1 + rows:
        raise ValueError(f"expected {rows} data rows, found {len(lines) - 1}")
    data = []
    for ln in lines[1:]:
        try:
            row = [int(tok) for tok in ln.split()]
        except ValueError:
            raise ValueError(f"non-integer matrix entry in line: {ln!r}") from None
        if len(row) != cols:
            raise ValueError(f"expected {cols} entries per row, found {len(row)}")
        data.append(row)
    return IntMatrix.from_rows(data, cols=cols)
