"""Exact scalar arithmetic and exact linear algebra over Q and Z.

Scalars are plain ``int`` and ``fractions.Fraction``; Gaussian rationals get
a small dataclass.  Matrices are dense row-major lists of lists.  All pivot
choices are the lowest admissible index, so every routine is deterministic
and its output reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

Vec = list[Fraction]
Mat = list[list[Fraction]]


@dataclass(frozen=True, eq=False)
class GaussRational:
    """Gaussian rational re + im*sqrt(-1) with exact components."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    @staticmethod
    def of(value) -> "GaussRational":
        if isinstance(value, GaussRational):
            return value
        return GaussRational(Fraction(value), Fraction(0))

    def conjugate(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = GaussRational.of(other)
        if not isinstance(other, GaussRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __neg__(self) -> "GaussRational":
        return GaussRational(-self.re, -self.im)

    def __add__(self, other) -> "GaussRational":
        if isinstance(other, (int, Fraction)):
            other = GaussRational.of(other)
        if not isinstance(other, GaussRational):
            return NotImplemented
        return GaussRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other) -> "GaussRational":
        return self + (-GaussRational.of(other))

    def __rsub__(self, other) -> "GaussRational":
        return GaussRational.of(other) + (-self)

    def __mul__(self, other) -> "GaussRational":
        if isinstance(other, (int, Fraction)):
            other = GaussRational.of(other)
        if not isinstance(other, GaussRational):
            return NotImplemented
        return GaussRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "GaussRational":
        other = GaussRational.of(other)
        norm = other.re * other.re + other.im * other.im
        if not norm:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * other.conjugate()
        return GaussRational(num.re / norm, num.im / norm)

    def __repr__(self) -> str:
        return f"GaussRational({self.re!r}, {self.im!r})"


IMAG_UNIT = GaussRational(Fraction(0), Fraction(1))


def identity(n: int) -> Mat:
    return [[Fraction(i == j) for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int) -> Mat:
    return [[Fraction(0)] * cols for _ in range(rows)]


def transpose(a):
    return [list(col) for col in zip(*a)]


def mat_mul(a, b):
    if len(a[0]) != len(b):
        raise ValueError("inner dimensions do not match")
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def conjugate_transpose(a: list[list[GaussRational]]) -> list[list[GaussRational]]:
    return [[GaussRational.of(a[i][j]).conjugate() for i in range(len(a))]
            for j in range(len(a[0]))]


def _check_rect(m) -> tuple[int, int]:
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if any(len(r) != cols for r in m):
        raise ValueError("ragged matrix")
    return rows, cols


def det(m: Mat) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Each row is first scaled to integer entries; Bareiss then keeps every
    intermediate value an integer, with the interior division always exact.
    """
    rows, cols = _check_rect(m)
    if rows != cols:
        raise ValueError("determinant of a non-square matrix")
    n = rows
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    work: list[list[int]] = []
    for row in m:
        mult = lcm(*(Fraction(x).denominator for x in row))
        scale *= mult
        work.append([int(Fraction(x) * mult) for x in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        pivot_row = next((i for i in range(k, n) if work[i][k] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != k:
            work[k], work[pivot_row] = work[pivot_row], work[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                work[i][j] = (work[i][j] * work[k][k] - work[i][k] * work[k][j]) // prev
            work[i][k] = 0
        prev = work[k][k]
    return Fraction(sign * work[n - 1][n - 1]) / scale


def rank(m) -> int:
    """Rank over the field of the entries (Fraction or GaussRational)."""
    rows, cols = _check_rect(m)
    if rows == 0 or cols == 0:
        return 0
    work = [list(row) for row in m]
    r = 0
    for c in range(cols):
        pivot_row = next((i for i in range(r, rows) if work[i][c]), None)
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        for i in range(r + 1, rows):
            if work[i][c]:
                f = work[i][c] / work[r][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        r += 1
        if r == rows:
            break
    return r


def _rref(m):
    """Reduced row echelon form; returns (matrix, pivot column list)."""
    rows, cols = _check_rect(m)
    work = [list(row) for row in m]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot_row = next((i for i in range(r, rows) if work[i][c]), None)
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv = work[r][c]
        work[r] = [x / inv for x in work[r]]
        for i in range(rows):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return work, pivots


def kernel_basis(m) -> list[list]:
    """Basis of the right null space; one vector per free column."""
    rows, cols = _check_rect(m)
    if rows == 0 or cols == 0:
        return [[Fraction(i == j) for i in range(cols)] for j in range(cols)]
    work, pivots = _rref(m)
    pivot_set = set(pivots)
    zero = m[0][0] - m[0][0]
    basis = []
    for free in range(cols):
        if free in pivot_set:
            continue
        v = [zero] * cols
        v[free] = zero + 1
        for row_idx, pc in enumerate(pivots):
            v[pc] = -work[row_idx][free]
        basis.append(v)
    return basis


def solve_exact(a, b):
    """One exact solution of a*x = b, or None if the system is inconsistent."""
    rows, cols = _check_rect(a)
    aug = [list(row) + [b[i]] for i, row in enumerate(a)]
    work, pivots = _rref(aug)
    if cols in pivots:
        return None
    x = [Fraction(0)] * cols
    for row_idx, pc in enumerate(pivots):
        x[pc] = work[row_idx][cols]
    return x


def _unit_rows(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(m) -> tuple[list[int], list[list[int]], list[list[int]]]:
    """Smith normal form over Z.

    Returns ``(diag, left, right)`` with ``left * m * right`` diagonal,
    the diagonal entries nonnegative and each dividing the next, and both
    transforms unimodular.  Pivot selection takes the smallest nonzero
    absolute value, lowest position on ties, so the transforms are
    deterministic.
    """
    rows, cols = _check_rect(m)
    a = [[int(x) for x in row] for row in m]
    left = _unit_rows(rows)
    right = _unit_rows(cols)

    def row_add(i, j, q):
        a[i] = [x + q * y for x, y in zip(a[i], a[j])]
        left[i] = [x + q * y for x, y in zip(left[i], left[j])]

    def col_add(i, j, q):
        for r_ in a:
            r_[i] += q * r_[j]
        for r_ in right:
            r_[i] += q * r_[j]

    for s in range(min(rows, cols)):
        while True:
            best = None
            for i in range(s, rows):
                for j in range(s, cols):
                    v = abs(a[i][j])
                    if v and (best is None or v < abs(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            bi, bj = best
            if bi != s:
                a[s], a[bi] = a[bi], a[s]
                left[s], left[bi] = left[bi], left[s]
            if bj != s:
                for r_ in a:
                    r_[s], r_[bj] = r_[bj], r_[s]
                for r_ in right:
                    r_[s], r_[bj] = r_[bj], r_[s]
            if a[s][s] < 0:
                a[s] = [-x for x in a[s]]
                left[s] = [-x for x in left[s]]
            pivot = a[s][s]
            for i in range(s + 1, rows):
                if a[i][s]:
                    row_add(i, s, -(a[i][s] // pivot))
            for j in range(s + 1, cols):
                if a[s][j]:
                    col_add(j, s, -(a[s][j] // pivot))
            if any(a[i][s] for i in range(s + 1, rows)) or any(
                a[s][j] for j in range(s + 1, cols)
            ):
                continue  # remainders appeared; the pivot shrank, go again
            culprit = next(
                (
                    i
                    for i in range(s + 1, rows)
                    if any(a[i][j] % pivot for j in range(s + 1, cols))
                ),
                None,
            )
            if culprit is None:
                break
            row_add(s, culprit, 1)
        if all(
            a[i][j] == 0 for i in range(s, rows) for j in range(s, cols)
        ):
            break
    diag = [a[i][i] for i in range(min(rows, cols))]
    return diag, left, right


def integer_kernel_basis(m) -> list[list[int]]:
    """Basis of the integer kernel {x in Z^cols : m*x = 0}, via SNF."""
    rows, cols = _check_rect(m)
    diag, _, right = smith_normal_form(m)
    kernel_cols = [j for j in range(cols) if j >= len(diag) or diag[j] == 0]
    return [[right[i][j] for i in range(cols)] for j in kernel_cols]


def gram_diagonalize(g: Mat) -> tuple[list[Fraction], Mat]:
    """Congruence-diagonalize a symmetric matrix over Q.

    Returns ``(diag, t)`` with ``t^T * g * t`` equal to ``diag`` as a
    diagonal matrix.  Pivot rule: the first nonzero diagonal entry at or
    below the current position; if the remaining diagonal is zero, the
    first nonzero off-diagonal entry (row-major) is folded onto the
    diagonal first.  Ties always break toward the lowest index.
    """
    rows, cols = _check_rect(g)
    if rows != cols:
        raise ValueError("gram matrix must be square")
    n = rows
    for i in range(n):
        for j in range(i + 1, n):
            if g[i][j] != g[j][i]:
                raise ValueError("gram matrix must be symmetric")
    a = [[Fraction(x) for x in row] for row in g]
    t = identity(n)

    def sym_col_add(i, j, c):
        for r_ in a:
            r_[i] += c * r_[j]
        a[i] = [x + c * y for x, y in zip(a[i], a[j])]
        for r_ in t:
            r_[i] += c * r_[j]

    def sym_swap(i, j):
        for r_ in a:
            r_[i], r_[j] = r_[j], r_[i]
        a[i], a[j] = a[j], a[i]
        for r_ in t:
            r_[i], r_[j] = r_[j], r_[i]

    for k in range(n):
        pivot = next((i for i in range(k, n) if a[i][i]), None)
        if pivot is None:
            pair = next(
                (
                    (i, j)
                    for i in range(k, n)
                    for j in range(i + 1, n)
                    if a[i][j]
                ),
                None,
            )
            if pair is None:
                break
            sym_col_add(pair[0], pair[1], Fraction(1))
            pivot = pair[0]
        if pivot != k:
            sym_swap(pivot, k)
        for r in range(k + 1, n):
            if a[r][k]:
                sym_col_add(r, k, -a[r][k] / a[k][k])
    return [a[i][i] for i in range(n)], t


def signature(diag) -> tuple[int, int, int]:
    """Counts of (positive, negative, zero) entries."""
    pos = sum(1 for d in diag if d > 0)
    neg = sum(1 for d in diag if d < 0)
    return pos, neg, len(diag) - pos - neg
