"""Middle-cohomology lattice of an even-dimensional intersection of two
quadrics.

The lattice carries a distinguished geometric basis: the class omega^{m/2}
of the ambient hyperplane power and the half-dimensional plane classes
zeta_0 .. zeta_{m+2}, whose pairings depend only on m.  A rational class
zeta with (m+1)*zeta = (m/2+1)*omega^{m/2} - sum(zeta_i) makes
zeta_{-1} = 2*zeta - omega^{m/2} integral, and {zeta_{-1}, zeta_0, ..,
zeta_{m+2}} spans the full integral middle cohomology.  Everything below
is computed from the pairing table, never hardcoded: the unit determinant
of the integral Gram, the index-4 sublattice generated by the ambient
class together with its integral orthogonal complement, and the
definiteness of the primitive part.
"""

from __future__ import annotations

from fractions import Fraction
from math import prod
from dataclasses import dataclass

from .exactmath import (
    Mat,
    det,
    gram_diagonalize,
    identity,
    integer_kernel_basis,
    mat_mul,
    mat_vec,
    signature,
    smith_normal_form,
    solve_exact,
    transpose,
)


@dataclass(frozen=True)
class MiddleLattice:
    m: int
    labels: tuple[str, ...]
    gram: tuple[tuple[Fraction, ...], ...]

    def gram_rows(self) -> Mat:
        return [list(row) for row in self.gram]


def _check_dimension(m: int, allow_m2: bool) -> None:
    if m % 2 or m < 2:
        raise ValueError("dimension must be even and at least 2")
    if m == 2 and not allow_m2:
        raise ValueError(
            "the pairing table is uncertified in dimension 2; "
            "pass allow_m2=True to expose it anyway"
        )


def pairing_constants(m: int) -> tuple[Fraction, Fraction]:
    """(diagonal, off-diagonal) pairing of the plane classes; floors are
    taken toward minus infinity."""
    half = m // 2
    diag_sign = -1 if half % 2 else 1
    off_sign = -1 if (half - 2) % 2 else 1
    diag = Fraction(diag_sign * (m // 4 + 1))
    off = Fraction(off_sign * ((half - 2) // 2 + 1))
    return diag, off


def quadric_pencil_gram(m: int, allow_m2: bool = False) -> MiddleLattice:
    """Full (m+4)-square Gram matrix in the basis omega^{m/2}, zeta_0 ..
    zeta_{m+2}."""
    _check_dimension(m, allow_m2)
    diag, off = pairing_constants(m)
    n = m + 4
    gram = [[Fraction(0)] * n for _ in range(n)]
    gram[0][0] = Fraction(4)
    for i in range(1, n):
        gram[0][i] = gram[i][0] = Fraction(1)
        for j in range(1, n):
            gram[i][j] = diag if i == j else off
    labels = ("omega",) + tuple(f"zeta{i}" for i in range(m + 3))
    return MiddleLattice(m, labels, tuple(tuple(r) for r in gram))


def integral_basis_matrix(m: int) -> Mat:
    """Columns express zeta_{-1}, zeta_0 .. zeta_{m+2} in the
    (omega, zeta_i) coordinates; zeta_{-1} = 2*zeta - omega^{m/2}."""
    n = m + 4
    cols = identity(n)
    zeta = [Fraction(m // 2 + 1, m + 1)] + [Fraction(-1, m + 1)] * (m + 3)
    first = [2 * c for c in zeta]
    first[0] -= 1
    for i in range(n):
        cols[i][0] = first[i]
    return cols


def integral_gram_det(m: int) -> Fraction:
    """Determinant of the Gram matrix in the integral basis."""
    _check_dimension(m, allow_m2=False)
    g = quadric_pencil_gram(m).gram_rows()
    c = integral_basis_matrix(m)
    return det(mat_mul(transpose(c), mat_mul(g, c)))


def integral_gram(m: int) -> Mat:
    g = quadric_pencil_gram(m).gram_rows()
    c = integral_basis_matrix(m)
    return mat_mul(transpose(c), mat_mul(g, c))


def _omega_in_integral_coords(m: int) -> list[int]:
    coords = solve_exact(integral_basis_matrix(m), [Fraction(1)] + [Fraction(0)] * (m + 3))
    assert coords is not None and all(c.denominator == 1 for c in coords)
    return [int(c) for c in coords]


def lattice_index(m: int) -> int:
    """Index of Z<omega^{m/2}> + (integral orthogonal complement of omega)
    inside the full integral lattice, via Smith normal form of the
    inclusion matrix."""
    _check_dimension(m, allow_m2=False)
    g = integral_gram(m)
    omega = _omega_in_integral_coords(m)
    pair_with_omega = mat_vec(g, [Fraction(x) for x in omega])
    assert all(v.denominator == 1 for v in pair_with_omega)
    constraint = [[int(v) for v in pair_with_omega]]
    complement = integer_kernel_basis(constraint)
    inclusion = transpose([omega] + complement)
    diag, _, _ = smith_normal_form(inclusion)
    if any(d == 0 for d in diag):
        raise ArithmeticError("inclusion matrix is singular")
    return abs(prod(diag))


def primitive_gram(m: int) -> tuple[Mat, tuple[int, int, int]]:
    """Gram matrix of the omega-orthogonal projections of the plane
    classes, together with its signature."""
    _check_dimension(m, allow_m2=False)
    g = quadric_pencil_gram(m).gram_rows()
    n = m + 4
    proj = [[Fraction(0)] * (m + 3) for _ in range(n)]
    for j in range(m + 3):
        proj[j + 1][j] = Fraction(1)
        proj[0][j] = -g[0][j + 1] / g[0][0]
    gram = mat_mul(transpose(proj), mat_mul(g, proj))
    diag, _ = gram_diagonalize(gram)
    return gram, signature(diag)
