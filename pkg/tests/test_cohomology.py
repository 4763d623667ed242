from fractions import Fraction

import pytest

from twoquadrics.cohomology import (
    integral_basis_matrix,
    integral_gram,
    integral_gram_det,
    lattice_index,
    pairing_constants,
    primitive_gram,
    quadric_pencil_gram,
)
from twoquadrics.exactmath import (
    det,
    gram_diagonalize,
    rank,
    signature,
    smith_normal_form,
    transpose,
)


def test_gram_entries_dimension_four():
    lattice = quadric_pencil_gram(4)
    g = lattice.gram
    assert g[0][0] == 4
    assert all(g[0][i] == 1 for i in range(1, 8))
    assert g[1][1] == 2 and g[1][2] == 1
    assert lattice.labels[0] == "omega" and lattice.labels[1] == "zeta0"


def test_gram_entries_dimension_six():
    g = quadric_pencil_gram(6).gram
    assert g[1][1] == -2 and g[1][2] == -1 and g[0][1] == 1


def test_gram_symmetric_full_rank():
    for m in (4, 6, 8, 10, 12):
        g = quadric_pencil_gram(m).gram_rows()
        assert g == transpose(g)
        assert rank(g) == m + 4


def test_surface_case_is_gated():
    with pytest.raises(ValueError):
        quadric_pencil_gram(2)
    # exposed but uncertified: floor-toward-minus-infinity convention
    g = quadric_pencil_gram(2, allow_m2=True).gram
    diag, off = pairing_constants(2)
    assert (g[1][1], g[1][2]) == (diag, off) == (-1, 0)


def test_odd_dimension_rejected():
    with pytest.raises(ValueError):
        quadric_pencil_gram(5)


def test_integral_basis_expresses_plane_class():
    m = 4
    c = integral_basis_matrix(m)
    # first column is 2*zeta - omega with (m+1)*zeta = 3*omega - sum(zeta_i)
    first = [row[0] for row in c]
    assert first[0] == Fraction(2 * (m // 2 + 1), m + 1) - 1
    assert all(x == Fraction(-2, m + 1) for x in first[1:])


def test_integral_gram_determinant_closed_form():
    for m in (4, 6, 8, 10, 12):
        expected = Fraction(-1 if m % 4 else 1)
        assert integral_gram_det(m) == expected


def test_integral_gram_is_integer_valued():
    for m in (4, 6):
        g = integral_gram(m)
        assert all(x.denominator == 1 for row in g for x in row)


def test_lattice_index_is_four():
    for m in (4, 6, 8, 10):
        assert lattice_index(m) == 4


def test_full_lattice_inclusion_has_index_one():
    # sanity: the lattice inside itself via the identity inclusion
    diag, _, _ = smith_normal_form([[1 if i == j else 0 for j in range(8)] for i in range(8)])
    assert diag == [1] * 8


def test_primitive_gram_definite():
    for m in (4, 6, 8, 10):
        gram, sig = primitive_gram(m)
        pos, neg, zero = sig
        assert zero == 0
        assert pos + neg == m + 3
        assert pos == 0 or neg == 0
        expected_sign = 1 if m % 4 == 0 else -1
        assert (pos if expected_sign == 1 else neg) == m + 3


def test_primitive_projection_entries():
    gram, _ = primitive_gram(4)
    # projecting zeta_i off omega shifts every pairing by -1/4
    assert gram[0][0] == Fraction(2) - Fraction(1, 4)
    assert gram[0][1] == Fraction(1) - Fraction(1, 4)


def test_full_lattice_signature_adds_one_positive_direction():
    for m in (4, 6, 8):
        _, prim_sig = primitive_gram(m)
        full_diag, _ = gram_diagonalize(quadric_pencil_gram(m).gram_rows())
        pos, neg, zero = signature(full_diag)
        assert zero == 0
        assert (pos, neg) == (prim_sig[0] + 1, prim_sig[1])


def test_index_matches_inclusion_determinant():
    # the SNF-computed index must agree with |det| of the inclusion
    from twoquadrics.cohomology import _omega_in_integral_coords
    from twoquadrics.exactmath import integer_kernel_basis, mat_vec

    for m in (4, 6):
        g = integral_gram(m)
        omega = _omega_in_integral_coords(m)
        row = [int(v) for v in mat_vec(g, [Fraction(x) for x in omega])]
        complement = integer_kernel_basis([row])
        inclusion = transpose([omega] + complement)
        d = det([[Fraction(x) for x in r] for r in inclusion])
        assert abs(d) == lattice_index(m) == 4
