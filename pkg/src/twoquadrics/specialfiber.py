"""Linear-algebra model of the degenerate fiber of the quadric-pencil
family.

The special fiber is glued from two smooth pieces meeting along a divisor:
a quadric component carrying classes {h1, beta} in its middle cohomology,
and a blown-up quadric component whose middle cohomology splits into
{h2, theta} from the base and {hz, z_1..z_{m+1}} from the center of the
blow-up.  Middle cohomology of the glued fiber is the kernel of the
difference-of-restrictions map gamma to the divisor, computed here
over the six-block basis.  The intersection pairing descends from the
component tables with a sign flip on the blow-up block, and the whole
package restricts to the middle cohomology of the smooth fiber by an
explicit diagonal matrix with two square-root-of-minus-one strings.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactmath import (
    GaussRational,
    IMAG_UNIT,
    Mat,
    conjugate_transpose,
    kernel_basis,
    rank,
)


@dataclass(frozen=True)
class ComponentTables:
    """Per-component middle-cohomology ranks and top intersection numbers."""

    m: int
    component_volume: int = 2  # integral of omega^m over either quadric piece
    divisor_volume: int = 2  # integral of omega^(m-1) over the divisor
    center_volume: int = 4  # integral of omega^(m-2) over the blow-up center
    beta_self: int = 1
    theta_self: int = 1
    z_self: int = 1  # z_i are normalized to self-intersection +1

    @property
    def center_prim_rank(self) -> int:
        return self.m + 1

    @property
    def component_prim_rank(self) -> int:
        return 1

    @property
    def divisor_prim_rank(self) -> int:
        return 0


def component_tables(m: int) -> ComponentTables:
    if m % 2 or m < 4:
        raise ValueError("the fiber model requires even dimension at least 4")
    return ComponentTables(m)


def fiber_basis_labels(m: int) -> tuple[str, ...]:
    """Order of the six blocks: quadric piece, blown-up piece, center."""
    component_tables(m)
    return ("h1", "beta", "h2", "theta", "hz") + tuple(
        f"z{i}" for i in range(1, m + 2)
    )


@dataclass(frozen=True)
class FiberClass:
    """Element of the direct sum of the two components' middle cohomology,
    with Gaussian-rational coefficients over the six-block basis."""

    m: int
    coeffs: tuple[GaussRational, ...]

    @staticmethod
    def from_coeffs(m: int, coeffs) -> "FiberClass":
        cs = tuple(GaussRational.of(c) for c in coeffs)
        if len(cs) != m + 6:
            raise ValueError("expected one coefficient per basis label")
        return FiberClass(m, cs)

    @staticmethod
    def from_labels(m: int, assignment: dict[str, object]) -> "FiberClass":
        labels = fiber_basis_labels(m)
        unknown = set(assignment) - set(labels)
        if unknown:
            raise ValueError(f"unknown labels {sorted(unknown)}")
        return FiberClass.from_coeffs(
            m, [assignment.get(lbl, 0) for lbl in labels]
        )

    def __add__(self, other: "FiberClass") -> "FiberClass":
        return FiberClass(self.m, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "FiberClass") -> "FiberClass":
        return FiberClass(self.m, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c) -> "FiberClass":
        c = GaussRational.of(c)
        return FiberClass(self.m, tuple(c * x for x in self.coeffs))


def restriction_to_divisor(m: int) -> dict[str, Fraction]:
    """Coefficient of omega_D^{m/2} in the divisor restriction of each
    basis class."""
    table = {lbl: Fraction(0) for lbl in fiber_basis_labels(m)}
    table["h1"] = Fraction(1)
    table["h2"] = Fraction(1)
    table["hz"] = Fraction(2)
    return table


def gamma_matrix(m: int) -> Mat:
    """Matrix of gamma(a, b) = a|_D - b|_D over the six-block basis;
    the quadric piece spans the first two coordinates."""
    table = restriction_to_divisor(m)
    labels = fiber_basis_labels(m)
    row = []
    for idx, lbl in enumerate(labels):
        sign = 1 if idx < 2 else -1
        row.append(sign * table[lbl])
    return [row]


def pairing_matrix(m: int) -> Mat:
    """Intersection pairing over the six-block basis: block-diagonal over
    the components, with the center block entering with a minus sign."""
    t = component_tables(m)
    n = m + 6
    p = [[Fraction(0)] * n for _ in range(n)]
    p[0][0] = Fraction(t.component_volume)  # h1
    p[1][1] = Fraction(t.beta_self)  # beta
    p[2][2] = Fraction(t.component_volume)  # h2
    p[3][3] = Fraction(t.theta_self)  # theta
    p[4][4] = Fraction(-t.center_volume)  # hz
    for i in range(5, n):
        p[i][i] = Fraction(-t.z_self)  # z_i
    return p


def fiber_pairing(x: FiberClass, y: FiberClass) -> GaussRational:
    """Bilinear extension of the component top-intersection table."""
    if x.m != y.m:
        raise ValueError("dimension mismatch")
    p = pairing_matrix(x.m)
    acc = GaussRational.of(0)
    for i, xi in enumerate(x.coeffs):
        if not xi:
            continue
        for j, yj in enumerate(y.coeffs):
            if yj and p[i][j]:
                acc = acc + xi * yj * p[i][j]
    return acc


def mv_kernel_labels(m: int) -> tuple[str, ...]:
    return ("h1+h2", "h1+hz-h2", "beta", "theta") + tuple(
        f"z{i}" for i in range(1, m + 2)
    )


def mv_kernel(m: int) -> list[FiberClass]:
    """Named basis of the kernel of gamma, verified against the computed
    null space: the span is checked to coincide before returning."""
    named = [
        FiberClass.from_labels(m, {"h1": 1, "h2": 1}),
        FiberClass.from_labels(m, {"h1": 1, "hz": 1, "h2": -1}),
        FiberClass.from_labels(m, {"beta": 1}),
        FiberClass.from_labels(m, {"theta": 1}),
    ] + [
        FiberClass.from_labels(m, {f"z{i}": 1}) for i in range(1, m + 2)
    ]
    gamma = gamma_matrix(m)
    computed = kernel_basis(gamma)
    for v in named:
        image = sum(
            (g * c.re for g, c in zip(gamma[0], v.coeffs)), Fraction(0)
        )
        if image or any(c.im for c in v.coeffs):
            raise AssertionError("named class does not lie in the kernel")
    named_rows = [[c.re for c in v.coeffs] for v in named]
    if rank(named_rows) != len(named) or len(named) != len(computed):
        raise AssertionError("named classes do not span the kernel")
    return named


def fiber_gram_on_kernel(m: int) -> Mat:
    """Pairing matrix restricted to the named kernel basis."""
    basis = mv_kernel(m)
    gram = []
    for x in basis:
        row = []
        for y in basis:
            val = fiber_pairing(x, y)
            assert not val.im
            row.append(val.re)
        gram.append(row)
    return gram


def x_basis_labels(m: int) -> tuple[str, ...]:
    return ("omega",) + tuple(f"e{i}" for i in range(1, m + 4))


def x_middle_gram(m: int) -> Mat:
    """Pairing on the smooth fiber in the basis omega, e_1 .. e_{m+3}:
    the first m+1 primitive classes square to -1, the last two to +1."""
    n = m + 4
    g = [[Fraction(0)] * n for _ in range(n)]
    g[0][0] = Fraction(4)
    for i in range(1, m + 2):
        g[i][i] = Fraction(-1)
    g[m + 2][m + 2] = Fraction(1)
    g[m + 3][m + 3] = Fraction(1)
    return g


@dataclass(frozen=True)
class RestrictionMap:
    """Restriction from the glued-fiber middle cohomology to the smooth
    fiber, as a matrix over the named kernel basis."""

    m: int
    matrix: tuple[tuple[GaussRational, ...], ...]  # (m+4) x (m+5)
    source_labels: tuple[str, ...]
    target_labels: tuple[str, ...]

    def matrix_rows(self) -> list[list[GaussRational]]:
        return [list(row) for row in self.matrix]

    def apply(self, kernel_coords) -> list[GaussRational]:
        coords = [GaussRational.of(c) for c in kernel_coords]
        if len(coords) != len(self.source_labels):
            raise ValueError("expected one coordinate per kernel basis class")
        return [
            sum((row[j] * coords[j] for j in range(len(coords))), GaussRational.of(0))
            for row in self.matrix
        ]

    def kernel(self) -> list[list[GaussRational]]:
        return kernel_basis(self.matrix_rows())

    def rank(self) -> int:
        return rank(self.matrix_rows())

    def is_pairing_preserving(self) -> bool:
        """Hermitian compatibility: conjugate-transpose(M) * G_X * M must
        reproduce the fiber Gram on the kernel basis.  Conjugation makes
        the imaginary-unit columns square to the table's -1 entries."""
        mt = self.matrix_rows()
        gx = [[GaussRational.of(v) for v in row] for row in x_middle_gram(self.m)]
        from .exactmath import mat_mul

        lhs = mat_mul(conjugate_transpose(mt), mat_mul(gx, mt))
        target = fiber_gram_on_kernel(self.m)
        n = len(target)
        return all(
            GaussRational.of(lhs[i][j]) == GaussRational.of(target[i][j])
            for i in range(n)
            for j in range(n)
        )


def restriction_map(m: int) -> RestrictionMap:
    """The diagonal restriction matrix: h1+h2 goes to omega, h1+hz-h2 dies,
    beta and theta hit the two +1 classes, and each z_i maps to
    sqrt(-1) times the corresponding -1 class."""
    component_tables(m)
    source = mv_kernel_labels(m)
    target = x_basis_labels(m)
    n_rows, n_cols = m + 4, m + 5
    zero = GaussRational.of(0)
    mat = [[zero] * n_cols for _ in range(n_rows)]
    mat[0][0] = GaussRational.of(1)  # h1+h2 -> omega
    mat[m + 2][2] = GaussRational.of(1)  # beta -> e_{m+2}
    mat[m + 3][3] = GaussRational.of(1)  # theta -> e_{m+3}
    for i in range(1, m + 2):
        mat[i][3 + i] = IMAG_UNIT  # z_i -> sqrt(-1) e_i
    return RestrictionMap(
        m, tuple(tuple(row) for row in mat), source, target
    )


def x1_restriction(insertion_index: int, m: int) -> tuple[Fraction, Fraction]:
    """Restriction of the chosen preimage of e_i to the quadric piece, as
    (h1, beta) coordinates: only e_{m+2} survives."""
    if not 1 <= insertion_index <= m + 3:
        raise ValueError(f"insertion index must lie in 1..{m + 3}")
    if insertion_index == m + 2:
        return (Fraction(0), Fraction(1))
    return (Fraction(0), Fraction(0))
