"""Exact power-sum identities behind the half-dimensional planes inside
the intersection of two quadrics.

With m+3 pairwise distinct nodes, the interpolation weights
c_i = 1/prod_{j != i}(lambda_i - lambda_j) satisfy
sum_i lambda_i^p c_i = 0 for p <= m+1 and = 1 at p = m+2.  The plane
constructions square every coordinate, so those two facts are all that is
needed: the defining quadrics evaluate to weighted power sums of degree
at most m+1 and vanish identically.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class LambdaConfig:
    lambdas: tuple[Fraction, ...]

    def __post_init__(self):
        vals = tuple(Fraction(v) for v in self.lambdas)
        object.__setattr__(self, "lambdas", vals)
        if len(vals) < 2:
            raise ValueError("need at least two nodes")
        if len(set(vals)) != len(vals):
            raise ValueError("nodes must be pairwise distinct")

    @property
    def m(self) -> int:
        """Dimension of the intersection carved out by m+3 nodes."""
        return len(self.lambdas) - 3


def default_config(m: int) -> LambdaConfig:
    return LambdaConfig(tuple(Fraction(i) for i in range(m + 3)))


def lagrange_weights(cfg: LambdaConfig) -> tuple[Fraction, ...]:
    """Exact barycentric weights 1/prod_{j != i}(lambda_i - lambda_j)."""
    weights = []
    for i, li in enumerate(cfg.lambdas):
        denom = Fraction(1)
        for j, lj in enumerate(cfg.lambdas):
            if j != i:
                denom *= li - lj
        weights.append(1 / denom)
    return tuple(weights)


def power_sum(cfg: LambdaConfig, p: int) -> Fraction:
    """sum_i lambda_i^p * c_i; zero through degree m+1 and one at m+2."""
    weights = lagrange_weights(cfg)
    return sum((li**p * c for li, c in zip(cfg.lambdas, weights)), Fraction(0))


def verify_points_on_quadrics(cfg: LambdaConfig) -> bool:
    """Both quadrics vanish on every spanning point of the plane: the
    squared coordinates turn the two equations into power sums of degree
    2k and 2k+1 for k up to m/2, all below the vanishing threshold."""
    if cfg.m < 0 or cfg.m % 2:
        raise ValueError("even dimension required")
    for k in range(cfg.m // 2 + 1):
        if power_sum(cfg, 2 * k) or power_sum(cfg, 2 * k + 1):
            return False
    return True


def _eval_poly(coeffs, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def verify_plane_in_x(cfg: LambdaConfig, trials: int = 100, seed: int = 0) -> bool:
    """Random points of the plane satisfy both quadrics exactly.

    A point is parametrized by a polynomial of degree at most m/2; the two
    quadrics evaluate to sum_i c_i Q(lambda_i)^2 and
    sum_i c_i lambda_i Q(lambda_i)^2, which must both vanish.
    """
    if cfg.m < 0 or cfg.m % 2:
        raise ValueError("even dimension required")
    rng = random.Random(seed)
    weights = lagrange_weights(cfg)
    degree = cfg.m // 2
    for _ in range(trials):
        q = [
            Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            for _ in range(degree + 1)
        ]
        first = Fraction(0)
        second = Fraction(0)
        for li, c in zip(cfg.lambdas, weights):
            sq = _eval_poly(q, li) ** 2
            first += c * sq
            second += c * li * sq
        if first or second:
            return False
    return True
