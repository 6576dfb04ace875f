"""Lax operator, R-matrix and the Yang-Baxter relations of the symmetric six-vertex model.

Weights are kept as the actual values (a, b, c) because partition functions
depend on scale; projective questions go through ``Weights.point`` and
:func:`exactalg.proj_equal`.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from exactalg import (
    Matrix,
    ProjPoint,
    RationalLike,
    det,
    embed_three,
    format_rational,
    swap_matrix,
    to_rational,
)
from vertex_errors import DegenerateDenominatorError, ZeroVectorError


@dataclass(frozen=True)
class Weights:
    """Energy weights (a, b, c) of one Lax operator."""
    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, to_rational(getattr(self, name)))
        if self.a == 0 and self.b == 0 and self.c == 0:
            raise ZeroVectorError((self.a, self.b, self.c))

    @classmethod
    def of(cls, values: Sequence[RationalLike]):
        a, b, c = values
        return cls(a, b, c)

    def __iter__(self) -> Iterator[Fraction]:
        return iter((self.a, self.b, self.c))

    @property
    def point(self) -> ProjPoint:
        return ProjPoint((self.a, self.b, self.c))

    def scaled(self, factor: RationalLike):
        k = to_rational(factor)
        return type(self)(k * self.a, k * self.b, k * self.c)

    def as_strings(self) -> list[str]:
        return [format_rational(x) for x in self]


class RWeights(Weights):
    """Entries (a, b, c) of the R-matrix; same layout as the Lax operator."""


@dataclass(frozen=True)
class Delta:
    """Anisotropy parameter of the quadric D."""
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", to_rational(self.value))


def _six_vertex_matrix(a: Fraction, b: Fraction, c: Fraction) -> Matrix:
    return Matrix([
        [a, 0, 0, 0],
        [0, b, c, 0],
        [0, c, b, 0],
        [0, 0, 0, a],
    ])


def lax_matrix(w: Weights) -> Matrix:
    return _six_vertex_matrix(w.a, w.b, w.c)


def r_matrix(rw: RWeights) -> Matrix:
    return _six_vertex_matrix(rw.a, rw.b, rw.c)


def r_check_matrix(rw: RWeights) -> Matrix:
    """Ř = P R."""
    return swap_matrix() @ r_matrix(rw)


def gauge_flip(w: Weights) -> Weights:
    """(a, b, c) -> (-a, -b, c); leaves F, the quadric class and the YBE invariant."""
    return type(w)(-w.a, -w.b, w.c)


def baxter_F(w1: Weights, w2: Weights) -> Fraction:
    """Bihomogeneous integrability polynomial; X is its zero set."""
    a1, b1, c1 = w1
    a2, b2, c2 = w2
    return (a1 * a1 + b1 * b1 - c1 * c1) * a2 * b2 - (a2 * a2 + b2 * b2 - c2 * c2) * a1 * b1


def quadric_D(w: Weights, d: Delta) -> Fraction:
    return w.a * w.a + w.b * w.b - w.c * w.c - d.value * w.a * w.b


def delta_of(w: Weights) -> Delta:
    """The Δ for which quadric_D(w, Δ) = 0."""
    if w.a * w.b == 0:
        raise DegenerateDenominatorError("delta_of", "a*b", tuple(w))
    return Delta((w.a * w.a + w.b * w.b - w.c * w.c) / (w.a * w.b))


def ybe_relations(rw: RWeights, w1: Weights, w2: Weights) -> tuple[Fraction, Fraction, Fraction]:
    """The three independent Yang-Baxter relations, left-hand side minus zero."""
    ra, rb, rc = rw
    a1, b1, c1 = w1
    a2, b2, c2 = w2
    return (
        ra * c1 * a2 - rb * c1 * b2 - rc * a1 * c2,
        rc * b1 * a2 - rc * a1 * b2 - rb * c1 * c2,
        rc * c1 * b2 + rb * a1 * c2 - ra * b1 * c2,
    )


def coeff_matrix(w1: Weights, w2: Weights) -> Matrix:
    """Coefficients of the relations as a linear system in the R-matrix unknowns."""
    a1, b1, c1 = w1
    a2, b2, c2 = w2
    return Matrix([
        [c1 * a2, -c1 * b2, -a1 * c2],
        [0, -c1 * c2, b1 * a2 - a1 * b2],
        [-b1 * c2, a1 * c2, c1 * b2],
    ])


def coeff_det(w1: Weights, w2: Weights) -> Fraction:
    return det(coeff_matrix(w1, w2))


def solve_r_ratios(w1: Weights, w2: Weights) -> RWeights:
    """R-matrix ratios a:b:c solving the relations, normalized to c = 1."""
    a1, b1, c1 = w1
    a2, b2, c2 = w2
    for value, factor in ((c1, "c'"), (c2, "c''"), (a2, "a''")):
        if value == 0:
            raise DegenerateDenominatorError("solve_r_ratios", factor, (*w1, *w2))
    cross = b1 * a2 - a1 * b2
    return RWeights(
        cross * b2 / (c1 * a2 * c2) + a1 * c2 / (c1 * a2),
        cross / (c1 * c2),
        1,
    )


def ybe_residual_R(rw: RWeights, w1: Weights, w2: Weights) -> Matrix:
    """R12 L13(w1) L23(w2) - L23(w2) L13(w1) R12."""
    r12 = embed_three(r_matrix(rw), 12)
    l13 = embed_three(lax_matrix(w1), 13)
    l23 = embed_three(lax_matrix(w2), 23)
    return r12 @ l13 @ l23 - l23 @ l13 @ r12


def ybe_residual_check(rw: RWeights, w1: Weights, w2: Weights) -> Matrix:
    """Residual of Ř (L(w1) ⊗ L(w2)) = (L(w2) ⊗ L(w1)) Ř with the quantum space as third factor.

    Equals P12 · ybe_residual_R(rw, w1, w2).
    """
    check = embed_three(r_check_matrix(rw), 12)
    forward = embed_three(lax_matrix(w1), 13) @ embed_three(lax_matrix(w2), 23)
    backward = embed_three(lax_matrix(w2), 13) @ embed_three(lax_matrix(w1), 23)
    return check @ forward - backward @ check


def is_yang_baxter_triple(rw: RWeights, w1: Weights, w2: Weights) -> bool:
    return ybe_residual_R(rw, w1, w2).is_zero()


def lies_on_every_quadric(w: Weights) -> bool:
    """a·b = 0 and a² + b² = c²: quadric_D(w, Δ) vanishes for every Δ."""
    return w.a * w.b == 0 and w.a * w.a + w.b * w.b == w.c * w.c


def common_delta(w1: Weights, w2: Weights) -> Optional[Delta]:
    """Δ of the quadric through both triples, or None if they lie on different quadrics.

    Δ is read off whichever triple has a·b ≠ 0.
    """
    for first, second in ((w1, w2), (w2, w1)):
        if first.a * first.b != 0:
            delta = delta_of(first)
            return delta if quadric_D(second, delta) == 0 else None
    raise DegenerateDenominatorError("common_delta", "a*b", tuple(w1) + tuple(w2))
