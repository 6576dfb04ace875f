"""Three-parameter solution of the Yang-Baxter triple and its divisor specialization.

The threefold X is parameterized by affine spectral variables (mu1, mu2, mu3).
The single-prime Lax weights are read off at (mu1, mu2, mu3), the double-prime
ones at the swapped triple (mu3, mu2, mu1). On the divisor Y, where both Lax
operators share one quadric D, the triple collapses to the familiar additive
form in a single variable t.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from exactalg import Matrix, RationalLike, embed_three, to_rational
from vertex_errors import DegenerateDenominatorError, InvalidParameterError, NotOnVarietyError
from vertexcore import (
    Delta,
    RWeights,
    Weights,
    common_delta,
    lax_matrix,
    lies_on_every_quadric,
    quadric_D,
    solve_r_ratios,
    ybe_residual_R,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpectralTriple:
    """Affine spectral coordinates of a point of X."""
    mu1: Fraction
    mu2: Fraction
    mu3: Fraction

    def __post_init__(self):
        for name in ("mu1", "mu2", "mu3"):
            object.__setattr__(self, name, to_rational(getattr(self, name)))

    def swapped(self) -> "SpectralTriple":
        return SpectralTriple(self.mu3, self.mu2, self.mu1)

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.mu1, self.mu2, self.mu3)

    @property
    def lax_denominator(self) -> Fraction:
        """mu1 - mu3 - mu1*mu2 + mu1*mu3"""
        return self.mu1 - self.mu3 - self.mu1 * self.mu2 + self.mu1 * self.mu3

    @property
    def r_denominator(self) -> Fraction:
        """mu1 - mu3 - mu1*mu3 + mu2*mu3; equals -lax_denominator of the swapped triple."""
        return self.mu1 - self.mu3 - self.mu1 * self.mu3 + self.mu2 * self.mu3


@dataclass(frozen=True)
class DivisorParams:
    """Affine quadric parameters (t1, t2) and the deformation q of the divisor Y."""
    t1: Fraction
    t2: Fraction
    q: Fraction

    def __post_init__(self):
        for name in ("t1", "t2", "q"):
            object.__setattr__(self, name, to_rational(getattr(self, name)))
        if self.q in (0, 1, -1):
            raise InvalidParameterError("q", self.q, "q not in {0, 1, -1}")


def is_admissible(s: SpectralTriple) -> bool:
    """Both denominators of the Lax and R-matrix formulas are nonzero."""
    return s.lax_denominator != 0 and s.r_denominator != 0


def lax_weights_mu(s: SpectralTriple) -> Weights:
    mu1, mu2, mu3 = s.as_tuple()
    denominator = s.lax_denominator
    if denominator == 0:
        raise DegenerateDenominatorError("lax_weights_mu", "mu1-mu3-mu1*mu2+mu1*mu3", s.as_tuple())
    return Weights(
        (mu2 - mu1 - mu3 + mu1 * mu3) / denominator,
        mu2 * (1 - mu1) / denominator,
        1,
    )


def double_prime_weights(s: SpectralTriple) -> Weights:
    return lax_weights_mu(s.swapped())


def r_weights_mu(s: SpectralTriple) -> RWeights:
    mu1, mu2, mu3 = s.as_tuple()
    first, second = s.lax_denominator, s.r_denominator
    if first == 0:
        raise DegenerateDenominatorError("r_weights_mu", "mu1-mu3-mu1*mu2+mu1*mu3", s.as_tuple())
    if second == 0:
        raise DegenerateDenominatorError("r_weights_mu", "mu1-mu3-mu1*mu3+mu2*mu3", s.as_tuple())
    denominator = first * second
    a = (mu1 - mu3 - mu1 * mu3) * (mu3 - mu1 + mu1 * mu3 - 2 * mu2 * mu3 + mu2 * mu2) / denominator
    b = mu2 * (mu3 - mu1) * (mu1 - mu2 + mu3 - mu1 * mu3) / denominator
    return RWeights(a, b, 1)


def verify_ybe_mu(s: SpectralTriple) -> Matrix:
    """Residual of R12(s) L13(s) L23(swap s) = L23(swap s) L13(s) R12(s)."""
    return ybe_residual_R(r_weights_mu(s), lax_weights_mu(s), double_prime_weights(s))


def divisor_mu(p: DivisorParams) -> SpectralTriple:
    """Spectral triple of the divisor point (t1, t2) on the quadric with Δ = q + 1/q."""
    t1, t2, q = p.t1, p.t2, p.q
    for value, factor in ((t1 + q, "t1+q"), (t2 - 1, "t2-1"), (t2 + q, "t2+q"), (t1 - 1, "t1-1")):
        if value == 0:
            raise DegenerateDenominatorError("divisor_mu", factor, (t1, t2, q))
    total = t1 + t2
    return SpectralTriple(
        (q - 1) * total / ((t1 + q) * (t2 - 1)),
        2 * q * total / ((t1 + q) * (t2 + q)),
        (q - 1) * total / ((t1 - 1) * (t2 + q)),
    )


def additive_lax(t: RationalLike, q: RationalLike) -> Weights:
    """Standard additive-form Lax weights L(t), normalized to c = 1."""
    t, q = to_rational(t), to_rational(q)
    if t == 0:
        raise DegenerateDenominatorError("additive_lax", "t", (t, q))
    if q * q == 1:
        raise DegenerateDenominatorError("additive_lax", "q^2-1", (t, q))
    denominator = t * (q * q - 1)
    return Weights((q * q - t * t) / denominator, q * (1 - t * t) / denominator, 1)


def delta_from_q(q: RationalLike) -> Delta:
    q = to_rational(q)
    if q == 0:
        raise InvalidParameterError("q", q, "q != 0")
    return Delta(q + 1 / q)


def verify_additive_ybe(t1: RationalLike, t2: RationalLike, q: RationalLike) -> Matrix:
    """Residual of L12(t1/t2) L13(t1) L23(t2) = L23(t2) L13(t1) L12(t1/t2)."""
    t1, t2 = to_rational(t1), to_rational(t2)
    if t2 == 0:
        raise DegenerateDenominatorError("verify_additive_ybe", "t2", (t1, t2, q))
    l12 = embed_three(lax_matrix(additive_lax(t1 / t2, q)), 12)
    l13 = embed_three(lax_matrix(additive_lax(t1, q)), 13)
    l23 = embed_three(lax_matrix(additive_lax(t2, q)), 23)
    return l12 @ l13 @ l23 - l23 @ l13 @ l12


def group_law_compose(w1: Weights, w2: Weights, delta: Optional[Delta] = None) -> RWeights:
    """Compose two points of one quadric D into the R-matrix point on the same quadric.

    Without an explicit ``delta`` the quadric is inferred from whichever argument has
    a·b ≠ 0. Two points with a·b = 0 compose only if both lie on every quadric.
    """
    if delta is None and w1.a * w1.b == 0 and w2.a * w2.b == 0:
        for w in (w1, w2):
            if not lies_on_every_quadric(w):
                raise NotOnVarietyError("every quadric D", tuple(w), w.a * w.a + w.b * w.b - w.c * w.c)
    else:
        if delta is None:
            delta = common_delta(w1, w2)
            if delta is None:
                raise NotOnVarietyError("a quadric D shared with the other argument", (*w1, *w2))
        for label, w in (("w1", w1), ("w2", w2)):
            residual = quadric_D(w, delta)
            if residual != 0:
                raise NotOnVarietyError(f"quadric D with Δ={delta.value} ({label})", tuple(w), residual)
    composed = solve_r_ratios(w1, w2)
    logger.debug("group law: %s * %s -> %s", w1, w2, composed)
    return composed
