"""Seeded samplers for the randomized verification suites.

Rationals have numerators uniform in [-bound, bound] and denominators uniform
in [1, bound]. Draws that land on a degenerate locus (a vanishing
denominator, a base point, an inadmissible triple) are rejected and redrawn
up to ``max_attempts`` times.
"""

import logging
from fractions import Fraction
from typing import Callable, Optional, TypeVar

import numpy as np

from geometry import (
    P3Point,
    P4Point,
    P8Point,
    affine_mu_from_lambda,
    is_node,
    phi_map,
    proj_to_segre,
    segre_embed,
    varphi_map,
    weight_ratios_lambda,
)
from spectral import (
    DivisorParams,
    SpectralTriple,
    additive_lax,
    divisor_mu,
    double_prime_weights,
    is_admissible,
    lax_weights_mu,
    r_weights_mu,
)
from vertex_errors import SamplingExhaustedError, VertexModelError
from vertexcore import Weights

logger = logging.getLogger(__name__)

T = TypeVar("T")

DEFAULT_BOUND = 20
DEFAULT_MAX_ATTEMPTS = 1000


class Sampler:
    """Random exact objects drawn from one ``numpy.random.Generator``.

    Args:
        seed: Unsigned 64-bit seed, or a ``SeedSequence`` from :meth:`spawn`
        bound: Largest absolute numerator and largest denominator
        max_attempts: Redraws allowed before giving up on a degenerate locus
    """

    def __init__(self, seed, bound: int = DEFAULT_BOUND, max_attempts: int = DEFAULT_MAX_ATTEMPTS):
        self.seed_sequence = seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(seed)
        self.rng = np.random.default_rng(self.seed_sequence)
        self.bound = bound
        self.max_attempts = max_attempts

    def spawn(self, count: int) -> list["Sampler"]:
        """Independent child samplers, one per batch."""
        return [
            Sampler(child, bound=self.bound, max_attempts=self.max_attempts)
            for child in self.seed_sequence.spawn(count)
        ]

    def draw(self, what: str, build: Callable[[], T]) -> T:
        """Call ``build`` until it returns without a degeneracy error."""
        for attempt in range(1, self.max_attempts + 1):
            try:
                return build()
            except VertexModelError as e:
                logger.debug("rejected %s draw %d: %s", what, attempt, str(e).splitlines()[0])
        raise SamplingExhaustedError(what, self.max_attempts)

    def rational(self, nonzero: bool = False) -> Fraction:
        while True:
            numerator = int(self.rng.integers(-self.bound, self.bound, endpoint=True))
            if numerator or not nonzero:
                break
        denominator = int(self.rng.integers(1, self.bound, endpoint=True))
        return Fraction(numerator, denominator)

    def _nonzero(self, value: Fraction, what: str) -> Fraction:
        if value == 0:
            raise VertexModelError(f"{what} vanishes")
        return value

    def weights(self) -> Weights:
        return self.draw("weight triple", lambda: Weights(self.rational(), self.rational(), self.rational()))

    def weight_pair(self) -> tuple[Weights, Weights]:
        return self.weights(), self.weights()

    def spectral_triple(self) -> SpectralTriple:
        """Admissible triple whose double-prime weights have a != 0."""
        def build():
            s = SpectralTriple(self.rational(), self.rational(), self.rational())
            if not is_admissible(s):
                raise VertexModelError("inadmissible triple")
            self._nonzero(double_prime_weights(s).a, "a''")
            return s

        return self.draw("spectral triple", build)

    def divisor_params(self) -> DivisorParams:
        """Divisor parameters for which every divisor identity is defined."""
        def build():
            p = DivisorParams(self.rational(), self.rational(), self.rational())
            s = divisor_mu(p)
            if not is_admissible(s):
                raise VertexModelError("divisor image is inadmissible")
            r_weights_mu(s)
            additive_lax(p.t1, p.q)
            second = additive_lax(p.t2, p.q)
            self._nonzero(second.a, "a''")
            additive_lax(p.t1 / self._nonzero(p.t2, "t2"), p.q)
            return p

        return self.draw("divisor parameter set", build)

    def lambda_point(self) -> P3Point:
        """Point of CP^3 with lambda3 != 0 and defined weight ratios and varphi image."""
        def build():
            l = P3Point((self.rational(), self.rational(), self.rational(), self.rational(nonzero=True)))
            weight_ratios_lambda(l)
            s = affine_mu_from_lambda(l)
            if not is_admissible(s):
                raise VertexModelError("inadmissible triple")
            varphi_map(l)
            return l

        return self.draw("lambda point", build)

    def point_on_S(self, require_phi: bool = True) -> P4Point:
        """Point of the Segre cubic, pushed forward from CP^3 through T-bar."""
        def build():
            l = P3Point(tuple(self.rational() for _ in range(4)))
            x = proj_to_segre(varphi_map(l))
            if is_node(x):
                raise VertexModelError("sampled a node")
            if require_phi:
                phi_map(x)
            return x

        return self.draw("point on S", build)

    def point_on_X(self) -> P8Point:
        """Segre image of a spectral-parameter weight pair, with z00 != 0."""
        def build():
            s = self.spectral_triple()
            p = segre_embed(lax_weights_mu(s), double_prime_weights(s))
            self._nonzero(Fraction(p[0]), "z00")
            return p

        return self.draw("point on X", build)

    def p4_point(self, first_nonzero: bool = False) -> P4Point:
        def build():
            coords = [self.rational() for _ in range(5)]
            if first_nonzero:
                coords[0] = self._nonzero(coords[0], "first coordinate")
            return P4Point(coords)

        return self.draw("point of CP^4", build)

    def quadric_pair(self) -> tuple[Weights, Weights, Fraction]:
        """Two additive-form points on one quadric D and their shared q."""
        def build():
            q = self.rational()
            if q in (0, 1, -1):
                raise VertexModelError("q outside its domain")
            first = additive_lax(self.rational(), q)
            second = additive_lax(self.rational(), q)
            self._nonzero(second.a, "a''")
            return first, second, q

        return self.draw("quadric pair", build)


def make_sampler(seed: int, bound: Optional[int] = None, max_attempts: Optional[int] = None) -> Sampler:
    return Sampler(
        seed,
        bound=DEFAULT_BOUND if bound is None else bound,
        max_attempts=DEFAULT_MAX_ATTEMPTS if max_attempts is None else max_attempts,
    )
