"""Birational geometry of the integrability threefold X and the Segre cubic S.

Coordinate conventions:
    CP^8: (z00, z01, z02, z10, z11, z12, z20, z21, z22) with z_ij = w1[i] * w2[j]
          and index order a -> 0, b -> 1, c -> 2.
    T-bar chart: (z00 : z01 : z02 : z10 : z20), the coordinates kept after
          eliminating z11, z12, z21, z22 on z00 != 0.
    S:    x0^3 + ... + x4^3 - (x0 + ... + x4)^3 = 0 in CP^4.

With these conventions fz_poly(segre_embed(w1, w2)) = -baxter_F(w1, w2) and
segre_cubic(proj_to_segre(y)) = 6 * tbar_cubic(y).
"""

from fractions import Fraction
from itertools import combinations, permutations
from typing import Sequence, Union

from exactalg import Matrix, ProjPoint, RationalLike, inverse, proj_equal, rank
from spectral import SpectralTriple
from vertex_errors import (
    BasePointError,
    ChartError,
    DegenerateDenominatorError,
    NotOnVarietyError,
)
from vertexcore import Weights


class P8Point(ProjPoint):
    """Point of CP^8 in Segre coordinates z_ij."""
    LENGTH = 9


class P4Point(ProjPoint):
    """Point of CP^4: Segre cubic coordinates x_i or T-bar chart coordinates."""
    LENGTH = 5


class P3Point(ProjPoint):
    """Point (lambda0 : lambda1 : lambda2 : lambda3) of CP^3."""
    LENGTH = 4


# x = SEGRE_TRANSFORM . (z00, z01, z02, z10, z20)
SEGRE_TRANSFORM = Matrix([
    [1, 1, 0, -1, 0],
    [0, -1, 0, 0, 1],
    [0, -1, 0, 0, -1],
    [0, 0, -1, 1, 0],
    [0, 0, 1, 1, 0],
])
SEGRE_TRANSFORM_INVERSE = inverse(SEGRE_TRANSFORM)

_PAIRS = tuple(combinations(range(3), 2))


def _z(p: Union[P8Point, Sequence[RationalLike]]) -> list[list[Fraction]]:
    flat = [Fraction(v) for v in p]
    return [flat[0:3], flat[3:6], flat[6:9]]


def _apply(matrix: Matrix, values: Sequence[RationalLike]) -> list[Fraction]:
    return [
        sum((matrix[i, j] * Fraction(values[j]) for j in range(matrix.cols)), Fraction(0))
        for i in range(matrix.rows)
    ]


def segre_products(w1: Weights, w2: Weights) -> tuple[Fraction, ...]:
    """The nine products z_ij = w1[i] * w2[j] before projective normalization."""
    return tuple(x * y for x in w1 for y in w2)


def segre_embed(w1: Weights, w2: Weights) -> P8Point:
    return P8Point(segre_products(w1, w2))


def segre_quadrics(p: Union[P8Point, Sequence[RationalLike]]) -> list[Fraction]:
    """The nine 2x2 minors z_ij z_kl - z_il z_kj, ordered lexicographically by (i, k, j, l)."""
    z = _z(p)
    return [
        z[i][j] * z[k][l] - z[i][l] * z[k][j]
        for i, k in _PAIRS
        for j, l in _PAIRS
    ]


def on_segre_variety(p: P8Point) -> bool:
    return all(q == 0 for q in segre_quadrics(p))


def fz_poly(p: Union[P8Point, Sequence[RationalLike]]) -> Fraction:
    z = _z(p)
    return (
        z[0][0] * z[1][0] + z[0][1] * z[1][1] - z[0][2] * z[1][2]
        - z[0][0] * z[0][1] - z[1][0] * z[1][1] + z[2][0] * z[2][1]
    )


def on_X(p: P8Point) -> bool:
    return on_segre_variety(p) and fz_poly(p) == 0


def chart_project(p: P8Point) -> P4Point:
    if p[0] == 0:
        raise ChartError(p, "z00")
    if not on_segre_variety(p):
        raise NotOnVarietyError("the Segre quadrics", p, segre_quadrics(p))
    return P4Point((p[0], p[1], p[2], p[3], p[6]))


def chart_lift(y: P4Point) -> P8Point:
    z00, z01, z02, z10, z20 = (Fraction(v) for v in y)
    if z00 == 0:
        raise ChartError(y, "z00")
    return P8Point((
        z00, z01, z02,
        z10, z01 * z10 / z00, z02 * z10 / z00,
        z20, z01 * z20 / z00, z02 * z20 / z00,
    ))


def tbar_cubic(y: P4Point) -> Fraction:
    z00, z01, z02, z10, z20 = (Fraction(v) for v in y)
    return z01 * (z00 ** 2 + z10 ** 2 - z20 ** 2) - z10 * (z00 ** 2 + z01 ** 2 - z02 ** 2)


def tbar_gradient(y: P4Point) -> list[Fraction]:
    u, v, w, s, r = (Fraction(c) for c in y)
    return [
        2 * u * v - 2 * u * s,
        u * u + s * s - r * r - 2 * v * s,
        2 * s * w,
        2 * v * s - (u * u + v * v - w * w),
        -2 * v * r,
    ]


def segre_cubic(x: P4Point) -> Fraction:
    values = [Fraction(c) for c in x]
    return sum(v ** 3 for v in values) - sum(values) ** 3


def proj_to_segre(y: P4Point) -> P4Point:
    image = _apply(SEGRE_TRANSFORM, y)
    if all(v == 0 for v in image):
        raise BasePointError("proj_to_segre", y, "image vanishes")
    return P4Point(image)


def proj_from_segre(x: P4Point) -> P4Point:
    return P4Point(_apply(SEGRE_TRANSFORM_INVERSE, x))


def _phi_polynomials(x: P4Point) -> list[Fraction]:
    x0, x1, x2, x3, x4 = (Fraction(c) for c in x)
    return [
        2 * x0 + x1 + x2 + x3 + x4,
        -x1 - x2,
        x4 - x3,
        x3 + x4,
        -(x1 + x2) * (x3 + x4),
        -(x3 - x4) * (x3 + x4),
        x1 - x2,
        -(x1 - x2) * (x1 + x2),
        -(x1 - x2) * (x3 - x4),
    ]


def phi_map(x: P4Point) -> P8Point:
    """Rational map S -> X, cleared to the common denominator phi0."""
    residual = segre_cubic(x)
    if residual != 0:
        raise NotOnVarietyError("the Segre cubic S", x, residual)
    phi = _phi_polynomials(x)
    if phi[0] == 0:
        raise BasePointError("phi", x, "phi0 = 2*x0+x1+x2+x3+x4 vanishes")
    p0 = phi[0]
    image = (
        p0 * p0, phi[1] * p0, phi[2] * p0, phi[3] * p0, phi[4],
        phi[5], phi[6] * p0, phi[7], phi[8],
    )
    return P8Point(image)


def phi_inverse(p: P8Point) -> P4Point:
    if not on_X(p):
        raise NotOnVarietyError("the threefold X", p, fz_poly(p))
    z00, z01, z02, z10 = p[0], p[1], p[2], p[3]
    z20 = p[6]
    image = (z00 + z01 - z10, z20 - z01, -z01 - z20, z10 - z02, z10 + z02)
    if all(v == 0 for v in image):
        raise BasePointError("phi^-1", p)
    return P4Point(image)


def _varphi_polynomials(l: P3Point) -> list[int]:
    l0, l1, l2, l3 = l
    return [
        -l0 * l2 + l3 * (l0 - l1 + l2),
        l1 * (l2 - l3),
        l2 * (l1 - l3) + l0 * (-l2 + l3),
        l1 * (l0 - l3),
        -l2 * l3 + l0 * (-l1 + l2 + l3),
    ]


def varphi_map(l: P3Point) -> P4Point:
    """Parameterization CP^3 -> T-bar by the linear system of quadrics."""
    image = _varphi_polynomials(l)
    if all(v == 0 for v in image):
        raise BasePointError("varphi", l)
    return P4Point(image)


def weight_ratios_lambda(l: P3Point) -> tuple[Weights, Weights]:
    """Single- and double-prime weights (a/c, b/c, 1); the second is the first with lambda0 <-> lambda2."""
    l0, l1, l2, l3 = (Fraction(c) for c in l)
    first = l0 * (l2 - l1 + l3) - l2 * l3
    second = l2 * (l0 - l1 + l3) - l0 * l3
    if first == 0:
        raise DegenerateDenominatorError("weight_ratios_lambda", "l0*(l2-l1+l3)-l2*l3", tuple(l))
    if second == 0:
        raise DegenerateDenominatorError("weight_ratios_lambda", "l2*(l0-l1+l3)-l0*l3", tuple(l))
    single = Weights((l3 * (l0 - l1 + l2) - l0 * l2) / first, l1 * (l0 - l3) / first, 1)
    double = Weights((l3 * (l2 - l1 + l0) - l0 * l2) / second, l1 * (l2 - l3) / second, 1)
    return single, double


def affine_mu_from_lambda(l: P3Point) -> SpectralTriple:
    l0, l1, l2, l3 = (Fraction(c) for c in l)
    if l3 == 0:
        raise ChartError(l, "lambda3")
    return SpectralTriple(l0 / l3, l1 / l3, l2 / l3)


def segre_gradient(x: P4Point) -> list[Fraction]:
    values = [Fraction(c) for c in x]
    sigma = sum(values)
    return [3 * v * v - 3 * sigma * sigma for v in values]


def segre_hessian(x: P4Point) -> Matrix:
    values = [Fraction(c) for c in x]
    sigma = sum(values)
    return Matrix([
        [(6 * values[i] if i == j else 0) - 6 * sigma for j in range(5)]
        for i in range(5)
    ])


def is_node(x: P4Point) -> bool:
    return segre_cubic(x) == 0 and all(g == 0 for g in segre_gradient(x))


def is_ordinary_node(x: P4Point) -> bool:
    """A node whose Hessian has corank one (the point itself spans the kernel)."""
    return is_node(x) and rank(segre_hessian(x)) == 4


def list_nodes() -> list[P4Point]:
    """The ten nodes of S: prefixes of permutations of (1, 1, 1, -1, -1, -1)."""
    nodes: list[P4Point] = []
    for arrangement in sorted(set(permutations((1, 1, 1, -1, -1, -1)))):
        candidate = P4Point(arrangement[:5])
        if not any(proj_equal(candidate, known) for known in nodes):
            nodes.append(candidate)
    return nodes


def list_tbar_nodes() -> list[P4Point]:
    """Singular points of T-bar, the preimages of the Segre nodes."""
    return [proj_from_segre(x) for x in list_nodes()]
