"""Row-to-row transfer matrices of the six-vertex model on a periodic lattice.

Conventions (checked by ``enumerate_partition == partition_function``):

- A spin is stored as a bit: 0 for + (arrow right or up), 1 for -.
- The site Lax operator is a 2x2 block matrix over the auxiliary spin,
  ``L[alpha][beta]`` being a 2x2 operator on the quantum spin:
  ``L[0][0] = diag(a, b)``, ``L[0][1] = c e21``, ``L[1][0] = c e12``,
  ``L[1][1] = diag(b, a)``.
- The monodromy is ``L_N ... L_1`` in the auxiliary space; site 1 is the
  most significant bit of the quantum basis index.
- On the torus, vertex (i, j) sees auxiliary spins ``alpha = h[i][j+1]``,
  ``beta = h[i][j]`` and quantum spins ``s = v[i+1][j]``, ``s' = v[i][j]``.

Exact products on 2^N x 2^N matrices are done on integer arrays: weights are
scaled by the common denominator L first, and the results are divided by the
matching power of L afterwards. Every transfer matrix preserves the number of
down spins, so products are taken sector by sector.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import lcm
from typing import Iterator, Sequence

import numpy as np

from exactalg import Matrix
from vertex_errors import EnumerationLimitError, SiteCountError
from vertexcore import Weights

logger = logging.getLogger(__name__)

MAX_ENUMERATION_SIZE = 3

# vertex kind by code alpha<<3 | beta<<2 | s<<1 | s'; 3 marks an ice-rule violation
_A, _B, _C, _FORBIDDEN = 0, 1, 2, 3
_VERTEX_KIND = np.full(16, _FORBIDDEN, dtype=np.int8)
_VERTEX_KIND[[0b0000, 0b1111]] = _A
_VERTEX_KIND[[0b0011, 0b1100]] = _B
_VERTEX_KIND[[0b0110, 0b1001]] = _C


@dataclass(frozen=True)
class Monodromy:
    """Auxiliary-space 2x2 block form of L_N ... L_1."""
    blocks: tuple[tuple[Matrix, Matrix], tuple[Matrix, Matrix]]
    sites: int

    def __getitem__(self, index: tuple[int, int]) -> Matrix:
        alpha, beta = index
        return self.blocks[alpha][beta]

    @property
    def dimension(self) -> int:
        return 1 << self.sites


@dataclass(frozen=True)
class LatticeConfig:
    """Edge spins of an n x n torus.

    ``horizontal[i][j]`` is the edge entering vertex (i, j) from the left,
    ``vertical[i][j]`` the edge entering it from below.
    """
    horizontal: tuple[tuple[int, ...], ...]
    vertical: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.horizontal)
        rows = (*self.horizontal, *self.vertical)
        if len(self.vertical) != n or any(len(row) != n for row in rows):
            raise SiteCountError(n)
        if any(spin not in (0, 1) for row in rows for spin in row):
            raise ValueError("edge spins must be 0 (+) or 1 (-)")

    @property
    def size(self) -> int:
        return len(self.horizontal)

    def vertex_code(self, i: int, j: int) -> int:
        n = self.size
        alpha = self.horizontal[i][(j + 1) % n]
        beta = self.horizontal[i][j]
        s = self.vertical[(i + 1) % n][j]
        s_prime = self.vertical[i][j]
        return alpha << 3 | beta << 2 | s << 1 | s_prime


def _check_sites(n: int) -> None:
    if n < 1:
        raise SiteCountError(n)


def _site_blocks(a, b, c, zero) -> list[list[np.ndarray]]:
    def block(rows):
        return np.array(rows, dtype=object)

    return [
        [block([[a, zero], [zero, b]]), block([[zero, zero], [c, zero]])],
        [block([[zero, c], [zero, zero]]), block([[b, zero], [zero, a]])],
    ]


def _kron_array(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    outer = np.multiply.outer(left, right)
    return outer.transpose(0, 2, 1, 3).reshape(
        left.shape[0] * right.shape[0], left.shape[1] * right.shape[1]
    )


def _monodromy_arrays(a, b, c, n: int, zero) -> list[list[np.ndarray]]:
    site = _site_blocks(a, b, c, zero)
    blocks = site
    for _ in range(n - 1):
        blocks = [
            [
                _kron_array(blocks[0][beta], site[alpha][0])
                + _kron_array(blocks[1][beta], site[alpha][1])
                for beta in range(2)
            ]
            for alpha in range(2)
        ]
    return blocks


def _integer_weights(w: Weights) -> tuple[tuple[int, int, int], int]:
    """Weights scaled by the lcm L of their denominators, and L."""
    scale = lcm(*(x.denominator for x in w))
    a, b, c = (int(x * scale) for x in w)
    return (a, b, c), scale


def _integer_transfer(w: Weights, n: int) -> tuple[np.ndarray, int]:
    """Integer transfer matrix T(L w) = L^n T(w), and L."""
    (a, b, c), scale = _integer_weights(w)
    blocks = _monodromy_arrays(a, b, c, n, 0)
    return blocks[0][0] + blocks[1][1], scale


def spin_sectors(n: int) -> list[np.ndarray]:
    """Basis indices of the 2^n quantum space grouped by number of down spins."""
    _check_sites(n)
    indices = np.arange(1 << n)
    popcount = np.array([bin(i).count("1") for i in indices])
    return [indices[popcount == k] for k in range(n + 1)]


def _int_power(block: np.ndarray, exponent: int) -> np.ndarray:
    size = block.shape[0]
    result = np.array([[int(i == j) for j in range(size)] for i in range(size)], dtype=object)
    base = block
    while exponent:
        if exponent & 1:
            result = result @ base
        exponent >>= 1
        if exponent:
            base = base @ base
    return result


def monodromy(w: Weights, n: int) -> Monodromy:
    _check_sites(n)
    zero = Fraction(0)
    blocks = _monodromy_arrays(w.a, w.b, w.c, n, zero)
    return Monodromy(
        blocks=tuple(tuple(Matrix._wrap(block) for block in row) for row in blocks),
        sites=n,
    )


def transfer_matrix(w: Weights, n: int) -> Matrix:
    """T = Tr_aux (L_N ... L_1)."""
    _check_sites(n)
    transfer, scale = _integer_transfer(w, n)
    return Matrix(transfer) * Fraction(1, scale ** n)


def transfer_commutator(w1: Weights, w2: Weights, n: int) -> Matrix:
    """[T(w1), T(w2)] on n sites."""
    _check_sites(n)
    first, scale1 = _integer_transfer(w1, n)
    second, scale2 = _integer_transfer(w2, n)
    result = np.zeros((1 << n, 1 << n), dtype=object)
    for sector in spin_sectors(n):
        grid = np.ix_(sector, sector)
        left, right = first[grid], second[grid]
        result[grid] = left @ right - right @ left
    logger.debug("commutator on %d sites: %d sectors", n, n + 1)
    return Matrix(result) * Fraction(1, (scale1 * scale2) ** n)


def partition_function(w: Weights, n: int) -> Fraction:
    """Z_n = Tr T^n on the n x n torus."""
    _check_sites(n)
    transfer, scale = _integer_transfer(w, n)
    total = 0
    for sector in spin_sectors(n):
        block = transfer[np.ix_(sector, sector)]
        total += int(np.trace(_int_power(block, n)))
    return Fraction(total, scale ** (n * n))


@lru_cache(maxsize=None)
def _monomial_census(n: int) -> tuple[tuple[tuple[int, int, int], int], ...]:
    """Multiplicity of each (#a, #b, #c) vertex count over all ice states of the torus."""
    cells = n * n
    configs = np.arange(1 << (2 * cells), dtype=np.int64)
    bits = ((configs[:, None] >> np.arange(2 * cells, dtype=np.int64)) & 1).astype(np.int8)
    horizontal = bits[:, :cells].reshape(-1, n, n)
    vertical = bits[:, cells:].reshape(-1, n, n)
    alpha = np.roll(horizontal, -1, axis=2)
    s = np.roll(vertical, -1, axis=1)
    codes = (alpha << 3) | (horizontal << 2) | (s << 1) | vertical
    kinds = _VERTEX_KIND[codes].reshape(-1, cells)
    kinds = kinds[(kinds != _FORBIDDEN).all(axis=1)]
    counts = np.stack([(kinds == kind).sum(axis=1) for kind in (_A, _B, _C)], axis=1)
    monomials, multiplicity = np.unique(counts, axis=0, return_counts=True)
    logger.debug("%dx%d torus: %d ice states out of %d", n, n, len(kinds), len(configs))
    return tuple(
        (tuple(int(x) for x in monomial), int(count))
        for monomial, count in zip(monomials, multiplicity)
    )


def enumerate_partition(w: Weights, n: int, max_size: int = MAX_ENUMERATION_SIZE) -> Fraction:
    """Brute-force partition function: sum over all edge spins of the vertex weight products."""
    _check_sites(n)
    max_size = min(max_size, MAX_ENUMERATION_SIZE)
    if n > max_size:
        raise EnumerationLimitError(n, max_size)
    return sum(
        (count * w.a ** na * w.b ** nb * w.c ** nc for (na, nb, nc), count in _monomial_census(n)),
        Fraction(0),
    )


def config_weight(config: LatticeConfig, w: Weights) -> Fraction:
    """Product of the vertex weights of one configuration; zero if any vertex breaks the ice rule."""
    values = (w.a, w.b, w.c)
    weight = Fraction(1)
    for i, j in product(range(config.size), repeat=2):
        kind = _VERTEX_KIND[config.vertex_code(i, j)]
        if kind == _FORBIDDEN:
            return Fraction(0)
        weight *= values[kind]
    return weight


def _unpack(index: int, n: int) -> LatticeConfig:
    cells = n * n

    def grid(offset: int) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple((index >> (offset + i * n + j)) & 1 for j in range(n)) for i in range(n)
        )

    return LatticeConfig(horizontal=grid(0), vertical=grid(cells))


def iter_configurations(n: int, max_size: int = MAX_ENUMERATION_SIZE) -> Iterator[LatticeConfig]:
    """All 2^(2n^2) edge-spin assignments of the n x n torus, ice rule or not."""
    _check_sites(n)
    if n > max_size:
        raise EnumerationLimitError(n, max_size)
    for index in range(1 << (2 * n * n)):
        yield _unpack(index, n)


def lattice_config(horizontal: Sequence[Sequence[int]], vertical: Sequence[Sequence[int]]) -> LatticeConfig:
    return LatticeConfig(
        horizontal=tuple(tuple(row) for row in horizontal),
        vertical=tuple(tuple(row) for row in vertical),
    )

