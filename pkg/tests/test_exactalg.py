from fractions import Fraction

import pytest
from hypothesis import assume, given, settings

from exactalg import (
    Matrix,
    ProjPoint,
    commutator,
    det,
    diag,
    embed_three,
    format_rational,
    identity,
    inverse,
    kron,
    mat_mul,
    parse_rational,
    proj_equal,
    rank,
    swap_matrix,
    to_rational,
)
from vertex_errors import (
    DimensionMismatchError,
    InvalidSlotError,
    RationalParseError,
    ZeroVectorError,
)

from strategies import matrices, rationals, vectors


class TestRationals:
    @pytest.mark.parametrize("text, expected", [
        ("3", Fraction(3)),
        ("-3/6", Fraction(-1, 2)),
        ("+4/2", Fraction(2)),
        (" 7 / 3 ", Fraction(7, 3)),
    ])
    def test_parse(self, text, expected):
        assert parse_rational(text) == expected

    @pytest.mark.parametrize("text", ["", "1.5", "a/2", "1/-2", "1//2"])
    def test_parse_rejects_malformed(self, text):
        with pytest.raises(RationalParseError):
            parse_rational(text)

    def test_parse_rejects_zero_denominator(self):
        with pytest.raises(RationalParseError, match="zero denominator"):
            parse_rational("1/0")

    def test_format_is_canonical(self):
        assert format_rational(Fraction(4, -6)) == "-2/3"
        assert format_rational(Fraction(6, 3)) == "2"
        assert format_rational("10/4") == "5/2"

    @given(rationals(50))
    def test_format_parse_inverse(self, value):
        assert parse_rational(format_rational(value)) == value

    def test_to_rational_refuses_floats_and_bools(self):
        with pytest.raises(TypeError):
            to_rational(0.5)
        with pytest.raises(TypeError):
            to_rational(True)


class TestMatrix:
    def test_mat_mul(self):
        a = Matrix([[1, 2], [3, 4]])
        assert mat_mul(a, Matrix([[0, 1], [1, 0]])) == Matrix([[2, 1], [4, 3]])
        assert a @ identity(2) == a

    def test_mat_mul_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            mat_mul(Matrix([[1, 2]]), Matrix([[1, 2]]))

    def test_entries_are_fractions_and_read_only(self):
        m = Matrix([[1, "1/2"]])
        assert m[0, 1] == Fraction(1, 2)
        assert isinstance(m[0, 0], Fraction)
        with pytest.raises(ValueError):
            m.array[0, 0] = 5

    def test_kron_block_layout(self):
        a = Matrix([[1, 2], [3, 4]])
        b = Matrix([[0, 1], [1, 0]])
        assert kron(a, b) == Matrix([
            [0, 1, 0, 2],
            [1, 0, 2, 0],
            [0, 3, 0, 4],
            [3, 0, 4, 0],
        ])

    def test_commutator(self):
        x = Matrix([[0, 1], [1, 0]])
        z = diag(1, -1)
        assert commutator(x, z) == Matrix([[0, -2], [2, 0]])
        assert commutator(x, x).is_zero()

    @pytest.mark.parametrize("rows, expected", [
        ([[1, 2], [3, 4]], -2),
        ([[0, 1], [1, 0]], -1),
        ([[2, 0, 1], [1, 3, 2], [1, 1, 2]], 6),
        ([[1, 2, 3], [2, 4, 6], [0, 1, 1]], 0),
        ([["1/2", 0], [0, "2/3"]], Fraction(1, 3)),
    ])
    def test_det(self, rows, expected):
        assert det(Matrix(rows)) == expected

    def test_rank(self):
        assert rank(diag(1, 0, 2)) == 2
        assert rank(Matrix([[1, 2, 3], [2, 4, 6], [0, 1, 1]])) == 2
        assert rank(identity(4)) == 4

    def test_inverse(self):
        a = Matrix([[2, 1], [7, 4]])
        assert inverse(a) == Matrix([[4, -1], [-7, 2]])

    def test_inverse_of_singular_matrix(self):
        with pytest.raises(ZeroDivisionError):
            inverse(Matrix([[1, 2], [2, 4]]))

    def test_swap_matrix_is_an_involution(self):
        p = swap_matrix()
        assert p @ p == identity(4)
        assert p @ kron(diag(1, 2), diag(3, 5)) @ p == kron(diag(3, 5), diag(1, 2))

    @settings(max_examples=50, deadline=None)
    @given(matrices(3), matrices(3))
    def test_det_is_multiplicative(self, a, b):
        assert det(a @ b) == det(a) * det(b)

    @settings(max_examples=30, deadline=None)
    @given(matrices(4, bound=4), matrices(4, bound=4))
    def test_det_is_multiplicative_on_two_site_operators(self, a, b):
        assert det(a @ b) == det(a) * det(b)

    @settings(max_examples=50, deadline=None)
    @given(matrices(3), matrices(3), matrices(3))
    def test_mat_mul_is_associative(self, a, b, c):
        assert (a @ b) @ c == a @ (b @ c)

    @settings(max_examples=30, deadline=None)
    @given(matrices(2), matrices(2), matrices(2), matrices(2))
    def test_kron_mixed_product(self, a, b, c, d):
        assert kron(a, b) @ kron(c, d) == kron(a @ c, b @ d)

    @settings(max_examples=30, deadline=None)
    @given(matrices(2), matrices(2), matrices(2))
    def test_kron_is_associative(self, a, b, c):
        assert kron(kron(a, b), c) == kron(a, kron(b, c))

    @settings(max_examples=50, deadline=None)
    @given(matrices(3))
    def test_inverse_roundtrip(self, a):
        assume(det(a) != 0)
        assert a @ inverse(a) == identity(3)


class TestEmbedThree:
    def test_identity_lifts_to_identity(self):
        for slot in (12, 13, 23):
            assert embed_three(identity(4), slot) == identity(8)

    def test_row_index_convention(self):
        op = diag(1, 2, 3, 4)
        assert embed_three(op, 23) == diag(1, 2, 3, 4, 1, 2, 3, 4)
        assert embed_three(op, 12) == diag(1, 1, 2, 2, 3, 3, 4, 4)
        assert embed_three(op, 13) == diag(1, 2, 1, 2, 3, 4, 3, 4)

    def test_slot_string(self):
        assert embed_three(swap_matrix(), "12") == kron(swap_matrix(), identity(2))

    @settings(max_examples=30, deadline=None)
    @given(matrices(2), matrices(2))
    def test_product_operators(self, a, b):
        ab = kron(a, b)
        i2 = identity(2)
        assert embed_three(ab, 12) == kron(ab, i2)
        assert embed_three(ab, 23) == kron(i2, ab)
        assert embed_three(ab, 13) == kron(kron(a, i2), b)

    @pytest.mark.parametrize("slot", [11, 21, 4, "x"])
    def test_invalid_slot(self, slot):
        with pytest.raises(InvalidSlotError):
            embed_three(identity(4), slot)

    def test_wrong_shape(self):
        with pytest.raises(DimensionMismatchError):
            embed_three(identity(2), 12)


class TestProjPoint:
    def test_canonical_form(self):
        assert ProjPoint((2, 4, 6)).coords == (1, 2, 3)
        assert ProjPoint((0, -2, 4)).coords == (0, 1, -2)
        assert ProjPoint((Fraction(1, 2), Fraction(1, 3))).coords == (3, 2)
        assert str(ProjPoint((-6, 12, 2, 3, 1))) == "6:-12:-2:-3:-1"

    def test_zero_vector(self):
        with pytest.raises(ZeroVectorError):
            ProjPoint((0, 0, 0))

    def test_equal_points_compare_equal(self):
        assert ProjPoint((1, 2)) == ProjPoint((-3, -6))

    def test_proj_equal(self):
        assert proj_equal((1, 2, 0), (Fraction(-1, 2), -1, 0))
        assert not proj_equal((1, 2, 0), (1, 2, 1))
        with pytest.raises(DimensionMismatchError):
            proj_equal((1, 2), (1, 2, 3))

    @given(rationals(), rationals(), rationals(nonzero=True), rationals(nonzero=True))
    def test_scaling_invariance(self, x, y, z, k):
        p = ProjPoint((x, y, z))
        assert p == ProjPoint((k * x, k * y, k * z))
        assert proj_equal(p, (x, y, z))

    @given(vectors(), vectors(), vectors())
    def test_proj_equal_is_an_equivalence(self, u, v, w):
        assert proj_equal(u, u)
        assert proj_equal(u, v) == proj_equal(v, u)
        if proj_equal(u, v) and proj_equal(v, w):
            assert proj_equal(u, w)

    @given(vectors(), rationals(nonzero=True), rationals(nonzero=True))
    def test_proj_equal_chains_through_rescaling(self, u, k, m):
        v = tuple(k * x for x in u)
        w = tuple(m * x for x in v)
        assert proj_equal(u, v) and proj_equal(v, w) and proj_equal(w, u)
