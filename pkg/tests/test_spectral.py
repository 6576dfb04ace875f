from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from exactalg import proj_equal
from spectral import (
    DivisorParams,
    SpectralTriple,
    additive_lax,
    delta_from_q,
    divisor_mu,
    double_prime_weights,
    group_law_compose,
    is_admissible,
    lax_weights_mu,
    r_weights_mu,
    verify_additive_ybe,
    verify_ybe_mu,
)
from vertex_errors import DegenerateDenominatorError, InvalidParameterError, NotOnVarietyError
from vertexcore import Delta, RWeights, Weights, baxter_F, quadric_D, solve_r_ratios

from strategies import rationals

F = Fraction


def spectral_triples():
    return st.builds(SpectralTriple, rationals(), rationals(), rationals()).filter(is_admissible)


class TestSpectralWeights:
    def test_example_triple(self):
        s = SpectralTriple(2, 3, 5)
        assert lax_weights_mu(s) == Weights(6, -3, 1)
        assert double_prime_weights(s) == Weights(-3, 6, 1)
        assert r_weights_mu(s) == RWeights(52, -27, 1)
        assert verify_ybe_mu(s).is_zero()

    def test_swapped(self):
        assert SpectralTriple(2, 3, 5).swapped() == SpectralTriple(5, 3, 2)

    def test_denominators(self):
        s = SpectralTriple(2, 3, 5)
        assert s.lax_denominator == 1
        assert s.r_denominator == 2
        assert s.r_denominator == -s.swapped().lax_denominator

    def test_degenerate_triple(self):
        s = SpectralTriple(1, 1, 1)
        assert not is_admissible(s)
        with pytest.raises(DegenerateDenominatorError):
            lax_weights_mu(s)
        with pytest.raises(DegenerateDenominatorError):
            r_weights_mu(s)

    @settings(max_examples=50, deadline=None)
    @given(spectral_triples())
    def test_weights_lie_on_X(self, s):
        assert baxter_F(lax_weights_mu(s), double_prime_weights(s)) == 0

    @settings(max_examples=30, deadline=None)
    @given(spectral_triples())
    def test_yang_baxter_equation(self, s):
        assert verify_ybe_mu(s).is_zero()

    @settings(max_examples=50, deadline=None)
    @given(spectral_triples())
    def test_r_weights_match_solved_ratios(self, s):
        double = double_prime_weights(s)
        assume(double.a != 0)
        solved = solve_r_ratios(lax_weights_mu(s), double)
        assert proj_equal(r_weights_mu(s).point, solved.point)


class TestDivisor:
    def test_example(self):
        s = divisor_mu(DivisorParams(3, 5, 2))
        assert s == SpectralTriple(F(2, 5), F(32, 35), F(4, 7))
        assert lax_weights_mu(s) == Weights(F(-5, 9), F(-16, 9), 1)
        assert lax_weights_mu(s) == additive_lax(3, 2)

    def test_swapping_t1_t2_swaps_the_triple(self):
        assert divisor_mu(DivisorParams(5, 3, 2)) == divisor_mu(DivisorParams(3, 5, 2)).swapped()

    def test_opposite_parameters_collapse(self):
        assert divisor_mu(DivisorParams(2, -2, 3)) == SpectralTriple(0, 0, 0)

    @pytest.mark.parametrize("q", [0, 1, -1])
    def test_q_domain(self, q):
        with pytest.raises(InvalidParameterError):
            DivisorParams(3, 5, q)

    def test_degenerate_divisor_point(self):
        with pytest.raises(DegenerateDenominatorError):
            divisor_mu(DivisorParams(1, 5, 2))

    def test_additive_ybe(self):
        assert verify_additive_ybe(3, 5, 2).is_zero()
        assert verify_additive_ybe(F(1, 2), F(1, 2), 3).is_zero()
        assert verify_additive_ybe(2, 7, 3).is_zero()

    def test_additive_lax_values(self):
        assert additive_lax(3, 2) == Weights(F(-5, 9), F(-16, 9), 1)
        assert additive_lax(5, 2) == Weights(F(-7, 5), F(-16, 5), 1)
        assert additive_lax(1, 4) == Weights(1, 0, 1)
        with pytest.raises(DegenerateDenominatorError):
            additive_lax(0, 2)

    def test_delta_from_q(self):
        assert delta_from_q(2) == Delta(F(5, 2))
        assert quadric_D(Weights(F(-5, 9), F(-16, 9), 1), delta_from_q(2)) == 0
        with pytest.raises(InvalidParameterError):
            delta_from_q(0)

    @settings(max_examples=40, deadline=None)
    @given(rationals(nonzero=True), rationals(nonzero=True))
    def test_additive_lax_lies_on_its_quadric(self, t, q):
        assume(q * q != 1)
        assert quadric_D(additive_lax(t, q), delta_from_q(q)) == 0


class TestGroupLaw:
    def test_example(self):
        composed = group_law_compose(additive_lax(3, 2), additive_lax(5, 2), Delta(F(5, 2)))
        assert composed == RWeights(F(91, 45), F(32, 45), 1)
        assert proj_equal(composed.point, additive_lax(F(3, 5), 2).point)

    def test_inferred_quadric(self):
        assert group_law_compose(additive_lax(3, 2), additive_lax(5, 2)) == RWeights(F(91, 45), F(32, 45), 1)

    def test_identity_point(self):
        one = Weights(1, 0, 1)
        assert group_law_compose(one, one, Delta(3)) == RWeights(1, 0, 1)

    def test_identity_point_on_every_quadric(self):
        one = Weights(1, 0, 1)
        assert group_law_compose(one, one) == RWeights(1, 0, 1)

    def test_quadric_inferred_from_second_argument(self):
        one = additive_lax(1, 2)
        assert one == Weights(1, 0, 1)
        composed = group_law_compose(one, additive_lax(3, 2))
        assert composed == RWeights(F(35, 9), F(16, 9), 1)
        assert proj_equal(composed.point, additive_lax(F(1, 3), 2).point)

    def test_two_degenerate_points_off_the_quadrics(self):
        with pytest.raises(NotOnVarietyError):
            group_law_compose(Weights(1, 0, 1), Weights(2, 0, 1))

    def test_points_on_different_quadrics(self):
        with pytest.raises(NotOnVarietyError):
            group_law_compose(additive_lax(3, 2), Weights(1, 1, 1))
        with pytest.raises(NotOnVarietyError):
            group_law_compose(additive_lax(3, 2), Weights(1, 1, 1), delta_from_q(2))

    @settings(max_examples=40, deadline=None)
    @given(rationals(nonzero=True), rationals(nonzero=True), rationals(nonzero=True))
    def test_closure(self, t1, t2, q):
        assume(q * q != 1)
        second = additive_lax(t2, q)
        assume(second.a != 0)
        delta = delta_from_q(q)
        assert quadric_D(group_law_compose(additive_lax(t1, q), second, delta), delta) == 0
