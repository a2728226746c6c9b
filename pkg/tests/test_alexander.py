import pytest
from hypothesis import given, strategies as st

from fiedlerburau._text import PolynomialParseError
from fiedlerburau.alexander import (
    _remainder_monic,
    BivariatePoly,
    RecoveryError,
    alexander_closed_braid_with_axis,
    general_link_invariant,
    recover_fiedler_from_alexander,
    scramble_units,
)
from fiedlerburau.braidword import BraidWord, writhe
from fiedlerburau.burau import burau_matrix, charpoly_newton, jet_expansion
from fiedlerburau.fiedler import FiedlerPoly, fiedler_statesum
from fiedlerburau.polyring import XPoly

from conftest import braids, knot_braids

P = BivariatePoly.parse
units = st.tuples(st.integers(-5, 5), st.integers(-5, 5), st.sampled_from([1, -1]))
bivariates = st.dictionaries(
    st.tuples(st.integers(-4, 4), st.integers(-4, 4)), st.integers(-20, 20), max_size=6
).map(BivariatePoly)


class TestText:
    def test_parse_any_order_and_spacing(self):
        assert P("t^3*x + 1") == P("1+t^3 *x") == P(" x*t^3 + 1 ")
        assert P("-x^2*t^-1 - t^2*x^3").terms == {(2, -1): -1, (3, 2): -1}
        assert P("3x t - x*t + 0") == P("2*t*x")

    def test_print(self):
        assert str(P("t^3*x + 1")) == "1 + t^3*x"
        assert str(P("-x^2*t^-1 - t^2*x^3")) == "-t^-1*x^2 - t^2*x^3"

    @pytest.mark.parametrize("bad", ["", "1 +", "y", "x^", "2**x", "1 2"])
    def test_parse_errors(self, bad):
        with pytest.raises(PolynomialParseError):
            P(bad)

    @given(bivariates)
    def test_round_trip(self, p):
        assert P(str(p)) == p


class TestForward:
    def test_examples(self):
        assert alexander_closed_braid_with_axis(BraidWord.from_ints([1, 1, 1])) == P("1 + t^3*x")
        assert alexander_closed_braid_with_axis(BraidWord.from_ints([1])) == P("1 + t*x")
        assert alexander_closed_braid_with_axis(BraidWord(1)) == P("1")

    @given(braids(max_n=5, max_len=10))
    def test_times_one_minus_x_is_charpoly(self, beta):
        delta = alexander_closed_braid_with_axis(beta)
        cp = BivariatePoly.from_xpoly(charpoly_newton(burau_matrix(beta)))
        assert P("1 - x") * delta == cp

    @given(knot_braids())
    def test_axis_unknotted_a0(self, beta):
        inv = general_link_invariant(alexander_closed_braid_with_axis(beta))
        assert inv.a0 == XPoly([1] * beta.n)


class TestScramble:
    def test_examples(self):
        d = P("1 + t^3*x")
        assert scramble_units(d, 0, 0, 1) == d
        assert scramble_units(d, 2, -1, -1) == P("-x^2*t^-1 - t^2*x^3")


class TestRecovery:
    def test_trefoil(self):
        res = recover_fiedler_from_alexander(P("1 + t^3*x"), 2)
        assert res.fiedler.coeffs == {1: 3}
        assert (res.f0, res.fn) == (0, -3)
        assert res.f == [0, 3, -3]

    def test_scrambled_trefoil(self):
        res = recover_fiedler_from_alexander(P("-x^2*t^-1 - t^2*x^3"), 2)
        assert res.fiedler.coeffs == {1: 3}
        assert res.f0 + res.fn == -3
        assert (res.f0, res.fn) == (-1, -2)

    def test_trivial_h1(self):
        res = recover_fiedler_from_alexander(P("1 + x"), 2)
        assert res.fiedler == FiedlerPoly(2)
        assert (res.f0, res.fn) == (0, 0)

    @pytest.mark.parametrize("text,n", [("1 + x", 3), ("2 + x", 2), ("0", 2), ("1 + x + t*x^5", 2)])
    def test_rejects_bad_inputs(self, text, n):
        with pytest.raises(RecoveryError, match="not a knot-closure axis-link polynomial"):
            recover_fiedler_from_alexander(P(text) if text != "0" else BivariatePoly(), n)

    @given(knot_braids(), units)
    def test_round_trip(self, beta, unit):
        a, b, s = unit
        delta = scramble_units(alexander_closed_braid_with_axis(beta), a, b, s)
        res = recover_fiedler_from_alexander(delta, beta.n)
        assert res.fiedler == fiedler_statesum(beta)
        assert res.f0 + res.fn == -writhe(beta)

    @given(knot_braids(), units)
    def test_t_power_moves_only_f0_and_fn(self, beta, unit):
        a, b, s = unit
        base = recover_fiedler_from_alexander(alexander_closed_braid_with_axis(beta), beta.n)
        res = recover_fiedler_from_alexander(scramble_units(alexander_closed_braid_with_axis(beta), a, b, s), beta.n)
        assert (res.f0, res.fn) == (base.f0 + b, base.fn - b)
        assert (res.x_shift, res.sign) == (-a, s)

    @given(knot_braids())
    def test_unscrambled_matches_charpoly(self, beta):
        res = recover_fiedler_from_alexander(alexander_closed_braid_with_axis(beta), beta.n)
        _, a1 = jet_expansion(beta)
        assert res.f == [a1[i] for i in range(beta.n + 1)]
        assert res.f0 == 0 and res.fn == -writhe(beta)


class TestGeneralLink:
    def test_trefoil_as_link(self):
        inv = general_link_invariant(P("1 + t^3*x"))
        assert inv.a0 == XPoly([1, 1])
        assert inv.a1 == XPoly([0, 3])
        assert inv.a1_reduced == XPoly([-3])

    def test_no_t_dependence(self):
        inv = general_link_invariant(P("1 - x + x^2"))
        assert inv.a1 == XPoly()
        assert inv.a1_reduced == XPoly()

    def test_not_monic_is_left_unreduced(self):
        inv = general_link_invariant(P("1 + 2*t*x^2"))
        assert inv.a0 == XPoly([1, 0, 2])
        assert inv.a1_reduced is None

    def test_zero_a0(self):
        with pytest.raises(RecoveryError):
            general_link_invariant(P("t - 1"))

    def test_axis_variable_swap(self):
        assert general_link_invariant(P("1 + x^3*t"), axis_var="t") == general_link_invariant(P("1 + t^3*x"))

    def test_negative_x_exponents_shifted(self):
        inv = general_link_invariant(P("x^-1 + t^3"))
        assert inv.x_shift == 1
        assert inv.a1_reduced == XPoly([-3])

    @given(knot_braids(min_n=2), st.integers(-5, 5))
    def test_t_power_does_not_change_reduction(self, beta, b):
        delta = alexander_closed_braid_with_axis(beta)
        base = general_link_invariant(delta)
        assert general_link_invariant(scramble_units(delta, 0, b, 1)).a1_reduced == base.a1_reduced

    @given(knot_braids(min_n=2))
    def test_relation_to_charpoly_h_coefficient(self, beta):
        # Delta = det(I - xB) / (1 - x), so (1 - x) a1(Delta) = f_0 + f_1 x + ... + f_n x^n
        # and the reduced classes agree after multiplying by 1 - x
        inv = general_link_invariant(alexander_closed_braid_with_axis(beta))
        _, a1_cp = jet_expansion(beta)
        assert XPoly([1, -1]) * inv.a1 == a1_cp
        assert _remainder_monic(XPoly([1, -1]) * inv.a1_reduced, inv.a0) == _remainder_monic(a1_cp, inv.a0)
