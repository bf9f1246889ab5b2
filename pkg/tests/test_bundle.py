"""Bundle invariants: derivation, chi(E(n)), split detection, regimes."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nonvanish.bundle import (
    BundleInvariants,
    Regime,
    chi_E,
    chi_E_rational,
    derive,
    is_split_numeric,
    regime,
)
from nonvanish.errors import NonIntegerResultError, PreconditionViolatedError
from nonvanish.exactnum import Ordering, surd_cmp
from nonvanish.threefold import Threefold, hypersurface

QUADRIC = hypersurface(2)
QUINTIC = hypersurface(5)


class TestDerive:
    def test_stable_quadric_example(self):
        D = derive(QUADRIC, BundleInvariants(0, 4, 1))
        assert D.delta == 6
        assert D.theta == F(25, 4)
        assert D.zeta0 == F(-3, 2)
        assert D.w0 == -1
        assert D.lam == F(-1, 4)
        assert D.zeta is not None and D.zeta.as_rational() == F(1)
        assert D.alpha_bar == 2

    def test_nonstable_quintic_example(self):
        D = derive(QUINTIC, BundleInvariants(0, 45, -3))
        assert D.delta == 90
        assert D.theta == 22
        assert D.zeta0 == 0
        assert D.w0 == 1
        assert D.lam == 5
        assert D.alpha_bar == 5  # floor(sqrt(22)) + 1

    def test_odd_c1_example(self):
        D = derive(QUADRIC, BundleInvariants(-1, 2, 1))
        assert D.delta == 2
        assert D.theta == F(5, 2)
        assert D.zeta0 == -1
        assert D.w0 == 0
        assert D.alpha_bar == 1

    def test_boundary_quadric_example(self):
        D = derive(QUADRIC, BundleInvariants(0, 8, 0))
        assert D.delta == 8
        assert D.theta == F(49, 4)
        assert D.zeta0 == F(-3, 2)
        assert D.zeta is not None and D.zeta.as_rational() == F(2)
        assert D.alpha_bar == 3

    def test_negative_theta_has_no_root(self):
        D = derive(Threefold(2, 0, 48), BundleInvariants(0, -4, -2))
        assert D.theta == -18
        assert D.zeta is None
        assert D.alpha_bar is None

    def test_delta_formula(self):
        # delta = c2 + d*alpha^2 + c1*d*alpha
        D = derive(QUINTIC, BundleInvariants(-1, 7, 2))
        assert D.delta == 7 + 5 * 4 - 5 * 2

    def test_c1_domain_enforced(self):
        with pytest.raises(PreconditionViolatedError):
            BundleInvariants(1, 4, 0)

    @given(
        st.sampled_from([(1, -4, 6), (2, -3, 8), (3, -2, 12), (5, 0, 50)]),
        st.sampled_from([0, -1]),
        st.integers(min_value=-30, max_value=30),
        st.integers(min_value=-6, max_value=6),
    )
    @settings(max_examples=150)
    def test_theta_and_zeta_consistent(self, triple, c1, c2, alpha):
        X = Threefold(*triple)
        D = derive(X, BundleInvariants(c1, c2, alpha))
        assert D.theta == F(3 * c2, X.d) - D.lam - F(3 * c1 * c1, 4)
        assert (D.zeta is None) == (D.theta < 0)
        if D.zeta is not None:
            assert D.zeta.base == D.zeta0
            assert D.zeta.radicand == D.theta
            # alpha_bar is the least integer strictly greater than zeta
            assert surd_cmp(F(D.alpha_bar), D.zeta) is Ordering.GREATER
            assert surd_cmp(F(D.alpha_bar - 1), D.zeta) is not Ordering.GREATER


class TestChiE:
    def test_golden_value(self):
        D = derive(QUADRIC, BundleInvariants(0, 4, 1))
        assert chi_E(QUADRIC, D, 0) == -4

    def test_vanishes_at_zeta0_when_integral(self):
        D = derive(QUINTIC, BundleInvariants(0, 45, -3))
        assert chi_E(QUINTIC, D, 0) == 0  # zeta0 = 0

    def test_non_integer_rejected(self):
        X = Threefold(2, 0, 48)
        D = derive(X, BundleInvariants(0, -4, -2))
        assert chi_E_rational(X, D, 4) == F(272, 3)
        with pytest.raises(NonIntegerResultError):
            chi_E(X, D, 4)

    @given(
        st.sampled_from([(1, -4, 6), (2, -3, 8), (4, -1, 24), (5, 0, 50)]),
        st.sampled_from([0, -1]),
        st.integers(min_value=-30, max_value=30),
        st.integers(min_value=-6, max_value=6),
        st.integers(min_value=-25, max_value=25),
    )
    @settings(max_examples=150)
    def test_antisymmetry_about_zeta0(self, triple, c1, c2, alpha, n):
        # 2*zeta0 - n = epsilon - c1 - n is an integer twist again
        X = Threefold(*triple)
        D = derive(X, BundleInvariants(c1, c2, alpha))
        mirror = X.epsilon - c1 - n
        assert chi_E_rational(X, D, n) == -chi_E_rational(X, D, mirror)


class TestSplit:
    def test_split_detected(self):
        D = derive(hypersurface(1), BundleInvariants(0, -1, -1))
        assert D.delta == 0
        assert is_split_numeric(D)

    def test_nonsplit(self):
        D = derive(QUADRIC, BundleInvariants(0, 4, 1))
        assert not is_split_numeric(D)


class TestRegime:
    def test_stable_example(self):
        assert regime(QUADRIC, BundleInvariants(0, 4, 1)) is Regime.STABLE_STRONG

    def test_nonstable_example(self):
        assert regime(QUINTIC, BundleInvariants(0, 45, -3)) is Regime.NONSTABLE_STRONG

    def test_gap_example(self):
        assert regime(QUADRIC, BundleInvariants(-1, 2, 1)) is Regime.GAP

    def test_boundary_is_nonstable(self):
        # 2*alpha = 0 = -(epsilon+3+c1) on the quadric
        assert regime(QUADRIC, BundleInvariants(0, 8, 0)) is Regime.NONSTABLE_STRONG

    def test_tie_prefers_nonstable(self):
        # on P^3 with c1=-1 both thresholds sit at 2*alpha = 2
        X = hypersurface(1)
        assert regime(X, BundleInvariants(-1, 2, 1)) is Regime.NONSTABLE_STRONG

    @given(
        st.sampled_from([(1, -4, 6), (2, -3, 8), (3, -2, 12), (5, 0, 50), (2, 2, 24)]),
        st.sampled_from([0, -1]),
        st.integers(min_value=-8, max_value=8),
    )
    @settings(max_examples=150)
    def test_monotone_in_alpha(self, triple, c1, alpha):
        X = Threefold(*triple)
        lower = regime(X, BundleInvariants(c1, 0, alpha))
        higher = regime(X, BundleInvariants(c1, 0, alpha + 1))
        order = {
            Regime.NONSTABLE_STRONG: 0,
            Regime.GAP: 1,
            Regime.STABLE_STRONG: 2,
        }
        assert order[lower] <= order[higher]
