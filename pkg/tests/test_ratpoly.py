from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from heckestab.errors import ConsistencyError, DomainError
from heckestab.constants import fit_stability, normalize_b
from heckestab.partitions import Partition
from heckestab.ratpoly import interpolate


def test_interpolate_quadratic():
    f = interpolate([(2, 2), (3, 6), (4, 12)])
    assert f.coefficients == (Fraction(0), Fraction(-1), Fraction(1))
    assert f.degree == 2
    assert f.format() == "n^2 - n"
    assert f.is_integral
    assert f(7) == 42


def test_interpolate_keeps_exact_fractions():
    g = interpolate([(0, 1), (1, Fraction(1, 2))])
    assert g.coefficients == (Fraction(1), Fraction(-1, 2))
    assert not g.is_integral
    assert g(3) == Fraction(-1, 2)


def test_scale():
    f = interpolate([(0, 4), (1, 4)])
    assert f.scale(Fraction(1, 2)).coefficients == (Fraction(2),)


@given(
    st.lists(
        st.tuples(st.integers(0, 30), st.integers(-50, 50)),
        min_size=1,
        max_size=6,
        unique_by=lambda t: t[0],
    )
)
def test_interpolant_passes_through_every_point(pts):
    f = interpolate(pts)
    for x, v in pts:
        assert f(x) == v
    assert f.degree <= len(pts) - 1


def test_fit_constant_case():
    pts = [(2, 8), (3, 48), (4, 384), (5, 3840)]
    fit = fit_stability(pts, 2)
    assert fit.stable
    assert fit.window_start == 2
    assert fit.degree == 0
    assert fit.polynomial.coefficients == (Fraction(4),)
    assert fit.is_integral
    assert fit.remark_scaled.coefficients == (Fraction(2),)
    assert fit.residuals == ()


def test_fit_quadratic_case():
    pts = [(2, 16), (3, 288), (4, 4608), (5, 76800)]
    fit = fit_stability(pts, 0)
    assert fit.stable
    assert fit.polynomial.format() == "n^2 - n"
    # the fitted law extends to the next rank
    assert 2**6 * 720 * fit.polynomial(6) == 1382400


def test_fit_window_skips_junk_prefix():
    pts = [(1, 999)] + [(2, 16), (3, 288), (4, 4608), (5, 76800)]
    fit = fit_stability(pts, 0)
    assert fit.stable
    assert fit.window_start == 2
    assert len(fit.residuals) == 1
    assert fit.residuals[0] != 0


def test_fit_needs_certifying_slack():
    # three points certify at most a line; a quadratic stays unconfirmed
    fit = fit_stability([(2, 16), (3, 288), (4, 4608)], 0)
    assert not fit.stable
    assert fit.polynomial is None


def test_fit_rejects_bad_inputs():
    with pytest.raises(DomainError):
        fit_stability([(2, 8), (2, 8)], 0)
    with pytest.raises(DomainError):
        fit_stability([(2, 8)], 0)


def test_fit_degree_bound_enforced():
    import math

    pts = [(n, 2**n * math.factorial(n) * n**3) for n in range(2, 8)]
    with pytest.raises(ConsistencyError):
        fit_stability(pts, 0, mu=Partition((1,)), lam=Partition(()))


def test_normalize_b():
    assert normalize_b(2, 8, 2) == Fraction(4)
    assert normalize_b(3, 288, 0) == Fraction(6)
    assert normalize_b(4, 1, 0) == Fraction(1, 384)
