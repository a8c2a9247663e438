import cmath
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ratiolab import (
    SQRT3,
    ToleranceConfig,
    approx_eq,
    in_gamma,
    principal_sqrt,
)
from ratiolab.kernel import DEFAULT_TOL

finite_reals = st.floats(
    min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False
)


def off_cut(z: complex) -> bool:
    return abs(z.imag) > 1e-9 or z.real > 1e-9


def test_sqrt_positive_real():
    assert principal_sqrt(4) == 2


def test_sqrt_zero():
    assert principal_sqrt(0) == 0


def test_sqrt_of_i_squares_back():
    r = principal_sqrt(1j)
    assert abs(r * r - 1j) < 4e-16
    assert abs(r - (1 + 1j) / math.sqrt(2)) < 1e-15


def test_sqrt_on_cut_takes_upper_limit():
    assert principal_sqrt(-4) == 2j
    # a negative zero imaginary part must not flip the side
    assert principal_sqrt(complex(-4.0, -0.0)) == 2j


def test_sqrt_rejects_nonfinite():
    with pytest.raises(ValueError):
        principal_sqrt(complex(float("nan"), 0))
    with pytest.raises(ValueError):
        principal_sqrt(complex(1, float("inf")))


@given(finite_reals, finite_reals)
def test_sqrt_squares_back(re, im):
    z = complex(re, im)
    r = principal_sqrt(z)
    assert abs(r * r - z) <= 1e-12 * max(abs(z), 1e-300)


@given(finite_reals, finite_reals)
def test_sqrt_nonnegative_real_part(re, im):
    r = principal_sqrt(complex(re, im))
    assert r.real >= 0.0
    if r.real == 0.0:
        assert r.imag >= 0.0


@given(finite_reals, finite_reals)
def test_sqrt_strictly_positive_off_cut(re, im):
    z = complex(re, im)
    if off_cut(z):
        assert principal_sqrt(z).real > 0.0


@given(finite_reals, finite_reals)
def test_sqrt_conjugation_off_cut(re, im):
    z = complex(re, im)
    if off_cut(z):
        assert principal_sqrt(z.conjugate()) == principal_sqrt(z).conjugate()


@given(
    st.floats(min_value=1e-6, max_value=1e6),
    st.floats(min_value=-1e6, max_value=1e6, allow_nan=False),
)
def test_sqrt_of_square_recovers_right_half_plane(re, im):
    z = complex(re, im)
    assert abs(principal_sqrt(z * z) - z) <= 1e-12 * abs(z)


def test_in_gamma_examples():
    assert in_gamma(-5)
    assert in_gamma(0)
    assert not in_gamma(1 + 1j)
    assert not in_gamma(1e-6)
    assert in_gamma(complex(-1, 5e-10))


def test_approx_eq_examples():
    assert approx_eq(1, 1, 1e-9)
    assert not approx_eq(1, 1 + 2e-9j, 1e-9)
    with pytest.raises(ValueError):
        approx_eq(1, 1, 0.0)


def test_approx_eq_against_family_ratio():
    # direct ratio of the roots +-i(1-4i), 2(1-4i): sigma1 = 1/3 + i/3
    from ratiolab import order_roots, ratios_direct

    c = order_roots(-4 - 1j, 2 - 8j, 4 + 1j)
    rv = ratios_direct(c)
    assert approx_eq(complex(1 / 3, 1 / 3), rv.sigma1, 1e-10)


def test_tolerance_validation():
    with pytest.raises(ValueError):
        ToleranceConfig(eq_tol=0.0)
    with pytest.raises(ValueError):
        ToleranceConfig(eq_tol=1e-6, boundary_tol=1e-9)
    t = ToleranceConfig()
    assert t.eq_tol <= t.boundary_tol
    assert DEFAULT_TOL.identity_tol == 1e-10


def test_sqrt3_constant():
    assert SQRT3 == math.sqrt(3.0)
    assert cmath.isclose(SQRT3 * SQRT3, 3.0, rel_tol=1e-15)
