import cmath
import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from scipy.integrate import quad

from hardysums import spectral
from hardysums.errors import DomainError
from hardysums.spectral import (
    EisensteinParams,
    eisenstein_direct,
    eisenstein_fourier,
    gamma_complex,
    perron_partial,
    whittaker_W,
    z_partial,
)

R8 = Fraction(1, 8)


# ---------------------------------------------------------------- gamma

def test_gamma_trivial():
    assert abs(gamma_complex(1) - 1) < 1e-14
    assert abs(gamma_complex(5) - 24) < 1e-12


def test_gamma_half_against_quadrature():
    # independent oracle: Gamma(1/2) = int_0^inf t^(-1/2) e^(-t) dt
    oracle = quad(lambda t: math.exp(-t) / math.sqrt(t), 0, np.inf)[0]
    assert abs(gamma_complex(0.5) - oracle) < 1e-9


def test_gamma_recurrence_and_reflection(rng):
    for _ in range(80):
        s = complex(rng.uniform(-8, 8), rng.uniform(0.1, 8) * (1 if rng.integers(2) else -1))
        lhs = gamma_complex(s + 1)
        rhs = s * gamma_complex(s)
        assert abs(lhs - rhs) / abs(rhs) < 1e-10
        refl = gamma_complex(s) * gamma_complex(1 - s)
        assert abs(refl - math.pi / cmath.sin(math.pi * s)) / abs(refl) < 1e-10


def test_gamma_against_mpmath(rng):
    for _ in range(40):
        s = complex(rng.uniform(-6, 6), rng.uniform(0.05, 6))
        ref = complex(mpmath.gamma(s))
        assert abs(gamma_complex(s) - ref) / abs(ref) < 1e-12


def test_gamma_poles():
    for k in (0, -1, -5):
        with pytest.raises(DomainError):
            gamma_complex(k)


# ------------------------------------------------------------ whittaker

@pytest.mark.parametrize("x", [0.5, 1.0, 2.5, 5.0, 12.0, 20.0])
def test_whittaker_exponential_case(x):
    assert abs(whittaker_W(0.0, 0.5, x) - math.exp(-x / 2)) < 1e-10


def test_whittaker_against_mpmath():
    cases = [(0.25, 1.5 + 0.5j, 2.0), (-0.25, 1.5 + 0.5j, 6.3), (0.3, 0.9 - 0.2j, 1.3)]
    for k, mu, x in cases:
        ref = complex(mpmath.whitw(k, mu, x))
        got = whittaker_W(k, mu, x)
        assert abs(got - ref) / abs(ref) < 1e-8


def test_whittaker_asymptotic():
    k, mu = 0.25, 1.5 + 0.5j
    x = 50.0
    ratio = whittaker_W(k, mu, x) / (math.exp(-x / 2) * x**k)
    assert abs(ratio - 1) < 0.05


def test_whittaker_mu_symmetry(rng):
    for _ in range(15):
        k = rng.uniform(-0.4, 0.4)
        mu = complex(rng.uniform(-0.05, 0.05), rng.uniform(-1, 1))
        x = rng.uniform(0.5, 8)
        assert abs(whittaker_W(k, mu, x) - whittaker_W(k, -mu, x)) < 1e-10


def test_whittaker_domain():
    with pytest.raises(DomainError):
        whittaker_W(0.0, 0.5, -1.0)
    with pytest.raises(DomainError):
        whittaker_W(3.0, 0.5, 1.0)  # Re(mu - kappa + 1/2) < 0


# ------------------------------------------------------------- z series

def test_z_leading_terms():
    # c = 1 contributes nothing; c = 2 contributes (-1)^n / 4^s.
    for n in (0, 1, 3, -2):
        point = z_partial(R8, n, 2 + 0j, 2)
        assert abs(point.value - (-1) ** n / 16) < 1e-14


def test_z_stability_between_truncations():
    a = z_partial(R8, 0, 2 + 0j, 1000)
    b = z_partial(R8, 0, 2 + 0j, 2000)
    assert abs(a.value - b.value) < 1e-4


def test_z_tail_monotone():
    a = z_partial(R8, 0, 2 + 0.5j, 1000)
    b = z_partial(R8, 0, 2 + 0.5j, 2000)
    assert 0 <= b.tail_bound < a.tail_bound


def test_z_domain():
    with pytest.raises(DomainError):
        z_partial(R8, 0, 1.0 + 2j, 100)
    with pytest.raises(DomainError):
        z_partial(0.125, 0, 2.0, 100)  # float r rejected


# ----------------------------------------------------------- eisenstein

PARAMS = EisensteinParams(r=R8, s=2 + 0.5j, z=0.2 + 1j, c_max=300, d_span=50, n_max=6)


@pytest.fixture(scope="module")
def direct_value():
    return eisenstein_direct(PARAMS)


def test_eisenstein_params_domain():
    with pytest.raises(DomainError):
        EisensteinParams(r=R8, s=0.9 + 1j, z=1j, c_max=100)
    with pytest.raises(DomainError):
        EisensteinParams(r=R8, s=2.0, z=1.0 + 0j, c_max=100)


def test_eisenstein_shift_invariance():
    p1 = EisensteinParams(r=R8, s=2 + 0.5j, z=0.3 + 1.1j, c_max=200, d_span=50, n_max=4)
    p2 = EisensteinParams(r=R8, s=2 + 0.5j, z=2.3 + 1.1j, c_max=200, d_span=50, n_max=4)
    v1, v2 = eisenstein_direct(p1), eisenstein_direct(p2)
    assert abs(v1.value - v2.value) < v1.tail_bound


def test_eisenstein_refinement(direct_value):
    half = EisensteinParams(r=R8, s=2 + 0.5j, z=0.2 + 1j, c_max=150, d_span=50, n_max=6)
    coarse = eisenstein_direct(half)
    assert abs(coarse.value - direct_value.value) < coarse.tail_bound


def test_eisenstein_budget():
    from hardysums.errors import ResourceBudgetError

    with pytest.raises(ResourceBudgetError):
        eisenstein_direct(PARAMS, term_budget=1000)


def test_fourier_agreement(direct_value):
    fourier = eisenstein_fourier(PARAMS)
    assert abs(fourier - direct_value.value) / abs(direct_value.value) < 1e-4


def test_whittaker_argument_convention(direct_value):
    # The 2 pi |n| y reading fits; the 4 pi |n| y reading does not.
    good = eisenstein_fourier(PARAMS, freq_scale=2.0)
    bad = eisenstein_fourier(PARAMS, freq_scale=4.0)
    rel_good = abs(good - direct_value.value) / abs(direct_value.value)
    rel_bad = abs(bad - direct_value.value) / abs(direct_value.value)
    assert rel_good < 1e-4 < rel_bad


def test_fourier_mode_truncation():
    small = EisensteinParams(r=R8, s=2 + 0.5j, z=0.2 + 1j, c_max=150, d_span=50, n_max=8)
    big = EisensteinParams(r=R8, s=2 + 0.5j, z=0.2 + 1j, c_max=150, d_span=50, n_max=12)
    assert abs(eisenstein_fourier(small) - eisenstein_fourier(big)) < 1e-6


def test_zeroth_coefficient_quadrature():
    # (1/2) int_{-1}^{1} E(x + iy) dx == y^(s-2r) + Phi0(s) y^(1-s-2r),
    # trapezoid on 64 nodes of the periodic direct sum.
    r, s, y, c_max = R8, 2 + 0.5j, 1.1, 150
    nodes = 64
    total = 0j
    for k in range(nodes):
        x = -1 + 2 * k / nodes
        p = EisensteinParams(r=r, s=s, z=complex(x, y), c_max=c_max, d_span=50, n_max=1)
        total += eisenstein_direct(p).value
    quad_coeff = total / nodes
    two_r = float(2 * r)
    d0 = spectral.coefficient_series(r, [0], s, c_max)[0].value
    phi0 = (
        cmath.exp(-1j * math.pi * two_r)
        * math.pi
        * 2 ** (1 - 2 * s)
        * gamma_complex(2 * s - 1)
        / (gamma_complex(s - two_r) * gamma_complex(s + two_r))
        * d0
    )
    closed = y ** (s - two_r) + phi0 * y ** (1 - s - two_r)
    assert abs(quad_coeff - closed) / abs(closed) < 1e-3


# --------------------------------------------------------------- perron

def test_perron_hand_value():
    check = perron_partial(Fraction(1, 2), 0, 2.5, 50.0, 1.25, c_max=500)
    assert check.exact == -1
    assert abs(check.value - check.exact) < 0.15


def test_perron_calibration():
    check = perron_partial(Fraction(1, 2), 0, 10.5, 200.0, 1.25, c_max=2000)
    assert check.exact == -4
    assert check.rel_error < 0.15


def test_perron_trend():
    coarse = perron_partial(Fraction(1, 2), 0, 10.5, 100.0, 1.25, c_max=2000)
    fine = perron_partial(Fraction(1, 2), 0, 10.5, 200.0, 1.25, c_max=2000)
    assert fine.rel_error < coarse.rel_error


def test_perron_domain():
    with pytest.raises(DomainError):
        perron_partial(Fraction(1, 2), 0, 10.0, 100.0, 1.25)
    with pytest.raises(DomainError):
        perron_partial(Fraction(1, 2), 0, 10.5, 100.0, 0.9)
