import cmath
import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest

from zkxi.errors import AtPole, AtPoleWithoutLaurent, NearPole, Unsupported
from zkxi.special import (
    bernoulli,
    bernoulli_table,
    chi_jet,
    chi_reflection_value,
    digamma_jet,
    double_factorial,
    loggamma,
    loggamma_jet,
    polygamma,
    rgamma_jet,
    tan_halfpi_direct,
    tan_halfpi_jet,
    theta_and_derivative,
)
from zkxi.verify import EULER_GAMMA, stirling_constant
from zkxi.zk import omega_value

GRID = [complex(a, b) for a in (-3.7, -0.4, 0.3, 1.5, 6.2, 25.0) for b in (-30.0, -2.0, 0.5, 7.0, 45.0)]


def rel(a, b):
    return abs(complex(a) - complex(b)) / max(abs(complex(b)), 1e-300)


def test_bernoulli_conventions():
    t = bernoulli_table()
    assert t.exact[1] == Fraction(-1, 2)
    assert t.exact[2] == Fraction(1, 6) and t.exact[4] == Fraction(-1, 30)
    assert all(t.exact[2 * m + 1] == 0 for m in range(1, 60))
    assert bernoulli(60) == Fraction(mpmath.bernfrac(60)[0], mpmath.bernfrac(60)[1])
    with pytest.raises(Unsupported):
        bernoulli(200)


@pytest.mark.parametrize("n,want", [(5, 15), (1, 1), (-1, 1), (-3, -1), (9, 945)])
def test_double_factorial(n, want):
    assert double_factorial(n) == want


@pytest.mark.parametrize("n", [4, -5])
def test_double_factorial_rejects(n):
    with pytest.raises(Unsupported):
        double_factorial(n)


@pytest.mark.parametrize("z", GRID)
def test_loggamma_against_mpmath(z):
    jet = loggamma_jet(z, 4)
    want = mpmath.taylor(mpmath.loggamma, mpmath.mpc(z), 4)
    for j in range(5):
        assert abs(complex(jet.coefficient(j)) - complex(want[j])) <= 1e-12 * max(1, abs(complex(want[j])))


def test_digamma_anchors():
    assert abs(complex(digamma_jet(1 + 0j, 1).coefficient(0)) + EULER_GAMMA) < 1e-14
    assert abs(complex(digamma_jet(0.5 + 0j, 1).coefficient(0)) - (-EULER_GAMMA - 2 * math.log(2))) < 1e-14
    assert abs(complex(polygamma(1, 2 + 0j)) - (math.pi**2 / 6 - 1)) < 1e-14


def test_digamma_laurent_at_nonpositive_integers():
    # psi(s) = -1/(s + m) + psi(m + 1) + ... near s = -m
    for n in (0, -1, -3):
        jet = digamma_jet(complex(n), 4)
        assert jet.valuation == -1
        assert abs(complex(jet.coefficient(-1)) + 1) < 1e-14
        assert abs(complex(jet.coefficient(0)) - float(mpmath.digamma(1 - n))) < 1e-14


def test_rgamma_zeros_are_exact():
    for n in (0, -1, -2, -5):
        jet = rgamma_jet(complex(n), 6)
        assert jet.valuation == 1
        # residue of Gamma at -m is (-1)^m / m!
        assert abs(complex(jet.coefficient(1)) - (-1) ** n * math.factorial(-n)) < 1e-12 * math.factorial(-n)
    with pytest.raises(AtPole):
        loggamma_jet(-2 + 0j, 3)


def test_gamma_recurrence():
    for s in GRID:
        lhs = cmath.exp(loggamma(s + 1))
        rhs = s * cmath.exp(loggamma(s))
        assert rel(lhs, rhs) < 1e-12


def test_stirling_ratio_bound():
    assert stirling_constant() <= 0.1


def test_psi_against_finite_differences():
    z = 3.3 + 4.1j
    h = 1e-3
    fd = (loggamma(z + h) - loggamma(z - h)) / (2 * h)
    assert rel(digamma_jet(z, 1).coefficient(0), fd) < 1e-6


def test_tan_lattice_values():
    for n in (0, 2, -4):
        jet = tan_halfpi_jet(complex(n), 4)
        assert abs(jet.coefficient(0)) < 1e-16
        assert abs(complex(jet.coefficient(1)) - math.pi / 2) < 1e-14
    pole = tan_halfpi_jet(3 + 0j, 4)
    assert pole.valuation == -1
    assert abs(complex(pole.coefficient(-1)) + 2 / math.pi) < 1e-15


def test_tan_near_pole_raises():
    with pytest.raises(NearPole):
        tan_halfpi_jet(1.01 + 0j, 3)


def test_tan_fast_path():
    v = complex(tan_halfpi_jet(0.5 + 30j, 3).coefficient(0))
    assert abs(v - 1j) < 1e-20 or v == 1j
    exact = complex(mpmath.tan(mpmath.pi * mpmath.mpc(0.5, 30) / 2))
    assert abs(exact - 1j) < 1e-20
    s = 0.7 + 13.5j
    assert rel(tan_halfpi_jet(s, 0).coefficient(0), tan_halfpi_direct(s, 0).coefficient(0)) < 1e-12


def test_chi_fixed_point_and_product():
    assert abs(complex(chi_jet(0.5 + 0j, 0).coefficient(0)) - 1) < 1e-15
    for s in (0.3 + 2j, -1.7 + 11j, 2.5 - 8j):
        c = complex(chi_jet(s, 0).coefficient(0)) * complex(chi_jet(1 - s, 0).coefficient(0))
        assert abs(c - 1) < 1e-10
        assert rel(chi_jet(s, 0).coefficient(0), chi_reflection_value(s)) < 1e-12


def test_chi_on_critical_line():
    for t in (5.0, 20.0, 100.0):
        c = complex(chi_jet(complex(0.5, t), 0).coefficient(0))
        th = theta_and_derivative(t).theta
        assert abs(abs(c) - 1) < 1e-13
        assert abs(c - cmath.exp(-2j * th)) < 1e-12


def test_chi_pole_needs_laurent():
    with pytest.raises(AtPoleWithoutLaurent):
        chi_jet(3 + 0j, 2)
    assert chi_jet(3 + 0j, 2, laurent=True).valuation == -1
    assert chi_jet(-2 + 0j, 2).valuation == 1


def test_theta_against_mpmath():
    assert theta_and_derivative(0.0).theta == 0
    for t in (1.0, 14.1, 100.0, 999.0):
        v = theta_and_derivative(t)
        assert abs(v.theta - float(mpmath.siegeltheta(t))) < 1e-11 * max(1, t)
        assert abs(v.theta_prime - float(mpmath.siegeltheta(t, derivative=1))) < 1e-13
        w = theta_and_derivative(-t)
        assert w.theta == pytest.approx(-v.theta, abs=1e-12)
        assert w.theta_prime == pytest.approx(v.theta_prime, abs=1e-14)


def test_theta_is_continuous():
    ts = np.linspace(0, 300, 3001)
    th = np.array([theta_and_derivative(t).theta for t in ts])
    assert np.max(np.abs(np.diff(th))) < 1.0


@pytest.mark.parametrize("t", [5.0, 20.0, 100.0])
def test_omega_is_minus_twice_theta_prime(t):
    w = complex(omega_value(complex(0.5, t)))
    assert abs(w + 2 * theta_and_derivative(t).theta_prime) < 1e-10
