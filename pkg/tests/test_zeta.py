import cmath
import math

import mpmath
import numpy as np
import pytest

from zkxi.errors import ParamsInsufficient
from zkxi.special import chi_jet
from zkxi.verify import EULER_GAMMA, lattice_avoiding_grid
from zkxi.zeta import EMParams, default_params, zeta, zeta_jet

SAMPLES = [2 + 0j, 0.5 + 14.134725j, -2.5 + 40j, 3.3 - 7.1j, 0.2 + 300j, -1.5 + 2j, 0.5 + 950j]


def rel(a, b):
    return abs(complex(a) - complex(b)) / max(abs(complex(b)), 1e-300)


def test_zeta_two():
    assert abs(complex(zeta(2 + 0j)) - math.pi**2 / 6) < 1e-15


def test_zeta_at_zero_and_its_derivative():
    jet = zeta_jet(0j, 2)
    assert abs(complex(jet.coefficient(0)) + 0.5) < 1e-15
    assert abs(complex(jet.coefficient(1)) + 0.5 * math.log(2 * math.pi)) < 1e-10


def test_laurent_at_one():
    jet = zeta_jet(1 + 0j, 3)
    assert jet.valuation == -1
    assert abs(complex(jet.coefficient(-1)) - 1) < 1e-14
    assert abs(complex(jet.coefficient(0)) - EULER_GAMMA) < 1e-13
    # first Stieltjes constant as an independent reference
    assert abs(complex(jet.coefficient(1)) + float(mpmath.stieltjes(1))) < 1e-12


def test_trivial_zero_is_exact():
    jet = zeta_jet(-4 + 0j, 2)
    assert jet.valuation == 1
    assert jet.coefficient(0) == 0


@pytest.mark.parametrize("s", SAMPLES)
def test_zeta_jet_against_mpmath(s):
    K = 6
    jet = zeta_jet(s, K)
    mpmath.mp.dps = 30
    try:
        for j in range(K + 1):
            want = complex(mpmath.zeta(mpmath.mpc(s), derivative=j)) / math.factorial(j)
            assert abs(complex(jet.coefficient(j)) - want) <= 1e-10 * max(1.0, abs(want))
    finally:
        mpmath.mp.dps = 15


def test_cauchy_circle_oracle():
    s0, r, n = 2.5 + 10j, 0.5, 64
    pts = [s0 + r * cmath.exp(2j * math.pi * m / n) for m in range(n)]
    vals = [complex(zeta(p)) for p in pts]
    jet = zeta_jet(s0, 2)
    for j in range(3):
        cj = sum(v * cmath.exp(-2j * math.pi * m * j / n) for m, v in enumerate(vals)) / n / r**j
        assert rel(jet.coefficient(j), cj) < 1e-10


def test_functional_equation_grid():
    worst = 0.0
    for s in lattice_avoiding_grid():
        lhs = complex(zeta(s))
        rhs = complex(chi_jet(s, 0).coefficient(0)) * complex(zeta(1 - s))
        worst = max(worst, rel(lhs, rhs))
    assert worst < 1e-9


@pytest.mark.parametrize("s", [0.5 + 40j, 3 - 20j, -2 + 5j])
def test_parameter_robustness(s):
    p = default_params(s)
    a = zeta_jet(s, 6, p)
    b = zeta_jet(s, 6, EMParams(2 * p.N, min(2 * p.R, 28)))
    for j in range(7):
        assert rel(a.coefficient(j), b.coefficient(j)) < 1e-9


def test_dirichlet_regime():
    for s in (6 + 0j, 6 + 30j, 9 - 3j, 12 + 50j):
        direct = sum(n ** (-s) for n in range(1, 51))
        tail = complex(mpmath.zeta(mpmath.mpc(s), 51))
        assert abs(complex(zeta(s)) - direct - tail) < 1e-15
        if s.real >= 9:
            assert abs(complex(zeta(s)) - direct) < 1e-12


def test_too_few_terms_raise():
    with pytest.raises(ParamsInsufficient):
        zeta_jet(0.5 + 400j, 2, EMParams(10, 2))


def test_compensated_backend_agrees():
    mpmath.mp.dps = 34
    try:
        s = mpmath.mpc("0.5", "25")
        z = zeta_jet(s, 2)
        assert abs(z.coefficient(0) - mpmath.zeta(s)) < mpmath.mpf(10) ** -28
    finally:
        mpmath.mp.dps = 15
    assert np.isfinite(abs(complex(zeta(0.5 + 25j))))
