import math

import mpmath
import pytest

from zkxi.errors import (
    BranchCut,
    CenterMismatch,
    DivisionByZeroJet,
    InvalidValuation,
    OrderExceeded,
)
from zkxi.jets import CJet, jet_arith, jet_derivative_extract, jet_elementary
from zkxi.zeta import zeta_jet


def x(order, center=0j):
    return CJet.variable(center, order) - center


def close(a, b, tol=1e-14):
    return abs(complex(a) - complex(b)) <= tol * max(1.0, abs(complex(b)))


def test_polynomial_product():
    one = CJet.constant(1 + 0j, 0j, 2)
    p = jet_arith(one + x(2), one - x(2), "mul")
    assert p.valuation == 0
    assert [p.coefficient(j) for j in range(3)] == [1, 0, -1]


def test_pole_cancels_in_product():
    inv = CJet.make(0j, -1, [1, 1, 0, 0])
    p = inv * CJet.make(0j, 1, [1, 0, 0, 0])
    assert p.valuation == 0
    assert p.coefficient(0) == 1 and p.coefficient(1) == 1


def test_sinc_by_division():
    K = 10
    q = jet_arith(jet_elementary(x(K), "sin"), x(K), "div")
    assert q.valuation == 0
    for j in range(K):
        want = 0 if j % 2 else (-1) ** (j // 2) / math.factorial(j + 1)
        assert close(q.coefficient(j), want)


def test_center_mismatch():
    with pytest.raises(CenterMismatch):
        CJet.variable(0j, 3) + CJet.variable(1 + 0j, 3)


def test_divide_by_zero_jet():
    with pytest.raises(DivisionByZeroJet):
        CJet.constant(1 + 0j, 0j, 3) / CJet.constant(0j, 0j, 3)


def test_exp_series():
    e = jet_elementary(x(8), "exp")
    for j in range(9):
        assert close(e.coefficient(j), 1 / math.factorial(j))
    assert close(jet_derivative_extract(e, 5), 1)


def test_sqrt_binomial_series():
    a = CJet.make(0j, 0, [4, 1, 0, 0, 0, 0])
    r = jet_elementary(a, "pow", alpha=0.5)
    want = [mpmath.binomial(0.5, j) * 2 * (1 / 4) ** j for j in range(6)]
    for j in range(6):
        assert close(r.coefficient(j), complex(want[j]))
    assert close(r.coefficient(1), 0.25) and close(r.coefficient(2), -1 / 64)


def test_log_needs_regular_jet():
    with pytest.raises(InvalidValuation):
        jet_elementary(CJet.make(0j, -1, [1, 0]), "log")


def test_branch_cut_is_flagged():
    a = CJet.make(0j, 0, [-2 + 0j, 1, 0])
    with pytest.raises(BranchCut):
        jet_elementary(a, "log")
    assert close(jet_elementary(a, "log", branch="principal").coefficient(0), complex(math.log(2), math.pi))


def test_tan_matches_mpmath():
    a = CJet.make(0j, 0, [0.3 + 0.2j, 1, 0, 0, 0, 0, 0])
    t = jet_elementary(a, "tan")
    want = mpmath.taylor(mpmath.tan, mpmath.mpc(0.3, 0.2), 6)
    for j in range(7):
        assert close(t.coefficient(j), complex(want[j]), 1e-13)


def test_derivative_extract():
    a = CJet.make(0j, 0, [1, 2, 3])
    assert jet_derivative_extract(a, 2) == 6
    with pytest.raises(OrderExceeded):
        jet_derivative_extract(a, 3)


def test_zeta_prime_at_two():
    z = zeta_jet(2 + 0j, 3)
    assert close(jet_derivative_extract(z, 1), complex(mpmath.zeta(2, derivative=1)), 1e-13)
    assert abs(jet_derivative_extract(z, 1) - (-0.9375482543)) < 1e-10


def test_tight_valuation_after_cancellation():
    a = CJet.make(0j, -2, [1e-20, 1, 2, 3])
    assert a.valuation == -1


def test_richardson_finite_differences():
    f = lambda s: mpmath.exp(mpmath.sin(s)) / (2 + s)
    s0 = 0.4 + 0.3j
    K = 4
    v = CJet.variable(s0, K)
    jet = jet_elementary(jet_elementary(v, "sin"), "exp") / (2 + v)
    for j in range(1, K + 1):
        def fd(h):
            return mpmath.diff(f, s0, j, h=h, method="step")
        h = 1e-2
        rich = (4 * fd(h / 2) - fd(h)) / 3
        assert abs(complex(jet.derivative(j)) - complex(rich)) <= 1e-6 * max(1, abs(complex(rich)))


def test_eval_at_sums_series():
    e = jet_elementary(x(20), "exp")
    assert close(e.eval_at(0.1), math.exp(0.1))
