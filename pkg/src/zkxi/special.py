"""Classical special functions as jets.

log Gamma comes from the Stirling series after shifting the argument with
``log Gamma(z) = log Gamma(z + m) - sum(log(z + j), j < m)``.  The shifted
logarithms are principal, so the result is continuous on vertical lines in
the right half plane and ``theta(t)`` needs no phase unwrapping.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from . import _num
from .config import EvalConfig, resolve
from .errors import AtPole, AtPoleWithoutLaurent, NearPole, Unsupported
from .jets import CJet, jexp, tan_series

BERNOULLI_M = 60


@dataclass(frozen=True)
class BernoulliTable:
    """``B_0 .. B_{2M}`` with the ``B_1 = -1/2`` convention."""

    M: int
    exact: tuple
    values: tuple

    def __getitem__(self, n: int) -> float:
        return self.values[n]


@functools.lru_cache(maxsize=None)
def bernoulli_table(M: int = BERNOULLI_M) -> BernoulliTable:
    # sum_{j<=m} C(m+1, j) B_j = 0
    B = [Fraction(1)]
    for m in range(1, 2 * M + 1):
        acc = Fraction(0)
        binom = 1
        for j in range(m):
            acc += binom * B[j]
            binom = binom * (m + 1 - j) // (j + 1)
        B.append(-acc / (m + 1))
    return BernoulliTable(M, tuple(B), tuple(b.numerator / b.denominator for b in B))


def bernoulli(n: int) -> Fraction:
    table = bernoulli_table()
    if n > 2 * table.M:
        raise Unsupported(f"B_{n} beyond the table (2M = {2 * table.M})")
    return table.exact[n]


def double_factorial(n: int) -> int:
    """``n!!`` for odd ``n >= -3`` with ``(-1)!! = 1`` and ``(-3)!! = -1``."""
    if n % 2 == 0 or n < -3:
        raise Unsupported(f"{n}!! is only defined here for odd n >= -3")
    if n == -3:
        return -1
    out = 1
    for m in range(n, 0, -2):
        out *= m
    return out


# ----------------------------------------------------------------------
# helpers


def _recenter(jet: CJet, center) -> CJet:
    return CJet(center, jet.valuation, jet.coeffs)


def _inverse_linear(a0, K) -> list:
    """Coefficients of ``1 / (a0 + x)``."""
    out = []
    p = 1 / a0
    for _ in range(K + 1):
        out.append(p)
        p = -p / a0
    return out


def _nonpositive_int(z):
    n = _num.exact_int(z)
    if n is not None and n <= 0:
        return n
    return None


def _stirling_params(cfg: EvalConfig, be):
    if be is _num.MP:
        return max(cfg.stirling_shift, 30.0), max(cfg.stirling_terms, 30)
    return cfg.stirling_shift, cfg.stirling_terms


def _shift_count(z0, threshold) -> int:
    m = 0
    while (z0 + m).real < 0.5 or abs(z0 + m) < threshold:
        m += 1
    return m


# ----------------------------------------------------------------------
# Gamma family


def loggamma_jet(s0, K: int, cfg: EvalConfig | None = None) -> CJet:
    """Jet of ``log Gamma`` about ``s0``; coefficient ``j >= 1`` is ``psi^{(j-1)}(s0)/j!``."""
    cfg = resolve(cfg)
    if _nonpositive_int(s0) is not None:
        raise AtPole(f"log Gamma has a pole at {s0}")
    be = _num.backend(s0)
    shift, terms = _stirling_params(cfg, be)
    z0 = s0 * 1
    m = _shift_count(z0, shift)
    z = z0 + m
    B = bernoulli_table().exact
    half = be.real(Fraction(1, 2))

    logz = be.log(z)
    c = [(z - half) * logz - z + half * be.log(2 * be.pi())]
    # (z - 1/2) log z - z expanded about z: derivative is log z - 1/(2z)
    if K >= 1:
        c.append(logz - half / z)
    for n in range(2, K + 1):
        # n-th derivative: (-1)^n (n-2)! / z^(n-1) + (-1)^n (n-1)! / (2 z^n)
        t1 = (-1) ** n * math.factorial(n - 2) / z ** (n - 1)
        t2 = (-1) ** n * half * math.factorial(n - 1) / z**n
        c.append((t1 + t2) / math.factorial(n))
    # Bernoulli tail sum_r B_2r / (2r(2r-1)) z^-(2r-1), expanded term by term
    for r in range(1, terms + 1):
        b = be.real(B[2 * r] / (2 * r * (2 * r - 1)))
        p = 2 * r - 1
        base = b / z**p
        binom = 1
        for j in range(K + 1):
            c[j] = c[j] + base * binom
            binom = binom * -(p + j) // (j + 1)
            base = base / z
    # undo the shift: subtract sum_j log(z0 + j)
    for j in range(m):
        a0 = z0 + j
        c[0] = c[0] - be.log(a0)
        p = 1 / a0
        for n in range(1, K + 1):
            c[n] = c[n] - (-1) ** (n + 1) * p / n
            p = p / a0
    return CJet.make(s0, 0, c)


def loggamma(z, cfg: EvalConfig | None = None):
    return loggamma_jet(z, 0, cfg).coeffs[0]


def digamma_jet(s0, K: int, cfg: EvalConfig | None = None) -> CJet:
    """Jet of ``psi = Gamma'/Gamma``; Laurent (residue -1) at non-positive integers."""
    n = _nonpositive_int(s0)
    if n is None:
        return loggamma_jet(s0, K + 1, cfg).d()
    one = s0 * 0 + 1
    # psi(s) = psi(s + 1 - n) - sum_{j=0}^{-n} 1/(s + j)
    jet = _recenter(loggamma_jet(one, K + 1, cfg).d(), s0)
    for j in range(-n + 1):
        a0 = s0 + j
        if a0 == 0:
            inv = CJet.monomial(s0, -1, K)
        else:
            inv = CJet.make(s0, 0, _inverse_linear(a0, K))
        jet = jet - inv
    return jet


def rgamma_jet(s0, K: int, cfg: EvalConfig | None = None) -> CJet:
    """Jet of the entire function ``1/Gamma``; zeros at non-positive integers carried exactly."""
    n = _nonpositive_int(s0)
    if n is None:
        return jexp(-loggamma_jet(s0, K, cfg))
    one = s0 * 0 + 1
    jet = _recenter(jexp(-loggamma_jet(one, K, cfg)), s0)
    for j in range(-n + 1):
        jet = jet * (CJet.variable(s0, K) + j)
    return jet


def polygamma(m: int, z, cfg: EvalConfig | None = None):
    """``psi^{(m)}(z)`` read off the log Gamma jet."""
    jet = loggamma_jet(z, m + 1, cfg)
    return jet.derivative(m + 1)


# ----------------------------------------------------------------------
# tan(pi s / 2)

_FAST_PATH_IM = 13.0  # 2 exp(-pi * 13) < 4e-18


def _tan_lattice_coeffs(odd: bool, K: int, be) -> list:
    """Laurent (odd center) or Taylor (even center) coefficients of tan(pi s/2)."""
    B = bernoulli_table().exact
    h = be.pi() / 2
    if odd:
        # -cot(h x) = -sum_i (-1)^i 4^i B_2i (h x)^(2i-1) / (2i)!
        v = -1
        out = []
        for p in range(v, v + K + 1):
            if p % 2 == 0:
                out.append(be.num(0))
                continue
            i = (p + 1) // 2
            coef = -((-1) ** i) * 4**i * be.real(B[2 * i]) / math.factorial(2 * i)
            out.append(be.num(coef * h**p))
        return out
    out = []
    for p in range(K + 1):
        if p % 2 == 0:
            out.append(be.num(0))
            continue
        i = (p + 1) // 2
        coef = (-1) ** (i - 1) * 4**i * (4**i - 1) * be.real(B[2 * i]) / math.factorial(2 * i)
        out.append(be.num(coef * h**p))
    return out


def tan_halfpi_jet(s0, K: int, cfg: EvalConfig | None = None) -> CJet:
    """Jet of ``tan(pi s/2)``; Laurent with residue ``-2/pi`` at an odd-integer center."""
    cfg = resolve(cfg)
    be = _num.backend(s0)
    n = _num.exact_int(s0)
    if n is not None:
        if n % 2:
            return CJet(s0, -1, tuple(_tan_lattice_coeffs(True, K, be)))
        return CJet.make(s0, 0, _tan_lattice_coeffs(False, K, be))
    odd = 2 * math.floor(complex(s0).real / 2) + 1
    if abs(s0 - odd) < cfg.lattice_delta:
        raise NearPole(f"{s0} is within {cfg.lattice_delta} of the pole at {odd}")
    im = complex(s0).imag
    if abs(im) > _FAST_PATH_IM:
        unit = be.num(1j if im > 0 else -1j)
        return CJet.constant(unit, s0, K)
    u0 = be.pi() * s0 / 2
    du = [u0, be.pi() / 2] + [be.num(0)] * max(K - 1, 0)
    return CJet.make(s0, 0, tan_series(be.tan(u0), du[: K + 1]))


def tan_halfpi_direct(s0, K: int) -> CJet:
    """Same jet without the fast path (reference for tests and diagnostics)."""
    be = _num.backend(s0)
    u0 = be.pi() * s0 / 2
    du = [u0, be.pi() / 2] + [be.num(0)] * max(K - 1, 0)
    return CJet.make(s0, 0, tan_series(be.tan(u0), du[: K + 1]))


# ----------------------------------------------------------------------
# chi(s) = Gamma((1-s)/2) / Gamma(s/2) * pi^(s - 1/2)


def _pi_power_jet(s0, K, be, alpha, beta) -> CJet:
    """Jet of ``pi^(alpha*s + beta)``."""
    lp = be.log(be.pi())
    return jexp(CJet.variable(s0, K) * (alpha * lp) + beta * lp)


def log_chi_jet(s0, K: int, cfg: EvalConfig | None = None) -> CJet:
    be = _num.backend(s0)
    half = be.real(Fraction(1, 2))
    left = loggamma_jet((1 - s0) / 2, K, cfg).compose_affine(-half, s0)
    right = loggamma_jet(s0 / 2, K, cfg).compose_affine(half, s0)
    lp = be.log(be.pi())
    return left - right + (CJet.variable(s0, K) - half) * lp


def is_chi_lattice(s0) -> bool:
    n = _num.exact_int(s0)
    return n is not None and ((n <= 0 and n % 2 == 0) or (n > 0 and n % 2 == 1))


def chi_jet(s0, K: int, cfg: EvalConfig | None = None, laurent: bool = False) -> CJet:
    """Jet of ``chi``; zeros at non-positive evens, poles (``laurent=True``) at positive odds."""
    n = _num.exact_int(s0)
    be = _num.backend(s0)
    if n is not None and n > 0 and n % 2 == 1 and not laurent:
        raise AtPoleWithoutLaurent(f"chi has a pole at {n}")
    if is_chi_lattice(s0):
        half = be.real(Fraction(1, 2))
        num = rgamma_jet(s0 / 2, K, cfg).compose_affine(half, s0)
        den = rgamma_jet((1 - s0) / 2, K, cfg).compose_affine(-half, s0)
        return num / den * _pi_power_jet(s0, K, be, 1, -half)
    return jexp(log_chi_jet(s0, K, cfg))


def chi_reflection_value(s):
    """``2^s pi^(s-1) sin(pi s/2) Gamma(1-s)`` evaluated directly (cross-check path)."""
    be = _num.backend(s)
    return (
        be.exp(s * be.log(2 * be.num(1)) + (s - 1) * be.log(be.pi()))
        * be.sin(be.pi() * s / 2)
        * be.exp(loggamma(1 - s))
    )


# ----------------------------------------------------------------------
# Riemann-Siegel theta


@dataclass(frozen=True)
class ThetaValue:
    t: float
    theta: float
    theta_prime: float


def theta_and_derivative(t: float, cfg: EvalConfig | None = None) -> ThetaValue:
    """``theta(t) = arg Gamma(1/4 + it/2) - (t/2) log pi`` and its derivative."""
    z = complex(0.25, 0.5 * t)
    jet = loggamma_jet(z, 1, cfg)
    lp = math.log(math.pi)
    theta = jet.coeffs[0].imag - 0.5 * t * lp
    theta_prime = 0.5 * jet.coeffs[1].real - 0.5 * lp
    return ThetaValue(t, theta, theta_prime)
