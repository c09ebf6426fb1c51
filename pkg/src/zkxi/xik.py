"""The entire functions

    xi_k(s) = pi^(-s/2) s (s-1) Z_k(s) / (Gamma(s/2)^(k-1) Gamma((1-s)/2)^k),

their Hadamard constants at the origin and their closed-form values at
positive integers.

Away from the lattice the prefactor is assembled in log space, so large and
small Gamma values never meet in floating point.  At a lattice point the
poles of ``Z_k`` are cancelled formally: every factor is a Laurent jet built
about the lattice point, with the zeros of ``1/Gamma`` carried exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import _num
from .config import EvalConfig, resolve
from .errors import CancellationFailure
from .jets import CJet, jexp
from .special import bernoulli, double_factorial, loggamma_jet, rgamma_jet
from .zeta import zeta_jet
from .zk import (
    _SNAP_EXTRA,
    nearest_lattice,
    partition_sum,
    zk_jets_binomial,
)


def _log_prefactor_jet(s0, k: int, K: int, cfg: EvalConfig) -> CJet:
    """``-(s/2) log pi - (k-1) log Gamma(s/2) - k log Gamma((1-s)/2)``."""
    be = _num.backend(s0)
    half = be.real(Fraction(1, 2))
    lp = be.log(be.pi())
    s = CJet.variable(s0, K)
    out = s * (-half * lp)
    if k != 1:
        out = out - loggamma_jet(s0 / 2, K, cfg).compose_affine(half, s0) * (k - 1)
    if k != 0:
        out = out - loggamma_jet((1 - s0) / 2, K, cfg).compose_affine(-half, s0) * k
    return out


def _lattice_jet(m, k: int, K: int, cfg: EvalConfig) -> tuple[CJet, float]:
    """Cancelled quotient at a lattice point, with the size of any leftover pole part."""
    be = _num.backend(m)
    half = be.real(Fraction(1, 2))
    s = CJet.variable(m, K)
    pi_part = jexp(s * (-half * be.log(be.pi())))
    g1 = rgamma_jet(m / 2, K, cfg).compose_affine(half, m)
    g2 = rgamma_jet((1 - m) / 2, K, cfg).compose_affine(-half, m)
    z = zk_jets_binomial(m, k, K, cfg)[k]
    jet = pi_part * s * (s - 1) * z
    jet = jet * g1 ** (k - 1) if k >= 1 else jet / g1
    jet = jet * g2**k
    leftover = 0.0
    if jet.valuation < 0:
        scale = max(abs(c) for c in jet.coeffs)
        leftover = max(float(abs(jet.coefficient(p))) for p in range(jet.valuation, 0)) / float(scale)
        if leftover > cfg.tol("laurent_residual"):
            raise CancellationFailure(
                f"xi_{k} at {m}: pole part of relative size {leftover:.3g} survived"
            )
        jet = CJet.make(m, 0, jet.coeffs[-jet.valuation:])
    return jet, leftover


def xik_jet(s0, k: int, K: int, cfg: EvalConfig | None = None) -> CJet:
    """Jet of ``xi_k`` about ``s0``; exact lattice points use the cancelled quotient."""
    cfg = resolve(cfg)
    n = _num.exact_int(s0)
    if n is not None and nearest_lattice(s0, cfg.lattice_delta) == n:
        return _lattice_jet(s0, k, K + k + cfg.jet_reserve, cfg)[0].truncate(K)
    if nearest_lattice(s0, cfg.lattice_delta) is not None:
        raise CancellationFailure(f"{complex(s0)} is inside a lattice disc; use xik_eval")
    Kz = K + k + cfg.jet_reserve
    s = CJet.variable(s0, K)
    pref = jexp(_log_prefactor_jet(s0, k, K, cfg))
    z = zk_jets_binomial(s0, k, Kz, cfg)[k].truncate(K)
    return (pref * s * (s - 1) * z).truncate(K)


def _log_value(s0, k: int, cfg: EvalConfig):
    be = _num.backend(s0)
    lpre = _log_prefactor_jet(s0, k, 0, cfg).coeffs[0]
    z = zk_jets_binomial(s0, k, k + cfg.jet_reserve, cfg)[k].coefficient(0)
    if z == 0:
        return None
    return lpre + be.log(s0) + be.log(s0 - 1) + be.log(z)


def xik_log(s0, k: int, cfg: EvalConfig | None = None) -> complex:
    """A logarithm of ``xi_k(s0)`` (off the lattice discs)."""
    cfg = resolve(cfg)
    with _num.working_precision(cfg.precision_mode):
        s = _num.lift(s0, cfg.precision_mode)
        if nearest_lattice(s, cfg.lattice_delta) is not None:
            return complex(_num.backend(s).log(_xik_value(s, k, cfg)))
        out = _log_value(s, k, cfg)
        return complex(-math.inf) if out is None else complex(out)


def _xik_value(s, k: int, cfg: EvalConfig):
    m = nearest_lattice(s, cfg.lattice_delta)
    if m is not None:
        center = _num.backend(s).num(m)
        jet, _ = _lattice_jet(center, k, k + cfg.jet_reserve + _SNAP_EXTRA, cfg)
        return jet.eval_at(s - center)
    lv = _log_value(s, k, cfg)
    if lv is None:
        return _num.backend(s).num(0)
    return _num.backend(s).exp(lv)


def xik_eval(s0, k: int, cfg: EvalConfig | None = None) -> complex:
    """``xi_k(s0)``; defined everywhere."""
    cfg = resolve(cfg)
    with _num.working_precision(cfg.precision_mode):
        return complex(_xik_value(_num.lift(s0, cfg.precision_mode), k, cfg))


def xik_logderiv(s0, k: int, cfg: EvalConfig | None = None) -> complex:
    """``xi_k'/xi_k`` at ``s0``, summed from the logarithmic derivatives of the factors."""
    cfg = resolve(cfg)
    with _num.working_precision(cfg.precision_mode):
        s = _num.lift(s0, cfg.precision_mode)
        m = nearest_lattice(s, cfg.lattice_delta)
        if m is not None:
            center = _num.backend(s).num(m)
            jet, _ = _lattice_jet(center, k, k + cfg.jet_reserve + _SNAP_EXTRA, cfg)
            return complex(jet.d().eval_at(s - center) / jet.eval_at(s - center))
        lpre = _log_prefactor_jet(s, k, 1, cfg).coefficient(1)
        z = zk_jets_binomial(s, k, k + cfg.jet_reserve + 1, cfg)[k]
        return complex(lpre + 1 / s + 1 / (s - 1) + z.coefficient(1) / z.coefficient(0))


def xik_functional_residual(s0, k: int, cfg: EvalConfig | None = None,
                            floor: float = 1e-300) -> float:
    """Relative size of ``xi_k(s) - (-1)^k xi_k(1-s)``."""
    cfg = resolve(cfg)
    with _num.working_precision(cfg.precision_mode):
        s = _num.lift(s0, cfg.precision_mode)
        a = _xik_value(s, k, cfg)
        b = _xik_value(1 - s, k, cfg)
        den = max(abs(a), abs(b), floor)
        return float(abs(a - (-1) ** k * b) / den)


def lattice_leftover(m: int, k: int, cfg: EvalConfig | None = None) -> tuple[int, float]:
    """Valuation of the cancelled quotient at ``m`` and the relative size of any pole part."""
    cfg = resolve(cfg)
    be = _num.STD
    jet, leftover = _lattice_jet(be.num(m), k, k + cfg.jet_reserve + _SNAP_EXTRA, cfg)
    return jet.valuation, leftover


# ---------------------------------------------------------------------------
# Hadamard constants at s = 0


@dataclass(frozen=True)
class XiConstants:
    k: int
    xi_at_zero: float
    B: float
    closed_form_terms: dict
    numeric_xi_at_zero: float | None = None
    numeric_B: float | None = None
    deviations: dict = field(default_factory=dict)


def xi_at_zero_closed(k: int) -> float:
    return (-1) ** k * double_factorial(2 * k - 1) / (4 * math.sqrt(math.pi)) ** k


def b_closed_terms(k: int) -> dict:
    d = 2 * k - 1
    return {
        "log2": -2 * k * (k - 1) / d * math.log(2),
        "log4pi": -math.log(4 * math.pi) / (2 * d),
        "gamma": 0.5772156649015329 / (2 * d),
        "const": -1.0,
    }


def xik_constants(k: int, verify: bool = False, cfg: EvalConfig | None = None) -> XiConstants:
    """``e^{A_k} = xi_k(0)`` and ``B_k = xi_k'(0)/xi_k(0)``, optionally checked numerically."""
    cfg = resolve(cfg)
    if k < 0:
        raise ValueError("k must be non-negative")
    terms = b_closed_terms(k)
    a0 = xi_at_zero_closed(k)
    b = sum(terms.values())
    if not verify:
        return XiConstants(k, a0, b, terms)
    with _num.working_precision(cfg.precision_mode):
        zero = _num.lift(0, cfg.precision_mode)
        jet = xik_jet(zero, k, 1, cfg)
        x0 = jet.coefficient(0)
        nb = jet.coefficient(1) / x0
        x0, nb = complex(x0), complex(nb)
    dev = {
        "xi_at_zero": abs(x0 - a0) / abs(a0),
        "B": abs(nb - b) / max(1.0, abs(b)),
    }
    return XiConstants(k, a0, b, terms, x0.real, nb.real, dev)


# ---------------------------------------------------------------------------
# values at positive integers


@dataclass(frozen=True)
class SpecialValue:
    k: int
    point: int
    closed_form: complex
    numeric: complex
    deviation: float
    kind: str
    factor: float | None = None  # multiplies Z_k(2n) in the even case


def _zeta_at(n: int) -> float:
    return complex(zeta_jet(complex(n), 0).coefficient(0)).real


def odd_value_closed(k: int, n: int) -> float:
    """Closed form for ``xi_k(2n+1)``, ``n >= 1``."""
    sign = (-1) ** (k * n + 1)
    c = math.pi ** (-(2 * n + k) / 2)
    c *= math.factorial(2 * n + 1) * 2 * n / (4**n * math.factorial(n))
    c *= (4 ** (n - 1) * math.factorial(n) ** 2 / math.factorial(2 * n)) ** k
    c *= double_factorial(2 * k - 3)
    return sign * c * _zeta_at(2 * n + 1)


def even_value_factor(k: int, n: int) -> float:
    """The factor in ``xi_k(2n) = factor * Z_k(2n)``."""
    sign = (-1) ** (k * n)
    c = math.pi ** (-(2 * n + k) / 2) * 2 * n * (2 * n - 1) * math.factorial(n - 1)
    c *= (math.factorial(2 * n) / (4**n * math.factorial(n) * math.factorial(n - 1))) ** k
    return sign * c


def omega_derivative_at_even(n: int, l: int) -> float:
    """``omega^{(l-1)}(2n)`` from harmonic sums, Bernoulli numbers and zeta at odd integers."""
    if l < 1 or n < 1:
        raise ValueError("need l >= 1 and n >= 1")
    if l == 1:
        return math.log(2 * math.pi) + 0.5772156649015329 - sum(1 / j for j in range(1, 2 * n))
    if l % 2 == 0:
        m = l // 2
        b = float(bernoulli(2 * m))
        head = (-1) ** m * b * (2 - 4**m) * math.pi ** (2 * m) / (4 * m)
        return head + math.factorial(2 * m - 1) * math.fsum(j ** -(2 * m) for j in range(1, 2 * n))
    m = (l - 1) // 2
    h = math.fsum(j ** -(2 * m + 1) for j in range(1, 2 * n))
    return -math.factorial(2 * m) * (h - _zeta_at(2 * m + 1))


def zk_at_even_partition(k: int, n: int) -> complex:
    """``Z_k(2n)`` from the partition expansion with closed-form omega derivatives."""
    wd = [omega_derivative_at_even(n, l) for l in range(1, k + 1)]
    zj = zeta_jet(complex(2 * n), k)
    total = 0j
    for j in range(k + 1):
        f = 1.0 if j == k else partition_sum(k - j, wd[: k - j]) / math.factorial(k - j)
        total += math.factorial(k) / math.factorial(j) * zj.derivative(j) * f
    return total


def xik_special_value(k: int, m: int, cfg: EvalConfig | None = None) -> SpecialValue:
    """Closed form for ``xi_k(m)``, ``m >= 1``, against the direct evaluation."""
    cfg = resolve(cfg)
    if m < 1:
        raise ValueError("m must be a positive integer")
    numeric = xik_eval(m, k, cfg)
    factor = None
    if m == 1:
        closed, kind = double_factorial(2 * k - 1) / (4 * math.sqrt(math.pi)) ** k, "one"
    elif m % 2:
        closed, kind = odd_value_closed(k, (m - 1) // 2), "odd"
    else:
        n = m // 2
        factor = even_value_factor(k, n)
        closed = factor * zk_jets_binomial(complex(m), k, k + cfg.jet_reserve, cfg)[k].coefficient(0)
        kind = "even"
    closed = complex(closed)
    dev = abs(closed - numeric) / max(1.0, abs(closed))
    return SpecialValue(k, m, closed, numeric, dev, kind, factor)
