"""Riemann zeta and all its derivatives from one Euler-Maclaurin jet.

    zeta(s) = sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2
              + sum_{r=1}^{R} B_2r/(2r)! * s(s+1)...(s+2r-2) * N^(-s-2r+1) + E

Every term is formed as a jet in ``x = s - s0``, so coefficient ``j`` of the
result is ``zeta^{(j)}(s0)/j!``.  At ``s0 = 1`` the pole term makes the jet
Laurent with ``c_{-1} = 1``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from dataclasses import dataclass

import mpmath
import numpy as np

from . import _num
from .config import EvalConfig, resolve
from .errors import ParamsInsufficient
from .jets import CJet
from .special import bernoulli_table


@dataclass(frozen=True)
class EMParams:
    N: int
    R: int

    def __post_init__(self):
        if self.N < 10:
            raise ValueError("N must be at least 10")
        if 2 * self.R + 2 > 2 * bernoulli_table().M:
            raise ValueError("R exceeds the Bernoulli table")


def default_params(s0, cfg: EvalConfig | None = None) -> EMParams:
    cfg = resolve(cfg)
    pol = cfg.em_defaults
    im = abs(complex(s0).imag)
    N = max(pol.n_min, math.ceil(pol.n_scale * im) + pol.n_pad)
    R = pol.terms
    if _num.is_mp(s0):
        N = max(2 * N, 40)
        R = max(R, 30)
    return EMParams(N, R)


def _power_sum_coeffs(s0, N: int, K: int, be) -> list:
    """Taylor coefficients of sum_{n<N} n^-(s0+x) = sum n^-s0 * exp(-x log n)."""
    if be is _num.MP:
        out = [mpmath.mpc(0)] * (K + 1)
        for n in range(1, N):
            ln = mpmath.log(n)
            term = mpmath.exp(-s0 * ln)
            for j in range(K + 1):
                out[j] += term
                term = term * (-ln) / (j + 1)
        return out
    # The phase t*log(n) is always formed in extended precision; in double it
    # limits accuracy once |n^-s| is large.
    n = np.arange(1, N, dtype=np.longdouble)
    ln = np.log(n)
    term = np.exp(-_num.LD.num(s0) * ln)
    keep = (lambda x: x) if be is _num.LD else complex
    out = []
    for j in range(K + 1):
        out.append(keep(term.sum()))
        term = term * (-ln) / (j + 1)
    return out


def _npow_jet(s0, N: int, shift: int, K: int, be) -> CJet:
    """Jet of N^(shift - s)."""
    if be is _num.STD:
        ld = _num.LD
        c0 = complex(ld.exp((shift - ld.num(s0)) * ld.log(ld.real(N))))
        lnN = math.log(N)
    else:
        lnN = be.log(be.real(N))
        c0 = be.exp((shift - s0) * lnN)
    c = [c0]
    for j in range(1, K + 1):
        c.append(c[-1] * (-lnN) / j)
    return CJet.make(s0, 0, c)


def _em_jet(s0, K: int, N: int, R: int, be):
    B = bernoulli_table().exact
    s = CJet.variable(s0, K)
    head = CJet.make(s0, 0, _power_sum_coeffs(s0, N, K, be))
    NmS = _npow_jet(s0, N, 0, K, be)  # N^-s
    pole = _npow_jet(s0, N, 1, K, be) / (s - 1)

    # polynomial part of the tail: sum_r B_2r/(2r)! (s)_{2r-1} N^(1-2r)
    rising = s
    tail = CJet.constant(be.num(0), s0, K)
    for r in range(1, R + 1):
        coef = be.real(B[2 * r]) / be.real(math.factorial(2 * r)) * be.real(N) ** (1 - 2 * r)
        tail = tail + rising * coef
        rising = rising * (s + (2 * r - 1)) * (s + 2 * r)
    jet = head + pole + NmS * (tail + be.real(Fraction(1, 2)))
    # first omitted term
    nxt = abs(be.real(B[2 * R + 2]) / be.real(math.factorial(2 * R + 2))
              * rising.coefficient(0) * be.exp(-(s0 + 2 * R + 1) * be.log(be.num(N))))
    return jet, nxt


def zeta_jet(s0, K: int, params: EMParams | None = None, cfg: EvalConfig | None = None,
             check: bool = True) -> CJet:
    cfg = resolve(cfg)
    be = _num.backend(s0)
    p = params or default_params(s0, cfg)
    if be is _num.STD and complex(s0).real < 0:
        # terms of size N^(1-sigma) cancel down to |zeta|: sum them in extended precision
        jet, nxt = _em_jet(_num.LD.num(s0), K, p.N, p.R, _num.LD)
        jet = CJet(s0, jet.valuation, tuple(complex(c) for c in jet.coeffs))
        nxt = float(nxt)
    else:
        jet, nxt = _em_jet(s0, K, p.N, p.R, be)
    n0 = _num.exact_int(s0)
    if n0 is not None and n0 < 0 and n0 % 2 == 0:
        # trivial zero: the value is known exactly
        jet = CJet.make(s0, 0, (jet.coeffs[0] * 0,) + jet.coeffs[1:])

    if check:
        scale = max(1.0, abs(complex(jet.coeffs[0])))
        target = cfg.em_defaults.target
        if be is _num.MP:
            target = float(mpmath.mpf(10) ** (-(mpmath.mp.dps - 6)))
        if float(nxt) > target * scale:
            raise ParamsInsufficient(
                f"EM truncation estimate {float(nxt):.3g} above {target:.1g} at s={complex(s0)}"
            )
    return jet


def zeta(s, cfg: EvalConfig | None = None):
    return zeta_jet(s, 0, cfg=cfg).eval_at(0) if _num.exact_int(s) != 1 else complex("inf")
