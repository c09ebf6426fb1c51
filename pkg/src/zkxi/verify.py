"""Verification suites.  Each returns a :class:`Report` whose cases compare a
computed quantity with an independent expectation under a named tolerance."""

from __future__ import annotations

import math
from typing import Callable

import numpy as np

from . import _num
from .config import EvalConfig, resolve
from .report import Report
from .special import chi_jet, double_factorial, loggamma
from .xik import (
    lattice_leftover,
    xik_constants,
    xik_eval,
    xik_functional_residual,
    xik_log,
    xik_special_value,
    zk_at_even_partition,
)
from .zeros import gk_sides
from .zeta import zeta_jet
from .zk import (
    f_family,
    f_partition,
    omega_value,
    zk_jet_yildirim,
    zk_jets_binomial,
    zk_jets_recursive,
)

EULER_GAMMA = 0.5772156649015329
KMAX = 4


def lattice_avoiding_grid(n_sigma: int = 10, n_t: int = 20) -> list[complex]:
    """``sigma`` in [-3, 4] by ``t`` in [2, 60]; every point is far from the real axis."""
    return [complex(s, t) for s in np.linspace(-3, 4, n_sigma) for t in np.linspace(2, 60, n_t)]


def _rel(a, b) -> float:
    a, b = complex(a), complex(b)
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


def _values(jets) -> list[complex]:
    return [complex(j.coefficient(0)) for j in jets]


def _lift(cfg: EvalConfig, s):
    return _num.lift(s, cfg.precision_mode)


# ---------------------------------------------------------------------------


def functional_eq(cfg: EvalConfig | None = None, grid: list[complex] | None = None) -> Report:
    cfg = resolve(cfg)
    rep = Report("functional-eq", config_fingerprint=cfg.fingerprint())
    tol = cfg.tol("functional_eq")
    K = KMAX + cfg.jet_reserve
    with _num.working_precision(cfg.precision_mode):
        for s0 in grid or lattice_avoiding_grid():
            s = _lift(cfg, s0)
            here = _values(zk_jets_binomial(s, KMAX, K, cfg))
            there = _values(zk_jets_binomial(1 - s, KMAX, K, cfg))
            chi = complex(chi_jet(s, 0, cfg).coefficient(0))
            for k in range(KMAX + 1):
                lhs, rhs = chi * there[k], (-1) ** k * here[k]
                rep.add(f"Z{k}@{s0}", {"k": k, "s": s0}, rhs, lhs, _rel(lhs, rhs), tol)
                r = xik_functional_residual(s0, k, cfg)
                rep.add(f"xi{k}@{s0}", {"k": k, "s": s0}, 0.0, r, r, tol)
    return rep


def cross_route(cfg: EvalConfig | None = None, grid: list[complex] | None = None) -> Report:
    cfg = resolve(cfg)
    rep = Report("cross-route", config_fingerprint=cfg.fingerprint())
    tol = cfg.tol("cross_route")
    K = KMAX + cfg.jet_reserve
    with _num.working_precision(cfg.precision_mode):
        for s0 in grid or lattice_avoiding_grid():
            s = _lift(cfg, s0)
            b = _values(zk_jets_binomial(s, KMAX, K, cfg))
            r = _values(zk_jets_recursive(s, KMAX, K, cfg))
            for k in range(KMAX + 1):
                y = complex(zk_jet_yildirim(s, k, K, cfg).coefficient(0))
                spread = max(_rel(b[k], r[k]), _rel(b[k], y), _rel(r[k], y))
                rep.add(f"Z{k}@{s0}", {"k": k, "s": s0}, b[k], {"recursive": r[k], "yildirim": y},
                        spread, tol)
        ptol = cfg.tol("partition")
        for s0 in (3.5 + 2j, 10 + 10j, -1.5 + 7j, 0.5 + 14j):
            s = _lift(cfg, s0)
            fam = f_family(s, 6, 6 + cfg.jet_reserve, cfg)
            for k in range(1, 7):
                a, p = complex(fam[k].coefficient(0)), complex(f_partition(s, k, cfg))
                rep.add(f"f{k}@{s0}", {"k": k, "s": s0}, a, p, _rel(a, p), ptol)
    return rep


def constants(cfg: EvalConfig | None = None) -> Report:
    cfg = resolve(cfg)
    rep = Report("constants", config_fingerprint=cfg.fingerprint())
    for k in range(KMAX + 1):
        c = xik_constants(k, verify=True, cfg=cfg)
        rep.add(f"xi{k}(0)", {"k": k}, c.xi_at_zero, c.numeric_xi_at_zero,
                c.deviations["xi_at_zero"], cfg.tol("xi_zero"))
        rep.add(f"B{k}", {"k": k}, c.B, c.numeric_B, c.deviations["B"], cfg.tol("constants"))
    return rep


def special_values(cfg: EvalConfig | None = None, kmax: int = 3) -> Report:
    cfg = resolve(cfg)
    rep = Report("special-values", config_fingerprint=cfg.fingerprint())
    tol = cfg.tol("special_values")
    for k in range(kmax + 1):
        for m in (1, 3, 5, 2, 4):
            sv = xik_special_value(k, m, cfg)
            rep.add(f"xi{k}({m})", {"k": k, "m": m, "kind": sv.kind}, sv.closed_form, sv.numeric,
                    sv.deviation, tol)
        for n in (1, 2):
            direct = complex(zk_jets_binomial(complex(2 * n), k, k + cfg.jet_reserve, cfg)[k]
                             .coefficient(0))
            part = zk_at_even_partition(k, n)
            rep.add(f"Z{k}({2 * n})-partition", {"k": k, "n": n}, direct, part,
                    abs(direct - part) / max(1.0, abs(direct)), tol)
        x0, x1 = xik_eval(0, k, cfg), xik_eval(1, k, cfg)
        rep.add(f"xi{k}(0)-vs-xi{k}(1)", {"k": k}, (-1) ** k * x1, x0,
                abs(x0 - (-1) ** k * x1) / max(1.0, abs(x0)), tol)
    return rep


def expected_valuation(center: int, k: int) -> int:
    """Order of ``Z_k`` at a lattice point (negative for a pole)."""
    if center == 1:
        return -(k + 1)
    if center == 0 or center % 2 == 1:
        return -k
    return 1 - k


def a_leading(k: int) -> float:
    return (-0.5) ** (k + 1) * double_factorial(2 * k - 1)


def a_subleading(k: int) -> float:
    c = math.log(2 * math.pi) + EULER_GAMMA
    return (EULER_GAMMA / c + k - 1) * c * (-0.5) ** (k + 1) * double_factorial(2 * k - 1) / (2 * k - 1)


def b_leading(k: int, n: int) -> float:
    z = complex(zeta_jet(complex(2 * n + 1), 0).coefficient(0)).real
    return -((-0.5) ** k) * double_factorial(2 * k - 3) * z


def laurent(cfg: EvalConfig | None = None) -> Report:
    cfg = resolve(cfg)
    rep = Report("laurent", config_fingerprint=cfg.fingerprint())
    tol = cfg.tol("laurent_residual")
    for k in range(KMAX + 1):
        K = k + cfg.jet_reserve + 8
        for m in (0, 1, 3, 5, 7, -2, -4, -6):
            with _num.working_precision(cfg.precision_mode):
                jet = zk_jets_binomial(_lift(cfg, m), k, K, cfg)[k]
            want = expected_valuation(m, k)
            rep.add(f"v(Z{k},{m})", {"k": k, "center": m}, want, jet.valuation,
                    abs(jet.valuation - want), 0.0)
            if m == 0:
                a = complex(jet.coefficient(-k))
                rep.add(f"a{k},{-k}", {"k": k}, a_leading(k), a,
                        abs(a - a_leading(k)) / abs(a_leading(k)), tol)
                a2 = complex(jet.coefficient(-k + 1))
                rep.add(f"a{k},{1 - k}", {"k": k}, a_subleading(k), a2,
                        abs(a2 - a_subleading(k)) / max(1.0, abs(a_subleading(k))), tol)
            if m in (3, 5, 7) and k >= 1:
                b = complex(jet.coefficient(-k))
                want_b = b_leading(k, (m - 1) // 2)
                rep.add(f"b{k},{-k}@{m}", {"k": k, "center": m}, want_b, b,
                        abs(b - want_b) / abs(want_b), tol)
            v, left = lattice_leftover(m, k, cfg)
            rep.add(f"xi{k}-entire@{m}", {"k": k, "center": m}, 0, v, float(v < 0) + left, tol)
    return rep


def stirling_constant(radii=(20, 30, 50, 100, 200), n_phase: int = 13) -> float:
    """Largest ``|s| |Gamma(s)/stirling(s) - 1|`` over ``|s| >= 20``, ``Re s >= 1/4``."""
    worst = 0.0
    for r in radii:
        for ph in np.linspace(-1.55, 1.55, n_phase):
            s = complex(r * math.cos(ph), r * math.sin(ph))
            if s.real < 0.25:
                continue
            d = loggamma(s) - (0.5 * math.log(2 * math.pi) + (s - 0.5) * np.log(s) - s)
            worst = max(worst, abs(np.expm1(d)) * abs(s))
    return float(worst)


def asymptotics(cfg: EvalConfig | None = None, t_values=(100.0, 200.0, 500.0),
                sigmas=(50.0, 100.0, 200.0)) -> Report:
    cfg = resolve(cfg)
    rep = Report("asymptotics", config_fingerprint=cfg.fingerprint())
    c = stirling_constant()
    rep.add("stirling-C", {"min_abs_s": 20}, 0.0, c, c, cfg.tol("stirling_c"))
    sigma = 25.0
    for t in t_values:
        s = complex(sigma, t)
        om = complex(omega_value(s, cfg))
        zk = _values(zk_jets_binomial(s, KMAX, KMAX + cfg.jet_reserve, cfg))
        fk = _values(f_family(s, KMAX, KMAX + cfg.jet_reserve, cfg))
        for k in range(1, KMAX + 1):
            ref = (-om / 2) ** k
            rep.add(f"Z{k}/(-w/2)^{k}@{s}", {"k": k, "s": s}, 1.0, zk[k] / ref,
                    abs(zk[k] / ref - 1), cfg.tol("asymptotic"))
            rep.add(f"f{k}/(-w/2)^{k}@{s}", {"k": k, "s": s}, 1.0, fk[k] / ref,
                    abs(fk[k] / ref - 1), cfg.tol("asymptotic"))
    for sg in sigmas:
        for k in range(KMAX + 1):
            ratio = xik_log(sg, k, cfg).real / (0.5 * sg * math.log(sg))
            rep.add(f"growth-xi{k}@{sg:g}", {"k": k, "sigma": sg}, 1.0, ratio, abs(ratio - 1),
                    cfg.tol("growth"))
    return rep


def gk_identity_t_values(n: int = 20) -> list[float]:
    return [float(t) for t in np.linspace(20.3, 200.7, n)]


def gk_identity(cfg: EvalConfig | None = None, kmax: int = 3) -> Report:
    cfg = resolve(cfg)
    rep = Report("gk-identity", config_fingerprint=cfg.fingerprint())
    for k in range(kmax + 1):
        for t in gk_identity_t_values():
            g = gk_sides(k, t, cfg)
            rep.add(f"g{k}@{t:.6g}", {"k": k, "t": t}, g.lhs, g.rhs, g.residual, cfg.tol("gk_identity"))
    return rep


SUITES: dict[str, Callable[..., Report]] = {
    "functional-eq": functional_eq,
    "constants": constants,
    "special-values": special_values,
    "laurent": laurent,
    "asymptotics": asymptotics,
    "gk-identity": gk_identity,
    "cross-route": cross_route,
}


def run_suite(name: str, cfg: EvalConfig | None = None) -> Report:
    cfg = resolve(cfg)
    if name == "all":
        rep = Report("all", config_fingerprint=cfg.fingerprint())
        for key, fn in SUITES.items():
            part = fn(cfg)
            for case in part.cases:
                case.id = f"{key}/{case.id}"
            rep.extend(part)
        return rep
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](cfg)
