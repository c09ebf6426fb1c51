"""The coefficient family f_k, the functions Z_k, and Hardy-function derivatives.

With ``omega = chi'/chi`` the family is generated by

    f_0 = 1,            f_{k+1} = f_k' - omega f_k / 2,
    Z_0 = zeta,         Z_{k+1} = Z_k' - omega Z_k / 2,

and ``Z_k = sum_j C(k, j) f_{k-j} zeta^{(j)}``.  A third, independent route
differentiates ``chi^{-1/2} zeta`` directly.  On the critical line the
rotation ``i^k Z_k(1/2 + it) e^{i theta(t)}`` is the k-th derivative of
Hardy's Z-function.

Near the lattice of poles (non-positive even and positive odd integers) the
jets are built at the lattice point itself, where they are Laurent series,
and summed at the requested offset.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import _num
from .config import EvalConfig, resolve
from .errors import (
    BranchAmbiguity,
    CenterUnsupported,
    LatticeTooClose,
    OrderBudgetExceeded,
)
from .jets import CJet, jexp
from .special import (
    digamma_jet,
    is_chi_lattice,
    log_chi_jet,
    tan_halfpi_jet,
    theta_and_derivative,
)
from .zeta import zeta_jet

ROUTES = ("binomial", "recursive", "yildirim")

# extra jet terms carried when summing a Laurent jet at an offset
_SNAP_EXTRA = 16


def nearest_lattice(s0, delta: float) -> int | None:
    """The lattice point within ``delta`` of ``s0``, if any."""
    z = complex(s0)
    if abs(z.imag) >= delta:
        return None
    m = round(z.real)
    if abs(z - m) >= delta:
        return None
    if (m <= 0 and m % 2 == 0) or (m > 0 and m % 2 == 1):
        return m
    return None


def _as_center(m: int, like):
    return _num.backend(like).num(m)


# ---------------------------------------------------------------------------
# omega


def omega_jet(s0, K: int, cfg: EvalConfig | None = None, reflect: bool = True) -> CJet:
    """Jet of ``omega(s) = log 2pi - psi(s) + (pi/2) tan(pi s/2)``.

    Left of the critical line the symmetry ``omega(s) = omega(1 - s)`` is used,
    so the cancelling poles of ``psi`` and ``tan`` at negative odd integers are
    never met.  ``reflect=False`` evaluates the defining formula as is.
    """
    cfg = resolve(cfg)
    if reflect and complex(s0).real < 0.5:
        return omega_jet(1 - s0, K, cfg, reflect=False).compose_affine(-1, s0)
    be = _num.backend(s0)
    if reflect is False and _num.exact_int(s0) is not None:
        # psi and tan poles may cancel here; carry one spare term
        K = K + 1
    c = be.log(2 * be.pi())
    jet = tan_halfpi_jet(s0, K, cfg) * (be.pi() / 2) - digamma_jet(s0, K, cfg)
    return jet + c


def omega_value(s0, cfg: EvalConfig | None = None):
    cfg = resolve(cfg)
    m = nearest_lattice(s0, cfg.lattice_delta)
    if m is None:
        return omega_jet(s0, 0, cfg).coefficient(0)
    jet = omega_jet(_as_center(m, s0), _SNAP_EXTRA, cfg)
    return jet.eval_at(s0 - m)


# ---------------------------------------------------------------------------
# f_k


def f_family(s0, kmax: int, K: int, cfg: EvalConfig | None = None,
             omega: CJet | None = None) -> list[CJet]:
    """Jets of ``f_0 .. f_kmax`` about ``s0`` (Laurent at lattice centers)."""
    cfg = resolve(cfg)
    if K < kmax + cfg.jet_reserve:
        raise OrderBudgetExceeded(
            f"order {K} cannot carry f_{kmax} with reserve {cfg.jet_reserve}"
        )
    be = _num.backend(s0)
    w = omega if omega is not None else omega_jet(s0, K, cfg)
    half_w = w * be.real(Fraction(1, 2))
    out = [CJet.constant(be.num(1), s0, K)]
    for _ in range(kmax):
        f = out[-1]
        out.append(f.d() - half_w * f)
    return out


def _partitions(k: int):
    """All ``(a_1, ..., a_k)`` with ``sum l a_l = k``."""

    def rec(l, remaining):
        if l == 0:
            if remaining == 0:
                yield ()
            return
        for a in range(remaining // l + 1):
            for rest in rec(l - 1, remaining - l * a):
                yield rest + (a,)

    yield from rec(k, k)


def partition_sum(k: int, omega_derivs: Sequence):
    """Faa di Bruno sum for ``f_k`` given ``omega^{(l-1)}`` for ``l = 1..k``."""
    be = _num.backend(*omega_derivs)
    minus_half = be.real(Fraction(-1, 2))
    total = be.num(0)
    for a in _partitions(k):
        term = minus_half ** sum(a)
        for l, al in enumerate(a, start=1):
            if al:
                term = term * (omega_derivs[l - 1] / math.factorial(l)) ** al / math.factorial(al)
        total = total + term
    return total * math.factorial(k)


def f_partition(s0, k: int, cfg: EvalConfig | None = None):
    """``f_k(s0)`` from the partition formula over derivatives of omega."""
    cfg = resolve(cfg)
    if nearest_lattice(s0, cfg.lattice_delta) is not None:
        raise LatticeTooClose(f"{s0} is within {cfg.lattice_delta} of a pole of omega")
    if k > 10:
        raise ValueError("partition formula is limited to k <= 10")
    if k == 0:
        return _num.backend(s0).num(1)
    w = omega_jet(s0, k - 1, cfg)
    return partition_sum(k, [w.derivative(l) for l in range(k)])


# ---------------------------------------------------------------------------
# Z_k jets


def zk_jets_binomial(s0, kmax: int, K: int, cfg: EvalConfig | None = None) -> list[CJet]:
    """``Z_0 .. Z_kmax`` from ``sum_j C(k,j) f_{k-j} zeta^{(j)}``."""
    cfg = resolve(cfg)
    fs = f_family(s0, kmax, K, cfg)
    z = zeta_jet(s0, K, cfg=cfg)
    zd = [z]
    for _ in range(kmax):
        zd.append(zd[-1].d())
    out = []
    for k in range(kmax + 1):
        acc = fs[k] * zd[0]
        for j in range(1, k + 1):
            acc = acc + fs[k - j] * zd[j] * math.comb(k, j)
        out.append(acc)
    return out


def zk_jets_recursive(s0, kmax: int, K: int, cfg: EvalConfig | None = None) -> list[CJet]:
    cfg = resolve(cfg)
    be = _num.backend(s0)
    half_w = omega_jet(s0, K, cfg) * be.real(Fraction(1, 2))
    out = [zeta_jet(s0, K, cfg=cfg)]
    for _ in range(kmax):
        z = out[-1]
        out.append(z.d() - half_w * z)
    return out


def zk_jet_yildirim(s0, k: int, K: int, cfg: EvalConfig | None = None) -> CJet:
    """``chi^{1/2} d^k (chi^{-1/2} zeta)`` with both roots from one continuous log chi."""
    cfg = resolve(cfg)
    z = complex(s0)
    if is_chi_lattice(s0) or nearest_lattice(s0, cfg.lattice_delta) is not None:
        raise BranchAmbiguity(f"chi has a zero or pole within {cfg.lattice_delta} of {z}")
    be = _num.backend(s0)
    half = be.real(Fraction(1, 2))
    lc = log_chi_jet(s0, K, cfg)
    inner = jexp(lc * (-half)) * zeta_jet(s0, K, cfg=cfg)
    return jexp(lc * half) * inner.nth_d(k)


# ---------------------------------------------------------------------------
# evaluation bundle


@dataclass
class ZkBundle:
    k: int
    s: complex
    f: list
    Zk: complex | None
    route: str
    routes: dict = field(default_factory=dict)
    route_spread: float | None = None
    laurent_center: int | None = None
    jet: CJet | None = None
    hardy: float | None = None
    imag_residual: float | None = None


def _value_at(jet: CJet, offset):
    if offset == 0:
        return None if jet.valuation < 0 else jet.coefficient(0)
    return jet.eval_at(offset)


def _spread(values: dict) -> float:
    vals = [complex(v) for v in values.values() if v is not None]
    worst = 0.0
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            scale = max(abs(vals[i]), abs(vals[j]), 1e-300)
            worst = max(worst, abs(vals[i] - vals[j]) / scale)
    return worst


def zk_eval(s0, k: int, route: str = "binomial", K: int | None = None,
            cfg: EvalConfig | None = None) -> ZkBundle:
    """Evaluate ``Z_k(s0)`` (and the ``f`` family) by one route or all of them."""
    cfg = resolve(cfg)
    if route not in ROUTES + ("all",):
        raise CenterUnsupported(f"unknown route {route!r}")
    if k < 0:
        raise ValueError("k must be non-negative")
    with _num.working_precision(cfg.precision_mode):
        s = _num.lift(s0, cfg.precision_mode)
        m = nearest_lattice(s, cfg.lattice_delta)
        if m is not None:
            center = _as_center(m, s)
            offset = s - center
            K = max(K or 0, k + cfg.jet_reserve + _SNAP_EXTRA)
        else:
            center, offset = s, 0
            K = max(K or 0, k + cfg.jet_reserve)

        wanted = ROUTES if route == "all" else (route,)
        if m is not None and route == "yildirim":
            raise BranchAmbiguity(f"{complex(s0)} is within {cfg.lattice_delta} of the chi lattice")
        values, jets = {}, {}
        if "binomial" in wanted:
            jets["binomial"] = zk_jets_binomial(center, k, K, cfg)[k]
        if "recursive" in wanted:
            jets["recursive"] = zk_jets_recursive(center, k, K, cfg)[k]
        if "yildirim" in wanted and m is None:
            jets["yildirim"] = zk_jet_yildirim(center, k, K, cfg)
        for name, jet in jets.items():
            values[name] = _value_at(jet, offset)

        fs = f_family(center, k, K, cfg)
        fvals = [_value_at(f, offset) for f in fs]
        primary = "binomial" if "binomial" in jets else next(iter(jets))
        zk = values[primary]

        bundle = ZkBundle(
            k=k,
            s=complex(s0),
            f=[None if v is None else complex(v) for v in fvals],
            Zk=None if zk is None else complex(zk),
            route=route,
            routes={n: (None if v is None else complex(v)) for n, v in values.items()},
            laurent_center=m,
            jet=jets[primary],
        )
        if len(values) > 1 and all(v is not None for v in values.values()):
            bundle.route_spread = _spread(values)
        if zk is not None and abs(complex(s).real - 0.5) < 1e-15:
            t = float(complex(s).imag)
            bundle.hardy, bundle.imag_residual = _rotate(zk, k, t, cfg)
        return bundle


def zk_value(s0, k: int, cfg: EvalConfig | None = None) -> complex:
    b = zk_eval(s0, k, "binomial", cfg=cfg)
    if b.Zk is None:
        raise CenterUnsupported(f"Z_{k} has a pole at {complex(s0)}")
    return b.Zk


# ---------------------------------------------------------------------------
# Hardy-function derivatives


def _rotate(zk, k: int, t: float, cfg: EvalConfig) -> tuple[float, float]:
    th = theta_and_derivative(t, cfg).theta
    be = _num.backend(zk)
    w = (1j) ** k * zk * be.exp(be.num(1j) * th)
    w = complex(w)
    return w.real, abs(w.imag)


def zk_values_on_line(t: float, kmax: int, cfg: EvalConfig | None = None) -> list:
    """``Z_0 .. Z_kmax`` at ``1/2 + it`` from a single zeta jet."""
    cfg = resolve(cfg)
    be = _num.backend()
    s0 = complex(0.5, t)
    if cfg.compensated:
        s0 = _num.MP.num(s0)
        be = _num.MP
    K = kmax + cfg.jet_reserve
    fs = f_family(s0, kmax, K, cfg)
    z = zeta_jet(s0, kmax, cfg=cfg)
    zd = [z.derivative(j) for j in range(kmax + 1)]
    fv = [f.coefficient(0) for f in fs]
    out = []
    for k in range(kmax + 1):
        acc = be.num(0)
        for j in range(k + 1):
            acc = acc + math.comb(k, j) * fv[k - j] * zd[j]
        out.append(acc)
    return out


def hardy_derivatives(t: float, kmax: int, cfg: EvalConfig | None = None
                      ) -> tuple[list[float], list[float]]:
    """Values ``Z^{(0)}(t) .. Z^{(kmax)}(t)`` and the size of their imaginary parts."""
    cfg = resolve(cfg)
    with _num.working_precision(cfg.precision_mode):
        zs = zk_values_on_line(t, kmax, cfg)
        th = theta_and_derivative(float(t), cfg).theta
        rot = complex(math.cos(th), math.sin(th))
        vals, res = [], []
        for k, z in enumerate(zs):
            w = (1j) ** k * complex(z) * rot
            vals.append(w.real)
            res.append(abs(w.imag))
        return vals, res


def hardy_zk(t: float, k: int, cfg: EvalConfig | None = None) -> tuple[float, float]:
    """``Z^{(k)}(t)`` and the magnitude of the imaginary part left by the rotation."""
    vals, res = hardy_derivatives(t, k, cfg)
    return vals[k], res[k]
