"""Real zeros of the Hardy-function derivatives Z^{(k)}(t) and what they imply.

The scan samples ``Z^{(k)}`` on a grid fine enough for the mean zero spacing
``2 pi / log(t / 2 pi)`` and refines every sign change with Brent's method.
A sign-preserving dip of ``|Z^{(k)}|`` between two samples is followed to its
minimum, which catches pairs of zeros closer than the grid step.  Window
counts are audited against the mean density and short windows are rescanned
more finely.

On top of the zero lists sit the zero-count comparison, the interlacing check
between ``Z^{(k)}`` and ``Z^{(k+1)}``, the sum rule for
``d/dt (Z^{(k+1)}/Z^{(k)})`` and the logarithmic-derivative identity linking
``xi_k`` on the critical line with ``Z^{(k)}``.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from .config import EvalConfig, resolve
from .errors import (
    AtZero,
    AuditFailed,
    CoverageInsufficient,
    RangeInvalid,
    RangeMismatch,
    TooCloseToZero,
)
from .report import Report
from .special import loggamma_jet
from .xik import xik_logderiv
from .zk import hardy_derivatives

T_ENVELOPE = 1000.0
_CHUNK = 128
TWO_PI = 2 * math.pi


@dataclass(frozen=True)
class ZeroRecord:
    k: int
    index: int
    gamma: float
    width: float


@dataclass
class ZeroList:
    k: int
    t_lo: float
    t_hi: float
    records: list[ZeroRecord]
    scan_step_used: float
    suspected_missed: int = 0
    audit: list[dict] = field(default_factory=list)

    @property
    def gammas(self) -> np.ndarray:
        return np.array([r.gamma for r in self.records])

    def __len__(self) -> int:
        return len(self.records)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k", "index", "gamma", "width"])
        for r in self.records:
            w.writerow([r.k, r.index, format(r.gamma, ".15g"), format(r.width, ".15g")])
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "t_lo": self.t_lo,
            "t_hi": self.t_hi,
            "scan_step_used": self.scan_step_used,
            "suspected_missed": self.suspected_missed,
            "count": len(self.records),
            "zeros": [
                {"k": r.k, "index": r.index, "gamma": r.gamma, "width": r.width}
                for r in self.records
            ],
        }

    def to_json(self) -> str:
        from .report import dumps

        return dumps(self) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ZeroList":
        d = json.loads(text)
        recs = [ZeroRecord(z["k"], z["index"], z["gamma"], z["width"]) for z in d["zeros"]]
        return cls(d["k"], d["t_lo"], d["t_hi"], recs, d["scan_step_used"], d["suspected_missed"])


# ---------------------------------------------------------------------------
# scanning


def mainterm(T: float) -> float:
    """``(T/2pi) log(T/2pi) - T/2pi``."""
    x = T / TWO_PI
    return x * math.log(x) - x


def scan_step(t_hi: float, oversample: int) -> float:
    return min(0.5, math.pi / math.log(max(t_hi, 10.0) / TWO_PI) / oversample)


def _sample_chunk(args):
    ts, k, cfg = args
    out = []
    for t in ts:
        vals, _ = hardy_derivatives(t, k + 1, cfg)
        out.append((vals[k], vals[k + 1]))
    return out


def _sample(ts: list[float], k: int, cfg: EvalConfig, workers: int) -> list[tuple[float, float]]:
    chunks = [ts[i:i + _CHUNK] for i in range(0, len(ts), _CHUNK)]
    jobs = [(c, k, cfg) for c in chunks]
    if workers <= 1 or len(chunks) == 1:
        parts = [_sample_chunk(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_sample_chunk, jobs))
    return [p for part in parts for p in part]


def _hardy(k: int, cfg: EvalConfig):
    def f(t):
        return hardy_derivatives(t, k, cfg)[0][k]

    return f


def _refine(k: int, a: float, fa: float, b: float, fb: float, cfg: EvalConfig) -> tuple[float, float]:
    """Root of ``Z^{(k)}`` in a sign-change bracket, as (midpoint, bracket width)."""
    f = _hardy(k, cfg)
    width = cfg.bisect_width
    r = brentq(f, a, b, xtol=width / 8, rtol=4 * np.finfo(float).eps)
    # keep the certified bracket strictly inside the width budget despite rounding
    lo, hi = max(a, r - 0.45 * width), min(b, r + 0.45 * width)
    flo, fhi = (fa if lo == a else f(lo)), (fb if hi == b else f(hi))
    if flo * fa > 0 and fhi * fb > 0 and flo * fhi <= 0:
        return 0.5 * (lo + hi), hi - lo
    # Brent's answer did not certify; fall back to plain bisection
    while b - a > width:
        m = 0.5 * (a + b)
        fm = f(m)
        if fm == 0:
            return m, 0.0
        if fm * fa < 0:
            b, fb = m, fm
        else:
            a, fa = m, fm
    return 0.5 * (a + b), b - a


def _dip(k: int, a: float, va, b: float, vb, cfg: EvalConfig) -> list[tuple[float, float, float, float]]:
    """Brackets hidden in a sign-preserving dip of ``|Z^{(k)}|`` on ``[a, b]``."""
    (fa, da), (fb, db) = va, vb
    if fa * fb <= 0 or not (fa * da < 0 and fb * db > 0):
        return []
    g = _hardy(k + 1, cfg)
    c = brentq(g, a, b, xtol=1e-12)
    fc = _hardy(k, cfg)(c)
    if fc * fa > 0:
        return []
    return [(a, fa, c, fc), (c, fc, b, fb)]


def _find(k: int, ts: list[float], cfg: EvalConfig, workers: int, skip_origin: bool):
    vals = _sample(ts, k, cfg, workers)
    if skip_origin:
        # Z^{(k)} is odd for odd k: use the one-sided sign just right of t = 0
        vals[0] = (vals[0][1], vals[0][1])
    brackets = []
    for i in range(len(ts) - 1):
        (fa, _), (fb, _) = vals[i], vals[i + 1]
        a, b = ts[i], ts[i + 1]
        if fa == 0.0 and not (i == 0 and skip_origin):
            brackets.append((a, a))
            continue
        if fa * fb < 0:
            brackets.append((a, fa, b, fb))
        else:
            brackets.extend(_dip(k, a, vals[i], b, vals[i + 1], cfg))
    zeros = []
    for br in brackets:
        if len(br) == 2:
            zeros.append((br[0], 0.0))
        else:
            zeros.append(_refine(k, *br, cfg))
    return zeros


def _grid(a: float, b: float, h: float) -> list[float]:
    n = max(1, math.ceil((b - a) / h))
    return [a + (b - a) * i / n for i in range(n + 1)]


def _merge(zeros: list[tuple[float, float]], extra: list[tuple[float, float]]) -> list[tuple[float, float]]:
    out = sorted(zeros)
    for g, w in extra:
        if all(abs(g - z) > 1e-7 for z, _ in out):
            out.append((g, w))
    return sorted(out)


def scan_zeros(k: int, t_lo: float, t_hi: float, cfg: EvalConfig | None = None,
               workers: int = 1, strict: bool = True) -> ZeroList:
    """All zeros of ``Z^{(k)}`` in ``(t_lo, t_hi]``, refined to ``cfg.bisect_width``.

    With ``strict`` an unresolved audit deficit raises :class:`AuditFailed`,
    which carries the flagged list.
    """
    cfg = resolve(cfg)
    if not (0 <= t_lo < t_hi <= T_ENVELOPE) or k < 0:
        raise RangeInvalid(f"need 0 <= t_lo < t_hi <= {T_ENVELOPE:g} and k >= 0")
    h = scan_step(t_hi, cfg.scan_oversample)
    ts = _grid(t_lo, t_hi, h)
    step = ts[1] - ts[0]
    skip_origin = t_lo == 0 and k % 2 == 1
    zeros = _find(k, ts, cfg, workers, skip_origin)
    zeros = [z for z in zeros if t_lo < z[0] <= t_hi]

    audit, missed = [], 0
    L = cfg.audit_window
    a = t_lo
    while a < t_hi:
        b = min(a + L, t_hi)
        mid = 0.5 * (a + b)
        expected = (b - a) / TWO_PI * math.log(mid / TWO_PI) - (b - a) / TWO_PI if mid > 0 else 0.0
        count = sum(1 for g, _ in zeros if a < g <= b)
        entry = {"a": a, "b": b, "count": count, "expected": expected, "rescanned": False}
        if count < expected - cfg.audit_slack:
            fine = _find(k, _grid(a, b, step / 8), cfg, workers, skip_origin and a == t_lo)
            zeros = _merge(zeros, [z for z in fine if a < z[0] <= b])
            count = sum(1 for g, _ in zeros if a < g <= b)
            entry.update(count=count, rescanned=True)
            if count < expected - cfg.audit_slack:
                missed += 1
        audit.append(entry)
        a = b

    records = [ZeroRecord(k, i + 1, g, w) for i, (g, w) in enumerate(zeros)]
    zl = ZeroList(k, t_lo, t_hi, records, step, missed, audit)
    if strict and missed:
        raise AuditFailed(f"{missed} window(s) still short of the expected zero count", zl)
    return zl


# ---------------------------------------------------------------------------
# counting and interlacing


@dataclass(frozen=True)
class CountResult:
    T: float
    count: int
    mainterm: float
    deviation: float
    log_T: float


def count_vs_mainterm(zl: ZeroList, T: float, offset: int | None = None) -> CountResult:
    """Zeros in ``(0, T)`` against ``(T/2pi) log(T/2pi) - T/2pi``.

    ``offset`` is the number of zeros in ``(0, t_lo]`` when the list does not
    start near the origin.
    """
    if T > zl.t_hi:
        raise CoverageInsufficient(f"list ends at {zl.t_hi:g} < T = {T:g}")
    if zl.t_lo > 1 and offset is None:
        raise CoverageInsufficient(f"list starts at {zl.t_lo:g}; pass the count below it")
    count = sum(1 for r in zl.records if 0 < r.gamma < T) + (offset or 0)
    m = mainterm(T)
    return CountResult(T, count, m, count - m, math.log(T))


def interlace(k: int, zl_k: ZeroList, zl_k1: ZeroList, a: float | None = None,
              b: float | None = None) -> Report:
    """Zeros of ``Z^{(k+1)}`` strictly between consecutive zeros of ``Z^{(k)}``."""
    if zl_k.k != k or zl_k1.k != k + 1:
        raise RangeMismatch(f"expected lists for k={k} and k={k + 1}")
    lo = max(zl_k.t_lo, zl_k1.t_lo) if a is None else a
    hi = min(zl_k.t_hi, zl_k1.t_hi) if b is None else b
    if lo < max(zl_k.t_lo, zl_k1.t_lo) or hi > min(zl_k.t_hi, zl_k1.t_hi) or lo >= hi:
        raise RangeMismatch(f"[{lo:g}, {hi:g}] is not covered by both lists")
    g = [x for x in zl_k.gammas if lo <= x <= hi]
    h = np.sort(zl_k1.gammas)
    rep = Report("interlace")
    for i in range(len(g) - 1):
        n = int(np.searchsorted(h, g[i + 1], side="left") - np.searchsorted(h, g[i], side="right"))
        rep.add(f"pair-{i + 1}", {"k": k, "left": g[i], "right": g[i + 1]}, 1, n, abs(n - 1), 0.0)
    rep.notes = {"range": [lo, hi], "pairs": max(len(g) - 1, 0),
                 "violations": sum(1 for c in rep.cases if not c.passed)}
    return rep


# ---------------------------------------------------------------------------
# the sum rule for d/dt (Z^{(k+1)} / Z^{(k)})


@dataclass(frozen=True)
class MozerResult:
    k: int
    t: float
    T_max: float
    lhs: float
    zero_sum: float
    residual: float
    tail: float
    corrected: float
    restricted_sum: float

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def ratio_derivative(k: int, t: float, cfg: EvalConfig | None = None) -> float:
    """``d/dt (Z^{(k+1)}/Z^{(k)})`` from one jet evaluation."""
    v, _ = hardy_derivatives(t, k + 2, cfg)
    z0, z1, z2 = v[k], v[k + 1], v[k + 2]
    return (z2 * z0 - z1 * z1) / (z0 * z0)


def symmetric_zeros(zl: ZeroList, mirror: bool = True) -> np.ndarray:
    """The real zero set used in the sum: the list, its reflection, and 0 for odd k."""
    g = set(float(x) for x in zl.gammas)
    if mirror:
        g |= {-x for x in g}
    if zl.k % 2 == 1:
        g.add(0.0)
    return np.array(sorted(g))


def mozer_tail(t: float, T: float) -> float:
    """Mean-density estimate of the sum over zeros with ``|gamma| > T``."""
    lt = math.log(T / TWO_PI)
    right = lt / (T - t) + math.log(T / (T - t)) / t
    left = lt / (T + t) + math.log((T + t) / T) / t
    return (right + left) / TWO_PI


def mozer_residual(k: int, t: float, zl: ZeroList, cfg: EvalConfig | None = None,
                   mirror: bool = True) -> MozerResult:
    """``lhs + sum 1/(t - gamma)^2`` with the tail beyond the list reported separately."""
    if zl.k != k:
        raise RangeMismatch(f"zero list is for k={zl.k}, not {k}")
    if zl.t_lo > 1 or zl.t_hi < 2 * t:
        raise CoverageInsufficient(f"need zeros on [0, {2 * t:g}], have [{zl.t_lo:g}, {zl.t_hi:g}]")
    g = symmetric_zeros(zl, mirror)
    if g.size and np.min(np.abs(t - g)) < 1e-3:
        raise TooCloseToZero(f"t = {t:g} is within 1e-3 of a zero")
    lhs = ratio_derivative(k, t, cfg)
    zero_sum = float(np.sum(1.0 / (t - g) ** 2))
    pos = zl.gammas
    restricted = float(np.sum(1.0 / (t - pos[(pos > 0) & (pos < t)]) ** 2))
    tail = mozer_tail(t, zl.t_hi) if mirror else 0.0
    res = lhs + zero_sum
    return MozerResult(k, t, zl.t_hi, lhs, zero_sum, res, tail, res + tail, restricted)


def ratio_derivative_signs(k: int, zl: ZeroList, a: float, b: float, per_gap: int = 3,
                           cfg: EvalConfig | None = None) -> list[tuple[float, float]]:
    """``d/dt (Z^{(k+1)}/Z^{(k)})`` at interior points of every gap between zeros in ``[a, b]``."""
    g = [x for x in zl.gammas if a <= x <= b]
    out = []
    for left, right in zip(g[:-1], g[1:]):
        for j in range(1, per_gap + 1):
            t = left + (right - left) * j / (per_gap + 1)
            out.append((t, ratio_derivative(k, t, cfg)))
    return out


# ---------------------------------------------------------------------------
# log-derivative identity on the critical line


def gk_logderiv(k: int, t: float, cfg: EvalConfig | None = None) -> float:
    """``g_k'/g_k`` with ``g_k = i^-k pi^-1/4 (1/4 + t^2) |Gamma(1/4 + it/2)|^(1-2k)``."""
    psi = loggamma_jet(complex(0.25, 0.5 * t), 1, cfg).coefficient(1)
    return (2 * k - 1) / 2 * psi.imag + 2 * t / (0.25 + t * t)


def gk_logderiv_prime(k: int, t: float, cfg: EvalConfig | None = None) -> float:
    """``d/dt (g_k'/g_k)``."""
    trigamma = loggamma_jet(complex(0.25, 0.5 * t), 2, cfg).derivative(2)
    q = 0.25 + t * t
    return (2 * k - 1) / 4 * trigamma.real + 2 * (0.25 - t * t) / (q * q)


@dataclass(frozen=True)
class GkCheck:
    k: int
    t: float
    lhs: complex
    rhs: float
    residual: float


def gk_sides(k: int, t: float, cfg: EvalConfig | None = None) -> GkCheck:
    cfg = resolve(cfg)
    v, _ = hardy_derivatives(t, k + 1, cfg)
    if v[k] == 0 or abs(v[k + 1]) > 1e12 * abs(v[k]):
        raise AtZero(f"t = {t:g} is a zero of Z^({k})")
    lhs = 1j * xik_logderiv(complex(0.5, t), k, cfg)
    rhs = gk_logderiv(k, t, cfg) + v[k + 1] / v[k]
    res = abs(lhs - rhs) / max(1.0, abs(lhs))
    return GkCheck(k, t, lhs, rhs, res)


def gk_logderiv_check(k: int, t: float, cfg: EvalConfig | None = None) -> float:
    """Relative residual of ``i xi_k'/xi_k(1/2 + it) = g_k'/g_k(t) + Z^{(k+1)}/Z^{(k)}(t)``."""
    return gk_sides(k, t, cfg).residual
