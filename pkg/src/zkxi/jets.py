"""Truncated complex Laurent series ("jets").

A :class:`CJet` stores ``c_v, c_{v+1}, ..., c_{v+K}`` for the expansion of a
function about ``center``.  Everything above ``x**(v+K)`` is unknown, and
arithmetic keeps track of how much of the series survives each operation.
Negative valuations carry poles, so quotients such as ``sin(x)/x`` or
``Z_k(s) / Gamma(s/2)**k`` cancel formally instead of numerically.

Coefficients may be Python ``complex`` or ``mpmath.mpc``; the two are never
mixed inside one jet.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import mpmath

from . import _num
from .errors import (
    BranchCut,
    CenterMismatch,
    DivisionByZeroJet,
    InvalidValuation,
    OrderExceeded,
)

#: Leading coefficients of a pole part smaller than this fraction of the
#: largest carried coefficient are treated as cancelled.
NORMALIZATION_TOL = 1e-13


def _tol(coeffs):
    if coeffs and _num.is_mp(coeffs[0]):
        return mpmath.mpf(10) ** (-(mpmath.mp.dps - 4))
    return NORMALIZATION_TOL


def _normalize(v: int, coeffs: list):
    # exact zeros never carry information
    i = 0
    while i < len(coeffs) - 1 and coeffs[i] == 0:
        i += 1
    if i == len(coeffs) - 1 and coeffs[i] == 0:
        return v, coeffs
    v += i
    coeffs = coeffs[i:]
    if v < 0:
        scale = max(abs(c) for c in coeffs)
        cut = _tol(coeffs) * scale
        i = 0
        while v + i < 0 and i < len(coeffs) - 1 and abs(coeffs[i]) <= cut:
            i += 1
        v += i
        coeffs = coeffs[i:]
    return v, coeffs


@dataclass(frozen=True)
class CJet:
    """Truncated Laurent expansion ``sum(c_j x**j, j=v..v+K)`` with ``x = s - center``."""

    center: complex
    valuation: int
    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a jet carries at least one coefficient")

    @classmethod
    def make(cls, center, valuation: int, coeffs: Sequence) -> "CJet":
        v, cs = _normalize(int(valuation), list(coeffs))
        return cls(center, v, tuple(cs))

    @classmethod
    def constant(cls, value, center, order: int) -> "CJet":
        zero = value * 0
        return cls.make(center, 0, [value] + [zero] * order)

    @classmethod
    def variable(cls, center, order: int) -> "CJet":
        """The jet of the identity function ``s`` about ``center``."""
        one = center * 0 + 1
        zero = center * 0
        cs = [center, one] + [zero] * (order - 1) if order >= 1 else [center]
        return cls.make(center, 0, cs)

    @classmethod
    def monomial(cls, center, power: int, order: int, scale=1) -> "CJet":
        """``scale * x**power`` carried to ``order`` terms beyond the valuation."""
        one = center * 0 + scale
        zero = center * 0
        return cls(center, power, tuple([one] + [zero] * order))

    # ------------------------------------------------------------------
    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def top(self) -> int:
        """Highest power of ``x`` that is known exactly."""
        return self.valuation + self.order

    def coefficient(self, power: int):
        if power > self.top:
            raise OrderExceeded(f"x^{power} not carried (top {self.top})")
        if power < self.valuation:
            return self.coeffs[0] * 0
        return self.coeffs[power - self.valuation]

    def derivative(self, j: int):
        """The ``j``-th derivative of the represented function at the center."""
        if j < 0 or j > self.top:
            raise OrderExceeded(f"derivative {j} not carried (top {self.top})")
        if self.valuation < 0:
            raise InvalidValuation("function has a pole at the jet center")
        return math.factorial(j) * self.coefficient(j)

    def value(self):
        return self.derivative(0)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def truncate(self, order: int) -> "CJet":
        if order >= self.order:
            return self
        return CJet.make(self.center, self.valuation, self.coeffs[: order + 1])

    def dense(self) -> "CJet":
        """Re-express a jet with ``v > 0`` as one with ``v == 0`` (leading zeros)."""
        if self.valuation <= 0:
            return self
        zero = self.coeffs[0] * 0
        return CJet(self.center, 0, tuple([zero] * self.valuation) + self.coeffs)

    def _check(self, other: "CJet"):
        if self.center != other.center:
            raise CenterMismatch(f"{self.center!r} != {other.center!r}")

    # ------------------------------------------------------------------
    def __neg__(self):
        return CJet(self.center, self.valuation, tuple(-c for c in self.coeffs))

    def __add__(self, other):
        if not isinstance(other, CJet):
            return self._add_scalar(other)
        self._check(other)
        v = min(self.valuation, other.valuation)
        top = min(self.top, other.top)
        if top < v:
            raise OrderExceeded("sum carries no coefficients")
        cs = [self._get(p) + other._get(p) for p in range(v, top + 1)]
        return CJet.make(self.center, v, cs)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def _get(self, p):
        if p < self.valuation:
            return self.coeffs[0] * 0
        return self.coeffs[p - self.valuation]

    def _add_scalar(self, c):
        if c == 0:
            return self
        if self.top < 0:
            return self
        jet = self.dense() if self.valuation > 0 else self
        cs = list(jet.coeffs)
        cs[-jet.valuation] = cs[-jet.valuation] + c
        return CJet.make(jet.center, jet.valuation, cs)

    def __mul__(self, other):
        if not isinstance(other, CJet):
            if other == 0:
                return CJet.constant(self.coeffs[0] * 0, self.center, self.order)
            return CJet(self.center, self.valuation, tuple(c * other for c in self.coeffs))
        self._check(other)
        K = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        cs = [sum(a[i] * b[n - i] for i in range(n + 1)) for n in range(K + 1)]
        return CJet.make(self.center, self.valuation + other.valuation, cs)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, CJet):
            return CJet(self.center, self.valuation, tuple(c / other for c in self.coeffs))
        self._check(other)
        if other.is_zero():
            raise DivisionByZeroJet("divisor vanishes to carried order")
        K = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        b0 = b[0]
        q = []
        for n in range(K + 1):
            acc = a[n]
            for i in range(1, n + 1):
                acc = acc - b[i] * q[n - i]
            q.append(acc / b0)
        return CJet.make(self.center, self.valuation - other.valuation, q)

    def __rtruediv__(self, other):
        return CJet.constant(self.coeffs[0] * 0 + other, self.center, self.order) / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return jpow(self, n)
        if n < 0:
            return 1 / (self ** (-n))
        result = CJet.constant(self.coeffs[0] * 0 + 1, self.center, self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # ------------------------------------------------------------------
    def d(self) -> "CJet":
        """Jet of the derivative; the known range shrinks by one power."""
        v = self.valuation
        cs = [(v + i) * c for i, c in enumerate(self.coeffs)]
        if v == 0:
            if len(cs) == 1:
                raise OrderExceeded("derivative of an order-0 jet")
            return CJet.make(self.center, 0, cs[1:])
        return CJet.make(self.center, v - 1, cs)

    def nth_d(self, n: int) -> "CJet":
        out = self
        for _ in range(n):
            out = out.d()
        return out

    def compose_affine(self, alpha, new_center) -> "CJet":
        """Jet of ``s -> f(center + alpha*(s - new_center))`` about ``new_center``."""
        v = self.valuation
        p = alpha**v if v >= 0 else 1 / alpha ** (-v)
        cs = []
        for c in self.coeffs:
            cs.append(c * p)
            p = p * alpha
        return CJet.make(new_center, v, cs)

    def eval_at(self, h):
        """Sum the carried series at ``s = center + h``."""
        if h == 0:
            if self.valuation < 0:
                raise InvalidValuation("jet has a pole at its center")
            return self.coefficient(0)
        acc = self.coeffs[-1] * 0
        for c in reversed(self.coeffs):
            acc = acc * h + c
        v = self.valuation
        return acc * h**v if v >= 0 else acc / h ** (-v)


# ----------------------------------------------------------------------
# elementary functions, computed by the usual power-series recurrences


def _require_regular(a: CJet, name: str) -> CJet:
    if a.valuation < 0:
        raise InvalidValuation(f"{name} of a jet with a pole")
    return a.dense()


def jexp(a: CJet) -> CJet:
    a = _require_regular(a, "exp")
    be = _num.backend(a.coeffs[0], a.center)
    c = a.coeffs
    y = [be.exp(c[0])]
    for n in range(1, len(c)):
        y.append(sum(k * c[k] * y[n - k] for k in range(1, n + 1)) / n)
    return CJet.make(a.center, 0, y)


def _check_branch(c0, branch):
    if branch is None and c0.imag == 0 and c0.real < 0:
        raise BranchCut("leading coefficient on the negative real axis; pass branch='principal'")


def jlog(a: CJet, branch: str | None = None) -> CJet:
    """Principal logarithm.  Negative real leading coefficients need ``branch='principal'``."""
    if a.valuation != 0:
        raise InvalidValuation("log needs valuation 0")
    c = a.coeffs
    _check_branch(complex(c[0]), branch)
    be = _num.backend(c[0], a.center)
    y = [be.log(c[0])]
    for n in range(1, len(c)):
        acc = c[n] - sum(k * y[k] * c[n - k] for k in range(1, n)) / n
        y.append(acc / c[0])
    return CJet.make(a.center, 0, y)


def jpow(a: CJet, alpha, branch: str | None = None) -> CJet:
    """``a**alpha`` as ``exp(alpha*log(a))`` on the principal branch."""
    if a.valuation != 0:
        raise InvalidValuation("pow needs valuation 0")
    c = a.coeffs
    _check_branch(complex(c[0]), branch)
    be = _num.backend(c[0], a.center)
    y = [be.exp(alpha * be.log(c[0]))]
    for n in range(1, len(c)):
        acc = sum(((alpha + 1) * k - n) * c[k] * y[n - k] for k in range(1, n + 1))
        y.append(acc / (n * c[0]))
    return CJet.make(a.center, 0, y)


def jsincos(a: CJet) -> tuple[CJet, CJet]:
    a = _require_regular(a, "sin/cos")
    be = _num.backend(a.coeffs[0], a.center)
    c = a.coeffs
    s = [be.sin(c[0])]
    co = [be.cos(c[0])]
    for n in range(1, len(c)):
        s.append(sum(k * c[k] * co[n - k] for k in range(1, n + 1)) / n)
        co.append(-sum(k * c[k] * s[n - k] for k in range(1, n + 1)) / n)
    return CJet.make(a.center, 0, s), CJet.make(a.center, 0, co)


def jsin(a: CJet) -> CJet:
    return jsincos(a)[0]


def jcos(a: CJet) -> CJet:
    return jsincos(a)[1]


def tan_series(t0, dcoeffs) -> list:
    """Taylor coefficients of ``tan(u)`` given ``tan(u0)`` and the coefficients of ``u``.

    Uses ``tan' = (1 + tan**2) u'`` so no sine or cosine of a large imaginary
    argument is ever formed.
    """
    t = [t0]
    u = [1 + t0 * t0]
    for n in range(1, len(dcoeffs)):
        t.append(sum(k * dcoeffs[k] * u[n - k] for k in range(1, n + 1)) / n)
        u.append(sum(t[i] * t[n - i] for i in range(n + 1)))
    return t


def jtan(a: CJet) -> CJet:
    a = _require_regular(a, "tan")
    be = _num.backend(a.coeffs[0], a.center)
    return CJet.make(a.center, 0, tan_series(be.tan(a.coeffs[0]), a.coeffs))


# ----------------------------------------------------------------------
# operation-style entry points


def jet_arith(a: CJet, b: CJet, op: str) -> CJet:
    if not (isinstance(a, CJet) and isinstance(b, CJet)):
        raise TypeError("jet_arith combines two jets")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def jet_elementary(a: CJet, f: str, alpha=None, branch: str | None = None) -> CJet:
    if f == "exp":
        return jexp(a)
    if f == "log":
        return jlog(a, branch)
    if f == "pow":
        if alpha is None:
            raise ValueError("pow needs alpha")
        return jpow(a, alpha, branch)
    if f == "sin":
        return jsin(a)
    if f == "cos":
        return jcos(a)
    if f == "tan":
        return jtan(a)
    raise ValueError(f"unknown function {f!r}")


def jet_derivative_extract(a: CJet, j: int):
    return a.derivative(j)
