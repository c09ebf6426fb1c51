"""Scalar backends.

Standard mode runs on Python ``complex``; compensated mode runs on
``mpmath.mpc`` at a working precision of at least 34 decimal digits.  Every
routine picks its backend from the type of the values it is handed, so the
same code path serves both modes.
"""

from __future__ import annotations

import cmath
import contextlib
import math
from fractions import Fraction

import mpmath
import numpy as np

COMPENSATED_DPS = 34

_MP_TYPES = (mpmath.mpc, mpmath.mpf)


class _Std:
    name = "standard"
    eps = 2.0**-52
    exp = staticmethod(cmath.exp)
    log = staticmethod(cmath.log)
    sqrt = staticmethod(cmath.sqrt)
    sin = staticmethod(cmath.sin)
    cos = staticmethod(cmath.cos)
    tan = staticmethod(cmath.tan)

    @staticmethod
    def pi():
        return math.pi

    @staticmethod
    def euler():
        return 0.5772156649015329

    @staticmethod
    def num(x):
        if isinstance(x, Fraction):
            return complex(x.numerator / x.denominator)
        return complex(x)

    @staticmethod
    def real(x):
        if isinstance(x, Fraction):
            return x.numerator / x.denominator
        return float(x)


class _MP:
    name = "compensated"
    exp = staticmethod(mpmath.exp)
    log = staticmethod(mpmath.log)
    sqrt = staticmethod(mpmath.sqrt)
    sin = staticmethod(mpmath.sin)
    cos = staticmethod(mpmath.cos)
    tan = staticmethod(mpmath.tan)

    @property
    def eps(self):
        return mpmath.mpf(2) ** (-mpmath.mp.prec)

    @staticmethod
    def pi():
        return +mpmath.pi

    @staticmethod
    def euler():
        return +mpmath.euler

    @staticmethod
    def num(x):
        if isinstance(x, Fraction):
            return mpmath.mpc(mpmath.mpf(x.numerator) / x.denominator)
        return mpmath.mpc(x)

    @staticmethod
    def real(x):
        if isinstance(x, Fraction):
            return mpmath.mpf(x.numerator) / x.denominator
        return mpmath.mpf(x)


class _LD:
    """numpy extended precision (x87 80-bit where available), used internally."""

    name = "extended"
    exp = staticmethod(np.exp)
    log = staticmethod(np.log)
    sqrt = staticmethod(np.sqrt)
    sin = staticmethod(np.sin)
    cos = staticmethod(np.cos)
    tan = staticmethod(np.tan)

    @staticmethod
    def pi():
        return np.longdouble(1) * np.arccos(np.longdouble(-1))

    @staticmethod
    def num(x):
        if isinstance(x, Fraction):
            return np.clongdouble(np.longdouble(x.numerator) / np.longdouble(x.denominator))
        z = complex(x)
        return np.clongdouble(np.longdouble(z.real) + 1j * np.longdouble(z.imag))

    @staticmethod
    def real(x):
        if isinstance(x, Fraction):
            return np.longdouble(x.numerator) / np.longdouble(x.denominator)
        return np.longdouble(x)


STD = _Std()
MP = _MP()
LD = _LD()


def is_mp(x) -> bool:
    return isinstance(x, _MP_TYPES)


def backend(*xs):
    """Return the backend matching the first multiprecision value in ``xs``."""
    for x in xs:
        if isinstance(x, _MP_TYPES):
            return MP
    return STD


def is_zero(x) -> bool:
    return x == 0


@contextlib.contextmanager
def working_precision(mode: str):
    """Enter the mpmath precision required by ``mode`` (no-op for standard)."""
    if mode == "compensated":
        with mpmath.workdps(max(COMPENSATED_DPS, mpmath.mp.dps)):
            yield MP
    else:
        yield STD


def lift(x, mode: str):
    """Convert ``x`` to the scalar type used by ``mode``."""
    if mode == "compensated":
        return mpmath.mpc(x)
    if is_mp(x):
        return complex(x)
    return complex(x)


def to_complex(x) -> complex:
    return complex(x)


def exact_int(x):
    """Return ``int(x)`` when ``x`` is exactly a real integer, else ``None``."""
    z = complex(x) if not is_mp(x) else x
    if is_mp(z):
        z = mpmath.mpc(z)
        if z.imag != 0 or z.real != mpmath.floor(z.real):
            return None
        return int(z.real)
    if z.imag != 0.0 or z.real != math.floor(z.real):
        return None
    return int(z.real)
