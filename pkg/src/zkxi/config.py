"""Evaluation configuration.

One YAML document configures every module.  Absent keys take the defaults
below; ``dump_config`` writes every key so files round-trip exactly.

Schema (all keys optional)::

    precision_mode: standard        # or: compensated
    jet_reserve: 4                  # spare jet orders beyond the derivative target
    lattice_delta: 0.05             # snap radius around the pole/zero lattice
    em_defaults:                    # Euler-Maclaurin parameter policy for zeta
      n_min: 20                     #   N = max(n_min, ceil(n_scale*|Im s|) + n_pad)
      n_scale: 1.3
      n_pad: 10
      terms: 12                     #   R, number of Bernoulli tail terms
      target: 1.0e-12               #   allowed relative truncation estimate
    stirling_shift: 12.0            # shift log-gamma argument until |z| >= this
    stirling_terms: 12
    scan_oversample: 4              # zero-scan steps per mean zero spacing
    bisect_width: 1.0e-9
    audit_slack: 2.0                # tolerated zero-count deficit per window
    audit_window: 25.0
    asymptotic_margin: 24           # 2m for checks in the half plane Re s >= 2m
    tolerances:
      cross_route: 1.0e-8
      functional_eq: 1.0e-8
      constants: 1.0e-7
      laurent_residual: 1.0e-8
      ...

With ``precision_mode: compensated`` every tolerance that is not set
explicitly is tightened by a factor 1e-3.
"""

from __future__ import annotations

import dataclasses
import hashlib
import json
import os
from dataclasses import dataclass, field
from typing import Any, Mapping

import yaml

from .errors import ParseError, RangeError

DEFAULT_TOLERANCES = {
    "cross_route": 1e-8,
    "functional_eq": 1e-8,
    "constants": 1e-7,
    "laurent_residual": 1e-8,
    "xi_zero": 1e-9,
    "partition": 1e-9,
    "special_values": 1e-8,
    "gk_identity": 1e-7,
    "asymptotic": 0.05,
    "growth": 0.15,
    "stirling_c": 0.1,
}

COMPENSATED_FACTOR = 1e-3
# relative tolerances that describe model error, not rounding
_NOT_TIGHTENED = {"asymptotic", "growth", "stirling_c"}


@dataclass(frozen=True)
class EMPolicy:
    n_min: int = 20
    n_scale: float = 1.3
    n_pad: int = 10
    terms: int = 12
    target: float = 1e-12


@dataclass(frozen=True)
class EvalConfig:
    precision_mode: str = "standard"
    jet_reserve: int = 4
    lattice_delta: float = 0.05
    em_defaults: EMPolicy = field(default_factory=EMPolicy)
    stirling_shift: float = 12.0
    stirling_terms: int = 12
    scan_oversample: int = 4
    bisect_width: float = 1e-9
    audit_slack: float = 2.0
    audit_window: float = 25.0
    asymptotic_margin: int = 24
    tolerances: Mapping[str, float] = field(default_factory=lambda: dict(DEFAULT_TOLERANCES))

    def __post_init__(self):
        _validate(self)

    @property
    def compensated(self) -> bool:
        return self.precision_mode == "compensated"

    def tol(self, name: str) -> float:
        return self.tolerances[name]

    def replace(self, **changes) -> "EvalConfig":
        return dataclasses.replace(self, **changes)

    def to_dict(self) -> dict:
        d = dataclasses.asdict(self)
        d["tolerances"] = dict(sorted(self.tolerances.items()))
        return d

    def fingerprint(self) -> str:
        blob = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()[:16]



_SCALARS = {
    "precision_mode": str,
    "jet_reserve": int,
    "lattice_delta": float,
    "stirling_shift": float,
    "stirling_terms": int,
    "scan_oversample": int,
    "bisect_width": float,
    "audit_slack": float,
    "audit_window": float,
    "asymptotic_margin": int,
}
_EM_KEYS = {"n_min": int, "n_scale": float, "n_pad": int, "terms": int, "target": float}


def _coerce(value, typ, path):
    if typ is str:
        if not isinstance(value, str):
            raise ParseError("expected a string", path)
        return value
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f"expected {typ.__name__}", path)
    if typ is int:
        if isinstance(value, float) and not value.is_integer():
            raise ParseError("expected an integer", path)
        return int(value)
    return float(value)


def _validate(c: EvalConfig):
    if c.precision_mode not in ("standard", "compensated"):
        raise RangeError("must be 'standard' or 'compensated'", "precision_mode")
    for name in _SCALARS:
        if name == "precision_mode":
            continue
        if not getattr(c, name) > 0:
            raise RangeError("must be positive", name)
    if not c.lattice_delta < 0.25:
        raise RangeError("must be < 0.25", "lattice_delta")
    if c.jet_reserve < 2:
        raise RangeError("must be >= 2", "jet_reserve")
    for name in _EM_KEYS:
        if not getattr(c.em_defaults, name) > 0:
            raise RangeError("must be positive", f"em_defaults.{name}")
    for name, value in c.tolerances.items():
        if not value > 0:
            raise RangeError("must be positive", f"tolerances.{name}")


DEFAULT = EvalConfig()


def config_from_dict(doc: Mapping[str, Any] | None) -> EvalConfig:
    doc = {} if doc is None else doc
    if not isinstance(doc, Mapping):
        raise ParseError("top level must be a mapping")
    kwargs: dict[str, Any] = {}
    for key, value in doc.items():
        if key in _SCALARS:
            kwargs[key] = _coerce(value, _SCALARS[key], key)
        elif key == "em_defaults":
            if not isinstance(value, Mapping):
                raise ParseError("expected a mapping", key)
            em = {}
            for k2, v2 in value.items():
                if k2 not in _EM_KEYS:
                    raise ParseError("unknown key", f"em_defaults.{k2}")
                em[k2] = _coerce(v2, _EM_KEYS[k2], f"em_defaults.{k2}")
            kwargs["em_defaults"] = EMPolicy(**em)
        elif key == "tolerances":
            if not isinstance(value, Mapping):
                raise ParseError("expected a mapping", key)
            kwargs["tolerances"] = {
                str(k2): _coerce(v2, float, f"tolerances.{k2}") for k2, v2 in value.items()
            }
        else:
            raise ParseError("unknown key", str(key))

    explicit = dict(kwargs.pop("tolerances", {}))
    tols = dict(DEFAULT_TOLERANCES)
    if kwargs.get("precision_mode") == "compensated":
        for name in tols:
            if name not in _NOT_TIGHTENED:
                tols[name] *= COMPENSATED_FACTOR
    tols.update(explicit)
    return EvalConfig(tolerances=tols, **kwargs)


def config_load(source: str) -> EvalConfig:
    """Parse a YAML document (not a path) into an :class:`EvalConfig`."""
    try:
        doc = yaml.safe_load(source)
    except yaml.YAMLError as exc:
        raise ParseError(f"malformed document: {exc}") from exc
    return config_from_dict(doc)


def config_load_file(path: str | os.PathLike) -> EvalConfig:
    with open(path, encoding="utf-8") as fh:
        return config_load(fh.read())


def dump_config(c: EvalConfig) -> str:
    return yaml.safe_dump(c.to_dict(), sort_keys=False)


def resolve(cfg: EvalConfig | None) -> EvalConfig:
    return DEFAULT if cfg is None else cfg
