"""Command-line entry point: ``zkxi <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 bad arguments,
3 zero-count audit failure, 4 insufficient zero coverage.
"""

from __future__ import annotations

import argparse
import os
import re
import sys

from .config import EvalConfig, config_load_file
from .errors import (
    AuditFailed,
    CoverageInsufficient,
    ParseError,
    RangeError,
    RangeInvalid,
    RangeMismatch,
    TooCloseToZero,
    ZkxiError,
)
from .report import dumps
from .verify import SUITES, run_suite
from .xik import xik_eval
from .zeros import count_vs_mainterm, interlace, mozer_residual, scan_zeros
from .zk import ROUTES, zk_eval

_REAL = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_COMPLEX = re.compile(rf"^(?P<re>[+-]?{_REAL})(?:(?P<sign>[+-])(?P<im>{_REAL})?i)?$")
_IMAG = re.compile(rf"^(?P<sign>[+-]?)(?P<im>{_REAL})?i$")

EXIT_OK, EXIT_VERIFY, EXIT_ARGS, EXIT_AUDIT, EXIT_COVERAGE = 0, 1, 2, 3, 4


def parse_complex(text: str) -> complex:
    """``a+bi``, ``a-bi``, ``a`` or ``bi``; exponents allowed, no spaces."""
    m = _COMPLEX.match(text)
    if m:
        im = 0.0
        if m["sign"]:
            im = float(m["im"] or 1.0) * (-1 if m["sign"] == "-" else 1)
        return complex(float(m["re"]), im)
    m = _IMAG.match(text)
    if m:
        return complex(0.0, float(m["im"] or 1.0) * (-1 if m["sign"] == "-" else 1))
    raise argparse.ArgumentTypeError(f"not a complex literal: {text!r}")


def parse_range(text: str) -> tuple[float, float]:
    try:
        a, b = (float(x) for x in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"range must look like a:b, got {text!r}") from None
    return a, b


def _load_config(path: str | None) -> EvalConfig:
    path = path or os.environ.get("ZKXI_CONFIG")
    return config_load_file(path) if path else EvalConfig()


def _write(path: str | None, text: str):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _emit(obj, out: str | None = None):
    text = dumps(obj) + "\n"
    sys.stdout.write(text)
    if out:
        _write(out, text)


# ---------------------------------------------------------------------------


def cmd_eval(args, cfg: EvalConfig) -> int:
    s = args.s
    b = zk_eval(s, args.k, route=args.routes, cfg=cfg)
    payload = {
        "k": b.k,
        "s": b.s,
        "Zk": b.Zk,
        "f": b.f,
        "route": b.route,
        "routes": b.routes,
        "route_spread": b.route_spread,
        "laurent_center": b.laurent_center,
        "hardy": b.hardy,
        "imag_residual": b.imag_residual,
        "xi_k": xik_eval(s, args.k, cfg),
    }
    if b.laurent_center is not None:
        payload["laurent"] = {
            "center": b.laurent_center,
            "valuation": b.jet.valuation,
            "coefficients": [complex(c) for c in b.jet.coeffs],
        }
    _emit(payload)
    return EXIT_OK


def _scan(args, cfg: EvalConfig, k: int, lo: float, hi: float):
    return scan_zeros(k, lo, hi, cfg, workers=args.workers)


def cmd_zeros(args, cfg: EvalConfig) -> int:
    lo, hi = args.range
    try:
        zl = _scan(args, cfg, args.k, lo, hi)
    except AuditFailed as exc:
        if args.out:
            _write(args.out, _serialize(exc.zerolist, args.format))
        raise
    _write(args.out, _serialize(zl, args.format))
    summary = (f"k={zl.k} range={lo:g}:{hi:g} count={len(zl)} "
               f"step={zl.scan_step_used:.6g} suspected_missed={zl.suspected_missed}")
    print(summary, file=sys.stdout if args.out else sys.stderr)
    return EXIT_OK


def _serialize(zl, fmt: str) -> str:
    return zl.to_csv() if fmt == "csv" else zl.to_json()


def cmd_interlace(args, cfg: EvalConfig) -> int:
    lo, hi = args.range
    # one zero of the next derivative may sit just outside [lo, hi]; scan from the origin
    zk = _scan(args, cfg, args.k, 0.0, hi)
    zk1 = _scan(args, cfg, args.k + 1, 0.0, hi)
    rep = interlace(args.k, zk, zk1, lo, hi)
    bad = rep.notes["violations"]
    if args.out:
        text = dumps(rep) + "\n" if args.format == "json" else _interlace_csv(rep)
        _write(args.out, text)
    print(f"k={args.k} range={lo:g}:{hi:g} pairs={rep.notes['pairs']}")
    print(f"violations: {bad}")
    return EXIT_OK if bad == 0 else EXIT_VERIFY


def _interlace_csv(rep) -> str:
    rows = ["left,right,zeros_between"]
    for c in rep.cases:
        rows.append(f"{c.inputs['left']:.15g},{c.inputs['right']:.15g},{c.actual}")
    return "\n".join(rows) + "\n"


def cmd_mozer(args, cfg: EvalConfig) -> int:
    T = args.zeros_to
    zl = _scan(args, cfg, args.k, 0.0, T)
    results = []
    for t in args.t:
        r = mozer_residual(args.k, t, zl, cfg)
        d = r.to_dict()
        d["C"] = abs(r.residual) * t
        results.append(d)
    payload = results[0] if len(results) == 1 else {"k": args.k, "T_max": T, "cases": results}
    _emit(payload, args.out)
    return EXIT_OK


def cmd_count(args, cfg: EvalConfig) -> int:
    lo, hi = args.range
    zl = _scan(args, cfg, args.k, lo, hi)
    rows = []
    for T in args.T or [hi]:
        c = count_vs_mainterm(zl, T)
        rows.append({"T": c.T, "count": c.count, "mainterm": c.mainterm, "deviation": c.deviation,
                     "bound": 2 * c.log_T, "within_bound": abs(c.deviation) <= 2 * c.log_T})
    if args.format == "csv":
        lines = ["T,count,mainterm,deviation,bound"]
        lines += [f"{r['T']:.15g},{r['count']},{r['mainterm']:.15g},{r['deviation']:.15g},"
                  f"{r['bound']:.15g}" for r in rows]
        text = "\n".join(lines) + "\n"
        _write(args.out, text)
        if args.out:
            print(text, end="")
    else:
        _emit({"k": args.k, "counts": rows}, args.out)
    worst = max(abs(r["deviation"]) for r in rows)
    print(f"k={args.k} count={len(zl)} worst_deviation={worst:.6g}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args, cfg: EvalConfig) -> int:
    rep = run_suite(args.suite, cfg)
    _emit(rep, args.out)
    return EXIT_OK if rep.ok else EXIT_VERIFY


# ---------------------------------------------------------------------------


def _nonneg_int(text: str) -> int:
    k = int(text)
    if k < 0:
        raise argparse.ArgumentTypeError("k must be >= 0")
    return k


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zkxi", description="Evaluate Z_k, xi_k and their zeros.")
    p.add_argument("--config", help="YAML config file (default: $ZKXI_CONFIG)")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="Z_k(s), f_k(s) and xi_k(s) at one point")
    e.add_argument("--k", type=_nonneg_int, required=True)
    e.add_argument("--s", type=parse_complex, required=True, help="complex literal such as 0.5+14i")
    e.add_argument("--routes", choices=ROUTES + ("all",), default="binomial")
    e.set_defaults(func=cmd_eval)

    def table(name, func, help, needs_range=True):
        q = sub.add_parser(name, help=help)
        q.add_argument("--k", type=_nonneg_int, required=True)
        q.add_argument("--range", type=parse_range, required=needs_range, metavar="A:B")
        q.add_argument("--out")
        q.add_argument("--format", choices=("csv", "json"), default="json")
        q.add_argument("--workers", type=int, default=1)
        q.set_defaults(func=func)
        return q

    table("zeros", cmd_zeros, "zeros of the k-th derivative of Hardy's Z")
    table("interlace", cmd_interlace, "check one zero of Z^(k+1) between zeros of Z^(k)")
    m = table("mozer", cmd_mozer, "the sum rule for d/dt(Z^(k+1)/Z^(k))", needs_range=False)
    m.add_argument("--t", type=float, action="append", required=True)
    m.add_argument("--zeros-to", type=float, default=400.0)
    c = table("count", cmd_count, "zero counts against the main term")
    c.add_argument("--T", type=float, action="append")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=tuple(SUITES) + ("all",), required=True)
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)
    return p


def _join_values(argv: list[str]) -> list[str]:
    # "-1.3+9i" looks like an option to argparse; bind it to its flag
    out, i = [], 0
    while i < len(argv):
        if argv[i] == "--s" and i + 1 < len(argv):
            out.append(f"--s={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_join_values(sys.argv[1:] if argv is None else list(argv)))
    try:
        cfg = _load_config(args.config)
    except (ParseError, RangeError, OSError) as exc:
        print(f"zkxi: config: {exc}", file=sys.stderr)
        return EXIT_ARGS
    try:
        return args.func(args, cfg)
    except AuditFailed as exc:
        print(f"zkxi: audit failed: {exc}", file=sys.stderr)
        return EXIT_AUDIT
    except (CoverageInsufficient, RangeMismatch) as exc:
        print(f"zkxi: coverage: {exc}", file=sys.stderr)
        return EXIT_COVERAGE
    except (RangeInvalid, TooCloseToZero, ValueError) as exc:
        print(f"zkxi: {exc}", file=sys.stderr)
        return EXIT_ARGS
    except ZkxiError as exc:
        print(f"zkxi: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ARGS


if __name__ == "__main__":
    sys.exit(main())
