"""Command-line front end.

Exit codes: 0 all checks pass, 1 an identity failed, 2 bad input,
3 the symbolic term guardrail was hit.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import biparavector as bpv
from . import faraday as fd
from . import linalg as la
from . import maxwell as mw
from .linalg import APPROX, EXACT, Gaussian
from .selftest import run_selftest
from .symfield import FourPotential, ResourceLimitError, SymEMField, term_limit, vec_from_json

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3


class InputError(ValueError):
    pass


@dataclass
class RunConfig:
    mode: str = EXACT
    tol: float = la.DEFAULT_TOL
    seed: int = 42
    json: bool = False

    def __post_init__(self):
        if self.mode not in (EXACT, APPROX):
            raise InputError(f"mode must be 'exact' or 'approx', not {self.mode!r}")
        if not self.tol > 0:
            raise InputError("tolerance must be positive")
        if not 0 <= self.seed < 2**64:
            raise InputError("seed must be an unsigned 64-bit integer")


def _load(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _scalar(v, mode: str):
    """Parse a JSON number, ``"p/q"`` string, ``[re, im]`` pair or ``{"re", "im"}`` object."""
    if isinstance(v, dict):
        re, im = v.get("re", 0), v.get("im", 0)
    elif isinstance(v, list):
        if len(v) != 2:
            raise InputError(f"complex entry {v!r} must be [re, im]")
        re, im = v
    else:
        re, im = v, 0
    for part in (re, im):
        if isinstance(part, bool) or not isinstance(part, (int, float, str)):
            raise InputError(f"bad numeric entry {v!r}")
    if mode == EXACT:
        if isinstance(re, float) or isinstance(im, float):
            raise InputError(f"float {v!r} in exact mode; use 'p/q' strings or --mode approx")
        try:
            return Gaussian(re, im)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(str(exc)) from exc
    try:
        return complex(_to_float(re), _to_float(im))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(str(exc)) from exc


def _to_float(v) -> float:
    if isinstance(v, str):
        try:
            return float(Fraction(v))
        except ValueError:
            return float(v)
    return float(v)


def _fmt(z) -> str:
    if isinstance(z, Gaussian):
        return str(z)
    z = complex(z)
    if z.imag == 0:
        return f"{z.real:.12g}"
    return f"({z.real:.12g}{z.imag:+.12g}j)"


def _json_scalar(z):
    if isinstance(z, Gaussian):
        return {"re": la.format_rational(z.re, True), "im": la.format_rational(z.im, True)}
    z = complex(z)
    return [z.real, z.imag]


def _matrix_lines(m) -> list[str]:
    rows = [[_fmt(v) for v in row] for row in np.asarray(m)]
    width = max(len(s) for row in rows for s in row)
    return ["  [" + "  ".join(s.rjust(width) for s in row) + "]" for row in rows]


def _emit(cfg: RunConfig, payload: dict, lines: list[str]):
    if cfg.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


# commands ----------------------------------------------------------------

def cmd_verify_potential(path: str, cfg: RunConfig) -> int:
    data = _load(path)
    try:
        p = FourPotential.from_json(data)
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"invalid four-potential: {exc}") from exc
    rep = mw.verify_potential(p)
    f = mw.derive_fields(p)
    payload = {"command": "verify-potential", "field": f.to_json(), "report": rep.to_json()}
    lines = [
        "E = (" + ", ".join(str(c) for c in f.E) + ")",
        "B = (" + ", ".join(str(c) for c in f.B) + ")",
        *rep.lines(),
    ]
    _emit(cfg, payload, lines)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_verify_field(path: str, cfg: RunConfig) -> int:
    data = _load(path)
    try:
        f = SymEMField.from_json(data)
        D = H = None
        if "D" in data or "H" in data:
            if "D" not in data or "H" not in data:
                raise ValueError("D and H must be given together")
            D, H = vec_from_json(data["D"], 3), vec_from_json(data["H"], 3)
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"invalid field: {exc}") from exc
    rep = mw.maxwell_residuals(f, D, H)
    payload = {"command": "verify-field", "report": rep.to_json()}
    lines = ["satisfies homogeneous equations: " + ("yes" if rep.homogeneous_ok else "no"), *rep.lines()]
    _emit(cfg, payload, lines)
    return EXIT_OK if rep.passed else EXIT_FAIL


def _field_value(data, mode: str) -> fd.EMFieldValue:
    if not isinstance(data, dict) or "E" not in data or "B" not in data:
        raise InputError("expected an object with 'E' and 'B'")
    vals = []
    for key in ("E", "B"):
        v = data[key]
        if not isinstance(v, list) or len(v) != 3:
            raise InputError(f"{key} must be a list of three numbers")
        vals.append([_scalar(c, mode) for c in v])
    for c in vals[0] + vals[1]:
        im = c.im if isinstance(c, Gaussian) else c.imag
        if im != 0:
            raise InputError("E and B must be real")
    return fd.EMFieldValue(*vals)


def _has_float(data) -> bool:
    if isinstance(data, float):
        return True
    if isinstance(data, dict):
        return any(_has_float(v) for v in data.values())
    if isinstance(data, list):
        return any(_has_float(v) for v in data)
    return False


def cmd_exp(path: str, cfg: RunConfig) -> int:
    data = _load(path)
    # the exponential is evaluated in floating point anyway, so float input is fine
    mode = APPROX if cfg.mode == APPROX or _has_float(data) else EXACT
    f = _field_value(data, mode)
    cf = fd.complexify(f)
    lam = None
    if f.mode == EXACT:
        try:
            lam = fd.eigenvalue(cf)
        except ValueError:
            lam = None
    if lam is None:
        lam = fd.eigenvalue(fd._approx(cf))
    L = fd.exp_F(f)
    metric, det = fd.lorentz_deviation(L)
    series = la.max_abs_diff(L, la.mat_exp_series(fd.build_F(f), 40))
    null = abs(complex(cf.invariant())) < fd.NULL_THRESHOLD
    scale = max(1.0, float(np.max(np.abs(L))) ** 2)
    ok = metric <= cfg.tol * scale and det <= cfg.tol * scale
    payload = {
        "command": "exp",
        "lambda": _json_scalar(lam),
        "null_field": bool(null),
        "matrix": [[float(v) for v in row] for row in L],
        "metric_deviation": metric,
        "det_deviation": det,
        "series_deviation": series,
        "passed": bool(ok),
    }
    lines = [
        f"lambda = {_fmt(lam)}" + ("  (null field: e^cF = I + cF)" if null else ""),
        "e^F =",
        *_matrix_lines(L),
        f"max |L^t eta L - eta| = {metric:.3e}",
        f"|det L - 1| = {det:.3e}",
        f"max |e^F - series(40)| = {series:.3e}",
        "RESULT: " + ("PASS" if ok else "FAIL"),
    ]
    _emit(cfg, payload, lines)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_decompose(path: str, cfg: RunConfig) -> int:
    data = _load(path)
    if not isinstance(data, dict) or "matrix" not in data:
        raise InputError("expected an object with 'matrix'")
    rows = data["matrix"]
    if not isinstance(rows, list) or len(rows) != 4 or any(not isinstance(r, list) or len(r) != 4 for r in rows):
        raise InputError("matrix must be 4x4")
    entries = [[_scalar(v, cfg.mode) for v in r] for r in rows]
    M = la.to_exact(entries) if cfg.mode == EXACT else np.array(entries, dtype=complex)
    bp = bpv.decompose(M)
    back = bpv.to_matrix(bp)
    if cfg.mode == EXACT:
        diff = back - M
        ok = all(v == 0 for v in diff.flat)
        residual = max((abs(complex(v)) for v in diff.flat), default=0.0)
        residual_s = "0" if ok else f"{residual:.3e}"
    else:
        residual = la.max_abs_diff(back, M)
        ok = la.allclose(back, M, cfg.tol)
        residual_s = f"{residual:.3e}"
    payload = {
        "command": "decompose",
        "coefficients": [[_json_scalar(v) for v in row] for row in bp.a],
        "roundtrip_residual": 0 if (cfg.mode == EXACT and ok) else residual,
        "passed": bool(ok),
    }
    lines = [f"a[{i}][{j}] = {_fmt(bp.a[i, j])}" for i in range(4) for j in range(4)]
    lines += [f"round-trip residual = {residual_s}", "RESULT: " + ("PASS" if ok else "FAIL")]
    _emit(cfg, payload, lines)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_selftest(seed: int, count: int, cfg: RunConfig) -> int:
    if count < 0:
        raise InputError("count must be non-negative")
    lines: list[str] = []
    code = run_selftest(seed, count, out=lines.append)
    if cfg.json:
        print(json.dumps({"command": "selftest", "seed": seed, "count": count, "lines": lines, "passed": code == 0},
                         indent=2, sort_keys=True))
    else:
        print("\n".join(lines))
    return code


# parser --------------------------------------------------------------------

def _global_flags(parser: argparse.ArgumentParser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--mode", choices=(EXACT, APPROX), default=d(EXACT), help="scalar mode for numeric inputs")
    parser.add_argument("--tol", type=float, default=d(la.DEFAULT_TOL), help="tolerance (approx mode only)")
    parser.add_argument("--json", action="store_true", default=d(False), help="emit JSON")
    parser.add_argument("--max-terms", type=int, default=d(None), help="symbolic term guardrail")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="maxmat", description=__doc__.splitlines()[0])
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in (
        ("verify-potential", "check every identity for the field of a four-potential"),
        ("verify-field", "check Maxwell's equations and their matrix forms for E, B"),
        ("exp", "closed-form Lorentz matrix e^F for constant E, B"),
        ("decompose", "biparavector coefficients of a 4x4 complex matrix"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("file")
    p = sub.add_parser("selftest", parents=[common], help="run all seeded property suites")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--count", type=int, default=100)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        cfg = RunConfig(mode=args.mode, tol=args.tol, seed=getattr(args, "seed", 42), json=args.json)
        if args.max_terms is not None and args.max_terms < 1:
            raise InputError("--max-terms must be positive")
        with term_limit(args.max_terms) if args.max_terms else contextlib.nullcontext():
            if args.command == "verify-potential":
                return cmd_verify_potential(args.file, cfg)
            if args.command == "verify-field":
                return cmd_verify_field(args.file, cfg)
            if args.command == "exp":
                return cmd_exp(args.file, cfg)
            if args.command == "decompose":
                return cmd_decompose(args.file, cfg)
            return cmd_selftest(args.seed, args.count, cfg)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitError as exc:
        print(f"error: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
