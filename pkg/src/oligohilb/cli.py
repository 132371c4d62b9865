"""Command-line front end.

Every command prints one report: JSON (sorted keys, exact rationals as
strings) or an aligned plain table. Library errors become
``{"error": {"kind": ..., "detail": ...}}`` with exit status 1; usage errors
exit with status 2.
"""

from __future__ import annotations

import argparse
import io
import json
import os
import sys
import time
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

from . import algebra, closure, cosets, spectrum
from .coefficients import GaussRat
from .elements import INFINITE
from .errors import OligoError
from .structure import Structure, StructureConfig, build
from .textio import format_expression, format_partial, format_set, parse_element_list, parse_expression, parse_partial


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def load_structure(source: str, env=None) -> Structure:
    """A preset name or a path to a JSON config; OH_BOUNDS overrides caps."""
    path = Path(source)
    config = StructureConfig.load(path) if path.is_file() else StructureConfig.preset(source)
    return build(config.with_bounds_env(env))


# -- JSON helpers


def _coeff(c: GaussRat):
    return str(c.re) if c.is_real else c.to_json()


def _point(M, u) -> str:
    return format_partial(M, u.map if isinstance(u, spectrum.SpectrumPoint) else u)


# -- commands


def cmd_acl(M, a):
    A = parse_element_list(M, a.set)
    return {"inputs": {"set": format_set(M, A)}, "result": [M.format_element(x) for x in M.acl(A)]}


def cmd_index(M, a):
    A, B = parse_element_list(M, a.left), parse_element_list(M, a.right)
    r = closure.relative_index(M, A, B)
    return {
        "inputs": {"left": format_set(M, A), "right": format_set(M, B)},
        "finite": r is not INFINITE,
        "index": None if r is INFINITE else r,
    }


def cmd_autgroup(M, a):
    A = parse_element_list(M, a.set)
    group = cosets.aut_of(M, A)
    return {"inputs": {"set": format_set(M, A)}, "order": len(group), "elements": [_point(M, g) for g in group]}


def cmd_canonical_subgroup(M, a):
    A = parse_element_list(M, a.set)
    H = cosets.canonical_subgroup(M, A)
    return {
        "inputs": {"set": format_set(M, A)},
        "base": [M.format_element(x) for x in H.base],
        "local_group": [_point(M, g) for g in H.local_group],
    }


def cmd_double_cosets(M, a):
    A, B = parse_element_list(M, a.left), parse_element_list(M, a.right)
    t = cosets.double_cosets(M, A, B)
    return {
        "inputs": {"left": format_set(M, A), "right": format_set(M, B)},
        "count": t.count,
        "representatives": [_point(M, r) for r in t.representatives],
    }


def cmd_tensor(M, a):
    A, B = parse_element_list(M, a.left), parse_element_list(M, a.right)
    summands = cosets.tensor_decompose(M, A, B)
    return {
        "inputs": {"left": format_set(M, A), "right": format_set(M, B)},
        "count": len(summands),
        "summands": [{"representative": _point(M, f), "base": [M.format_element(x) for x in base]} for f, base in summands],
    }


def cmd_algebra(M, a):
    f = parse_expression(M, a.expr)
    inputs = {"expr": format_expression(M, f)}
    if a.op == "mul":
        g = parse_expression(M, a.right)
        inputs["right"] = format_expression(M, g)
        return {"inputs": inputs, "result": format_expression(M, algebra.multiply(M, f, g))}
    if a.op == "canon":
        return {"inputs": inputs, "result": format_expression(M, algebra.canonical_form(M, f))}
    if a.op == "norm":
        r = algebra.sup_norm_sq(M, f)
        return {
            "inputs": inputs,
            "sup_norm_sq": str(r.value),
            "pattern": sorted(r.pattern),
            "is_real": r.is_real,
            "is_pointwise_nonneg": r.is_pointwise_nonneg,
        }
    g = parse_partial(M, a.at)
    inputs["at"] = format_partial(M, g)
    return {"inputs": inputs, "value": _coeff(algebra.evaluate_at(f, g))}


def cmd_spectrum(M, a):
    if a.op == "enum":
        pts = spectrum.enumerate_spectrum(M, a.bound)
        return {"inputs": {"bound": a.bound}, "count": len(pts), "points": [_point(M, u) for u in pts]}
    r = spectrum.spectrum_oracle(M, a.bound)
    return {
        "inputs": {"bound": a.bound},
        "points": r["points"],
        "functionals": r["functionals"],
        "bijection_ok": r["bijection_ok"],
        "generators": [_point(M, s) for s in spectrum.generators(M, a.bound)],
        "bijection": sorted(
            ({"point": _point(M, u), "table": "".join(map(str, bits))} for u, bits in r["bijection"]),
            key=lambda d: d["table"],
        ),
    }


def cmd_phi(M, a):
    u = spectrum.point(M, parse_partial(M, a.point))
    f = parse_expression(M, a.expr)
    return {
        "inputs": {"point": _point(M, u), "expr": format_expression(M, f)},
        "value": _coeff(spectrum.phi_eval(M, u, f)),
    }


def cmd_convolve(M, a):
    u = spectrum.point(M, parse_partial(M, a.left))
    v = spectrum.point(M, parse_partial(M, a.right))
    return {"inputs": {"left": _point(M, u), "right": _point(M, v)}, "result": _point(M, spectrum.convolve(u, v))}


def cmd_witness(M, a):
    u = spectrum.point(M, parse_partial(M, a.point))
    f = parse_expression(M, a.expr)
    value, g0 = spectrum.evaluate_via_witness(M, u, f)
    return {
        "inputs": {"point": _point(M, u), "expr": format_expression(M, f)},
        "value": _coeff(value),
        "witness": _point(M, g0),
    }


def cmd_check(M, a):
    from . import checks

    numbers = a.criterion or sorted(checks.CRITERIA)
    results = [checks.CRITERIA[k](a.seed) for k in numbers]
    return {
        "inputs": {"criteria": numbers, "seed": a.seed},
        "results": [{"criterion": r.number, "name": r.name, "passed": r.passed, "checks": r.samples, "detail": r.detail} for r in results],
        "passed": all(r.passed for r in results),
    }


def build_parser() -> argparse.ArgumentParser:
    def globals_(parser, suppress):
        kw = {"default": argparse.SUPPRESS} if suppress else {}
        parser.add_argument("--structure", help="preset (pure_set, dlo, rado, vecQ) or JSON config path", **(kw or {"default": "pure_set"}))
        parser.add_argument("--format", choices=("json", "table"), **(kw or {"default": "json"}))
        parser.add_argument("--seed", type=int, help="seed for sampled suites", **(kw or {"default": 0}))
        parser.add_argument("--timing", action="store_true", help="add wall-clock seconds to the report", **kw)

    # global flags are accepted before or after the subcommand
    common = _Parser(add_help=False)
    globals_(common, True)
    p = _Parser(prog="oligohilb", description="Coset algebras of homogeneous structures.")
    globals_(p, False)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, *args):
        sp = sub.add_parser(name, parents=[common])
        for arg in args:
            sp.add_argument(f"--{arg}", required=True)
        sp.set_defaults(fn=fn)
        return sp

    add("acl", cmd_acl, "set")
    add("index", cmd_index, "left", "right")
    add("autgroup", cmd_autgroup, "set")
    add("canonical-subgroup", cmd_canonical_subgroup, "set")
    add("double-cosets", cmd_double_cosets, "left", "right")
    add("tensor", cmd_tensor, "left", "right")

    alg = sub.add_parser("algebra").add_subparsers(dest="op", required=True, parser_class=_Parser)
    for op, extra in (("mul", ("expr", "right")), ("canon", ("expr",)), ("norm", ("expr",)), ("eval", ("expr", "at"))):
        sp = alg.add_parser(op, parents=[common])
        for arg in extra:
            sp.add_argument(f"--{arg}", required=True)
        sp.set_defaults(fn=cmd_algebra)

    spc = sub.add_parser("spectrum").add_subparsers(dest="op", required=True, parser_class=_Parser)
    for op in ("enum", "oracle"):
        sp = spc.add_parser(op, parents=[common])
        sp.add_argument("--bound", type=int, required=True)
        sp.set_defaults(fn=cmd_spectrum)

    add("phi", cmd_phi, "point", "expr")
    add("convolve", cmd_convolve, "left", "right")
    add("witness", cmd_witness, "point", "expr")
    chk = sub.add_parser("check", parents=[common])
    chk.add_argument("--criterion", type=int, action="append", choices=range(1, 9))
    chk.set_defaults(fn=cmd_check)
    return p


def _table(report: dict) -> str:
    rows = []

    def walk(prefix, v):
        if isinstance(v, dict) and v and not set(v) <= {"re", "im"}:
            for k in sorted(v):
                walk(f"{prefix}.{k}" if prefix else k, v[k])
        elif isinstance(v, list):
            if not v:
                rows.append((prefix, "[]"))
            for i, item in enumerate(v):
                walk(f"{prefix}[{i}]", item)
        else:
            rows.append((prefix, json.dumps(v, sort_keys=True) if not isinstance(v, str) else v))

    walk("", report)
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def render(report: dict, fmt: str) -> str:
    if fmt == "table":
        return _table(report)
    return json.dumps(report, sort_keys=True, indent=2)


def run(argv: list[str], env=None) -> tuple[int, str]:
    """Exit status and output text for one invocation."""
    fmt = "json"
    try:
        args = build_parser().parse_args(argv)
        fmt = args.format
        t0 = time.perf_counter()
        M = load_structure(args.structure, env)
        report = args.fn(M, args)
        report = {"command": " ".join(filter(None, [args.command, getattr(args, "op", None)])), "structure": M.config.to_dict(), **report}
        if args.timing:
            report["seconds"] = round(time.perf_counter() - t0, 6)
        return 0, render(report, fmt)
    except OligoError as exc:
        return 1, render({"error": exc.to_dict()}, fmt)
    except _UsageError as exc:
        return 2, render({"error": {"kind": "UsageError", "detail": str(exc)}}, fmt)
    except (ValueError, OSError, KeyError) as exc:
        return 1, render({"error": {"kind": type(exc).__name__, "detail": str(exc)}}, fmt)


def main_capture(argv: list[str]) -> tuple[int, str]:
    """``run`` with stray output suppressed; used by the determinism check."""
    with redirect_stdout(io.StringIO()), redirect_stderr(io.StringIO()):
        return run(argv, os.environ)


def main(argv: list[str] | None = None) -> int:
    code, text = run(sys.argv[1:] if argv is None else argv)
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
