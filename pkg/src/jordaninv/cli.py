"""Command-line interface: ``jordaninv {verify,dim,inv,realize,lie} ...``.

Exit codes: 0 when every check passes, 1 when any check fails, 2 for
usage, parse and schema errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import fields
from pathlib import Path

from . import __version__, dim, inv, lie, realize, verify
from .comp import CompAlgebra
from .jordan import HermMat
from .models import ModelMismatch

SCHEMA_VERSION = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class ParseError(ValueError):
    pass


class SchemaError(ValueError):
    pass


# ---------------------------------------------------------------------------
# config


def read_config_file(path: str) -> dict[str, str]:
    out = {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read config file: {exc}") from exc
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError(f"{path}:{lineno}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        out[key.replace("-", "_")] = value
    return out


_CONVERT = {
    "seed": int,
    "height": int,
    "monomial_cap": int,
    "cap": int,
    "tolerance": float,
    "points": int,
    "suites": lambda s: [x.strip() for x in s.split(",") if x.strip()],
    "algebras": lambda s: [x.strip() for x in s.split(",") if x.strip()],
    "algebra": lambda s: [x.strip() for x in s.split(",") if x.strip()],
    "copies": lambda s: [int(x) for x in s.split(",") if x.strip()],
}


def build_config(args: argparse.Namespace) -> verify.Config:
    """Defaults, then the config file, then flags."""
    cfg = verify.Config()
    known = {f.name for f in fields(cfg)}
    if getattr(args, "config", None):
        for key, raw in read_config_file(args.config).items():
            conv = _CONVERT.get(key)
            if conv is None:
                raise ParseError(f"unknown config key {key!r}")
            key = {"cap": "monomial_cap", "algebra": "algebras"}.get(key, key)
            try:
                setattr(cfg, key, conv(raw))
            except ValueError as exc:
                raise ParseError(f"bad value for {key}: {raw!r}") from exc
    for name, attr in (("seed", "seed"), ("height", "height"), ("cap", "monomial_cap"), ("tolerance", "tolerance"), ("points", "points")):
        v = getattr(args, name, None)
        if v is not None:
            setattr(cfg, attr, v)
    if getattr(args, "suite", None):
        cfg.suites = list(args.suite)
    if getattr(args, "algebra", None) and isinstance(args.algebra, list):
        cfg.algebras = [CompAlgebra.parse(a).jordan_name for a in args.algebra]
    if getattr(args, "copies", None) and isinstance(args.copies, list):
        cfg.copies = list(args.copies)
    try:
        cfg.algebras = [CompAlgebra.parse(a).jordan_name for a in cfg.algebras]
    except KeyError as exc:
        raise ParseError(f"unknown algebra {exc}") from None
    assert set(vars(cfg)) <= known
    return cfg


def config_echo(cfg: verify.Config) -> dict:
    return {f.name: getattr(cfg, f.name) for f in fields(cfg)}


def make_report(suite: str, checks: list[verify.Check], cfg: verify.Config) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": "jordaninv",
        "version": __version__,
        "suite": suite,
        "config": config_echo(cfg),
        "checks": [c.to_json() for c in checks],
        "summary": verify.summarize(checks),
    }


def emit(obj, out: str | None):
    text = json.dumps(obj, indent=2, sort_keys=True)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def report_exit(report: dict) -> int:
    return EXIT_FAIL if report["summary"]["fail"] else EXIT_OK


# ---------------------------------------------------------------------------
# tuple input


def load_tuple(path: str) -> list[HermMat]:
    try:
        obj = json.loads(Path(path).read_text())
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from exc
    elements = obj.get("elements") if isinstance(obj, dict) else obj
    if not isinstance(elements, list) or not elements:
        raise SchemaError("expected a list of elements or {'elements': [...]}")
    try:
        xs = [HermMat.from_json(e) for e in elements]
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"bad element: {exc}") from exc
    tags = {x.algebra for x in xs}
    if isinstance(obj, dict) and "algebra" in obj:
        tags.add(CompAlgebra.parse(obj["algebra"]))
    if len(tags) != 1:
        raise SchemaError("all elements must carry the same algebra tag")
    return xs


# ---------------------------------------------------------------------------
# commands


def cmd_verify(args) -> int:
    cfg = build_config(args)
    checks = verify.run_suites(cfg)
    report = make_report(",".join(cfg.suites) or "all", checks, cfg)
    emit(report, args.out)
    return report_exit(report)


def cmd_dims(args) -> int:
    cfg = build_config(args)
    alg = CompAlgebra.parse(args.algebra[0] if args.algebra else "V0")
    copies = args.copies[0] if args.copies else 3
    degree = args.degree
    expected = {
        ("V0", 1, 3): 1,
        ("V0", 2, 3): 4,
        ("V0", 3, 3): 10,
        ("V1", 3, 3): 10,
    }.get((alg.jordan_name, copies, degree))
    if args.what == "invariants":
        name = f"invariant-dim-p{copies}-d{degree}-{args.group}"

        def fn():
            got = dim.invariant_dimension(alg, copies, degree, args.group, cap=cfg.monomial_cap)
            return (True if expected is None else got == expected), expected, got

    else:
        if copies not in (2, 3):
            raise ParseError("product-rank uses the generator sets for 2 or 3 copies")
        gens = inv.generators_for(copies)
        degrees = [3] * 4 if copies == 2 else [3] * 10 + [6]
        name = f"product-rank-p{copies}-d{degree}"
        known = {(2, 6): 10, (3, 3): 10, (3, 6): 56}.get((copies, degree)) if alg is CompAlgebra.R else None
        n_points = args.n_points or len(dim.weighted_monomials(degrees, degree)) + 4

        def fn():
            got = dim.product_rank(gens, degrees, alg, copies, degree, n_points, cfg.seed)
            return (True if known is None else got == known), known, got

    check = verify.run(name, alg.jordan_name, fn)
    report = make_report(f"dim {args.what}", [check], cfg)
    if check.status != "skip":
        report["dimension"] = check.actual
    emit(report, args.out)
    return report_exit(report)


def cmd_eval(args) -> int:
    xs = load_tuple(args.file)
    want = 2 if args.set == "p2" else 3
    if len(xs) != want:
        raise SchemaError(f"set {args.set} needs {want} elements, got {len(xs)}")
    values = inv.gens_p2(*xs) if want == 2 else inv.gens_p3(*xs)
    names = inv.P2_NAMES if want == 2 else inv.P3_NAMES
    out = {"algebra": xs[0].algebra.jordan_name, "set": args.set, "names": list(names), "values": verify._json(values)}
    if want == 3:
        out["f11_tilde"] = verify._json(inv.f11_tilde(*xs))
    emit(out, args.out)
    return EXIT_OK


def cmd_realize(args) -> int:
    cfg = build_config(args)
    tol = cfg.tolerance
    try:
        if args.kind == "binary":
            if not args.coeffs:
                raise ParseError("--coeffs a3,a2b,ab2,b3 is required")
            coeffs = [complex(c) for c in args.coeffs.split(",")]
            alg = (args.algebra or ["V0"])[0]
            res = realize.realize_binary_cubic(coeffs, CompAlgebra.parse(alg).jordan_name, tol)
        elif args.kind == "fermat" and args.mu is None and (args.algebra or ["V0"])[0] == "V0":
            res = realize.realize_fermat_v0(args.lam, tol)
        else:
            # fermat on V1, or with a prescribed mu, goes through the Mat(3) solver
            res = realize.realize_with_mu_v1(args.lam, args.mu or 0.0, tol)
    except realize.DegenerateForm as exc:
        raise ParseError(str(exc)) from exc
    except realize.SolverFailure as exc:
        emit({"kind": args.kind, "error": str(exc)}, args.out)
        return EXIT_FAIL
    emit(res.to_json(), args.out)
    return EXIT_OK if res.ok else EXIT_FAIL


def cmd_lie(args) -> int:
    alg = CompAlgebra.parse((args.algebra or ["V0"])[0])
    emit(lie.lie_basis(alg).to_json(), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _algebra(s: str) -> str:
    try:
        return CompAlgebra.parse(s).jordan_name
    except KeyError:
        raise argparse.ArgumentTypeError(f"unknown algebra {s!r}; use V0, V1, V2 or V3") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int)
    common.add_argument("--height", type=int)
    common.add_argument("--cap", type=int, help="monomial-count cap for dimension computations")
    common.add_argument("--tolerance", type=float)
    common.add_argument("--points", type=int, help="random samples per check")
    common.add_argument("--algebra", type=_algebra, action="append", help="V0, V1, V2 or V3 (repeatable)")
    common.add_argument("--copies", type=int, action="append")
    common.add_argument("--out", help="write JSON here instead of stdout")
    common.add_argument("--config", help="key=value file; flags take precedence")

    p = argparse.ArgumentParser(prog="jordaninv", description="Invariant-theory workbench for rank-3 Jordan algebras.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("--suite", action="append", help=f"one of: {', '.join(verify.SUITES)} (repeatable)")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("dim", parents=[common], help="invariant dimensions and product ranks")
    d.add_argument("what", choices=["invariants", "product-rank"])
    d.add_argument("--degree", type=int, default=3)
    d.add_argument("--group", choices=["G", "Go"], default="G")
    d.add_argument("--n-points", type=int, dest="n_points")
    d.set_defaults(func=cmd_dims)

    i = sub.add_parser("inv", parents=[common], help="evaluate invariants on a tuple")
    i.add_argument("action", choices=["eval"])
    i.add_argument("--file", required=True)
    i.add_argument("--set", choices=["p2", "p3"], default="p3")
    i.set_defaults(func=cmd_eval)

    r = sub.add_parser("realize", parents=[common], help="numerical realizations of cubic forms")
    r.add_argument("kind", choices=["binary", "fermat", "mu"])
    r.add_argument("--coeffs", help="binary cubic coefficients a3,a2b,ab2,b3")
    r.add_argument("--lambda", dest="lam", type=float, default=0.0)
    r.add_argument("--mu", type=float, help="target value of f11~ (V1 only)")
    r.set_defaults(func=cmd_realize)

    lp = sub.add_parser("lie", parents=[common], help="Lie algebra data")
    lp.add_argument("action", choices=["dump"])
    lp.set_defaults(func=cmd_lie)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, SchemaError, ModelMismatch, verify.UnknownSuite) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
