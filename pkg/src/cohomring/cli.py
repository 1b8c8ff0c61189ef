"""Command-line front end.

Every command is available through run_command(argv) -> (exit code, text),
which never raises: domain problems (bad expressions, unsupported catalog
pairs, non-invertible leads) exit 1, usage problems (unknown flags, missing
arguments) exit 2. With --json the output is a single JSON object with the
fields {command, inputs, result, diagnostics}, rendered with sorted keys so
equal invocations produce identical bytes. The bench command is the one
exception to byte-stability, since it reports wall-clock medians.
"""

import argparse
import contextlib
import io
import json
import random
import statistics
import sys
import time

from . import expr, poly
from .cohomology import (
    catalog_get,
    cohomology_group,
    cup_is_trivial,
    distinguish,
    parse_space,
)
from .dsum import dsum_equal
from .errors import AlgebraError, ConfigError
from .ideal import complete_to_groebner, is_groebner, make_basis
from .ideal import reduce as reduce_to_normal
from .rings import IntegerRing, ModularRing, parse_ring


def _ring_text(ring) -> str:
    return f"Z{ring.n}" if isinstance(ring, ModularRing) else "Z"


def _names(args) -> tuple:
    names = tuple(s.strip() for s in args.vars.split(",") if s.strip())
    if not names:
        raise ConfigError("no variables declared")
    return names


def _poly_setup(args):
    return parse_ring(args.ring), _names(args)


def _handle_normalize(args):
    ring, names = _poly_setup(args)
    text = poly.render(expr.parse(args.expr, ring, names), names)
    return text, text, {}


def _handle_add(args):
    ring, names = _poly_setup(args)
    p = expr.parse(args.expr1, ring, names)
    q = expr.parse(args.expr2, ring, names)
    text = poly.render(p + q, names)
    return text, text, {}


def _handle_mul(args):
    ring, names = _poly_setup(args)
    p = expr.parse(args.expr1, ring, names)
    q = expr.parse(args.expr2, ring, names)
    text = poly.render(poly.mul(p, q), names)
    return text, text, {}


def _handle_eval(args):
    ring, names = _poly_setup(args)
    p = expr.parse(args.expr, ring, names)
    try:
        point = [int(v) for v in args.values]
    except ValueError:
        raise ConfigError(f"values must be integers, got {args.values}") from None
    if len(point) != len(names):
        raise ConfigError(f"expected {len(names)} values, got {len(point)}")
    value = poly.multi_eval(p, point)
    return value, str(value), {}


def _handle_reduce(args):
    ring, names = _poly_setup(args)
    basis = make_basis(expr.parse_ideal(args.ideal, ring, names))
    text = poly.render(reduce_to_normal(expr.parse(args.expr, ring, names), basis), names)
    return text, text, {}


def _handle_groebner_check(args):
    ring, names = _poly_setup(args)
    basis = make_basis(expr.parse_ideal(args.ideal, ring, names))
    if args.complete:
        done = complete_to_groebner(basis, bound=args.degree_bound)
        rendered = [poly.render(g, names) for g in done.gens]
        return rendered, "(" + ", ".join(rendered) + ")", {"mode": done.mode}
    ok = is_groebner(basis)
    return ok, "true" if ok else "false", {"mode": basis.mode}


def _handle_cohomology_ring(args):
    entry = catalog_get(parse_space(args.space), parse_ring(args.coeff))
    relations = [poly.render(g, entry.variables) for g in entry.basis.gens]
    head = f"{_ring_text(entry.ring)}[{','.join(entry.variables)}]/({', '.join(relations)})"
    degs = ", ".join(f"deg {v} = {d}" for v, d in zip(entry.variables, entry.var_degrees))
    result = {
        "ring": _ring_text(entry.ring),
        "variables": list(entry.variables),
        "degrees": list(entry.var_degrees),
        "relations": relations,
    }
    return result, f"{head}\n{degs}", {}


def _handle_cohomology_group(args):
    group = cohomology_group(parse_space(args.space), parse_ring(args.coeff), args.degree)
    return group.text(), group.text(), {}


def _handle_cup_trivial(args):
    entry = catalog_get(parse_space(args.space), parse_ring(args.coeff))
    ok = cup_is_trivial(entry, args.n, args.m)
    return ok, "true" if ok else "false", {}


def _handle_distinguish(args):
    verdict = distinguish(
        parse_space(args.space1), parse_space(args.space2), parse_ring(args.coeff)
    )
    return verdict.describe(), verdict.describe(), {}


def _handle_bench(args):
    if args.trials < 1:
        raise ConfigError("trials must be at least 1")
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    except ValueError:
        raise ConfigError(f"cannot read sizes {args.sizes!r}") from None
    if not sizes or any(n < 1 for n in sizes):
        raise ConfigError("sizes must be positive integers")
    reps = tuple(r.strip() for r in args.reps.split(",") if r.strip())
    if not reps or set(reps) - {"sparse", "dense"}:
        raise ConfigError("representations must come from sparse,dense")
    workloads = ("sparse", "dense") if args.workload == "both" else (args.workload,)
    ring = IntegerRing()
    rng = random.Random(0)
    rows, lines = [], []
    for workload in workloads:
        for n in sizes:
            if workload == "sparse":
                if n < 4:
                    raise ConfigError("sparse workload sizes start at 4")
                if n > 200000:
                    raise ConfigError("sparse workload sizes above 200000 are not supported")
                a = poly.uni_sparse(ring, [(3, 2), (n, 1)])
                b = a
            else:
                # the sparse representation walks all n^2 term pairs here,
                # so keep dense workloads at desk scale
                if n > 4096:
                    raise ConfigError("dense workload sizes above 4096 are not supported")
                a = poly.uni_sparse(ring, [(i, rng.randint(1, 9)) for i in range(n)])
                b = poly.uni_sparse(ring, [(i, rng.randint(1, 9)) for i in range(n)])
            ad, bd = poly.convert(a, "dense"), poly.convert(b, "dense")
            if not dsum_equal(poly.mul(a, b), poly.mul(ad, bd)):
                raise ConfigError("representations disagree on this workload")
            operands = {"sparse": (a, b), "dense": (ad, bd)}
            timings = {}
            for rep in reps:
                x, y = operands[rep]
                poly.mul(x, y)  # warm-up, discarded
                laps = []
                for _ in range(args.trials):
                    started = time.perf_counter()
                    poly.mul(x, y)
                    laps.append(time.perf_counter() - started)
                timings[rep] = round(statistics.median(laps) * 1000, 4)
            rows.append({"workload": workload, "size": n, "timings_ms": timings})
            lines.append(
                f"{workload} n={n}: "
                + ", ".join(f"{rep} {timings[rep]:.4f} ms" for rep in reps)
            )
    return {"rows": rows}, "\n".join(lines), {"cross_check": "equal", "trials": args.trials}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cohomring",
        description="Polynomial arithmetic, quotient rings, and a cohomology-ring catalog.",
    )
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--json", action="store_true", help="emit one JSON object")
    ringy = argparse.ArgumentParser(add_help=False)
    ringy.add_argument("--ring", default="Z", help="coefficient ring: Z, Zn, or Z/n")
    ringy.add_argument("--vars", default="X,Y", help="comma-separated variable names")
    coh = argparse.ArgumentParser(add_help=False)
    coh.add_argument("--coeff", default="Z", help="coefficient ring: Z or Z2")

    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def cmd(name, handler, parents, help_text):
        p = sub.add_parser(name, parents=[shared] + parents, help=help_text)
        p.set_defaults(handler=handler, command=name)
        return p

    p = cmd("normalize", _handle_normalize, [ringy], "parse and render canonically")
    p.add_argument("expr")
    p = cmd("add", _handle_add, [ringy], "sum of two expressions")
    p.add_argument("expr1")
    p.add_argument("expr2")
    p = cmd("mul", _handle_mul, [ringy], "product of two expressions")
    p.add_argument("expr1")
    p.add_argument("expr2")
    p = cmd("eval", _handle_eval, [ringy], "evaluate at a point")
    p.add_argument("expr")
    p.add_argument("values", nargs="+", help="one integer per variable")
    p = cmd("reduce", _handle_reduce, [ringy], "normal form modulo an ideal")
    p.add_argument("expr")
    p.add_argument("--ideal", required=True, help='generators, e.g. "(X^2, X*Y)"')
    p = cmd("groebner-check", _handle_groebner_check, [ringy], "confluence of a basis")
    p.add_argument("--ideal", required=True)
    p.add_argument("--complete", action="store_true", help="run Buchberger completion")
    p.add_argument("--degree-bound", type=int, default=8, dest="degree_bound")
    p = cmd("cohomology-ring", _handle_cohomology_ring, [coh], "presentation of H*(space)")
    p.add_argument("space")
    p = cmd("cohomology-group", _handle_cohomology_group, [coh], "one cohomology group")
    p.add_argument("space")
    p.add_argument("degree", type=int)
    p = cmd("cohomology-cup-trivial", _handle_cup_trivial, [coh], "do all cups in a bidegree vanish")
    p.add_argument("space")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p = cmd("cohomology-distinguish", _handle_distinguish, [coh], "tell two spaces apart")
    p.add_argument("space1")
    p.add_argument("space2")
    p = cmd("bench", _handle_bench, [], "sparse versus dense multiplication timings")
    p.add_argument("--workload", choices=["sparse", "dense", "both"], default="both")
    p.add_argument("--sizes", default="64,256", help="comma-separated operand sizes")
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--reps", default="sparse,dense", help="representations to time")
    return parser


def run_command(argv) -> tuple:
    """Run one command; returns (exit code, output text) and never raises."""
    capture = io.StringIO()
    try:
        with contextlib.redirect_stdout(capture), contextlib.redirect_stderr(capture):
            args = _build_parser().parse_args(list(argv))
    except SystemExit as stop:
        code = stop.code if isinstance(stop.code, int) else 2
        return code, capture.getvalue().rstrip("\n")
    inputs = {
        k: v for k, v in vars(args).items() if k not in ("handler", "command", "json")
    }
    try:
        result, human, diagnostics = args.handler(args)
    except AlgebraError as err:
        if args.json:
            payload = {
                "command": args.command,
                "inputs": inputs,
                "result": None,
                "diagnostics": {"error": str(err)},
            }
            return 1, json.dumps(payload, sort_keys=True)
        return 1, f"error: {err}"
    if args.json:
        payload = {
            "command": args.command,
            "inputs": inputs,
            "result": result,
            "diagnostics": diagnostics,
        }
        return 0, json.dumps(payload, sort_keys=True)
    return 0, human


def main(argv=None) -> int:
    code, text = run_command(sys.argv[1:] if argv is None else argv)
    if text:
        print(text, file=sys.stdout if code == 0 else sys.stderr)
    return code
