"""Command-line surface: table queries, induced-map matrices, decomposability
decisions, witnesses, and the batch verification suites.

JSON goes to stdout (sorted keys, so equal inputs give byte-identical
output); pass --output human for readable text.  Exit codes: 0 success,
1 verification or hypothesis failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from sympdec import __version__, homotopy, induced, lifting, suites
from sympdec.errors import HypothesisFailureError, SympdecError
from sympdec.kernels import backend


def _default_seed() -> int:
    try:
        return int(os.environ.get("SYMPDEC_SEED", "0"))
    except ValueError:
        return 0


def _emit(obj: dict, output: str) -> None:
    if output == "json":
        print(json.dumps(obj, sort_keys=True, indent=2))
    else:
        for line in _human_lines(obj):
            print(line)


def _human_lines(obj, indent: int = 0):
    pad = "  " * indent
    if isinstance(obj, dict):
        for key in obj:
            value = obj[key]
            if isinstance(value, (dict, list)) and value:
                yield f"{pad}{key}:"
                yield from _human_lines(value, indent + 1)
            else:
                yield f"{pad}{key}: {_scalar(value)}"
    elif isinstance(obj, list):
        for item in obj:
            if isinstance(item, (dict, list)):
                yield f"{pad}-"
                yield from _human_lines(item, indent + 1)
            else:
                yield f"{pad}- {_scalar(item)}"
    else:
        yield f"{pad}{_scalar(obj)}"


def _scalar(value):
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (dict, list)):
        return value if value else "[]"
    return value


def _add_output(p: argparse.ArgumentParser):
    p.add_argument("--output", choices=("json", "human"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sympdec",
        description="Exact symplectic decomposability toolkit",
    )
    parser.add_argument("--version", action="version",
                        version=f"sympdec {__version__} (kernels: {backend()})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pi", help="homotopy table query")
    p.add_argument("--family", required=True, choices=homotopy.FAMILIES)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--i", required=True, type=int)
    p.add_argument("--space", choices=("group", "classifying"), default="group")
    _add_output(p)

    p = sub.add_parser("induced", help="induced-map matrix for one operation")
    p.add_argument("op", choices=("direct-sum", "r-fold", "doubling", "tensor-sp-o",
                                  "tensor-quotient", "tensor-sp-sp", "square-tensor",
                                  "ttilde", "J"))
    p.add_argument("--i", required=True, type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--u", type=int)
    p.add_argument("--v", type=int)
    p.add_argument("--z", type=int, choices=(0, 1))
    _add_output(p)

    p = sub.add_parser("decide", help="decomposability decision report")
    p.add_argument("kind", choices=("azumaya", "bundle"))
    p.add_argument("--m", required=True, type=int)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--dim", required=True, type=int)
    _add_output(p)

    p = sub.add_parser("bezout", help="minimal positive witness |v*n - 4*u*m^2| = 1")
    p.add_argument("--m", required=True, type=int)
    p.add_argument("--n", required=True, type=int)
    _add_output(p)

    p = sub.add_parser("connectivity", help="certify the pairing map 7-connected")
    p.add_argument("--m", required=True, type=int)
    p.add_argument("--n", required=True, type=int)
    _add_output(p)

    p = sub.add_parser("postnikov", help="obstruction-degree bookkeeping")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--m", type=int, default=1)
    _add_output(p)

    p = sub.add_parser("verify", help="batch verification suites")
    p.add_argument("suite", choices=suites.SUITES)
    p.add_argument("--max-m", type=int, default=2)
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--max-r", type=int, default=2)
    p.add_argument("--samples", type=int, default=25)
    p.add_argument("--seed", type=int, default=_default_seed())
    _add_output(p)

    return parser


def _require(args, names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise SympdecError(f"missing required flags: {', '.join(missing)}")


def _cmd_induced(args) -> dict:
    op = args.op
    if op == "direct-sum":
        _require(args, ("m", "n"))
        h = induced.hom_direct_sum(args.i, args.m, args.n)
    elif op == "r-fold":
        _require(args, ("n", "r"))
        h = induced.hom_r_fold(args.i, args.n, args.r)
    elif op == "doubling":
        _require(args, ("n",))
        h = induced.hom_doubling(args.i, args.n)
    elif op == "tensor-sp-o":
        _require(args, ("m", "n"))
        h = induced.hom_tensor_sp_o(args.i, args.m, args.n)
    elif op == "tensor-quotient":
        _require(args, ("m", "n"))
        h = induced.hom_tensor_quotient(args.i, args.m, args.n)
    elif op == "tensor-sp-sp":
        _require(args, ("m", "n"))
        h = induced.hom_tensor_sp_sp(args.i, args.m, args.n)
    elif op == "square-tensor":
        _require(args, ("m",))
        h = induced.hom_square_tensor(args.i, args.m)
    else:
        _require(args, ("m", "n"))
        u, v = args.u, args.v
        if u is None or v is None:
            w = lifting.bezout_uv(args.m, args.n)
            u, v = w.u, w.v
        if op == "ttilde":
            h = induced.hom_ttilde(args.i, args.m, args.n, u, v, args.z)
        else:
            h = induced.hom_j(args.i, args.m, args.n, u, v, args.z)
    body = {"op": op, "i": args.i}
    if isinstance(h, induced.ZDependent):
        body["z_dependent"] = True
        body["candidates"] = {str(z): hom.to_json() for z, hom in h.candidates}
    else:
        body.update(h.to_json())
    return body


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "pi":
            answer = homotopy.pi_table(args.family, args.i, args.n, args.space)
            body = {"family": args.family, "n": args.n, "i": args.i,
                    "space": args.space}
            body.update(answer.to_json())
            _emit(body, args.output)
            return 0

        if args.command == "induced":
            _emit(_cmd_induced(args), args.output)
            return 0

        if args.command == "decide":
            decide = lifting.decide_azumaya if args.kind == "azumaya" else lifting.decide_bundle
            report = decide(args.m, args.n, args.dim)
            _emit(report.to_json(), args.output)
            return 0

        if args.command == "bezout":
            _emit(lifting.bezout_uv(args.m, args.n).to_json(), args.output)
            return 0

        if args.command == "connectivity":
            try:
                c = lifting.connectivity_j(args.m, args.n)
            except HypothesisFailureError as exc:
                _emit({"m": args.m, "n": args.n, "connectivity": None,
                       "hypothesis_failure": str(exc)}, args.output)
                return 1
            _emit({"m": args.m, "n": args.n, "connectivity": c}, args.output)
            return 0

        if args.command == "postnikov":
            report = lifting.postnikov_degree_check(args.m, args.n)
            _emit(report, args.output)
            return 0 if report["pass"] else 1

        if args.command == "verify":
            bounds = suites.Bounds(args.max_m, args.max_n, args.max_r)
            reports = suites.run_suite(args.suite, bounds, args.samples, args.seed)
            ok = all(r.ok for r in reports)
            body = {
                "seed": args.seed,
                "samples": args.samples,
                "bounds": {"max_m": args.max_m, "max_n": args.max_n, "max_r": args.max_r},
                "suites": [r.to_json() for r in reports],
                "ok": ok,
            }
            _emit(body, args.output)
            if args.output == "human":
                for r in reports:
                    print(f"{r.suite}: {r.cases} cases, "
                          f"{len(r.failures)} failures, {r.elapsed:.2f}s")
            return 0 if ok else 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SympdecError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
