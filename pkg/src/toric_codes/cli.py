"""Command-line driver.

Exit codes: 0 success, 1 a verification check failed, 2 bad input (code
file, order spec, domain), 3 a resource budget ran out.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import checks, corpus
from .binomial import ResourceError, reduced_groebner
from .classify import one_pierced_test, quadratic_generation, zero_pierced_test
from .code import Code, CodeFormatError, DomainError, load_code
from .graphs import dual_graph
from .orders import OrderSpecError, parse_order
from .report import BasisReport, verdict_dict, verdict_text
from .toric import (default_bound, graver_basis, ideal_is_zero, indispensable_binomials,
                    toric_generators, universal_gb)

EXIT_FAILED, EXIT_INPUT, EXIT_RESOURCE = 1, 2, 3


class InputError(Exception):
    pass


def read_code(arg: str) -> Code:
    """A code file path, or ``corpus:<name>`` for a built-in code."""
    if arg.startswith("corpus:"):
        try:
            return corpus.load(arg[len("corpus:"):])
        except KeyError as exc:
            raise InputError(exc.args[0]) from exc
    path = Path(arg)
    if not path.is_file():
        raise InputError(f"no such code file: {arg}")
    return load_code(path)


def _emit(args, report) -> None:
    sys.stdout.write(report.to_json() + "\n" if args.json else report.to_text())


def cmd_gb(args) -> int:
    code = read_code(args.code)
    order = parse_order(args.order_pos or args.order or "grevlex", code)
    if ideal_is_zero(code):
        _emit(args, BasisReport.build(code, "reduced", [], order, note="zero ideal"))
        return 0
    gb = reduced_groebner(toric_generators(code).binomials, order)
    _emit(args, BasisReport.build(code, "reduced", gb.elements, order))
    return 0


def cmd_ugb(args) -> int:
    code = read_code(args.code)
    res = universal_gb(code, order_family_size=args.orders, bound=args.degbound,
                       seed=args.seed, workers=args.workers)
    if res.exact:
        note = "exact (Lawrence type)" if res.lower else "zero ideal"
    else:
        note = "sandwich closed" if res.closed else "sandwich open"
    extra = {} if res.exact else {"lower_size": len(res.lower), "upper_size": len(res.upper),
                                  "orders_tried": len(res.orders)}
    elements = res.lower if (res.exact or res.closed) else res.upper
    _emit(args, BasisReport.build(code, "universal", elements, bound=res.bound,
                                  complete=res.exact or (res.closed and res.upper_complete),
                                  note=note, extra=extra))
    return 0


def cmd_graver(args) -> int:
    code = read_code(args.code)
    g = graver_basis(code, args.degbound, method=args.method)
    _emit(args, BasisReport.build(code, f"graver/{args.method}", g.binomials,
                                  bound=g.bound, complete=g.complete))
    return 0


def cmd_indispensable(args) -> int:
    code = read_code(args.code)
    bound = default_bound(code) if args.degbound is None else args.degbound
    ind = indispensable_binomials(code, bound)
    _emit(args, BasisReport.build(code, "indispensable/fibers", ind, bound=bound))
    return 0


def cmd_classify(args) -> int:
    code = read_code(args.code)
    verdicts = [zero_pierced_test(code), quadratic_generation(code)]
    if code.n == 3:
        verdicts.append(one_pierced_test(code))
    if args.json:
        print(json.dumps([verdict_dict(v) for v in verdicts], indent=2))
    else:
        for v in verdicts:
            print(verdict_text(v))
    return 0


def cmd_graph(args) -> int:
    sys.stdout.write(dual_graph(read_code(args.code)).to_edgelist())
    return 0


def cmd_verify(args) -> int:
    codes = [read_code(c) for c in args.code] if args.code else None
    results = []
    for suite in args.suites:
        try:
            found = checks.run(suite, codes)
        except (KeyError, ValueError) as exc:
            raise InputError(str(exc.args[0] if exc.args else exc)) from exc
        results += [(suite, c) for c in found]
    if args.json:
        print(json.dumps([{"suite": s, "check": c.name, "status": c.status, "detail": c.detail}
                          for s, c in results], indent=2))
    else:
        for s, c in results:
            print(f"{c.status}  {s}  {c.name}" + (f"  ({c.detail})" if c.detail else ""))
            if c.ok is None:
                print(f"warning: {c.detail}", file=sys.stderr)
        failed = sum(c.ok is False for _, c in results)
        print(f"{len(results) - failed}/{len(results)} checks not failed")
    return EXIT_FAILED if any(c.ok is False for _, c in results) else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--budget", type=int, help="S-pair budget for Buchberger runs")
    common.add_argument("--seed", type=int, default=0, help="seed for random weight orders")
    common.add_argument("--degbound", type=int, help="weight bound for fiber enumeration")

    p = argparse.ArgumentParser(prog="toric-codes",
                                description="Toric ideals of combinatorial neural codes.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gb", parents=[common], help="reduced Groebner basis")
    s.add_argument("code")
    s.add_argument("order_pos", nargs="?", metavar="order")
    s.add_argument("--order")
    s.set_defaults(func=cmd_gb)

    s = sub.add_parser("ugb", parents=[common], help="universal Groebner basis or sandwich")
    s.add_argument("code")
    s.add_argument("--orders", type=int, default=20, help="number of random weight orders")
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_ugb)

    s = sub.add_parser("graver", parents=[common], help="Graver basis")
    s.add_argument("code")
    s.add_argument("--method", choices=["fibers", "lawrence"], default="fibers")
    s.set_defaults(func=cmd_graver)

    s = sub.add_parser("indispensable", parents=[common], help="indispensable binomials")
    s.add_argument("code")
    s.set_defaults(func=cmd_indispensable)

    s = sub.add_parser("classify", parents=[common], help="piercing classification tests")
    s.add_argument("code")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("graph", parents=[common], help="dual graph as an edge list")
    s.add_argument("code")
    s.set_defaults(func=cmd_graph)

    s = sub.add_parser("verify-paper", parents=[common],
                       help="run named verification suites: " + ", ".join(checks.SUITES))
    s.add_argument("suites", nargs="+")
    s.add_argument("--code", action="append", help="code for depth1-patterns (repeatable)")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    saved = os.environ.get("TORIC_CODES_BUDGET")
    if args.budget is not None:
        os.environ["TORIC_CODES_BUDGET"] = str(args.budget)
    try:
        return args.func(args)
    except (InputError, CodeFormatError, OrderSpecError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    finally:
        # the flag only applies to this invocation
        if saved is None:
            os.environ.pop("TORIC_CODES_BUDGET", None)
        else:
            os.environ["TORIC_CODES_BUDGET"] = saved


if __name__ == "__main__":
    sys.exit(main())
