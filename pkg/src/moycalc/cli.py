"""
Command-line front end.

  moycalc build FILE       print the glued factorization
  moycalc reduce FILE      auto-reduce and print the canonical summands
  moycalc euler FILE       graded Euler characteristic of a closed diagram
  moycalc homology FILE    both Poincare polynomials
  moycalc bracket FILE     rewrite-based graph evaluation (crossings allowed)
  moycalc selftest         consistency checks for a range of n

Exit status: 0 success, 1 domain error, 2 usage error.
"""

import argparse
import json
import sys

from .diagram import DiagramError, glue, parse_diagram
from .homology import NonzeroPotential, euler_characteristic, graded_homology
from .laurent import LaurentDivisionError, LaurentPoly, quantum_integer
from .mf import IncompatibleBase, NotAFactorization, OddShift, ZeroScalar
from .moybracket import MOYGraph, StuckGraph, all_path_values, bracket_text
from .poly import NonExactDivision
from .quotient import InfiniteDimension, TriangularityViolation
from .reduce import (NotMonicInVariable, ResidualVariable, VariableInPotential,
                     auto_reduce, canonical_form)
from .symm import ReductionFailed

DOMAIN_ERRORS = (DiagramError, NonzeroPotential, LaurentDivisionError,
                 IncompatibleBase, NotAFactorization, OddShift, ZeroScalar,
                 StuckGraph, NonExactDivision, InfiniteDimension,
                 TriangularityViolation, NotMonicInVariable,
                 ResidualVariable, VariableInPotential, ReductionFailed,
                 OSError)


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except DOMAIN_ERRORS as exc:
        where = getattr(args, "file", None)
        prefix = "%s: " % where if where else ""
        print("error: %s%s" % (prefix, exc), file=sys.stderr)
        return 1


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="moycalc",
        description="factorizations and bracket values of planar diagrams")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, **kw):
        p = sub.add_parser(name, **kw)
        p.set_defaults(handler=handler)
        p.add_argument("--json", action="store_true",
                       help="emit JSON instead of text")
        return p

    p = add("build", _cmd_build, help="print the glued factorization")
    p.add_argument("file")
    p.add_argument("--show-rows", action="store_true")

    p = add("reduce", _cmd_reduce, help="auto-reduce and print summands")
    p.add_argument("file")
    p.add_argument("--show-rows", action="store_true")

    p = add("euler", _cmd_euler, help="graded Euler characteristic")
    p.add_argument("file")
    p.add_argument("--signed-euler", action="store_true",
                   help="emit poincare0 - poincare1")

    p = add("homology", _cmd_homology, help="both Poincare polynomials")
    p.add_argument("file")
    p.add_argument("--signed-euler", action="store_true")

    p = add("bracket", _cmd_bracket, help="graph rewrite evaluation")
    p.add_argument("file")

    p = add("selftest", _cmd_selftest, help="consistency checks")
    p.add_argument("--n-max", type=int, default=6)

    return parser


def _read_diagram(args):
    with open(args.file, encoding="utf-8") as fh:
        return parse_diagram(fh.read())


def _print_summand(mf, show_rows):
    print("rows: %d  shift: {%d}  parity: <%d>"
          % (len(mf.rows), mf.shift, mf.parity))
    if show_rows:
        for row in mf.rows:
            print("  %s" % row)
        for v, d, p in mf.base.rules:
            print("  rule: %s%d^%d -> %s" % (v[0], v[1], d, p))


def _cmd_build(args):
    diagram = _read_diagram(args)
    mf = glue(diagram).normalized_rows()
    if args.json:
        doc = {"n": diagram.n, "rows": [str(r) for r in mf.rows],
               "shift": mf.shift, "parity": mf.parity,
               "potential": str(mf.potential())}
        print(json.dumps(doc, indent=2))
    else:
        _print_summand(mf, args.show_rows)
        print("potential: %s" % mf.potential())
    return 0


def _cmd_reduce(args):
    diagram = _read_diagram(args)
    reduced, trace = auto_reduce(glue(diagram))
    if args.json:
        doc = {"n": diagram.n, "steps": len(trace.steps), "summands": []}
        for mf in reduced:
            cf = canonical_form(mf)
            doc["summands"].append({
                "rows": [str(r) for r in cf.rows],
                "rules": ["%s%d^%d -> %s" % (v[0], v[1], d, p)
                          for v, d, p in cf.base.rules],
                "shift": cf.shift, "parity": cf.parity})
        print(json.dumps(doc, indent=2))
        return 0
    print("steps: %d  summands: %d" % (len(trace.steps), len(reduced)))
    for k, mf in enumerate(reduced):
        print("summand %d:" % k)
        _print_summand(canonical_form(mf), args.show_rows)
    return 0


def _homology_doc(args):
    diagram = _read_diagram(args)
    reduced, trace = auto_reduce(glue(diagram))
    hom = graded_homology(reduced)
    euler = euler_characteristic(hom, signed=args.signed_euler)
    return diagram.n, euler, hom, len(trace.steps)


def _json_doc(n, euler, hom, steps):
    return {"n": n, "euler": euler.to_json(),
            "parity0": hom.poincare0.to_json(),
            "parity1": hom.poincare1.to_json(), "steps": steps}


def _cmd_euler(args):
    n, euler, hom, steps = _homology_doc(args)
    if args.json:
        print(json.dumps(_json_doc(n, euler, hom, steps), indent=2))
    else:
        print(euler)
    return 0


def _cmd_homology(args):
    n, euler, hom, steps = _homology_doc(args)
    if args.json:
        print(json.dumps(_json_doc(n, euler, hom, steps), indent=2))
    else:
        print("parity 0: %s" % hom.poincare0)
        print("parity 1: %s" % hom.poincare1)
        print("euler: %s" % euler)
    return 0


def _cmd_bracket(args):
    with open(args.file, encoding="utf-8") as fh:
        value = bracket_text(fh.read())
    if args.json:
        print(json.dumps({"bracket": value.to_json()}, indent=2))
    else:
        print(value)
    return 0


CIRCLE = "n %d\narc x1 x2\nglue x1 x2\n"
DCIRCLE = "n %d\ndline d1 d2\nglue d1 d2\n"
THETA = ("n %d\nvin x1 x2 d1\nvout d2 x3 x4\nglue d1 d2\n"
         "glue x3 x1\nglue x4 x2\n")


def _cmd_selftest(args):
    checks = []
    failures = 0
    for n in range(3, args.n_max + 1):
        qn = quantum_integer(n)
        dval = (qn * quantum_integer(n - 1)).exact_div(quantum_integer(2))

        def run(label, fn, expect):
            nonlocal failures
            try:
                got = fn()
                ok = got == expect
            except DOMAIN_ERRORS as exc:
                got, ok = "error: %s" % exc, False
            failures += 0 if ok else 1
            checks.append({"n": n, "check": label, "pass": ok,
                           "got": str(got), "want": str(expect)})

        run("circle euler", lambda: _euler_of(CIRCLE % n), qn)
        run("double circle euler", lambda: _euler_of(DCIRCLE % n), dval)
        run("circle bracket", lambda: bracket_text(CIRCLE % n), qn)
        run("double circle bracket", lambda: bracket_text(DCIRCLE % n), dval)
        run("theta bracket", lambda: bracket_text(THETA % n),
            qn * quantum_integer(n - 1))
        run("theta confluence",
            lambda: all_path_values(
                MOYGraph.from_diagram(parse_diagram(THETA % n))),
            {qn * quantum_integer(n - 1)})
        run("theta euler", lambda: _euler_of(THETA % n),
            qn * quantum_integer(n - 1))
    if args.json:
        print(json.dumps({"checks": checks, "failures": failures}, indent=2))
    else:
        for c in checks:
            print("%s  n=%d %s (got %s, want %s)"
                  % ("PASS" if c["pass"] else "FAIL", c["n"], c["check"],
                     c["got"], c["want"]))
        print("%d checks, %d failures" % (len(checks), failures))
    return 1 if failures else 0


def _euler_of(text):
    reduced, _ = auto_reduce(glue(parse_diagram(text)))
    return euler_characteristic(graded_homology(reduced))


if __name__ == "__main__":
    sys.exit(main())
