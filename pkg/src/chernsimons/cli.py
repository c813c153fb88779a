"""Command line front end.

Exit codes: 0 success, 1 parse or usage error, 2 precondition violation,
3 failed identity check.  Errors are reported as one JSON object per line on
stderr: ``{"error": <kind>, "exit_code": <n>, "message": <text>}``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .context import VarContext
from .errors import CSError, NotClosed, ParseError
from .homotopy import primitive
from .invariants import chern_weil, parse_invpoly
from .logres import GammaSet, cs_residue_check, gamma_chern, residue_matrix
from .matform import curvature, gauge, is_flat
from .parse import infer_variables, make_context, parse_connection, parse_form
from .printing import format_cycle, format_form, format_matrix
from .transgression import cs_class, rigidity_identity_check, transgress


class UsageError(ParseError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _load(args):
    if not args.input:
        raise UsageError(f"'{args.command}' needs --input FILE")
    try:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
    return parse_connection(text)


def _context_for_form(args) -> VarContext:
    if args.input:
        return _load(args).context
    if args.vars:
        names = args.vars.replace(",", " ").split()
    else:
        names = infer_variables(args.form)
    logvars = args.logvars.replace(",", " ").split() if args.logvars else ()
    return make_context(names, logvars)


def cmd_curvature(args, out):
    spec = _load(args)
    out.append(format_matrix(curvature(spec.connection.a), spec.variables, "F"))


def cmd_flat(args, out):
    spec = _load(args)
    out.append("true" if is_flat(spec.connection.a) else "false")


def cmd_gauge(args, out):
    spec = _load(args)
    conn = spec.connection
    if conn.g is None:
        raise UsageError("connection file has no g/ginv entries")
    out.append(format_matrix(gauge(conn.a, conn.g, conn.g_inv), spec.variables, "A"))


def cmd_cw(args, out):
    spec = _load(args)
    out.append(format_form(chern_weil(spec.connection.a, parse_invpoly(args.inv)), spec.variables))


def cmd_cs(args, out):
    spec = _load(args)
    a = spec.connection.a
    result = cs_class(a, args.n) if args.n is not None else transgress(a, parse_invpoly(args.inv))
    out.append(format_form(result.form, spec.variables))


def cmd_primitive(args, out):
    ctx = _context_for_form(args)
    w = parse_form(args.form, ctx)
    try:
        witness = primitive(w)
    except NotClosed as exc:
        raise NotClosed(exc.differential,
                        f"form is not closed: d = {format_form(exc.differential, ctx.names)}") from None
    out.append(format_form(witness.primitive, ctx.names))


def cmd_print(args, out):
    ctx = _context_for_form(args)
    out.append(format_form(parse_form(args.form, ctx), ctx.names))


def cmd_residue(args, out):
    spec = _load(args)
    ctx = spec.context
    s = ctx.index(args.along)
    if s not in ctx.logvars:
        raise UsageError(f"{args.along!r} is not a declared log variable")
    if args.of is None:
        out.append(format_matrix(residue_matrix(spec.connection, s), ctx.names, "G"))
        return
    kind, _, n = args.of.partition(":")
    if kind != "cs" or not n.isdigit():
        raise UsageError("--of expects cs:N")
    witness = cs_residue_check(spec.connection, int(n), s)
    out.append(f"residue = {format_form(witness.target, ctx.names)}")
    out.append(f"primitive = {format_form(witness.primitive, ctx.names)}")


def cmd_gamma(args, out):
    spec = _load(args)
    gamma = GammaSet.of_connection(spec.connection)
    out.append(format_cycle(gamma_chern(gamma, args.degree, args.convention), spec.variables))


def cmd_rigidity(args, out):
    ok = rigidity_identity_check(args.n)
    out.append("true" if ok else "false")
    return 0 if ok else 3


def cmd_selftest(args, out):
    from . import selftest
    results = selftest.run(args.seed, args.cases)
    bad = 0
    for name, passed, failed in results:
        status = "PASS" if not failed else "FAIL"
        bad += failed
        out.append(f"{status} {name} {passed}/{passed + failed}")
    out.append(f"{'ok' if not bad else 'FAILED'}: {len(results)} suites, seed {args.seed}")
    return 0 if not bad else 3


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chernsimons", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_text, needs_input=True):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--input", required=False, help="connection file" if needs_input else
                       "connection file supplying the variables")
        p.set_defaults(func=fn)
        return p

    add("curvature", cmd_curvature, "print F(A) = dA - A^2")
    add("flat", cmd_flat, "decide whether F(A) = 0")
    add("gauge", cmd_gauge, "print dg g^-1 + g A g^-1 using g/ginv from the file")
    add("cw", cmd_cw, "Chern-Weil form P(F(A))").add_argument("--inv", required=True)
    p = add("cs", cmd_cs, "transgression form of an invariant polynomial")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--inv")
    group.add_argument("--n", type=int, help="shorthand for --inv eN")
    for name, fn in (("primitive", cmd_primitive), ("print", cmd_print)):
        p = add(name, fn, f"{name} of a form expression", needs_input=False)
        p.add_argument("--form", required=True)
        p.add_argument("--vars", help="variable names (default: inferred from the expression)")
        p.add_argument("--logvars")
    p = add("residue", cmd_residue, "residue matrix, or residue of w_N with --of cs:N")
    p.add_argument("--along", required=True)
    p.add_argument("--of")
    p = add("gamma", cmd_gamma, "Chern class of the residue matrices")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--convention", choices=("standard", "paper"), default="standard")
    p = add("rigidity", cmd_rigidity, "check the univariate rigidity identity", needs_input=False)
    p.add_argument("--n", type=int, required=True)
    p = add("selftest", cmd_selftest, "run the seeded identity suites", needs_input=False)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=20)
    return parser


def _report(exc: Exception, code: int, stream) -> int:
    stream.write(json.dumps({"error": type(exc).__name__, "exit_code": code,
                             "message": str(exc)}) + "\n")
    return code


def main(argv: Optional[List[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    out: List[str] = []
    try:
        args = build_parser().parse_args(argv)
        code = args.func(args, out) or 0
    except CSError as exc:
        return _report(exc, exc.exit_code, stderr)
    except (ValueError, ZeroDivisionError) as exc:
        return _report(exc, 2, stderr)
    if out:
        stdout.write("\n".join(out) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
