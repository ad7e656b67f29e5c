"""Command line interface: ``pbnf <subcommand> ...``.

Exit status is 0 on success and 2 on usage or parse errors.  With
``--check`` the decision subcommands exit 1 when the answer is negative.
JSON output is one object per line.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional, Sequence

from . import boolmat, calculus, families, opspace, oracle
from .errors import PBNFError
from .families import NORMAL, family_parse, fiber, transform
from .formula import TOKEN_OF, letters, parse, to_text
from .gf2poly import parse_polynomial

DEFAULT_MAX_LETTERS = 8


class UsageError(PBNFError):
    pass


def max_letters() -> int:
    raw = os.environ.get("PBNF_MAX_LETTERS", "")
    try:
        return int(raw) if raw else DEFAULT_MAX_LETTERS
    except ValueError:
        raise UsageError("PBNF_MAX_LETTERS must be an integer, got %r" % raw) from None


def _cap(order):
    if len(order) > max_letters():
        raise UsageError("%d letters exceed PBNF_MAX_LETTERS=%d" % (len(order), max_letters()))


def _order(arg, default):
    if not arg:
        return tuple(default)
    return tuple(v.strip() for v in arg.split(",") if v.strip())


def _op_text(op) -> str:
    if op.kind in TOKEN_OF:
        return TOKEN_OF[op.kind]
    return op.symbol


def _assignment_text(a) -> str:
    return ", ".join("%s=%d" % (k, int(v)) for k, v in a.items())


class Output:
    def __init__(self, fmt, stream):
        self.json = fmt == "json"
        self.stream = stream

    def emit(self, text: str, obj: dict):
        if self.json:
            self.stream.write(json.dumps(obj, ensure_ascii=False) + "\n")
        else:
            self.stream.write(text + "\n")


# -- subcommands ----------------------------------------------------------------

def cmd_anf(args, out):
    f = parse(args.formula)
    fam = family_parse(args.family)
    p = transform(f, fam)
    out.emit(str(p), {"formula": to_text(f), "family": fam.spec(), "polynomial": str(p),
                      "monomials": p.to_json()})
    return 0


def _cmd_decide(args, out, want):
    f = parse(args.formula)
    verdict = calculus.decide(f, family_parse(args.family))
    text = "%s; polynomial %s" % (verdict.kind, verdict.polynomial)
    if verdict.witness is not None:
        text += "; falsified by %s; satisfied by %s" % (_assignment_text(verdict.witness),
                                                          _assignment_text(verdict.model))
    out.emit(text, verdict.to_json())
    return 1 if args.check and verdict.kind != want else 0


def cmd_taut(args, out):
    return _cmd_decide(args, out, calculus.TAUTOLOGY)


def cmd_contra(args, out):
    return _cmd_decide(args, out, calculus.CONTRADICTION)


def cmd_equiv(args, out):
    res = calculus.equivalent(parse(args.f), parse(args.g), family_parse(args.family))
    if res.equivalent:
        text = "equivalent; polynomial %s" % res.left
    else:
        text = "not equivalent; left %s; right %s; difference %s" % (res.left, res.right, res.difference)
    out.emit(text, res.to_json())
    return 1 if args.check and not res.equivalent else 0


def cmd_entails(args, out):
    res = calculus.entails(parse(args.f), parse(args.g), family_parse(args.family))
    if res.holds:
        text = "entails; certificate %s" % res.certificate
    else:
        text = "does not entail; countermodel %s" % (_assignment_text(res.countermodel) or "any assignment")
    out.emit(text, res.to_json())
    return 1 if args.check and not res.holds else 0


def cmd_pullback(args, out):
    p = parse_polynomial(args.polynomial)
    fam = family_parse(args.family)
    default = ("p", "q") if p.letters() <= {"p", "q"} else sorted(p.letters())
    order = _order(args.letters, default)
    _cap(order)
    res = fiber(p, fam, order)
    if isinstance(res, opspace.OperatorDescriptor):
        out.emit(_op_text(res), {"polynomial": str(p), "family": fam.spec(), "letters": list(order),
                                 "operator": res.name, "symbol": res.symbol, "bits": res.bits})
    else:
        out.emit(str(res), {"polynomial": str(p), "family": fam.spec(), "letters": list(order),
                            "operator": res.name, "bits": res.vector.bits})
    return 0


def cmd_dbnf(args, out):
    f = parse(args.formula)
    order = _order(args.letters, letters(f))
    _cap(order)
    tv = opspace.vector_from_anf(transform(f, NORMAL), order)
    g = opspace.dbnf_from_vector(tv)
    text = to_text(g)
    if "1" not in tv.bits:
        text += "  (no true columns: empty disjunction)"
    out.emit(text, {"formula": to_text(f), "letters": list(order), "bits": tv.bits, "dbnf": to_text(g)})
    return 0


def cmd_tt(args, out):
    f = parse(args.formula)
    order = _order(args.letters, letters(f))
    _cap(order)
    table = oracle.truth_table(f, order)
    out.emit(table.render(), {"formula": to_text(f), "letters": list(order), "rows": table.to_json()})
    return 0


def cmd_table(args, out):
    fam = family_parse(args.family)
    rows = families.atomic_table(fam)
    width = max(len(r.label) for r in rows)
    if out.json:
        for r in rows:
            out.emit("", {"family": fam.spec(), "row": r.label, "polynomial": str(r.polynomial)})
    else:
        lines = ["%s  %s" % ("OP".ljust(width), fam.spec())]
        lines += ["%s  %s" % (r.label.ljust(width), r.polynomial) for r in rows]
        out.emit("\n".join(lines), {})
    return 0


def cmd_conjugates(args, out):
    report = calculus.conjugates(parse(args.formula))
    if out.json:
        out.emit("", report.to_json())
        return 0
    names = [f.spec() for f in report.families]
    lines = ["%-15s %-14s %s" % ("sentence", "formula", "  ".join(n.ljust(12) for n in names))]
    for s in report.sentences:
        polys = "  ".join(str(p).ljust(12) for _, p in s.polynomials)
        lines.append("%-15s %-14s %s" % (s.name, to_text(s.formula), polys))
    lines.append("conditional = contrapositive, inverse = converse: %s"
                 % ("yes" if report.pairings_hold else "NO"))
    out.emit("\n".join(line.rstrip() for line in lines), {})
    return 0


def cmd_matrix(args, out):
    if args.classify:
        rep = boolmat.classify_boolean_matrices()
        text = ["idempotent: %s" % " ".join(m.symbol for m in rep.members),
                "closed under + * T: %s" % ("yes" if rep.closed else "no"),
                "claimed but not idempotent: %s" % (" ".join(rep.claimed_not_idempotent) or "-"),
                "idempotent but not claimed: %s" % (" ".join(rep.idempotent_not_claimed) or "-")]
        out.emit("\n".join(text), rep.to_json())
    elif args.generate:
        rep = boolmat.selector_generation()
        text = ["closure of %s: %s" % (rep.start, " ".join(op.symbol for op in rep.operators())),
                "required: %s" % ", ".join("%s %s" % (k, "ok" if ok else "MISSING") for k, ok in rep.required)]
        out.emit("\n".join(text), rep.to_json())
    else:
        if not args.op:
            raise UsageError("matrix needs --op, --classify or --generate")
        op = opspace.operator(args.op)
        m = boolmat.mat_of(op)
        text = "%s  det %d  %s" % (m, m.det(), "idempotent" if m.is_idempotent() else "not idempotent")
        out.emit(text, {"operator": op.name, "matrix": m.to_json(), "transpose": m.T.to_json(),
                        "det": m.det(), "idempotent": m.is_idempotent()})
    return 0


def cmd_selectors(args, out):
    if args.add:
        s, t = args.add
        res = opspace.selector_add(s, t)
        valid = isinstance(res, opspace.Selector)
        out.emit(str(res), {"sum": res.bits, "selector": res.name if valid else None, "valid": valid})
    elif args.apply:
        op_key, s, t = args.apply
        op = opspace.operator(op_key)
        tv = opspace.op_on_selectors(op, s, t)
        named = opspace.operator_by_bits(tv.bits)
        out.emit("%s (%s)" % (tv.bits, _op_text(named)),
                 {"operator": op.name, "bits": tv.bits, "result": named.name})
    else:
        for sel in opspace.SELECTORS:
            out.emit(str(sel), {"selector": sel.name, "bits": sel.bits})
    return 0


def cmd_dual(args, out):
    op = opspace.operator(args.op)
    dual = opspace.dual_of(op)
    out.emit(_op_text(dual), {"operator": op.name, "dual": dual.name, "bits": dual.bits})
    return 0


# -- argument parsing -----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    fam = argparse.ArgumentParser(add_help=False)
    fam.add_argument("--family", default="normal", help="family spec, e.g. g(p',q',0) or 'complement'")
    check = argparse.ArgumentParser(add_help=False)
    check.add_argument("--check", action="store_true", help="exit 1 when the answer is negative")

    parser = argparse.ArgumentParser(prog="pbnf", description="Propositional calculus with GF(2) polynomials.")
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    def add(name, func, help, parents=()):
        p = sub.add_parser(name, help=help, parents=[common, *parents])
        p.set_defaults(func=func)
        return p

    add("anf", cmd_anf, "reduced polynomial of a formula", [fam]).add_argument("formula")
    add("taut", cmd_taut, "decide whether a formula is a tautology", [fam, check]).add_argument("formula")
    add("contra", cmd_contra, "decide whether a formula is a contradiction", [fam, check]).add_argument("formula")
    p = add("equiv", cmd_equiv, "compare two formulas", [fam, check])
    p.add_argument("f")
    p.add_argument("g")
    p = add("entails", cmd_entails, "decide f |- g", [fam, check])
    p.add_argument("f")
    p.add_argument("g")
    p = add("pullback", cmd_pullback, "operator encoded by a polynomial", [fam])
    p.add_argument("polynomial")
    p.add_argument("--letters")
    p = add("dbnf", cmd_dbnf, "disjunctive normal form")
    p.add_argument("formula")
    p.add_argument("--letters")
    p = add("tt", cmd_tt, "truth table")
    p.add_argument("formula")
    p.add_argument("--letters")
    add("table", cmd_table, "atomic operator table for a family", [fam])
    add("conjugates", cmd_conjugates, "conditional, inverse, converse, contrapositive").add_argument("formula")
    p = add("matrix", cmd_matrix, "operator matrices")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--op")
    g.add_argument("--classify", action="store_true")
    g.add_argument("--generate", action="store_true")
    p = add("selectors", cmd_selectors, "selector arithmetic")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--add", nargs=2, metavar=("S", "T"))
    g.add_argument("--apply", nargs=3, metavar=("OP", "S", "T"))
    add("dual", cmd_dual, "dual operator").add_argument("--op", required=True)
    return parser


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = Output(args.format, stdout)
    try:
        return args.func(args, out)
    except (PBNFError, KeyError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        stderr.write("pbnf: error: %s\n" % msg)
        return 2


def main(argv: Optional[List[str]] = None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
