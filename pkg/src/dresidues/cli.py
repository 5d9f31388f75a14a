"""Terminal front end: parse expressions over Q(x), run the pipeline stages,
emit exact text or JSON.

Grammar (everything exact, no floats): integer literals, the variable x,
binary + - * /, integer ^, parentheses, unary minus.  Precedence is
^ before unary - before * / before + -, with left associativity for the
binary operators; implicit multiplication is rejected.  Exit codes: 0 ok,
1 usage or parse error, 2 precondition violation, 3 internal assertion.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import __version__, galois, residues, shiftset, summability, testkit
from .errors import DomainError, InexactDivisionError, InternalError, ParseError
from .hermite import hermite_list
from .polys import Poly, poly_str
from .ratfun import RatFun
from .reduction import simple_reduction


# -- expression parsing -----------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: int
    offset: int


@dataclass(frozen=True)
class Var:
    offset: int


@dataclass(frozen=True)
class Neg:
    arg: object
    offset: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    offset: int


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int
    offset: int


Expr = object  # Num | Var | Neg | BinOp | Pow

_TOKEN_OPS = set("+-*/^()")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
        elif ch == "x":
            tokens.append(("var", ch, i))
            i += 1
        elif ch in _TOKEN_OPS:
            tokens.append((ch, ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def take(self, kind: str | None = None) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1] or 'end of input'!r}", tok[2])
        self.pos += 1
        return tok

    def parse(self) -> Expr:
        node = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op, _, off = self.take()
            node = BinOp(op, node, self.term(), off)
        return node

    def term(self) -> Expr:
        node = self.unary()
        while self.peek()[0] in ("*", "/"):
            op, _, off = self.take()
            node = BinOp(op, node, self.unary(), off)
        return node

    def unary(self) -> Expr:
        tok = self.peek()
        if tok[0] == "-":
            self.take()
            return Neg(self.unary(), tok[2])
        if tok[0] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.peek()[0] == "^":
            _, _, off = self.take()
            sign = 1
            if self.peek()[0] == "-":
                self.take()
                sign = -1
            tok = self.take("int")
            return Pow(base, sign * int(tok[1]), off)
        return base

    def atom(self) -> Expr:
        tok = self.take()
        if tok[0] == "int":
            return Num(int(tok[1]), tok[2])
        if tok[0] == "var":
            return Var(tok[2])
        if tok[0] == "(":
            node = self.expr()
            self.take(")")
            return node
        raise ParseError(f"expected a value, found {tok[1] or 'end of input'!r}", tok[2])


def _evaluate(node: Expr) -> RatFun:
    if isinstance(node, Num):
        return RatFun(Poly([node.value]))
    if isinstance(node, Var):
        return RatFun(Poly([0, 1]))
    if isinstance(node, Neg):
        return -_evaluate(node.arg)
    if isinstance(node, Pow):
        base = _evaluate(node.base)
        if base.is_zero and node.exponent < 0:
            raise ParseError("negative power of zero", node.offset)
        return base**node.exponent
    if isinstance(node, BinOp):
        left = _evaluate(node.left)
        right = _evaluate(node.right)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        if right.is_zero:
            raise ParseError("division by zero", node.offset)
        return left / right
    raise InternalError(f"unknown node {node!r}")


def parse(text: str) -> RatFun:
    """Parse and exactly evaluate an expression into a rational function.

    >>> parse("1/x + 1/x")
    RatFun('(2)/(x)')
    """
    return _evaluate(_Parser(text).parse())


def parse_poly(text: str) -> Poly:
    f = parse(text)
    if not f.is_polynomial:
        raise DomainError("expected a polynomial expression")
    return f.num


# -- output rendering ----------------------------------------------------------


def _poly_coeffs(p: Poly) -> list[str]:
    return [str(c) for c in p.coeffs]


def _fmt_poly(p: Poly, pretty: bool) -> str:
    if pretty:
        return poly_str(p)
    return "[" + " ".join(_poly_coeffs(p)) + "]"


def _fmt_ratfun(f: RatFun, pretty: bool) -> str:
    if pretty:
        return str(f)
    return f"num{_fmt_poly(f.num, False)} den{_fmt_poly(f.den, False)}"


def _ratfun_json(f: RatFun) -> dict:
    return {"num": _poly_coeffs(f.num), "den": _poly_coeffs(f.den)}


def _vec_str(vec) -> str:
    return " ".join(str(v) for v in vec)


# -- subcommand handlers ----------------------------------------------------------


def _cmd_dres(args) -> tuple[list[str], dict]:
    _, f = parse(args.expr).proper_part()
    if args.per_order:
        pairs = residues.discrete_residues(f) if not f.is_zero else []
    else:
        pairs = residues.discrete_residues_coordinated(f) if not f.is_zero else []
    if args.pretty:
        lines = [f"k={k}: B = {poly_str(p.places)}, D = {poly_str(p.values)}" for k, p in enumerate(pairs, 1)]
    else:
        lines = [f"k={k} B{_fmt_poly(p.places, False)} D{_fmt_poly(p.values, False)}" for k, p in enumerate(pairs, 1)]
    payload = {
        "pairs": [
            {"k": k, "B": _poly_coeffs(p.places), "D": _poly_coeffs(p.values)}
            for k, p in enumerate(pairs, 1)
        ]
    }
    return lines, payload


def _cmd_dres_multi(args) -> tuple[list[str], dict]:
    fs = [parse(e).proper_part()[1] for e in args.exprs]
    md = residues.discrete_residues_multi(fs)
    lines = [f"B{_fmt_poly(md.places, args.pretty)}"]
    for i, row in enumerate(md.values, 1):
        for k, d in enumerate(row, 1):
            lines.append(f"i={i} k={k} D{_fmt_poly(d, args.pretty)}")
    payload = {
        "B": _poly_coeffs(md.places),
        "D": [[_poly_coeffs(d) for d in row] for row in md.values],
    }
    return lines, payload


def _cmd_reduce(args) -> tuple[list[str], dict]:
    _, f = parse(args.expr).proper_part()
    out = simple_reduction(f, want_certificate=args.certificate)
    lines = [f"reduced {_fmt_ratfun(out.reduced, args.pretty)}"]
    payload = {"reduced": _ratfun_json(out.reduced), "certificate": None}
    if args.certificate:
        lines.append(f"certificate {_fmt_ratfun(out.certificate, args.pretty)}")
        payload["certificate"] = _ratfun_json(out.certificate)
    return lines, payload


def _cmd_hermite(args) -> tuple[list[str], dict]:
    _, f = parse(args.expr).proper_part()
    layers = hermite_list(f) if not f.is_zero else []
    lines = [f"k={k} {_fmt_ratfun(layer, args.pretty)}" for k, layer in enumerate(layers, 1)]
    return lines, {"layers": [_ratfun_json(layer) for layer in layers]}


def _cmd_shift_set(args) -> tuple[list[str], dict]:
    shifts = shiftset.shift_set(parse_poly(args.expr)).shifts
    return [" ".join(str(s) for s in shifts)], {"shifts": list(shifts)}


def _cmd_summable(args) -> tuple[list[str], dict]:
    ok, cert = summability.is_summable(parse(args.expr), want_certificate=args.certificate)
    lines = ["summable" if ok else "not summable"]
    payload = {"summable": ok, "certificate": None}
    if ok and args.certificate:
        lines.append(f"certificate {_fmt_ratfun(cert, args.pretty)}")
        payload["certificate"] = _ratfun_json(cert)
    return lines, payload


def _cmd_vspace(args) -> tuple[list[str], dict]:
    fs = [parse(e).proper_part()[1] for e in args.exprs]
    basis = summability.vspace(fs)
    return [_vec_str(v) for v in basis], {"basis": [[str(c) for c in v] for v in basis]}


def _cmd_mult_relations(args) -> tuple[list[str], dict]:
    rs = [parse(e) for e in args.exprs]
    rel = galois.multiplicative_relations(rs)
    lines = []
    for e, gamma in zip(rel.candidate_basis, rel.gammas):
        lines.append(f"candidate {_vec_str(e)} gamma {gamma}")
    for e in rel.basis:
        lines.append(f"relation {_vec_str(e)}")
    payload = {
        "candidate_basis": rel.candidate_basis,
        "gammas": [str(g) for g in rel.gammas],
        "basis": rel.basis,
    }
    return lines, payload


def _cmd_oracle(args) -> tuple[list[str], dict]:
    with open(args.specfile, encoding="utf-8") as handle:
        spec = testkit.parse_spec_text(handle.read())
    table = testkit.dres_by_definition(spec)
    lines = [f"{rep} {k} {value}" for rep, k, value in table]
    payload = {
        "table": [{"alpha": str(rep), "k": k, "value": str(value)} for rep, k, value in table]
    }
    return lines, payload


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dresidues",
        description="Exact discrete residues and rational summability over Q(x).",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--quiet", action="store_true", help="suppress stdout")
    common.add_argument("--pretty", action="store_true", help="render polynomials as expressions")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dres", parents=[common], help="discrete residues of one function")
    p.add_argument("expr")
    p.add_argument(
        "--per-order",
        action="store_true",
        help="reduce each order independently instead of against one shared divisor of initial roots",
    )
    p.set_defaults(handler=_cmd_dres)

    p = sub.add_parser("dres-multi", parents=[common], help="coordinated residues of several functions")
    p.add_argument("exprs", nargs="+")
    p.set_defaults(handler=_cmd_dres_multi)

    p = sub.add_parser("reduce", parents=[common], help="shift-reduce a simple-pole function")
    p.add_argument("expr")
    p.add_argument("--certificate", action="store_true")
    p.set_defaults(handler=_cmd_reduce)

    p = sub.add_parser("hermite", parents=[common], help="simple-pole layers of a function")
    p.add_argument("expr")
    p.set_defaults(handler=_cmd_hermite)

    p = sub.add_parser("shift-set", parents=[common], help="shift set of a polynomial")
    p.add_argument("expr")
    p.set_defaults(handler=_cmd_shift_set)

    p = sub.add_parser("summable", parents=[common], help="decide rational summability")
    p.add_argument("expr")
    p.add_argument("--certificate", action="store_true")
    p.set_defaults(handler=_cmd_summable)

    p = sub.add_parser("vspace", parents=[common], help="basis of summable coefficient vectors")
    p.add_argument("exprs", nargs="+")
    p.set_defaults(handler=_cmd_vspace)

    p = sub.add_parser(
        "galois",
        parents=[common],
        help="alias of vspace: the difference Galois group of the block-diagonal unipotent system",
    )
    p.add_argument("exprs", nargs="+")
    p.set_defaults(handler=_cmd_vspace)

    p = sub.add_parser("mult-relations", parents=[common], help="multiplicative relation lattice")
    p.add_argument("exprs", nargs="+")
    p.set_defaults(handler=_cmd_mult_relations)

    p = sub.add_parser("oracle", parents=[common], help="brute-force residues of a pole-data file")
    p.add_argument("specfile")
    p.set_defaults(handler=_cmd_oracle)
    return parser


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        lines, payload = args.handler(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InternalError, InexactDivisionError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    if args.quiet:
        return 0
    if args.json:
        print(json.dumps(payload))
    else:
        for line in lines:
            print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
