"""Command-line front end: expression parsing, graph files, computations and checks."""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import chsa
from .combinatorics import (
    DottedComposition,
    SuperPartition,
    dotted_compositions_of_degree,
    superpartitions_of_degree,
)
from .linear import Element
from .slambda import SymSuper, e, et, to_e
from .snsym import NSymSuper, zeta_N
from .sqsym import NotSymmetric, QSymSuper, include_lambda, is_symmetric, zeta_Q

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_VERIFY = 0, 1, 2, 3


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class ExprTypeError(ValueError):
    pass


class DomainError(ValueError):
    pass


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<atom>et|m|e|M|H)\[(?P<body>[^\]\[]*)(?P<close>\]?)|(?P<op>[-+*()]))"
)


@dataclass
class Token:
    kind: str
    text: str
    offset: int
    body: str = ""
    body_offset: int = 0


def tokenize(src: str) -> list[Token]:
    tokens = []
    pos = 0
    raw = src.encode()
    while pos < len(src):
        if src[pos:].strip() == "":
            break
        match = _TOKEN.match(src, pos)
        start = pos + (len(src[pos:]) - len(src[pos:].lstrip()))
        offset = len(src[:start].encode())
        if match is None:
            raise ParseError(f"unexpected character {src[start]!r}", offset)
        if match.group("num"):
            tokens.append(Token("num", match.group("num"), offset))
        elif match.group("atom"):
            if not match.group("close"):
                raise ParseError("expected ']'", len(src[: match.end()].encode()))
            body_start = match.start("body")
            tokens.append(
                Token("atom", match.group("atom"), offset, match.group("body"), len(src[:body_start].encode()))
            )
        else:
            tokens.append(Token("op", match.group("op"), offset))
        pos = match.end()
    tokens.append(Token("end", "", len(raw)))
    return tokens


@dataclass
class Node:
    op: str  # num | atom | add | sub | mul | neg
    args: tuple = ()
    value: object = None
    offset: int = 0


def _parse_entries(tok: Token) -> list[tuple[int, bool]]:
    body = tok.body
    if body.strip() == "":
        return []
    entries = []
    pos = 0
    for piece in body.split(","):
        text = piece.strip()
        where = tok.body_offset + len(body[:pos].encode()) + (len(piece) - len(piece.lstrip()))
        match = re.fullmatch(r"(\d+)(~?)", text)
        if not match:
            raise ParseError(f"bad index entry {text!r}", where)
        entries.append((int(match.group(1)), bool(match.group(2))))
        pos += len(piece) + 1
    return entries


def _atom_value(tok: Token):
    entries = _parse_entries(tok)
    name = tok.text
    try:
        if name in ("e", "et"):
            if len(entries) != 1 or entries[0][1]:
                raise ParseError(f"{name}[...] takes one plain integer", tok.body_offset)
            r = entries[0][0]
            return e(r) if name == "e" else et(r)
        if name == "m":
            dotted = tuple(v for v, d in entries if d)
            plain = tuple(v for v, d in entries if not d)
            if any(d for _, d in entries[len(dotted):]):
                raise ParseError("dotted entries must come first in m[...]", tok.body_offset)
            return SymSuper.basis(SuperPartition(dotted, plain))
        comp = DottedComposition(tuple(entries))
        return QSymSuper.basis(comp) if name == "M" else NSymSuper.basis(comp)
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc), tok.body_offset) from exc


class Parser:
    def __init__(self, src: str):
        self.tokens = tokenize(src)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def parse(self) -> Node:
        node = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.offset)
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            t = self.take()
            node = Node("add" if t.text == "+" else "sub", (node, self.term()), offset=t.offset)
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.tok.kind == "op" and self.tok.text == "*":
            t = self.take()
            node = Node("mul", (node, self.factor()), offset=t.offset)
        return node

    def factor(self) -> Node:
        t = self.tok
        if t.kind == "op" and t.text == "-":
            self.take()
            return Node("neg", (self.factor(),), offset=t.offset)
        if t.kind == "num":
            self.take()
            num, _, den = t.text.partition("/")
            if den and int(den) == 0:
                raise ParseError("zero denominator", t.offset)
            return Node("num", value=Fraction(int(num), int(den or 1)), offset=t.offset)
        if t.kind == "atom":
            self.take()
            return Node("atom", value=_atom_value(t), offset=t.offset)
        if t.kind == "op" and t.text == "(":
            self.take()
            node = self.expr()
            if not (self.tok.kind == "op" and self.tok.text == ")"):
                raise ParseError("expected ')'", self.tok.offset)
            self.take()
            return node
        raise ParseError("expected a number, basis atom or '('" if t.kind != "end" else "unexpected end of input", t.offset)


def parse(src: str) -> Node:
    return Parser(src).parse()


_RANK = {SymSuper: 0, QSymSuper: 1}


def _unify(a, b):
    """Bring two values to a common ambient algebra."""
    if isinstance(a, Fraction) or isinstance(b, Fraction):
        return a, b
    ta, tb = type(a), type(b)
    if ta is tb:
        return a, b
    if NSymSuper in (ta, tb):
        raise ExprTypeError("cannot combine H[...] with symmetric or quasi-symmetric functions")
    if _RANK[ta] < _RANK[tb]:
        return include_lambda(a), b
    return a, include_lambda(b)


def _lift(x, like):
    return like.one().scale(x) if isinstance(x, Fraction) else x


def evaluate(node: Node):
    if node.op in ("num", "atom"):
        return node.value
    if node.op == "neg":
        return -evaluate(node.args[0])
    a, b = (evaluate(n) for n in node.args)
    a, b = _unify(a, b)
    if node.op == "mul":
        if isinstance(a, Fraction):
            return b * a if isinstance(b, Fraction) else b.scale(a)
        if isinstance(b, Fraction):
            return a.scale(b)
        return a * b
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a + b if node.op == "add" else a - b
    kind = a if isinstance(a, Element) else b
    a, b = _lift(a, type(kind)), _lift(b, type(kind))
    return a + b if node.op == "add" else a - b


def evaluate_source(src: str):
    value = evaluate(parse(src))
    if isinstance(value, Fraction):
        value = SymSuper.one().scale(value)
    return value


# ---------------------------------------------------------------------------
# output


def convert(value: Element, basis: str | None) -> Element:
    if basis is None:
        return value
    if basis == "e":
        if isinstance(value, QSymSuper):
            value = _symmetric(value)
        if not isinstance(value, SymSuper):
            raise DomainError("the e basis applies to symmetric functions")
        return to_e(value)
    if basis == "m":
        if isinstance(value, QSymSuper):
            return _symmetric(value)
        if not isinstance(value, SymSuper):
            raise DomainError("the m basis applies to symmetric functions")
        return value
    if basis == "M":
        if isinstance(value, SymSuper):
            return include_lambda(value)
        if not isinstance(value, QSymSuper):
            raise DomainError("the M basis applies to quasi-symmetric functions")
        return value
    raise DomainError(f"unknown basis {basis!r}")


def _symmetric(value: QSymSuper) -> SymSuper:
    try:
        return is_symmetric(value)
    except NotSymmetric as exc:
        raise DomainError(str(exc)) from exc


def emit(obj, as_json: bool, out) -> None:
    if as_json:
        out.write(json.dumps(obj.to_json() if hasattr(obj, "to_json") else obj, indent=2) + "\n")
    else:
        out.write(str(obj) + "\n")


def _instance_of(value: Element) -> chsa.HopfInstance:
    if isinstance(value, SymSuper):
        return chsa.LAMBDA
    if isinstance(value, QSymSuper):
        return chsa.SQSYM
    from .chromatic import CHROMATIC, GraphElement

    if isinstance(value, GraphElement):
        return CHROMATIC
    raise DomainError(f"no Hopf structure is implemented for {value.family}[...] elements")


# ---------------------------------------------------------------------------
# commands


def cmd_eval(args, out) -> int:
    value = convert(evaluate_source(args.expr), args.basis)
    emit(value, args.json, out)
    return EXIT_OK


def cmd_coproduct(args, out) -> int:
    value = evaluate_source(args.expr)
    emit(chsa.coproduct(_instance_of(value), value), args.json, out)
    return EXIT_OK


def cmd_antipode(args, out) -> int:
    value = evaluate_source(args.expr)
    emit(chsa.antipode(_instance_of(value), value), args.json, out)
    return EXIT_OK


def cmd_counit(args, out) -> int:
    value = evaluate_source(args.expr)
    c = value.counit()
    emit({"counit": f"{c.numerator}/{c.denominator}"} if args.json else _fmt(c), args.json, out)
    return EXIT_OK


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def cmd_zeta(args, out) -> int:
    if args.which == "ch":
        from .chromatic import zeta_ch

        result = zeta_ch(_load_graph(args.input))
    else:
        value = evaluate_source(args.input)
        if args.which == "S":
            if isinstance(value, QSymSuper):
                value = _symmetric(value)
            if not isinstance(value, SymSuper):
                raise DomainError("zeta_S applies to symmetric functions")
            from .slambda import zeta_S

            result = zeta_S(value)
        elif args.which == "Q":
            if isinstance(value, SymSuper):
                value = include_lambda(value)
            if not isinstance(value, QSymSuper):
                raise DomainError("zeta_Q applies to quasi-symmetric functions")
            result = zeta_Q(value)
        else:
            if not isinstance(value, NSymSuper):
                raise DomainError("zeta_N applies to H[...] expressions")
            result = zeta_N(value)
    emit(result, args.json, out)
    return EXIT_OK


def _load_graph(path: str):
    from .chromatic import from_json

    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON ({exc.msg} at offset {exc.pos})") from exc
    try:
        return from_json(data)
    except (ValueError, TypeError) as exc:
        raise DomainError(f"{path}: {exc}") from exc


class UsageError(ValueError):
    pass


def _render_basis(value: SymSuper, basis: str):
    return to_e(value) if basis == "e" else value


def cmd_graph(args, out) -> int:
    from .chromatic import MultiWhiteComponent, coloring_sum, psi_coloring, psi_universal

    g = _load_graph(args.file)
    if args.action == "coproduct":
        emit(chsa.coproduct(_instance_of(g), g), args.json, out)
        return EXIT_OK

    def universal():
        try:
            return psi_universal(g), None
        except NotSymmetric as exc:
            return None, f"NotSymmetric: {exc}"

    if args.method == "universal":
        value, err = universal()
        if err:
            raise DomainError(err)
        emit(_render_basis(value, args.basis), args.json, out)
        return EXIT_OK
    if args.method == "coloring":
        try:
            value = psi_coloring(g)
        except MultiWhiteComponent as exc:
            raise DomainError(f"MultiWhiteComponent: {exc}") from exc
        emit(_render_basis(value, args.basis), args.json, out)
        return EXIT_OK

    uni, uni_err = universal()
    report = {"universal": None, "coloring": None}
    status, code = "agree", EXIT_OK
    try:
        col = psi_coloring(g)
    except MultiWhiteComponent as exc:
        col = None
        literal = g.map_linear(coloring_sum, SymSuper)
        report["coloring_error"] = f"MultiWhiteComponent: {exc}"
        report["coloring_literal"] = literal
        status, code = "discrepancy", EXIT_DOMAIN
    if uni_err:
        report["universal_error"] = uni_err
        status, code = "discrepancy", EXIT_DOMAIN
    report["universal"] = uni
    report["coloring"] = col
    if uni is not None and col is not None and uni != col:
        status, code = "discrepancy", EXIT_VERIFY
    if status == "discrepancy" and "coloring_literal" in report and uni is not None:
        report["note"] = (
            "coloring is not applied outside the admissible class; "
            + ("the literal coloring sum agrees with the universal map"
               if report["coloring_literal"] == uni
               else "the literal coloring sum differs from the universal map")
        )
    report["status"] = status

    def show(v):
        return None if v is None else _render_basis(v, args.basis)

    if args.json:
        obj = {k: (show(v).to_json() if isinstance(v, SymSuper) else v) for k, v in report.items()}
        out.write(json.dumps(obj, indent=2) + "\n")
    elif status == "agree":
        out.write(f"{show(uni)}\nmethods agree\n")
    else:
        out.write(f"status: {status}\n")
        for key in ("universal", "universal_error", "coloring", "coloring_error", "coloring_literal", "note"):
            if key in report and report[key] is not None:
                val = report[key]
                out.write(f"{key}: {show(val) if isinstance(val, SymSuper) else val}\n")
    return code


def _algebra(name: str) -> chsa.HopfInstance:
    from .chromatic import CHROMATIC, CHROMATIC_ADMISSIBLE

    return {
        "lambda": chsa.LAMBDA,
        "sqsym": chsa.SQSYM,
        "graph": CHROMATIC,
        "graph-admissible": CHROMATIC_ADMISSIBLE,
    }[name]


def cmd_verify(args, out) -> int:
    report = chsa.verify_hopf(_algebra(args.algebra), args.max_degree)
    out.write((report.to_json() if args.json else report.to_text()) + "\n")
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_bases(args, out) -> int:
    if args.family == "superpartitions":
        labels = list(superpartitions_of_degree(args.degree))
    else:
        labels = list(dotted_compositions_of_degree(args.degree))
    if args.json:
        out.write(json.dumps({"family": args.family, "degree": args.degree, "count": len(labels),
                              "labels": [str(x) for x in labels]}, indent=2) + "\n")
    else:
        for x in labels:
            out.write(str(x) + "\n")
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="superhopf", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("eval", help="evaluate an expression")
    s.add_argument("expr")
    s.add_argument("--basis", choices=["m", "e", "M"])
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_eval)

    for name, func, hlp in (
        ("coproduct", cmd_coproduct, "coproduct of an expression"),
        ("antipode", cmd_antipode, "antipode of an expression"),
        ("counit", cmd_counit, "counit of an expression"),
    ):
        s = sub.add_parser(name, help=hlp)
        s.add_argument("expr")
        s.add_argument("--json", action="store_true")
        s.set_defaults(func=func)

    s = sub.add_parser("zeta", help="apply a supercharacter")
    s.add_argument("--which", choices=["S", "Q", "N", "ch"], required=True)
    s.add_argument("input", help="expression, or a graph JSON file for --which ch")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_zeta)

    s = sub.add_parser("graph", help="chromatic computations on a graph JSON file")
    s.add_argument("action", choices=["psi", "coproduct"])
    s.add_argument("file")
    s.add_argument("--method", choices=["universal", "coloring", "both"], default="universal")
    s.add_argument("--basis", choices=["e", "m"], default="e")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_graph)

    s = sub.add_parser("verify", help="check the Hopf axioms degree by degree")
    s.add_argument("--algebra", choices=["lambda", "sqsym", "graph", "graph-admissible"], required=True)
    s.add_argument("--max-degree", type=int, required=True)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("bases", help="enumerate basis labels")
    s.add_argument("--family", choices=["superpartitions", "dotted"], required=True)
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_bases)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (ParseError, ExprTypeError, UsageError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except DomainError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN
    except (NotSymmetric, ValueError, ArithmeticError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN


if __name__ == "__main__":
    raise SystemExit(main())
