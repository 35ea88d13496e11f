"""Expression language over the whole library, with ``G`` as the infinite unit.

Grammar (loosest binding first)::

    expression := additive (("<" | "<=" | "=" | ">=" | ">") additive)?
    additive   := multiplicative (("+" | "-") multiplicative)*
    multiplicative := unary (("*" | "/") unary)*
    unary      := "-" unary | power
    power      := atom ("^" unary)?          -- right-associative
    atom       := INT | "G" | ident "(" args ")" | ident
                | "(" expression ")" | "{" int-elements "}"

The glyph for the infinite unit used in print is accepted as a synonym for
``G`` on input.  ``^`` routes by the value of its operands: an integer
exponent is an exact power, a fractional one an exact root, and an exponent
containing ``G`` requires a nonnegative rational base and produces an
exponential term.  There are no variables; every line is standalone.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from . import paradoxes, series, sets
from .errors import (
    EvalTypeError,
    LexError,
    ParseError,
    UnknownIdentifier,
)
from .gnum import (
    GROSSONE,
    GrossNumber,
    NumberClass,
    Parity,
    div_exact,
    exp_gross,
    gnum,
    nth_root,
    pow_int,
)
from .paradoxes import LampState, ParadoxReport
from .series import RamanujanAudit
from .sets import AdjustedSet, EmptySet, GrossAP, RootCount

GROSSONE_GLYPH = "①"


# --- tokens -------------------------------------------------------------

class TokenKind(Enum):
    INT = "int"
    G = "G"
    IDENT = "ident"
    PLUS = "+"
    MINUS = "-"
    STAR = "*"
    SLASH = "/"
    CARET = "^"
    LPAREN = "("
    RPAREN = ")"
    LBRACE = "{"
    RBRACE = "}"
    COMMA = ","
    CMP = "cmp"
    END = "end"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    lexeme: str
    offset: int


_SINGLE = {
    "+": TokenKind.PLUS,
    "-": TokenKind.MINUS,
    "*": TokenKind.STAR,
    "/": TokenKind.SLASH,
    "^": TokenKind.CARET,
    "(": TokenKind.LPAREN,
    ")": TokenKind.RPAREN,
    "{": TokenKind.LBRACE,
    "}": TokenKind.RBRACE,
    ",": TokenKind.COMMA,
}


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


def tokenize(text: str) -> List[Token]:
    """Maximal-munch lexing; integers are arbitrary precision."""
    tokens: List[Token] = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c in " \t\r\n":
            i += 1
            continue
        start = _byte_offset(text, i)
        if c == GROSSONE_GLYPH:
            tokens.append(Token(TokenKind.G, "G", start))
            i += 1
            continue
        if c.isdecimal():
            j = i
            while j < n and text[j].isdecimal():
                j += 1
            tokens.append(Token(TokenKind.INT, text[i:j], start))
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            kind = TokenKind.G if word == "G" else TokenKind.IDENT
            tokens.append(Token(kind, word, start))
            i = j
            continue
        if c in "<>":
            if i + 1 < n and text[i + 1] == "=":
                tokens.append(Token(TokenKind.CMP, c + "=", start))
                i += 2
            else:
                tokens.append(Token(TokenKind.CMP, c, start))
                i += 1
            continue
        if c == "=":
            tokens.append(Token(TokenKind.CMP, "=", start))
            i += 1
            continue
        if c in _SINGLE:
            tokens.append(Token(_SINGLE[c], c, start))
            i += 1
            continue
        raise LexError(start, c)
    tokens.append(Token(TokenKind.END, "", _byte_offset(text, n)))
    return tokens


# --- syntax tree ----------------------------------------------------------

@dataclass(frozen=True)
class Literal:
    value: Fraction


@dataclass(frozen=True)
class Grossone:
    pass


@dataclass(frozen=True)
class Name:
    ident: str


@dataclass(frozen=True)
class Unary:
    op: str
    operand: "Expr"


@dataclass(frozen=True)
class Binary:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Compare:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Call:
    name: str
    args: Tuple["Expr", ...]


@dataclass(frozen=True)
class SetLit:
    items: Tuple["Expr", ...]


Expr = Union[Literal, Grossone, Name, Unary, Binary, Compare, Call, SetLit]


class Parser:
    def __init__(self, tokens: List[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: TokenKind, what: str) -> Token:
        tok = self.peek()
        if tok.kind is not kind:
            raise ParseError(tok.offset, what)
        return self.advance()

    def parse(self) -> Expr:
        expr = self.expression()
        tok = self.peek()
        if tok.kind is not TokenKind.END:
            raise ParseError(tok.offset, "end of input")
        return expr

    def expression(self) -> Expr:
        left = self.additive()
        if self.peek().kind is TokenKind.CMP:
            op = self.advance().lexeme
            right = self.additive()
            return Compare(op, left, right)
        return left

    def additive(self) -> Expr:
        node = self.multiplicative()
        while self.peek().kind in (TokenKind.PLUS, TokenKind.MINUS):
            op = self.advance().lexeme
            node = Binary(op, node, self.multiplicative())
        return node

    def multiplicative(self) -> Expr:
        node = self.unary()
        while self.peek().kind in (TokenKind.STAR, TokenKind.SLASH):
            op = self.advance().lexeme
            node = Binary(op, node, self.unary())
        return node

    def unary(self) -> Expr:
        if self.peek().kind is TokenKind.MINUS:
            self.advance()
            return Unary("-", self.unary())
        return self.power()

    def power(self) -> Expr:
        node = self.atom()
        if self.peek().kind is TokenKind.CARET:
            self.advance()
            return Binary("^", node, self.unary())
        return node

    def atom(self) -> Expr:
        tok = self.peek()
        if tok.kind is TokenKind.INT:
            self.advance()
            return Literal(Fraction(int(tok.lexeme)))
        if tok.kind is TokenKind.G:
            self.advance()
            return Grossone()
        if tok.kind is TokenKind.LPAREN:
            self.advance()
            inner = self.expression()
            self.expect(TokenKind.RPAREN, "')'")
            return inner
        if tok.kind is TokenKind.LBRACE:
            self.advance()
            items: List[Expr] = []
            if self.peek().kind is not TokenKind.RBRACE:
                items.append(self.expression())
                while self.peek().kind is TokenKind.COMMA:
                    self.advance()
                    items.append(self.expression())
            self.expect(TokenKind.RBRACE, "'}'")
            return SetLit(tuple(items))
        if tok.kind is TokenKind.IDENT:
            self.advance()
            if self.peek().kind is TokenKind.LPAREN:
                self.advance()
                args: List[Expr] = []
                if self.peek().kind is not TokenKind.RPAREN:
                    args.append(self.expression())
                    while self.peek().kind is TokenKind.COMMA:
                        self.advance()
                        args.append(self.expression())
                self.expect(TokenKind.RPAREN, "')'")
                return Call(tok.lexeme, tuple(args))
            return Name(tok.lexeme)
        raise ParseError(tok.offset, "expression")


def parse(tokens: List[Token]) -> Expr:
    return Parser(tokens).parse()


# --- values -----------------------------------------------------------------

@dataclass(frozen=True)
class NumberV:
    value: GrossNumber


@dataclass(frozen=True)
class SetV:
    value: Union[GrossAP, AdjustedSet, EmptySet]


@dataclass(frozen=True)
class ParityV:
    value: Parity


@dataclass(frozen=True)
class BoolV:
    value: bool


@dataclass(frozen=True)
class ClassV:
    value: NumberClass


@dataclass(frozen=True)
class RootV:
    value: RootCount


@dataclass(frozen=True)
class ReportV:
    value: ParadoxReport


@dataclass(frozen=True)
class AuditV:
    value: RamanujanAudit


@dataclass(frozen=True)
class IntSetV:
    value: Tuple[int, ...]


Value = Union[NumberV, SetV, ParityV, BoolV, ClassV, RootV, ReportV, AuditV, IntSetV]


def print_value(v: Value) -> str:
    if isinstance(v, NumberV):
        return str(v.value)
    if isinstance(v, (SetV, RootV, AuditV)):
        return str(v.value)
    if isinstance(v, ReportV):
        return v.value.render_text()
    if isinstance(v, ParityV):
        return v.value.value
    if isinstance(v, ClassV):
        return v.value.value
    if isinstance(v, BoolV):
        return "true" if v.value else "false"
    if isinstance(v, IntSetV):
        return "{" + ",".join(str(x) for x in v.value) + "}"
    raise TypeError(f"not a value: {v!r}")


def value_json(v: Value) -> dict:
    if isinstance(v, NumberV):
        return {"type": "number", "value": str(v.value)}
    if isinstance(v, SetV):
        return {"type": "set", "value": str(v.value)}
    if isinstance(v, ParityV):
        return {"type": "parity", "value": v.value.value}
    if isinstance(v, ClassV):
        return {"type": "class", "value": v.value.value}
    if isinstance(v, BoolV):
        return {"type": "bool", "value": v.value}
    if isinstance(v, RootV):
        return {"type": "count", "value": str(v.value)}
    if isinstance(v, ReportV):
        return {"type": "report", **v.value.to_json()}
    if isinstance(v, AuditV):
        return {"type": "audit", **v.value.to_json()}
    if isinstance(v, IntSetV):
        return {"type": "intset", "value": list(v.value)}
    raise TypeError(f"not a value: {v!r}")


# --- evaluation ----------------------------------------------------------------

def _number(name: str, pos: int, v: Value) -> GrossNumber:
    if not isinstance(v, NumberV):
        raise EvalTypeError(name, pos, "expected a number")
    return v.value


def _int(name: str, pos: int, v: Value) -> int:
    n = _number(name, pos, v)
    try:
        r = n.as_rational()
    except ValueError:
        raise EvalTypeError(name, pos, "expected a finite integer") from None
    if r.denominator != 1:
        raise EvalTypeError(name, pos, "expected a finite integer")
    return int(r)


def _rational(name: str, pos: int, v: Value) -> Fraction:
    n = _number(name, pos, v)
    try:
        return n.as_rational()
    except ValueError:
        raise EvalTypeError(name, pos, "expected a finite rational") from None


def _set(name: str, pos: int, v: Value):
    if not isinstance(v, SetV):
        raise EvalTypeError(name, pos, "expected a set")
    return v.value


def _ap(name: str, pos: int, v: Value) -> GrossAP:
    s = _set(name, pos, v)
    if not isinstance(s, GrossAP):
        raise EvalTypeError(name, pos, "expected an arithmetic progression")
    return s


def _elements(name: str, pos: int, args: List[Value]) -> List[int]:
    elems: List[int] = []
    for k, v in enumerate(args, start=pos):
        if isinstance(v, IntSetV):
            elems.extend(v.value)
        else:
            elems.append(_int(name, k, v))
    return elems


def _check_arity(name: str, args, lo: int, hi: Optional[int]):
    if len(args) < lo or (hi is not None and len(args) > hi):
        want = str(lo) if hi == lo else (f"{lo}+" if hi is None else f"{lo}..{hi}")
        raise EvalTypeError(name, len(args), f"expected {want} argument(s), got {len(args)}")


def _eval_power(left: Value, right: Value) -> Value:
    rv = _number("^", 2, right)
    if rv.classify() in (NumberClass.FINITE_PURE, NumberClass.ZERO):
        exponent = rv.as_rational()
        base = _number("^", 1, left)
        if exponent.denominator == 1:
            return NumberV(pow_int(base, int(exponent)))
        return NumberV(nth_root(pow_int(base, exponent.numerator), exponent.denominator))
    # Exponent involves G: the base must be a plain nonnegative rational.
    if not isinstance(left, NumberV) or left.value.classify() not in (
        NumberClass.FINITE_PURE,
        NumberClass.ZERO,
    ):
        raise EvalTypeError("^", 1, "a G-exponent needs a nonnegative rational base")
    base_q = left.value.as_rational()
    if base_q < 0:
        raise EvalTypeError("^", 1, "a G-exponent needs a nonnegative rational base")
    return NumberV(exp_gross(base_q, rv))


def eval_expr(expr: Expr) -> Value:
    if isinstance(expr, Literal):
        return NumberV(gnum(expr.value))
    if isinstance(expr, Grossone):
        return NumberV(GROSSONE)
    if isinstance(expr, Name):
        raise UnknownIdentifier(f"unknown identifier '{expr.ident}'")
    if isinstance(expr, SetLit):
        return IntSetV(tuple(_int("{}", i + 1, eval_expr(e)) for i, e in enumerate(expr.items)))
    if isinstance(expr, Unary):
        v = eval_expr(expr.operand)
        return NumberV(-_number("-", 1, v))
    if isinstance(expr, Binary):
        if expr.op == "^":
            return _eval_power(eval_expr(expr.left), eval_expr(expr.right))
        lv = _number(expr.op, 1, eval_expr(expr.left))
        rv = _number(expr.op, 2, eval_expr(expr.right))
        if expr.op == "+":
            return NumberV(lv + rv)
        if expr.op == "-":
            return NumberV(lv - rv)
        if expr.op == "*":
            return NumberV(lv * rv)
        if expr.op == "/":
            return NumberV(div_exact(lv, rv))
        raise UnknownIdentifier(f"unknown operator '{expr.op}'")
    if isinstance(expr, Compare):
        lv = _number(expr.op, 1, eval_expr(expr.left))
        rv = _number(expr.op, 2, eval_expr(expr.right))
        result = {
            "<": lv < rv,
            "<=": lv <= rv,
            "=": lv == rv,
            ">=": lv >= rv,
            ">": lv > rv,
        }[expr.op]
        return BoolV(result)
    if isinstance(expr, Call):
        return _eval_call(expr)
    raise TypeError(f"not an expression: {expr!r}")


def _eval_call(call: Call) -> Value:
    name = call.name
    if name == "lamp":
        # The initial state is the bare word on/off, not an expression.
        _check_arity(name, call.args, 1, 2)
        head = call.args[0]
        if not isinstance(head, Name) or head.ident not in ("on", "off"):
            raise EvalTypeError(name, 1, "expected 'on' or 'off'")
        initial = LampState(head.ident)
        switches = None
        if len(call.args) == 2:
            switches = _number(name, 2, eval_expr(call.args[1]))
        return ReportV(paradoxes.thomson_lamp(initial, switches))

    args = [eval_expr(a) for a in call.args]

    if name == "ap":
        _check_arity(name, args, 2, 2)
        return SetV(sets.ap_nat(_int(name, 1, args[0]), _int(name, 2, args[1])))
    if name == "nat":
        _check_arity(name, args, 0, 0)
        return SetV(sets.naturals())
    if name == "evens":
        _check_arity(name, args, 0, 0)
        return SetV(sets.evens())
    if name == "odds":
        _check_arity(name, args, 0, 0)
        return SetV(sets.odds())
    if name == "ints":
        _check_arity(name, args, 0, 0)
        return SetV(sets.integers_set())
    if name == "card":
        _check_arity(name, args, 1, 1)
        return NumberV(sets.cardinality(_set(name, 1, args[0])))
    if name == "last":
        _check_arity(name, args, 1, 1)
        return NumberV(sets.last_element(_ap(name, 1, args[0])))
    if name == "at":
        _check_arity(name, args, 2, 2)
        return NumberV(sets.element_at(_ap(name, 1, args[0]), _number(name, 2, args[1])))
    if name == "member":
        _check_arity(name, args, 2, 2)
        return BoolV(sets.member(_set(name, 1, args[0]), _number(name, 2, args[1])))
    if name == "intersect":
        _check_arity(name, args, 2, 2)
        return SetV(sets.intersect(_ap(name, 1, args[0]), _ap(name, 2, args[1])))
    if name == "scale":
        _check_arity(name, args, 2, 2)
        return SetV(sets.scale(_ap(name, 1, args[0]), _int(name, 2, args[1])))
    if name == "addf":
        _check_arity(name, args, 2, None)
        return SetV(sets.add_finite(_set(name, 1, args[0]), _elements(name, 2, args[1:])))
    if name == "remf":
        _check_arity(name, args, 2, None)
        return SetV(sets.remove_finite(_set(name, 1, args[0]), _elements(name, 2, args[1:])))
    if name == "couples":
        _check_arity(name, args, 2, 2)
        return NumberV(sets.couples_count(_set(name, 1, args[0]), _set(name, 2, args[1])))
    if name == "squares":
        _check_arity(name, args, 0, 0)
        return RootV(sets.squares_count())
    if name == "tri":
        _check_arity(name, args, 1, 1)
        return NumberV(series.triangular(_number(name, 1, args[0])))
    if name == "geo":
        _check_arity(name, args, 2, 2)
        return NumberV(series.geometric(_rational(name, 1, args[0]), _number(name, 2, args[1])))
    if name == "x2":
        _check_arity(name, args, 1, 1)
        return NumberV(series.powers_of_two_sum(_number(name, 1, args[0])))
    if name == "grandi":
        _check_arity(name, args, 1, 1)
        return NumberV(gnum(series.grandi(_number(name, 1, args[0])).value))
    if name == "grandirr":
        _check_arity(name, args, 1, 1)
        return NumberV(series.grandi_rearranged(_number(name, 1, args[0])))
    if name == "ramanujan":
        _check_arity(name, args, 0, 1)
        n = _number(name, 1, args[0]) if args else None
        return AuditV(series.ramanujan_audit(n))
    if name == "tsum":
        _check_arity(name, args, 1, 1)
        return NumberV(series.infinitesimal_sum(_number(name, 1, args[0])))
    if name == "parity":
        _check_arity(name, args, 1, 1)
        return ParityV(_number(name, 1, args[0]).parity())
    if name == "class":
        _check_arity(name, args, 1, 1)
        return ClassV(_number(name, 1, args[0]).classify())
    if name == "evalat":
        _check_arity(name, args, 2, 2)
        t = _int(name, 2, args[1])
        if t <= 0:
            raise EvalTypeError(name, 2, "expected a positive integer")
        return NumberV(gnum(_number(name, 1, args[0]).eval_at(t)))
    if name == "root":
        _check_arity(name, args, 2, 2)
        d = _int(name, 2, args[1])
        if d <= 0:
            raise EvalTypeError(name, 2, "expected a positive integer degree")
        return NumberV(nth_root(_number(name, 1, args[0]), d))
    if name == "hotel":
        _check_arity(name, args, 0, 1)
        m = _number(name, 1, args[0]) if args else gnum(1)
        return ReportV(paradoxes.hilbert_accommodate(m))
    if name == "galileo":
        _check_arity(name, args, 0, 0)
        return ReportV(paradoxes.galileo_report())
    if name == "multiplication":
        _check_arity(name, args, 0, 0)
        return ReportV(paradoxes.multiplication_report())
    if name == "torricelli":
        _check_arity(name, args, 0, 1)
        h = _number(name, 1, args[0]) if args else None
        return ReportV(paradoxes.torricelli(h))
    raise UnknownIdentifier(f"unknown function '{name}'")


def evaluate(text: str) -> Value:
    """Tokenize, parse and evaluate one expression."""
    return eval_expr(parse(tokenize(text)))
