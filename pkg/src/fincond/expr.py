"""Expression language: tokenizer, recursive-descent parser, evaluator, printer.

Grammar::

    expr   := term ("+" term)*
    term   := factor ("*" factor)*
    factor := nat | "w" ("^" nat)? | bandconst | call | "(" expr ")"
    call   := ident "(" expr ("," expr)* ")"

``*`` is the lexicographic product: ``a*b`` replaces each point of ``a`` by a
copy of ``b``.  So ``2*w`` is ``w + w`` and ``w*2`` is ``w``, the reverse of
the usual textbook reading.

``w*`` is an alias for ``omega_star`` when the ``*`` is not followed by
something that can start a factor, so ``w*(w+1)`` multiplies while
``condF(w*+w)`` sums w* and w.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Tuple, Union

from . import band, cnf, derivative, oracle
from .band import BandElement
from .cnf import OrdinalCNF
from .errors import FinCondError


class ExprSyntaxError(FinCondError, SyntaxError):
    def __init__(self, message: str, column: int, token: str, expected: FrozenSet[str]):
        self.column = column
        self.token = token
        self.expected = expected
        want = ", ".join(sorted(expected))
        super().__init__(f"column {column}: {message} (got {token!r}, expected one of: {want})")


class ExprTypeError(FinCondError, TypeError):
    pass


class ArityError(FinCondError, TypeError):
    pass


ARITY = {"d": 1, "D": 2, "I": 1, "Ilim": 1, "condF": 1, "timesF": 2, "defect": 2, "deg": 1, "cmp": 2}

BAND_NAMES = {
    "omega_star": BandElement.OMEGA_STAR,
    "zeta": BandElement.ZETA,
    "z": BandElement.ZETA,
    "ζ": BandElement.ZETA,
}
OMEGA_NAMES = {"w", "omega", "ω"}


# syntax tree

@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Pow:
    exponent: int


@dataclass(frozen=True)
class BandConst:
    element: BandElement


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Call:
    name: str
    args: Tuple["Expr", ...]


Expr = Union[Num, Pow, BandConst, Add, Mul, Call]


# tokenizer

@dataclass(frozen=True)
class Token:
    kind: str  # NAT, NAME, + * ^ ( ) , EOF
    text: str
    pos: int  # 0-based offset


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_ωζ][A-Za-z0-9_]*)|(\S))")


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while True:
        m = _TOKEN_RE.match(text, pos)
        if not m:
            break
        if m.group(1):
            tokens.append(Token("NAT", m.group(1), m.start(1)))
        elif m.group(2):
            tokens.append(Token("NAME", m.group(2), m.start(2)))
        elif m.group(3):
            ch = m.group(3)
            if ch not in "+*^(),":
                raise ExprSyntaxError("unexpected character", m.start(3) + 1, ch,
                                      frozenset({"number", "name", "(", "+", "*"}))
            tokens.append(Token(ch, ch, m.start(3)))
        pos = m.end()
    tokens.append(Token("EOF", "", len(text)))
    return tokens


_FACTOR_START = frozenset({"number", "w", "omega_star", "zeta", "function name", "("})


class Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self, k: int = 0) -> Token:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message: str, expected) -> ExprSyntaxError:
        tok = self.peek()
        column = min(tok.pos + 1, max(len(self.text), 1))
        return ExprSyntaxError(message, column, tok.text or "<end>", frozenset(expected))

    def expect(self, kind: str) -> Token:
        if self.peek().kind != kind:
            raise self.error(f"expected {kind!r}", {kind})
        return self.advance()

    def parse(self) -> Expr:
        e = self.expr()
        if self.peek().kind != "EOF":
            raise self.error("trailing input", {"+", "*", "<end>"})
        return e

    def expr(self) -> Expr:
        e = self.term()
        while self.peek().kind == "+":
            self.advance()
            e = Add(e, self.term())
        return e

    def term(self) -> Expr:
        e = self.factor()
        while self.peek().kind == "*":
            self.advance()
            e = Mul(e, self.factor())
        return e

    def _starts_factor(self, tok: Token) -> bool:
        return tok.kind in ("NAT", "NAME", "(")

    def factor(self) -> Expr:
        tok = self.peek()
        if tok.kind == "NAT":
            self.advance()
            return Num(int(tok.text))
        if tok.kind == "(":
            self.advance()
            e = self.expr()
            self.expect(")")
            return e
        if tok.kind != "NAME":
            raise self.error("expected a factor", _FACTOR_START)
        self.advance()
        name = tok.text
        if name in OMEGA_NAMES:
            if self.peek().kind == "^":
                self.advance()
                exp = self.expect("NAT")
                return Pow(int(exp.text))
            if self.peek().kind == "*" and not self._starts_factor(self.peek(1)):
                self.advance()
                return BandConst(BandElement.OMEGA_STAR)
            return Pow(1)
        if name in BAND_NAMES:
            return BandConst(BAND_NAMES[name])
        if name in ARITY:
            self.expect("(")
            args = [self.expr()]
            while self.peek().kind == ",":
                self.advance()
                args.append(self.expr())
            self.expect(")")
            if name == "timesF":
                args = [_band_literal(a) for a in args]
            return Call(name, tuple(args))
        self.i -= 1
        raise self.error(f"unknown name {name!r}", _FACTOR_START | set(ARITY))


def _band_literal(e: Expr) -> Expr:
    if e == Num(1):
        return BandConst(BandElement.ONE)
    if e == Pow(1):
        return BandConst(BandElement.OMEGA)
    return e


def parse(text: str) -> Expr:
    return Parser(text).parse()


# evaluation

@dataclass(frozen=True)
class EvalResult:
    kind: str  # Ordinal, Band, Preimage, Defect, Comparison, Boolean
    value: object
    trace: Optional[Tuple[str, ...]] = None

    def json_value(self):
        if self.kind == "Preimage":
            return self.value.to_json()
        return pretty(self)


def _as_ordinal(r: EvalResult) -> OrdinalCNF:
    if r.kind == "Ordinal":
        return r.value
    if r.kind == "Band":
        if r.value is BandElement.ONE:
            return cnf.ONE
        if r.value is BandElement.OMEGA:
            return cnf.OMEGA
        raise ExprTypeError(f"{r.value} is not an ordinal and cannot enter ordinal arithmetic")
    raise ExprTypeError(f"a {r.kind} value cannot be used as an ordinal")


def _as_band(r: EvalResult) -> BandElement:
    if r.kind == "Band":
        return r.value
    if r.kind == "Ordinal":
        if r.value == cnf.ONE:
            return BandElement.ONE
        if r.value == cnf.OMEGA:
            return BandElement.OMEGA
    raise ExprTypeError(f"{pretty(r)} is not an element of R = {{1, w, w*, zeta}}")


def to_term(e: Expr) -> oracle.LinTerm:
    """Read an expression as a linear-order term without evaluating it."""
    if isinstance(e, Num):
        return oracle.Fin(e.value) if e.value else oracle.ZERO_TERM
    if isinstance(e, Pow):
        return oracle.power_term(e.exponent)
    if isinstance(e, BandConst):
        return oracle.band_term(e.element)
    if isinstance(e, Add):
        return oracle.make_sum(to_term(e.left), to_term(e.right))
    if isinstance(e, Mul):
        return oracle.make_prod(to_term(e.left), to_term(e.right))
    if isinstance(e, Call):
        r = evaluate(e)
        if r.kind == "Band":
            return oracle.band_term(r.value)
        return oracle.term_of_cnf(_as_ordinal(r))
    raise TypeError(f"not an expression: {e!r}")


class Evaluator:
    def __init__(self, trace: bool = False):
        self.trace: Optional[List[str]] = [] if trace else None

    def ordinal(self, e: Expr) -> OrdinalCNF:
        return _as_ordinal(self.eval(e))

    def eval(self, e: Expr) -> EvalResult:
        if isinstance(e, Num):
            return EvalResult("Ordinal", cnf.nat(e.value))
        if isinstance(e, Pow):
            return EvalResult("Ordinal", cnf.monomial(e.exponent))
        if isinstance(e, BandConst):
            return EvalResult("Band", e.element)
        if isinstance(e, Add):
            return EvalResult("Ordinal", cnf.add(self.ordinal(e.left), self.ordinal(e.right)))
        if isinstance(e, Mul):
            return EvalResult("Ordinal", cnf.prod(self.ordinal(e.left), self.ordinal(e.right)))
        if isinstance(e, Call):
            return self.call(e)
        raise TypeError(f"not an expression: {e!r}")

    def call(self, e: Call) -> EvalResult:
        want = ARITY[e.name]
        if len(e.args) != want:
            raise ArityError(f"{e.name} takes {want} argument(s), got {len(e.args)}")
        name, args = e.name, e.args
        if name == "timesF":
            x, y = (_as_band(self.eval(a)) for a in args)
            return EvalResult("Band", band.times_f(x, y))
        if name == "condF":
            t = to_term(args[0])
            out = oracle.condense_term(t, self.trace)
            if oracle.is_well_ordered(out):
                return EvalResult("Ordinal", oracle.eval_term(out))
            return EvalResult("Band", oracle.band_of_term(out))
        if name == "D":
            n = self.ordinal(args[0])
            if cnf.classify(n) is cnf.Kind.LIMIT:
                raise ExprTypeError(f"iteration count must be finite, got {n}")
            return EvalResult("Ordinal", derivative.d_iter(self.ordinal(args[1]), n.constant))
        vals = [self.ordinal(a) for a in args]
        if name == "d":
            return EvalResult("Ordinal", derivative.d(vals[0]))
        if name == "I":
            return EvalResult("Preimage", derivative.i_preimage(vals[0]))
        if name == "Ilim":
            return EvalResult("Ordinal", derivative.i_limit(vals[0]))
        if name == "deg":
            return EvalResult("Ordinal", cnf.nat(cnf.degree(vals[0])))
        if name == "defect":
            return EvalResult("Defect", derivative.distribute_defect(*vals))
        if name == "cmp":
            return EvalResult("Comparison", cnf.compare(*vals))
        raise AssertionError(name)


def evaluate(e: Union[Expr, str], trace: bool = False) -> EvalResult:
    if isinstance(e, str):
        e = parse(e)
    ev = Evaluator(trace)
    r = ev.eval(e)
    if ev.trace is not None:
        r = EvalResult(r.kind, r.value, tuple(ev.trace))
    return r


def pretty(r: Union[EvalResult, OrdinalCNF, BandElement]) -> str:
    if isinstance(r, OrdinalCNF):
        return cnf.pretty(r)
    if isinstance(r, BandElement):
        return r.value
    if r.kind == "Ordinal":
        return cnf.pretty(r.value)
    if r.kind == "Band":
        return r.value.value
    if r.kind == "Boolean":
        return "true" if r.value else "false"
    if r.kind in ("Defect", "Comparison"):
        return r.value.value
    return str(r.value)
