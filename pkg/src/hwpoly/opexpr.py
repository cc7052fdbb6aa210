"""opexpr-v1: a small text language for Heisenberg-Weyl expressions.

Grammar::

    expr     := term (('+' | '-') term)*
    term     := '-' term | factor ('*' factor)*
    factor   := atom ('^' UINT)?
    atom     := 'x' | 'p' | 'i' | 'sqrt2' | RATIONAL | '(' expr ')'
              | '[' expr ',' expr ']' | 'conj' '(' expr ';' expr ')'
    RATIONAL := INT ('/' UINT)?

``conj(A; B)`` is ``e^A B e^{-A}``.  Whitespace is insignificant.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import (
    IDENTITY, NonTerminatingSeriesError, OperatorPoly, P, X, GradingError,
    commutator, op_normal_product, op_power, similarity_conjugate,
)
from .poly import UnivariatePoly
from .scalar import I, SQRT2, QuadComplexScalar

MAX_INPUT_BYTES = 64 * 1024
MAX_DEPTH = 64


class OpExprError(ValueError):
    pass


class OpExprSyntaxError(OpExprError):
    def __init__(self, message: str, line: int, column: int, token: str) -> None:
        super().__init__(f"{line}:{column}: {message} (at {token})")
        self.line = line
        self.column = column
        self.token = token


class OpExprDepthError(OpExprSyntaxError):
    pass


class LoweringError(OpExprError):
    def __init__(self, message: str, span: tuple[int, int], source: str | None = None) -> None:
        snippet = source[span[0]:span[1]] if source is not None else None
        where = f"{span[0]}..{span[1]}" + (f" {snippet!r}" if snippet is not None else "")
        super().__init__(f"{message} in subexpression {where}")
        self.span = span
        self.snippet = snippet


# AST


@dataclass(frozen=True)
class Node:
    span: tuple[int, int] = field(default=(0, 0), compare=False, kw_only=True)


@dataclass(frozen=True)
class Atom(Node):
    kind: str  # 'x', 'p', 'i', 'sqrt2' or 'rational'
    value: Fraction | None = None


@dataclass(frozen=True)
class Sum(Node):
    terms: tuple[Node, ...]


@dataclass(frozen=True)
class Neg(Node):
    operand: Node


@dataclass(frozen=True)
class Product(Node):
    factors: tuple[Node, ...]


@dataclass(frozen=True)
class Power(Node):
    base: Node
    exponent: int


@dataclass(frozen=True)
class Commutator(Node):
    lhs: Node
    rhs: Node


@dataclass(frozen=True)
class Conjugate(Node):
    exponent_operator: Node
    target: Node


# Tokenizer

_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<sym>[-+*^/()\[\],;])|(?P<bad>\S))")
_KEYWORDS = {"x", "p", "i", "sqrt2", "conj"}


@dataclass(frozen=True)
class Token:
    kind: str  # 'int', a keyword, a symbol, or 'eof'
    text: str
    offset: int


def _tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    while True:
        m = _TOKEN_RE.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        pos = m.end()
        start = m.start(m.lastgroup)
        value = m.group(m.lastgroup)
        if m.lastgroup == "int":
            tokens.append(Token("int", value, start))
        elif m.lastgroup == "name":
            if value not in _KEYWORDS:
                raise _syntax_error(text, start, f"unknown identifier {value!r}", value)
            tokens.append(Token(value, value, start))
        elif m.lastgroup == "sym":
            tokens.append(Token(value, value, start))
        else:
            raise _syntax_error(text, start, "unexpected character", value)
    tokens.append(Token("eof", "end of input", len(text)))
    return tokens


def _line_col(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


def _syntax_error(text: str, offset: int, message: str, token: str,
                  cls: type[OpExprSyntaxError] = OpExprSyntaxError) -> OpExprSyntaxError:
    line, col = _line_col(text, offset)
    return cls(message, line, col, token if token == "end of input" else repr(token))


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.depth = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def error(self, message: str, tok: Token | None = None) -> OpExprSyntaxError:
        tok = tok or self.tok
        return _syntax_error(self.text, tok.offset, message, tok.text)

    def expect(self, kind: str) -> Token:
        if self.tok.kind != kind:
            raise self.error(f"expected {kind!r}")
        return self.advance()

    def enter(self) -> None:
        self.depth += 1
        if self.depth > MAX_DEPTH:
            raise _syntax_error(self.text, self.tok.offset, f"nesting deeper than {MAX_DEPTH}",
                                self.tok.text, OpExprDepthError)

    def leave(self) -> None:
        self.depth -= 1

    def parse(self) -> Node:
        node = self.expr()
        if self.tok.kind != "eof":
            raise self.error("unexpected token")
        return node

    def expr(self) -> Node:
        start = self.tok.offset
        terms = [self.term()]
        while self.tok.kind in ("+", "-"):
            op = self.advance()
            t = self.term()
            terms.append(Neg(t, span=(op.offset, t.span[1])) if op.kind == "-" else t)
        if len(terms) == 1:
            return terms[0]
        return Sum(tuple(terms), span=(start, terms[-1].span[1]))

    def term(self) -> Node:
        if self.tok.kind == "-":
            op = self.advance()
            self.enter()
            inner = self.term()
            self.leave()
            return Neg(inner, span=(op.offset, inner.span[1]))
        factors = [self.factor()]
        while self.tok.kind == "*":
            self.advance()
            factors.append(self.factor())
        if len(factors) == 1:
            return factors[0]
        return Product(tuple(factors), span=(factors[0].span[0], factors[-1].span[1]))

    def factor(self) -> Node:
        base = self.atom()
        if self.tok.kind == "^":
            self.advance()
            tok = self.expect("int") if self.tok.kind == "int" else None
            if tok is None:
                raise self.error("exponent must be a nonnegative integer literal")
            return Power(base, int(tok.text), span=(base.span[0], tok.offset + len(tok.text)))
        return base

    def atom(self) -> Node:
        tok = self.tok
        kind = tok.kind
        if kind in ("x", "p", "i", "sqrt2"):
            self.advance()
            return Atom(kind, span=(tok.offset, tok.offset + len(tok.text)))
        if kind == "int":
            self.advance()
            value = Fraction(int(tok.text))
            end = tok.offset + len(tok.text)
            if self.tok.kind == "/":
                self.advance()
                den = self.tok
                if den.kind != "int":
                    raise self.error("expected an unsigned integer denominator")
                self.advance()
                if int(den.text) == 0:
                    raise self.error("zero denominator in rational literal", den)
                value = Fraction(int(tok.text), int(den.text))
                end = den.offset + len(den.text)
            return Atom("rational", value, span=(tok.offset, end))
        if kind in ("(", "[", "conj"):
            self.enter()
            try:
                return self._bracketed(tok)
            finally:
                self.leave()
        raise self.error("expected an operand")

    def _bracketed(self, tok: Token) -> Node:
        self.advance()
        if tok.kind == "(":
            inner = self.expr()
            close = self.expect(")")
            # parentheses keep the inner node; only the span widens
            return _respan(inner, (tok.offset, close.offset + 1))
        if tok.kind == "[":
            lhs = self.expr()
            self.expect(",")
            rhs = self.expr()
            close = self.expect("]")
            return Commutator(lhs, rhs, span=(tok.offset, close.offset + 1))
        self.expect("(")
        gen = self.expr()
        self.expect(";")
        target = self.expr()
        close = self.expect(")")
        return Conjugate(gen, target, span=(tok.offset, close.offset + 1))


def _respan(node: Node, span: tuple[int, int]) -> Node:
    object.__setattr__(node, "span", span)
    return node


def parse_opexpr(text: str | bytes) -> Node:
    """Parse opexpr-v1 source into an AST; raises :class:`OpExprSyntaxError`."""
    if isinstance(text, bytes):
        if len(text) > MAX_INPUT_BYTES:
            raise OpExprSyntaxError(f"input longer than {MAX_INPUT_BYTES} bytes", 1, 1, "start of input")
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise OpExprSyntaxError("input is not valid UTF-8", 1, exc.start + 1, "byte") from None
    if len(text.encode("utf-8", "surrogatepass")) > MAX_INPUT_BYTES:
        raise OpExprSyntaxError(f"input longer than {MAX_INPUT_BYTES} bytes", 1, 1, "start of input")
    return _Parser(text).parse()


# Lowering


def lower_ast(node: Node, source: str | None = None) -> OperatorPoly:
    """Evaluate an AST to its canonical normal-ordered operator."""
    if isinstance(node, Atom):
        if node.kind == "x":
            return X
        if node.kind == "p":
            return P
        if node.kind == "i":
            return OperatorPoly.scalar(I)
        if node.kind == "sqrt2":
            return OperatorPoly.scalar(SQRT2)
        return OperatorPoly.scalar(node.value)
    if isinstance(node, Sum):
        out = OperatorPoly()
        for t in node.terms:
            out = out + lower_ast(t, source)
        return out
    if isinstance(node, Neg):
        return -lower_ast(node.operand, source)
    if isinstance(node, Product):
        out = IDENTITY
        for f in node.factors:
            out = op_normal_product(out, lower_ast(f, source))
        return out
    if isinstance(node, Power):
        return op_power(lower_ast(node.base, source), node.exponent)
    if isinstance(node, Commutator):
        return commutator(lower_ast(node.lhs, source), lower_ast(node.rhs, source))
    if isinstance(node, Conjugate):
        gen = lower_ast(node.exponent_operator, source)
        target = lower_ast(node.target, source)
        try:
            return similarity_conjugate(gen, target, 1)
        except NonTerminatingSeriesError as exc:
            raise LoweringError(str(exc), node.span, source) from None
    raise TypeError(f"not an opexpr node: {node!r}")


def evaluate(text: str) -> OperatorPoly:
    return lower_ast(parse_opexpr(text), text)


# Printing

_TAGS = ("", "sqrt2", "i", "sqrt2*i")


def _rational_text(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def _signed_term(coeff: QuadComplexScalar, factors: list[str]) -> tuple[str, str]:
    """Return ``(sign, body)`` for ``coeff * factors``."""
    parts = [(v, tag) for v, tag in zip(coeff.components, _TAGS) if v]
    if len(parts) == 1:
        value, tag = parts[0]
        pieces = []
        mag = abs(value)
        if mag != 1 or (not tag and not factors):
            pieces.append(_rational_text(mag))
        if tag:
            pieces.append(tag)
        return ("-" if value < 0 else "+"), "*".join(pieces + factors)
    inner = []
    for value, tag in parts:
        mag = abs(value)
        body = tag if (mag == 1 and tag) else "*".join([_rational_text(mag)] + ([tag] if tag else []))
        inner.append(("-" if value < 0 else "+", body))
    return "+", "*".join([f"({_join(inner)})"] + factors)


def _join(signed: list[tuple[str, str]]) -> str:
    if not signed:
        return "0"
    out = []
    for k, (sign, body) in enumerate(signed):
        if k == 0:
            out.append(body if sign == "+" else f"- {body}")
        else:
            out.append(f"{sign} {body}")
    return " ".join(out)


def _power_text(var: str, k: int) -> list[str]:
    if k == 0:
        return []
    return [var if k == 1 else f"{var}^{k}"]


def _operator_text(op: OperatorPoly, graded: bool) -> str:
    # total degree descending, then x-degree ascending: p^2, x*p, x^2, ...
    keys = sorted(op.keys(), key=lambda m: (-(m[0] + m[1]), m[0]))
    signed = []
    for a, b in keys:
        coeff = op[(a, b)]
        mono = _power_text("x", a) + _power_text("p", b)
        for g, c in enumerate(coeff.coeffs):
            if c:
                signed.append(_signed_term(c, (_power_text("t", g) if graded else []) + mono))
    return _join(signed)


def format_canonical(op: OperatorPoly) -> str:
    """Canonical opexpr-v1 text; parses back to the same operator."""
    if not op.is_grade_zero():
        raise GradingError("graded operators have no opexpr-v1 surface form")
    return _operator_text(op, graded=False)


def format_graded(op: OperatorPoly) -> str:
    """Like :func:`format_canonical` but writes grades as powers of ``t`` (display only)."""
    return _operator_text(op, graded=True)


def format_univariate(poly: UnivariatePoly, ascending: bool = False, var: str = "x") -> str:
    order = range(len(poly)) if ascending else range(len(poly) - 1, -1, -1)
    return _join([_signed_term(poly[k], _power_text(var, k)) for k in order if poly[k]])
