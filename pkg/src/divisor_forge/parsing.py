"""Tokenizer and expression parser shared by the polynomial syntax and the CLI.

The expression grammar covers `+ - * / ^` with integer literals,
parenthesization, identifiers, calls `name(args, kw=value)` and divisor
tables `divisor{coeff: expr, ...}`.  Polynomial parsing is expression
parsing followed by evaluation in an environment where identifiers resolve
to ring variables.
"""

import re
from dataclasses import dataclass

from .errors import ParseError

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<comment>\#[^\n]*)
  | (?P<int>\d+)
  | (?P<id>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<arrow>->)
  | (?P<op>[-+*/^(){}\[\],:;=])
    """,
    re.VERBOSE,
)


@dataclass
class Token:
    kind: str  # 'int', 'id', 'op', 'arrow', 'eof'
    text: str
    line: int
    column: int


def tokenize(text):
    tokens = []
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(
                "unexpected character %r" % text[pos], line, col,
                caret_excerpt(text, line, col),
            )
        kind = m.lastgroup
        chunk = m.group()
        if kind not in ("ws", "comment"):
            tokens.append(Token(kind, chunk, line, col))
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            col = len(chunk) - chunk.rfind("\n")
        else:
            col += len(chunk)
        pos = m.end()
    tokens.append(Token("eof", "", line, col))
    return tokens


def caret_excerpt(text, line, column):
    try:
        src = text.splitlines()[line - 1]
    except IndexError:
        return ""
    return src + "\n" + " " * (column - 1) + "^"


# AST nodes are tuples: ('int', value), ('name', id), ('neg', a),
# ('binop', op, a, b), ('call', name, args, kwargs), ('table', [(coeff, expr)])


class ExprParser:
    """Recursive-descent parser over a token stream."""

    def __init__(self, tokens, text=""):
        self.tokens = tokens
        self.text = text
        self.i = 0

    @property
    def cur(self):
        return self.tokens[self.i]

    def error(self, msg, tok=None):
        tok = tok or self.cur
        raise ParseError(msg, tok.line, tok.column,
                         caret_excerpt(self.text, tok.line, tok.column))

    def accept(self, kind, text=None):
        t = self.cur
        if t.kind == kind and (text is None or t.text == text):
            self.i += 1
            return t
        return None

    def expect(self, kind, text=None):
        t = self.accept(kind, text)
        if t is None:
            self.error("expected %r" % (text or kind))
        return t

    def at_op(self, text):
        return self.cur.kind == "op" and self.cur.text == text

    # expression ::= term (('+'|'-') term)*
    def expression(self):
        node = self.term()
        while self.cur.kind == "op" and self.cur.text in "+-":
            op = self.expect("op").text
            node = ("binop", op, node, self.term())
        return node

    # term ::= factor (('*'|'/') factor)*
    def term(self):
        node = self.factor()
        while self.cur.kind == "op" and self.cur.text in "*/":
            op = self.expect("op").text
            node = ("binop", op, node, self.factor())
        return node

    # factor ::= ('-'|'+') factor | power
    def factor(self):
        if self.accept("op", "-"):
            return ("neg", self.factor())
        if self.accept("op", "+"):
            return self.factor()
        return self.power()

    # power ::= atom ('^' factor)?
    def power(self):
        node = self.atom()
        if self.accept("op", "^"):
            return ("binop", "^", node, self.factor())
        return node

    def atom(self):
        t = self.cur
        if t.kind == "int":
            self.i += 1
            return ("int", int(t.text))
        if t.kind == "id":
            self.i += 1
            if self.at_op("("):
                return self.call(t.text)
            if self.at_op("{"):
                return self.table(t.text)
            return ("name", t.text)
        if self.accept("op", "("):
            node = self.expression()
            self.expect("op", ")")
            return node
        self.error("expected expression")

    def call(self, name):
        self.expect("op", "(")
        args, kwargs = [], []
        if not self.at_op(")"):
            while True:
                if (
                    self.cur.kind == "id"
                    and self.tokens[self.i + 1].kind == "op"
                    and self.tokens[self.i + 1].text == "="
                ):
                    key = self.expect("id").text
                    self.expect("op", "=")
                    kwargs.append((key, self.expression()))
                else:
                    args.append(self.expression())
                if not self.accept("op", ","):
                    break
        self.expect("op", ")")
        return ("call", name, args, kwargs)

    def table(self, name):
        tok = self.cur
        if name != "divisor":
            self.error("unexpected '{' after %r" % name, tok)
        self.expect("op", "{")
        entries = []
        while True:
            coeff = self.expression()
            self.expect("op", ":")
            entries.append((coeff, self.expression()))
            if not self.accept("op", ","):
                break
        self.expect("op", "}")
        return ("table", entries)


def parse_expression(text):
    parser = ExprParser(tokenize(text), text)
    node = parser.expression()
    if parser.cur.kind != "eof":
        parser.error("trailing input")
    return node
