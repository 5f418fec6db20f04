"""Map germs and the germ-definition document formats.

A document is either a JSON object::

    {"vars": ["x", "y", "z"], "field": "real", "components": ["x*y", "x*z"]}

or the line-oriented text form::

    # comments start with '#'
    vars: x, y, z
    field: real
    component: x*y
    component: x*z

Polynomial grammar (implicit multiplication is rejected)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (('*' factor) | ('/' INT))*
    factor := ('+'|'-') factor | atom ['^' INT]
    atom   := INT | NAME | '(' expr ')'
"""

from __future__ import annotations

import json
import re
import warnings
from dataclasses import dataclass
from typing import Sequence

from .poly import Polynomial

FIELDS = ("real", "complex")


class GermSyntaxError(ValueError):
    """Malformed germ input; ``line``/``column`` are 1-based."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class UnknownVariableError(GermSyntaxError):
    pass


class OriginError(ValueError):
    """A component does not vanish at the origin."""


@dataclass(frozen=True)
class MapGerm:
    vars: tuple[str, ...]
    field: str
    components: tuple[Polynomial, ...]

    def __post_init__(self):
        if self.field not in FIELDS:
            raise ValueError(f"field must be one of {FIELDS}, got {self.field!r}")
        if not self.components:
            raise ValueError("a germ needs at least one component")
        for i, f in enumerate(self.components):
            if f.vars != self.vars:
                raise ValueError(f"component {i + 1} lives in a different ring")
            if f.constant_term():
                raise OriginError(f"component {i + 1} does not vanish at the origin (f(0) = {f.constant_term()})")

    @property
    def n(self) -> int:
        return len(self.vars)

    @property
    def p(self) -> int:
        return len(self.components)

    def projection(self) -> "MapGerm":
        """The germ (f_1, ..., f_{p-1})."""
        if self.p < 2:
            raise ValueError("projection needs p >= 2")
        return MapGerm(self.vars, self.field, self.components[:-1])

    def to_document(self) -> dict:
        return {
            "vars": list(self.vars),
            "field": self.field,
            "components": [f.to_text() for f in self.components],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_document())


# -- tokenizer --------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text: str):
    pos = 0
    out = []
    while True:
        m = _TOKEN.match(text, pos)
        if not m:
            break
        kind = ("int", "name", "op")[m.lastindex - 1]
        out.append((kind, m.group(m.lastindex), m.start(m.lastindex)))
        pos = m.end()
    out.append(("end", "", len(text.rstrip()) if text.strip() else len(text)))
    return out


class _Parser:
    def __init__(self, text: str, vars: Sequence[str], line: int, col0: int):
        self.tokens = _tokenize(text)
        self.i = 0
        self.vars = tuple(vars)
        self.index = {v: k for k, v in enumerate(self.vars)}
        self.line = line
        self.col0 = col0

    def error(self, msg: str, tok=None, cls=GermSyntaxError):
        tok = tok or self.tokens[self.i]
        raise cls(msg, self.line, self.col0 + tok[2] + 1)

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            self.error("empty expression")
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            if tok[0] in ("int", "name") or tok[1] == "(":
                self.error("implicit multiplication is not allowed; use '*'")
            self.error(f"unexpected {tok[1]!r}")
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Polynomial:
        p = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            op = self.take()[1]
            if op == "*":
                p = p * self.factor()
            else:
                tok = self.peek()
                if tok[0] != "int":
                    self.error("only division by an integer literal is allowed")
                self.take()
                if int(tok[1]) == 0:
                    self.error("division by zero", tok)
                p = p / int(tok[1])
        return p

    def factor(self) -> Polynomial:
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("+", "-"):
            self.take()
            q = self.factor()
            return q if tok[1] == "+" else -q
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            e = self.peek()
            if e[0] != "int":
                self.error("exponent must be a non-negative integer literal")
            self.take()
            base = base ** int(e[1])
            if self.peek()[0] == "op" and self.peek()[1] == "^":
                self.error("chained exponents need parentheses")
        return base

    def atom(self) -> Polynomial:
        tok = self.take()
        kind, val, _ = tok
        if kind == "int":
            return Polynomial.constant(int(val), self.vars)
        if kind == "name":
            if val not in self.index:
                self.error(f"unknown variable {val!r}", tok, UnknownVariableError)
            return Polynomial.variable(self.index[val], self.vars)
        if val == "(":
            p = self.expr()
            close = self.peek()
            if close[1] != ")":
                self.error("expected ')'")
            self.take()
            return p
        if kind == "end":
            self.error("unexpected end of expression", tok)
        self.error(f"unexpected {val!r}", tok)


_NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9]*\Z")


def _check_vars(vars: Sequence[str]) -> tuple[str, ...]:
    vars = tuple(vars)
    if not vars:
        raise GermSyntaxError("variable list is empty")
    for v in vars:
        if not isinstance(v, str) or not _NAME.match(v):
            raise GermSyntaxError(f"invalid variable name {v!r}")
    if len(set(vars)) != len(vars):
        raise GermSyntaxError("variable names must be distinct")
    return vars


def parse_polynomial(text: str, vars: Sequence[str], *, line: int = 1, column: int = 1) -> Polynomial:
    """Parse ``text`` into a polynomial in ``vars``.

    ``line``/``column`` locate the text inside a larger document so that
    diagnostics point at the right place.
    """
    vars = _check_vars(vars)
    return _Parser(text, vars, line, column - 1).parse()


def _natural_key(name: str):
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", name)]


def infer_vars(text: str) -> tuple[str, ...]:
    """Variable names occurring in ``text``, in natural sort order (z2 < z10)."""
    names = {v for k, v, _ in _tokenize(text) if k == "name"}
    return tuple(sorted(names, key=_natural_key))


def _build(vars, field, components, positions=None) -> MapGerm:
    vars = _check_vars(vars)
    if field not in FIELDS:
        raise GermSyntaxError(f"field must be 'real' or 'complex', got {field!r}")
    if not components:
        raise GermSyntaxError("no components given")
    polys = []
    for k, text in enumerate(components):
        if not isinstance(text, str):
            raise GermSyntaxError(f"component {k + 1} must be a string")
        line, col = positions[k] if positions else (1, 1)
        polys.append(parse_polynomial(text, vars, line=line, column=col))
    germ = MapGerm(vars, field, tuple(polys))
    if germ.p > germ.n:
        warnings.warn(f"target dimension p={germ.p} exceeds source dimension n={germ.n}; "
                      "analyses needing p <= n will refuse", stacklevel=3)
    return germ


def parse_germ(doc: dict | str) -> MapGerm:
    """Parse a germ document (dict, JSON text, or line-oriented text)."""
    if isinstance(doc, dict):
        missing = {"vars", "components"} - doc.keys()
        if missing:
            raise GermSyntaxError(f"missing keys: {', '.join(sorted(missing))}")
        return _build(doc["vars"], doc.get("field", "real"), doc["components"])
    if doc.lstrip().startswith("{"):
        try:
            obj = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise GermSyntaxError(exc.msg, exc.lineno, exc.colno) from None
        if not isinstance(obj, dict):
            raise GermSyntaxError("document must be a JSON object")
        return parse_germ(obj)
    return _parse_text_document(doc)


def _parse_text_document(text: str) -> MapGerm:
    vars = None
    field = "real"
    comps: list[str] = []
    positions: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        if ":" not in body:
            col = len(body) - len(body.lstrip()) + 1
            raise GermSyntaxError("expected 'key: value'", lineno, col)
        key, value = body.split(":", 1)
        keyname = key.strip()
        vcol = len(key) + 2 + (len(value) - len(value.lstrip()))
        value = value.strip()
        if keyname == "vars":
            vars = tuple(v for v in re.split(r"[,\s]+", value) if v)
        elif keyname == "field":
            if value not in FIELDS:
                raise GermSyntaxError(f"field must be 'real' or 'complex', got {value!r}", lineno, vcol)
            field = value
        elif keyname in ("component", "f"):
            comps.append(value)
            positions.append((lineno, vcol))
        else:
            raise GermSyntaxError(f"unknown key {keyname!r}", lineno, len(key) - len(key.lstrip()) + 1)
    if vars is None:
        raise GermSyntaxError("missing 'vars:' line")
    return _build(vars, field, comps, positions)


def serialize_germ(g: MapGerm) -> str:
    """Canonical text document; parse_germ(serialize_germ(g)) == g."""
    lines = [f"vars: {', '.join(g.vars)}", f"field: {g.field}"]
    lines += [f"component: {f.to_text()}" for f in g.components]
    return "\n".join(lines) + "\n"
