"""Expression language for algebra elements.

Grammar (explicit ``*``, no juxtaposition)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' '-'? INT)?
    atom   := INT | NAME | '(' expr ')'

Names are generators of the selected algebra or the coefficient symbols
``a alpha beta gamma E`` (unicode ``α β γ μ`` are accepted).  Products are
kept as words in the free algebra and normal-ordered at the end, so
``parse`` goes through :func:`qinduce.ncpoly.normalize`.
"""

from __future__ import annotations

import re

from .coeff import ONE, VARS, CoeffPoly
from .ncpoly import NCElement, normalize


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}" + (f": {text!r}" if text else ""))


class UnknownGenerator(ParseError):
    def __init__(self, token: str, algebra: str, position: int):
        self.token = token
        self.algebra = algebra
        ParseError.__init__(self, f"unknown generator {token!r} for algebra {algebra}", position)


_ALIASES = {"μ": "mu", "α": "alpha", "β": "beta", "γ": "gamma"}
_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_μαβγ][A-Za-z0-9_]*)|(.))")


def _tokenize(text: str):
    pos = 0
    toks = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.end() == pos:
            break
        start = m.start(m.lastindex) if m.lastindex else pos
        num, name, op = m.groups()
        if num is not None:
            toks.append(("int", int(num), start))
        elif name is not None:
            toks.append(("name", _ALIASES.get(name, name), start))
        elif op is not None:
            if op not in "+-*/^()":
                raise ParseError(f"unexpected character {op!r}", start, text)
            toks.append(("op", op, start))
        pos = m.end()
    toks.append(("end", None, len(text)))
    return toks


# A free-algebra value is {word tuple: CoeffPoly}.

def _f_add(u, w, sign=1):
    out = dict(u)
    for k, c in w.items():
        s = out.get(k, CoeffPoly.const(0)) + (c if sign > 0 else -c)
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _f_mul(u, w):
    out = {}
    for k1, c1 in u.items():
        for k2, c2 in w.items():
            k = k1 + k2
            s = out.get(k, CoeffPoly.const(0)) + c1 * c2
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


def _f_scalar(u):
    """Return the CoeffPoly if ``u`` is a pure scalar, else None."""
    if not u:
        return CoeffPoly.const(0)
    if set(u) == {()}:
        return u[()]
    return None


class _Parser:
    def __init__(self, text, generators, algebra_name):
        self.text = text
        self.gens = tuple(generators)
        self.algebra_name = algebra_name
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, op):
        tok = self.take()
        if tok[0] != "op" or tok[1] != op:
            raise ParseError(f"expected {op!r}", tok[2], self.text)

    def parse(self):
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0, self.text)
        val = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected token {tok[1]!r}", tok[2], self.text)
        return val

    def expr(self):
        val = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            val = _f_add(val, rhs, 1 if op == "+" else -1)
        return val

    def term(self):
        val = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            tok = self.take()
            rhs = self.unary()
            if tok[1] == "*":
                val = _f_mul(val, rhs)
            else:
                s = _f_scalar(rhs)
                if s is None or not s.is_constant() or not s.constant_value():
                    raise ParseError("division only by a nonzero rational constant", tok[2], self.text)
                d = s.constant_value()
                val = {k: c / d for k, c in val.items()}
        return val

    def unary(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            val = self.unary()
            return val if tok[1] == "+" else {k: -c for k, c in val.items()}
        return self.power()

    def power(self):
        start = self.peek()[2]
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            neg = False
            if self.peek()[0] == "op" and self.peek()[1] == "-":
                self.take()
                neg = True
            tok = self.take()
            if tok[0] != "int":
                raise ParseError("exponent must be an integer", tok[2], self.text)
            n = tok[1]
            if neg:
                s = _f_scalar(base)
                if s is not None and s.is_constant() and s.constant_value():
                    return {(): CoeffPoly.const(s.constant_value() ** -n)}
                if s is not None and len(s.terms) == 1:
                    (exp, c), = s.terms.items()
                    if c == 1 and not any(exp[1:]):
                        return {(): CoeffPoly.a_power(-exp[0] * n)}
                raise ParseError("negative exponent only allowed on a or a rational constant", start, self.text)
            out = {(): ONE}
            for _ in range(n):
                out = _f_mul(out, base)
            return out
        return base

    def atom(self):
        tok = self.take()
        kind, val, pos = tok
        if kind == "int":
            return {(): CoeffPoly.const(val)} if val else {}
        if kind == "name":
            if val in VARS:
                return {(): CoeffPoly.var(val)}
            if val in self.gens:
                return {(self.gens.index(val),): ONE}
            raise UnknownGenerator(val, self.algebra_name, pos)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if kind == "end":
            raise ParseError("unexpected end of input", pos, self.text)
        raise ParseError(f"unexpected token {val!r}", pos, self.text)


def parse_free(text: str, generators, algebra_name: str = "?") -> dict:
    """Parse into the free algebra: ``{generator-index word: CoeffPoly}``."""
    return _Parser(text, generators, algebra_name).parse()


def parse(text: str, alg) -> NCElement:
    """Parse ``text`` and normal-order it in ``alg``."""
    free = parse_free(text, alg.generators, alg.name)
    return normalize([(c, w) for w, c in free.items()], alg)


def parse_coeff(text: str) -> CoeffPoly:
    free = parse_free(text, (), "coefficients")
    s = _f_scalar(free)
    if s is None:
        raise ParseError("expected a coefficient expression", 0, text)
    return s


def parse_terms(text: str, generators) -> dict:
    """Parse text that is already normal-ordered into ``{mono: CoeffPoly}``.

    Used to reload stored documents without needing the rewrite rules.
    """
    free = parse_free(text, generators)
    out = {}
    n = len(generators)
    for word, c in free.items():
        if list(word) != sorted(word):
            raise ParseError(f"word {word} is not in normal order", 0, text)
        m = [0] * n
        for g in word:
            m[g] += 1
        m = tuple(m)
        out[m] = out.get(m, CoeffPoly.const(0)) + c
    return {m: c for m, c in out.items() if c}
