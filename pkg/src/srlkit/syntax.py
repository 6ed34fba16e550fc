"""Propositional formulas over ->, /\\, \\/, ~ with a parser and printer.

Grammar and printing rules are in ``docs/grammar.md``.  ``top`` abbreviates
``_t -> _t`` for the reserved variable ``_t``; ``bot`` abbreviates
``~top``; ``box f`` abbreviates ``(f -> f) -> f``.  The printer folds the
first two back into their keywords, so printing then parsing is the
identity on every formula the parser can produce.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Optional, Union

RESERVED = "_t"
_NAME = re.compile(r"[a-z][a-zA-Z0-9_]*")
KEYWORDS = {"top", "bot", "box"}

GREEK = {"α": "alpha", "β": "beta", "γ": "gamma", "δ": "delta", "η": "eta",
         "φ": "phi", "ψ": "psi", "χ": "chi", "θ": "theta"}


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return to_str(self)


@dataclass(frozen=True)
class Imp:
    left: "Formula"
    right: "Formula"

    def __str__(self):
        return to_str(self)


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"

    def __str__(self):
        return to_str(self)


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"

    def __str__(self):
        return to_str(self)


@dataclass(frozen=True)
class Not:
    arg: "Formula"

    def __str__(self):
        return to_str(self)


Formula = Union[Var, Imp, And, Or, Not]
Scheme = Formula          # a formula whose variables are read as metavariables

TOP = Imp(Var(RESERVED), Var(RESERVED))
BOT = Not(TOP)


def box_formula(f: Formula) -> Formula:
    return Imp(Imp(f, f), f)


# ---------------------------------------------------------------------------
# tokenizer and parser


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int, text: str = ""):
        super().__init__(f"{msg} at position {pos}" + (f": {text!r}" if text else ""))
        self.pos = pos


_TOKENS = [
    ("IMP", r"->|→"),
    ("AND", r"/\\|∧"),
    ("OR", r"\\/|∨"),
    ("NOT", r"~|¬"),
    ("BOX", r"□"),
    ("TOP", r"⊤"),
    ("BOT", r"⊥"),
    ("LP", r"\("),
    ("RP", r"\)"),
    ("GREEK", "[" + "".join(GREEK) + "]"),
    ("NAME", r"[A-Za-z_][A-Za-z0-9_]*"),
    ("WS", r"\s+"),
]
_LEX = re.compile("|".join(f"(?P<{k}>{p})" for k, p in _TOKENS))


def tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _LEX.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        val = m.group()
        if kind == "NAME":
            if val in KEYWORDS:
                kind = val.upper()
            elif not _NAME.fullmatch(val):
                raise ParseError(f"bad variable name {val!r}", pos, text)
        elif kind == "GREEK":
            kind, val = "NAME", GREEK[val]
        if kind != "WS":
            out.append((kind, val, pos))
        pos = m.end()
    out.append(("EOF", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    def peek(self) -> str:
        return self.toks[self.i][0]

    def take(self, kind: str):
        tok = self.toks[self.i]
        if tok[0] != kind:
            what = tok[1] or "end of input"
            raise ParseError(f"expected {kind}, found {what!r}", tok[2], self.text)
        self.i += 1
        return tok

    def formula(self) -> Formula:
        left = self.disj()
        if self.peek() == "IMP":
            self.take("IMP")
            return Imp(left, self.formula())
        return left

    def disj(self) -> Formula:
        f = self.conj()
        while self.peek() == "OR":
            self.take("OR")
            f = Or(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.unary()
        while self.peek() == "AND":
            self.take("AND")
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        k = self.peek()
        if k == "NOT":
            self.take("NOT")
            return Not(self.unary())
        if k == "BOX":
            self.take("BOX")
            return box_formula(self.unary())
        if k == "TOP":
            self.take("TOP")
            return TOP
        if k == "BOT":
            self.take("BOT")
            return BOT
        if k == "LP":
            self.take("LP")
            f = self.formula()
            self.take("RP")
            return f
        return Var(self.take("NAME")[1])


def parse(text: str) -> Formula:
    p = _Parser(text)
    f = p.formula()
    p.take("EOF")
    return f


def as_formula(f: Union[str, Formula]) -> Formula:
    return parse(f) if isinstance(f, str) else f


# ---------------------------------------------------------------------------
# printer

_GREEK_BACK = {v: k for k, v in GREEK.items()}
_PREC = {Imp: 1, Or: 2, And: 3, Not: 4, Var: 5}
_ASCII = {Imp: " -> ", And: " /\\ ", Or: " \\/ ", Not: "~"}
_UNICODE = {Imp: " → ", And: " ∧ ", Or: " ∨ ", Not: "¬"}


def _prec(f: Formula) -> int:
    if f == TOP or f == BOT:
        return 5
    return _PREC[type(f)]


def to_str(f: Formula, unicode: bool = False) -> str:
    """Print with the fewest parentheses that parse back to the same tree."""
    sym = _UNICODE if unicode else _ASCII

    def go(g: Formula) -> str:
        if g == TOP:
            return "⊤" if unicode else "top"
        if g == BOT:
            return "⊥" if unicode else "bot"
        if isinstance(g, Var):
            return _GREEK_BACK.get(g.name, g.name) if unicode else g.name
        if isinstance(g, Not):
            return sym[Not] + wrap(g.arg, _prec(g.arg) < 4)
        p = _PREC[type(g)]
        if isinstance(g, Imp):
            # right associative
            return wrap(g.left, _prec(g.left) <= p) + sym[Imp] + go(g.right)
        # left associative
        return wrap(g.left, _prec(g.left) < p) + sym[type(g)] + wrap(g.right, _prec(g.right) <= p)

    def wrap(g: Formula, paren: bool) -> str:
        s = go(g)
        return f"({s})" if paren else s

    return go(f)


# ---------------------------------------------------------------------------
# structure


def children(f: Formula) -> tuple:
    if isinstance(f, Var):
        return ()
    if isinstance(f, Not):
        return (f.arg,)
    return (f.left, f.right)


def walk(f: Formula) -> Iterator[Formula]:
    """Subtrees in post-order (children before parents)."""
    for c in children(f):
        yield from walk(c)
    yield f


def subformulas(f: Formula) -> set:
    return set(walk(f))


def variables(f: Formula) -> list[str]:
    """Variable names in order of first occurrence (the reserved name included)."""
    seen = {}
    for g in walk(f):
        if isinstance(g, Var):
            seen.setdefault(g.name, None)
    return list(seen)


def size(f: Formula) -> int:
    return sum(1 for _ in walk(f))


def depth(f: Formula) -> int:
    cs = children(f)
    return 0 if not cs else 1 + max(depth(c) for c in cs)


def _rebuild(f: Formula, cs) -> Formula:
    if isinstance(f, Not):
        return Not(cs[0])
    return type(f)(cs[0], cs[1])


def substitute(sigma: dict, f: Formula) -> Formula:
    """Simultaneous substitution of formulas for variable names."""
    if isinstance(f, Var):
        return sigma.get(f.name, f)
    return _rebuild(f, [substitute(sigma, c) for c in children(f)])


def match_scheme(s: Scheme, f: Formula, sigma: Optional[dict] = None) -> Optional[dict]:
    """A substitution turning the scheme s into exactly f, or None.

    Every variable of s is a metavariable except the reserved one, which
    only matches itself.
    """
    sigma = {} if sigma is None else dict(sigma)
    stack = [(s, f)]
    while stack:
        a, b = stack.pop()
        if isinstance(a, Var) and a.name != RESERVED:
            bound = sigma.get(a.name)
            if bound is None:
                sigma[a.name] = b
            elif bound != b:
                return None
            continue
        if type(a) is not type(b):
            return None
        if isinstance(a, Var):
            if a != b:
                return None
            continue
        # push right first so the left subtree is compared first
        stack.extend(reversed(list(zip(children(a), children(b)))))
    return sigma
