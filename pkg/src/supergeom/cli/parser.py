"""Recursive-descent parser for session files.

Declarations::

    ring P(m=1, n=2)
    ideal N = [x0*th1, x1^2]
    module M = quotient(N)

Commands (one per line, brackets may span lines)::

    cohomology M twist=-3..3     hilbert M     betti M     regularity M
    euler M twist=-2..2          serre 1 2 2
    koszul [x0, x1, th1] window=6
    berezinian (1|1) [[1 + th1*eta1, th1], [eta1, 2]]
    picfactor 1 + th1*eta1       picard 1 [-2, -1]
    nested I0 I1                 nestedcount 3 1
    dims grass 1 1 1 1           dims flag 2 3

``O`` always names the structure sheaf of the declared ring.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from ..errors import ParseError
from .lexer import Token, tokenize

# -- expression tree -----------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str
    line: int
    col: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


Expr = Union[Num, Var, BinOp, Neg, Pow]


def variables(e: Expr) -> list[Var]:
    if isinstance(e, Var):
        return [e]
    if isinstance(e, BinOp):
        return variables(e.left) + variables(e.right)
    if isinstance(e, Neg):
        return variables(e.arg)
    if isinstance(e, Pow):
        return variables(e.base)
    return []


# -- statements ----------------------------------------------------------------


@dataclass(frozen=True)
class RingDecl:
    m: int
    n: int


@dataclass(frozen=True)
class IdealDecl:
    name: str
    polys: tuple[Expr, ...]
    line: int
    col: int


@dataclass(frozen=True)
class ModuleDecl:
    name: str
    ideal: str


@dataclass(frozen=True)
class Command:
    verb: str
    obj: str
    args: dict = field(hash=False, compare=False)
    line: int = 0


@dataclass
class Session:
    ring: RingDecl | None = None
    ideals: dict = field(default_factory=dict)
    modules: dict = field(default_factory=dict)
    commands: list = field(default_factory=list)


_X = re.compile(r"x(\d+)$")
_TH = re.compile(r"th(\d+)$")
_ETA = re.compile(r"eta(\d+)$")

COMMANDS = (
    "cohomology", "hilbert", "betti", "regularity", "euler", "serre", "koszul",
    "berezinian", "picfactor", "picard", "nested", "nestedcount", "dims",
)


class Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0
        self.session = Session()

    # -- token helpers ---------------------------------------------------------
    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, msg: str, tok: Token | None = None):
        t = tok or self.tok
        raise ParseError(msg, t.line, t.col)

    def advance(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def at(self, text: str) -> bool:
        return self.tok.kind == "SYM" and self.tok.text == text

    def expect_sym(self, text: str) -> Token:
        if not self.at(text):
            self.error(f"expected {text!r}, found {self._show(self.tok)}")
        return self.advance()

    def expect_ident(self, word: str | None = None) -> Token:
        t = self.tok
        if t.kind != "IDENT" or (word is not None and t.text != word):
            self.error(f"expected {word or 'a name'}, found {self._show(t)}")
        return self.advance()

    def expect_int(self, signed: bool = False) -> int:
        neg = False
        if signed and self.at("-"):
            self.advance()
            neg = True
        t = self.tok
        if t.kind != "INT":
            self.error(f"expected an integer, found {self._show(t)}")
        self.advance()
        return -int(t.text) if neg else int(t.text)

    def end_of_statement(self):
        if self.tok.kind != "NEWLINE":
            self.error(f"unexpected {self._show(self.tok)}")
        self.advance()

    @staticmethod
    def _show(t: Token) -> str:
        if t.kind == "NEWLINE":
            return "end of line"
        if t.kind == "EOF":
            return "end of input"
        return repr(t.text)

    # -- top level -------------------------------------------------------------
    def parse(self) -> Session:
        while self.tok.kind != "EOF":
            if self.tok.kind == "NEWLINE":
                self.advance()
                continue
            self.statement()
        return self.session

    def statement(self):
        t = self.expect_ident()
        word = t.text
        if word == "ring":
            self.ring_decl(t)
        elif word == "ideal":
            self.ideal_decl()
        elif word == "module":
            self.module_decl()
        elif word in COMMANDS:
            start = self.tok.offset
            args = getattr(self, f"cmd_{word}")()
            last = self.toks[self.i - 1]
            end = last.offset + len(last.text)
            obj = " ".join(self.text[start:end].split())
            self.session.commands.append(Command(word, obj, args, t.line))
        else:
            self.error(f"unknown statement {word!r}", t)
        self.end_of_statement()

    def ring_decl(self, kw: Token):
        if self.session.ring is not None:
            self.error("ring already declared", kw)
        self.expect_ident("P")
        self.expect_sym("(")
        vals = {}
        while True:
            name = self.expect_ident()
            if name.text not in ("m", "n") or name.text in vals:
                self.error(f"expected m= or n=, found {name.text!r}", name)
            self.expect_sym("=")
            vals[name.text] = self.expect_int()
            if self.at(","):
                self.advance()
                continue
            break
        self.expect_sym(")")
        if set(vals) != {"m", "n"}:
            self.error("ring needs both m and n", kw)
        self.session.ring = RingDecl(vals["m"], vals["n"])

    def _new_name(self) -> Token:
        t = self.expect_ident()
        s = self.session
        if t.text in s.ideals or t.text in s.modules or t.text == "O":
            self.error(f"name {t.text!r} already declared", t)
        return t

    def ideal_decl(self):
        t = self._new_name()
        self.expect_sym("=")
        polys = self.poly_list("ideal")
        self.session.ideals[t.text] = IdealDecl(t.text, tuple(polys), t.line, t.col)

    def module_decl(self):
        t = self._new_name()
        self.expect_sym("=")
        self.expect_ident("quotient")
        self.expect_sym("(")
        ideal = self.ideal_ref()
        self.expect_sym(")")
        if self.session.ring is None:
            self.error("module declared before the ring", t)
        self.session.modules[t.text] = ModuleDecl(t.text, ideal)

    # -- references --------------------------------------------------------------
    def ideal_ref(self) -> str:
        t = self.expect_ident()
        if t.text not in self.session.ideals:
            self.error(f"undeclared ideal {t.text!r}", t)
        return t.text

    def module_ref(self) -> str:
        t = self.expect_ident()
        if t.text == "O":
            if self.session.ring is None:
                self.error("O used before the ring was declared", t)
            return t.text
        if t.text not in self.session.modules:
            self.error(f"undeclared module {t.text!r}", t)
        return t.text

    def twist_range(self) -> tuple[int, int]:
        self.expect_ident("twist")
        self.expect_sym("=")
        a = self.expect_int(signed=True)
        self.expect_sym("..")
        b = self.expect_int(signed=True)
        if b < a:
            self.error("empty twist range")
        return a, b

    # -- commands ----------------------------------------------------------------
    def cmd_cohomology(self):
        name = self.module_ref()
        return {"module": name, "twists": self.twist_range()}

    def cmd_euler(self):
        return self.cmd_cohomology()

    def cmd_hilbert(self):
        return {"module": self.module_ref()}

    cmd_betti = cmd_hilbert
    cmd_regularity = cmd_hilbert

    def cmd_serre(self):
        return {"m": self.expect_int(), "n": self.expect_int(), "r": self.expect_int(signed=True)}

    def cmd_koszul(self):
        if self.session.ring is None:
            self.error("koszul needs a declared ring")
        polys = self.poly_list("ring")
        self.expect_ident("window")
        self.expect_sym("=")
        return {"polys": polys, "window": self.expect_int()}

    def cmd_berezinian(self):
        self.expect_sym("(")
        p = self.expect_int()
        self.expect_sym("|")
        q = self.expect_int()
        self.expect_sym(")")
        start = self.tok
        self.expect_sym("[")
        rows = []
        while not self.at("]"):
            rows.append(self.poly_list("grassmann"))
            if self.at(","):
                self.advance()
            elif not self.at("]"):
                self.error(f"expected ',' or ']', found {self._show(self.tok)}")
        self.expect_sym("]")
        if len(rows) != p + q or any(len(r) != p + q for r in rows):
            self.error(f"expected a {p + q}x{p + q} matrix", start)
        return {"p": p, "q": q, "rows": rows}

    def cmd_picfactor(self):
        return {"element": self.expr("picfactor")}

    def cmd_picard(self):
        m = self.expect_int()
        self.expect_sym("[")
        twists = []
        while not self.at("]"):
            twists.append(self.expect_int(signed=True))
            if self.at(","):
                self.advance()
            elif not self.at("]"):
                self.error(f"expected ',' or ']', found {self._show(self.tok)}")
        self.expect_sym("]")
        return {"m": m, "twists": tuple(twists)}

    def cmd_nested(self):
        return {"I0": self.ideal_ref(), "I1": self.ideal_ref()}

    def cmd_nestedcount(self):
        return {"p": self.expect_int(), "q": self.expect_int()}

    def cmd_dims(self):
        kind = self.expect_ident()
        if kind.text == "grass":
            return {"kind": "grass", "args": tuple(self.expect_int() for _ in range(4))}
        if kind.text == "flag":
            return {"kind": "flag", "args": tuple(self.expect_int() for _ in range(2))}
        self.error(f"unknown dimension formula {kind.text!r}", kind)

    # -- polynomials -------------------------------------------------------------
    def poly_list(self, context: str) -> list[Expr]:
        self.expect_sym("[")
        out = []
        while not self.at("]"):
            out.append(self.expr(context))
            if self.at(","):
                self.advance()
            elif not self.at("]"):
                self.error(f"expected ',' or ']', found {self._show(self.tok)}")
        self.expect_sym("]")
        return out

    def expr(self, context: str) -> Expr:
        node = self.term(context)
        while self.at("+") or self.at("-"):
            op = self.advance().text
            node = BinOp(op, node, self.term(context))
        return node

    def term(self, context: str) -> Expr:
        node = self.factor(context)
        while self.at("*"):
            self.advance()
            node = BinOp("*", node, self.factor(context))
        return node

    def factor(self, context: str) -> Expr:
        if self.at("-"):
            self.advance()
            return Neg(self.factor(context))
        base = self.atom(context)
        if self.at("^") or self.at("**"):
            self.advance()
            t = self.tok
            if t.kind != "INT":
                self.error("exponent must be a nonnegative integer literal")
            self.advance()
            return Pow(base, int(t.text))
        return base

    def atom(self, context: str) -> Expr:
        t = self.tok
        if t.kind == "INT":
            self.advance()
            value = Fraction(int(t.text))
            if self.at("/"):
                self.advance()
                d = self.tok
                if d.kind != "INT" or int(d.text) == 0:
                    self.error("expected a nonzero integer denominator")
                self.advance()
                value /= int(d.text)
            return Num(value)
        if t.kind == "IDENT":
            self.check_name(t, context)
            self.advance()
            return Var(t.text, t.line, t.col)
        if self.at("("):
            self.advance()
            e = self.expr(context)
            self.expect_sym(")")
            return e
        self.error(f"expected a polynomial, found {self._show(t)}")

    def check_name(self, t: Token, context: str):
        ring = self.session.ring
        name = t.text
        if (mx := _X.match(name)) and ring is not None and context != "picfactor":
            if int(mx.group(1)) <= ring.m and str(int(mx.group(1))) == mx.group(1):
                return
        if (mt := _TH.match(name)) and int(mt.group(1)) >= 1 and str(int(mt.group(1))) == mt.group(1):
            if context in ("grassmann", "picfactor"):
                return
            if ring is not None and int(mt.group(1)) <= ring.n:
                return
        if (me := _ETA.match(name)) and int(me.group(1)) >= 1 and context in ("grassmann", "picfactor"):
            return
        if name in ("u", "v") and context == "ideal":
            return
        self.error(f"undeclared variable {name!r}", t)


def parse(text: str) -> Session:
    return Parser(text).parse()
