"""Surface syntax: lexer, parser, and renderer.

The wire format is plain ASCII and whitespace-insensitive.  Parsing
fully desugars to the core constructors; rendering inverts parsing up
to whitespace, in a fully explicit core form or with a small set of
conservative abbreviations (sugar=True).
"""

from __future__ import annotations

import re

from .syntax import (
    ABSURD,
    EMPTY,
    Antibrace,
    Brace,
    Class,
    CStop,
    Cont,
    Empty,
    Fed,
    IStop,
    Inter,
    Num,
    VStop,
    canonical_index,
    name_to_index,
    num,
    var,
    var_name,
)
from .subst import bind_index
from . import sugar as sg


class ParseError(ValueError):
    def __init__(self, message, pos):
        super().__init__("%s (at position %d)" % (message, pos))
        self.pos = pos


_TOKEN = re.compile(
    r"""(?P<ws>\s+)
      | (?P<bot>_\|_)
      | (?P<stop>'sa|'s|'c|'v|'i)
      | (?P<num>\#\d+)
      | (?P<fed>&\d*)
      | (?P<bar>\|\d*)
      | (?P<op>:>|<:|/\\|\\/|=)
      | (?P<punct>[{}().,])
      | (?P<name>[A-Za-z][A-Za-z0-9]*)
    """,
    re.X,
)


def _lex(text):
    toks = []
    i = 0
    while i < len(text):
        m = _TOKEN.match(text, i)
        if m is None:
            raise ParseError("unexpected character %r" % text[i], i)
        kind = m.lastgroup
        if kind != "ws":
            toks.append((kind, m.group(), i))
        i = m.end()
    toks.append(("eof", "", len(text)))
    return toks


_KEYWORDS = {"O", "V", "not", "triv", "in", "All", "Ex", "Sing"}


class _Parser:
    def __init__(self, text, mode):
        assert mode in sg.MODES
        self.toks = _lex(text)
        self.i = 0
        self.mode = mode

    def peek(self):
        return self.toks[self.i]

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, kind, text=None):
        k, s, pos = self.peek()
        if k != kind or (text is not None and s != text):
            raise ParseError("expected %s" % (text or kind), pos)
        return self.next()

    def at_name(self, *names):
        k, s, _ = self.peek()
        return k == "name" and s in names

    # quant := ("All"|"Ex") var "." quant | cont
    def parse_expr(self):
        if self.at_name("All", "Ex"):
            _, word, _ = self.next()
            binder = self.parse_binder()
            self.expect("punct", ".")
            body = self.parse_expr()
            build = sg.all_ if word == "All" else sg.ex_
            return build(binder, body)
        return self.parse_cont()

    def parse_binder(self):
        k, s, pos = self.peek()
        idx = name_to_index(s) if k == "name" else None
        if idx is None:
            raise ParseError("expected a variable name", pos)
        self.next()
        return var(idx)

    # cont := rel (":>" cont)?   right-associative
    def parse_cont(self):
        left = self.parse_rel()
        k, s, _ = self.peek()
        if k == "op" and s == ":>":
            self.next()
            return Cont(left, self.parse_cont())
        return left

    # rel := junct (("<:"|"="|"in") junct)?   no chaining
    def parse_rel(self):
        left = self.parse_junct()
        k, s, _ = self.peek()
        if k == "op" and s == "<:":
            self.next()
            return sg.subeq(left, self.parse_junct())
        if k == "op" and s == "=":
            self.next()
            return sg.eq(left, self.parse_junct())
        if self.at_name("in"):
            self.next()
            return sg.in_(left, self.parse_junct(), mode=self.mode)
        return left

    # junct := fed (("/\"|"\/") fed)*   left-associative
    def parse_junct(self):
        left = self.parse_fed()
        while True:
            k, s, _ = self.peek()
            if k == "op" and s == "/\\":
                self.next()
                left = sg.inter(left, self.parse_fed(), self.mode)
            elif k == "op" and s == "\\/":
                self.next()
                left = sg.or_(left, self.parse_fed(), self.mode)
            else:
                return left

    # fed := unary ("&"[lvl] unary)*   left-associative
    def parse_fed(self):
        left = self.parse_unary()
        while self.peek()[0] == "fed":
            _, s, _ = self.next()
            level = int(s[1:]) if len(s) > 1 else 0
            left = Fed(level, left, self.parse_unary())
        return left

    def parse_unary(self):
        if self.at_name("not"):
            self.next()
            return sg.not_(self.parse_unary())
        if self.at_name("triv"):
            self.next()
            return sg.triv(self.parse_unary())
        return self.parse_postfix()

    def parse_postfix(self):
        t = self.parse_primary()
        while self.peek()[0] == "stop":
            _, s, _ = self.next()
            t = {"'c": CStop, "'v": VStop, "'i": IStop, "'s": Brace, "'sa": Antibrace}[s](t)
        return t

    def parse_primary(self):
        k, s, pos = self.next()
        if k == "bot":
            return ABSURD
        if k == "num":
            return num(int(s[1:]))
        if k == "punct" and s == "(":
            t = self.parse_expr()
            self.expect("punct", ")")
            return t
        if k == "punct" and s == "{":
            binder = self.parse_binder()
            bk, bs, bpos = self.peek()
            if bk != "bar":
                raise ParseError("expected | after the class binder", bpos)
            self.next()
            level = int(bs[1:]) if len(bs) > 1 else 0
            body = self.parse_expr()
            self.expect("punct", "}")
            return bind_index(body, binder, level)
        if k == "name":
            if s == "O":
                return EMPTY
            if s == "V":
                return sg.universe(0)
            if re.fullmatch(r"V\d+", s):
                return sg.universe(int(s[1:]))
            if s == "Sing":
                self.expect("punct", "(")
                subject = self.parse_expr()
                witness = None
                if self.peek()[1] == ",":
                    self.next()
                    witness = self.parse_expr()
                self.expect("punct", ")")
                return sg.sing(subject, witness, mode=self.mode)
            idx = name_to_index(s)
            if idx is not None:
                return var(idx)
            raise ParseError("unknown name %r" % s, pos)
        raise ParseError("unexpected token %r" % s, pos)


def parse(text, mode="classical"):
    """Parse surface text to a fully desugared core object."""
    p = _Parser(text, mode)
    t = p.parse_expr()
    k, s, pos = p.peek()
    if k != "eof":
        raise ParseError("trailing input %r" % s, pos)
    return t


# precedence levels for rendering
_ATOM, _POST, _PRE, _FED, _JUNCT, _REL, _CONT = 7, 6, 5, 4, 3, 2, 1


def render(obj, sugar=False) -> str:
    """Render an object; parse(render(obj)) is structurally obj again.

    With sugar=True a few fixed shapes print through abbreviations:
    the absurd object, negation, trivialization, and the universes.
    """

    def rec(t, floor):
        s, p = fmt(t)
        return "(" + s + ")" if p < floor else s

    def fmt(t):
        if sugar:
            if t == ABSURD:
                return "_|_", _ATOM
            if isinstance(t, Cont) and t.right == ABSURD:
                return "not " + rec(t.left, _POST), _PRE
            if isinstance(t, Cont) and isinstance(t.left, Empty):
                return "triv " + rec(t.right, _POST), _PRE
            if isinstance(t, Class) and t.index == var(0) and isinstance(t.body, Empty):
                return ("V" if t.level == 0 else "V%d" % t.level), _ATOM
        if isinstance(t, Empty):
            return "O", _ATOM
        if isinstance(t, Num):
            return "#%d" % t.value, _ATOM
        if isinstance(t, VStop):
            ci = canonical_index(t)
            if ci is not None:
                return var_name(ci), _ATOM
            return rec(t.body, _POST) + "'v", _POST
        if isinstance(t, CStop):
            return rec(t.body, _POST) + "'c", _POST
        if isinstance(t, IStop):
            return rec(t.body, _POST) + "'i", _POST
        if isinstance(t, Brace):
            return rec(t.body, _POST) + "'s", _POST
        if isinstance(t, Antibrace):
            return rec(t.body, _POST) + "'sa", _POST
        if isinstance(t, Fed):
            mark = "&" if t.level == 0 else "&%d" % t.level
            return rec(t.left, _FED) + " " + mark + " " + rec(t.right, _PRE), _FED
        if isinstance(t, Inter):
            return rec(t.left, _JUNCT) + " /\\ " + rec(t.right, _FED), _JUNCT
        if isinstance(t, Cont):
            return rec(t.left, _REL) + " :> " + rec(t.right, _CONT), _CONT
        if isinstance(t, Class):
            ci = canonical_index(t.index)
            assert ci is not None, "class binder has no surface name"
            mark = "|" if t.level == 0 else "|%d" % t.level
            return "{%s %s %s}" % (var_name(ci), mark, rec(t.body, 0)), _ATOM
        raise TypeError(t)

    return rec(obj, 0)
