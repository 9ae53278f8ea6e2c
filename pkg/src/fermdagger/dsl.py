"""Text syntax for bordisms.

Grammar (``!`` binds tightest, then ``@``, then ``.``; all left-associative)::

    term  := term "." term | term "@" term | term "!" | atom
    atom  := "id" "(" obj ")" | "theta" [ "(" obj ")" ] | "ev" | "coev"
           | "swap" "(" obj "," obj ")" | "(" term ")"
    obj   := ("p" | "d")*

``f . g`` means f after g.  ``theta(obj)`` applies the spin flip to every
point of ``obj``; bare ``theta`` acts on a single ``p``.
"""

from __future__ import annotations

import re

from . import bordism1 as bd
from .bordism1 import SPIN, BordMorphism, Flavor
from .errors import BordSyntaxError

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_]+)|(?P<sym>[().@!,]))")


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise BordSyntaxError(f"unexpected character {text[start]!r}", text, start)
        kind = "name" if m.group("name") else "sym"
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, flavor: Flavor):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.flavor = flavor

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise BordSyntaxError(msg, self.text, tok[2])

    def expect(self, sym):
        t = self.take()
        if t[1] != sym or t[0] == "name":
            self.error(f"expected {sym!r}", t)
        return t

    def parse(self) -> BordMorphism:
        if self.peek()[0] == "end":
            self.error("empty term")
        m = self.compose_level()
        if self.peek()[0] != "end":
            self.error(f"unexpected {self.peek()[1]!r}")
        return m

    def compose_level(self):
        left = self.tensor_level()
        while self.peek()[1] == "." and self.peek()[0] == "sym":
            self.take()
            right = self.tensor_level()
            left = bd.compose(left, right)
        return left

    def tensor_level(self):
        left = self.postfix_level()
        while self.peek()[1] == "@" and self.peek()[0] == "sym":
            self.take()
            right = self.postfix_level()
            left = bd.tensorBord(left, right)
        return left

    def postfix_level(self):
        m = self.atom()
        while self.peek()[1] == "!" and self.peek()[0] == "sym":
            self.take()
            m = bd.daggerBord(m)
        return m

    def obj(self) -> str:
        t = self.peek()
        if t[0] == "name":
            self.take()
            if any(c not in "pd" for c in t[1]):
                self.error(f"bad object {t[1]!r}", t)
            return t[1]
        return ""

    def atom(self):
        t = self.take()
        if t[0] == "sym" and t[1] == "(":
            m = self.compose_level()
            self.expect(")")
            return m
        if t[0] != "name":
            self.error("expected a term", t)
        name = t[1]
        if name == "id":
            self.expect("(")
            w = self.obj()
            self.expect(")")
            return bd.identity(w, self.flavor)
        if name == "theta":
            w = "p"
            if self.peek()[1] == "(" and self.peek()[0] == "sym":
                self.take()
                w = self.obj()
                self.expect(")")
            return bd.theta(w, self.flavor)
        if name == "ev":
            return bd.ev(self.flavor)
        if name == "coev":
            return bd.coev(self.flavor)
        if name == "swap":
            self.expect("(")
            a = self.obj()
            self.expect(",")
            b = self.obj()
            self.expect(")")
            return bd.braidNF(a, b, self.flavor)
        self.error(f"unknown atom {name!r}", t)


def parseBordTerm(text: str, flavor: Flavor = SPIN) -> BordMorphism:
    return _Parser(text, flavor).parse()


# printing ------------------------------------------------------------------

def _w(word) -> str:
    return "".join(word)


def _perm_terms(src, order) -> list[str]:
    """Layers of adjacent swaps realising src -> [src[k] for k in order]."""
    cur = list(range(len(src)))   # cur[j] = original index currently at j
    target = list(order)
    letters = list(src)
    layers = []
    for j in range(len(target)):
        k = cur.index(target[j])
        while k > j:
            a, b = letters[k - 1], letters[k]
            parts = []
            if k - 1 > 0:
                parts.append(f"id({_w(letters[:k - 1])})")
            parts.append(f"swap({a},{b})")
            if k + 1 < len(letters):
                parts.append(f"id({_w(letters[k + 1:])})")
            layers.append(" @ ".join(parts))
            letters[k - 1], letters[k] = b, a
            cur[k - 1], cur[k] = cur[k], cur[k - 1]
            k -= 1
    return layers


def print_term(m: BordMorphism) -> str:
    """A term whose parse is exactly ``m``."""
    dec = bd.decompose(m)

    src_layers = _perm_terms(m.src, dec.src_order)
    mid = [x for x, _ in dec.throughs]

    caps = ["(ev . (theta(d) @ id(p)))" if f else "ev" for f in dec.cap_flips]
    thr = [f"theta({x})" if f else f"id({x})" for x, f in dec.throughs]
    cap_layer = caps + thr
    cups = ["((theta(p) @ id(d)) . coev)" if f else "coev" for f in dec.cup_flips]
    cup_layer = ([f"id({_w(mid)})"] if mid else []) + cups

    after_cups = tuple(mid) + ("p", "d") * len(dec.cup_flips)
    # tgt_order[j] = target index of position j; invert to get a source order
    inv = bd.inverse_order(dec.tgt_order)
    tgt_layers = _perm_terms(after_cups, inv)

    circles = ["(ev . swap(p,d) . coev)"] * dec.periodic
    circles += ["(ev . (theta(d) @ id(p)) . swap(p,d) . coev)"] * dec.antiperiodic

    body = list(reversed(tgt_layers))
    if cups:
        body.append(" @ ".join(cup_layer))
    if caps or any(f for _, f in dec.throughs):
        body.append(" @ ".join(cap_layer) if cap_layer else "id()")
    body.extend(reversed(src_layers))
    if not body:
        body = [f"id({_w(m.src)})"]
    term = " . ".join(f"({b})" for b in body) if len(body) > 1 else body[0]
    if circles:
        term = " @ ".join(circles + [f"({term})"])
    return term
