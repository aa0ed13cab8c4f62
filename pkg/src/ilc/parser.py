"""Concrete syntax for terms, contexts and deltas.

Hand-rolled lexer and recursive-descent parser. Precedence, from loosest to
tightest: fun/match bodies, prefix operators (inl, inr, roll, unroll, and the
delta bangs inl!/inr!), then application, which is left-associative. Line
comments start with -- and run to end of line.
"""
from __future__ import annotations

from dataclasses import dataclass

from .delta import (
    AppCong,
    Del,
    Delta,
    Eps,
    InlBang,
    InlCong,
    Ins,
    InrBang,
    InrCong,
    LamCong,
    MatchCong,
    PairCong,
    Replace,
    RollCong,
    UnrollCong,
    VarReplace,
)
from .terms import (
    App,
    Context,
    CtxHole,
    Hole,
    Inl,
    Inr,
    Lam,
    MatchPair,
    MatchSum,
    Pair,
    Roll,
    Term,
    Unit,
    Unroll,
    Var,
    hole_count,
)

KEYWORDS = frozenset({"inl", "inr", "roll", "unroll", "fun", "match"})

_PUNCT2 = ("->", "=>", "~>")
_PUNCT1 = "()[]{},|~+-!@"


class ParseError(Exception):
    """Syntax error with 1-based line/column and what was expected."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.message = message
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Token:
    kind: str  # punctuation/keyword literal, or "ident", "hole", "eof"
    text: str
    line: int
    col: int


def _ident_start(c: str) -> bool:
    return c.isalpha() or c == "_"


def _ident_char(c: str) -> bool:
    return c.isalnum() or c in "_'"


def tokenize(src: str) -> list[Token]:
    toks: list[Token] = []
    i, line, col = 0, 1, 1
    n = len(src)
    while i < n:
        c = src[i]
        if c == "\n":
            i, line, col = i + 1, line + 1, 1
            continue
        if c in " \t\r":
            i, col = i + 1, col + 1
            continue
        if src.startswith("--", i):
            while i < n and src[i] != "\n":
                i += 1
            continue
        two = src[i : i + 2]
        if two in _PUNCT2:
            toks.append(Token(two, two, line, col))
            i, col = i + 2, col + 2
            continue
        if _ident_start(c):
            j = i
            while j < n and _ident_char(src[j]):
                j += 1
            word = src[i:j]
            if word == "_":
                toks.append(Token("hole", word, line, col))
            elif word in KEYWORDS:
                toks.append(Token(word, word, line, col))
            else:
                toks.append(Token("ident", word, line, col))
            col += j - i
            i = j
            continue
        if c in _PUNCT1:
            toks.append(Token(c, c, line, col))
            i, col = i + 1, col + 1
            continue
        raise ParseError(f"unexpected character {c!r}", line, col)
    toks.append(Token("eof", "", line, col))
    return toks


_TERM_ATOM_STARTS = ("hole", "ident", "(", "match", "@")


class _Parser:
    def __init__(self, src: str, allow_ctx_hole: bool):
        self.toks = tokenize(src)
        self.pos = 0
        self.allow_ctx_hole = allow_ctx_hole

    # -- token plumbing ----------------------------------------------------

    def peek(self) -> Token:
        return self.toks[self.pos]

    def next(self) -> Token:
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def at(self, *kinds: str) -> bool:
        return self.toks[self.pos].kind in kinds

    def expect(self, kind: str, what: str) -> Token:
        t = self.peek()
        if t.kind != kind:
            found = t.text if t.kind != "eof" else "end of input"
            raise ParseError(f"expected {what}, found {found!r}", t.line, t.col)
        return self.next()

    def fail(self, what: str) -> ParseError:
        t = self.peek()
        found = t.text if t.kind != "eof" else "end of input"
        return ParseError(f"expected {what}, found {found!r}", t.line, t.col)

    def ident(self, what: str) -> str:
        return self.expect("ident", what).text

    # -- terms -------------------------------------------------------------

    def term(self) -> Term:
        if self.at("fun"):
            self.next()
            x = self.ident("a binder after 'fun'")
            self.expect("->", "'->' after the binder")
            return Lam(x, self.term())
        return self.term_prefix()

    def term_prefix(self) -> Term:
        t = self.peek()
        if t.kind in ("inl", "inr", "roll", "unroll"):
            self.next()
            body = self.term_prefix()
            return {"inl": Inl, "inr": Inr, "roll": Roll, "unroll": Unroll}[t.kind](body)
        return self.term_app()

    def term_app(self) -> Term:
        e = self.term_atom()
        while self.at(*_TERM_ATOM_STARTS):
            if self.at("@") and not self.allow_ctx_hole:
                break
            e = App(e, self.term_atom())
        return e

    def term_atom(self) -> Term:
        t = self.peek()
        match t.kind:
            case "hole":
                self.next()
                return Hole()
            case "@" if self.allow_ctx_hole:
                self.next()
                return CtxHole()
            case "ident":
                self.next()
                return Var(t.text)
            case "(":
                self.next()
                if self.at(")"):
                    self.next()
                    return Unit()
                first = self.term()
                if self.at(","):
                    self.next()
                    second = self.term()
                    self.expect(")", "')' to close the pair")
                    return Pair(first, second)
                self.expect(")", "')' to close the group")
                return first
            case "match":
                self.next()
                return self.term_match()
        raise self.fail("a term")

    def term_match(self) -> Term:
        scrutinee = self.term()
        self.expect("{", "'{' after the match scrutinee")
        if self.at("inl"):
            self.next()
            xl = self.ident("a binder after 'inl'")
            self.expect("->", "'->' after the pattern")
            left = self.term()
            self.expect("|", "'|' between match arms")
            self.expect("inr", "'inr' for the second arm")
            xr = self.ident("a binder after 'inr'")
            self.expect("->", "'->' after the pattern")
            right = self.term()
            self.expect("}", "'}' to close the match")
            return MatchSum(scrutinee, xl, left, xr, right)
        if self.at("("):
            pat = self.next()
            x1 = self.ident("a binder in the pair pattern")
            self.expect(",", "',' between pair-pattern binders")
            x2 = self.ident("a second binder in the pair pattern")
            self.expect(")", "')' to close the pair pattern")
            if x1 == x2:
                raise ParseError(
                    f"pair-pattern binders must differ, got {x1!r} twice", pat.line, pat.col
                )
            self.expect("->", "'->' after the pattern")
            body = self.term()
            self.expect("}", "'}' to close the match")
            return MatchPair(scrutinee, x1, x2, body)
        raise self.fail("'inl' or a pair pattern after '{'")

    # -- deltas ------------------------------------------------------------

    def delta(self) -> Delta:
        if self.at("fun"):
            self.next()
            x = self.ident("a binder after 'fun'")
            self.expect("->", "'->' after the binder")
            return LamCong(x, self.delta())
        return self.delta_prefix()

    def delta_prefix(self) -> Delta:
        t = self.peek()
        if t.kind in ("inl", "inr"):
            self.next()
            if self.at("!"):
                self.next()
                inner = self.delta_prefix()
                return InlBang(inner) if t.kind == "inl" else InrBang(inner)
            inner = self.delta_prefix()
            return InlCong(inner) if t.kind == "inl" else InrCong(inner)
        if t.kind in ("roll", "unroll"):
            self.next()
            inner = self.delta_prefix()
            return RollCong(inner) if t.kind == "roll" else UnrollCong(inner)
        return self.delta_app()

    def delta_app(self) -> Delta:
        d = self.delta_atom()
        while self.at("~", "+", "-", "!", "(", "ident", "match"):
            d = AppCong(d, self.delta_atom())
        return d

    def delta_atom(self) -> Delta:
        t = self.peek()
        match t.kind:
            case "~":
                self.next()
                self.expect("{", "'{' after '~'")
                e = self.term()
                self.expect("}", "'}' to close the epsilon annotation")
                return Eps(e)
            case "+" | "-":
                self.next()
                self.expect("[", f"'[' after '{t.kind}'")
                frame = self.context_body(t)
                self.expect("]", "']' to close the frame")
                self.expect("{", "'{' before the inner delta")
                inner = self.delta()
                self.expect("}", "'}' to close the inner delta")
                return Ins(frame, inner) if t.kind == "+" else Del(frame, inner)
            case "!":
                self.next()
                self.expect("{", "'{' after '!'")
                source = self.term()
                self.expect("=>", "'=>' between replacement endpoints")
                target = self.term()
                self.expect("}", "'}' to close the replacement")
                return Replace(source, target)
            case "ident":
                self.next()
                self.expect("~>", f"'~>' after '{t.text}' (a bare name is not a delta)")
                target = self.ident("a variable name after '~>'")
                return VarReplace(t.text, target)
            case "(":
                self.next()
                first = self.delta()
                if self.at(","):
                    self.next()
                    second = self.delta()
                    self.expect(")", "')' to close the pair delta")
                    return PairCong(first, second)
                self.expect(")", "')' to close the group")
                return first
            case "match":
                self.next()
                scrutinee = self.delta()
                self.expect("{", "'{' after the match scrutinee")
                self.expect("inl", "'inl' (pair patterns have no delta form)")
                xl = self.ident("a binder after 'inl'")
                self.expect("->", "'->' after the pattern")
                left = self.delta()
                self.expect("|", "'|' between match arms")
                self.expect("inr", "'inr' for the second arm")
                xr = self.ident("a binder after 'inr'")
                self.expect("->", "'->' after the pattern")
                right = self.delta()
                self.expect("}", "'}' to close the match")
                return MatchCong(scrutinee, xl, left, xr, right)
        raise self.fail("a delta")

    def context_body(self, opener: Token) -> Context:
        saved = self.allow_ctx_hole
        self.allow_ctx_hole = True
        try:
            frame = self.term()
        finally:
            self.allow_ctx_hole = saved
        holes = hole_count(frame)
        if holes != 1:
            raise ParseError(
                f"a frame needs exactly one '@', found {holes}", opener.line, opener.col
            )
        return frame

    # -- entry helper --------------------------------------------------------

    def finish(self, node, what: str):
        t = self.peek()
        if t.kind != "eof":
            raise ParseError(f"trailing input after the {what}: {t.text!r}", t.line, t.col)
        return node


def parse_term(src: str) -> Term:
    p = _Parser(src, allow_ctx_hole=False)
    return p.finish(p.term(), "term")


def parse_context(src: str) -> Context:
    p = _Parser(src, allow_ctx_hole=True)
    ctx = p.finish(p.term(), "context")
    holes = hole_count(ctx)
    if holes != 1:
        raise ParseError(f"a context needs exactly one '@', found {holes}", 1, 1)
    return ctx


def parse_delta(src: str) -> Delta:
    p = _Parser(src, allow_ctx_hole=False)
    return p.finish(p.delta(), "delta")
