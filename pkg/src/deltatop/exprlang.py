"""Tiny expression languages for the CLI.

Two dialects:

* interval expressions over the real-line engine, e.g.
  ``int(cl((-1,0)U(0,1)))`` or ``regular_open((0,1))`` -- operators int,
  cl, comp, binary U (union) and ^ (intersection), plus boolean
  predicates;
* implication templates over one set variable A for counterexample
  search, e.g. ``delta_open(A) implies regular_open(A)``.

Parse failures raise ExprError carrying the offending position so the CLI
can print an annotated message.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Optional

from . import realline as rl
from .errors import DeltaTopError
from .sets import PtSet
from .space import FinSpace


class ExprError(DeltaTopError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


# -- interval expressions -----------------------------------------------------

_TOKEN_RE = re.compile(
    r"""\s*(?:
        (?P<name>[A-Za-z_][A-Za-z_0-9]*)
      | (?P<num>[+-]?\d+(?:\.\d+)?(?:/\d+)?)
      | (?P<punct>[()\[\],^{}])
    )""",
    re.VERBOSE,
)


@dataclass
class _Token:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == m.start():
            if text[pos:].strip() == "":
                break
            raise ExprError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup == "name":
            tokens.append(_Token("name", m.group("name"), m.start("name")))
        elif m.lastgroup == "num":
            tokens.append(_Token("num", m.group("num"), m.start("num")))
        else:
            tokens.append(_Token("punct", m.group("punct"), m.start("punct")))
        pos = m.end()
    return tokens


_FUNCS: dict[str, Callable[[rl.IntervalSet], rl.IntervalSet]] = {
    "int": rl.interior_r,
    "cl": rl.closure_r,
    "comp": lambda a: a.complement(),
}

# delta-open/closed coincide with open/closed on the real line (a regular
# space), which is exactly what the engine asserts component-wise
_PREDS: dict[str, Callable[[rl.IntervalSet], bool]] = {
    "regular_open": rl.is_regular_open_r,
    "regular_closed": rl.is_regular_closed_r,
    "open": rl.is_open_r,
    "closed": rl.is_closed_r,
    "delta_open": rl.is_open_r,
    "delta_closed": rl.is_closed_r,
}


class _IntervalParser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> Optional[_Token]:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self) -> _Token:
        tok = self.peek()
        if tok is None:
            raise ExprError("unexpected end of expression", len(self.text))
        self.i += 1
        return tok

    def expect(self, text: str) -> _Token:
        tok = self.take()
        if tok.text != text:
            raise ExprError(f"expected {text!r}, found {tok.text!r}", tok.pos)
        return tok

    def parse(self):
        """Either an IntervalSet or, for a top-level predicate, a bool."""
        tok = self.peek()
        if tok and tok.kind == "name" and tok.text in _PREDS:
            self.take()
            self.expect("(")
            arg = self.parse_union()
            self.expect(")")
            self._end()
            return _PREDS[tok.text](arg)
        out = self.parse_union()
        self._end()
        return out

    def _end(self) -> None:
        tok = self.peek()
        if tok is not None:
            raise ExprError(f"trailing input {tok.text!r}", tok.pos)

    def parse_union(self) -> rl.IntervalSet:
        out = self.parse_intersection()
        while True:
            tok = self.peek()
            if tok and tok.text == "U":
                self.take()
                out = out.union(self.parse_intersection())
            else:
                return out

    def parse_intersection(self) -> rl.IntervalSet:
        out = self.parse_atom()
        while True:
            tok = self.peek()
            if tok and tok.text == "^":
                self.take()
                out = out.intersection(self.parse_atom())
            else:
                return out

    def parse_atom(self) -> rl.IntervalSet:
        tok = self.peek()
        if tok is None:
            raise ExprError("unexpected end of expression", len(self.text))
        if tok.kind == "name":
            if tok.text in _FUNCS:
                self.take()
                self.expect("(")
                arg = self.parse_union()
                self.expect(")")
                return _FUNCS[tok.text](arg)
            if tok.text == "R":
                self.take()
                return rl.IntervalSet.real_line()
            raise ExprError(f"unknown operator {tok.text!r}", tok.pos)
        if tok.text == "{":
            self.take()
            self.expect("}")
            return rl.IntervalSet.empty()
        if tok.text in ("(", "["):
            # interval literal vs grouping: a literal starts with a number
            # or an infinite endpoint
            nxt = self.tokens[self.i + 1] if self.i + 1 < len(self.tokens) else None
            if tok.text == "(" and nxt is not None and not self._starts_endpoint(nxt):
                self.take()
                out = self.parse_union()
                self.expect(")")
                return out
            return self.parse_interval_literal()
        raise ExprError(f"unexpected token {tok.text!r}", tok.pos)

    @staticmethod
    def _starts_endpoint(tok: _Token) -> bool:
        return tok.kind == "num" or tok.text in ("inf", "oo", "neginf")

    def parse_interval_literal(self) -> rl.IntervalSet:
        opener = self.take()
        lo_closed = opener.text == "["
        lo = self._endpoint(low=True)
        self.expect(",")
        hi = self._endpoint(low=False)
        closer = self.take()
        if closer.text not in (")", "]"):
            raise ExprError(f"expected interval close, found {closer.text!r}", closer.pos)
        try:
            return rl.IntervalSet(
                [rl.Interval(lo, lo_closed, hi, closer.text == "]")]
            )
        except DeltaTopError as exc:
            raise ExprError(str(exc), opener.pos) from exc

    def _endpoint(self, low: bool):
        tok = self.take()
        if tok.kind == "name" and tok.text in ("inf", "oo"):
            if low:
                raise ExprError("lower endpoint cannot be +inf", tok.pos)
            return None
        if tok.kind == "name" and tok.text == "neginf":
            if not low:
                raise ExprError("upper endpoint cannot be -inf", tok.pos)
            return None
        if tok.kind == "num":
            return rl.parse_rat(tok.text)
        raise ExprError(f"bad endpoint {tok.text!r}", tok.pos)


def eval_interval_expr(text: str):
    """Evaluate an interval expression; returns IntervalSet or bool."""
    # fold the sign into a single token so -inf parses as one endpoint
    prepared = text.replace("-inf", " neginf ").replace("-oo", " neginf ")
    return _IntervalParser(prepared).parse()


# -- implication templates over finite-space predicates -----------------------

_SPACE_PREDS: dict[str, Callable[[FinSpace, PtSet], bool]] = {
    "open": lambda s, a: s.is_open(a),
    "closed": lambda s, a: s.is_closed(a),
    "regular_open": lambda s, a: s.is_regular_open(a),
    "regular_closed": lambda s, a: s.is_regular_closed(a),
    "delta_open": lambda s, a: s.is_delta_open(a),
    "delta_closed": lambda s, a: s.is_delta_closed(a),
}

_ATOM_RE = re.compile(r"\s*(not\s+)?([a-z_]+)\s*\(\s*A\s*\)\s*$")


@dataclass(frozen=True)
class Implication:
    """lhs(A) and ... implies rhs(A) and ... over one set variable A."""

    lhs: tuple[tuple[str, bool], ...]
    rhs: tuple[tuple[str, bool], ...]

    def holds(self, space: FinSpace, a: PtSet) -> bool:
        if all(_SPACE_PREDS[name](space, a) == pos for name, pos in self.lhs):
            return all(_SPACE_PREDS[name](space, a) == pos for name, pos in self.rhs)
        return True


def parse_implication(text: str) -> Implication:
    if "implies" not in text:
        raise ExprError("template needs an 'implies'", 0)
    lhs_text, rhs_text = text.split("implies", 1)

    def side(chunk: str, offset: int) -> tuple[tuple[str, bool], ...]:
        atoms = []
        for part in chunk.split(" and "):
            m = _ATOM_RE.match(part)
            if m is None:
                raise ExprError(f"bad predicate atom {part.strip()!r}", offset)
            neg, name = m.groups()
            if name not in _SPACE_PREDS:
                raise ExprError(f"unknown predicate {name!r}", offset)
            atoms.append((name, neg is None))
        return tuple(atoms)

    return Implication(side(lhs_text, 0), side(rhs_text, len(lhs_text) + len("implies")))
