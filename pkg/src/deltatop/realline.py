"""Finite unions of rational-endpoint intervals of the real line.

Endpoints are exact `fractions.Fraction` values (None encodes an infinite
bound), because regular-openness is destroyed by any endpoint rounding:
(-1,0) U (0,1) and (-1,1) differ by a single point.  Interval sets are
kept in normal form -- sorted, pairwise disjoint, non-mergeable -- so that
equality is plain structural equality.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .errors import MalformedIntervalError, MalformedInputError, UnsupportedEndpointError

Rat = Fraction


@dataclass(frozen=True)
class Interval:
    """One component: lo/hi are Fractions, or None for -inf/+inf."""

    lo: Optional[Fraction]
    lo_closed: bool
    hi: Optional[Fraction]
    hi_closed: bool

    def __post_init__(self) -> None:
        if self.lo is None and self.lo_closed:
            raise MalformedIntervalError("-inf endpoint cannot be closed")
        if self.hi is None and self.hi_closed:
            raise MalformedIntervalError("+inf endpoint cannot be closed")
        if self.lo is not None and self.hi is not None:
            if self.lo > self.hi:
                raise MalformedIntervalError(f"lower bound {self.lo} above upper bound {self.hi}")
            if self.lo == self.hi and not (self.lo_closed and self.hi_closed):
                raise MalformedIntervalError("degenerate interval must be closed on both sides")

    def is_point(self) -> bool:
        return self.lo is not None and self.lo == self.hi


def _lo_key(iv: Interval) -> tuple:
    # closed lower bound starts "earlier" than an open one at the same value
    if iv.lo is None:
        return (0, 0, 0)
    return (1, iv.lo, 0 if iv.lo_closed else 1)


def _merges(a: Interval, b: Interval) -> bool:
    # a starts at or before b; do they overlap or touch without a gap?
    if a.hi is None:
        return True
    if b.lo is None:
        return True
    if a.hi > b.lo:
        return True
    if a.hi == b.lo:
        return a.hi_closed or b.lo_closed
    return False


class IntervalSet:
    """A finite union of disjoint, non-adjacent intervals in normal form."""

    __slots__ = ("components",)

    def __init__(self, components: Iterable[Interval] = ()):
        comps = sorted(components, key=_lo_key)
        merged: list[Interval] = []
        for iv in comps:
            if merged and _merges(merged[-1], iv):
                last = merged[-1]
                if last.hi is None:
                    hi, hic = None, False
                elif iv.hi is None:
                    hi, hic = None, False
                elif iv.hi > last.hi:
                    hi, hic = iv.hi, iv.hi_closed
                elif iv.hi < last.hi:
                    hi, hic = last.hi, last.hi_closed
                else:
                    hi, hic = last.hi, last.hi_closed or iv.hi_closed
                merged[-1] = Interval(last.lo, last.lo_closed, hi, hic)
            else:
                merged.append(iv)
        self.components = tuple(merged)

    # -- constructors ---------------------------------------------------------

    @classmethod
    def empty(cls) -> "IntervalSet":
        return cls()

    @classmethod
    def real_line(cls) -> "IntervalSet":
        return cls([Interval(None, False, None, False)])

    @classmethod
    def open(cls, lo, hi) -> "IntervalSet":
        return cls([Interval(_rat(lo), False, _rat(hi), False)])

    @classmethod
    def closed(cls, lo, hi) -> "IntervalSet":
        return cls([Interval(_rat(lo), True, _rat(hi), True)])

    @classmethod
    def point(cls, v) -> "IntervalSet":
        return cls.closed(v, v)

    # -- set algebra ----------------------------------------------------------

    def union(self, other: "IntervalSet") -> "IntervalSet":
        return IntervalSet(self.components + other.components)

    def complement(self) -> "IntervalSet":
        """Complement within the real line."""
        gaps: list[Interval] = []
        prev_hi: Optional[Fraction] = None
        prev_closed = False
        at_start = True
        for iv in self.components:
            if at_start:
                if iv.lo is not None:
                    gaps.append(Interval(None, False, iv.lo, not iv.lo_closed))
                at_start = False
            else:
                if prev_hi == iv.lo and (prev_closed or iv.lo_closed):
                    pass  # normal form guarantees a real gap, defensive only
                else:
                    gaps.append(Interval(prev_hi, not prev_closed, iv.lo, not iv.lo_closed))
            prev_hi, prev_closed = iv.hi, iv.hi_closed
            if iv.hi is None:
                return IntervalSet(gaps)
        if at_start:
            return IntervalSet.real_line()
        gaps.append(Interval(prev_hi, not prev_closed, None, False))
        return IntervalSet(gaps)

    def intersection(self, other: "IntervalSet") -> "IntervalSet":
        out: list[Interval] = []
        for a in self.components:
            for b in other.components:
                iv = _intersect(a, b)
                if iv is not None:
                    out.append(iv)
        return IntervalSet(out)

    def difference(self, other: "IntervalSet") -> "IntervalSet":
        return self.intersection(other.complement())

    def issubset(self, other: "IntervalSet") -> bool:
        return self.difference(other) == IntervalSet.empty()

    def is_empty(self) -> bool:
        return not self.components

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntervalSet):
            return NotImplemented
        return self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __repr__(self) -> str:
        return f"IntervalSet({format_interval_set(self)!r})"


def _rat(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


def _max_lo(a: Interval, b: Interval) -> tuple[Optional[Fraction], bool]:
    if a.lo is None:
        return b.lo, b.lo_closed
    if b.lo is None:
        return a.lo, a.lo_closed
    if a.lo > b.lo:
        return a.lo, a.lo_closed
    if b.lo > a.lo:
        return b.lo, b.lo_closed
    return a.lo, a.lo_closed and b.lo_closed


def _min_hi(a: Interval, b: Interval) -> tuple[Optional[Fraction], bool]:
    if a.hi is None:
        return b.hi, b.hi_closed
    if b.hi is None:
        return a.hi, a.hi_closed
    if a.hi < b.hi:
        return a.hi, a.hi_closed
    if b.hi < a.hi:
        return b.hi, b.hi_closed
    return a.hi, a.hi_closed and b.hi_closed


def _intersect(a: Interval, b: Interval) -> Optional[Interval]:
    lo, loc = _max_lo(a, b)
    hi, hic = _min_hi(a, b)
    if lo is not None and hi is not None:
        if lo > hi or (lo == hi and not (loc and hic)):
            return None
    return Interval(lo, loc, hi, hic)


# -- topological operators ----------------------------------------------------


def normalize(raw: Iterable[Interval]) -> IntervalSet:
    """Normal form of an arbitrary finite list of intervals."""
    return IntervalSet(raw)


def closure_r(a: IntervalSet) -> IntervalSet:
    """Topological closure: close every finite endpoint, merge what touches."""
    return IntervalSet(
        Interval(iv.lo, iv.lo is not None, iv.hi, iv.hi is not None) for iv in a.components
    )


def interior_r(a: IntervalSet) -> IntervalSet:
    """Topological interior: drop isolated points, open every finite endpoint."""
    out = []
    for iv in a.components:
        if iv.is_point():
            continue
        out.append(Interval(iv.lo, False, iv.hi, False))
    return IntervalSet(out)


def is_open_r(a: IntervalSet) -> bool:
    return interior_r(a) == a


def is_closed_r(a: IntervalSet) -> bool:
    return closure_r(a) == a


def is_regular_open_r(a: IntervalSet) -> bool:
    """True iff a = int(cl(a))."""
    return interior_r(closure_r(a)) == a


def is_regular_closed_r(a: IntervalSet) -> bool:
    return closure_r(interior_r(a)) == a


def relative_closure(a: IntervalSet, y: IntervalSet) -> IntervalSet:
    """Closure of a within the subspace y: cl(a) ∩ y."""
    return closure_r(a).intersection(y)


def relative_interior(a: IntervalSet, y: IntervalSet) -> IntervalSet:
    """Interior of a within the subspace y: y minus cl_Y(y \\ a)."""
    return y.difference(relative_closure(y.difference(a), y))


def relative_int_cl(v: IntervalSet, y: IntervalSet) -> IntervalSet:
    """int_Y(cl_Y(v ∩ y)): the subspace regular-open test material."""
    return relative_interior(relative_closure(v.intersection(y), y), y)


def is_regular_open_in(v: IntervalSet, y: IntervalSet) -> bool:
    """Is v ∩ y regular open in the subspace y?"""
    return relative_int_cl(v, y) == v.intersection(y)


# -- the x -> x^2 pullback ----------------------------------------------------


def _rational_sqrt(v: Fraction) -> Fraction:
    ns = math.isqrt(v.numerator)
    ds = math.isqrt(v.denominator)
    if ns * ns != v.numerator or ds * ds != v.denominator:
        raise UnsupportedEndpointError(f"square root of {v} is irrational")
    return Fraction(ns, ds)


def preimage_square(a: IntervalSet) -> IntervalSet:
    """Exact preimage of a under x -> x^2.

    Negative parts of a have empty preimage.  Each remaining component
    [u, v] pulls back to [sqrt(u), sqrt(v)] and its mirror image; endpoints
    must be perfect squares of rationals, anything else raises.
    """
    nonneg = a.intersection(IntervalSet([Interval(Fraction(0), True, None, False)]))
    out: list[Interval] = []
    for iv in nonneg.components:
        lo = _rational_sqrt(iv.lo) if iv.lo is not None else None
        hi = _rational_sqrt(iv.hi) if iv.hi is not None else None
        out.append(Interval(lo, iv.lo_closed, hi, iv.hi_closed))
        # mirror branch: [-sqrt(v), -sqrt(u)]
        out.append(
            Interval(
                -hi if hi is not None else None,
                iv.hi_closed if hi is not None else False,
                -lo if lo is not None else None,
                iv.lo_closed if lo is not None else False,
            )
        )
    return IntervalSet(out)


# -- text format --------------------------------------------------------------

_NUM_RE = re.compile(r"[+-]?(\d+(\.\d+)?|\.\d+)(/\d+)?")


def format_rat(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def format_interval_set(a: IntervalSet) -> str:
    """Bit-exact text form, e.g. `(-1,0)U(0,1)`, `[1,3/2]`, `(-inf,0]`, `{}`."""
    if a.is_empty():
        return "{}"
    parts = []
    for iv in a.components:
        lb = "[" if iv.lo_closed else "("
        rb = "]" if iv.hi_closed else ")"
        lo = "-inf" if iv.lo is None else format_rat(iv.lo)
        hi = "inf" if iv.hi is None else format_rat(iv.hi)
        parts.append(f"{lb}{lo},{hi}{rb}")
    return "U".join(parts)


def parse_rat(text: str) -> Fraction:
    text = text.strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise MalformedInputError(f"bad rational {text!r}") from exc


def _parse_endpoint(text: str, low: bool) -> Optional[Fraction]:
    t = text.strip()
    if t in ("-inf", "-oo") and low:
        return None
    if t in ("inf", "+inf", "oo", "+oo") and not low:
        return None
    return parse_rat(t)


def parse_interval_set(text: str) -> IntervalSet:
    """Parse the text format emitted by format_interval_set (round-trips)."""
    t = text.strip()
    if t in ("{}", ""):
        return IntervalSet.empty()
    comps = []
    pos = 0
    first = True
    while pos < len(t):
        if not first:
            if t[pos] != "U":
                raise MalformedInputError(f"expected 'U' at position {pos} in {text!r}")
            pos += 1
        first = False
        if pos >= len(t) or t[pos] not in "([":
            raise MalformedInputError(f"expected '(' or '[' at position {pos} in {text!r}")
        lo_closed = t[pos] == "["
        close = None
        for k in range(pos + 1, len(t)):
            if t[k] in ")]":
                close = k
                break
        if close is None:
            raise MalformedInputError(f"unterminated interval at position {pos} in {text!r}")
        body = t[pos + 1 : close]
        if body.count(",") != 1:
            raise MalformedInputError(f"interval needs one comma at position {pos} in {text!r}")
        lo_s, hi_s = body.split(",")
        hi_closed = t[close] == "]"
        comps.append(
            Interval(_parse_endpoint(lo_s, True), lo_closed, _parse_endpoint(hi_s, False), hi_closed)
        )
        pos = close + 1
    return IntervalSet(comps)
