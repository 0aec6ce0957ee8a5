"""Total functions between finite spaces and their theorem-level checks.

Verdicts for the preservation checks are three-valued: "pass", "fail"
(with a witness), or "not-applicable" when the hypothesis (open and
continuous) does not hold.  The distinction lets exhaustive sweeps count
hypothesis-satisfying instances instead of inflating pass counts with
vacuous ones.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence

from .covers import is_delta_compact
from .errors import MalformedInputError
from .realline import (
    IntervalSet,
    closure_r,
    interior_r,
    is_regular_open_r,
    preimage_square,
)
from .sets import PtSet
from .space import FinSpace

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class MapFlags:
    continuous: bool
    open: bool
    closed: bool

    def to_json(self) -> dict:
        return {"continuous": self.continuous, "open": self.open, "closed": self.closed}


@dataclass(frozen=True)
class CheckResult:
    verdict: str
    witness: Optional[PtSet] = None

    @property
    def ok(self) -> bool:
        return self.verdict == PASS


class SpaceMap:
    """A total function between the carriers of two finite spaces."""

    def __init__(self, dom: FinSpace, cod: FinSpace, table: Sequence[int]):
        if len(table) != dom.n:
            raise MalformedInputError("table must assign an image to every domain point")
        if any(not 0 <= v < cod.n for v in table):
            raise MalformedInputError("table images must lie in the codomain carrier")
        self.dom = dom
        self.cod = cod
        self.table = tuple(table)

    @classmethod
    def from_json(cls, obj: dict | str) -> "SpaceMap":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            dom = FinSpace.from_json(obj["dom"])
            cod = FinSpace.from_json(obj["cod"])
            raw = obj["table"]
        except (KeyError, TypeError) as exc:
            raise MalformedInputError(f"bad map JSON: {exc}") from exc
        cod_index = {lab: i for i, lab in enumerate(cod.labels)}
        try:
            table = [cod_index[raw[lab]] for lab in dom.labels]
        except KeyError as exc:
            raise MalformedInputError(f"map table missing or bad entry: {exc}") from exc
        return cls(dom, cod, table)

    def to_json(self) -> dict:
        return {
            "dom": self.dom.to_json(),
            "cod": self.cod.to_json(),
            "table": {self.dom.labels[i]: self.cod.labels[v] for i, v in enumerate(self.table)},
        }

    def image_mask(self, m: int) -> int:
        out = 0
        while m:
            low = m & -m
            out |= 1 << self.table[low.bit_length() - 1]
            m ^= low
        return out

    def preimage_mask(self, m: int) -> int:
        out = 0
        for x, v in enumerate(self.table):
            if m >> v & 1:
                out |= 1 << x
        return out

    def image(self, a: PtSet) -> PtSet:
        return PtSet(self.cod.n, self.image_mask(self.dom._check(a)))

    def preimage(self, a: PtSet) -> PtSet:
        return PtSet(self.dom.n, self.preimage_mask(self.cod._check(a)))

    def __repr__(self) -> str:
        pairs = ", ".join(
            f"{self.dom.labels[i]}->{self.cod.labels[v]}" for i, v in enumerate(self.table)
        )
        return f"SpaceMap({pairs})"


def classify_map(f: SpaceMap) -> MapFlags:
    """Continuity plus open-map and closed-map flags, by exhaustive check."""
    cod_opens = f.cod.opens.masks()
    dom_opens = f.dom.opens.masks()
    continuous = all(f.preimage_mask(u) in dom_opens for u in cod_opens)
    open_map = all(f.image_mask(u) in cod_opens for u in dom_opens)
    cod_closed = {f.cod.full_mask & ~u for u in cod_opens}
    closed_map = all(
        f.image_mask(f.dom.full_mask & ~u) in cod_closed for u in dom_opens
    )
    return MapFlags(continuous, open_map, closed_map)


def _applicable(f: SpaceMap) -> bool:
    flags = classify_map(f)
    return flags.continuous and flags.open


def preimage_regular_open_ok(f: SpaceMap) -> CheckResult:
    """Do regular open sets of the codomain pull back to regular open sets?

    Only applicable to open continuous maps; for arbitrary continuous maps
    the pullback can fail (the x -> x^2 example on the real line).
    """
    if not _applicable(f):
        return CheckResult(NOT_APPLICABLE)
    for u in f.cod.regular_open_family():
        if not f.dom.is_regular_open(f.preimage(u)):
            return CheckResult(FAIL, u)
    return CheckResult(PASS)


def preimage_delta_open_ok(f: SpaceMap) -> CheckResult:
    """Do delta-open sets of the codomain pull back to delta-open sets?"""
    if not _applicable(f):
        return CheckResult(NOT_APPLICABLE)
    for u in f.cod.delta_open_family():
        if not f.dom.is_delta_open(f.preimage(u)):
            return CheckResult(FAIL, u)
    return CheckResult(PASS)


def is_delta_closed_map(f: SpaceMap) -> CheckResult:
    """Does every delta-closed subset of the domain map to a delta-closed set?"""
    for s in f.dom.delta_closed_family():
        if not f.cod.is_delta_closed(f.image(s)):
            return CheckResult(FAIL, s)
    return CheckResult(PASS)


def image_delta_compact_ok(f: SpaceMap) -> CheckResult:
    """Is the image of the whole domain delta-compact in the codomain?"""
    if not _applicable(f):
        return CheckResult(NOT_APPLICABLE)
    img = PtSet(f.cod.n, f.image_mask(f.dom.full_mask))
    if is_delta_compact(f.cod, img):
        return CheckResult(PASS)
    return CheckResult(FAIL, img)


def square_map_example() -> dict:
    """The x -> x^2 pullback of (0,1): a continuous but non-open map whose
    preimage of a regular open set is not regular open.  Thin adapter so the
    real-line fact shows up in map-level reports."""
    u = IntervalSet.open(0, 1)
    pre = preimage_square(u)
    cl = closure_r(pre)
    intcl = interior_r(cl)
    return {
        "U": u,
        "U_regular_open": is_regular_open_r(u),
        "preimage": pre,
        "closure": cl,
        "int_closure": intcl,
        "preimage_regular_open": is_regular_open_r(pre),
    }
