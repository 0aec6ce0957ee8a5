"""Exact finite-set algebra on bit-mask encoded subsets of a small carrier.

A carrier of n points (n <= 64) is {0, .., n-1}; a subset is a machine
integer whose bit i records membership of point i.  All set operations are
single word operations, which is what makes exhaustive enumeration over
every subset of every small space affordable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CarrierMismatchError, MalformedInputError

MAX_CARRIER = 64


def _check_carrier(n: int) -> None:
    if not 0 <= n <= MAX_CARRIER:
        raise MalformedInputError(f"carrier size {n} out of range 0..{MAX_CARRIER}")


@dataclass(frozen=True)
class PtSet:
    """A subset of a finite carrier, encoded as a bit mask.

    Immutable value type: equality is extensional, hashing is cheap, and
    instances can be shared freely between workers.
    """

    carrier_size: int
    mask: int

    def __post_init__(self) -> None:
        _check_carrier(self.carrier_size)
        full = (1 << self.carrier_size) - 1
        if self.mask & ~full:
            raise CarrierMismatchError(
                f"mask {self.mask:#x} has members outside carrier of size {self.carrier_size}"
            )

    @classmethod
    def from_members(cls, carrier_size: int, members: Iterable[int]) -> "PtSet":
        mask = 0
        for i in members:
            if not 0 <= i < carrier_size:
                raise CarrierMismatchError(f"point {i} outside carrier of size {carrier_size}")
            mask |= 1 << i
        return cls(carrier_size, mask)

    @classmethod
    def empty(cls, carrier_size: int) -> "PtSet":
        return cls(carrier_size, 0)

    @classmethod
    def full(cls, carrier_size: int) -> "PtSet":
        return cls(carrier_size, (1 << carrier_size) - 1)

    def _coerce(self, other: "PtSet") -> None:
        if self.carrier_size != other.carrier_size:
            raise CarrierMismatchError(
                f"carrier sizes differ: {self.carrier_size} vs {other.carrier_size}"
            )

    def __or__(self, other: "PtSet") -> "PtSet":
        self._coerce(other)
        return PtSet(self.carrier_size, self.mask | other.mask)

    def __and__(self, other: "PtSet") -> "PtSet":
        self._coerce(other)
        return PtSet(self.carrier_size, self.mask & other.mask)

    def __sub__(self, other: "PtSet") -> "PtSet":
        self._coerce(other)
        return PtSet(self.carrier_size, self.mask & ~other.mask)

    def complement(self) -> "PtSet":
        full = (1 << self.carrier_size) - 1
        return PtSet(self.carrier_size, full & ~self.mask)

    def issubset(self, other: "PtSet") -> bool:
        self._coerce(other)
        return self.mask & ~other.mask == 0

    def __le__(self, other: "PtSet") -> bool:
        return self.issubset(other)

    def __contains__(self, point: int) -> bool:
        return 0 <= point < self.carrier_size and bool(self.mask >> point & 1)

    def __iter__(self) -> Iterator[int]:
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def members(self) -> list[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"PtSet({self.carrier_size}, {{{', '.join(map(str, self))}}})"


class SetFamily:
    """A duplicate-free list of PtSets over one carrier.

    Insertion order is preserved for deterministic reporting, but equality
    and membership are extensional (order-free).
    """

    __slots__ = ("carrier_size", "sets", "_masks")

    def __init__(self, carrier_size: int, sets: Iterable[PtSet] = ()):
        _check_carrier(carrier_size)
        self.carrier_size = carrier_size
        self.sets: list[PtSet] = []
        self._masks: set[int] = set()
        for s in sets:
            self.add(s)

    @classmethod
    def from_masks(cls, carrier_size: int, masks: Iterable[int]) -> "SetFamily":
        return cls(carrier_size, (PtSet(carrier_size, m) for m in masks))

    def add(self, s: PtSet) -> None:
        if s.carrier_size != self.carrier_size:
            raise CarrierMismatchError(
                f"set over carrier {s.carrier_size} added to family over {self.carrier_size}"
            )
        if s.mask not in self._masks:
            self._masks.add(s.mask)
            self.sets.append(s)

    def masks(self) -> set[int]:
        return set(self._masks)

    def __contains__(self, s: PtSet) -> bool:
        return isinstance(s, PtSet) and s.carrier_size == self.carrier_size and s.mask in self._masks

    def __iter__(self) -> Iterator[PtSet]:
        return iter(self.sets)

    def __len__(self) -> int:
        return len(self.sets)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetFamily):
            return NotImplemented
        return self.carrier_size == other.carrier_size and self._masks == other._masks

    def __hash__(self) -> int:
        return hash((self.carrier_size, frozenset(self._masks)))

    def __repr__(self) -> str:
        return f"SetFamily({self.carrier_size}, {self.sets!r})"


def family_is_topology(fam: SetFamily, n: int) -> bool:
    """Decide whether `fam` is a topology on an n-point carrier.

    Requires the empty set and the whole carrier, plus closure under
    pairwise union and pairwise intersection; on a finite carrier pairwise
    union closure already gives arbitrary-union closure.
    """
    _check_carrier(n)
    if fam.carrier_size != n:
        raise CarrierMismatchError(f"family over carrier {fam.carrier_size}, expected {n}")
    masks = fam.masks()
    full = (1 << n) - 1
    if 0 not in masks or full not in masks:
        return False
    mlist = sorted(masks)
    for a in mlist:
        for b in mlist:
            if b > a:
                break
            if (a | b) not in masks or (a & b) not in masks:
                return False
    return True
