"""Finite topological spaces and their delta-topology operators.

Everything routes through the minimal-neighborhood table: in a finite
space the intersection of all open sets containing a point is itself open,
so universal quantifiers over "every open set containing x" collapse to a
single per-point set.  Interior, closure, delta-closure, the regular
open/closed tests and the separation axioms all become O(n) per-point bit
checks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import (
    CarrierMismatchError,
    DegenerateInputError,
    MalformedInputError,
    PreconditionError,
)
from .sets import PtSet, SetFamily, family_is_topology


@dataclass(frozen=True)
class SeparationProfile:
    t0: bool
    t1: bool
    t2: bool
    regular: bool
    t3: bool
    normal: bool
    t4: bool

    def to_json(self) -> dict:
        return {
            "T0": self.t0,
            "T1": self.t1,
            "T2": self.t2,
            "regular": self.regular,
            "T3": self.t3,
            "normal": self.normal,
            "T4": self.t4,
        }


class FinSpace:
    """A finite topological space: labelled carrier plus its open-set family."""

    def __init__(self, labels: Sequence[str], opens: Iterable[PtSet] | SetFamily):
        labels = list(labels)
        if len(set(labels)) != len(labels):
            raise MalformedInputError("point labels must be unique")
        n = len(labels)
        fam = opens if isinstance(opens, SetFamily) else SetFamily(n, opens)
        if not family_is_topology(fam, n):
            raise MalformedInputError("open-set family is not a topology")
        self.labels = labels
        self.n = n
        self.opens = fam
        self._open_masks = fam.masks()
        full = (1 << n) - 1
        self.full_mask = full
        # minimal open neighborhood of each point
        min_nbhd = []
        for x in range(n):
            m = full
            for om in self._open_masks:
                if om >> x & 1:
                    m &= om
            min_nbhd.append(m)
        self.min_nbhd = tuple(min_nbhd)
        self._cache: dict = {}

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_min_nbhds(cls, labels: Sequence[str], rows: Sequence[int]) -> "FinSpace":
        """Build a space from the minimal-neighborhood table of a preorder.

        Opens are exactly the up-sets: S is open iff it contains the minimal
        neighborhood of each of its points.
        """
        n = len(labels)
        opens = []
        for m in range(1 << n):
            ok = True
            mm = m
            while mm:
                low = mm & -mm
                x = low.bit_length() - 1
                mm ^= low
                if rows[x] & ~m:
                    ok = False
                    break
            if ok:
                opens.append(PtSet(n, m))
        return cls(labels, opens)

    @classmethod
    def from_json(cls, obj: dict | str) -> "FinSpace":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            labels = list(obj["points"])
            opens_raw = obj["opens"]
        except (KeyError, TypeError) as exc:
            raise MalformedInputError(f"space JSON needs 'points' and 'opens': {exc}") from exc
        index = {lab: i for i, lab in enumerate(labels)}
        opens = []
        for arr in opens_raw:
            try:
                opens.append(PtSet.from_members(len(labels), (index[lab] for lab in arr)))
            except KeyError as exc:
                raise MalformedInputError(f"unknown point label {exc} in opens") from exc
        return cls(labels, opens)

    def to_json(self) -> dict:
        return {
            "points": list(self.labels),
            "opens": [self.set_labels(s) for s in self.sorted_family(self.opens)],
        }

    # -- labelling / ordering helpers ----------------------------------------

    def pset(self, members: Iterable[int]) -> PtSet:
        return PtSet.from_members(self.n, members)

    def pset_from_labels(self, labs: Iterable[str]) -> PtSet:
        index = {lab: i for i, lab in enumerate(self.labels)}
        try:
            return PtSet.from_members(self.n, (index[lab] for lab in labs))
        except KeyError as exc:
            raise MalformedInputError(f"unknown point label {exc}") from exc

    def set_labels(self, s: PtSet) -> list[str]:
        return [self.labels[i] for i in s]

    def sorted_family(self, fam: Iterable[PtSet]) -> list[PtSet]:
        """Deterministic family order: cardinality, then lexicographic on labels."""
        return sorted(fam, key=lambda s: (len(s), self.set_labels(s)))

    def _check(self, a: PtSet) -> int:
        if a.carrier_size != self.n:
            raise CarrierMismatchError(
                f"set over carrier {a.carrier_size} used with {self.n}-point space"
            )
        return a.mask

    # -- mask-level core (internal) -------------------------------------------

    def _interior(self, m: int) -> int:
        out = 0
        for x in range(self.n):
            if m >> x & 1 and self.min_nbhd[x] & ~m == 0:
                out |= 1 << x
        return out

    def _closure(self, m: int) -> int:
        return self.full_mask & ~self._interior(self.full_mask & ~m)

    def _int_cl(self, m: int) -> int:
        return self._interior(self._closure(m))

    def _int_cl_min(self) -> tuple[int, ...]:
        # int(cl(min_nbhd[x])) per point: the worst-case U of the
        # delta-cluster-point condition.
        key = "int_cl_min"
        if key not in self._cache:
            self._cache[key] = tuple(self._int_cl(self.min_nbhd[x]) for x in range(self.n))
        return self._cache[key]

    # -- interior / closure / regular sets ------------------------------------

    def interior(self, a: PtSet) -> PtSet:
        """Union of all open sets contained in `a`."""
        return PtSet(self.n, self._interior(self._check(a)))

    def closure(self, a: PtSet) -> PtSet:
        """Intersection of all closed supersets of `a`."""
        return PtSet(self.n, self._closure(self._check(a)))

    def is_open(self, a: PtSet) -> bool:
        return self._check(a) in self._open_masks

    def is_closed(self, a: PtSet) -> bool:
        return (self.full_mask & ~self._check(a)) in self._open_masks

    def is_regular_open(self, a: PtSet) -> bool:
        """True iff a = int(cl(a))."""
        m = self._check(a)
        return self._int_cl(m) == m

    def is_regular_closed(self, a: PtSet) -> bool:
        """True iff a = cl(int(a))."""
        m = self._check(a)
        return self._closure(self._interior(m)) == m

    def regular_open_family(self) -> SetFamily:
        if "reg_open" not in self._cache:
            fam = SetFamily(self.n)
            for s in self.sorted_family(
                PtSet(self.n, m) for m in range(1 << self.n)
                if self.is_regular_open(PtSet(self.n, m))
            ):
                fam.add(s)
            self._cache["reg_open"] = fam
        return self._cache["reg_open"]

    def regular_closed_family(self) -> SetFamily:
        if "reg_closed" not in self._cache:
            fam = SetFamily(self.n)
            for s in self.sorted_family(
                PtSet(self.n, m) for m in range(1 << self.n)
                if self.is_regular_closed(PtSet(self.n, m))
            ):
                fam.add(s)
            self._cache["reg_closed"] = fam
        return self._cache["reg_closed"]

    # -- delta operators -------------------------------------------------------

    def is_delta_open(self, a: PtSet) -> bool:
        """True iff every point of `a` sits inside a regular open subset of `a`."""
        m = self._check(a)
        reg = self.regular_open_family().masks()
        for x in range(self.n):
            if not m >> x & 1:
                continue
            if not any(p >> x & 1 and p & ~m == 0 for p in reg):
                return False
        return True

    def delta_closure(self, a: PtSet) -> PtSet:
        """All delta-cluster points of `a`.

        x qualifies iff a meets int(cl(U)) for every open U containing x;
        the minimal neighborhood is the worst case, so only it is tested.
        """
        m = self._check(a)
        icm = self._int_cl_min()
        out = 0
        for x in range(self.n):
            if m & icm[x]:
                out |= 1 << x
        return PtSet(self.n, out)

    def is_delta_closed(self, a: PtSet) -> bool:
        """True iff `a` equals the intersection of its regular closed supersets.

        The intersection over an empty collection of supersets is the whole
        carrier (standard lattice convention; keeps the definition total).
        """
        m = self._check(a)
        inter = self.full_mask
        for f in self.regular_closed_family().masks():
            if m & ~f == 0:
                inter &= f
        return inter == m

    def delta_open_family(self) -> SetFamily:
        if "delta_open" not in self._cache:
            fam = SetFamily(self.n)
            for s in self.sorted_family(
                PtSet(self.n, m) for m in range(1 << self.n)
                if self.is_delta_open(PtSet(self.n, m))
            ):
                fam.add(s)
            self._cache["delta_open"] = fam
        return self._cache["delta_open"]

    def delta_closed_family(self) -> SetFamily:
        if "delta_closed" not in self._cache:
            fam = SetFamily(self.n)
            for s in self.sorted_family(
                PtSet(self.n, m) for m in range(1 << self.n)
                if self.is_delta_closed(PtSet(self.n, m))
            ):
                fam.add(s)
            self._cache["delta_closed"] = fam
        return self._cache["delta_closed"]

    # -- subspaces -------------------------------------------------------------

    def subspace(self, y: PtSet) -> "FinSpace":
        """Relative topology on a nonempty subset, labels carried over."""
        ym = self._check(y)
        if ym == 0:
            raise DegenerateInputError("subspace carrier must be nonempty")
        points = list(y)
        labels = [self.labels[i] for i in points]
        pos = {p: k for k, p in enumerate(points)}
        opens = set()
        for om in self._open_masks:
            rel = 0
            mm = om & ym
            while mm:
                low = mm & -mm
                rel |= 1 << pos[low.bit_length() - 1]
                mm ^= low
            opens.add(rel)
        return FinSpace(labels, SetFamily.from_masks(len(points), opens))

    def restrict(self, a: PtSet, y: PtSet) -> PtSet:
        """Re-index a subset of this space as a subset of the subspace on y."""
        self._check(a)
        points = list(y)
        return PtSet.from_members(len(points), (k for k, p in enumerate(points) if p in a))

    # -- separation axioms -----------------------------------------------------

    def _closed_masks(self) -> list[int]:
        return [self.full_mask & ~m for m in self._open_masks]

    def _open_hull(self, m: int) -> int:
        # smallest open superset of m (union of minimal neighborhoods)
        out = m
        mm = m
        while mm:
            low = mm & -mm
            out |= self.min_nbhd[low.bit_length() - 1]
            mm ^= low
        return out

    def separation_profile(self) -> SeparationProfile:
        if "sep" in self._cache:
            return self._cache["sep"]
        n = self.n
        mn = self.min_nbhd
        t0 = all(mn[x] != mn[y] for x in range(n) for y in range(x + 1, n))
        t1 = all(not (mn[x] >> y & 1) for x in range(n) for y in range(n) if x != y)
        t2 = all(mn[x] & mn[y] == 0 for x in range(n) for y in range(x + 1, n))
        closed = self._closed_masks()
        regular = True
        for c in closed:
            for x in range(n):
                if c >> x & 1:
                    continue
                if mn[x] & self._open_hull(c):
                    regular = False
                    break
            if not regular:
                break
        normal = True
        for a in closed:
            for b in closed:
                if a & b:
                    continue
                if self._open_hull(a) & self._open_hull(b):
                    normal = False
                    break
            if not normal:
                break
        prof = SeparationProfile(
            t0=t0,
            t1=t1,
            t2=t2,
            regular=regular,
            t3=regular and t2,
            normal=normal,
            t4=normal and t1,
        )
        self._cache["sep"] = prof
        return prof

    def is_discrete(self) -> bool:
        return len(self._open_masks) == 1 << self.n

    # -- delta separation of a point from a set --------------------------------

    def delta_separate(self, x: int, b: PtSet) -> Optional[tuple[PtSet, PtSet]]:
        """Separate point x from set b by disjoint delta-open sets.

        For each y in b searches for disjoint delta-open U_y containing y and
        V_y containing x, then returns (union of the U_y, intersection of the
        V_y), mirroring the finite union/intersection construction.  Returns
        None when some y admits no such pair.
        """
        bm = self._check(b)
        if not 0 <= x < self.n:
            raise PreconditionError(f"point {x} outside carrier")
        if bm >> x & 1:
            raise PreconditionError("point must lie outside the set to separate")
        if bm == 0:
            return PtSet.empty(self.n), PtSet.full(self.n)
        dof = [s.mask for s in self.delta_open_family()]
        u_total = 0
        v_total = self.full_mask
        mm = bm
        while mm:
            low = mm & -mm
            y = low.bit_length() - 1
            mm ^= low
            found = None
            for u in dof:
                if not u >> y & 1:
                    continue
                for v in dof:
                    if v >> x & 1 and u & v == 0:
                        found = (u, v)
                        break
                if found:
                    break
            if found is None:
                return None
            u_total |= found[0]
            v_total &= found[1]
        return PtSet(self.n, u_total), PtSet(self.n, v_total)

    # -- misc ------------------------------------------------------------------

    def __repr__(self) -> str:
        opens = [self.set_labels(s) for s in self.sorted_family(self.opens)]
        return f"FinSpace({self.labels!r}, opens={opens!r})"
