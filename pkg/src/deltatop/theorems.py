"""Executable theorem checks over exhaustively enumerated instances.

Each registered id compiles one theorem (or worked example) into a
hypothesis predicate and a conclusion predicate, evaluated over a stream
of small-space instances (plus fixed real-line fixtures for the two
worked examples).  Every predicate goes through the public operators of
the other modules -- no private shortcuts -- so a broken operator shows up
as a theorem failure, which is what makes the suite usable as evidence.

Verdicts: PASS (no counterexamples), FAIL (counterexamples collected),
VACUOUS (the hypothesis never held on the stream; expected for the
T3-hypothesis theorems, since finite T3 spaces are exactly the discrete
ones).
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from . import realline as rl
from .covers import fip_check, is_delta_compact, locally_delta_compact_at
from .errors import OversizeStreamError, UnknownTheoremError
from .maps import (
    NOT_APPLICABLE,
    SpaceMap,
    classify_map,
    image_delta_compact_ok,
    is_delta_closed_map,
    preimage_delta_open_ok,
    preimage_regular_open_ok,
)
from .sets import PtSet, SetFamily
from .space import FinSpace
from .topogen import enumerate_spaces

MAX_SWEEP_POINTS = 4
MAX_MAP_SWEEP_POINTS = 3
MAX_FIP_FAMILY = 3
MAX_COUNTEREXAMPLES = 25


@dataclass(frozen=True)
class StreamSpec:
    """Which instances a run covers.

    points: labelled-space sizes for space sweeps.
    map_points: space size for map sweeps (both sides), capped at 3.
    include_real_line: run the fixed real-line fixtures.
    """

    points: tuple[int, ...] = (1, 2, 3)
    map_points: Optional[int] = None
    include_real_line: bool = True

    def __post_init__(self) -> None:
        if not self.points or min(self.points) < 1 or max(self.points) > MAX_SWEEP_POINTS:
            raise OversizeStreamError(
                f"space sweep sizes must lie in 1..{MAX_SWEEP_POINTS}: {self.points}"
            )
        if self.map_points is not None and not 1 <= self.map_points <= MAX_MAP_SWEEP_POINTS:
            raise OversizeStreamError(
                f"map sweep size must lie in 1..{MAX_MAP_SWEEP_POINTS}: {self.map_points}"
            )

    @classmethod
    def up_to(cls, max_points: int, include_real_line: bool = True) -> "StreamSpec":
        return cls(
            points=tuple(range(1, max_points + 1)),
            map_points=min(max_points, MAX_MAP_SWEEP_POINTS),
            include_real_line=include_real_line,
        )

    def effective_map_points(self) -> int:
        if self.map_points is not None:
            return self.map_points
        return min(max(self.points), MAX_MAP_SWEEP_POINTS)


@dataclass
class TheoremReport:
    id: str
    description: str
    instances_total: int = 0
    instances_hypothesis_true: int = 0
    counterexamples: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def verdict(self) -> str:
        if self.counterexamples:
            return "FAIL"
        if self.instances_hypothesis_true == 0:
            return "VACUOUS"
        return "PASS"

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "description": self.description,
            "verdict": self.verdict,
            "instances_total": self.instances_total,
            "instances_hypothesis_true": self.instances_hypothesis_true,
            "counterexamples": self.counterexamples,
            "elapsed": round(self.elapsed, 6),
        }


# Instance = (payload for the report, hypothesis holds, conclusion holds).
# The conclusion slot is ignored when the hypothesis is false.
Instance = tuple[dict, bool, bool]
Runner = Callable[[StreamSpec], Iterator[Instance]]


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    description: str
    runner: Runner


_REGISTRY: dict[str, TheoremCheck] = {}


def _register(tid: str, description: str):
    def wrap(fn: Runner) -> Runner:
        _REGISTRY[tid] = TheoremCheck(tid, description, fn)
        return fn

    return wrap


def theorem_ids() -> list[str]:
    return list(_REGISTRY)


def _spaces(stream: StreamSpec) -> Iterator[FinSpace]:
    for n in stream.points:
        yield from enumerate_spaces(n)


def _subsets(space: FinSpace) -> Iterator[PtSet]:
    for m in range(1 << space.n):
        yield PtSet(space.n, m)


def _desc(space: FinSpace, **extra) -> dict:
    d = {"space": space.to_json()}
    for k, v in extra.items():
        if isinstance(v, PtSet):
            v = space.set_labels(v)
        d[k] = v
    return d


def _map_desc(f: SpaceMap, **extra) -> dict:
    d = {"map": f.to_json()}
    d.update(extra)
    return d


# -- section 2/3: regular open machinery and the two delta definitions --------


@_register("T2.3", "regular closed iff complement regular open")
def _t2_3(stream: StreamSpec) -> Iterator[Instance]:
    for s in _spaces(stream):
        for a in _subsets(s):
            concl = s.is_regular_closed(a) == s.is_regular_open(a.complement())
            yield _desc(s, V=a), True, concl


@_register("R2.4", "int(cl(U)) is regular open for every open U")
def _r2_4(stream: StreamSpec) -> Iterator[Instance]:
    for s in _spaces(stream):
        for u in s.opens:
            gen = s.interior(s.closure(u))
            concl = s.is_regular_open(gen) and s.interior(s.closure(gen)) == gen
            yield _desc(s, U=u), True, concl


@_register("T3.2", "witness definition of delta-open agrees with the delta-closure one")
def _t3_2(stream: StreamSpec) -> Iterator[Instance]:
    for s in _spaces(stream):
        for a in _subsets(s):
            comp = a.complement()
            concl = s.is_delta_open(a) == (s.delta_closure(comp) == comp)
            yield _desc(s, A=a), True, concl


def _realline_example_3_3() -> Iterator[Instance]:
    v = rl.IntervalSet.open(1, 2)
    y = rl.parse_interval_set("[1,3/2]")
    vy = v.intersection(y)
    cl_y = rl.relative_closure(vy, y)
    int_cl = rl.relative_int_cl(v, y)
    payload = {
        "fixture": "real-line subspace [1,3/2] with V=(1,2)",
        "V_cap_Y": rl.format_interval_set(vy),
        "cl_Y": rl.format_interval_set(cl_y),
        "int_Y_cl_Y": rl.format_interval_set(int_cl),
    }
    concl = (
        vy == rl.parse_interval_set("(1,3/2]")
        and cl_y == rl.parse_interval_set("[1,3/2]")
        and int_cl == rl.parse_interval_set("[1,3/2]")
        and not rl.is_regular_open_in(v, y)
    )
    yield payload, True, concl
    # positive side: with Y open the trace is regular open in the subspace
    y_open = rl.IntervalSet.open(0, 3)
    yield (
        {"fixture": "real-line open subspace (0,3) with V=(1,2)"},
        True,
        rl.is_regular_open_in(v, y_open)
        and rl.relative_int_cl(v, y_open) == v.intersection(y_open),
    )


@_register("T3.4", "regular open trace on an open subspace stays regular open")
def _t3_4(stream: StreamSpec) -> Iterator[Instance]:
    for s in _spaces(stream):
        reg = s.regular_open_family()
        for y in s.opens:
            if not y:
                continue
            sub = s.subspace(y)
            for v in reg:
                concl = sub.is_regular_open(s.restrict(v & y, y))
                yield _desc(s, V=v, Y=y), True, concl
    if stream.include_real_line:
        yield from _realline_example_3_3()


@_register("T3.5", "delta-open trace on an open subspace stays delta-open")
def _t3_5(stream: StreamSpec) -> Iterator[Instance]:
    for s in _spaces(stream):
        dof = s.delta_open_family()
        for y in s.opens:
            if not y:
                continue
            sub = s.subspace(y)
            for u in dof:
                concl = sub.is_delta_open(s.restrict(u & y, y))
                yield _desc(s, U=u, Y=y), True, concl


@_register("T3.7", "delta-open iff complement delta-closed")
def _t3_7(stream: StreamSpec) -> Iterator[Instance]:
    for s in _spaces(stream):
        for a in _subsets(s):
            concl = s.is_delta_open(a) == s.is_delta_closed(a.complement())
            yield _desc(s, V=a), True, concl


@_register("N3.8", "delta-closed iff fixed by delta-closure")
def _n3_8(stream: StreamSpec) -> Iterator[Instance]:
    for s in _spaces(stream):
        for a in _subsets(s):
            concl = s.is_delta_closed(a) == (s.delta_closure(a) == a)
            yield _desc(s, A=a), True, concl


# -- section 4: delta-compactness ---------------------------------------------


@_register("T4.3", "open subsets: subspace covers and ambient covers agree")
def _t4_3(stream: StreamSpec) -> Iterator[Instance]:
    from .covers import delta_compact_ambient_check, delta_compact_subspace_check

    for s in _spaces(stream):
        for y in s.opens:
            if not y:
                continue
            sub_ok = delta_compact_subspace_check(s, y)
            amb_ok = delta_compact_ambient_check(s, y)
            yield _desc(s, Y=y), True, sub_ok and amb_ok is True


@_register("T4.4", "delta-compact iff delta-closed families with FIP meet")
def _t4_4(stream: StreamSpec) -> Iterator[Instance]:
    for s in _spaces(stream):
        closed = list(s.delta_closed_family())
        for r in range(1, min(MAX_FIP_FAMILY, len(closed)) + 1):
            for combo in itertools.combinations(closed, r):
                fam = SetFamily(s.n, combo)
                res = fip_check(s, fam)
                hyp = res.has_fip
                concl = bool(res.total_intersection)
                yield _desc(s, family=[s.set_labels(c) for c in combo]), hyp, concl


@_register("T4.5", "delta-closed subsets of a delta-compact space are delta-compact")
def _t4_5(stream: StreamSpec) -> Iterator[Instance]:
    for s in _spaces(stream):
        for y in s.delta_closed_family():
            yield _desc(s, Y=y), True, is_delta_compact(s, y)


@_register("T4.6", "in a regular space every closed set is delta-closed")
def _t4_6(stream: StreamSpec) -> Iterator[Instance]:
    for s in _spaces(stream):
        hyp = s.separation_profile().regular
        for u in s.opens:
            a = u.complement()
            yield _desc(s, A=a), hyp, (not hyp) or s.is_delta_closed(a)


@_register("C4.7", "in a regular space every open set is delta-open")
def _c4_7(stream: StreamSpec) -> Iterator[Instance]:
    for s in _spaces(stream):
        hyp = s.separation_profile().regular
        for u in s.opens:
            yield _desc(s, U=u), hyp, (not hyp) or s.is_delta_open(u)
        if hyp:
            # family-level form: delta-opens coincide with opens
            yield (
                _desc(s, check="delta_open_family == opens"),
                True,
                s.delta_open_family() == s.opens,
            )


@_register("T4.8", "regular T2: any two points sit in disjoint delta-opens")
def _t4_8(stream: StreamSpec) -> Iterator[Instance]:
    for s in _spaces(stream):
        prof = s.separation_profile()
        hyp = prof.regular and prof.t2
        for x in range(s.n):
            for y in range(x + 1, s.n):
                concl = True
                if hyp:
                    dof = [d.mask for d in s.delta_open_family()]
                    concl = any(
                        u >> x & 1 and v >> y & 1 and u & v == 0
                        for u in dof
                        for v in dof
                    )
                yield _desc(s, x=s.labels[x], y=s.labels[y]), hyp, concl


@_register("T4.9", "finite intersections of regular opens are regular open")
def _t4_9(stream: StreamSpec) -> Iterator[Instance]:
    for s in _spaces(stream):
        reg = list(s.regular_open_family())
        for a in reg:
            for b in reg:
                yield _desc(s, P1=a, P2=b), True, s.is_regular_open(a & b)


@_register("T4.10", "arbitrary unions of delta-opens are delta-open")
def _t4_10(stream: StreamSpec) -> Iterator[Instance]:
    for s in _spaces(stream):
        dof = [d.mask for d in s.delta_open_family()]
        masks = set(dof)
        k = len(dof)
        union = 0
        # walk every subfamily via low-bit DP over the subset lattice
        unions = [0] * (1 << k)
        ok = True
        bad = None
        for m in range(1, 1 << k):
            low = m & -m
            union = unions[m ^ low] | dof[low.bit_length() - 1]
            unions[m] = union
            if union not in masks:
                ok = False
                bad = m
                break
        payload = _desc(s, subfamilies=1 << k)
        if not ok:
            payload["bad_subfamily"] = [
                s.set_labels(PtSet(s.n, dof[i])) for i in range(k) if bad >> i & 1
            ]
        yield payload, True, ok


@_register("T4.11", "finite intersections of delta-opens are delta-open")
def _t4_11(stream: StreamSpec) -> Iterator[Instance]:
    for s in _spaces(stream):
        dof = [d.mask for d in s.delta_open_family()]
        masks = set(dof)
        k = len(dof)
        inters = [s.full_mask] * (1 << k)
        ok = True
        bad = None
        for m in range(1, 1 << k):
            low = m & -m
            inter = inters[m ^ low] & dof[low.bit_length() - 1]
            inters[m] = inter
            if inter not in masks:
                ok = False
                bad = m
                break
        payload = _desc(s, subfamilies=1 << k)
        if not ok:
            payload["bad_subfamily"] = [
                s.set_labels(PtSet(s.n, dof[i])) for i in range(k) if bad >> i & 1
            ]
        yield payload, True, ok


def _strongly_separable(s: FinSpace, x: int, bm: int) -> bool:
    dof = [d.mask for d in s.delta_open_family()]
    mm = bm
    while mm:
        low = mm & -mm
        y = low.bit_length() - 1
        mm ^= low
        if not any(
            u >> y & 1 and v >> x & 1 and u & v == 0 for u in dof for v in dof
        ):
            return False
    return True


@_register("T4.12", "T3: point strongly separable from each point of B separates from B")
def _t4_12(stream: StreamSpec) -> Iterator[Instance]:
    for s in _spaces(stream):
        t3 = s.separation_profile().t3
        for b in _subsets(s):
            for x in range(s.n):
                if x in b:
                    continue
                hyp = t3 and is_delta_compact(s, b) and _strongly_separable(s, x, b.mask)
                concl = True
                if hyp:
                    pair = s.delta_separate(x, b)
                    concl = (
                        pair is not None
                        and b <= pair[0]
                        and x in pair[1]
                        and not (pair[0] & pair[1])
                        and s.is_delta_open(pair[0])
                        and s.is_delta_open(pair[1])
                    )
                yield _desc(s, x=s.labels[x], B=b), hyp, concl


def _t2_implies_discrete_ok(s: FinSpace) -> bool:
    # characterization sub-check: a finite T2 space must be discrete
    return (not s.separation_profile().t2) or s.is_discrete()


@_register("T4.13", "delta-compact T3: disjoint closed sets split by disjoint delta-opens")
def _t4_13(stream: StreamSpec) -> Iterator[Instance]:
    for s in _spaces(stream):
        hyp_space = s.separation_profile().t3 and is_delta_compact(s, PtSet.full(s.n))
        sub_ok = _t2_implies_discrete_ok(s)
        closed = [u.complement() for u in s.opens]
        dof = [d.mask for d in s.delta_open_family()]
        for a in closed:
            for b in closed:
                if a & b:
                    continue
                hyp = hyp_space
                concl = sub_ok
                if hyp:
                    concl = concl and any(
                        a.mask & ~u == 0 and b.mask & ~v == 0 and u & v == 0
                        for u in dof
                        for v in dof
                    )
                yield _desc(s, A=a, B=b), hyp, concl


@_register("C4.14", "every delta-compact T3 space is T4")
def _c4_14(stream: StreamSpec) -> Iterator[Instance]:
    for s in _spaces(stream):
        prof = s.separation_profile()
        hyp = prof.t3 and is_delta_compact(s, PtSet.full(s.n))
        concl = _t2_implies_discrete_ok(s) and ((not hyp) or prof.t4)
        yield _desc(s), hyp, concl


@_register("T4.15", "delta-compact subsets of a T3 space are delta-closed")
def _t4_15(stream: StreamSpec) -> Iterator[Instance]:
    for s in _spaces(stream):
        t3 = s.separation_profile().t3
        sub_ok = _t2_implies_discrete_ok(s)
        for y in _subsets(s):
            hyp = t3 and is_delta_compact(s, y)
            concl = sub_ok and ((not hyp) or s.is_delta_closed(y))
            yield _desc(s, Y=y), hyp, concl


@_register("T4.17u", "finite unions of delta-compact subsets are delta-compact")
def _t4_17(stream: StreamSpec) -> Iterator[Instance]:
    for s in _spaces(stream):
        compact = [y for y in _subsets(s) if is_delta_compact(s, y)]
        for a in compact:
            for b in compact:
                yield _desc(s, Y1=a, Y2=b), True, is_delta_compact(s, a | b)


@_register("T4.18i", "finite intersections of delta-closed sets are delta-closed")
def _t4_18(stream: StreamSpec) -> Iterator[Instance]:
    for s in _spaces(stream):
        dcf = [d.mask for d in s.delta_closed_family()]
        masks = set(dcf)
        k = len(dcf)
        inters = [s.full_mask] * (1 << k)
        ok = True
        for m in range(1, 1 << k):
            low = m & -m
            inter = inters[m ^ low] & dcf[low.bit_length() - 1]
            inters[m] = inter
            if inter not in masks:
                ok = False
                break
        yield _desc(s, subfamilies=1 << k), True, ok


@_register("T4.19c", "T3: intersections of delta-compact subsets are delta-compact")
def _t4_19(stream: StreamSpec) -> Iterator[Instance]:
    for s in _spaces(stream):
        t3 = s.separation_profile().t3
        sub_ok = _t2_implies_discrete_ok(s)
        if not t3:
            yield _desc(s), False, True
            continue
        compact = [y for y in _subsets(s) if is_delta_compact(s, y)]
        for a in compact:
            for b in compact:
                concl = sub_ok and is_delta_compact(s, a & b)
                yield _desc(s, Y1=a, Y2=b), True, concl


@_register("T4.20ab", "delta-compact T3: closed A meets delta-compact B delta-compactly")
def _t4_20(stream: StreamSpec) -> Iterator[Instance]:
    for s in _spaces(stream):
        hyp_space = s.separation_profile().t3 and is_delta_compact(s, PtSet.full(s.n))
        if not hyp_space:
            yield _desc(s), False, True
            continue
        closed = [u.complement() for u in s.opens]
        for a in closed:
            for b in _subsets(s):
                if not is_delta_compact(s, b):
                    continue
                yield _desc(s, A=a, B=b), True, is_delta_compact(s, a & b)


# -- section 5: maps ----------------------------------------------------------


def _map_sweep(stream: StreamSpec) -> Iterator[SpaceMap]:
    m = stream.effective_map_points()
    spaces = list(enumerate_spaces(m))
    for dom in spaces:
        for cod in spaces:
            for table in itertools.product(range(cod.n), repeat=dom.n):
                yield SpaceMap(dom, cod, table)


@_register("E5.1", "x^2 pullback of (0,1) is open but not regularly open")
def _e5_1(stream: StreamSpec) -> Iterator[Instance]:
    if not stream.include_real_line:
        return
    u = rl.IntervalSet.open(0, 1)
    pre = rl.preimage_square(u)
    cl = rl.closure_r(pre)
    intcl = rl.interior_r(cl)
    payload = {
        "fixture": "f(x)=x^2 on the real line",
        "preimage": rl.format_interval_set(pre),
        "closure": rl.format_interval_set(cl),
        "int_closure": rl.format_interval_set(intcl),
    }
    concl = (
        rl.is_regular_open_r(u)
        and pre == rl.parse_interval_set("(-1,0)U(0,1)")
        and cl == rl.parse_interval_set("[-1,1]")
        and intcl == rl.parse_interval_set("(-1,1)")
        and not rl.is_regular_open_r(pre)
    )
    yield payload, True, concl


@_register("T5.3", "open continuous maps pull regular opens back to regular opens")
def _t5_3(stream: StreamSpec) -> Iterator[Instance]:
    for f in _map_sweep(stream):
        res = preimage_regular_open_ok(f)
        hyp = res.verdict != NOT_APPLICABLE
        yield _map_desc(f), hyp, (not hyp) or res.ok


@_register("T5.4", "open continuous maps pull delta-opens back to delta-opens")
def _t5_4(stream: StreamSpec) -> Iterator[Instance]:
    for f in _map_sweep(stream):
        res = preimage_delta_open_ok(f)
        hyp = res.verdict != NOT_APPLICABLE
        yield _map_desc(f), hyp, (not hyp) or res.ok


@_register("T5.5", "open continuous images of delta-compact spaces are delta-compact")
def _t5_5(stream: StreamSpec) -> Iterator[Instance]:
    for f in _map_sweep(stream):
        res = image_delta_compact_ok(f)
        hyp = res.verdict != NOT_APPLICABLE
        yield _map_desc(f), hyp, (not hyp) or res.ok


@_register("T5.7", "open continuous maps into T3 spaces are delta-closed maps")
def _t5_7(stream: StreamSpec) -> Iterator[Instance]:
    for f in _map_sweep(stream):
        flags = classify_map(f)
        hyp = flags.continuous and flags.open and f.cod.separation_profile().t3
        concl = True
        if hyp:
            concl = is_delta_closed_map(f).ok
        yield _map_desc(f), hyp, concl


@_register("T5.8", "open continuous maps between T3 spaces are closed maps")
def _t5_8(stream: StreamSpec) -> Iterator[Instance]:
    for f in _map_sweep(stream):
        flags = classify_map(f)
        hyp = (
            flags.continuous
            and flags.open
            and f.dom.separation_profile().t3
            and f.cod.separation_profile().t3
        )
        yield _map_desc(f), hyp, (not hyp) or flags.closed


# -- section 6: local delta-compactness ---------------------------------------


@_register("E6.2", "every delta-compact space is locally delta-compact")
def _e6_2(stream: StreamSpec) -> Iterator[Instance]:
    for s in _spaces(stream):
        hyp = is_delta_compact(s, PtSet.full(s.n))
        concl = True
        if hyp:
            for x in range(s.n):
                nb = locally_delta_compact_at(s, x)
                if nb is None or not (s.min_nbhd[x] & ~nb.mask == 0 and is_delta_compact(s, nb)):
                    concl = False
                    break
        yield _desc(s), hyp, concl


@_register("E6.3", "in a discrete space {x} is a delta-compact neighborhood")
def _e6_3(stream: StreamSpec) -> Iterator[Instance]:
    for s in _spaces(stream):
        hyp = s.is_discrete()
        concl = True
        if hyp:
            for x in range(s.n):
                single = PtSet(s.n, 1 << x)
                concl = concl and is_delta_compact(s, single)
                concl = concl and locally_delta_compact_at(s, x) == single
        yield _desc(s), hyp, concl


@_register("T6.4", "closed subspaces of locally delta-compact T3 spaces stay locally delta-compact")
def _t6_4(stream: StreamSpec) -> Iterator[Instance]:
    for s in _spaces(stream):
        t3 = s.separation_profile().t3
        locally = all(locally_delta_compact_at(s, x) is not None for x in range(s.n))
        for u in s.opens:
            y = u.complement()
            if not y:
                continue
            hyp = t3 and locally
            concl = True
            if hyp:
                sub = s.subspace(y)
                concl = all(
                    locally_delta_compact_at(sub, k) is not None for k in range(sub.n)
                )
            yield _desc(s, Y=y), hyp, concl


# -- driver -------------------------------------------------------------------


def run_theorem(tid: str, stream: StreamSpec) -> TheoremReport:
    """Evaluate one registered theorem over the stream."""
    if tid not in _REGISTRY:
        raise UnknownTheoremError(f"unknown theorem id {tid!r}")
    check = _REGISTRY[tid]
    report = TheoremReport(tid, check.description)
    t0 = time.perf_counter()
    for payload, hyp, concl in check.runner(stream):
        report.instances_total += 1
        if hyp:
            report.instances_hypothesis_true += 1
            if not concl and len(report.counterexamples) < MAX_COUNTEREXAMPLES:
                report.counterexamples.append(payload)
    report.elapsed = time.perf_counter() - t0
    return report


def run_all(
    stream: StreamSpec,
    ids: Optional[list[str]] = None,
    jobs: int = 1,
) -> list[TheoremReport]:
    """Run every registered theorem (or the requested ids) over the stream.

    With jobs > 1 the ids are partitioned across worker processes; each id
    is evaluated whole by one worker, so reports are deterministic.
    """
    todo = list(_REGISTRY) if ids is None else list(ids)
    for tid in todo:
        if tid not in _REGISTRY:
            raise UnknownTheoremError(f"unknown theorem id {tid!r}")
    if jobs > 1 and len(todo) > 1:
        import concurrent.futures

        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = {tid: pool.submit(run_theorem, tid, stream) for tid in todo}
            return [futures[tid].result() for tid in todo]
    return [run_theorem(tid, stream) for tid in todo]


def aggregate_ok(reports: list[TheoremReport]) -> bool:
    return all(r.verdict != "FAIL" for r in reports)
