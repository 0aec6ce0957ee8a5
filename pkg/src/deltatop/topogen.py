"""Exhaustive generation of finite topological spaces and maps.

Finite topologies on n labelled points correspond exactly to preorders
(reflexive transitive relations): opens are the up-sets of the relation
and the principal up-set of a point is its minimal open neighborhood.
Generation therefore walks the space of preorder matrices with
transitivity pruning, which beats naive family filtering by orders of
magnitude once n reaches 5.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Optional

from .errors import MalformedInputError, OversizeStreamError
from .maps import SpaceMap, classify_map
from .sets import PtSet, SetFamily, family_is_topology
from .space import FinSpace

MAX_POINTS = 7
_LABELS = "abcdefg"


def _labels(n: int) -> list[str]:
    return list(_LABELS[:n])


# -- preorder generation ------------------------------------------------------


def preorders(n: int) -> Iterator[tuple[int, ...]]:
    """All reflexive transitive relations on n points, as row bit masks
    (row i = principal up-set of point i), in lexicographic matrix order."""
    cells = [(i, j) for i in range(n) for j in range(n) if i != j]
    rows = [1 << i for i in range(n)]
    decided = [[i == j for j in range(n)] for i in range(n)]

    def leq(i: int, j: int) -> Optional[bool]:
        if not decided[i][j]:
            return None
        return bool(rows[i] >> j & 1)

    def violates(i: int, j: int) -> bool:
        # a newly decided cell can complete a bad triple in any position
        v = leq(i, j)
        if v is False:
            for k in range(n):
                if leq(i, k) and leq(k, j):
                    return True
            return False
        for k in range(n):
            if leq(j, k) and leq(i, k) is False:
                return True
            if leq(k, i) and leq(k, j) is False:
                return True
        return False

    def rec(c: int) -> Iterator[tuple[int, ...]]:
        if c == len(cells):
            yield tuple(rows)
            return
        i, j = cells[c]
        for bit in (0, 1):
            if bit:
                rows[i] |= 1 << j
            decided[i][j] = True
            if not violates(i, j):
                yield from rec(c + 1)
            decided[i][j] = False
            rows[i] &= ~(1 << j)

    yield from rec(0)


def space_from_preorder(rows: tuple[int, ...]) -> FinSpace:
    return FinSpace.from_min_nbhds(_labels(len(rows)), rows)


def enumerate_spaces(n: int, up_to_homeo: bool = False) -> Iterator[FinSpace]:
    """Every topology on n labelled points, or one representative per
    homeomorphism class when up_to_homeo is set."""
    if not 1 <= n <= MAX_POINTS:
        raise OversizeStreamError(f"point count {n} out of range 1..{MAX_POINTS}")
    seen: set[bytes] = set()
    for rows in preorders(n):
        space = space_from_preorder(rows)
        if up_to_homeo:
            key = canonical_form(space)
            if key in seen:
                continue
            seen.add(key)
        yield space


def count_spaces(n: int, up_to_homeo: bool = False) -> int:
    return sum(1 for _ in enumerate_spaces(n, up_to_homeo))


# -- canonical forms ----------------------------------------------------------


def _pack_matrix(n: int, rows: tuple[int, ...], perm: tuple[int, ...]) -> bytes:
    bits = 0
    for a in range(n):
        for b in range(n):
            bits = bits << 1 | (rows[perm[a]] >> perm[b] & 1)
    return bytes([n]) + bits.to_bytes((n * n + 7) // 8, "big")


def _specialization_rows(space: FinSpace) -> tuple[int, ...]:
    return space.min_nbhd


def canonical_form(space: FinSpace) -> bytes:
    """Relabelling-invariant key: two spaces are homeomorphic iff equal.

    Partition refinement over the specialization preorder narrows the
    candidate bijections, then the key is the minimum packed matrix over
    the permutations consistent with the refined ordered partition.
    """
    n = space.n
    rows = _specialization_rows(space)
    colors = [0] * n
    while True:
        sigs = []
        for i in range(n):
            nb = sorted(
                (colors[j], rows[i] >> j & 1, rows[j] >> i & 1) for j in range(n) if j != i
            )
            sigs.append((colors[i], tuple(nb)))
        order = {s: c for c, s in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        if new == colors:
            break
        colors = new
    classes: dict[int, list[int]] = {}
    for i, c in enumerate(colors):
        classes.setdefault(c, []).append(i)
    blocks = [classes[c] for c in sorted(classes)]
    best = None
    for parts in itertools.product(*(itertools.permutations(b) for b in blocks)):
        perm = tuple(itertools.chain.from_iterable(parts))
        key = _pack_matrix(n, rows, perm)
        if best is None or key < best:
            best = key
    assert best is not None
    return best


def orbit_size(space: FinSpace) -> int:
    """Number of distinct labelled topologies in the relabelling orbit."""
    n = space.n
    rows = _specialization_rows(space)
    seen = set()
    for perm in itertools.permutations(range(n)):
        seen.add(_pack_matrix(n, rows, perm))
    return len(seen)


def are_homeomorphic_bruteforce(a: FinSpace, b: FinSpace) -> bool:
    """Independent oracle: search every bijection for an open-set match."""
    if a.n != b.n:
        return False
    a_opens = a.opens.masks()
    for perm in itertools.permutations(range(a.n)):
        mapped = set()
        for m in a_opens:
            out = 0
            for x in range(a.n):
                if m >> x & 1:
                    out |= 1 << perm[x]
            mapped.add(out)
        if mapped == b.opens.masks():
            return True
    return False


# -- brute-force topology count oracle ----------------------------------------


def count_topologies_bruteforce(n: int) -> int:
    """Filter every family of subsets through the topology axioms.

    Independent of the preorder generator; feasible for n <= 4 (2^14
    candidate families once the empty set and the carrier are pinned).
    """
    if not 1 <= n <= 4:
        raise OversizeStreamError(f"brute-force oracle only feasible for n <= 4, got {n}")
    full = (1 << n) - 1
    middles = [m for m in range(1 << n) if m != 0 and m != full]
    count = 0
    for pick in range(1 << len(middles)):
        masks = [0, full] if n > 0 else [0]
        for i, m in enumerate(middles):
            if pick >> i & 1:
                masks.append(m)
        fam = SetFamily.from_masks(n, masks)
        if family_is_topology(fam, n):
            count += 1
    return count


# -- map universes ------------------------------------------------------------

MAX_MAP_POINTS = 4


def enumerate_maps(
    dom: FinSpace,
    cod: FinSpace,
    continuous: Optional[bool] = None,
    open_map: Optional[bool] = None,
    closed_map: Optional[bool] = None,
) -> Iterator[SpaceMap]:
    """All total functions dom -> cod in deterministic table order, filtered
    by any requested classification flags."""
    if dom.n > MAX_MAP_POINTS or cod.n > MAX_MAP_POINTS:
        raise OversizeStreamError(
            f"map universe bounded at {MAX_MAP_POINTS} points per side"
        )
    for table in itertools.product(range(cod.n), repeat=dom.n):
        f = SpaceMap(dom, cod, table)
        if continuous is not None or open_map is not None or closed_map is not None:
            flags = classify_map(f)
            if continuous is not None and flags.continuous != continuous:
                continue
            if open_map is not None and flags.open != open_map:
                continue
            if closed_map is not None and flags.closed != closed_map:
                continue
        yield f
