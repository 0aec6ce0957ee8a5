import itertools
import random

import pytest

import deltatop.realline as rl
from deltatop.covers import (
    Cover,
    SubcoverResult,
    extract_min_subcover,
    fip_check,
    is_delta_compact,
    locally_delta_compact_at,
    minimum_interval_subcover,
)
from deltatop.errors import InvalidFamilyError, NotACoverError
from deltatop.sets import PtSet, SetFamily
from deltatop.topogen import enumerate_spaces


def fam(space, *label_sets):
    return SetFamily(space.n, [space.pset_from_labels(ls) for ls in label_sets])


class TestDeltaCompact:
    def test_discrete_whole_space(self, disc3):
        assert is_delta_compact(disc3, PtSet.full(3))

    def test_open_target_with_ambient_cross_check(self, part3):
        assert is_delta_compact(part3, part3.pset_from_labels(["b", "c"]))

    def test_one_point_subspace(self, sierp):
        assert is_delta_compact(sierp, sierp.pset_from_labels(["a"]))

    def test_every_subset_of_small_spaces(self):
        for space in enumerate_spaces(3):
            for m in range(1 << 3):
                assert is_delta_compact(space, PtSet(3, m))


class TestExtractMinSubcover:
    def test_lowest_index_tie_break(self, disc3):
        cover = Cover(
            disc3,
            PtSet.full(3),
            fam(disc3, ["a", "b"], ["b", "c"], ["a", "c"], ["a"]),
        )
        res = extract_min_subcover(cover)
        assert res.indices == (0, 1)
        assert [disc3.set_labels(s) for s in res.family] == [["a", "b"], ["b", "c"]]
        assert res.certified

    def test_empty_target(self, disc3):
        cover = Cover(disc3, PtSet.empty(3), fam(disc3, ["a"]))
        res = extract_min_subcover(cover)
        assert res.indices == () and res.certified

    def test_not_a_cover(self, disc3):
        cover = Cover(disc3, PtSet.full(3), fam(disc3, ["a"], ["b"]))
        with pytest.raises(NotACoverError):
            extract_min_subcover(cover)

    def test_real_line_fixture(self):
        target = rl.parse_interval_set("[0,1]")
        family = [
            rl.parse_interval_set("(-1/10,3/5)"),
            rl.parse_interval_set("(2/5,11/10)"),
            rl.parse_interval_set("(1/2,9/10)"),
        ]
        res = minimum_interval_subcover(target, family)
        assert res.indices == (0, 1) and res.certified

    def test_matches_bruteforce_on_random_instances(self):
        rng = random.Random(7)
        spaces = {n: list(enumerate_spaces(n)) for n in (2, 3)}
        for _ in range(120):
            n = rng.choice((2, 3))
            space = rng.choice(spaces[n])
            dof = [s for s in space.delta_open_family()]
            k = rng.randint(1, 6)
            family = [rng.choice(dof) for _ in range(k)]
            family = list(dict.fromkeys(family))
            union = PtSet.empty(n)
            for s in family:
                union |= s
            target = PtSet(n, union.mask & rng.getrandbits(n))
            cover = Cover(space, target, SetFamily(n, family))
            res = extract_min_subcover(cover)
            best = None
            for r in range(len(family) + 1):
                for combo in itertools.combinations(range(len(family)), r):
                    u = PtSet.empty(n)
                    for i in combo:
                        u |= family[i]
                    if target <= u:
                        best = r
                        break
                if best is not None:
                    break
            assert len(res.indices) == best


class TestFip:
    def test_overlapping_pair(self, disc3):
        res = fip_check(disc3, fam(disc3, ["a", "b"], ["b", "c"]))
        assert res.has_fip
        assert disc3.set_labels(res.total_intersection) == ["b"]

    def test_whole_space(self, part3):
        res = fip_check(part3, fam(part3, ["a", "b", "c"]))
        assert res.has_fip and res.total_intersection == PtSet.full(3)

    def test_disjoint_pair(self, disc3):
        res = fip_check(disc3, fam(disc3, ["a"], ["b"]))
        assert not res.has_fip and not res.total_intersection

    def test_non_delta_closed_member_rejected(self, sierp):
        with pytest.raises(InvalidFamilyError):
            fip_check(sierp, fam(sierp, ["b"]))


class TestLocallyDeltaCompact:
    def test_discrete_returns_singleton(self, disc3):
        got = locally_delta_compact_at(disc3, 0)
        assert disc3.set_labels(got) == ["a"]

    def test_sierp_b_needs_whole_space(self, sierp):
        got = locally_delta_compact_at(sierp, 1)
        assert got == PtSet.full(2)

    def test_part3_b(self, part3):
        got = locally_delta_compact_at(part3, 1)
        assert part3.set_labels(got) == ["b", "c"]

    def test_always_a_neighborhood(self):
        for space in enumerate_spaces(3):
            for x in range(3):
                nb = locally_delta_compact_at(space, x)
                assert nb is not None
                assert space.min_nbhd[x] & ~nb.mask == 0
                assert is_delta_compact(space, nb)


class TestCoverValidation:
    def test_non_delta_open_member_rejected(self, sierp):
        with pytest.raises(InvalidFamilyError):
            Cover(sierp, PtSet.full(2), fam(sierp, ["a"]), mode="delta_open")

    def test_open_mode_accepts_plain_opens(self, sierp):
        Cover(sierp, PtSet.full(2), fam(sierp, ["a"], ["a", "b"]), mode="open")

    def test_json_round_trip(self, disc3):
        cover = Cover(disc3, PtSet.full(3), fam(disc3, ["a", "b"], ["c"]))
        obj = {
            "space": disc3.to_json(),
            "target": ["a", "b", "c"],
            "family": [["a", "b"], ["c"]],
            "mode": "delta_open",
        }
        again = Cover.from_json(obj)
        assert again.target == cover.target
        assert again.family == cover.family
