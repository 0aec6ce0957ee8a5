import pytest

from deltatop.errors import (
    CarrierMismatchError,
    DegenerateInputError,
    MalformedInputError,
    PreconditionError,
)
from deltatop.sets import PtSet
from deltatop.space import FinSpace
from deltatop.topogen import enumerate_spaces


def labels_of(space, a):
    return space.set_labels(a)


def fam_labels(space, fam):
    return [space.set_labels(s) for s in space.sorted_family(fam)]


class TestInteriorClosure:
    def test_interior_sierp(self, sierp):
        assert labels_of(sierp, sierp.interior(sierp.pset_from_labels(["b"]))) == []

    def test_interior_whole_space(self, part3):
        x = PtSet.full(3)
        assert part3.interior(x) == x

    def test_interior_part3(self, part3):
        a = part3.pset_from_labels(["a", "b"])
        assert labels_of(part3, part3.interior(a)) == ["a"]

    def test_closure_sierp(self, sierp):
        assert labels_of(sierp, sierp.closure(sierp.pset_from_labels(["a"]))) == ["a", "b"]

    def test_closure_empty(self, disc3):
        assert disc3.closure(PtSet.empty(3)) == PtSet.empty(3)

    def test_closure_part3(self, part3):
        assert labels_of(part3, part3.closure(part3.pset_from_labels(["b"]))) == ["b", "c"]

    def test_carrier_mismatch(self, sierp):
        with pytest.raises(CarrierMismatchError):
            sierp.interior(PtSet.empty(3))


class TestRegularSets:
    def test_sierp_singleton_not_regular_open(self, sierp):
        assert not sierp.is_regular_open(sierp.pset_from_labels(["a"]))

    def test_empty_and_full_always_regular_open(self, part3):
        assert part3.is_regular_open(PtSet.empty(3))
        assert part3.is_regular_open(PtSet.full(3))

    def test_part3_bc_regular_open(self, part3):
        assert part3.is_regular_open(part3.pset_from_labels(["b", "c"]))

    def test_sierp_b_not_regular_closed(self, sierp):
        assert not sierp.is_regular_closed(sierp.pset_from_labels(["b"]))

    def test_full_regular_closed(self, disc2):
        assert disc2.is_regular_closed(PtSet.full(2))

    def test_part3_a_regular_closed(self, part3):
        assert part3.is_regular_closed(part3.pset_from_labels(["a"]))

    def test_regular_open_family_sierp(self, sierp):
        assert fam_labels(sierp, sierp.regular_open_family()) == [[], ["a", "b"]]

    def test_regular_open_family_disc3(self, disc3):
        assert len(disc3.regular_open_family()) == 8

    def test_regular_open_family_part3(self, part3):
        assert fam_labels(part3, part3.regular_open_family()) == [
            [],
            ["a"],
            ["b", "c"],
            ["a", "b", "c"],
        ]


class TestDeltaOperators:
    def test_sierp_a_not_delta_open(self, sierp):
        assert not sierp.is_delta_open(sierp.pset_from_labels(["a"]))

    def test_empty_delta_open(self, part3):
        assert part3.is_delta_open(PtSet.empty(3))

    def test_part3_bc_delta_open(self, part3):
        assert part3.is_delta_open(part3.pset_from_labels(["b", "c"]))

    def test_delta_closure_sierp(self, sierp):
        out = sierp.delta_closure(sierp.pset_from_labels(["b"]))
        assert labels_of(sierp, out) == ["a", "b"]

    def test_delta_closure_empty(self, disc3):
        assert disc3.delta_closure(PtSet.empty(3)) == PtSet.empty(3)

    def test_delta_closure_part3(self, part3):
        out = part3.delta_closure(part3.pset_from_labels(["b"]))
        assert labels_of(part3, out) == ["b", "c"]

    def test_sierp_b_not_delta_closed(self, sierp):
        assert not sierp.is_delta_closed(sierp.pset_from_labels(["b"]))

    def test_full_delta_closed(self, part3):
        assert part3.is_delta_closed(PtSet.full(3))

    def test_part3_bc_delta_closed(self, part3):
        assert part3.is_delta_closed(part3.pset_from_labels(["b", "c"]))

    def test_delta_open_family_sierp(self, sierp):
        assert fam_labels(sierp, sierp.delta_open_family()) == [[], ["a", "b"]]

    def test_delta_open_family_disc2(self, disc2):
        assert len(disc2.delta_open_family()) == 4

    def test_delta_open_family_part3(self, part3):
        assert fam_labels(part3, part3.delta_open_family()) == [
            [],
            ["a"],
            ["b", "c"],
            ["a", "b", "c"],
        ]


class TestSubspace:
    def test_part3_restricted_to_ab(self, part3):
        sub = part3.subspace(part3.pset_from_labels(["a", "b"]))
        assert sub.opens.masks() == {0, 1, 2, 3}

    def test_restrict_to_whole_space_is_identity(self, part3):
        sub = part3.subspace(PtSet.full(3))
        assert sub.opens == part3.opens and sub.labels == part3.labels

    def test_sierp_restricted_to_b(self, sierp):
        sub = sierp.subspace(sierp.pset_from_labels(["b"]))
        assert sub.n == 1 and len(sub.opens) == 2

    def test_empty_subspace_rejected(self, sierp):
        with pytest.raises(DegenerateInputError):
            sierp.subspace(PtSet.empty(2))


class TestSeparationProfile:
    def test_part3(self, part3):
        prof = part3.separation_profile()
        assert prof.to_json() == {
            "T0": False,
            "T1": False,
            "T2": False,
            "regular": True,
            "T3": False,
            "normal": True,
            "T4": False,
        }

    def test_disc3_all_true(self, disc3):
        prof = disc3.separation_profile()
        assert all(prof.to_json().values())

    def test_indisc2(self, indisc2):
        prof = indisc2.separation_profile()
        assert prof.to_json() == {
            "T0": False,
            "T1": False,
            "T2": False,
            "regular": True,
            "T3": False,
            "normal": True,
            "T4": False,
        }


class TestDeltaSeparate:
    def test_part3_a_vs_bc(self, part3):
        b = part3.pset_from_labels(["b", "c"])
        u, v = part3.delta_separate(0, b)
        assert labels_of(part3, u) == ["b", "c"]
        assert labels_of(part3, v) == ["a"]

    def test_sierp_no_separation(self, sierp):
        assert sierp.delta_separate(0, sierp.pset_from_labels(["b"])) is None

    def test_empty_set_convention(self, disc2):
        u, v = disc2.delta_separate(0, PtSet.empty(2))
        assert u == PtSet.empty(2) and v == PtSet.full(2)

    def test_point_in_set_rejected(self, disc2):
        with pytest.raises(PreconditionError):
            disc2.delta_separate(0, disc2.pset_from_labels(["a"]))

    def test_postcondition_whenever_pair_returned(self):
        for space in enumerate_spaces(3):
            for bm in range(1 << 3):
                b = PtSet(3, bm)
                for x in range(3):
                    if x in b:
                        continue
                    pair = space.delta_separate(x, b)
                    if pair is None:
                        continue
                    u, v = pair
                    assert b <= u and x in v and not (u & v)
                    assert space.is_delta_open(u) and space.is_delta_open(v)


class TestExhaustiveInvariants:
    """Small-space sweeps of the duality and equivalence laws (n <= 3 here;
    the acceptance suite re-runs them at n = 4)."""

    def test_regular_duality_and_generator(self):
        for space in enumerate_spaces(3):
            for m in range(1 << 3):
                a = PtSet(3, m)
                assert space.is_regular_open(a) == space.is_regular_closed(a.complement())
            for u in space.opens:
                gen = space.interior(space.closure(u))
                assert space.is_regular_open(gen)
                assert space.interior(space.closure(gen)) == gen

    def test_delta_equivalences(self):
        for space in enumerate_spaces(3):
            for m in range(1 << 3):
                a = PtSet(3, m)
                comp = a.complement()
                assert space.is_delta_open(a) == (space.delta_closure(comp) == comp)
                assert space.is_delta_closed(a) == (space.delta_closure(a) == a)
                assert space.is_delta_open(a) == space.is_delta_closed(comp)

    def test_delta_opens_are_open_and_match_opens_when_regular(self):
        for space in enumerate_spaces(3):
            dof = space.delta_open_family()
            opens = space.opens.masks()
            assert dof.masks() <= opens
            if space.separation_profile().regular:
                assert dof.masks() == opens

    def test_closed_sets_delta_closed_in_regular_spaces(self):
        for space in enumerate_spaces(3):
            if not space.separation_profile().regular:
                continue
            for u in space.opens:
                assert space.is_delta_closed(u.complement())

    def test_subspace_preservation_for_open_carriers(self):
        for space in enumerate_spaces(3):
            for y in space.opens:
                if not y:
                    continue
                sub = space.subspace(y)
                for v in space.regular_open_family():
                    assert sub.is_regular_open(space.restrict(v & y, y))
                for u in space.delta_open_family():
                    assert sub.is_delta_open(space.restrict(u & y, y))


class TestJson:
    def test_round_trip(self, part3):
        again = FinSpace.from_json(part3.to_json())
        assert again.labels == part3.labels and again.opens == part3.opens

    def test_bad_label_rejected(self):
        with pytest.raises(MalformedInputError):
            FinSpace.from_json({"points": ["a"], "opens": [[], ["b"]]})

    def test_non_topology_rejected(self):
        with pytest.raises(MalformedInputError):
            FinSpace.from_json({"points": ["a", "b"], "opens": [[], ["a"]]})
