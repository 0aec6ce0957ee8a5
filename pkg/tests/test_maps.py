import pytest

import deltatop.realline as rl
from deltatop.errors import MalformedInputError
from deltatop.maps import (
    FAIL,
    NOT_APPLICABLE,
    PASS,
    SpaceMap,
    classify_map,
    image_delta_compact_ok,
    is_delta_closed_map,
    preimage_delta_open_ok,
    preimage_regular_open_ok,
    square_map_example,
)
from deltatop.topogen import enumerate_maps, enumerate_spaces


class TestClassify:
    def test_identity_all_flags(self, sierp):
        flags = classify_map(SpaceMap(sierp, sierp, [0, 1]))
        assert flags.to_json() == {"continuous": True, "open": True, "closed": True}

    def test_identity_refinement_continuous_only(self, disc2, sierp):
        flags = classify_map(SpaceMap(disc2, sierp, [0, 1]))
        assert flags.to_json() == {"continuous": True, "open": False, "closed": False}

    def test_constant_map(self, disc3, sierp):
        flags = classify_map(SpaceMap(disc3, sierp, [1, 1, 1]))
        assert flags.to_json() == {"continuous": True, "open": False, "closed": True}

    def test_coarsening_not_continuous(self, sierp, disc2):
        flags = classify_map(SpaceMap(sierp, disc2, [0, 1]))
        assert not flags.continuous

    def test_bad_table_length(self, sierp, disc2):
        with pytest.raises(MalformedInputError):
            SpaceMap(sierp, disc2, [0])

    def test_bad_image_index(self, sierp, disc2):
        with pytest.raises(MalformedInputError):
            SpaceMap(sierp, disc2, [0, 2])


class TestImagePreimage:
    def test_image_and_preimage(self, disc3, sierp):
        f = SpaceMap(disc3, sierp, [0, 1, 1])
        assert sierp.set_labels(f.image(disc3.pset_from_labels(["b", "c"]))) == ["b"]
        assert disc3.set_labels(f.preimage(sierp.pset_from_labels(["b"]))) == ["b", "c"]

    def test_json_round_trip(self, disc3, sierp):
        f = SpaceMap(disc3, sierp, [0, 1, 1])
        again = SpaceMap.from_json(f.to_json())
        assert again.table == f.table
        assert again.dom.labels == f.dom.labels


class TestPreservationChecks:
    def test_open_continuous_identity_passes(self, part3):
        f = SpaceMap(part3, part3, [0, 1, 2])
        assert preimage_regular_open_ok(f).verdict == PASS
        assert preimage_delta_open_ok(f).verdict == PASS
        assert image_delta_compact_ok(f).verdict == PASS

    def test_non_open_map_not_applicable(self, disc2, sierp):
        f = SpaceMap(disc2, sierp, [0, 1])
        assert preimage_regular_open_ok(f).verdict == NOT_APPLICABLE
        assert preimage_delta_open_ok(f).verdict == NOT_APPLICABLE

    def test_delta_closed_map_witness(self, sierp, disc2):
        # the identity from the discrete pair onto the Sierpinski space is
        # not a delta-closed map: the domain set {a} is delta-closed but its
        # image {a} is not even closed in the codomain
        f = SpaceMap(disc2, sierp, [0, 1])
        res = is_delta_closed_map(f)
        assert res.verdict == FAIL
        assert disc2.set_labels(res.witness) == ["a"]

    def test_delta_closed_map_identity(self, part3):
        assert is_delta_closed_map(SpaceMap(part3, part3, [0, 1, 2])).verdict == PASS

    def test_sweep_open_continuous_maps_preserve(self):
        # exhaustive at 2 points on both sides, sampled at 3
        seen = 0
        for dom in enumerate_spaces(2):
            for cod in enumerate_spaces(2):
                for f in enumerate_maps(dom, cod, continuous=True, open_map=True):
                    seen += 1
                    assert preimage_regular_open_ok(f).verdict == PASS
                    assert preimage_delta_open_ok(f).verdict == PASS
                    assert image_delta_compact_ok(f).verdict == PASS
        assert seen > 0


class TestSquareMapExample:
    def test_pullback_not_regular_open(self):
        rep = square_map_example()
        assert rep["U_regular_open"]
        assert rep["preimage"] == rl.parse_interval_set("(-1,0)U(0,1)")
        assert rep["int_closure"] == rl.IntervalSet.open(-1, 1)
        assert not rep["preimage_regular_open"]
