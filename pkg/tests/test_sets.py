import itertools

import pytest
from hypothesis import given, strategies as st

from deltatop.errors import CarrierMismatchError
from deltatop.sets import PtSet, SetFamily, family_is_topology


def labset(n, members):
    return PtSet.from_members(n, members)


class TestPtSet:
    def test_extensional_equality(self):
        assert labset(3, [0, 2]) == labset(3, [2, 0])
        assert labset(3, [0]) != labset(3, [1])

    def test_double_complement(self):
        for m in range(16):
            a = PtSet(4, m)
            assert a.complement().complement() == a

    def test_carrier_mismatch(self):
        with pytest.raises(CarrierMismatchError):
            labset(2, [0]) | labset(3, [0])

    def test_out_of_carrier_member(self):
        with pytest.raises(CarrierMismatchError):
            labset(2, [2])

    def test_iteration_and_len(self):
        a = labset(5, [0, 3, 4])
        assert list(a) == [0, 3, 4]
        assert len(a) == 3
        assert 3 in a and 1 not in a


class TestSetFamily:
    def test_order_preserved_but_extensional(self):
        a = SetFamily(2, [labset(2, [0]), labset(2, [])])
        b = SetFamily(2, [labset(2, []), labset(2, [0])])
        assert a == b
        assert [s.mask for s in a] == [1, 0]

    def test_duplicates_dropped(self):
        fam = SetFamily(2, [labset(2, [0]), labset(2, [0])])
        assert len(fam) == 1


class TestFamilyIsTopology:
    def test_sierpinski(self):
        fam = SetFamily(2, [labset(2, []), labset(2, [0]), labset(2, [0, 1])])
        assert family_is_topology(fam, 2)

    def test_missing_whole_space(self):
        fam = SetFamily(2, [labset(2, []), labset(2, [0]), labset(2, [1])])
        assert not family_is_topology(fam, 2)

    def test_exactly_four_topologies_on_two_points(self):
        # brute force every family of subsets of a 2-point carrier
        subsets = [PtSet(2, m) for m in range(4)]
        count = 0
        for r in range(5):
            for combo in itertools.combinations(subsets, r):
                if family_is_topology(SetFamily(2, combo), 2):
                    count += 1
        assert count == 4

    def test_carrier_mismatch(self):
        fam = SetFamily(2, [labset(2, [])])
        with pytest.raises(CarrierMismatchError):
            family_is_topology(fam, 3)


class TestDeMorgan:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_exhaustive(self, n):
        for am in range(1 << n):
            for bm in range(1 << n):
                a, b = PtSet(n, am), PtSet(n, bm)
                assert (a | b).complement() == a.complement() & b.complement()


@given(st.data())
def test_topology_check_invariant_under_relabeling(data):
    n = data.draw(st.integers(min_value=1, max_value=4))
    masks = data.draw(st.sets(st.integers(min_value=0, max_value=(1 << n) - 1), max_size=8))
    perm = data.draw(st.permutations(range(n)))

    def relabel(m):
        out = 0
        for x in range(n):
            if m >> x & 1:
                out |= 1 << perm[x]
        return out

    fam = SetFamily.from_masks(n, masks)
    fam2 = SetFamily.from_masks(n, [relabel(m) for m in masks])
    assert family_is_topology(fam, n) == family_is_topology(fam2, n)
