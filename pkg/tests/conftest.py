import pytest

from deltatop.sets import PtSet
from deltatop.space import FinSpace


def mkspace(labels, opens):
    n = len(labels)
    index = {lab: i for i, lab in enumerate(labels)}
    return FinSpace(
        labels,
        [PtSet.from_members(n, [index[x] for x in o]) for o in opens],
    )


@pytest.fixture
def sierp():
    return mkspace(["a", "b"], [[], ["a"], ["a", "b"]])


@pytest.fixture
def part3():
    return mkspace(["a", "b", "c"], [[], ["a"], ["b", "c"], ["a", "b", "c"]])


@pytest.fixture
def disc2():
    return mkspace(["a", "b"], [[], ["a"], ["b"], ["a", "b"]])


@pytest.fixture
def disc3():
    labels = ["a", "b", "c"]
    opens = [[]]
    for m in range(1, 8):
        opens.append([labels[i] for i in range(3) if m >> i & 1])
    return mkspace(labels, opens)


@pytest.fixture
def indisc2():
    return mkspace(["a", "b"], [[], ["a", "b"]])
