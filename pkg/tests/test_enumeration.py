import json

import pytest

from skewact.enumeration import (CapExceeded, SearchSpace, compare_counts, enumerate_structures,
                                 numpy_count)
from skewact.fixtures import data_path, golden_counts


@pytest.fixture(scope="module")
def golden():
    with open(data_path("golden_counts.json"), encoding="utf-8") as fh:
        return json.load(fh)


@pytest.mark.parametrize("n,p", [(1, 0), (2, 0), (2, 1)])
def test_counts_agree_and_pairing_is_bijective(n, p, golden):
    row = compare_counts(n, p)
    assert row["skewmon"] == row["monad"] == golden["skewmon"][f"{n},{p}"]
    assert row["numpy_skewmon"] == row["skewmon"] and row["numpy_monad"] == row["monad"]
    assert row["injective"] and row["surjective"] and row["fixpoints"]


def test_trivial_size_one(golden):
    assert golden["skewmon"]["1,0"] == golden["monad"]["1,0"] == 1


def test_golden_file_is_reproducible(golden):
    assert golden_counts() == golden


@pytest.mark.parametrize("kind", ["skewmon", "monad", "oplaxaction"])
def test_deterministic_across_workers(kind):
    a = enumerate_structures(SearchSpace(2, 1, kind), jobs=1)
    b = enumerate_structures(SearchSpace(2, 1, kind), jobs=3)
    assert a == b
    assert a["count"] == numpy_count(kind, 2, 1)


def test_cap_and_range():
    with pytest.raises(CapExceeded):
        SearchSpace(3, 0, "skewmon")
    with pytest.raises(ValueError):
        SearchSpace(2, 2, "skewmon")
    with pytest.raises(ValueError):
        SearchSpace(2, 0, "nonsense")
