"""The verified relation catalog.

Case counts are frozen so that a silent shrink of a verification window
shows up as a failure, not as a quietly weaker check.
"""

import pytest

from simpdelta.relations import (
    RelationResult,
    UnknownRelationError,
    check_relation,
    relation_names,
)
from simpdelta.transforms import diagonal_identity, dwyer_defect, suspend, word_pair
from simpdelta.words import Word, face

WINDOW6_CASES = {
    "simp0": 28,
    "simp1": 84,
    "simp2": 28,
    "simp3": 28,
    "simp4": 28,
    "simp5": 112,
    "d0-word": 2571,
    "D-chain-map": 28,
    "dwyer-0": 28,
    "dwyer-1": 25,
    "dwyer-2": 18,
}


def test_relation_names():
    names = relation_names(max_k=2)
    assert "simp0" in names and "simp5" in names
    assert "dwyer-0" in names and "dwyer-2" in names
    assert "recursion-1" in names and "recursion-2" in names
    assert "dwyer-3" not in names
    assert "D-chain-map-numeric" in names


@pytest.mark.parametrize("name", sorted(WINDOW6_CASES))
def test_catalog_window6(name):
    result = check_relation(name, 6)
    assert result
    assert result.passed
    assert result.witness is None
    assert result.cases == WINDOW6_CASES[name]


def test_window_scaling():
    # a 7-bidegree triangle less than window 6 everywhere
    assert check_relation("simp0", 5).cases == 21
    assert check_relation("simp5", 5).cases == 84
    assert check_relation("d0-word", 5).cases == 1986


def test_numeric_chain_map():
    result = check_relation("D-chain-map-numeric", 4)
    assert result.passed
    assert result.cases > 1000


def test_recursion_relations():
    for k in (1, 2, 3):
        result = check_relation(f"recursion-{k}", 6)
        assert result.passed, result.witness


def test_recursion_k1_defect_is_pinned():
    """The k = 1 recursion misses exactly d1 (x) id at bidegree (1, 0).

    Away from that single bidegree the two sides agree on the whole
    window; the catalog relation asserts the defect rather than hiding it.
    """
    lhs = dwyer_defect(1)
    rhs = suspend(dwyer_defect(0)) + dwyer_defect(0) * word_pair(face(0), Word())
    defect = lhs.reduced(1, 0) ^ rhs.reduced(1, 0)
    assert {(str(a), str(b)) for a, b in defect} == {("d1", "id")}
    for total in range(7):
        for i in range(total + 1):
            j = total - i
            if (i, j) == (1, 0):
                continue
            assert lhs.reduced(i, j) == rhs.reduced(i, j), (i, j)


def test_dwyer_defect_below_the_line():
    """Where the i+j >= 2k hypothesis fails, so does the conclusion.

    The full survey of A^k against the diagonal identity on the window
    shows mismatches exactly at these bidegrees, all with i+j < 2k; the
    hypothesis in the k-th condition is doing real work.
    """
    expected = {
        1: [(1, 0)],
        2: [(1, 1), (1, 2), (2, 1)],
        3: [(2, 1), (2, 2), (3, 1), (2, 3), (3, 2)],
        4: [(2, 2), (2, 3), (3, 2), (2, 4), (3, 3), (4, 2), (3, 4), (4, 3)],
    }
    for k, want in expected.items():
        a = dwyer_defect(k)
        phi = diagonal_identity(k)
        got = [
            (i, total - i)
            for total in range(9)
            for i in range(total + 1)
            if a.reduced(i, total - i) != phi.reduced(i, total - i)
        ]
        assert got == want, k
        assert all(i + j < 2 * k for i, j in got)


def test_unknown_relation():
    with pytest.raises(UnknownRelationError):
        check_relation("simp9")
    with pytest.raises(UnknownRelationError):
        check_relation("dwyer-x")


def test_result_shape():
    result = check_relation("simp0", 4)
    assert isinstance(result, RelationResult)
    assert result.name == "simp0"
    assert result.description
    assert bool(result) is result.passed
