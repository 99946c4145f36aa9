"""Bidegree-indexed tensor-word transforms.

The shuffle family is compared against an independent enumeration of
monotone interleavings (the Pascal recursion), not against the
combinations call used inside the module.
"""

import math

import pytest

from simpdelta.transforms import (
    IndexFunction,
    IndexMismatchError,
    boundary_left,
    degen0_left,
    degen0_right,
    diagonal_identity,
    dump_bidegree,
    dwyer_defect,
    em_equal,
    face0_left,
    higher_shuffle,
    identity_transform,
    shuffle_map,
    suspend,
    twist,
    word_pair,
    zero_transform,
)
from simpdelta.words import Word, face, parse_word


def interleavings(i, j):
    """Position sets of the size-j pile in a monotone (i, j)-interleaving."""
    if i == 0:
        return {frozenset(range(j))}
    if j == 0:
        return {frozenset()}
    out = set(interleavings(i - 1, j))
    out |= {s | {i + j - 1} for s in interleavings(i, j - 1)}
    return out


def word_indices(w):
    assert all(kind == "s" for kind, _ in w.factors)
    idx = [r for _, r in w.factors]
    assert idx == sorted(idx, reverse=True), "degeneracies written descending"
    return frozenset(idx)


def reduced_strs(transform, i, j):
    return sorted((str(a), str(b)) for a, b in transform.reduced(i, j))


def test_shuffle_matches_interleaving_oracle():
    d = shuffle_map()
    for i in range(5):
        for j in range(5):
            terms = d.terms(i, j)
            assert len(terms) == math.comb(i + j, i)
            got = {(word_indices(wl), word_indices(wr)) for wl, wr in terms}
            want = {
                (s, frozenset(range(i + j)) - s) for s in interleavings(i, j)
            }
            assert got == want
            for left_set, right_set in got:
                assert len(left_set) == j and len(right_set) == i


def test_shuffle_frozen_values():
    d = shuffle_map()
    assert d.terms(0, 0) == frozenset({(Word(), Word())})
    assert reduced_strs(d, 1, 1) == [("s0", "s1"), ("s1", "s0")]
    assert d.target(1, 1) == (2, 2)
    assert d.target(2, 1) == (3, 3)


def test_refinement_base_values():
    d0 = higher_shuffle(0)
    assert reduced_strs(d0, 0, 0) == []
    assert reduced_strs(d0, 0, 1) == []
    assert reduced_strs(d0, 1, 0) == [("id", "s0")]
    assert reduced_strs(d0, 1, 1) == [("s1", "s0")]
    d1 = higher_shuffle(1)
    assert reduced_strs(d1, 1, 1) == [("id", "s0 d0")]
    assert d1.target(1, 1) == (1, 1)
    assert higher_shuffle(2).target(3, 2) == (3, 3)


def test_diagonal_identity_support():
    phi1 = diagonal_identity(1)
    assert reduced_strs(phi1, 1, 1) == [("id", "id")]
    for ij in ((0, 1), (2, 1), (2, 2), (3, 1)):
        assert phi1.reduced(*ij) == frozenset()


def test_symmetrized_defect_base():
    a0 = dwyer_defect(0)
    assert reduced_strs(a0, 0, 0) == [("id", "id")]
    for ij in ((1, 0), (0, 1), (1, 1), (2, 1)):
        assert a0.reduced(*ij) == frozenset()


def test_twist_symmetry_of_shuffle():
    # over F2 the shuffle product is symmetric
    assert em_equal(twist(shuffle_map()), shuffle_map(), 6)


def test_twist_is_an_involution():
    for f in (shuffle_map(), higher_shuffle(1), dwyer_defect(2)):
        assert em_equal(twist(twist(f)), f, 5)


def test_suspension_shifts_words_and_grid():
    s = suspend(degen0_right())
    assert s.terms(1, 1) == frozenset({(Word(), parse_word("s1"))})
    assert s.terms(1, 0) == frozenset()
    assert s.terms(0, 1) == frozenset()
    assert s.target(1, 1) == (1, 2)
    assert suspend(higher_shuffle(0)).target(2, 2) == (3, 3)


def test_word_pair_reduction_drops_annihilated_terms():
    wp = word_pair(parse_word("d0 d0"), Word())
    assert wp.index_fn.rows == ((1, 0, -2), (0, 1, 0))
    assert wp.terms(1, 2)
    assert wp.reduced(1, 2) == frozenset()


def test_composition_index_arithmetic():
    comp = degen0_left() * face0_left()
    assert comp.target(2, 3) == (2, 3)
    assert (boundary_left() * degen0_left()).target(2, 3) == (2, 3)
    fn = IndexFunction(((1, 0, -1), (0, 1, 0)))
    assert fn.after(fn)(5, 7) == (3, 7)
    # conjugation by the swap: the twisted value at (i, j) is swap(fn(j, i))
    assert fn.twisted()(5, 7) == (5, 6)


def test_equality_report_witness():
    rep = em_equal(identity_transform(), degen0_left() * face0_left(), 4)
    assert not rep
    assert rep.witness == (0, 0)
    assert rep.bidegrees_checked == 1
    assert sorted((str(a), str(b)) for a, b in rep.left_only) == [("id", "id")]
    assert rep.right_only == frozenset()


def test_equality_window_floor():
    """The k = 1 defect misses the identity at (1, 0) but holds on i+j >= 2."""
    full = em_equal(dwyer_defect(1), diagonal_identity(1), 6)
    assert not full
    assert full.witness == (1, 0)
    assert sorted((str(a), str(b)) for a, b in full.left_only) == [
        ("d0", "id"),
        ("d1", "id"),
    ]
    above = em_equal(dwyer_defect(1), diagonal_identity(1), 6, min_total=2)
    assert above
    assert above.bidegrees_checked == 25


def test_index_mismatch_is_refused():
    with pytest.raises(IndexMismatchError):
        word_pair(face(0), face(0)) + identity_transform()


def test_zero_transform():
    z = zero_transform(IndexFunction(((1, 0, 0), (0, 1, 0))))
    assert z.reduced(3, 2) == frozenset()
    assert em_equal(z + identity_transform(), identity_transform(), 4)


def test_dump_bidegree_schema():
    assert dump_bidegree(shuffle_map(), 1, 1) == {
        "bidegree": [1, 1],
        "target": [2, 2],
        "terms": [["s0", "s1"], ["s1", "s0"]],
    }
    assert dump_bidegree(higher_shuffle(1), 1, 1, reduced=True) == {
        "bidegree": [1, 1],
        "target": [1, 1],
        "terms": [["id", "s0 d0"]],
    }
