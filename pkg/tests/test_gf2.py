"""Bit-packed GF(2) linear algebra."""

from hypothesis import given, strategies as st

from simpdelta.gf2 import F2Matrix, bits, coordinates, reduced_echelon


def test_small_matrix():
    # columns (1,1) and (0,1) of a 2x2 matrix
    m = F2Matrix(2, [0b11, 0b10])
    assert m.ncols == 2
    assert m.rank() == 2
    assert m.apply(0b01) == 0b11
    assert m.apply(0b11) == 0b01
    assert m.kernel_basis() == []
    assert m.solve(0b11) == 0b01
    assert m.solve(0b01) is not None


def test_singular_matrix():
    # two equal columns plus a zero column
    m = F2Matrix(3, [0b101, 0b101, 0])
    assert m.rank() == 1
    ker = m.kernel_basis()
    assert len(ker) == 2
    for v in ker:
        assert m.apply(v) == 0
    assert m.solve(0b010) is None


def test_bits_roundtrip():
    assert list(bits(0)) == []
    assert list(bits(0b10110)) == [1, 2, 4]
    v = 0
    for b in bits(0b10110):
        v |= 1 << b
    assert v == 0b10110


def test_reduced_echelon_canonical():
    basis = reduced_echelon([0b011, 0b110, 0b101, 0b011])
    assert basis == reduced_echelon(reversed([0b011, 0b110, 0b101]))
    # each pivot appears in exactly one basis vector
    pivots = [v.bit_length() - 1 for v in basis]
    assert len(set(pivots)) == len(basis)
    for v in basis:
        for w in basis:
            if w is not v:
                assert not (w >> (v.bit_length() - 1)) & 1


def test_coordinates():
    basis = reduced_echelon([0b011, 0b110])
    assert coordinates(0b101, basis) is not None
    assert coordinates(0b001, basis) is None
    coords = coordinates(0b101, basis)
    v = 0
    for k in bits(coords):
        v ^= basis[k]
    assert v == 0b101


vectors_st = st.lists(st.integers(0, 2**10 - 1), min_size=0, max_size=12)


@given(vectors_st)
def test_rank_nullity(columns):
    m = F2Matrix(10, columns)
    assert m.rank() + len(m.kernel_basis()) == len(columns)
    for v in m.kernel_basis():
        assert m.apply(v) == 0


@given(vectors_st, st.integers(0, 2**12 - 1))
def test_solve_consistency(columns, x):
    m = F2Matrix(10, columns)
    x &= (1 << len(columns)) - 1
    target = m.apply(x)
    sol = m.solve(target)
    assert sol is not None
    assert m.apply(sol) == target


@given(vectors_st)
def test_echelon_spans(columns):
    basis = reduced_echelon(columns)
    for col in columns:
        assert coordinates(col, basis) is not None
    assert len(basis) == F2Matrix(10, columns).rank()
