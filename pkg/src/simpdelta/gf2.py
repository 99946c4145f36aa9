"""Exact linear algebra over the two-element field.

Vectors are Python ints used as bitmasks (bit c = coordinate c), so row
operations are single XORs on arbitrarily wide rows.  Elimination always
scans columns in their given order and picks the highest set bit as the
pivot, which keeps every derived object reproducible.
"""

from __future__ import annotations


class F2Matrix:
    """A linear map F2^ncols -> F2^nrows stored column-wise.

    ``columns[c]`` is the image of the c-th standard basis vector, packed
    into an int over the target coordinates.
    """

    def __init__(self, nrows: int, columns: list[int]):
        self.nrows = nrows
        self.columns = list(columns)
        self._echelon: list[tuple[int, int, int]] | None = None

    @property
    def ncols(self) -> int:
        return len(self.columns)

    def _eliminate(self) -> list[tuple[int, int, int]]:
        # Returns (pivot_bit, reduced_column, combination) triples; the
        # combination records which input columns were XORed together.
        if self._echelon is None:
            pivots: list[tuple[int, int, int]] = []
            self._kernel: list[int] = []
            for c, v in enumerate(self.columns):
                combo = 1 << c
                for pbit, pval, pcombo in pivots:
                    if v >> pbit & 1:
                        v ^= pval
                        combo ^= pcombo
                if v:
                    pivots.append((v.bit_length() - 1, v, combo))
                else:
                    self._kernel.append(combo)
            self._echelon = pivots
        return self._echelon

    def rank(self) -> int:
        return len(self._eliminate())

    def kernel_basis(self) -> list[int]:
        """Bitmask vectors over the source coordinates spanning the null space."""
        self._eliminate()
        return list(self._kernel)

    def solve(self, target: int) -> int | None:
        """A source vector mapping to ``target``, or None when unsolvable."""
        v, combo = target, 0
        for pbit, pval, pcombo in self._eliminate():
            if v >> pbit & 1:
                v ^= pval
                combo ^= pcombo
        return combo if v == 0 else None

    def apply(self, vector: int) -> int:
        out = 0
        for c, col in enumerate(self.columns):
            if vector >> c & 1:
                out ^= col
        return out


def reduced_echelon(vectors: list[int]) -> list[int]:
    """Canonical reduced-echelon basis of the span, pivots descending."""
    basis: list[tuple[int, int]] = []  # (pivot_bit, vector)
    for v in vectors:
        for pbit, pvec in basis:
            if v >> pbit & 1:
                v ^= pvec
        if v:
            basis.append((v.bit_length() - 1, v))
    basis.sort(reverse=True)
    # back-substitute so each pivot bit appears in exactly one vector
    for k in range(len(basis)):
        pbit, pvec = basis[k]
        for j in range(k):
            if basis[j][1] >> pbit & 1:
                basis[j] = (basis[j][0], basis[j][1] ^ pvec)
    return [vec for _, vec in basis]


def coordinates(vector: int, echelon_basis: list[int]) -> int | None:
    """Express a vector in a reduced-echelon basis; None if outside the span."""
    coords = 0
    for k, bvec in enumerate(echelon_basis):
        pbit = bvec.bit_length() - 1
        if vector >> pbit & 1:
            vector ^= bvec
            coords |= 1 << k
    return coords if vector == 0 else None


def bits(vector: int):
    """Indices of the set bits, ascending."""
    while vector:
        low = vector & -vector
        yield low.bit_length() - 1
        vector ^= low
