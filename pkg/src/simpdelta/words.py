"""Formal words in the simplicial face and degeneracy generators.

A word is a finite composite such as ``s3 s1 d0``; the rightmost factor
applies first, so the text reads like the usual operator notation.  Words
act degreewise on simplicial vector spaces, and whether a word defines a
map depends on the source degree, so definedness is a per-degree query.
Every word that is defined and does not annihilate the degree has a unique
epi-mono normal form

    s_{i_p} ... s_{i_1} d_{j_1} ... d_{j_q},   i_p > ... > i_1,  j_1 < ... < j_q,

and two words act identically on every simplicial vector space at a fixed
source degree exactly when their normal forms there coincide.  That makes
equality of induced maps decidable by syntactic comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

FACE = "d"
DEGENERACY = "s"


class OutOfRangeError(Exception):
    """A generator index exceeds its intermediate source degree.

    The formal sequence does not define a map at that degree.
    """

    def __init__(self, generator: tuple[str, int], degree: int):
        self.generator = generator
        self.degree = degree
        kind, index = generator
        super().__init__(f"{kind}{index} is not defined on degree {degree}")


@dataclass(frozen=True)
class Word:
    """An ordered tuple of generators; ``factors[-1]`` applies first."""

    factors: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        for kind, index in self.factors:
            if kind not in (FACE, DEGENERACY) or index < 0:
                raise ValueError(f"bad generator {(kind, index)!r}")

    def __mul__(self, other: "Word") -> "Word":
        """Composition: ``self`` applied after ``other``."""
        return Word(self.factors + other.factors)

    def suspend(self) -> "Word":
        """Shift every generator index up by one."""
        return Word(tuple((kind, index + 1) for kind, index in self.factors))

    def degree_shift(self) -> int:
        return sum(1 if kind == DEGENERACY else -1 for kind, _ in self.factors)

    def target_degree(self, source_degree: int) -> int:
        """Degree the word maps ``source_degree`` to.  May be negative."""
        return source_degree + self.degree_shift()

    def is_identity(self) -> bool:
        return not self.factors

    def __str__(self) -> str:
        if not self.factors:
            return "id"
        return " ".join(f"{kind}{index}" for kind, index in self.factors)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


IDENTITY = Word(())


def face(index: int) -> Word:
    return Word(((FACE, index),))


def degeneracy(index: int) -> Word:
    return Word(((DEGENERACY, index),))


def parse_word(text: str) -> Word:
    """Parse the plain-text syntax, e.g. ``"s3 s1 d0"`` or ``"id"``."""
    text = text.strip()
    if text == "id":
        return IDENTITY
    factors = []
    for token in text.split():
        kind, digits = token[:1], token[1:]
        if kind not in (FACE, DEGENERACY) or not digits.isdigit():
            raise ValueError(f"bad word token {token!r}")
        factors.append((kind, int(digits)))
    if not factors:
        raise ValueError("empty word text")
    return Word(tuple(factors))


@dataclass(frozen=True)
class NormalForm:
    """Epi-mono normal form, or the distinguished zero form.

    ``degeneracies`` is strictly decreasing as written, ``faces`` strictly
    increasing; ``is_zero`` marks a word whose action annihilates the degree
    because some intermediate target degree is negative.
    """

    degeneracies: tuple[int, ...]
    faces: tuple[int, ...]
    is_zero: bool = False

    def word(self) -> Word:
        if self.is_zero:
            raise ValueError("the zero form is not a word")
        return Word(
            tuple((DEGENERACY, i) for i in self.degeneracies)
            + tuple((FACE, j) for j in self.faces)
        )

    def suspend(self) -> "NormalForm":
        if self.is_zero:
            return self
        return NormalForm(
            tuple(i + 1 for i in self.degeneracies),
            tuple(j + 1 for j in self.faces),
        )

    def __str__(self) -> str:
        return "0" if self.is_zero else str(self.word())


ZERO_FORM = NormalForm((), (), True)


def _walk(factors: tuple[tuple[str, int], ...], source_degree: int) -> int | None:
    """Track intermediate degrees right to left.

    Returns the final degree, or None when the word annihilates the degree
    (some intermediate target is negative, so the action factors through the
    zero space).  Raises OutOfRangeError when a generator index exceeds its
    intermediate source degree.
    """
    m = source_degree
    for kind, index in reversed(factors):
        if m < 0:
            return None
        if index > m:
            raise OutOfRangeError((kind, index), m)
        m = m + 1 if kind == DEGENERACY else m - 1
    return m if m >= 0 else None


def is_defined(word: Word, source_degree: int) -> bool:
    try:
        _walk(word.factors, source_degree)
    except OutOfRangeError:
        return False
    return True


@lru_cache(maxsize=None)
def _formal_normal_form(factors: tuple[tuple[str, int], ...]) -> NormalForm:
    # Insertion-based rewriting, one generator at a time from the right.
    # The oriented rules are the simplicial identities:
    #   s_r s_j = s_{j+1} s_r        (r <= j)
    #   d_r s_j = s_{j-1} d_r        (r < j)
    #   d_r s_j = id                 (r == j or r == j+1)
    #   d_r s_j = s_j d_{r-1}        (r > j+1)
    #   d_r d_j = d_j d_{r+1}        (r >= j)
    degens: list[int] = []  # strictly decreasing as written
    faces: list[int] = []  # strictly increasing as written
    for kind, r in reversed(factors):
        if kind == DEGENERACY:
            out: list[int] = []
            k = 0
            while k < len(degens) and r <= degens[k]:
                out.append(degens[k] + 1)
                k += 1
            out.append(r)
            out.extend(degens[k:])
            degens = out
        else:
            pos = 0
            alive = True
            while pos < len(degens):
                j = degens[pos]
                if r < j:
                    degens[pos] = j - 1
                    pos += 1
                elif r == j or r == j + 1:
                    del degens[pos]
                    alive = False
                    break
                else:
                    r -= 1
                    pos += 1
            if alive:
                out = []
                k = 0
                while k < len(faces) and r >= faces[k]:
                    out.append(faces[k])
                    r += 1
                    k += 1
                out.append(r)
                out.extend(faces[k:])
                faces = out
    return NormalForm(tuple(degens), tuple(faces))


@lru_cache(maxsize=None)
def _normalize(factors: tuple[tuple[str, int], ...], source_degree: int) -> NormalForm:
    if _walk(factors, source_degree) is None:
        return ZERO_FORM
    return _formal_normal_form(factors)


def normalize(word: Word, source_degree: int) -> NormalForm:
    """Normal form of the word's action on the given source degree.

    Raises OutOfRangeError when the word is not defined there.
    """
    return _normalize(word.factors, source_degree)


def normalize_sum(words, source_degree: int) -> frozenset[NormalForm]:
    """Mod-2 reduction of a formal sum of words at one source degree.

    Zero forms are dropped; equal normal forms cancel in pairs.
    """
    acc: set[NormalForm] = set()
    for w in words:
        nf = normalize(w, source_degree)
        if not nf.is_zero:
            acc ^= {nf}
    return frozenset(acc)
