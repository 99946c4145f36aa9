"""
Simplicial words and their normal forms
=======================================

A word in the face and degeneracy generators acts on a simplicial
object one letter at a time, rightmost letter first.  Whether the word
is defined at all depends on the degree it starts from, and every
defined word has a unique epi-mono normal form: degeneracies first
(indices strictly decreasing), then faces (indices strictly
increasing).
"""

from simpdelta.words import is_defined, normalize, parse_word

# The same word can be defined at one degree and undefined one step
# lower: d3 needs at least four vertices to act on.
w = parse_word("d3")
for q in (2, 3):
    print(f"{w} at degree {q}: defined = {is_defined(w, q)}")

# Normal forms straighten any defined word into the canonical shape.
for text, q in [("d1 s0", 2), ("d3 s0", 3), ("s0 s0", 1), ("s0 d2 s1 d0", 3)]:
    nf = normalize(parse_word(text), q)
    print(f"normalize({text!r}, {q}) = {nf}")

# Some defined words are the zero map: walking d0 twice from degree 1
# passes through degree -1, and everything below degree zero is zero.
z = parse_word("d0 d0")
print(f"{z} at degree 1 -> {normalize(z, 1)}")

# Once the walk dips below zero the remaining letters no longer
# matter; the composite is zero no matter how wild they are.
absorbed = parse_word("s5 s3 d0 d0")
print(f"{absorbed} at degree 1: defined = {is_defined(absorbed, 1)}, "
      f"normal form = {normalize(absorbed, 1)}")

# Suspension shifts every index up by one.  For words that do not
# annihilate this is transparent: the suspended word is defined one
# degree higher and its normal form suspends termwise.
w = parse_word("s0 d2")
print(f"suspend({w}) = {w.suspend()}")
print(f"normalize at 2: {normalize(w, 2)}  -> suspended: "
      f"{normalize(w.suspend(), 3)}")

# Annihilating words carry no such promise.  d0 d0 is zero at degree 1,
# but its suspension d1 d1 acts nontrivially at degree 2.
print(f"suspend({z}) = {z.suspend()}, normal form at 2: "
      f"{normalize(z.suspend(), 2)}")
