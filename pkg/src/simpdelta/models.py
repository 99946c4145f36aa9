"""Finite truncated simplicial F2-modules and algebras with explicit bases.

Module models are spans of nondecreasing vertex tuples: the standard
simplex, its boundary, and the quotient sphere (whole boundary collapsed
to zero, so the sphere is reduced: its degree-m basis is the set of
surjective tuples).  The algebra model is the polynomial algebra on the
sphere's basis in each degree, truncated at a polynomial degree bound;
its monomials are sorted multisets of sphere labels.

Truncation is never silent: a degeneracy pushing past ``max_degree`` or a
product exceeding the polynomial bound raises TruncationOverflowError,
because silently dropped terms would corrupt cycle checks downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .words import Word, OutOfRangeError, DEGENERACY


class TruncationOverflowError(Exception):
    """A computation left the representable range of a truncated model."""


class DegreeMismatchError(Exception):
    """Two elements of different simplicial degree were combined."""


@dataclass(frozen=True)
class F2Element:
    """A mod-2 set of basis labels in one simplicial degree."""

    degree: int
    support: frozenset

    def __add__(self, other: "F2Element") -> "F2Element":
        if self.degree != other.degree:
            raise DegreeMismatchError(
                f"cannot add degrees {self.degree} and {other.degree}"
            )
        return F2Element(self.degree, self.support ^ other.support)

    def __bool__(self) -> bool:
        return bool(self.support)

    def __len__(self) -> int:
        return len(self.support)


class Model:
    """Common machinery: elements, generator actions, word application."""

    name: str
    n: int
    max_degree: int

    def basis(self, degree: int) -> tuple:
        raise NotImplementedError

    def face_label(self, i: int, label, degree: int):
        """Image label under d_i, or None for zero."""
        raise NotImplementedError

    def degen_label(self, i: int, label, degree: int):
        raise NotImplementedError

    def label_str(self, label) -> str:
        raise NotImplementedError

    def zero(self, degree: int) -> F2Element:
        return F2Element(degree, frozenset())

    def element(self, labels, degree: int) -> F2Element:
        acc: set = set()
        for lbl in labels:
            acc ^= {lbl}
        return F2Element(degree, frozenset(acc))

    def apply_generator(self, generator: tuple[str, int], x: F2Element) -> F2Element:
        kind, r = generator
        m = x.degree
        if m < 0:
            return self.zero(m + 1 if kind == DEGENERACY else m - 1)
        if r > m:
            raise OutOfRangeError(generator, m)
        acc: set = set()
        if kind == DEGENERACY:
            if m + 1 > self.max_degree:
                raise TruncationOverflowError(
                    f"s{r} pushes degree {m} past max_degree {self.max_degree}"
                )
            for lbl in x.support:
                acc ^= {self.degen_label(r, lbl, m)}
            return F2Element(m + 1, frozenset(acc))
        if m > 0:
            for lbl in x.support:
                img = self.face_label(r, lbl, m)
                if img is not None:
                    acc ^= {img}
        return F2Element(m - 1, frozenset(acc))

    def apply_word(self, w: Word, x: F2Element) -> F2Element:
        """Factor-by-factor action; the map into a negative degree is zero.

        Once the running degree dips below zero the composite is the
        zero map and the remaining letters are absorbed without range
        checks, the same convention that decides definedness of the
        word itself.
        """
        cur = x
        for generator in reversed(w.factors):
            if cur.degree < 0:
                return self.zero(x.degree + w.degree_shift())
            cur = self.apply_generator(generator, cur)
        return cur

    def apply_word_label(self, w: Word, label, degree: int):
        """Single-label action: the image label, or None for zero."""
        out = self.apply_word(w, self.element([label], degree))
        if not out.support:
            return None
        (img,) = out.support
        return img

    def boundary(self, x: F2Element) -> F2Element:
        """Sum of all faces, the associated-complex differential."""
        acc = self.zero(x.degree - 1)
        for r in range(x.degree + 1):
            acc += self.apply_generator(("d", r), x)
        return acc

    def element_str(self, x: F2Element) -> str:
        if not x.support:
            return "0"
        return " + ".join(sorted(self.label_str(lbl) for lbl in x.support))


def _face_tuple(i: int, label: tuple) -> tuple:
    return label[:i] + label[i + 1 :]


def _degen_tuple(i: int, label: tuple) -> tuple:
    return label[: i + 1] + label[i:]


class ModuleModel(Model):
    """Span of a set of nondecreasing vertex tuples closed under the actions."""

    def __init__(self, n: int, max_degree: int):
        if n < 0 or max_degree < 0:
            raise ValueError("n and max_degree must be nonnegative")
        self.n = n
        self.max_degree = max_degree
        self._basis: dict[int, tuple] = {}

    def _member(self, label: tuple) -> bool:
        raise NotImplementedError

    def basis(self, degree: int) -> tuple:
        if degree < 0:
            return ()
        if degree > self.max_degree:
            raise TruncationOverflowError(
                f"degree {degree} exceeds max_degree {self.max_degree}"
            )
        if degree not in self._basis:
            self._basis[degree] = tuple(
                lbl
                for lbl in combinations_with_replacement(
                    range(self.n + 1), degree + 1
                )
                if self._member(lbl)
            )
        return self._basis[degree]

    def degen_label(self, i: int, label, degree: int):
        return _degen_tuple(i, label)

    def label_str(self, label) -> str:
        return "-".join(str(v) for v in label)


class DeltaModel(ModuleModel):
    """The standard n-simplex: every nondecreasing tuple is a basis vector."""

    def __init__(self, n, max_degree):
        super().__init__(n, max_degree)
        self.name = f"Delta({n})"

    def _member(self, label):
        return True

    def face_label(self, i, label, degree):
        return _face_tuple(i, label)


class BoundaryDeltaModel(ModuleModel):
    """The boundary subcomplex: tuples that miss at least one vertex."""

    def __init__(self, n, max_degree):
        super().__init__(n, max_degree)
        self.name = f"BoundaryDelta({n})"

    def _member(self, label):
        return len(set(label)) < self.n + 1

    def face_label(self, i, label, degree):
        return _face_tuple(i, label)


class SphereModel(ModuleModel):
    """Delta(n) with the entire boundary collapsed to zero.

    Only surjective tuples survive; a face that stops being surjective is
    the zero map.  Consequently the model is reduced and its degree-m
    dimension is C(m, m-n) for m >= n.
    """

    def __init__(self, n, max_degree):
        super().__init__(n, max_degree)
        self.name = f"Sphere({n})"

    def _member(self, label):
        return len(set(label)) == self.n + 1

    def face_label(self, i, label, degree):
        img = _face_tuple(i, label)
        return img if len(set(img)) == self.n + 1 else None

    def fundamental_class(self) -> F2Element:
        return self.element([tuple(range(self.n + 1))], self.n)


class AlgebraModel(Model):
    """Degreewise polynomial algebra on the sphere, truncated.

    A degree-m monomial is a sorted tuple of degree-m sphere labels (the
    empty tuple is the unit); the polynomial degree is the tuple length
    and is capped at ``poly_bound``.  Faces and degeneracies act
    factorwise, so they are algebra maps and kill any monomial with a
    factor mapping to zero.

    Two product semantics.  By default the model is a window onto the
    free polynomial algebra and a product past the bound raises, because
    silently dropping a nonzero monomial would corrupt cycle checks.
    With ``quotient=True`` the model is the truncated polynomial algebra
    itself (monomials of polynomial degree > poly_bound are genuinely
    zero); that quotient is again a simplicial algebra, so every
    identity of the operations holds in it exactly.
    """

    def __init__(self, n: int, max_degree: int, poly_bound: int,
                 quotient: bool = False):
        if poly_bound < 2:
            raise ValueError("poly_bound must be at least 2")
        self.n = n
        self.max_degree = max_degree
        self.poly_bound = poly_bound
        self.quotient = quotient
        self.underlying = SphereModel(n, max_degree)
        tag = ", quotient" if quotient else ""
        self.name = f"SphereAlgebra({n}, P={poly_bound}{tag})"
        self._basis: dict[int, tuple] = {}

    def basis(self, degree: int) -> tuple:
        if degree < 0:
            return ()
        if degree not in self._basis:
            gens = self.underlying.basis(degree)
            monos = [()]
            for p in range(1, self.poly_bound + 1):
                monos.extend(combinations_with_replacement(gens, p))
            self._basis[degree] = tuple(monos)
        return self._basis[degree]

    def face_label(self, i, mono, degree):
        out = []
        for f in mono:
            img = self.underlying.face_label(i, f, degree)
            if img is None:
                return None
            out.append(img)
        return tuple(sorted(out))

    def degen_label(self, i, mono, degree):
        return tuple(sorted(self.underlying.degen_label(i, f, degree) for f in mono))

    def label_str(self, mono) -> str:
        if not mono:
            return "1"
        return "*".join(f"({self.underlying.label_str(f)})" for f in mono)

    def multiply(self, x: F2Element, y: F2Element) -> F2Element:
        if x.degree != y.degree:
            raise DegreeMismatchError(
                f"cannot multiply degrees {x.degree} and {y.degree}"
            )
        acc: set = set()
        for a in x.support:
            for b in y.support:
                prod = tuple(sorted(a + b))
                if len(prod) > self.poly_bound:
                    if self.quotient:
                        continue
                    raise TruncationOverflowError(
                        f"product of polynomial degrees {len(a)} and {len(b)} "
                        f"exceeds the bound {self.poly_bound}"
                    )
                acc ^= {prod}
        return F2Element(x.degree, frozenset(acc))

    def unit(self, degree: int) -> F2Element:
        return self.element([()], degree)

    def fundamental_class(self) -> F2Element:
        return self.element([(tuple(range(self.n + 1)),)], self.n)


def delta_model(n: int, max_degree: int) -> DeltaModel:
    return DeltaModel(n, max_degree)

def boundary_delta_model(n: int, max_degree: int) -> BoundaryDeltaModel:
    return BoundaryDeltaModel(n, max_degree)

def sphere_model(n: int, max_degree: int) -> SphereModel:
    return SphereModel(n, max_degree)

def algebra_model(n: int, max_degree: int, poly_bound: int,
                  quotient: bool = False) -> AlgebraModel:
    return AlgebraModel(n, max_degree, poly_bound, quotient)


# ---------------------------------------------------------------------------
# tensor elements


@dataclass(frozen=True)
class TensorElement:
    left_degree: int
    right_degree: int
    pairs: frozenset

    def __add__(self, other: "TensorElement") -> "TensorElement":
        if (self.left_degree, self.right_degree) != (
            other.left_degree,
            other.right_degree,
        ):
            raise DegreeMismatchError("tensor bidegrees differ")
        return TensorElement(
            self.left_degree, self.right_degree, self.pairs ^ other.pairs
        )

    def __bool__(self) -> bool:
        return bool(self.pairs)


def tensor(x: F2Element, y: F2Element) -> TensorElement:
    return TensorElement(
        x.degree, y.degree, frozenset((a, b) for a in x.support for b in y.support)
    )


def evaluate_em(
    transform, element: TensorElement, left_model: Model, right_model: Model
) -> TensorElement:
    """Apply a bidegree family to a tensor element, term by term.

    Terms whose target bidegree has a negative component contribute zero.
    """
    i, j = element.left_degree, element.right_degree
    k, l = transform.target(i, j)
    acc: set = set()
    if k >= 0 and l >= 0 and element.pairs:
        lcache: dict = {}
        rcache: dict = {}
        for wl, wr in transform.terms(i, j):
            for a, b in element.pairs:
                if (wl, a) not in lcache:
                    lcache[(wl, a)] = left_model.apply_word_label(wl, a, i)
                la = lcache[(wl, a)]
                if la is None:
                    continue
                if (wr, b) not in rcache:
                    rcache[(wr, b)] = right_model.apply_word_label(wr, b, j)
                lb = rcache[(wr, b)]
                if lb is None:
                    continue
                acc ^= {(la, lb)}
    return TensorElement(k, l, frozenset(acc))


# ---------------------------------------------------------------------------
# diagnostics


def verify_simplicial_identities(model: Model, up_to: int | None = None) -> list[str]:
    """Exhaustively check the five identities on the model's basis.

    Returns a list of violation descriptions (empty when all hold).
    """
    top = model.max_degree if up_to is None else up_to
    bad: list[str] = []

    def app(generators, label, degree):
        x = model.element([label], degree)
        for g in reversed(generators):
            x = model.apply_generator(g, x)
        return x

    for m in range(top + 1):
        for label in model.basis(m):
            for j in range(m + 1):
                # d_i d_j = d_{j-1} d_i  (i < j)
                for i in range(j):
                    lhs = app([("d", i), ("d", j)], label, m)
                    rhs = app([("d", j - 1), ("d", i)], label, m)
                    if lhs != rhs:
                        bad.append(f"{model.name}: d{i} d{j} on {label} at degree {m}")
                # s_i s_j = s_{j+1} s_i  (i <= j), needs headroom of two
                if m + 2 <= model.max_degree:
                    for i in range(j + 1):
                        lhs = app([("s", i), ("s", j)], label, m)
                        rhs = app([("s", j + 1), ("s", i)], label, m)
                        if lhs != rhs:
                            bad.append(
                                f"{model.name}: s{i} s{j} on {label} at degree {m}"
                            )
                # d_i s_j, all three cases
                if m + 1 <= model.max_degree:
                    for i in range(m + 2):
                        lhs = app([("d", i), ("s", j)], label, m)
                        if i == j or i == j + 1:
                            rhs = model.element([label], m)
                        elif i < j:
                            rhs = app([("s", j - 1), ("d", i)], label, m)
                        else:
                            rhs = app([("s", j), ("d", i - 1)], label, m)
                        if lhs != rhs:
                            bad.append(
                                f"{model.name}: d{i} s{j} on {label} at degree {m}"
                            )
    return bad


def dump_model(model: Model, up_to: int | None = None) -> dict:
    """JSON-ready dump: bases and generator action tables per degree."""
    top = model.max_degree if up_to is None else up_to
    degrees = []
    for m in range(top + 1):
        labels = model.basis(m)
        entry = {
            "degree": m,
            "basis": [model.label_str(lbl) for lbl in labels],
            "faces": [
                {
                    model.label_str(lbl): (
                        None
                        if model.face_label(i, lbl, m) is None
                        else model.label_str(model.face_label(i, lbl, m))
                    )
                    for lbl in labels
                }
                for i in range(m + 1)
            ],
        }
        if m + 1 <= top:
            entry["degeneracies"] = [
                {
                    model.label_str(lbl): model.label_str(
                        model.degen_label(i, lbl, m)
                    )
                    for lbl in labels
                }
                for i in range(m + 1)
            ]
        degrees.append(entry)
    return {"model": model.name, "max_degree": top, "degrees": degrees}
