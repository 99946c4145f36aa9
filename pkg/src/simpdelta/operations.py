"""Mod-2 homotopy operations on truncated simplicial F2-algebras.

The operation delta_i sends a degree-q cycle to a degree-(q+i) cycle by a
closed sum of degeneracy-word products; `delta_via_em` computes the same
element through the degree-lowering refinements of the shuffle map and a
final multiplication.  The two routes are implemented independently and
the tests hold them against each other chain-for-chain.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass
from itertools import combinations

from .homology import is_cycle, normalized_subspace, same_class
from .models import AlgebraModel, F2Element, evaluate_em, tensor
from .transforms import higher_shuffle
from .words import DEGENERACY, FACE, Word


class BadRangeError(Exception):
    """The operation order i is outside 1 <= i <= degree."""


class NotNormalizedCycleError(Exception):
    """The closed formula presumes every face of the input vanishes."""


class NotACycleWarning(UserWarning):
    """delta_1 output has one nonvanishing face (the square of the input)."""


@dataclass(frozen=True)
class ShufflePair:
    """Disjoint increasing index blocks (mu, nu) covering one window."""

    mu: tuple[int, ...]
    nu: tuple[int, ...]

    def __post_init__(self):
        if set(self.mu) & set(self.nu):
            raise ValueError("blocks overlap")


def shuffle_pairs(q: int, i: int) -> list[ShufflePair]:
    """All splittings of the window {q-i, ..., q+i-1} into two i-blocks.

    Ordered lexicographically by mu.  There are C(2i, i) of them.
    """
    if not 1 <= i <= q:
        raise BadRangeError(f"need 1 <= i <= q, got i={i}, q={q}")
    window = tuple(range(q - i, q + i))
    out = []
    for mu in combinations(window, i):
        taken = set(mu)
        nu = tuple(v for v in window if v not in taken)
        out.append(ShufflePair(mu, nu))
    return out


def anchored_shuffle_pairs(q: int, i: int) -> list[ShufflePair]:
    """The splittings whose mu-block starts at the window minimum q-i.

    There are C(2i-1, i-1) of them; these index the terms of delta_i.
    """
    return [p for p in shuffle_pairs(q, i) if p.mu[0] == q - i]


def degeneracy_word(indices: tuple[int, ...]) -> Word:
    """s_{a_k} ... s_{a_1} for an increasing index block (a_1, ..., a_k)."""
    return Word(tuple((DEGENERACY, v) for v in reversed(indices)))


def _require_cycle(model: AlgebraModel, z: F2Element):
    for r in range(z.degree + 1):
        if model.apply_generator((FACE, r), z):
            raise NotNormalizedCycleError(
                f"face d{r} of the input is nonzero; "
                "the closed formula needs all faces to vanish"
            )


def delta_i(model: AlgebraModel, z: F2Element, i: int) -> F2Element:
    """The i-th operation by its closed formula.

    Sum over the anchored shuffle pairs of the window {q-i, ..., q+i-1}
    of the products s_nu(z) * s_mu(z).  For 2 <= i <= q the output is
    again a cycle; i = 1 is allowed but warns, because exactly one face
    of the output survives (it equals the square of the input).
    """
    q = z.degree
    if not 1 <= i <= q:
        raise BadRangeError(f"need 1 <= i <= degree(z)={q}, got i={i}")
    _require_cycle(model, z)
    if i == 1:
        warnings.warn(
            f"delta_1 output is not a cycle: its face d{q} equals z^2",
            NotACycleWarning,
            stacklevel=2,
        )
    acc = model.zero(q + i)
    for pair in anchored_shuffle_pairs(q, i):
        a = model.apply_word(degeneracy_word(pair.nu), z)
        b = model.apply_word(degeneracy_word(pair.mu), z)
        acc += model.multiply(a, b)
    return acc


def _multiply_pairs(model: AlgebraModel, pairs_element) -> F2Element:
    k = pairs_element.left_degree
    acc = model.zero(k)
    for a, b in pairs_element.pairs:
        acc += model.multiply(model.element([a], k), model.element([b], k))
    return acc


def delta_via_em(model: AlgebraModel, z: F2Element, i: int) -> F2Element:
    """The i-th operation through the shuffle-map refinements.

    Evaluates the (q-i)-th refinement on z (x) z and multiplies the two
    output factors; a non-cycle z needs the correction term against its
    boundary, evaluated one refinement lower.
    """
    q = z.degree
    if not 1 <= i <= q:
        raise BadRangeError(f"need 1 <= i <= degree(z)={q}, got i={i}")
    out = _multiply_pairs(
        model, evaluate_em(higher_shuffle(q - i), tensor(z, z), model, model)
    )
    dz = model.boundary(z)
    if dz:
        if q - i - 1 < 0:
            raise BadRangeError(
                "the correction term needs a refinement of negative order; "
                "with i == degree(z) the input must be a cycle"
            )
        out += _multiply_pairs(
            model,
            evaluate_em(higher_shuffle(q - i - 1), tensor(z, dz), model, model),
        )
    return out


def shuffle_square(model: AlgebraModel, z: F2Element) -> F2Element:
    """The multiplied shuffle of z with itself.

    Sum over all splittings of {0, ..., 2q-1} of s_nu(z) * s_mu(z); the
    splittings pair up under block swap and the algebra is commutative,
    so the result is always zero mod 2.  Kept as an executable statement
    of that fact.
    """
    q = z.degree
    if q < 1:
        raise BadRangeError("need degree >= 1")
    acc = model.zero(2 * q)
    for pair in shuffle_pairs(q, q):
        a = model.apply_word(degeneracy_word(pair.nu), z)
        b = model.apply_word(degeneracy_word(pair.mu), z)
        acc += model.multiply(a, b)
    return acc


def delta_report(
    model: AlgebraModel,
    z: F2Element,
    i: int,
    check_homology: bool = True,
    perturbations: int = 0,
    seed: int = 0,
) -> dict:
    """JSON-ready record of one delta_i computation.

    Includes the formula's term list, the cycle verdict, the homology
    verdict (is the class nonzero in the associated complex), and the
    agreement with the refinement route.  Optionally perturbs the input
    by seeded normalized boundaries and checks the class is unchanged.
    """
    q = z.degree
    caught: list[warnings.WarningMessage]
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        value = delta_i(model, z, i)
    other = delta_via_em(model, z, i)
    report: dict = {
        "q": q,
        "i": i,
        "degree": q + i,
        "terms": [
            [str(degeneracy_word(p.nu)), str(degeneracy_word(p.mu))]
            for p in anchored_shuffle_pairs(q, i)
        ],
        "value": sorted(model.label_str(lbl) for lbl in value.support),
        "is_cycle": is_cycle(model, value, "normalized"),
        "equals_theta": value == other,
    }
    if caught:
        report["warning"] = str(caught[0].message)
    if check_homology and not is_cycle(model, value, "associated"):
        # no class to speak of (the i = 1 output has a surviving face)
        report["homology_class_nonzero"] = None
    elif check_homology:
        report["homology_class_nonzero"] = not same_class(
            model, value, model.zero(q + i)
        )
        if perturbations > 0:
            rng = random.Random(seed)
            # delta_i squares its input, so a perturbed cycle only fits the
            # truncation if every monomial stays within half the bound
            cap = model.poly_bound // 2
            usable = []
            for y in normalized_subspace(model, q + 1):
                # boundary() of a normalized element is just its d_0 image
                b = model.boundary(y)
                if b and all(len(label) <= cap for label in b.support):
                    usable.append(b)
            stable = True
            done = 0
            for _ in range(perturbations):
                if not usable:
                    break
                picks = rng.randrange(1, 1 << len(usable))
                b = model.zero(q)
                for c, vec in enumerate(usable):
                    if picks >> c & 1:
                        b += vec
                if not b or any(len(label) > cap for label in z.support | b.support):
                    continue
                perturbed = z + b
                ok = is_cycle(model, perturbed, "normalized") and same_class(
                    model, value, delta_i(model, perturbed, i)
                )
                stable = stable and ok
                done += 1
            report["class_stable_under_boundary_perturbations"] = stable
            report["perturbations_checked"] = done
    return report
