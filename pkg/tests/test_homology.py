"""GF(2) chain complexes for the finite models.

Betti numbers are pinned to the known homotopy types: the simplex is
contractible, its boundary is a circle, the quotient sphere has one class
on top, and the normalized complex must agree with the associated one.
"""

import pytest

from simpdelta.homology import (
    NotACycleError,
    associated_complex,
    cycle_subspace,
    element_vector,
    is_cycle,
    normalized_complex,
    normalized_subspace,
    same_class,
)
from simpdelta.models import (
    algebra_model,
    boundary_delta_model,
    delta_model,
    sphere_model,
)

MODELS = [
    delta_model(1, 3),
    delta_model(2, 4),
    boundary_delta_model(2, 4),
    sphere_model(2, 4),
    sphere_model(3, 5),
    algebra_model(2, 4, 2),
]


def test_frozen_betti_tables():
    assert associated_complex(delta_model(1, 3)).betti_rows() == [
        (0, 2, 0, 1),
        (1, 3, 1, 0),
        (2, 4, 2, 0),
    ]
    assert normalized_complex(delta_model(1, 3)).betti_rows() == [
        (0, 2, 0, 1),
        (1, 1, 1, 0),
        (2, 0, 0, 0),
    ]
    # the boundary of the 2-simplex is a circle
    assert normalized_complex(boundary_delta_model(2, 3)).betti_rows() == [
        (0, 3, 0, 1),
        (1, 3, 2, 1),
        (2, 0, 0, 0),
    ]
    assert associated_complex(sphere_model(2, 4)).betti_rows() == [
        (0, 0, 0, 0),
        (1, 0, 0, 0),
        (2, 1, 0, 1),
        (3, 3, 0, 0),
    ]
    assert normalized_complex(sphere_model(2, 4)).betti_rows() == [
        (0, 0, 0, 0),
        (1, 0, 0, 0),
        (2, 1, 0, 1),
        (3, 0, 0, 0),
    ]


@pytest.mark.parametrize("model", MODELS, ids=lambda m: m.name)
def test_complexes_agree(model):
    """Normalized chains compute the same homology with smaller matrices."""
    assoc = associated_complex(model)
    norm = normalized_complex(model)
    assert assoc.d_squared_is_zero()
    assert norm.d_squared_is_zero()
    for q in range(assoc.top):
        assert assoc.homology_rank(q) == norm.homology_rank(q)
        assert norm.dim(q) <= assoc.dim(q)


def test_rank_bounds():
    cc = associated_complex(delta_model(1, 3))
    with pytest.raises(ValueError):
        cc.homology_rank(cc.top)
    with pytest.raises(ValueError):
        cc.homology_rank(-1)


def test_betti_csv_shape():
    text = associated_complex(sphere_model(2, 4)).betti_csv()
    lines = text.strip().split("\n")
    assert lines[0] == "degree,dim,rank_d,betti"
    assert lines[3] == "2,1,0,1"


def test_normalized_subspace():
    dm = delta_model(1, 3)
    sub = normalized_subspace(dm, 1)
    assert [dm.element_str(x) for x in sub] == ["0-0 + 0-1"]
    for x in sub:
        for r in range(1, x.degree + 1):
            assert not dm.apply_generator(("d", r), x)
    # degree 0 is all of the module
    assert len(normalized_subspace(dm, 0)) == 2


def test_cycle_subspace():
    dm = delta_model(1, 3)
    assert cycle_subspace(dm, 1) == []
    am = algebra_model(2, 4, 2)
    z = am.fundamental_class()
    cycles = cycle_subspace(am, 2)
    strs = {am.element_str(x) for x in cycles}
    assert strs == {"(0-1-2)", "(0-1-2)*(0-1-2)"}
    for x in cycles:
        assert is_cycle(am, x, "normalized")
    assert any(x == z for x in cycles)


def test_is_cycle_modes():
    dm = delta_model(1, 3)
    edge = dm.element([(0, 1)], 1)
    degenerate = dm.element([(0, 0)], 1)
    assert not is_cycle(dm, edge, "associated")
    # both faces of a degenerate edge coincide, so the face sum cancels
    assert is_cycle(dm, degenerate, "associated")
    assert not is_cycle(dm, degenerate, "normalized")
    assert not is_cycle(dm, edge, "normalized")
    with pytest.raises(ValueError):
        is_cycle(dm, edge, "reduced")


def test_same_class():
    dm = delta_model(1, 3)
    v0 = dm.element([(0,)], 0)
    v1 = dm.element([(1,)], 0)
    # the simplex is connected, so any two vertices agree in H_0
    assert same_class(dm, v0, v1)
    assert not same_class(dm, v0, dm.zero(0))
    with pytest.raises(NotACycleError):
        same_class(dm, dm.element([(0, 1)], 1), dm.zero(1))
    sm = sphere_model(2, 4)
    top = sm.fundamental_class()
    assert not same_class(sm, top, sm.zero(2))


def test_element_vector_roundtrip():
    dm = delta_model(1, 3)
    cc = associated_complex(dm)
    x = dm.element([(0, 1), (1, 1)], 1)
    vec = element_vector(dm, cc.labels[1], x)
    assert bin(vec).count("1") == 2
    assert cc.is_cycle_vector(1, 0) and not cc.is_cycle_vector(1, vec)
    assert cc.boundary_vector(1, vec) != 0
    # d then d is zero on every basis vector
    for k in range(cc.dim(2)):
        assert cc.boundary_vector(1, cc.boundary_vector(2, 1 << k)) == 0
