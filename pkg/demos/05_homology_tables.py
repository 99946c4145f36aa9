"""
Homology of the finite models, two ways
=======================================

Every model carries two chain complexes over GF(2): the associated
complex (differential = alternating face sum, which mod 2 is just the
sum) and the normalized complex (nondegenerate part).  They compute
the same homology; the tables below print both so the agreement is
visible, then a couple of sanity checks on representatives.
"""

from simpdelta.homology import (
    associated_complex,
    cycle_subspace,
    normalized_complex,
    same_class,
)
from simpdelta.models import (
    algebra_model,
    boundary_delta_model,
    delta_model,
    sphere_model,
)

models = [
    delta_model(2, 4),            # contractible
    boundary_delta_model(2, 4),   # a circle
    sphere_model(2, 5),
    algebra_model(2, 5, 2),       # polynomial algebra on the 2-sphere
]

for model in models:
    assoc = associated_complex(model)
    norm = normalized_complex(model)
    print(f"\n{model.name}")
    print("  q   dim_assoc  betti_assoc   dim_norm  betti_norm")
    for (q, da, _, ba), (_, dn, _, bn) in zip(
        assoc.betti_rows(), norm.betti_rows()
    ):
        print(f"  {q}   {da:9d}  {ba:11d}   {dn:8d}  {bn:10d}")

# The circle has one 1-dimensional hole.  Perturbing its generating
# cycle by any boundary moves the chain but not the class.
bm = boundary_delta_model(2, 4)
loop = cycle_subspace(bm, 1)[0]
shifted = loop + bm.boundary(bm.element([(0, 0, 1)], 2))
print(f"\ncircle cycle: {bm.element_str(loop)}")
print(f"perturbed:    {bm.element_str(shifted)}")
print("same class:", same_class(bm, loop, shifted))

# The sphere's fundamental class is not a boundary.
sm = sphere_model(2, 5)
z = sm.fundamental_class()
print("sphere class nonzero in homology:",
      not same_class(sm, z, sm.zero(2)))
