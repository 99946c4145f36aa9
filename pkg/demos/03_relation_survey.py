"""Sweep the whole relation catalog over a window and print the tallies."""

import time

from simpdelta.relations import check_relation, relation_names

WINDOW = 8

t0 = time.perf_counter()
for name in relation_names(max_k=4):
    res = check_relation(name, WINDOW)
    status = "ok" if res.passed else f"FAILED at {res.witness}"
    print(f"{name:12s} {res.cases:6d} cases  {status}  ({res.description})")
print(f"total {time.perf_counter() - t0:.2f}s on window i+j <= {WINDOW}")

# recursion-1 deserves a closer look: the recursion it checks is false
# at the single bidegree (1, 0), so the checker pins the known defect
# there (exactly d1 (x) id) and verifies equality everywhere else.
# Reconstructing the two sides by hand shows the discrepancy:
from simpdelta.transforms import dwyer_defect, em_equal, face0_left

lhs = dwyer_defect(1)
rhs = dwyer_defect(0).suspend() + dwyer_defect(0) * face0_left()
rep = em_equal(lhs, rhs, 6)
print(f"\nliteral k=1 recursion on the full window: equal = {rep.equal}, "
      f"witness = {rep.witness}")
print(f"  left only there:  {[(str(a), str(b)) for a, b in rep.left_only]}")
print(f"  right only there: {[(str(a), str(b)) for a, b in rep.right_only]}")
rep2 = em_equal(lhs, rhs, 6, min_total=2)
print(f"away from the i+j < 2 corner: equal = {rep2.equal} "
      f"({rep2.bidegrees_checked} bidegrees)")
