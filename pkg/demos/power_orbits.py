"""
Complements for powers of the regular nilpotent.

For e the single Jordan block of size n, the k-th power splits into blocks of
sizes q+1 and q.  The staircase subalgebra built by witness_fig1 has exactly
the orbit's dimension and meets the centraliser of e^k trivially, so every
such orbit is strange.  This script walks through n = 6 and then shows the
complement survives a move along the Slodowy slice.
"""

from strangeorbits import ratlin
from strangeorbits.lie import centralizer_basis, gl, is_subalgebra
from strangeorbits.partitions import Partition, power_orbit_dim
from strangeorbits.ratlin import unit
from strangeorbits.strange import fig1_witness, intersection_dim, sheet_check
from strangeorbits.strange.witnesses import power_nilpotent

n = 6
for k in range(1, n):
    h = fig1_witness(n, k, gl(n)).h
    gx = centralizer_basis(power_nilpotent(n, k), gl(n))
    print(f"k={k}: dim h = {h.dim:2d} (orbit {power_orbit_dim(n, k):2d}), "
          f"closed={is_subalgebra(h)}, dim(g^x meet h) = {intersection_dim(gx, h)}")

# the principal case: h is the matrices with zero first row
w = fig1_witness(n, 1, gl(n))
print("\nrows used by h for k=1:", sorted({i for m in w.h.mats for i in range(n) if any(m[i])}))

# one explicit point of the slice plus random ones
z = w.e + unit(n, n - 1, 0)
rep = sheet_check(Partition([n]), w.h, 20, ratlin.make_rng(7), extra_points=[z])
print(f"\nslice points checked: {rep.samples}, complements: {rep.samples_ok}, "
      f"regular semisimple reached: {rep.regular_semisimple_hit}")
