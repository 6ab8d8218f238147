"""Mayer-Vietoris over the rationals, arrow by arrow.

For a complex covered by two subcomplexes the long exact sequence ties
the homology of the pieces to the homology of the whole.  The checker
builds all three maps per degree explicitly (the two inclusion-induced
arrows and the connecting map through the chain-level zig-zag) and
verifies rank(in) = nullity(out) at every node.  For the wedge cover the
middle degree-2 map is an isomorphism Z + Z -> Z^2: the two halves'
local classes assemble the wedge point's doubled top group.
"""

from localhom import builtin, full_subcomplex
from localhom.mayer_vietoris import MvDecomposition, mv_exactness_check
from localhom.verification import wedge_decomposition

oct_ = builtin("octahedron")
upper = full_subcomplex(oct_, ["1", "2", "3", "4", "5"])
lower = full_subcomplex(oct_, ["2", "3", "4", "5", "6"])
print("octahedron = upper hemisphere | lower hemisphere:")
report = mv_exactness_check(MvDecomposition(oct_, upper, lower), 3)
for line in report.lines():
    print(f"    {line}")

print("\nwedge of two octahedra, covered by its halves relative to their "
      "deleted stars:")
report = mv_exactness_check(wedge_decomposition(oct_, "1"), 3)
for line in report.lines():
    print(f"    {line}")
middle = report.psi[2]
print(f"\n    middle degree-2 map: {middle.rows}x{middle.cols} of rank "
      f"{middle.rank()} (an isomorphism)")
delta = report.delta[1]
print(f"    connecting map out of degree 1 has rank {delta.rank()}: the "
      "degree-1 class of the pair maps onto the wedge point")
