"""Local homology: what a space looks like at a single vertex.

The homology of a complex relative to the complex with one vertex
deleted measures the local structure there: an interior point of an
n-manifold gives Z concentrated in degree n, a boundary point gives
nothing at all.  The same groups can be read off the vertex link,
shifted down one degree; the two computations take different routes
through the chain level and agreeing on both free ranks and torsion is a
strong self-check.
"""

from localhom import (
    builtin,
    link,
    local_homology,
    local_homology_multi,
    local_homology_via_link,
    parse_complex,
)

torus = builtin("torus7")
print("torus7 at vertex 1 (an interior point of a surface):")
for line in local_homology(torus, "1").lines():
    print(f"    {line}")

edge = parse_complex("a b")
print("\nendpoint of a single edge (a boundary point):")
print(f"    all groups vanish: {local_homology(edge, 'a').nonzero() == {}}")

# The link route: excision collapses the pair onto the closed star, the
# cone over the link, so degree k corresponds to reduced degree k - 1.
oct_ = builtin("octahedron")
print("\nlink of an octahedron vertex:", link(oct_, "1").f_vector(), "(a 4-cycle)")
print("local homology from the deleted complex:",
      dict(local_homology(oct_, "1").nonzero()))
print("local homology from the link:        ",
      dict(local_homology_via_link(oct_, "1").nonzero()))

for k, name in [(torus, "torus7"), (oct_, "octahedron"), (builtin("rp2_6"), "rp2_6")]:
    for lab in k.labels:
        assert local_homology(k, lab) == local_homology_via_link(k, lab)
print("\nboth routes agree at every vertex of torus7, octahedron, rp2_6.")

# Several punctures at once: relative to the complex off m pairwise
# non-adjacent vertices the top group has rank m.
print("\noctahedron relative to an antipodal vertex pair:")
for line in local_homology_multi(oct_, ["1", "6"]).lines():
    print(f"    {line}")
