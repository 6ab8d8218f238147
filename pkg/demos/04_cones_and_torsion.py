"""Cone apexes remember the base: torsion as a manifold obstruction.

A cone is contractible, so its absolute homology is trivial; but the
local homology at the apex is the reduced homology of the base shifted
up one degree (the apex link *is* the base).  Coning the projective
plane therefore plants a Z/2 in degree 2 at the apex, something no point
of any manifold can carry.  Coning a sphere, by contrast, yields a disk:
the apex looks like an interior point and the base looks like boundary,
so the probe reports a manifold with boundary rather than a failure.
"""

from localhom import (
    apex_local_homology_formula,
    builtin,
    cone,
    local_homology,
    obstruction_report,
    reduced_homology,
)

for name in ["rp2_6", "klein8", "torus7", "sphere(2)"]:
    m = builtin(name)
    c = cone(m, "apex")
    print(f"cone over {name}:")
    print(f"    contractible: reduced homology is trivial -> "
          f"{reduced_homology(c).nonzero() == {}}")
    computed = local_homology(c, "apex")
    predicted = apex_local_homology_formula(m)
    print(f"    apex local homology: {dict(computed.nonzero())}")
    print(f"    shifted reduced base homology: {dict(predicted.nonzero())}")
    assert computed == predicted
    print(f"    {obstruction_report(c).headline()}\n")
