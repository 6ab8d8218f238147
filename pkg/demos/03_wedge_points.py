"""Why the one-point union of two closed surfaces is never a surface.

Gluing two copies of a closed surface at one vertex doubles the local
top homology there: the wedge point carries Z^2 in degree 2 where a
surface interior point must carry a single Z.  (It also picks up a Z in
degree 1, because deleting the wedge point disconnects the two copies.)
The probe turns this into a verdict with the offending group as witness,
while every other vertex still looks like a clean interior point.
"""

from localhom import builtin, local_homology, obstruction_report, wedge

for name in ["octahedron", "torus7", "rp2_6"]:
    m = builtin(name)
    base = sorted(m.labels)[0]
    w = wedge(m, base, m, base)
    print(f"{name} wedged with itself at vertex {base}:")
    summary = local_homology(w, "w")
    for line in summary.lines():
        print(f"    {line}")
    report = obstruction_report(w)
    print(f"    {report.headline()}")
    clean = [v.vertex for v in report.verdicts if v.category == "interior_like"]
    print(f"    all {len(clean)} other vertices are interior-like\n")
