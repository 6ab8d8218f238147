"""Vertex-by-vertex manifold probing through local homology.

A vertex of an n-manifold interior has local homology ``Z`` concentrated
in degree n; a boundary vertex has none at all.  Any other local homology
pattern certifies that no neighbourhood of the vertex is Euclidean, which
is the computational content of the wedge and cone obstructions.  The
probe is a necessary test only: a clean report says "consistent with", it
never certifies an actual manifold.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .complexes import SimplicialComplex
from .homology import HomologyGroup, HomologySummary, local_homology

INTERIOR_LIKE = "interior_like"
BOUNDARY_LIKE = "boundary_like"
NOT_LOCALLY_EUCLIDEAN = "not_locally_euclidean"

CONSISTENT_CLOSED = "consistent_with_closed_n_manifold"
CONSISTENT_WITH_BOUNDARY = "consistent_with_n_manifold_with_boundary"
NOT_A_MANIFOLD = "not_a_manifold"


@dataclass(frozen=True)
class VertexVerdict:
    """Classification of one vertex by its local homology."""

    vertex: str
    category: str
    dimension: int | None = None  # interior dimension when interior_like
    witness: tuple[int, HomologyGroup] | None = None
    local: HomologySummary | None = None

    def describe(self) -> str:
        if self.category == INTERIOR_LIKE:
            return f"interior-like (dimension {self.dimension})"
        if self.category == BOUNDARY_LIKE:
            return "boundary-like"
        degree, group = self.witness
        return f"not locally euclidean (H_{degree} local = {group})"


def _star_dimension(k: SimplicialComplex, v: str) -> int:
    vi = k.index_of(v)
    return max(len(s) for s in k.all_simplices() if vi in s) - 1


def vertex_verdict(k: SimplicialComplex, v: str) -> VertexVerdict:
    """Classify ``v`` against the expected pattern of its star dimension.

    A vertex whose incident facets have dimension n is interior-like only
    when its local homology is ``Z`` exactly in degree n (so a cone point
    of two triangles, whose local homology sits in degree 1, fails even
    though the group itself is ``Z``).  The witness is the nonzero group
    of highest degree that breaks the pattern.
    """
    summary = local_homology(k, v)
    nonzero = summary.nonzero()
    if not nonzero:
        return VertexVerdict(v, BOUNDARY_LIKE, local=summary)
    expected = _star_dimension(k, v)
    if len(nonzero) == 1 and nonzero.get(expected) == HomologyGroup(1):
        return VertexVerdict(v, INTERIOR_LIKE, dimension=expected, local=summary)
    offending = [
        d for d, g in nonzero.items() if d != expected or g != HomologyGroup(1)
    ]
    degree = max(offending)
    return VertexVerdict(
        v, NOT_LOCALLY_EUCLIDEAN, witness=(degree, nonzero[degree]), local=summary
    )


@dataclass(frozen=True)
class PseudomanifoldFlags:
    """Combinatorial sanity flags complementing the homological probe."""

    pure: bool
    ridge_condition: bool
    strongly_connected: bool
    closed_mode: bool  # ridges required in exactly two facets, else at most two

    def as_tuple(self) -> tuple[bool, bool, bool]:
        return (self.pure, self.ridge_condition, self.strongly_connected)


def pseudomanifold_check(
    k: SimplicialComplex, closed: bool = True
) -> PseudomanifoldFlags:
    """Purity, the ridge condition, and strong connectedness of facets.

    In closed mode every (n-1)-simplex must lie in exactly two
    n-simplices; in boundary mode at most two.
    """
    n = k.dim
    if n < 0:
        return PseudomanifoldFlags(True, True, True, closed)
    facets = k.facets()
    pure = all(len(f) == n + 1 for f in facets)
    top = k.simplices(n)
    if n == 0:
        return PseudomanifoldFlags(pure, True, len(top) <= 1, closed)
    ridge_count = {r: 0 for r in k.simplices(n - 1)}
    for f in top:
        for r in combinations(f, n):
            ridge_count[r] += 1
    counts = ridge_count.values()
    ridge_condition = (
        all(c == 2 for c in counts) if closed else all(c <= 2 for c in counts)
    )
    by_ridge: dict = {}
    for i, f in enumerate(top):
        for r in combinations(f, n):
            by_ridge.setdefault(r, []).append(i)
    seen = {0} if top else set()
    queue = [0] if top else []
    while queue:
        current = queue.pop()
        for r in combinations(top[current], n):
            for j in by_ridge[r]:
                if j not in seen:
                    seen.add(j)
                    queue.append(j)
    strongly_connected = len(seen) == len(top)
    return PseudomanifoldFlags(pure, ridge_condition, strongly_connected, closed)


@dataclass(frozen=True)
class ObstructionReport:
    """Aggregate manifold verdict for a whole complex."""

    overall: str
    verdicts: tuple
    inferred_dimension: int | None
    flags: PseudomanifoldFlags
    witness_vertex: str | None = None
    witness: tuple[int, HomologyGroup] | None = None
    reason: str | None = None

    def verdict_for(self, label: str) -> VertexVerdict:
        for verdict in self.verdicts:
            if verdict.vertex == label:
                return verdict
        raise KeyError(label)

    def headline(self) -> str:
        if self.overall == NOT_A_MANIFOLD:
            if self.witness is not None:
                degree, group = self.witness
                return (
                    f"NOT A MANIFOLD: vertex {self.witness_vertex!r}, "
                    f"H_{degree} local = {group}"
                )
            return f"NOT A MANIFOLD: vertex {self.witness_vertex!r}, {self.reason}"
        if self.overall == CONSISTENT_CLOSED:
            if self.inferred_dimension is None:
                return "CONSISTENT WITH A CLOSED MANIFOLD (no vertices)"
            return f"CONSISTENT WITH A CLOSED {self.inferred_dimension}-MANIFOLD"
        if self.inferred_dimension is None:
            return "CONSISTENT WITH A MANIFOLD WITH BOUNDARY (no interior vertices)"
        return (
            f"CONSISTENT WITH A {self.inferred_dimension}-MANIFOLD WITH BOUNDARY"
        )

    def lines(self) -> list[str]:
        out = [self.headline()]
        mode = "exactly 2" if self.flags.closed_mode else "at most 2"
        out.append(
            f"pseudomanifold: pure={self.flags.pure} "
            f"ridges({mode})={self.flags.ridge_condition} "
            f"strongly_connected={self.flags.strongly_connected}"
        )
        for verdict in self.verdicts:
            out.append(f"  {verdict.vertex:<12} {verdict.describe()}")
        return out

    def records(self) -> dict:
        return {
            "overall": self.overall,
            "inferred_dimension": self.inferred_dimension,
            "witness_vertex": self.witness_vertex,
            "witness": None
            if self.witness is None
            else {
                "degree": self.witness[0],
                "rank": self.witness[1].free_rank,
                "torsion": list(self.witness[1].torsion),
            },
            "reason": self.reason,
            "pseudomanifold": {
                "pure": self.flags.pure,
                "ridge_condition": self.flags.ridge_condition,
                "strongly_connected": self.flags.strongly_connected,
                "closed_mode": self.flags.closed_mode,
            },
            "vertices": [
                {
                    "vertex": verdict.vertex,
                    "category": verdict.category,
                    "dimension": verdict.dimension,
                    "witness": None
                    if verdict.witness is None
                    else {
                        "degree": verdict.witness[0],
                        "rank": verdict.witness[1].free_rank,
                        "torsion": list(verdict.witness[1].torsion),
                    },
                }
                for verdict in self.verdicts
            ],
        }


def obstruction_report(k: SimplicialComplex) -> ObstructionReport:
    """Classify every vertex and aggregate a manifold verdict.

    The witness vertex is the lexicographically least offender.  Mixed
    interior dimensions also disqualify the complex even though each
    single vertex looks Euclidean.
    """
    verdicts = tuple(vertex_verdict(k, lab) for lab in sorted(k.labels))
    offenders = [v for v in verdicts if v.category == NOT_LOCALLY_EUCLIDEAN]
    interior_dims = sorted({v.dimension for v in verdicts if v.category == INTERIOR_LIKE})
    has_boundary = any(v.category == BOUNDARY_LIKE for v in verdicts)
    flags = pseudomanifold_check(k, closed=not has_boundary)

    if offenders:
        first = offenders[0]
        return ObstructionReport(
            NOT_A_MANIFOLD,
            verdicts,
            interior_dims[0] if len(interior_dims) == 1 else None,
            flags,
            witness_vertex=first.vertex,
            witness=first.witness,
            reason="vertex is not locally euclidean",
        )
    if len(interior_dims) > 1:
        expected = interior_dims[-1]
        mismatch = next(
            v
            for v in verdicts
            if v.category == INTERIOR_LIKE and v.dimension != expected
        )
        return ObstructionReport(
            NOT_A_MANIFOLD,
            verdicts,
            None,
            flags,
            witness_vertex=mismatch.vertex,
            witness=None,
            reason=(
                f"interior dimension {mismatch.dimension} conflicts with {expected}"
            ),
        )
    inferred = interior_dims[0] if interior_dims else None
    overall = CONSISTENT_WITH_BOUNDARY if has_boundary else CONSISTENT_CLOSED
    return ObstructionReport(overall, verdicts, inferred, flags)
