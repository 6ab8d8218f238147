"""Homology groups with integer coefficients.

Each group is reported as a free rank plus invariant factors (torsion
numbers, each dividing the next) read off the Smith normal forms of the
boundary matrices: in degree k the free rank is
``dim ker(boundary_k) - rank(boundary_{k+1})`` and the torsion is the set
of diagonal entries of ``boundary_{k+1}`` exceeding 1.

Alongside absolute and reduced homology this module computes relative
homology of pairs, local homology at one or several vertices, the same
local homology through the vertex link (an excision identity used as a
cross-check), and the predicted local homology at a cone apex.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .chains import (
    ChainComplex,
    augment,
    augmented_chain_complex,
    chain_complex,
    relative_chain_complex,
)
from .complexes import SimplicialComplex, SubcomplexPair
from .constructions import deleted, full_subcomplex, link
from .errors import AdjacentVerticesError, LocalhomError
from .exact import smith_normal_form


@dataclass(frozen=True, repr=False)
class HomologyGroup:
    """A finitely generated abelian group ``Z^rank + Z/t1 + Z/t2 + ...``."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __repr__(self) -> str:
        return f"HomologyGroup({self})"

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        if any(t < 2 for t in self.torsion):
            raise ValueError("torsion coefficients must be at least 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError("torsion coefficients must form a divisibility chain")

    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        """
        >>> str(HomologyGroup(1))
        'Z'
        >>> str(HomologyGroup(2, (2,)))
        'Z^2 + Z/2'
        >>> str(HomologyGroup(0))
        '0'
        """
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


ZERO_GROUP = HomologyGroup(0, ())


def group_direct_sum(*groups: HomologyGroup) -> HomologyGroup:
    """Direct sum, renormalized to invariant-factor form."""
    rank = sum(g.free_rank for g in groups)
    primary: dict[int, list[int]] = {}
    for g in groups:
        for t in g.torsion:
            n = t
            p = 2
            while p * p <= n:
                if n % p == 0:
                    e = 0
                    while n % p == 0:
                        n //= p
                        e += 1
                    primary.setdefault(p, []).append(p**e)
                p += 1
            if n > 1:
                primary.setdefault(n, []).append(n)
    for factors in primary.values():
        factors.sort(reverse=True)
    invariant = []
    while any(primary.values()):
        layer = 1
        for p in sorted(primary):
            if primary[p]:
                layer *= primary[p].pop(0)
        invariant.append(layer)
    return HomologyGroup(rank, tuple(sorted(invariant)))


class HomologySummary:
    """Per-degree homology groups of one computation.

    Degrees outside the computed span are zero; two summaries compare
    equal when they have the same nonzero groups degree by degree.
    """

    __slots__ = ("_groups", "span", "euler_characteristic", "reduced")

    def __init__(self, groups: dict, span: tuple[int, int], reduced: bool = False):
        nonzero = {d: g for d, g in groups.items() if not g.is_zero()}
        object.__setattr__(self, "_groups", nonzero)
        object.__setattr__(self, "span", span)
        object.__setattr__(
            self,
            "euler_characteristic",
            sum((-1) ** d * g.free_rank for d, g in nonzero.items()),
        )
        object.__setattr__(self, "reduced", reduced)

    def __setattr__(self, name, value):
        raise AttributeError("HomologySummary is immutable")

    def group(self, degree: int) -> HomologyGroup:
        return self._groups.get(degree, ZERO_GROUP)

    def nonzero(self) -> dict:
        return dict(self._groups)

    def degrees(self) -> range:
        lo, hi = self.span
        if self._groups:
            lo = min(lo, min(self._groups))
            hi = max(hi, max(self._groups))
        return range(lo, hi + 1)

    def max_nonzero_degree(self):
        return max(self._groups, default=None)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomologySummary):
            return NotImplemented
        return self._groups == other._groups

    def __hash__(self):
        return hash(frozenset(self._groups.items()))

    def records(self) -> list[dict]:
        """JSON-ready rows ``{"degree": k, "rank": r, "torsion": [...]}``."""
        return [
            {
                "degree": d,
                "rank": self.group(d).free_rank,
                "torsion": list(self.group(d).torsion),
            }
            for d in self.degrees()
        ]

    def lines(self) -> list[str]:
        tilde = "~" if self.reduced else ""
        return [f"H{tilde}_{d} = {self.group(d)}" for d in self.degrees()]

    def __repr__(self) -> str:
        body = ", ".join(f"H_{d}={g}" for d, g in sorted(self._groups.items()))
        return f"HomologySummary({body or '0'})"


def homology(c: ChainComplex, reduced: bool = False) -> HomologySummary:
    """Homology of a chain complex; ``reduced`` adjoins the augmentation.

    The augmentation sums the degree-0 coefficients, so the reduced flag
    is meaningful for the chain complex of a complex; on other complexes
    the boundary-squared check rejects it.
    """
    if reduced and c.offset == 0:
        c = augment(c)
    c.check_boundary_squared()
    if not c.bases:
        return HomologySummary({}, (0, 0), reduced)
    n = [len(b) for b in c.bases]
    snfs = [smith_normal_form(m) for m in c.boundaries]
    groups = {}
    for i, size in enumerate(n):
        rank_out = snfs[i].rank
        if i + 1 < len(snfs):
            rank_in = snfs[i + 1].rank
            torsion = snfs[i + 1].invariant_factors
        else:
            rank_in, torsion = 0, ()
        groups[c.offset + i] = HomologyGroup(size - rank_out - rank_in, torsion)
    # Degree -1 only ever carries a class for the empty complex; keep the
    # rendered span at 0 otherwise.
    low = 0 if reduced else c.offset
    return HomologySummary(groups, (low, c.top_degree), reduced)


def homology_of_complex(k: SimplicialComplex, reduced: bool = False) -> HomologySummary:
    """Absolute (or reduced) homology of a complex."""
    if reduced:
        return homology(augmented_chain_complex(k), reduced=True)
    return homology(chain_complex(k))


def reduced_homology(k: SimplicialComplex) -> HomologySummary:
    return homology_of_complex(k, reduced=True)


def relative_homology(pair: SubcomplexPair) -> HomologySummary:
    """Homology of the quotient chain complex of a pair."""
    return homology(relative_chain_complex(pair))


def local_homology(k: SimplicialComplex, v: str) -> HomologySummary:
    """Homology of ``k`` relative to the complex with ``v`` deleted.

    Detects the local structure at ``v``: an interior point of an
    n-manifold gives ``Z`` in degree n and nothing else.
    """
    k.index_of(v)
    return relative_homology(SubcomplexPair(k, deleted(k, v)))


def local_homology_multi(k: SimplicialComplex, vs) -> HomologySummary:
    """Homology of ``k`` relative to the full subcomplex off a vertex set.

    The vertices must be pairwise non-adjacent so their open stars are
    disjoint; an offending pair is reported in the raised error.
    """
    labels = list(vs)
    if not labels:
        raise LocalhomError("vertex set must be nonempty")
    if len(set(labels)) != len(labels):
        raise LocalhomError("vertex set has repeats")
    for lab in labels:
        k.index_of(lab)
    for a, b in combinations(sorted(labels), 2):
        if k.contains_labelled((a, b)):
            raise AdjacentVerticesError(a, b)
    keep = [lab for lab in k.labels if lab not in set(labels)]
    return relative_homology(SubcomplexPair(k, full_subcomplex(k, keep)))


def shifted_up(summary: HomologySummary, span: tuple[int, int]) -> HomologySummary:
    groups = {d + 1: g for d, g in summary.nonzero().items()}
    return HomologySummary(groups, span)


def local_homology_via_link(k: SimplicialComplex, v: str) -> HomologySummary:
    """Local homology computed from the vertex link.

    Excision collapses the pair onto the closed star, which is the cone on
    the link, so the degree-k local group is the reduced degree-(k-1)
    homology of the link.  An isolated vertex has the empty link, whose
    reduced homology has one class in degree -1; that shifts to the
    expected ``Z`` in degree 0.
    """
    k.index_of(v)
    link_reduced = reduced_homology(link(k, v))
    return shifted_up(link_reduced, (0, max(k.dim, 0)))


def apex_local_homology_formula(m: SimplicialComplex) -> HomologySummary:
    """Predicted local homology at the apex of the cone over ``m``.

    The cone is contractible, so the long exact sequence of the pair
    collapses to a degree shift: the apex group in degree k is the reduced
    homology of ``m`` in degree k - 1.
    """
    return shifted_up(reduced_homology(m), (0, max(m.dim + 1, 0)))
