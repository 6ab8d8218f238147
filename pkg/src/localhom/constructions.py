"""Constructions on simplicial complexes.

Covers the local pieces (link, star, vertex deletion, full subcomplexes),
the gluing constructions (cone, wedge, disjoint union), the prism over a
complex (a triangulation of the product with an interval), and relabelling.
All functions are pure: inputs are never modified.
"""

from __future__ import annotations

from typing import Mapping

from .complexes import SimplicialComplex, SubcomplexPair
from .errors import LabelCollisionError, RelabelError, UnknownVertexError


def full_subcomplex(k: SimplicialComplex, keep_labels) -> SimplicialComplex:
    """All simplices of ``k`` whose vertices lie in ``keep_labels``."""
    keep = set(keep_labels)
    for lab in keep:
        if not k.has_vertex(lab):
            raise UnknownVertexError(lab)
    keep_idx = {k.index_of(lab) for lab in keep}
    simplices = [s for s in k.all_simplices() if set(s) <= keep_idx]
    return SimplicialComplex.from_index_simplices(k.labels, simplices)


def deleted(k: SimplicialComplex, v: str) -> SimplicialComplex:
    """Full subcomplex on every vertex except ``v``.

    This is the compact model of the complement of a point: the space of
    ``k`` minus the point ``v`` deformation retracts onto it.
    """
    vi = k.index_of(v)
    simplices = [s for s in k.all_simplices() if vi not in s]
    return SimplicialComplex.from_index_simplices(k.labels, simplices)


def link(k: SimplicialComplex, v: str) -> SimplicialComplex:
    """Simplices disjoint from ``v`` whose join with ``v`` lies in ``k``."""
    vi = k.index_of(v)
    simplices = [
        tuple(i for i in s if i != vi)
        for s in k.all_simplices()
        if vi in s and len(s) > 1
    ]
    return SimplicialComplex.from_index_simplices(k.labels, simplices)


def star(k: SimplicialComplex, v: str) -> SimplicialComplex:
    """Face closure of all simplices containing ``v`` (the closed star)."""
    vi = k.index_of(v)
    simplices = [s for s in k.all_simplices() if vi in s]
    return SimplicialComplex.from_index_simplices(k.labels, simplices)


def cone(k: SimplicialComplex, apex_label: str) -> SimplicialComplex:
    """Add an apex joined to every simplex of ``k``.

    The result has exactly ``2 * n + 1`` simplices when ``k`` has ``n``;
    the cone over the empty complex is the single vertex ``apex_label``.
    """
    if k.has_vertex(apex_label):
        raise LabelCollisionError(
            f"apex label {apex_label!r} is already a vertex of the complex"
        )
    facets = [k.simplex_labels(f) + (apex_label,) for f in k.facets()]
    if not facets:
        facets = [(apex_label,)]
    return SimplicialComplex.from_label_facets(facets)


def disjoint_union(k1: SimplicialComplex, k2: SimplicialComplex) -> SimplicialComplex:
    """Disjoint union; labels are kept apart by ``L.``/``R.`` prefixes."""
    facets = [tuple("L." + lab for lab in f) for f in k1.label_facets()]
    facets += [tuple("R." + lab for lab in f) for f in k2.label_facets()]
    return SimplicialComplex.from_label_facets(facets)


WEDGE_POINT = "w"


def wedge(
    k1: SimplicialComplex, v1: str, k2: SimplicialComplex, v2: str
) -> SimplicialComplex:
    """One-point union of ``k1`` and ``k2`` along the chosen base vertices.

    The identified vertex is labelled ``w``; every other label is prefixed
    with ``L.`` or ``R.`` so the two copies cannot collide.
    """
    if not k1.has_vertex(v1):
        raise UnknownVertexError(v1)
    if not k2.has_vertex(v2):
        raise UnknownVertexError(v2)

    def rename(prefix, base):
        return lambda lab: WEDGE_POINT if lab == base else prefix + lab

    left = rename("L.", v1)
    right = rename("R.", v2)
    facets = [tuple(left(lab) for lab in f) for f in k1.label_facets()]
    facets += [tuple(right(lab) for lab in f) for f in k2.label_facets()]
    return SimplicialComplex.from_label_facets(facets)


def relabel(k: SimplicialComplex, mapping: Mapping[str, str]) -> SimplicialComplex:
    """Rename vertices through a bijection; the structure is unchanged."""
    missing = [lab for lab in k.labels if lab not in mapping]
    if missing:
        raise RelabelError(f"map does not cover vertices: {missing}")
    images = [mapping[lab] for lab in k.labels]
    if len(set(images)) != len(images):
        raise RelabelError("vertex map is not injective on the vertices")
    facets = [tuple(mapping[lab] for lab in f) for f in k.label_facets()]
    return SimplicialComplex.from_label_facets(facets)


def bottom_label(lab: str) -> str:
    """Label of the copy of a vertex on the bottom face of a prism."""
    return lab + ".0"


def top_label(lab: str) -> str:
    return lab + ".1"


def prism_product(k: SimplicialComplex) -> SubcomplexPair:
    """Staircase triangulation of ``k x [0, 1]`` with its bottom copy.

    Each p-simplex ``v0 < ... < vp`` contributes the p + 1 simplices
    ``{v0.0, ..., vi.0, vi.1, ..., vp.1}``; the distinguished subcomplex is
    the bottom copy of ``k`` (labels suffixed ``.0``, top copy ``.1``).
    """
    facets = []
    for f in k.facets():
        labs = k.simplex_labels(f)
        p = len(labs) - 1
        for i in range(p + 1):
            cell = tuple(bottom_label(lab) for lab in labs[: i + 1]) + tuple(
                top_label(lab) for lab in labs[i:]
            )
            facets.append(cell)
    ambient = SimplicialComplex.from_label_facets(facets)
    bottom = SimplicialComplex.from_label_facets(
        [tuple(bottom_label(lab) for lab in f) for f in k.label_facets()]
    )
    return SubcomplexPair(ambient, bottom)


def punctured_pair(pair: SubcomplexPair, v: str) -> SubcomplexPair:
    """Delete a vertex of the subcomplex from both members of a pair.

    Used to compare a product pair against its base: for a prism pair
    ``(K x I, K x 0)`` punctured at a bottom vertex, the relative homology
    agrees degreewise with the local homology of ``K`` at that vertex.
    """
    if not pair.sub.has_vertex(v):
        raise UnknownVertexError(v)
    return SubcomplexPair(deleted(pair.ambient, v), deleted(pair.sub, v))


def complex_intersection(
    k1: SimplicialComplex, k2: SimplicialComplex
) -> SimplicialComplex:
    """Simplices present in both complexes (compared by labels)."""
    facets = [
        k1.simplex_labels(s)
        for s in k1.all_simplices()
        if k2.contains_labelled(k1.simplex_labels(s))
    ]
    return SimplicialComplex.from_label_facets(facets)


def complex_union(
    k1: SimplicialComplex, k2: SimplicialComplex
) -> SimplicialComplex:
    """Union of two complexes living on a shared label space."""
    facets = [k1.simplex_labels(s) for s in k1.facets()]
    facets += [k2.simplex_labels(s) for s in k2.facets()]
    return SimplicialComplex.from_label_facets(facets)
