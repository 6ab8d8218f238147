"""Finite abstract simplicial complexes.

A simplex is a strictly increasing tuple of internal vertex indices; a
complex stores, per dimension, the set of all its simplices (always closed
under taking faces).  External vertex names are arbitrary strings; internal
indices are just the ranks of the sorted label list, so two complexes built
from the same labelled facets are identical regardless of input order.

Instances are immutable after construction and safe to share between
threads; every operation on them returns a new complex.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

from .errors import SubcomplexError, UnknownVertexError

Simplex = tuple[int, ...]


class SimplicialComplex:
    __slots__ = ("labels", "_index", "_simplices", "_sorted", "_facets")

    def __init__(self, labels: Iterable[str], closed_simplices: dict) -> None:
        """Build from already face-closed data; use the factories instead."""
        label_tuple = tuple(labels)
        object.__setattr__(self, "labels", label_tuple)
        object.__setattr__(
            self, "_index", {lab: i for i, lab in enumerate(label_tuple)}
        )
        object.__setattr__(
            self,
            "_simplices",
            {d: frozenset(s) for d, s in closed_simplices.items() if s},
        )
        object.__setattr__(self, "_sorted", {})
        object.__setattr__(self, "_facets", None)

    def __setattr__(self, name, value):
        raise AttributeError("SimplicialComplex is immutable")

    # -- factories ---------------------------------------------------------

    @classmethod
    def empty(cls) -> "SimplicialComplex":
        return cls((), {})

    @classmethod
    def from_label_facets(cls, facets: Iterable[Iterable[str]]) -> "SimplicialComplex":
        """Face closure of the given facets, with labels preserved.

        Vertex order inside a facet is irrelevant; internal indices follow
        the sorted order of the labels.
        """
        facet_list = [tuple(f) for f in facets]
        label_set = sorted({lab for f in facet_list for lab in f})
        index = {lab: i for i, lab in enumerate(label_set)}
        by_dim: dict[int, set] = {}
        for f in facet_list:
            idx = tuple(sorted(index[lab] for lab in set(f)))
            for r in range(1, len(idx) + 1):
                bucket = by_dim.setdefault(r - 1, set())
                bucket.update(combinations(idx, r))
        return cls(label_set, by_dim)

    @classmethod
    def from_index_simplices(
        cls, labels: Iterable[str], simplices: Iterable[Simplex]
    ) -> "SimplicialComplex":
        """Face closure of index simplices over an existing label list.

        Only labels that actually occur in a simplex are kept.
        """
        label_tuple = tuple(labels)
        simplex_list = [tuple(s) for s in simplices]
        used = sorted({i for s in simplex_list for i in s})
        rename = {old: new for new, old in enumerate(used)}
        kept = [label_tuple[i] for i in used]
        by_dim: dict[int, set] = {}
        for s in simplex_list:
            idx = tuple(sorted(rename[i] for i in s))
            for r in range(1, len(idx) + 1):
                bucket = by_dim.setdefault(r - 1, set())
                bucket.update(combinations(idx, r))
        return cls(kept, by_dim)

    # -- basic queries -----------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.labels)

    @property
    def dim(self) -> int:
        """Dimension of the complex; -1 for the empty complex."""
        return max(self._simplices, default=-1)

    def is_empty(self) -> bool:
        return not self._simplices

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(self._simplices.get(d, ())) for d in range(self.dim + 1))

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * f for d, f in enumerate(self.f_vector()))

    def n_simplices(self) -> int:
        return sum(len(s) for s in self._simplices.values())

    def simplices(self, d: int) -> tuple[Simplex, ...]:
        """All d-simplices, sorted lexicographically."""
        cached = self._sorted.get(d)
        if cached is None:
            cached = tuple(sorted(self._simplices.get(d, ())))
            self._sorted[d] = cached
        return cached

    def all_simplices(self) -> Iterator[Simplex]:
        for d in range(self.dim + 1):
            yield from self.simplices(d)

    def has_simplex(self, s: Simplex) -> bool:
        return s in self._simplices.get(len(s) - 1, ())

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownVertexError(label) from None

    def has_vertex(self, label: str) -> bool:
        return label in self._index

    def simplex_labels(self, s: Simplex) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in s)

    def contains_labelled(self, labels: Iterable[str]) -> bool:
        """Is the given label set a simplex of this complex?"""
        try:
            idx = tuple(sorted(self._index[lab] for lab in labels))
        except KeyError:
            return False
        return self.has_simplex(idx)

    def facets(self) -> tuple[Simplex, ...]:
        """Maximal simplices, sorted by (dimension, lexicographic order)."""
        if self._facets is None:
            non_maximal: set = set()
            for d in range(1, self.dim + 1):
                for s in self._simplices.get(d, ()):
                    non_maximal.update(combinations(s, len(s) - 1))
            result = []
            for d in range(self.dim + 1):
                for s in self.simplices(d):
                    if s not in non_maximal:
                        result.append(s)
            object.__setattr__(self, "_facets", tuple(result))
        return self._facets

    def label_facets(self) -> list[tuple[str, ...]]:
        return [self.simplex_labels(f) for f in self.facets()]

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        """True when every simplex of self is a simplex of other (by labels)."""
        if not all(other.has_vertex(lab) for lab in self.labels):
            return False
        translate = [other.index_of(lab) for lab in self.labels]
        for s in self.all_simplices():
            if not other.has_simplex(tuple(sorted(translate[i] for i in s))):
                return False
        return True

    # -- equality ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.labels == other.labels and self._simplices == other._simplices

    def __hash__(self) -> int:
        return hash((self.labels, frozenset(self._simplices.items())))

    def __repr__(self) -> str:
        return (
            f"SimplicialComplex(vertices={self.n_vertices}, "
            f"f_vector={self.f_vector()})"
        )


class SubcomplexPair:
    """A complex together with a subcomplex of it, for relative homology.

    The subcomplex must be simplex-wise contained in the ambient complex
    (compared through vertex labels).
    """

    __slots__ = ("ambient", "sub")

    def __init__(self, ambient: SimplicialComplex, sub: SimplicialComplex) -> None:
        if not sub.is_subcomplex_of(ambient):
            raise SubcomplexError(
                "sub is not a subcomplex of the ambient complex"
            )
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "sub", sub)

    def __setattr__(self, name, value):
        raise AttributeError("SubcomplexPair is immutable")

    def sub_simplices_in_ambient(self) -> set:
        """Simplices of the subcomplex in the ambient index convention."""
        translate = [self.ambient.index_of(lab) for lab in self.sub.labels]
        return {
            tuple(sorted(translate[i] for i in s))
            for s in self.sub.all_simplices()
        }

    def __repr__(self) -> str:
        return f"SubcomplexPair(ambient={self.ambient!r}, sub={self.sub!r})"
