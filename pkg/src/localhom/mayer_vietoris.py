"""Mayer-Vietoris exactness checking over the rationals.

For a complex covered by two subcomplexes ``k = a | b`` with distinguished
subcomplexes ``c <= a`` and ``d <= b``, the long exact sequence

    ... -> H_n(a&b, c&d) -> H_n(a,c) + H_n(b,d) -> H_n(k, c|d)
        -> H_{n-1}(a&b, c&d) -> ...

is built explicitly with rational coefficients: the two arrows induced by
inclusions, and the connecting map through the chain-level zig-zag (split
a relative cycle into a piece carried by ``a`` and one carried by ``b``,
take the boundary of the first piece, and correct it into the
intersection pair).  Exactness is then pure rank arithmetic, verified at
every node.

Chains are indexed by label tuples.  Every complex sorts its labels the
same way, so orientation signs agree across all the subcomplexes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chains import relative_chain_complex
from .complexes import SimplicialComplex, SubcomplexPair
from .constructions import complex_intersection, complex_union
from .errors import DecompositionError, InclusionError
from .exact import _rref, kernel_basis_over_rationals


class _Span:
    """Incremental rational span with exact rank bookkeeping."""

    def __init__(self, dim: int):
        self.dim = dim
        self.rows = []  # (leading index, normalized vector)

    def add(self, vec) -> bool:
        """Add a vector; True when it enlarges the span."""
        v = [Fraction(x) for x in vec]
        for lead, row in self.rows:
            if v[lead]:
                coef = v[lead]
                v = [x - coef * y for x, y in zip(v, row)]
        lead = next((i for i, x in enumerate(v) if x), None)
        if lead is None:
            return False
        inv = 1 / v[lead]
        self.rows.append((lead, [x * inv for x in v]))
        self.rows.sort(key=lambda item: item[0])
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)


def _label_boundary(chain: dict) -> dict:
    """Boundary of a chain keyed by sorted label tuples."""
    out: dict = {}
    for simplex, coeff in chain.items():
        for drop in range(len(simplex)):
            face = simplex[:drop] + simplex[drop + 1 :]
            if not face:
                continue
            sign = -1 if drop % 2 else 1
            out[face] = out.get(face, 0) + sign * coeff
    return {s: c for s, c in out.items() if c}


class _PairHomology:
    """Rational homology bases of one relative chain complex.

    The degree-n basis consists of kernel vectors of the boundary (in the
    deterministic order produced by the exact kernel routine) that extend
    the span of the degree-(n+1) boundary columns, so every computation
    that starts from the same pair chooses the same cycles.
    """

    def __init__(self, pair: SubcomplexPair):
        self.pair = pair
        self.cc = relative_chain_complex(pair)
        ambient = pair.ambient
        self._labels = {
            n: [ambient.simplex_labels(s) for s in self.cc.basis(n)]
            for n in self.cc.degrees()
        }
        self._cycles: dict = {}

    def basis_labels(self, n: int) -> list:
        return self._labels.get(n, [])

    def dim_chains(self, n: int) -> int:
        return len(self.basis_labels(n))

    def cycles(self, n: int) -> list:
        """Chosen homology basis at degree n, as integer chain vectors."""
        if n not in self._cycles:
            boundary_out = self.cc.boundary(n)
            boundary_in = self.cc.boundary(n + 1)
            span = _Span(self.dim_chains(n))
            for j in range(boundary_in.cols):
                span.add(boundary_in.column(j))
            chosen = []
            for vec in kernel_basis_over_rationals(boundary_out):
                if span.add(vec):
                    chosen.append(vec)
            self._cycles[n] = chosen
        return self._cycles[n]

    def rank(self, n: int) -> int:
        return len(self.cycles(n))

    def chain_dict(self, n: int, vec) -> dict:
        labels = self.basis_labels(n)
        return {labels[i]: c for i, c in enumerate(vec) if c}

    def express(self, n: int, chain: dict) -> list:
        """Coordinates of a relative cycle in the degree-n homology basis."""
        labels = self.basis_labels(n)
        position = {s: i for i, s in enumerate(labels)}
        target = [Fraction(0)] * len(labels)
        for simplex, coeff in chain.items():
            if coeff == 0:
                continue
            if simplex not in position:
                raise InclusionError(
                    f"chain touches simplex {simplex} outside the relative basis"
                )
            target[position[simplex]] = Fraction(coeff)
        boundary_in = self.cc.boundary(n + 1)
        columns = [list(boundary_in.column(j)) for j in range(boundary_in.cols)]
        cycles = self.cycles(n)
        columns += [list(v) for v in cycles]
        rows = [
            [Fraction(col[i]) for col in columns] + [target[i]]
            for i in range(len(labels))
        ]
        reduced, pivots = _rref(rows)
        n_cols = len(columns)
        if n_cols in pivots:
            raise InclusionError("chain is not a cycle in the span of the basis")
        solution = [Fraction(0)] * n_cols
        for r, c in enumerate(pivots):
            solution[c] = reduced[r][n_cols]
        return solution[boundary_in.cols :]


def _push_chain(chain: dict, target: _PairHomology, n: int) -> dict:
    """Image of a chain under inclusion into another pair's quotient."""
    sub = target.pair.sub
    out = {}
    for simplex, coeff in chain.items():
        if not target.pair.ambient.contains_labelled(simplex):
            raise InclusionError(f"simplex {simplex} is missing from the target pair")
        if not sub.contains_labelled(simplex):
            out[simplex] = coeff
    return out


@dataclass(frozen=True)
class RationalMap:
    """Matrix of a map between rational homology groups in chosen bases."""

    degree: int
    entries: tuple
    rows: int
    cols: int

    @classmethod
    def from_columns(cls, degree: int, columns: list, rows: int) -> "RationalMap":
        entries = tuple(
            tuple(Fraction(columns[j][i]) for j in range(len(columns)))
            for i in range(rows)
        )
        return cls(degree, entries, rows, len(columns))

    def rank(self) -> int:
        if self.rows == 0 or self.cols == 0:
            return 0
        work = [list(row) for row in self.entries]
        _, pivots = _rref(work)
        return len(pivots)

    def nullity(self) -> int:
        return self.cols - self.rank()

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def is_identity(self) -> bool:
        return self.rows == self.cols and all(
            x == (1 if i == j else 0)
            for i, row in enumerate(self.entries)
            for j, x in enumerate(row)
        )

    def compose(self, other: "RationalMap") -> "RationalMap":
        """self after other (matrix product self @ other)."""
        entries = tuple(
            tuple(
                sum(self.entries[i][k] * other.entries[k][j] for k in range(self.cols))
                for j in range(other.cols)
            )
            for i in range(self.rows)
        )
        return RationalMap(other.degree, entries, self.rows, other.cols)


def _validate_pair_inclusion(source: SubcomplexPair, target: SubcomplexPair) -> None:
    if not source.ambient.is_subcomplex_of(target.ambient):
        raise InclusionError("source ambient is not contained in target ambient")
    if not source.sub.is_subcomplex_of(target.sub) and not source.sub.is_empty():
        raise InclusionError("source subcomplex is not contained in target subcomplex")


def induced_map(source: SubcomplexPair, target: SubcomplexPair, degree: int) -> RationalMap:
    """Matrix of the inclusion-induced map on rational homology."""
    _validate_pair_inclusion(source, target)
    sp = _PairHomology(source)
    tp = _PairHomology(target)
    columns = []
    for vec in sp.cycles(degree):
        chain = sp.chain_dict(degree, vec)
        columns.append(tp.express(degree, _push_chain(chain, tp, degree)))
    return RationalMap.from_columns(degree, columns, tp.rank(degree))


class MvDecomposition:
    """Covering data ``k = a | b`` with subcomplexes ``c <= a``, ``d <= b``."""

    __slots__ = ("k", "a", "b", "c", "d", "intersection", "sub_intersection", "y")

    def __init__(
        self,
        k: SimplicialComplex,
        a: SimplicialComplex,
        b: SimplicialComplex,
        c: SimplicialComplex | None = None,
        d: SimplicialComplex | None = None,
    ):
        c = c if c is not None else SimplicialComplex.empty()
        d = d if d is not None else SimplicialComplex.empty()
        for name, part, whole in (
            ("a", a, k),
            ("b", b, k),
            ("c", c, a),
            ("d", d, b),
        ):
            if not part.is_subcomplex_of(whole) and not part.is_empty():
                raise DecompositionError(f"{name} is not a subcomplex of its ambient")
        for s in k.all_simplices():
            labels = k.simplex_labels(s)
            if not (a.contains_labelled(labels) or b.contains_labelled(labels)):
                raise DecompositionError(
                    f"simplex {labels} lies in neither covering piece"
                )
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "intersection", complex_intersection(a, b))
        object.__setattr__(self, "sub_intersection", complex_intersection(c, d))
        object.__setattr__(self, "y", complex_union(c, d))

    def __setattr__(self, name, value):
        raise AttributeError("MvDecomposition is immutable")


@dataclass(frozen=True)
class MvNode:
    """Exactness bookkeeping at one spot of the long sequence."""

    degree: int
    node: str
    dim: int
    incoming_rank: int
    outgoing_rank: int

    @property
    def outgoing_nullity(self) -> int:
        return self.dim - self.outgoing_rank

    @property
    def exact(self) -> bool:
        return self.incoming_rank == self.outgoing_nullity


@dataclass(frozen=True)
class MvReport:
    max_degree: int
    nodes: tuple
    phi: dict
    psi: dict
    delta: dict

    @property
    def exact(self) -> bool:
        return all(node.exact for node in self.nodes)

    def lines(self) -> list[str]:
        out = []
        for node in self.nodes:
            verdict = "exact" if node.exact else "NOT EXACT"
            out.append(
                f"degree {node.degree}: at {node.node:<18} dim={node.dim} "
                f"rank(in)={node.incoming_rank} "
                f"nullity(out)={node.outgoing_nullity}  {verdict}"
            )
        out.append(f"sequence {'exact' if self.exact else 'NOT exact'} "
                   f"at every node up to degree {self.max_degree}")
        return out

    def records(self) -> dict:
        return {
            "max_degree": self.max_degree,
            "exact": self.exact,
            "nodes": [
                {
                    "degree": n.degree,
                    "node": n.node,
                    "dim": n.dim,
                    "incoming_rank": n.incoming_rank,
                    "outgoing_nullity": n.outgoing_nullity,
                    "exact": n.exact,
                }
                for n in self.nodes
            ],
        }


def _connecting_chain(
    decomposition: MvDecomposition, chain: dict
) -> dict:
    """Chain-level zig-zag: the intersection-pair cycle hit by ``chain``.

    Splits the cycle as ``a_part + b_part`` (preferring ``a``), takes the
    boundary of the ``a`` part, and corrects coefficients sitting on the
    ``c`` side so the result satisfies both quotient congruences.
    """
    a, b, c, d = decomposition.a, decomposition.b, decomposition.c, decomposition.d
    a_part, b_part = {}, {}
    for simplex, coeff in chain.items():
        if a.contains_labelled(simplex):
            a_part[simplex] = coeff
        elif b.contains_labelled(simplex):
            b_part[simplex] = coeff
        else:  # unreachable: the decomposition covers k
            raise DecompositionError(f"simplex {simplex} not carried by the cover")
    bound_a = _label_boundary(a_part)
    bound_b = _label_boundary(b_part)
    out = {}
    for simplex in set(bound_a) | set(bound_b):
        if not c.contains_labelled(simplex):
            coeff = bound_a.get(simplex, 0)
        elif not d.contains_labelled(simplex):
            coeff = -bound_b.get(simplex, 0)
        else:
            continue  # lands in the subcomplex of the intersection pair
        if coeff:
            out[simplex] = coeff

    # Internal guards: out == bound_a modulo chains in c, and
    # out == -bound_b modulo chains in d.
    for s in set(out) | set(bound_a):
        if out.get(s, 0) != bound_a.get(s, 0) and not c.contains_labelled(s):
            raise RuntimeError("connecting chain violates the first congruence")
    for s in set(out) | set(bound_b):
        if out.get(s, 0) != -bound_b.get(s, 0) and not d.contains_labelled(s):
            raise RuntimeError("connecting chain violates the second congruence")
    return out


def mv_exactness_check(decomposition: MvDecomposition, max_degree: int) -> MvReport:
    """Build every arrow of the sequence up to ``max_degree`` and test ranks.

    At each node exactness means rank(incoming) == nullity(outgoing); the
    report lists the comparison for the intersection pair, the middle sum,
    and the total pair in every degree.
    """
    m = decomposition
    int_pair = _PairHomology(
        SubcomplexPair(m.intersection, m.sub_intersection)
    )
    left = _PairHomology(SubcomplexPair(m.a, m.c))
    right = _PairHomology(SubcomplexPair(m.b, m.d))
    total = _PairHomology(SubcomplexPair(m.k, m.y))

    def phi(n: int) -> RationalMap:
        columns = []
        for vec in int_pair.cycles(n):
            chain = int_pair.chain_dict(n, vec)
            into_a = left.express(n, _push_chain(chain, left, n))
            into_b = right.express(n, _push_chain(chain, right, n))
            columns.append(into_a + [-x for x in into_b])
        return RationalMap.from_columns(n, columns, left.rank(n) + right.rank(n))

    def psi(n: int) -> RationalMap:
        columns = []
        for pair_hom in (left, right):
            for vec in pair_hom.cycles(n):
                chain = pair_hom.chain_dict(n, vec)
                columns.append(total.express(n, _push_chain(chain, total, n)))
        return RationalMap.from_columns(n, columns, total.rank(n))

    def delta(n: int) -> RationalMap:
        columns = []
        for vec in total.cycles(n):
            chain = total.chain_dict(n, vec)
            columns.append(int_pair.express(n - 1, _connecting_chain(m, chain)))
        return RationalMap.from_columns(n, columns, int_pair.rank(n - 1))

    phis = {n: phi(n) for n in range(max_degree + 1)}
    psis = {n: psi(n) for n in range(max_degree + 1)}
    deltas = {n: delta(n) for n in range(max_degree + 2) if n >= 1}
    deltas[0] = RationalMap(0, (), 0, total.rank(0))

    for n in range(max_degree + 1):
        if not psis[n].compose(phis[n]).is_zero():
            raise RuntimeError(f"psi o phi is nonzero in degree {n}")
        if not deltas[n].compose(psis[n]).is_zero():
            raise RuntimeError(f"delta o psi is nonzero in degree {n}")
        if n + 1 in deltas and not phis[n].compose(deltas[n + 1]).is_zero():
            raise RuntimeError(f"phi o delta is nonzero in degree {n}")

    nodes = []
    for n in range(max_degree + 1):
        incoming_delta = deltas.get(n + 1)
        nodes.append(
            MvNode(
                n,
                "H(A&B, C&D)",
                int_pair.rank(n),
                incoming_delta.rank() if incoming_delta else 0,
                phis[n].rank(),
            )
        )
        nodes.append(
            MvNode(
                n,
                "H(A,C) + H(B,D)",
                left.rank(n) + right.rank(n),
                phis[n].rank(),
                psis[n].rank(),
            )
        )
        nodes.append(
            MvNode(n, "H(K, Y)", total.rank(n), psis[n].rank(), deltas[n].rank())
        )
    return MvReport(max_degree, tuple(nodes), phis, psis, deltas)
