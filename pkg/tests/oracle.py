"""Independent brute-force oracle used to pin expected test values.

Everything here is deliberately written from scratch: its own face
closure, its own boundary matrices, and its own Gaussian elimination over
the rationals and over GF(2).  Free ranks come from rational Betti
numbers; the count of even torsion coefficients comes from the GF(2)
Betti numbers through the universal-coefficient bookkeeping
``b_k(F2) = b_k(Q) + t_k + t_{k-1}`` with ``t_k`` the number of even
invariant factors in degree k.  None of it touches the package's Smith
normal form path.
"""

from fractions import Fraction
from itertools import combinations


def closure(facets):
    """All nonempty subsets of the facets, as sorted label tuples."""
    simplices = set()
    for facet in facets:
        verts = sorted(set(facet))
        for r in range(1, len(verts) + 1):
            simplices.update(combinations(verts, r))
    return simplices


def boundary_matrices(facets):
    """Per-degree boundary matrices as row-lists of ints."""
    simplices = closure(facets)
    if not simplices:
        return [], []
    top = max(len(s) for s in simplices) - 1
    graded = [sorted(s for s in simplices if len(s) == d + 1) for d in range(top + 1)]
    matrices = []
    for d in range(1, top + 1):
        rows = {s: i for i, s in enumerate(graded[d - 1])}
        mat = [[0] * len(graded[d]) for _ in graded[d - 1]]
        for j, s in enumerate(graded[d]):
            for drop in range(len(s)):
                face = s[:drop] + s[drop + 1 :]
                mat[rows[face]][j] = -1 if drop % 2 else 1
        matrices.append(mat)
    return graded, matrices


def rank_q(matrix):
    rows = [[Fraction(x) for x in row] for row in matrix]
    rank = 0
    n_cols = len(rows[0]) if rows else 0
    for col in range(n_cols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def rank_gf2(matrix):
    rows = [sum((x & 1) << j for j, x in enumerate(row)) for row in matrix]
    rank = 0
    n_cols = len(matrix[0]) if matrix else 0
    for col in range(n_cols):
        mask = 1 << col
        pivot = next((i for i in range(rank, len(rows)) if rows[i] & mask), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i] & mask:
                rows[i] ^= rows[rank]
        rank += 1
    return rank


def betti_numbers(facets, rank_fn):
    """Betti numbers over the field implied by ``rank_fn``."""
    graded, matrices = boundary_matrices(facets)
    if not graded:
        return []
    sizes = [len(g) for g in graded]
    ranks = [0] + [rank_fn(m) for m in matrices] + [0]
    return [sizes[d] - ranks[d] - ranks[d + 1] for d in range(len(sizes))]


def euler_characteristic(facets):
    simplices = closure(facets)
    return sum((-1) ** (len(s) - 1) for s in simplices)


def torsion_parity(facets):
    """Number of even invariant factors per degree, from the two Betti vectors."""
    over_q = betti_numbers(facets, rank_q)
    over_f2 = betti_numbers(facets, rank_gf2)
    t = []
    prev = 0
    for bq, b2 in zip(over_q, over_f2):
        current = b2 - bq - prev
        t.append(current)
        prev = current
    return t
