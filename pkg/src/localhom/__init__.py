"""Exact simplicial homology and local-homology manifold probing.

The package computes absolute, reduced, relative, and local homology of
finite simplicial complexes over the integers (Smith normal form on exact
integer matrices), checks Mayer-Vietoris exactness over the rationals, and
classifies vertices by their local homology to locate non-manifold points.
"""

from .complexes import SimplicialComplex, SubcomplexPair
from .constructions import (
    cone,
    deleted,
    disjoint_union,
    full_subcomplex,
    link,
    prism_product,
    punctured_pair,
    relabel,
    star,
    wedge,
)
from .catalog import builtin, builtin_names
from .chains import augmented_chain_complex, chain_complex, relative_chain_complex
from .exact import (
    IntegerMatrix,
    SnfResult,
    kernel_basis_over_rationals,
    multiply,
    rank_over_rationals,
    smith_normal_form,
)
from .homology import (
    HomologyGroup,
    HomologySummary,
    apex_local_homology_formula,
    homology,
    homology_of_complex,
    local_homology,
    local_homology_multi,
    local_homology_via_link,
    reduced_homology,
    relative_homology,
)
from .mayer_vietoris import MvDecomposition, RationalMap, induced_map, mv_exactness_check
from .probe import (
    ObstructionReport,
    VertexVerdict,
    obstruction_report,
    pseudomanifold_check,
    vertex_verdict,
)
from .scx import parse_complex, read_complex, to_scx, write_complex

__all__ = [
    "SimplicialComplex",
    "SubcomplexPair",
    "IntegerMatrix",
    "SnfResult",
    "HomologyGroup",
    "HomologySummary",
    "MvDecomposition",
    "RationalMap",
    "ObstructionReport",
    "VertexVerdict",
    "apex_local_homology_formula",
    "augmented_chain_complex",
    "builtin",
    "builtin_names",
    "chain_complex",
    "cone",
    "deleted",
    "disjoint_union",
    "full_subcomplex",
    "homology",
    "homology_of_complex",
    "induced_map",
    "kernel_basis_over_rationals",
    "link",
    "local_homology",
    "local_homology_multi",
    "local_homology_via_link",
    "multiply",
    "mv_exactness_check",
    "obstruction_report",
    "parse_complex",
    "prism_product",
    "pseudomanifold_check",
    "punctured_pair",
    "rank_over_rationals",
    "read_complex",
    "reduced_homology",
    "relabel",
    "relative_chain_complex",
    "relative_homology",
    "smith_normal_form",
    "star",
    "to_scx",
    "vertex_verdict",
    "wedge",
    "write_complex",
]
