"""Reading and writing the facet-list file format (``.scx``).

One facet per line as whitespace-separated vertex labels; ``#`` starts a
comment that runs to the end of the line; blank lines are ignored.  Labels
are arbitrary non-whitespace tokens and the order inside a line does not
matter.  A document with no facets denotes the empty complex.
"""

from __future__ import annotations

from .complexes import SimplicialComplex
from .errors import MalformedFacetError


def parse_complex(text: str) -> SimplicialComplex:
    """Parse a facet-list document into the face closure of its facets."""
    facets = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(set(tokens)) != len(tokens):
            dup = next(t for t in tokens if tokens.count(t) > 1)
            raise MalformedFacetError(
                f"facet repeats vertex {dup!r}", line_number=line_number
            )
        facets.append(tuple(tokens))
    return SimplicialComplex.from_label_facets(facets)


def to_scx(k: SimplicialComplex) -> str:
    """Canonical serialization: facets sorted by their sorted label lists.

    The output is byte-stable for a given complex, so golden tests and
    file-based construction pipelines can compare results exactly.
    """
    lines = sorted(tuple(sorted(f)) for f in k.label_facets())
    return "".join(" ".join(f) + "\n" for f in lines)


def read_complex(path) -> SimplicialComplex:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_complex(fh.read())


def write_complex(path, k: SimplicialComplex) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_scx(k))
