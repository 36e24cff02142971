"""Structured documents for CLI output and downstream consumers.

All documents are plain dicts of JSON-safe values built in a fixed
order, so serialized output is deterministic byte for byte.  Rational
coordinates are rendered as exact strings ("3/2"); normals are integer
arrays; vertex order is echoed in every document header.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .cone import (ComponentTag, ConeRepresentation, CoordinateTag, Halfspace,
                   Hyperplane, IndependentSetTag, MembershipResult)
from .facets import Facet
from .graph import Graph
from .lattice import DecompositionResult, MatchingResult
from .oracle import ValidationReport
from .rational import Rational


def parse_rational_vector(text: str) -> tuple[Fraction, ...]:
    """Comma-separated exact rationals: "3/2,0,1" or decimals ("0.5" is
    exactly 1/2)."""
    parts = [p.strip() for p in text.split(",")]
    if parts == [""]:
        raise ValueError("empty vector")
    try:
        return tuple(Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational vector {text!r}: {exc}") from None


def format_rational_vector(x: Sequence[Rational]) -> str:
    return ",".join(str(Fraction(c)) for c in x)


def vector_doc(x: Sequence[Rational]) -> list[str]:
    return [str(Fraction(c)) for c in x]


def tag_doc(tag, g: Graph):
    if tag is None:
        return {"kind": "raw"}
    if isinstance(tag, CoordinateTag):
        return {"kind": "coordinate", "vertex": g.vertices[tag.vertex]}
    if isinstance(tag, IndependentSetTag):
        return {"kind": "independent_set",
                "vertices": [g.vertices[v] for v in tag.vertices]}
    if isinstance(tag, ComponentTag):
        return {"kind": "bipartite_component", "component": tag.component}
    raise TypeError(f"unknown tag {tag!r}")


def hyperplane_doc(plane: Hyperplane, g: Graph) -> dict:
    return {"normal": list(plane.normal), "sense": "=0", "tag": tag_doc(plane.tag, g)}


def halfspace_doc(h: Halfspace, g: Graph) -> dict:
    return {"normal": list(h.plane.normal), "sense": h.sense,
            "tag": tag_doc(h.plane.tag, g)}


def graph_header(g: Graph) -> dict:
    return {"vertices": list(g.vertices),
            "edges": [[g.vertices[i], g.vertices[j]] for i, j in g.edges]}


def representation_doc(rep: ConeRepresentation, g: Graph) -> dict:
    return {"kind": rep.kind,
            "equations": [hyperplane_doc(eq, g) for eq in rep.equations],
            "halfspaces": [halfspace_doc(h, g) for h in rep.halfspaces]}


def facets_doc(facet_list: Sequence[Facet], g: Graph,
               non_facet_faces: Sequence[tuple[int, int]] = ()) -> dict:
    """Facets with both the canonical tag and the generator index set;
    ``non_facet_faces`` lists (vertex, face dimension) pairs for
    coordinate hyperplanes that cut lower-dimensional faces."""
    return {
        "facet_count": len(facet_list),
        "facets": [dict(halfspace_doc(f.halfspace, g),
                        generators_on=list(f.generators_on))
                   for f in facet_list],
        "non_facet_coordinates": [
            {"vertex": g.vertices[v], "face_dimension": dim}
            for v, dim in non_facet_faces],
    }


def membership_doc(x: Sequence[Rational], result: MembershipResult, g: Graph) -> dict:
    doc = {"vector": vector_doc(x), "is_member": result.is_member}
    if result.violated is None:
        doc["violated"] = None
    elif isinstance(result.violated, Halfspace):
        doc["violated"] = halfspace_doc(result.violated, g)
    else:
        doc["violated"] = hyperplane_doc(result.violated, g)
    return doc


def decomposition_doc(b: Sequence[int], result: DecompositionResult, g: Graph) -> dict:
    doc = {"vector": vector_doc(b), "decomposable": bool(result)}
    if result:
        doc["decomposition"] = {
            f"{g.vertices[g.edges[e][0]]} {g.vertices[g.edges[e][1]]}": count
            for e, count in result.decomposition.multiplicities}
        doc["violated"] = None
    else:
        doc["decomposition"] = None
        violated = result.violated
        doc["violated"] = (halfspace_doc(violated, g)
                           if isinstance(violated, Halfspace)
                           else hyperplane_doc(violated, g))
    return doc


def matching_doc(result: MatchingResult, g: Graph) -> dict:
    doc = {"has_perfect_matching": result.has_matching}
    if result.has_matching:
        doc["matching"] = [[g.vertices[g.edges[e][0]], g.vertices[g.edges[e][1]]]
                           for e in result.matching]
        doc["violator"] = None
    else:
        doc["matching"] = None
        doc["violator"] = [g.vertices[v] for v in result.violator]
    return doc


def report_doc(report: ValidationReport) -> dict:
    return {"passed": report.passed,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail}
                       for c in report.checks]}
