"""Halfspace descriptions of the edge cone and exact membership tests.

The edge cone of a graph is the cone spanned by its incidence column
vectors.  It equals the set of vectors with nonnegative coordinates
whose sum over any independent set ``A`` is at most the sum over the
neighbor set of ``A``; the affine hull contributes one balance equation
per bipartite component.  This module builds those constraint systems
and evaluates them with exact rational arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

from .graph import (DEFAULT_MAX_VERTICES, Graph, VertexSet,
                    bipartite_component_count, edge_vectors,
                    independent_sets, is_independent, neighbor_set,
                    vertex_set)
from .rational import Rational, dot, is_primitive, rational_rank

SENSE_GE = ">=0"
SENSE_LE = "<=0"


@dataclass(frozen=True)
class CoordinateTag:
    """Hyperplane of a single vanishing coordinate."""
    vertex: int


@dataclass(frozen=True)
class IndependentSetTag:
    """Hyperplane equating an independent set's coordinate sum with its
    neighbor set's."""
    vertices: VertexSet


@dataclass(frozen=True)
class ComponentTag:
    """Affine-hull balance equation of one bipartite component."""
    component: int


Tag = Union[CoordinateTag, IndependentSetTag, ComponentTag, None]


@dataclass(frozen=True)
class Hyperplane:
    """Primitive integer normal plus the combinatorial origin of the
    hyperplane (``None`` for raw normals, e.g. oracle output)."""

    normal: tuple[int, ...]
    tag: Tag = None

    def __post_init__(self):
        if not is_primitive(self.normal):
            raise ValueError(f"normal must be primitive and nonzero: {self.normal}")


@dataclass(frozen=True)
class Halfspace:
    """Closed halfspace ``<normal, x> >= 0`` or ``<= 0``.

    Coordinate halfspaces carry sense ``>=0``, independent-set ones
    ``<=0`` (the cone always lies on that side).
    """

    plane: Hyperplane
    sense: str

    def __post_init__(self):
        if self.sense not in (SENSE_GE, SENSE_LE):
            raise ValueError(f"bad sense {self.sense!r}")
        tag = self.plane.tag
        if isinstance(tag, CoordinateTag) and self.sense != SENSE_GE:
            raise ValueError("coordinate halfspaces carry sense >=0")
        if isinstance(tag, IndependentSetTag) and self.sense != SENSE_LE:
            raise ValueError("independent-set halfspaces carry sense <=0")

    def margin(self, x: Sequence[Rational]) -> Rational:
        """Nonnegative exactly when ``x`` satisfies the halfspace."""
        value = dot(self.plane.normal, x)
        return value if self.sense == SENSE_GE else -value


@dataclass(frozen=True)
class ConeRepresentation:
    """Affine-hull equations plus halfspaces describing the edge cone."""

    equations: tuple[Hyperplane, ...]
    halfspaces: tuple[Halfspace, ...]
    kind: str  # "full" | "irreducible" | "canonical_bipartite"

    def satisfied_by(self, x: Sequence[Rational]) -> bool:
        return (all(dot(eq.normal, x) == 0 for eq in self.equations)
                and all(h.margin(x) >= 0 for h in self.halfspaces))


def coordinate_halfspace(g: Graph, vertex: int) -> Halfspace:
    n = g.vertex_count
    if not 0 <= vertex < n:
        raise ValueError(f"vertex index out of range: {vertex}")
    normal = tuple(1 if k == vertex else 0 for k in range(n))
    return Halfspace(Hyperplane(normal, CoordinateTag(vertex)), SENSE_GE)


def independent_set_halfspace(g: Graph, a: Iterable[int]) -> Halfspace:
    """Halfspace  sum_{v in A} x_v - sum_{v in N(A)} x_v <= 0."""
    members = vertex_set(g, a)
    if not members:
        raise ValueError("independent set must be nonempty")
    if not is_independent(g, members):
        raise ValueError(f"vertex set {members} is not independent")
    normal = [0] * g.vertex_count
    for v in members:
        normal[v] = 1
    for v in neighbor_set(g, members):
        normal[v] = -1
    return Halfspace(Hyperplane(tuple(normal), IndependentSetTag(members)), SENSE_LE)


def component_equation(g: Graph, component: int) -> Hyperplane:
    """Balance equation of a bipartite component: side-1 sum equals
    side-2 sum (degenerating to ``x_v = 0`` for an isolated vertex)."""
    sides = g.bipartitions[component]
    if sides is None:
        raise ValueError(f"component {component} is not bipartite")
    normal = [0] * g.vertex_count
    for v in sides[0]:
        normal[v] = 1
    for v in sides[1]:
        normal[v] = -1
    return Hyperplane(tuple(normal), ComponentTag(component))


def cone_dimension(g: Graph) -> int:
    """Dimension of the edge cone: vertex count minus the number of
    bipartite components, which must (and does) match the exact rank of
    the incidence columns."""
    dim = g.vertex_count - bipartite_component_count(g)
    rank = rational_rank(edge_vectors(g))
    if rank != dim:
        raise AssertionError(
            f"rank {rank} disagrees with component count formula {dim}")
    return dim


def affine_hull(g: Graph) -> tuple[Hyperplane, ...]:
    """One balance equation per bipartite component (isolated vertices
    included as ``x_v = 0``); non-bipartite components contribute none."""
    return tuple(component_equation(g, k)
                 for k, sides in enumerate(g.bipartitions) if sides is not None)


def full_representation(g: Graph,
                        max_vertices: int = DEFAULT_MAX_VERTICES) -> ConeRepresentation:
    """The complete halfspace description: every coordinate halfspace and
    one halfspace per nonempty independent set, plus the affine hull.

    Halfspaces are ordered coordinates-by-index first, then independent
    sets lexicographically; equal-normal independent-set duplicates keep
    the lexicographically smallest set (none arise for simple graphs,
    the dedup is a stability guarantee).
    """
    coords = [coordinate_halfspace(g, v) for v in range(g.vertex_count)]
    by_normal: dict[tuple[int, ...], Halfspace] = {}
    for a in independent_sets(g, max_vertices):
        h = independent_set_halfspace(g, a)
        by_normal.setdefault(h.plane.normal, h)
    sets = sorted(by_normal.values(), key=lambda h: h.plane.tag.vertices)
    return ConeRepresentation(affine_hull(g), tuple(coords + sets), "full")


@dataclass(frozen=True)
class MembershipResult:
    """Decision plus, on rejection, the first violated constraint in
    deterministic order (coordinates by index, then independent sets by
    size and lexicographic order, then affine equations)."""

    is_member: bool
    violated: Halfspace | Hyperplane | None = None

    def __bool__(self) -> bool:
        return self.is_member


def _clear_denominators(x: Sequence[Rational]) -> tuple[int, ...]:
    """Positive rescale to integers; all cone constraints are homogeneous,
    so satisfaction is unchanged."""
    fracs = [Fraction(c) for c in x]
    scale = math.lcm(*(c.denominator for c in fracs)) if fracs else 1
    return tuple(int(c * scale) for c in fracs)


@lru_cache(maxsize=None)
def _membership_constraints(g: Graph, max_vertices: int):
    coords = tuple(coordinate_halfspace(g, v) for v in range(g.vertex_count))
    sets = tuple(independent_set_halfspace(g, a)
                 for a in independent_sets(g, max_vertices))
    return coords, sets, affine_hull(g)


def membership(g: Graph, x: Sequence[Rational],
               max_vertices: int = DEFAULT_MAX_VERTICES) -> MembershipResult:
    """Exact edge-cone membership via the inequality system.

    ``x`` belongs to the cone iff every coordinate is nonnegative and,
    for every independent set, the set's coordinate sum is at most its
    neighbor set's.  The affine-hull equations are implied by the
    independent-set inequalities (take both sides of each bipartite
    component); they are checked explicitly as well.
    """
    if len(x) != g.vertex_count:
        raise ValueError(
            f"vector has dimension {len(x)}, graph has {g.vertex_count} vertices")
    point = _clear_denominators(x)
    coords, sets, equations = _membership_constraints(g, max_vertices)
    for h in coords:
        if point[h.plane.tag.vertex] < 0:
            return MembershipResult(False, h)
    for h in sets:
        if h.margin(point) < 0:
            return MembershipResult(False, h)
    for eq in equations:
        if dot(eq.normal, point) != 0:
            return MembershipResult(False, eq)
    return MembershipResult(True)
