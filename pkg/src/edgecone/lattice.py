"""Integer points of bipartite edge cones and perfect matchings.

For a bipartite graph the incidence matrix is totally unimodular, so an
integer vector lies in the edge cone exactly when it is a sum of edge
vectors with nonnegative integer multiplicities.  The decomposition is
computed as an integral transshipment (edges oriented side 1 to side 2,
supplies and demands given by the target vector) solved by shortest
augmenting paths; the all-ones target decides the perfect matching
question.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .cone import Halfspace, Hyperplane, membership
from .errors import GraphRequirementError
from .graph import (DEFAULT_MAX_VERTICES, Graph, VertexSet,
                    independent_sets, neighbor_set)


@dataclass(frozen=True)
class EdgeDecomposition:
    """Nonnegative integer multiplicity per edge index; zero entries are
    omitted.  The weighted sum of edge vectors equals the target."""

    multiplicities: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict[int, int]:
        return dict(self.multiplicities)

    def target(self, g: Graph) -> tuple[int, ...]:
        total = [0] * g.vertex_count
        for edge_index, count in self.multiplicities:
            i, j = g.edges[edge_index]
            total[i] += count
            total[j] += count
        return tuple(total)


@dataclass(frozen=True)
class DecompositionResult:
    decomposition: EdgeDecomposition | None = None
    violated: Halfspace | Hyperplane | None = None

    def __bool__(self) -> bool:
        return self.decomposition is not None


@dataclass(frozen=True)
class MatchingResult:
    has_matching: bool
    matching: tuple[int, ...] | None = None   # edge indices
    violator: VertexSet | None = None          # independent set with |A| > |N(A)|

    def __bool__(self) -> bool:
        return self.has_matching


def parity_check(b) -> bool:
    """Necessary condition for an integer vector to lie in a bipartite
    edge cone: the coordinate sum is even (every edge vector adds 2)."""
    _require_integers(b)
    return sum(b) % 2 == 0


def _require_integers(b):
    for c in b:
        if not isinstance(c, int) or isinstance(c, bool):
            raise ValueError(f"expected integer entries, got {c!r}")


def _require_bipartite(g: Graph, what: str):
    if not g.is_bipartite():
        raise GraphRequirementError(f"{what} requires a bipartite graph")


class _MaxFlow:
    """Edmonds-Karp with integer capacities; arcs scanned in insertion
    order, so results are deterministic."""

    def __init__(self, nodes: int):
        self.adj: list[list[int]] = [[] for _ in range(nodes)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_arc(self, u: int, v: int, capacity: int):
        self.adj[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(capacity)
        self.adj[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def run(self, source: int, sink: int) -> int:
        total = 0
        while True:
            parent_arc = [-1] * len(self.adj)
            parent_arc[source] = -2
            queue = deque([source])
            while queue and parent_arc[sink] == -1:
                u = queue.popleft()
                for arc in self.adj[u]:
                    v = self.to[arc]
                    if self.cap[arc] > 0 and parent_arc[v] == -1:
                        parent_arc[v] = arc
                        queue.append(v)
            if parent_arc[sink] == -1:
                return total
            bottleneck = None
            v = sink
            while v != source:
                arc = parent_arc[v]
                if bottleneck is None or self.cap[arc] < bottleneck:
                    bottleneck = self.cap[arc]
                v = self.to[arc ^ 1]
            v = sink
            while v != source:
                arc = parent_arc[v]
                self.cap[arc] -= bottleneck
                self.cap[arc ^ 1] += bottleneck
                v = self.to[arc ^ 1]
            total += bottleneck


def _transshipment(g: Graph, b) -> dict[int, int] | None:
    """Edge multiplicities summing to ``b``, or None when infeasible.
    Requires a bipartite graph and nonnegative integer entries."""
    n = g.vertex_count
    side1 = set()
    for sides in g.bipartitions:
        side1.update(sides[0])
    supply = sum(b[v] for v in side1)
    demand = sum(b[v] for v in range(n) if v not in side1)
    if supply != demand:
        return None
    source, sink = n, n + 1
    flow = _MaxFlow(n + 2)
    for v in range(n):
        if v in side1:
            flow.add_arc(source, v, b[v])
        else:
            flow.add_arc(v, sink, b[v])
    edge_arcs = []
    for idx, (i, j) in enumerate(g.edges):
        u, w = (i, j) if i in side1 else (j, i)
        edge_arcs.append(len(flow.to))
        flow.add_arc(u, w, supply)
    if flow.run(source, sink) != supply:
        return None
    result = {}
    for idx, arc in enumerate(edge_arcs):
        used = flow.cap[arc ^ 1]  # residual of the reverse arc = flow sent
        if used:
            result[idx] = used
    return result


def integer_decompose(g: Graph, b,
                      max_vertices: int = DEFAULT_MAX_VERTICES) -> DecompositionResult:
    """Write an integer vector as a nonnegative integer combination of
    edge vectors, or certify that none exists.

    Total unimodularity guarantees a decomposition for every integer
    vector in the cone, so infeasibility always comes with the first
    violated membership constraint as proof of absence.  The vertex gate
    applies only to that certificate search; decompositions themselves
    are found in polynomial time.
    """
    _require_bipartite(g, "integer decomposition")
    _require_integers(b)
    if len(b) != g.vertex_count:
        raise ValueError(
            f"vector has dimension {len(b)}, graph has {g.vertex_count} vertices")
    if all(c >= 0 for c in b):
        multiplicities = _transshipment(g, b)
        if multiplicities is not None:
            return DecompositionResult(
                EdgeDecomposition(tuple(sorted(multiplicities.items()))))
    verdict = membership(g, b, max_vertices)
    if verdict.is_member:
        raise AssertionError(
            "membership accepted an integer vector the integral flow "
            "could not decompose; total unimodularity violated")
    return DecompositionResult(violated=verdict.violated)


def has_perfect_matching(g: Graph,
                         max_vertices: int = DEFAULT_MAX_VERTICES) -> MatchingResult:
    """Decide the marriage problem with a certificate either way.

    A bipartite graph has a perfect matching iff the all-ones vector
    lies in its edge cone, i.e. iff every independent set is at most as
    large as its neighbor set.  Positive answers carry a matching;
    negative ones carry the smallest-first violating independent set.
    """
    _require_bipartite(g, "perfect matching decision")
    ones = (1,) * g.vertex_count
    result = integer_decompose(g, ones, max_vertices)
    if result:
        matching = []
        for edge_index, count in result.decomposition.multiplicities:
            if count != 1:
                raise AssertionError(
                    f"all-ones decomposition used edge {edge_index} "
                    f"{count} times")
            matching.append(edge_index)
        return MatchingResult(True, matching=tuple(matching))
    for a in independent_sets(g, max_vertices):
        if len(a) > len(neighbor_set(g, a)):
            return MatchingResult(False, violator=a)
    raise AssertionError(
        "all-ones vector rejected but no independent set violates the "
        "marriage condition")
