"""Simple graphs with labeled vertices.

Vertices are identified by their position in ``Graph.vertices`` (the
first-appearance order of the input document); every vector in the rest
of the package is indexed the same way.  Graphs are immutable and all
derived structure (components, bipartitions, adjacency) is computed
eagerly, so instances are safe to share between threads.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import EdgeListParseError, EnumerationGateError

# Enumerating independent sets is exponential in the vertex count; the
# gate keeps it from being triggered by accident.  Override per call.
DEFAULT_MAX_VERTICES = 20

VertexSet = tuple[int, ...]


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: string labels, loop-free deduplicated edges.

    ``edges`` holds index pairs ``(i, j)`` with ``i < j``.  ``components``
    partitions the vertex indices; ``bipartitions[k]`` is ``(side1, side2)``
    for a bipartite component (``side1`` contains the component's smallest
    index) and ``None`` for a non-bipartite one.  An isolated vertex is a
    bipartite component with an empty second side.
    """

    vertices: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]
    neighbors: tuple[VertexSet, ...] = field(init=False, repr=False, compare=False)
    components: tuple[VertexSet, ...] = field(init=False, repr=False, compare=False)
    bipartitions: tuple[tuple[VertexSet, VertexSet] | None, ...] = field(
        init=False, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.vertices)
        if len(set(self.vertices)) != n:
            raise ValueError("duplicate vertex labels")
        seen = set()
        adjacency: list[set[int]] = [set() for _ in range(n)]
        for i, j in self.edges:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i}, {j}) out of range")
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if i > j:
                raise ValueError(f"edge ({i}, {j}) not normalized as i < j")
            if (i, j) in seen:
                raise ValueError(f"duplicate edge ({i}, {j})")
            seen.add((i, j))
            adjacency[i].add(j)
            adjacency[j].add(i)
        object.__setattr__(self, "neighbors",
                           tuple(tuple(sorted(a)) for a in adjacency))
        components, bipartitions = self._split_components()
        object.__setattr__(self, "components", components)
        object.__setattr__(self, "bipartitions", bipartitions)

    def _split_components(self):
        n = len(self.vertices)
        unseen = set(range(n))
        components = []
        bipartitions = []
        while unseen:
            start = min(unseen)
            color = {start: 0}
            queue = deque([start])
            bipartite = True
            while queue:
                v = queue.popleft()
                for w in self.neighbors[v]:
                    if w not in color:
                        color[w] = 1 - color[v]
                        queue.append(w)
                    elif color[w] == color[v]:
                        bipartite = False
            members = tuple(sorted(color))
            unseen.difference_update(members)
            components.append(members)
            if bipartite:
                side1 = tuple(v for v in members if color[v] == 0)
                side2 = tuple(v for v in members if color[v] == 1)
                bipartitions.append((side1, side2))
            else:
                bipartitions.append(None)
        return tuple(components), tuple(bipartitions)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def index_of(self, label: str) -> int:
        try:
            return self.vertices.index(label)
        except ValueError:
            raise KeyError(f"no vertex labeled {label!r}") from None

    def is_bipartite(self) -> bool:
        return all(b is not None for b in self.bipartitions)

    def is_connected(self) -> bool:
        return len(self.components) <= 1


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document.

    One edge per line as two whitespace-separated labels; a line with a
    single label declares an isolated vertex; blank lines and lines
    starting with ``#`` are ignored.  Loops, duplicate edges and lines
    with more than two tokens are rejected with their line number.
    """
    labels: list[str] = []
    index: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    edge_set: set[tuple[int, int]] = set()

    def intern(label: str) -> int:
        if label not in index:
            index[label] = len(labels)
            labels.append(label)
        return index[label]

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) == 1:
            intern(tokens[0])
        elif len(tokens) == 2:
            a, b = tokens
            if a == b:
                raise EdgeListParseError(f"loop edge {a!r} {b!r}", line=lineno)
            i, j = intern(a), intern(b)
            edge = (i, j) if i < j else (j, i)
            if edge in edge_set:
                raise EdgeListParseError(f"duplicate edge {a!r} {b!r}", line=lineno)
            edge_set.add(edge)
            edges.append(edge)
        else:
            raise EdgeListParseError(
                f"expected one or two labels, got {len(tokens)}", line=lineno)
    return Graph(tuple(labels), tuple(edges))


def vertex_set(g: Graph, indices: Iterable[int]) -> VertexSet:
    """Normalize a collection of vertex indices: sorted, deduplicated,
    range-checked against ``g``."""
    s = sorted(set(indices))
    if s and not (0 <= s[0] and s[-1] < g.vertex_count):
        raise ValueError(
            f"vertex index out of range 0..{g.vertex_count - 1}: {s}")
    return tuple(s)


def neighbor_set(g: Graph, a: Iterable[int]) -> VertexSet:
    """All vertices adjacent to at least one member of ``a``."""
    members = vertex_set(g, a)
    out: set[int] = set()
    for v in members:
        out.update(g.neighbors[v])
    return tuple(sorted(out))


def is_independent(g: Graph, a: Iterable[int]) -> bool:
    """True iff no edge of ``g`` has both endpoints in ``a``."""
    members = set(vertex_set(g, a))
    return all(not (members & set(g.neighbors[v])) for v in members)


def independent_sets(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> Iterator[VertexSet]:
    """Yield every nonempty independent set exactly once.

    Order is deterministic: by cardinality, then lexicographically.  The
    empty set is excluded (its supporting hyperplane is degenerate and
    contributes nothing).  Refuses graphs above the vertex gate.
    """
    n = g.vertex_count
    if n > max_vertices:
        raise EnumerationGateError(
            f"{n} vertices exceed the gate of {max_vertices}: refusing "
            f"exponential enumeration of independent sets")
    masks = [0] * n
    for i, j in g.edges:
        masks[i] |= 1 << j
        masks[j] |= 1 << i
    for size in range(1, n + 1):
        for combo in itertools.combinations(range(n), size):
            bits = 0
            for v in combo:
                if masks[v] & bits:
                    break
                bits |= 1 << v
            else:
                yield combo


def bipartite_component_count(g: Graph) -> int:
    """Number of connected components that are bipartite; isolated
    vertices count."""
    return sum(1 for b in g.bipartitions if b is not None)


def edge_vectors(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Column vectors of the vertex-edge incidence matrix, one per edge:
    the sum of the two endpoint unit vectors, in edge order."""
    n = g.vertex_count
    out = []
    for i, j in g.edges:
        vec = [0] * n
        vec[i] = 1
        vec[j] = 1
        out.append(tuple(vec))
    return tuple(out)
