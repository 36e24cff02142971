"""Brute-force polyhedral ground truth, independent of the graph theory.

Two generator-only computations cross-check every combinatorial answer
in the package:

* ``brute_force_facets`` enumerates facet hyperplanes from generator
  subsets and a rank test, knowing nothing about graphs;
* ``fm_membership`` decides cone membership by eliminating the
  multiplier variables of ``sum_i t_i g_i = x, t >= 0`` — equalities by
  exact substitution, the remaining multipliers by Fourier-Motzkin
  combination in index order.  The surviving rows describe the cone in
  point space and are cached per generator tuple.

The gates here are deliberately tight: the oracle exists for
verification, not production.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .cone import Hyperplane, membership, _clear_denominators
from .errors import EnumerationGateError
from .facets import facets
from .graph import DEFAULT_MAX_VERTICES, Graph, bipartite_component_count, edge_vectors
from .rational import Rational, dot, nullspace, primitive, rational_rank, rref

ORACLE_MAX_GENERATORS = 24
ORACLE_MAX_DIMENSION = 10
_ROW_LIMIT = 200_000  # safety valve against Fourier-Motzkin blowup


def _check_gate(generators, dimension: int):
    if len(generators) > ORACLE_MAX_GENERATORS:
        raise EnumerationGateError(
            f"{len(generators)} generators exceed the oracle gate of "
            f"{ORACLE_MAX_GENERATORS}")
    if dimension > ORACLE_MAX_DIMENSION:
        raise EnumerationGateError(
            f"dimension {dimension} exceeds the oracle gate of "
            f"{ORACLE_MAX_DIMENSION}")


def _as_int_tuples(generators) -> tuple[tuple[int, ...], ...]:
    gens = tuple(tuple(int(c) for c in g) for g in generators)
    if gens:
        width = len(gens[0])
        for g in gens:
            if len(g) != width:
                raise ValueError("generators of mixed dimension")
    return gens


@lru_cache(maxsize=None)
def _facet_data(generators: tuple[tuple[int, ...], ...]):
    """(inward primitive normal, on-generator indices) per facet.

    Scans all (d-1)-subsets of the generators (d = rank).  A subset of
    rank d-1 determines, up to scale, one normal inside the generator
    span orthogonal to it; the normal survives if every generator lies
    on one closed side and the on-hyperplane generators still have rank
    d-1.  Cones of rank <= 1 have no facet besides the apex.
    """
    gens = list(generators)
    d = rational_rank(gens)
    if d <= 1:
        return ()
    basis, _ = rref(gens)  # span basis, d rows
    found: dict[tuple[int, ...], tuple[int, ...]] = {}
    on_sets: list[set[int]] = []
    for subset in itertools.combinations(range(len(gens)), d - 1):
        # A subset inside a known facet spans that facet's hyperplane and
        # would reproduce its normal.
        if any(on.issuperset(subset) for on in on_sets):
            continue
        chosen = [gens[i] for i in subset]
        if rational_rank(chosen) != d - 1:
            continue
        # normal = c . basis with <normal, s> = 0 for s in the subset
        system = [[dot(b, s) for b in basis] for s in chosen]
        kernel = nullspace(system, d)
        if len(kernel) != 1:
            continue
        coeffs = kernel[0]
        normal = primitive([
            sum(c * b[col] for c, b in zip(coeffs, basis))
            for col in range(len(gens[0]))])
        values = [dot(normal, g) for g in gens]
        if any(v > 0 for v in values) and any(v < 0 for v in values):
            continue
        if all(v <= 0 for v in values):
            normal = tuple(-c for c in normal)
            values = [-v for v in values]
        on = tuple(i for i, v in enumerate(values) if v == 0)
        if rational_rank([gens[i] for i in on]) != d - 1:
            continue
        if normal not in found:
            found[normal] = on
            on_sets.append(set(on))
    return tuple(sorted(found.items()))


def _is_unit_vector(normal: tuple[int, ...]) -> bool:
    return sum(normal) == 1 and all(c in (0, 1) for c in normal)


def brute_force_facets(generators) -> tuple[Hyperplane, ...]:
    """Facet hyperplanes of the cone spanned by the generators.

    Normals are primitive and untagged; a coordinate normal is presented
    with the generators on its nonnegative side, any other with the
    generators on its nonpositive side (matching the orientation the
    graph-derived halfspaces use).
    """
    gens = _as_int_tuples(generators)
    _check_gate(gens, len(gens[0]) if gens else 0)
    planes = []
    for inward, _ in _facet_data(gens):
        presented = inward if _is_unit_vector(inward) else tuple(-c for c in inward)
        planes.append(Hyperplane(presented, None))
    return tuple(planes)


def brute_force_facet_generator_sets(generators) -> frozenset[frozenset[int]]:
    """Facets identified by their generator index sets."""
    gens = _as_int_tuples(generators)
    _check_gate(gens, len(gens[0]) if gens else 0)
    return frozenset(frozenset(on) for _, on in _facet_data(gens))


@lru_cache(maxsize=None)
def _projection_rows(generators: tuple[tuple[int, ...], ...],
                     dimension: int) -> tuple[tuple[int, ...], ...]:
    """Rows r with: x in cone(generators) iff r . x >= 0 for every row."""
    q = len(generators)
    n = dimension
    # Equalities sum_i t_i g_i[v] - x_v = 0 over columns (t_0..t_{q-1}, x_0..x_{n-1}).
    equalities = []
    for v in range(n):
        row = [Fraction(g[v]) for g in generators] + [Fraction(0)] * n
        row[q + v] = Fraction(-1)
        equalities.append(row)
    reduced, pivots = rref(equalities)

    outputs: set[tuple[int, ...]] = set()
    pivot_rows: dict[int, Sequence[Fraction]] = {}
    for row, piv in zip(reduced, pivots):
        if piv < q:
            pivot_rows[piv] = row
        else:
            # No multipliers left: an equality purely between coordinates.
            eq = primitive(row[q:])
            outputs.add(eq)
            outputs.add(tuple(-c for c in eq))
    free = [i for i in range(q) if i not in pivot_rows]
    index_of = {t: pos for pos, t in enumerate(free)}
    width = len(free) + n

    def seed(i: int) -> tuple[tuple[int, ...], frozenset[int]]:
        row = [Fraction(0)] * width
        if i in pivot_rows:
            # t_i >= 0 with t_i substituted from its equality row.
            src = pivot_rows[i]
            for j in free:
                row[index_of[j]] = -src[j]
            for v in range(n):
                row[len(free) + v] = -src[q + v]
        else:
            row[index_of[i]] = Fraction(1)
        return primitive(row) if any(row) else None, frozenset([i])

    rows: dict[tuple[int, ...], frozenset[int]] = {}
    for i in range(q):
        row, ancestors = seed(i)
        if row is None:
            continue
        if not any(row[:len(free)]):
            outputs.add(row[len(free):])
        elif row not in rows or len(rows[row]) > 1:
            rows[row] = ancestors

    for eliminated, col in enumerate(range(len(free))):
        positive, negative, kept = [], [], {}
        for row, ancestors in rows.items():
            if row[col] > 0:
                positive.append((row, ancestors))
            elif row[col] < 0:
                negative.append((row, ancestors))
            else:
                kept[row] = ancestors
        for (prow, panc), (nrow, nanc) in itertools.product(positive, negative):
            ancestors = panc | nanc
            # Imbert's bound: wider ancestries are provably redundant.
            if len(ancestors) > eliminated + 2:
                continue
            combo = [prow[col] * b - nrow[col] * a for a, b in zip(prow, nrow)]
            if not any(combo):
                continue
            row = primitive(combo)
            if not any(row[:len(free)]):
                outputs.add(row[len(free):])
            elif row not in kept or len(kept[row]) > len(ancestors):
                kept[row] = ancestors
        rows = kept
        if len(rows) > _ROW_LIMIT:
            raise EnumerationGateError(
                f"Fourier-Motzkin blowup: {len(rows)} rows while eliminating "
                f"multiplier {eliminated + 1} of {len(free)}")
    for row in rows:
        outputs.add(row[len(free):])
    return tuple(sorted(outputs))


def fm_membership(generators, x: Sequence[Rational]) -> bool:
    """Do nonnegative multipliers exist with ``sum_i t_i g_i = x``?

    Decided against the Fourier-Motzkin projection of the multiplier
    system; agrees with any nonnegative-combination certificate.
    """
    gens = _as_int_tuples(generators)
    n = len(x)
    if gens and len(gens[0]) != n:
        raise ValueError(
            f"vector has dimension {n}, generators have {len(gens[0])}")
    _check_gate(gens, n)
    point = _clear_denominators(x)
    return all(dot(row, point) >= 0 for row in _projection_rows(gens, n))


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _point_battery(g: Graph, combinations: int, random_points: int, seed: int):
    vectors = edge_vectors(g)
    points = [tuple(v) for v in vectors]
    rng = random.Random(seed)
    for _ in range(combinations):
        coeffs = [Fraction(rng.randint(0, 6), rng.randint(1, 4)) for _ in vectors]
        points.append(tuple(
            sum(c * v[k] for c, v in zip(coeffs, vectors))
            for k in range(g.vertex_count)))
    for _ in range(random_points):
        points.append(tuple(
            Fraction(rng.randint(-4, 8), rng.randint(1, 3))
            for _ in range(g.vertex_count)))
    points.append((1,) * g.vertex_count)
    return points


def cross_validate(g: Graph, combinations: int = 25, random_points: int = 25,
                   seed: int = 0,
                   max_vertices: int = DEFAULT_MAX_VERTICES) -> ValidationReport:
    """Run both computation paths against each other on one graph.

    Checks that (1) the rank-criterion facets and the brute-force facets
    coincide as generator sets, (2) the inequality-system membership and
    the Fourier-Motzkin membership agree on edge vectors, random
    nonnegative combinations, random points and the all-ones vector, and
    (3) the component-count dimension formula matches the exact rank.
    Failures are reported with a minimal witness, not raised.
    """
    vectors = edge_vectors(g)
    checks = []

    library_sets = frozenset(frozenset(f.generators_on)
                             for f in facets(g, max_vertices))
    oracle_sets = brute_force_facet_generator_sets(vectors)
    if library_sets == oracle_sets:
        detail = f"{len(oracle_sets)} facets agree"
    else:
        missing = oracle_sets - library_sets
        extra = library_sets - oracle_sets
        detail = (f"facet mismatch: oracle-only {sorted(map(sorted, missing))}, "
                  f"library-only {sorted(map(sorted, extra))}")
    checks.append(Check("facets", library_sets == oracle_sets, detail))

    disagreement = None
    tested = 0
    for point in _point_battery(g, combinations, random_points, seed):
        tested += 1
        lib = membership(g, point, max_vertices).is_member
        orc = fm_membership(vectors, point)
        if lib != orc:
            disagreement = (point, lib, orc)
            break
    if disagreement is None:
        detail = f"{tested} points agree"
    else:
        point, lib, orc = disagreement
        detail = (f"membership mismatch at {point}: "
                  f"inequality system says {lib}, elimination says {orc}")
    checks.append(Check("membership", disagreement is None, detail))

    formula = g.vertex_count - bipartite_component_count(g)
    rank = rational_rank(vectors)
    checks.append(Check(
        "dimension", formula == rank,
        f"vertex count minus bipartite components = {formula}, rank = {rank}"))
    return ValidationReport(tuple(checks))
