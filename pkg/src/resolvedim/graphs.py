"""Simple-graph core: construction, distances, twins, profiles, composition.

Vertices are dense 0-based integers. Distances between vertices in
different components are stored as the sentinel value n (one past the
largest possible finite distance), so every row is a plain int tuple and
finite distances always compare below the sentinel.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph with sorted adjacency rows."""

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        """Return the number of edges."""
        return sum(len(row) for row in self.adjacency) // 2

    def degree(self, v: int) -> int:
        """Return the degree of v."""
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        """Return True if uv is an edge."""
        return v in self.adjacency[u]

    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as (u, v) with u < v, in sorted order."""
        return tuple(
            (u, v) for u in range(self.n) for v in self.adjacency[u] if u < v
        )


def build_graph(n: int, edges: Sequence[tuple[int, int]]) -> Graph:
    """Build a validated Graph from an order and an edge sequence.

    Duplicate edges (in either orientation) collapse silently. Self-loops
    and out-of-range endpoints raise ValueError naming the offending
    edge index.
    """
    if n < 0:
        raise ValueError("order must be nonnegative")
    rows: list[set[int]] = [set() for _ in range(n)]
    for idx, (u, v) in enumerate(edges):
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge {idx}: endpoint out of range for order {n}: ({u}, {v})")
        if u == v:
            raise ValueError(f"edge {idx}: self-loop at vertex {u}")
        rows[u].add(v)
        rows[v].add(u)
    return Graph(n, tuple(tuple(sorted(row)) for row in rows))


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs shortest-path distances; entry n marks an unreachable pair."""

    n: int
    dist: tuple[tuple[int, ...], ...]

    @property
    def sentinel(self) -> int:
        """Return the value standing for an infinite distance."""
        return self.n

    def is_finite(self, x: int, y: int) -> bool:
        """Return True if y is reachable from x."""
        return self.dist[x][y] < self.n


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """Compute BFS distances from every vertex, sentinel n for unreachable."""
    n = g.n
    rows = []
    for s in range(n):
        row = [n] * n
        row[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            du = row[u]
            for w in g.adjacency[u]:
                if row[w] == n:
                    row[w] = du + 1
                    q.append(w)
        rows.append(tuple(row))
    return DistanceMatrix(n, tuple(rows))


def truncated_distance(d: DistanceMatrix, x: int, y: int, k: int) -> int:
    """Return min(d(x,y), k+1); an unreachable pair maps to k+1."""
    if k <= 0:
        raise ValueError("truncation parameter k must be positive")
    v = d.dist[x][y]
    if v >= d.n:
        return k + 1
    return min(v, k + 1)


def is_twin_pair(g: Graph, u: int, w: int) -> bool:
    """Return True if N(u) - {w} equals N(w) - {u}."""
    if u == w:
        return False
    nu = set(g.adjacency[u]) - {w}
    nw = set(g.adjacency[w]) - {u}
    return nu == nw


@dataclass(frozen=True)
class TwinPartition:
    """All twin pairs plus a greedy partition into pairwise-twin groups."""

    pairs: tuple[tuple[int, int], ...]
    groups: tuple[tuple[int, ...], ...]

    def forced_minimum(self) -> int:
        """Return sum of (|group| - 1): a lower bound on any resolving support."""
        return sum(len(grp) - 1 for grp in self.groups if len(grp) > 1)


def twin_partition(g: Graph) -> TwinPartition:
    """List every twin pair and group vertices by pairwise twin-ness.

    Groups are built greedily in ascending vertex order and each candidate
    is verified against every current member, so no transitivity is
    assumed. Singleton groups are kept so the groups form a partition.
    """
    n = g.n
    pair_set = {
        (u, w) for u in range(n) for w in range(u + 1, n) if is_twin_pair(g, u, w)
    }
    assigned = [False] * n
    groups = []
    for u in range(n):
        if assigned[u]:
            continue
        grp = [u]
        assigned[u] = True
        for w in range(u + 1, n):
            if assigned[w]:
                continue
            if all((x, w) in pair_set for x in grp):
                grp.append(w)
                assigned[w] = True
        groups.append(tuple(grp))
    return TwinPartition(tuple(sorted(pair_set)), tuple(groups))


@dataclass(frozen=True)
class MetricProfile:
    """Eccentricities, diameter, and component structure of a graph.

    `eccentricities` and `diameter` use the sentinel n for infinity;
    the `finite_*` fields ignore unreachable pairs.
    """

    n: int
    eccentricities: tuple[int, ...]
    finite_eccentricities: tuple[int, ...]
    diameter: int
    finite_diameter: int
    connected: bool
    component_ids: tuple[int, ...]
    component_count: int


def metric_profile(g: Graph, d: Optional[DistanceMatrix] = None) -> MetricProfile:
    """Summarize distances: eccentricities, diameter, components."""
    if d is None:
        d = all_pairs_distances(g)
    n = g.n
    comp = [-1] * n
    cid = 0
    for s in range(n):
        if comp[s] != -1:
            continue
        for v in range(n):
            if d.dist[s][v] < n:
                comp[v] = cid
        cid += 1
    eccs = []
    fin_eccs = []
    for v in range(n):
        row = d.dist[v]
        eccs.append(max(row) if n else 0)
        fin_eccs.append(max((x for x in row if x < n), default=0))
    connected = cid <= 1
    diameter = max(eccs, default=0)
    finite_diameter = max(fin_eccs, default=0)
    return MetricProfile(
        n=n,
        eccentricities=tuple(eccs),
        finite_eccentricities=tuple(fin_eccs),
        diameter=diameter,
        finite_diameter=finite_diameter,
        connected=connected,
        component_ids=tuple(comp),
        component_count=cid,
    )


def delta_prime(g: Graph, d: Optional[DistanceMatrix] = None) -> int:
    """Return the largest number of vertices at one common finite distance
    j >= 1 from one vertex (0 when no finite positive distances exist)."""
    if d is None:
        d = all_pairs_distances(g)
    n = g.n
    best = 0
    for v in range(n):
        counts: dict[int, int] = {}
        for x in range(n):
            j = d.dist[v][x]
            if 1 <= j < n:
                counts[j] = counts.get(j, 0) + 1
        if counts:
            best = max(best, max(counts.values()))
    return best


@dataclass(frozen=True)
class SpiderShape:
    """One center of degree >= 3 whose legs are induced paths to the leaves."""

    center: int
    leg_lengths: tuple[int, ...]


@dataclass(frozen=True)
class ExteriorMajor:
    """A major vertex with its terminal leaves and the legs reaching them.

    Legs exclude the major vertex itself and end at the matching terminal,
    aligned index-by-index with `terminals`.
    """

    vertex: int
    terminals: tuple[int, ...]
    terminal_degree: int
    legs: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class TreeProfile:
    """Leaf/major-vertex structure of a tree (is_tree=False otherwise)."""

    is_tree: bool
    end_vertices: tuple[int, ...] = ()
    major_vertices: tuple[int, ...] = ()
    exterior: tuple[ExteriorMajor, ...] = ()
    sigma: int = 0
    ex: int = 0
    spider: Optional[SpiderShape] = None


def tree_profile(g: Graph) -> TreeProfile:
    """Compute leaves, major vertices, exterior majors with legs, and the
    spider descriptor (present iff exactly one major vertex exists)."""
    n = g.n
    d = all_pairs_distances(g)
    prof = metric_profile(g, d)
    if not prof.connected or g.m != n - 1:
        return TreeProfile(is_tree=False)
    leaves = tuple(v for v in range(n) if g.degree(v) == 1)
    majors = tuple(v for v in range(n) if g.degree(v) >= 3)
    exterior = []
    for v in majors:
        terms = []
        for leaf in leaves:
            if all(d.dist[leaf][v] < d.dist[leaf][w] for w in majors if w != v):
                terms.append(leaf)
        if not terms:
            continue
        legs = []
        for leaf in terms:
            # walk the unique tree path leaf -> v, then reverse it
            path = [leaf]
            cur = leaf
            while cur != v:
                cur = min(g.adjacency[cur], key=lambda u: d.dist[u][v])
                path.append(cur)
            path.reverse()
            legs.append(tuple(path[1:]))
        exterior.append(ExteriorMajor(v, tuple(terms), len(terms), tuple(legs)))
    spider = None
    if len(majors) == 1:
        c = majors[0]
        lengths = tuple(sorted((d.dist[c][leaf] for leaf in leaves), reverse=True))
        spider = SpiderShape(c, lengths)
    return TreeProfile(
        is_tree=True,
        end_vertices=leaves,
        major_vertices=majors,
        exterior=tuple(exterior),
        sigma=len(leaves),
        ex=len(exterior),
        spider=spider,
    )


def complement(g: Graph) -> Graph:
    """Return the complement graph on the same vertex set."""
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v)
    ]
    return build_graph(g.n, edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Return g + h side by side; h's vertices shift up by g.n."""
    edges = list(g.edges()) + [(u + g.n, v + g.n) for u, v in h.edges()]
    return build_graph(g.n + h.n, edges)


def join(g: Graph, h: Graph) -> Graph:
    """Return the join: disjoint union plus all edges between the parts."""
    edges = list(g.edges()) + [(u + g.n, v + g.n) for u, v in h.edges()]
    edges += [(u, v + g.n) for u in range(g.n) for v in range(h.n)]
    return build_graph(g.n + h.n, edges)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Return the Cartesian product; vertex (u, v) gets id u * h.n + v."""
    edges = []
    for u in range(g.n):
        for v in range(h.n):
            a = u * h.n + v
            for w in h.adjacency[v]:
                if w > v:
                    edges.append((a, u * h.n + w))
            for x in g.adjacency[u]:
                if x > u:
                    edges.append((a, x * h.n + v))
    return build_graph(g.n * h.n, edges)


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Return the induced subgraph on `vertices`, renumbered densely in
    ascending order of the original ids."""
    keep = sorted(vertices)
    if not keep:
        raise ValueError("vertex selection is empty")
    if len(set(keep)) != len(keep):
        raise ValueError("vertex selection has duplicates")
    for v in keep:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    new_id = {v: i for i, v in enumerate(keep)}
    edges = [
        (new_id[u], new_id[v]) for u, v in g.edges() if u in new_id and v in new_id
    ]
    return build_graph(len(keep), edges)


def clique_number(g: Graph) -> int:
    """Return the exact clique number (branch and bound, small orders)."""
    adj = [set(row) for row in g.adjacency]
    best = 0

    def extend(size: int, cands: list[int]) -> None:
        nonlocal best
        if size > best:
            best = size
        while cands:
            if size + len(cands) <= best:
                return
            v = cands.pop()
            extend(size + 1, [u for u in cands if u in adj[v]])

    extend(0, list(range(g.n)))
    return best
