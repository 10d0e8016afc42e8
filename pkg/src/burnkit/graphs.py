"""Undirected simple graphs: representation, distances, family recognition.

Graphs are immutable after construction (adjacency stored as tuples), so
every operation in this module is pure and safe to share across threads.
Vertex ids are exactly 0..n-1. Unreachable distances are marked with the
``UNREACHABLE`` sentinel (-1) in user-facing tables; internal callers that
want infinity-like comparisons should use :func:`distance_matrix`, which
substitutes a large finite value.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, TextIO, Union

from .intmath import ceil_sqrt

UNREACHABLE = -1


class GraphFormatError(ValueError):
    """Raised when a graph text file cannot be parsed."""


class Graph:
    """Immutable undirected simple graph on vertices 0..vertex_count-1."""

    __slots__ = ("vertex_count", "adjacency")

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]] = ()):
        if vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        adj: list[list[int]] = [[] for _ in range(vertex_count)]
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u},{v}) out of range for n={vertex_count}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge ({u},{v})")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        self.vertex_count = vertex_count
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(nbrs)) for nbrs in adj
        )

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, in sorted order."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        return max((len(nbrs) for nbrs in self.adjacency), default=0)

    def without_edge(self, u: int, v: int) -> "Graph":
        """Copy of the graph with edge (u, v) removed."""
        if v not in self.adjacency[u]:
            raise ValueError(f"no edge ({u},{v})")
        kept = [(a, b) for a, b in self.edges() if {a, b} != {u, v}]
        return Graph(self.vertex_count, kept)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.vertex_count == other.vertex_count
            and self.adjacency == other.adjacency
        )

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.adjacency))

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, m={self.edge_count})"


@dataclass(frozen=True)
class DistanceTable:
    """Hop distances from one source; UNREACHABLE marks other components."""

    source: int
    dist: tuple[int, ...]


def bfs_distances(g: Graph, source: int) -> DistanceTable:
    """Exact hop distances from ``source`` to every vertex."""
    if not 0 <= source < g.vertex_count:
        raise ValueError(f"invalid source vertex {source}")
    dist = [UNREACHABLE] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for v in g.adjacency[u]:
            if dist[v] == UNREACHABLE:
                dist[v] = du + 1
                queue.append(v)
    return DistanceTable(source=source, dist=tuple(dist))


def closed_ball(g: Graph, center: int, radius: int) -> frozenset[int]:
    """All vertices within ``radius`` hops of ``center`` (center included)."""
    if not 0 <= center < g.vertex_count:
        raise ValueError(f"invalid center vertex {center}")
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    table = bfs_distances(g, center)
    return frozenset(
        v for v, d in enumerate(table.dist) if d != UNREACHABLE and d <= radius
    )


def distance_matrix(g: Graph, infinity: int | None = None) -> list[list[int]]:
    """All-pairs hop distances with unreachable pairs set to ``infinity``.

    Defaults to 2*n, which exceeds every finite distance and every position
    gap a burning sequence can demand.
    """
    inf = 2 * g.vertex_count if infinity is None else infinity
    rows = []
    for s in range(g.vertex_count):
        row = list(bfs_distances(g, s).dist)
        rows.append([inf if d == UNREACHABLE else d for d in row])
    return rows


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex lists of the connected components, each sorted, in id order."""
    seen = [False] * g.vertex_count
    comps = []
    for s in range(g.vertex_count):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        comps.append(sorted(comp))
    return comps


def cycle_vertices(g: Graph) -> list[int]:
    """Vertices on cycles (the 2-core), found by stripping leaves repeatedly."""
    degree = [len(nbrs) for nbrs in g.adjacency]
    queue = deque(v for v in range(g.vertex_count) if degree[v] == 1)
    removed = [False] * g.vertex_count
    while queue:
        u = queue.popleft()
        removed[u] = True
        for v in g.adjacency[u]:
            if not removed[v]:
                degree[v] -= 1
                if degree[v] == 1:
                    queue.append(v)
    return [v for v in range(g.vertex_count) if not removed[v] and degree[v] >= 2]


# --------------------------------------------------------------------------
# Family recognition
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Path:
    n: int


@dataclass(frozen=True)
class Cycle:
    g: int


@dataclass(frozen=True)
class LinearForest:
    parts: tuple[int, ...]  # path orders, descending


@dataclass(frozen=True)
class GeneralizedStar:
    arms: tuple[int, ...]  # arm lengths, descending; at least 3 arms


@dataclass(frozen=True)
class TUnicyclic:
    g: int
    arms: tuple[int, ...]  # arm lengths, descending; at least 1 arm

    @property
    def t(self) -> int:
        return len(self.arms)


@dataclass(frozen=True)
class Other:
    pass


FamilyDescriptor = Union[Path, Cycle, LinearForest, GeneralizedStar, TUnicyclic, Other]


def _component_is_path(g: Graph, comp: list[int]) -> bool:
    if len(comp) == 1:
        return g.degree(comp[0]) == 0
    degs = [g.degree(v) for v in comp]
    return degs.count(1) == 2 and all(d <= 2 for d in degs)


def recognize_family(g: Graph) -> FamilyDescriptor:
    """Most specific structural family of ``g``, with canonical parameters.

    Arms and forest parts come out sorted descending. A plain cycle is
    reported as Cycle, never as a unicyclic graph with no arms. Among
    disconnected graphs only linear forests are recognized; everything
    else falls through to Other.
    """
    n = g.vertex_count
    if n == 0:
        return Other()
    comps = connected_components(g)

    if len(comps) > 1:
        if all(_component_is_path(g, c) for c in comps):
            return LinearForest(tuple(sorted((len(c) for c in comps), reverse=True)))
        return Other()

    m = g.edge_count
    hubs = [v for v in range(n) if g.degree(v) >= 3]

    if not hubs:
        if m == n - 1:
            return Path(n)
        if m == n and n >= 3:  # connected, all degree 2
            return Cycle(n)
        return Other()

    if len(hubs) > 1:
        return Other()

    hub = hubs[0]
    if m == n - 1:
        # tree with a single branch vertex: a generalized star
        arm_comps = _arm_components(g, {hub})
        arms = tuple(sorted((len(c) for c in arm_comps), reverse=True))
        if len(arms) >= 3 and sum(arms) + 1 == n:
            return GeneralizedStar(arms)
        return Other()

    if m == n:
        core = cycle_vertices(g)
        if hub not in core:
            return Other()
        arm_comps = _arm_components(g, set(core))
        arms = tuple(sorted((len(c) for c in arm_comps), reverse=True))
        if arms and sum(arms) + len(core) == n:
            return TUnicyclic(g=len(core), arms=arms)
        return Other()

    return Other()


def _arm_components(g: Graph, excluded: set[int]) -> list[list[int]]:
    """Connected components of the graph minus ``excluded`` vertices."""
    seen = set(excluded)
    comps = []
    for s in range(g.vertex_count):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if v not in seen:
                    seen.add(v)
                    comp.append(v)
                    queue.append(v)
        comps.append(comp)
    return comps


# --------------------------------------------------------------------------
# Order decomposition n = q^2 + r
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class QRDecomposition:
    """n = q*q + r with 1 <= r <= 2q+1, i.e. q = ceil(sqrt(n)) - 1."""

    n: int
    q: int
    r: int


def qr_decompose(n: int) -> QRDecomposition:
    """Decompose n >= 2 as q^2 + r with 1 <= r <= 2q+1.

    The decomposition is unique once we fix q = ceil(sqrt(n)) - 1; perfect
    squares m^2 take q = m-1 and r = 2q+1.
    """
    if n < 2:
        raise ValueError(f"qr_decompose requires n >= 2, got {n}")
    q = ceil_sqrt(n) - 1
    return QRDecomposition(n=n, q=q, r=n - q * q)


# --------------------------------------------------------------------------
# Graph text format
# --------------------------------------------------------------------------

def _data_lines(text: str) -> Iterator[str]:
    for line in text.splitlines():
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            yield stripped


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: "n m" header, then m lines "u v".

    Blank lines and lines starting with '#' are ignored anywhere.
    """
    lines = _data_lines(text)
    try:
        header = next(lines)
    except StopIteration:
        raise GraphFormatError("empty graph file") from None
    fields = header.split()
    if len(fields) != 2:
        raise GraphFormatError(f"expected header 'n m', got {header!r}")
    try:
        n, m = int(fields[0]), int(fields[1])
    except ValueError:
        raise GraphFormatError(f"non-integer header {header!r}") from None
    edges = []
    for line in lines:
        fields = line.split()
        if len(fields) != 2:
            raise GraphFormatError(f"expected edge 'u v', got {line!r}")
        try:
            edges.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise GraphFormatError(f"non-integer edge {line!r}") from None
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(edges)}")
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def read_graph(source: Union[str, TextIO]) -> Graph:
    """Read a graph from a file path or an open text file."""
    if isinstance(source, str):
        with open(source, encoding="utf-8") as fh:
            return parse_graph(fh.read())
    return parse_graph(source.read())


def write_graph(g: Graph, target: Union[str, TextIO]) -> None:
    """Write a graph in the edge-list text format."""
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    payload = "\n".join(lines) + "\n"
    if isinstance(target, str):
        with open(target, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        target.write(payload)
