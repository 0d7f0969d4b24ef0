"""Simple undirected graphs with exact integer vertex labels.

Graphs are immutable and hashable so derived data (adjacency, distances)
can be cached at module level.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

UNREACHABLE = -1


class PreconditionError(ValueError):
    """An operation's precondition or size guard was violated."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Edges are stored as (u, v) tuples with u < v.  Vertex order is
    significant: relabelings are distinct graphs.
    """

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(
                    f"edge ({u}, {v}) is not an ordered pair of distinct vertices below {self.n}"
                )

    @staticmethod
    def from_edges(n: int, pairs: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, normalizing edge endpoints and rejecting bad input."""
        seen: set[tuple[int, int]] = set()
        for u, v in pairs:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        return Graph(n, frozenset(seen))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges if u < v else (v, u) in self.edges

    def degree(self, v: int) -> int:
        return len(adjacency(self)[v])


@dataclass(frozen=True)
class DistanceTable:
    """All-pairs distances; UNREACHABLE marks pairs in different components."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def dist(self, u: int, v: int) -> int:
        return self.rows[u][v]

    @property
    def connected(self) -> bool:
        return all(UNREACHABLE not in row for row in self.rows)


@dataclass(frozen=True)
class VertexMap:
    """Injective map from positions 0..m-1 to vertex ids."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(set(self.images)) != len(self.images):
            raise ValueError(f"vertex map images are not injective: {self.images}")

    @property
    def m(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]


@lru_cache(maxsize=None)
def adjacency(g: Graph) -> tuple[frozenset[int], ...]:
    """Neighbor sets indexed by vertex."""
    nbrs: list[set[int]] = [set() for _ in range(g.n)]
    for u, v in g.edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    return tuple(frozenset(s) for s in nbrs)


def degrees(g: Graph) -> tuple[int, ...]:
    return tuple(len(s) for s in adjacency(g))


@lru_cache(maxsize=None)
def all_pairs_distances(g: Graph) -> DistanceTable:
    """BFS from every vertex."""
    adj = adjacency(g)
    rows = []
    for src in range(g.n):
        dist = [UNREACHABLE] * g.n
        dist[src] = 0
        queue = deque([src])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if dist[y] == UNREACHABLE:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        rows.append(tuple(dist))
    return DistanceTable(g.n, tuple(rows))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return UNREACHABLE not in all_pairs_distances(g).rows[0]


def is_regular(g: Graph) -> bool:
    return len(set(degrees(g))) <= 1


def transmissions(g: Graph) -> tuple[int, ...]:
    """Row sums of the distance matrix.  Requires a connected graph."""
    table = all_pairs_distances(g)
    if not table.connected:
        raise PreconditionError("transmissions are undefined for a disconnected graph")
    return tuple(sum(row) for row in table.rows)


def is_transmission_regular(g: Graph) -> bool:
    """False for disconnected graphs rather than an error."""
    table = all_pairs_distances(g)
    if not table.connected:
        return False
    return len({sum(row) for row in table.rows}) <= 1


def diameter(g: Graph) -> int:
    table = all_pairs_distances(g)
    if not table.connected:
        raise PreconditionError("diameter is undefined for a disconnected graph")
    if g.n == 0:
        raise PreconditionError("diameter is undefined for the empty graph")
    return max(max(row) for row in table.rows)


def parse_graph6(text: str) -> Graph:
    """Decode a graph6 string (at most 62 vertices)."""
    s = text.strip()
    if not s:
        raise ValueError("empty graph6 string")
    if s[0] == "~":
        raise ValueError("graph6 strings for more than 62 vertices are not supported")
    n = ord(s[0]) - 63
    if not 0 <= n <= 62:
        raise ValueError(f"invalid graph6 header character {s[0]!r}")
    body = s[1:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise ValueError(
            f"graph6 body for {n} vertices needs {need} characters, got {len(body)}"
        )
    bits: list[int] = []
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise ValueError(f"invalid graph6 character {ch!r}")
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    if any(bits[idx:]):
        raise ValueError("nonzero padding bits in graph6 string")
    return Graph(n, frozenset(edges))


def to_graph6(g: Graph) -> str:
    """Encode as graph6 (at most 62 vertices)."""
    if g.n > 62:
        raise ValueError(f"graph6 encoding supports at most 62 vertices, got {g.n}")
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if (i, j) in g.edges else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return "".join(chars)


def parse_edge_list(text: str) -> Graph:
    """Parse an edge-list document: first line is the vertex count, then
    one "u v" pair per line.  Blank lines and '#' comments are ignored.
    """
    n: int | None = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 1:
                raise ValueError(f"line {lineno}: expected the vertex count, got {raw!r}")
            try:
                n = int(tokens[0])
            except ValueError:
                raise ValueError(f"line {lineno}: vertex count is not an integer: {raw!r}") from None
            if n < 0:
                raise ValueError(f"line {lineno}: vertex count must be nonnegative")
            continue
        if len(tokens) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ValueError(f"line {lineno}: edge endpoints are not integers: {raw!r}") from None
        if u == v:
            raise ValueError(f"line {lineno}: self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"line {lineno}: edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        e = (u, v) if u < v else (v, u)
        if e in pairs:
            raise ValueError(f"line {lineno}: duplicate edge {e}")
        pairs.append(e)
    if n is None:
        raise ValueError("edge-list input has no vertex-count line")
    return Graph(n, frozenset(pairs))


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph on the given vertices, relabeled by position in the sequence."""
    seen: set[int] = set()
    for v in vertices:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} is outside 0..{g.n - 1}")
        if v in seen:
            raise ValueError(f"duplicate vertex {v} in induced subgraph selection")
        seen.add(v)
    position = {v: i for i, v in enumerate(vertices)}
    edges = []
    for u, v in g.edges:
        if u in position and v in position:
            a, b = position[u], position[v]
            edges.append((a, b) if a < b else (b, a))
    return Graph(len(vertices), frozenset(edges))


def glue(g: Graph, h: Graph, phi: VertexMap) -> Graph:
    """Add the edges of h to g through phi.

    phi maps the vertices of h into g; creating an edge g already has is an
    error, so edge counts are always additive.
    """
    if phi.m != h.n:
        raise ValueError(f"vertex map covers {phi.m} vertices but the glued graph has {h.n}")
    for img in phi.images:
        if not 0 <= img < g.n:
            raise ValueError(f"vertex map image {img} is outside 0..{g.n - 1}")
    new_edges = set(g.edges)
    for a, b in h.edges:
        u, v = phi(a), phi(b)
        e = (u, v) if u < v else (v, u)
        if e in new_edges:
            raise ValueError(f"gluing would duplicate edge {e}")
        new_edges.add(e)
    return Graph(g.n, frozenset(new_edges))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Exhaustive isomorphism test, guarded to graphs on at most 12 vertices."""
    if max(g.n, h.n) > 12:
        raise PreconditionError(
            f"isomorphism testing is limited to 12 vertices, got {g.n} and {h.n}"
        )
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    dg, dh = degrees(g), degrees(h)
    if sorted(dg) != sorted(dh):
        return False
    adj_g, adj_h = adjacency(g), adjacency(h)

    # Map high-degree vertices first, preferring vertices with already-mapped
    # neighbors so partial mappings fail fast.
    order: list[int] = []
    placed: set[int] = set()
    while len(order) < g.n:
        best = max(
            (v for v in range(g.n) if v not in placed),
            key=lambda v: (len(adj_g[v] & placed), dg[v]),
        )
        order.append(best)
        placed.add(best)

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in range(h.n):
            if w in used or dh[w] != dg[v]:
                continue
            ok = True
            for u, mu in mapping.items():
                if (u in adj_g[v]) != (mu in adj_h[w]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used.add(w)
                if extend(i + 1):
                    return True
                del mapping[v]
                used.remove(w)
        return False

    return extend(0)
