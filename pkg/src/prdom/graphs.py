"""Labeled graphs, trees, and forests with dense 0-based vertex labels.

Vertices are always the integers 0..n-1. Adjacency is kept as a tuple of
sorted tuples, which makes every structure hashable-by-content, cheap to
share between operations, and safe to read from multiple threads. Nothing
in this module mutates a graph after construction.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence


class ParseError(ValueError):
    """Malformed textual graph input. Carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class Graph:
    """Simple undirected graph: no loops, no parallel edges."""

    __slots__ = ("n", "adjacency")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n) or not (0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has a label outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u].append(v)
            adj[v].append(u)
        for u, nbrs in enumerate(adj):
            nbrs.sort()
            for i in range(1, len(nbrs)):
                if nbrs[i] == nbrs[i - 1]:
                    raise ValueError(f"duplicate edge ({u}, {nbrs[i]})")
        self.n = n
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(tuple(a) for a in adj)

    @classmethod
    def _from_adjacency(cls, n: int, adjacency: tuple[tuple[int, ...], ...]) -> "Graph":
        """Trusted constructor for internally built, already-valid adjacency."""
        g = object.__new__(cls)
        g.n = n
        g.adjacency = adjacency
        return g

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()!r})"


class Tree:
    """A connected acyclic Graph. Connectivity and edge count are checked."""

    __slots__ = ("graph",)

    def __init__(self, graph: Graph):
        n = graph.n
        if n == 0:
            raise ValueError("a tree needs at least one vertex")
        if graph.m != n - 1:
            raise ValueError(f"tree on {n} vertices must have {n - 1} edges, got {graph.m}")
        if _component_reach(graph.adjacency, 0) != n:
            raise ValueError("graph is not connected")
        self.graph = graph

    @classmethod
    def _wrap(cls, graph: Graph) -> "Tree":
        """Trusted constructor for graphs already known to be trees."""
        t = object.__new__(cls)
        t.graph = graph
        return t

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self.graph.adjacency

    def degree(self, v: int) -> int:
        return self.graph.degree(v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tree):
            return NotImplemented
        return self.graph == other.graph

    def __hash__(self) -> int:
        return hash(self.graph)

    def __repr__(self) -> str:
        return f"Tree(n={self.n}, edges={self.graph.edges()!r})"


class Forest:
    """A graph whose every component is a tree, plus the component partition.

    ``component`` maps each vertex to its component id; components are
    numbered 0, 1, ... by their smallest vertex label.
    """

    __slots__ = ("graph", "component", "ncomponents")

    def __init__(self, graph: Graph):
        comp = [-1] * graph.n
        adj = graph.adjacency
        cid = 0
        for s in range(graph.n):
            if comp[s] >= 0:
                continue
            size = 0
            edges2 = 0
            stack = [s]
            comp[s] = cid
            while stack:
                v = stack.pop()
                size += 1
                edges2 += len(adj[v])
                for u in adj[v]:
                    if comp[u] < 0:
                        comp[u] = cid
                        stack.append(u)
            if edges2 != 2 * (size - 1):
                raise ValueError(f"component containing vertex {s} has a cycle")
            cid += 1
        self.graph = graph
        self.component = tuple(comp)
        self.ncomponents = cid

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self.graph.adjacency

    def component_trees(self) -> list[tuple[Tree, tuple[int, ...]]]:
        """Each component as a densely relabeled Tree with its original labels.

        Returns pairs (tree, labels) where labels[i] is the original label of
        the tree's vertex i.
        """
        buckets: list[list[int]] = [[] for _ in range(self.ncomponents)]
        for v in range(self.n):
            buckets[self.component[v]].append(v)
        out = []
        for verts in buckets:
            index = {old: new for new, old in enumerate(verts)}
            adj = tuple(
                tuple(index[u] for u in self.graph.adjacency[old]) for old in verts
            )
            g = Graph._from_adjacency(len(verts), adj)
            out.append((Tree._wrap(g), tuple(verts)))
        return out

    def __repr__(self) -> str:
        return f"Forest(n={self.n}, components={self.ncomponents})"


def _component_reach(adj: Sequence[Sequence[int]], start: int) -> int:
    seen = bytearray(len(adj))
    seen[start] = 1
    stack = [start]
    count = 0
    while stack:
        v = stack.pop()
        count += 1
        for u in adj[v]:
            if not seen[u]:
                seen[u] = 1
                stack.append(u)
    return count


def parse_edge_list(data: bytes | str) -> Graph:
    """Parse the plain edge-list format.

    First line is the vertex count n, every following non-empty line is one
    edge "u v" with 0-based labels. Errors report the offending line number.
    """
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    lines = text.split("\n")
    if not lines or not lines[0].strip():
        raise ParseError("missing vertex count", line=1)
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise ParseError(f"vertex count is not an integer: {lines[0].strip()!r}", line=1) from None
    if n < 0:
        raise ParseError("vertex count must be non-negative", line=1)
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for idx, raw in enumerate(lines[1:], start=2):
        stripped = raw.strip()
        if not stripped:
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {stripped!r}", line=idx)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer label in {stripped!r}", line=idx) from None
        if not (0 <= u < n) or not (0 <= v < n):
            raise ParseError(f"label outside 0..{n - 1} in {stripped!r}", line=idx)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", line=idx)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ParseError(f"duplicate edge {stripped!r}", line=idx)
        seen.add(key)
        edges.append((u, v))
    return Graph(n, edges)


def emit_edge_list(g: Graph) -> str:
    """Inverse of parse_edge_list, edges sorted."""
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def make_path(n: int) -> Tree:
    """Path 0-1-...-(n-1)."""
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return Tree(Graph(n, ((i, i + 1) for i in range(n - 1))))


def make_star(k: int) -> Tree:
    """Star with center 0 and k leaves 1..k."""
    if k < 1:
        raise ValueError("star needs at least one leaf")
    return Tree(Graph(k + 1, ((0, i) for i in range(1, k + 1))))


def make_double_star(p: int, q: int) -> Tree:
    """Two adjacent centers 0 and 1 with p leaves (2..p+1) and q leaves (p+2..p+q+1)."""
    if p < 1 or q < 1:
        raise ValueError("double star needs at least one leaf on each center")
    edges = [(0, 1)]
    edges.extend((0, i) for i in range(2, p + 2))
    edges.extend((1, i) for i in range(p + 2, p + q + 2))
    return Tree(Graph(p + q + 2, edges))


def make_spider(legs: Sequence[int]) -> Tree:
    """Center 0 with one pendant path per entry of ``legs``; legs are labeled
    consecutively, each from the center outward. An empty ``legs`` gives K1."""
    edges = []
    nxt = 1
    for leg in legs:
        if leg < 1:
            raise ValueError("leg lengths must be positive")
        prev = 0
        for _ in range(leg):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Tree(Graph(nxt, edges))


def leaves_of(t: Tree, v: int) -> frozenset[int]:
    """The leaf neighbors of v (neighbors of degree 1)."""
    if not (0 <= v < t.n):
        raise ValueError(f"vertex {v} outside 0..{t.n - 1}")
    adj = t.adjacency
    return frozenset(u for u in adj[v] if len(adj[u]) == 1)


def _bfs_distances(adj: Sequence[Sequence[int]], start: int) -> list[int]:
    dist = [-1] * len(adj)
    dist[start] = 0
    frontier = [start]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for v in frontier:
            for u in adj[v]:
                if dist[u] < 0:
                    dist[u] = d
                    nxt.append(u)
        frontier = nxt
    return dist


def diameter(t: Tree) -> int:
    """Number of edges on a longest path (0 for K1). Double BFS."""
    adj = t.adjacency
    d0 = _bfs_distances(adj, 0)
    a = d0.index(max(d0))
    da = _bfs_distances(adj, a)
    return max(da)


def longest_path(t: Tree) -> list[int]:
    """A deterministic longest path, as a vertex sequence.

    Among all diameter-realizing paths the result starts at the lowest
    possible label and is lexicographically smallest from there.
    """
    adj = t.adjacency
    n = t.n
    d0 = _bfs_distances(adj, 0)
    a = d0.index(max(d0))
    dist_a = _bfs_distances(adj, a)
    b = dist_a.index(max(dist_a))
    dist_b = _bfs_distances(adj, b)
    diam = dist_a[b]
    # In a tree every eccentricity is realized against one of the two
    # diameter endpoints, so ecc(v) = max(dist_a[v], dist_b[v]).
    start = next(
        v for v in range(n) if max(dist_a[v], dist_b[v]) == diam
    )
    # Root at start; a path from the root is a descent, so greedily take the
    # smallest child whose downward height still reaches the full length.
    parent = [-1] * n
    order = [start]
    parent[start] = start
    for v in order:
        for u in adj[v]:
            if parent[u] < 0:
                parent[u] = v
                order.append(u)
    parent[start] = -1
    height = [0] * n
    for v in reversed(order):
        p = parent[v]
        if p >= 0 and height[v] + 1 > height[p]:
            height[p] = height[v] + 1
    path = [start]
    current = start
    remaining = diam
    while remaining > 0:
        current = next(
            u
            for u in adj[current]
            if parent[u] == current and height[u] >= remaining - 1
        )
        path.append(current)
        remaining -= 1
    return path


def delete_vertices(g: Graph, victims: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Remove a vertex set and densely relabel the remainder.

    Returns (graph, old_to_new) where old_to_new[v] is -1 for removed
    vertices; surviving labels keep their relative order.
    """
    dead = set(victims)
    for v in dead:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
    old_to_new = [-1] * g.n
    k = 0
    for v in range(g.n):
        if v not in dead:
            old_to_new[v] = k
            k += 1
    adj = tuple(
        tuple(old_to_new[u] for u in g.adjacency[v] if u not in dead)
        for v in range(g.n)
        if v not in dead
    )
    return Graph._from_adjacency(k, adj), tuple(old_to_new)


def remove_vertex(t: Tree, v: int) -> Forest:
    """The forest left by deleting one vertex of a tree.

    Survivors are relabeled densely: old label x becomes x if x < v, else
    x - 1. Deleting the single vertex of K1 yields the empty forest.
    """
    if not (0 <= v < t.n):
        raise ValueError(f"vertex {v} outside 0..{t.n - 1}")
    g, _ = delete_vertices(t.graph, (v,))
    return Forest(g)
