"""Simple undirected graphs with bitset neighborhoods and structural analysis.

Vertices are dense indices 0..n-1. Each vertex stores its open and closed
neighborhoods as Python integers used as bit masks, so set intersections and
cardinalities inside the solvers reduce to ``&`` plus ``int.bit_count()``.
Graphs are immutable after construction and safe to share across workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field

# One machine-word tier is the common case; multi-word masks degrade gracefully
# up to this hard cap.
MAX_VERTICES = 512


class Graph:
    """A simple undirected graph on vertices 0..n-1.

    Rejects self-loops, duplicate edges, and out-of-range endpoints.
    """

    __slots__ = ("n", "edges", "adj", "closed", "deg", "_full_mask")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        if n > MAX_VERTICES:
            raise ValueError(f"vertex count {n} exceeds cap {MAX_VERTICES}")
        self.n = n
        adj = [0] * n
        seen = set()
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) has endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge ({key[0]},{key[1]})")
            seen.add(key)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.edges = tuple(sorted(seen))
        self.adj = tuple(adj)
        self.closed = tuple(adj[v] | (1 << v) for v in range(n))
        self.deg = tuple(adj[v].bit_count() for v in range(n))
        self._full_mask = (1 << n) - 1

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        """Bit mask with one bit per vertex."""
        return self._full_mask

    def neighbors(self, v: int):
        return bits(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def is_connected(self) -> bool:
        """BFS over neighborhood masks; the empty graph counts as connected."""
        if self.n <= 1:
            return True
        reached = 1
        frontier = 1
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= self.adj[v]
            frontier = grow & ~reached
            reached |= frontier
        return reached == self._full_mask

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def bits(mask: int):
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(members) -> int:
    """Bit mask for an iterable of vertex indices."""
    m = 0
    for v in members:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class StructuralProfile:
    """Derived structural data of a graph.

    ``core`` is the set of vertices that are neither isolated, leaves, nor
    support vertices (a support vertex is one adjacent to a degree-1 vertex).
    ``delta_star`` is the minimum degree over the core, or None when the core
    is empty.
    """

    n: int
    m: int
    delta: int
    Delta: int
    isolated: frozenset = field(repr=False)
    leaves: frozenset = field(repr=False)
    supports: frozenset = field(repr=False)
    core: frozenset = field(repr=False)
    delta_star: int | None = None
    odd_vertices: frozenset = field(default=frozenset(), repr=False)
    even_vertices: frozenset = field(default=frozenset(), repr=False)
    is_connected: bool = False
    is_tree: bool = False

    @property
    def leaf_count(self) -> int:
        return len(self.leaves)

    @property
    def support_count(self) -> int:
        return len(self.supports)

    @property
    def odd_count(self) -> int:
        return len(self.odd_vertices)


def structural_profile(g: Graph) -> StructuralProfile:
    """Compute degrees, leaf/support/core partition, and parity classes."""
    n = g.n
    deg = g.deg
    delta = min(deg) if n else 0
    Delta = max(deg) if n else 0
    isolated = frozenset(v for v in range(n) if deg[v] == 0)
    leaves = frozenset(v for v in range(n) if deg[v] == 1)
    leaf_mask = mask_of(leaves)
    supports = frozenset(v for v in range(n) if g.adj[v] & leaf_mask)
    core = frozenset(range(n)) - isolated - leaves - supports
    delta_star = min((deg[v] for v in core), default=None)
    odd = frozenset(v for v in range(n) if deg[v] % 2 == 1)
    even = frozenset(range(n)) - odd
    return StructuralProfile(
        n=n,
        m=g.m,
        delta=delta,
        Delta=Delta,
        isolated=isolated,
        leaves=leaves,
        supports=supports,
        core=core,
        delta_star=delta_star,
        odd_vertices=odd,
        even_vertices=even,
        is_connected=g.is_connected(),
        is_tree=g.is_tree(),
    )
