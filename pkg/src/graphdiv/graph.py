"""Simple undirected graphs over vertices ``0..n-1`` with bitset adjacency.

Vertex sets are plain Python ints used as bitmasks (bit ``v`` set means vertex
``v`` is a member). Python ints are unbounded, so the same representation
covers graphs of any size; the 64-vertex "fast path" is simply the regime where
every mask fits a machine word.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

VertexSet = frozenset


def bits(mask: int) -> Iterator[int]:
    """Yield the members of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        if v < 0:
            raise ValueError(f"negative vertex {v}")
        m |= 1 << v
    return m


def to_set(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))


popcount = int.bit_count


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph. ``adj[v]`` is the neighbour bitmask of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = self.full
        for v, a in enumerate(self.adj):
            if a >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            if a & ~full:
                raise ValueError(f"vertex {v} has an out-of-range neighbour")
            for u in bits(a):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def neighborhood(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return to_set(self.adj[v])

    def is_clique(self, mask: int) -> bool:
        return all(mask & ~(1 << v) & ~self.adj[v] == 0 for v in bits(mask))

    def is_independent(self, mask: int) -> bool:
        return all(self.adj[v] & mask == 0 for v in bits(mask))

    def has_edge_within(self, mask: int) -> bool:
        return any(self.adj[v] & mask for v in bits(mask))

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    adj = [0] * n
    for e in edges:
        u, v = e
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph(g.n, tuple(full & ~a & ~(1 << v) for v, a in enumerate(g.adj)))


def induced_subgraph(g: Graph, s: Iterable[int] | int) -> tuple[Graph, dict[int, int]]:
    """Restrict ``g`` to ``s``; vertices are relabelled ``0..|s|-1`` in the given order.

    ``s`` may be an ordered iterable of vertices or a bitmask (increasing order).
    Returns the subgraph and the old-to-new index map.
    """
    order = list(bits(s)) if isinstance(s, int) else list(s)
    index: dict[int, int] = {}
    for v in order:
        g._check_vertex(v)
        if v in index:
            raise ValueError(f"vertex {v} listed twice")
        index[v] = len(index)
    adj = []
    for v in order:
        a = 0
        for u in bits(g.adj[v]):
            j = index.get(u)
            if j is not None:
                a |= 1 << j
        adj.append(a)
    return Graph(len(order), tuple(adj)), index


def neighborhood(g: Graph, v: int) -> frozenset[int]:
    return g.neighborhood(v)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    return from_edge_list(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
