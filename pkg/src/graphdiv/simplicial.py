"""k-simplicial vertices and k-simplicial elimination orderings.

A vertex is k-simplicial when its neighbourhood splits into k (possibly
empty) cliques. Every routine here works on bitmasks over the *original*
vertex labels; "within" restricts attention to the residual graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, bits, popcount, to_mask, to_set
from .oracles import clique_mask


@dataclass(frozen=True)
class SimplicialWitness:
    v: int
    cover: tuple[frozenset[int], ...]

    @property
    def k(self) -> int:
        return len(self.cover)


@dataclass(frozen=True)
class EliminationOrder:
    k: int
    steps: tuple[SimplicialWitness, ...]

    @property
    def vertices(self) -> list[int]:
        return [s.v for s in self.steps]

    @property
    def beyond_stated_range(self) -> bool:
        """k = 1 orderings are supported, but the divisibility theorem is stated for k >= 2."""
        return self.k < 2


def _cover2(adj, s: int) -> list[int] | None:
    # s splits into two cliques iff the complement of g[s] is bipartite
    color: dict[int, int] = {}
    side = [0, 0]
    for root in bits(s):
        if root in color:
            continue
        color[root] = 0
        side[0] |= 1 << root
        stack = [root]
        while stack:
            x = stack.pop()
            for y in bits(s & ~adj[x] & ~(1 << x)):
                if y not in color:
                    color[y] = 1 - color[x]
                    side[color[y]] |= 1 << y
                    stack.append(y)
                elif color[y] == color[x]:
                    return None
    return side


def _cover_k(adj, s: int, k: int) -> list[int] | None:
    order = sorted(bits(s), key=lambda v: (-popcount(adj[v] & s), v))
    w = popcount(clique_mask(adj, s))
    parts: list[int] = []
    sizes: list[int] = []

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        remaining = len(order) - i
        capacity = sum(w - sz for sz in sizes) + (k - len(parts)) * w
        if capacity < remaining:
            return False
        v = order[i]
        for j, p in enumerate(parts):
            if p & ~adj[v] == 0:
                parts[j] |= 1 << v
                sizes[j] += 1
                if rec(i + 1):
                    return True
                parts[j] &= ~(1 << v)
                sizes[j] -= 1
        if len(parts) < k:
            parts.append(1 << v)
            sizes.append(1)
            if rec(i + 1):
                return True
            parts.pop()
            sizes.pop()
        return False

    return list(parts) if rec(0) else None


def cover_mask(adj, s: int, k: int) -> list[int] | None:
    """Partition of ``s`` into exactly ``k`` clique masks (trailing ones may be 0), or None."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if not s:
        return [0] * k
    if k == 1:
        parts = [s] if all(s & ~adj[v] & ~(1 << v) == 0 for v in bits(s)) else None
    elif k == 2:
        parts = _cover2(adj, s)
    else:
        parts = _cover_k(adj, s, k)
    if parts is None:
        return None
    parts = [p for p in parts if p]
    return parts + [0] * (k - len(parts))


def clique_cover_of_set(g: Graph, s: Iterable[int] | int, k: int) -> list[frozenset[int]] | None:
    mask = s if isinstance(s, int) else to_mask(s)
    if mask & ~g.full:
        raise ValueError("vertex set is not contained in the graph")
    parts = cover_mask(g.adj, mask, k)
    return None if parts is None else [to_set(p) for p in parts]


def find_k_simplicial(g: Graph, k: int, within: int | None = None) -> SimplicialWitness | None:
    """Lowest-index k-simplicial vertex of ``g[within]`` with its clique cover."""
    within = g.full if within is None else within
    for v in bits(within):
        parts = cover_mask(g.adj, g.adj[v] & within, k)
        if parts is not None:
            return SimplicialWitness(v, tuple(to_set(p) for p in parts))
    return None


def verify_witness(g: Graph, w: SimplicialWitness, within: int | None = None) -> bool:
    """Independent re-check: parts disjoint, union is N(v) in ``g[within]``, each part a clique."""
    within = g.full if within is None else within
    if not (0 <= w.v < g.n) or not within >> w.v & 1:
        return False
    seen = 0
    for part in w.cover:
        m = to_mask(part)
        if m & seen or m & ~within or not g.is_clique(m):
            return False
        seen |= m
    return seen == g.adj[w.v] & within


def partial_elimination(g: Graph, k: int) -> tuple[list[SimplicialWitness], int]:
    """Eliminate k-simplicial vertices greedily; returns the steps and the residual mask (0 on success)."""
    remaining = g.full
    steps = []
    while remaining:
        w = find_k_simplicial(g, k, remaining)
        if w is None:
            break
        steps.append(w)
        remaining &= ~(1 << w.v)
    return steps, remaining


def elimination_order(g: Graph, k: int) -> EliminationOrder | None:
    steps, residual = partial_elimination(g, k)
    if residual:
        return None
    return EliminationOrder(k, tuple(steps))


def is_valid_order(g: Graph, order: EliminationOrder) -> bool:
    if sorted(order.vertices) != list(range(g.n)):
        return False
    remaining = g.full
    for step in order.steps:
        if step.k != order.k or not verify_witness(g, step, remaining):
            return False
        remaining &= ~(1 << step.v)
    return True
