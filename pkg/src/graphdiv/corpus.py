"""Test corpora of even-hole-free graphs.

Exhaustive corpora are isomorphism classes grown one vertex at a time: the
class is hereditary, so every even-hole-free graph on n vertices arises by
adding a vertex to one on n-1 vertices. Random samples grow connected graphs
vertex by vertex and reject additions that create an even hole.
"""

from __future__ import annotations

import random
from collections import defaultdict
from functools import lru_cache

import networkx as nx

from .evenhole import is_even_hole_free
from .graph import Graph, relabel
from .oracles import _connected


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def is_connected(g: Graph) -> bool:
    return _connected(g.adj, g.full)


def _extend(g: Graph, nbrs: int) -> Graph:
    adj = list(g.adj)
    for v in range(g.n):
        if nbrs >> v & 1:
            adj[v] |= 1 << g.n
    adj.append(nbrs)
    return Graph(g.n + 1, tuple(adj))


def _dedupe(graphs: list[Graph]) -> list[Graph]:
    buckets: dict[str, list[tuple[Graph, nx.Graph]]] = defaultdict(list)
    out = []
    for g in graphs:
        h = to_networkx(g)
        key = f"{g.m}:{sorted(d for _, d in h.degree())}:{nx.weisfeiler_lehman_graph_hash(h, iterations=3)}"
        bucket = buckets[key]
        if any(nx.is_isomorphic(h, other) for _, other in bucket):
            continue
        bucket.append((g, h))
        out.append(g)
    return out


@lru_cache(maxsize=None)
def graph_classes(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of graphs on n vertices."""
    if n == 0:
        return (Graph(0, ()),)
    return tuple(_dedupe([_extend(g, nbrs) for g in graph_classes(n - 1) for nbrs in range(1 << (n - 1))]))


@lru_cache(maxsize=None)
def even_hole_free_classes(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of even-hole-free graphs on n vertices."""
    if n == 0:
        return (Graph(0, ()),)
    candidates = []
    for g in even_hole_free_classes(n - 1):
        for nbrs in range(1 << (n - 1)):
            h = _extend(g, nbrs)
            if is_even_hole_free(h):
                candidates.append(h)
    return tuple(_dedupe(candidates))


def connected_even_hole_free(n: int) -> list[Graph]:
    return [g for g in even_hole_free_classes(n) if is_connected(g)]


def random_even_hole_free(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    """Random connected even-hole-free graph on n vertices with shuffled labels."""
    g = Graph(1, (0,))
    while g.n < n:
        while True:
            nbrs = 0
            for v in range(g.n):
                if rng.random() < p:
                    nbrs |= 1 << v
            if not nbrs:
                continue
            h = _extend(g, nbrs)
            if is_even_hole_free(h):
                g = h
                break
    perm = list(range(n))
    rng.shuffle(perm)
    return relabel(g, perm)


def acceptance_corpus(samples: int = 2000, seed: int = 0) -> list[Graph]:
    """Connected even-hole-free graphs: every class on 4..7 vertices plus random ones on 8 and 9."""
    graphs = []
    for n in range(4, 8):
        graphs.extend(connected_even_hole_free(n))
    rng = random.Random(seed)
    for n in (8, 9):
        graphs.extend(random_even_hole_free(n, rng) for _ in range(samples))
    return graphs
