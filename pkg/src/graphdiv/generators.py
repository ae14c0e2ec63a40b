"""Named fixture graphs and random generators."""

from __future__ import annotations

import itertools
import random

from .graph import Graph, from_edge_list


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    return from_edge_list(n, itertools.combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


def quadratic_residues(p: int) -> set[int]:
    return {(x * x) % p for x in range(1, p)}


def paley_graph(p: int) -> Graph:
    """Paley graph on Z_p; ``p`` must be a prime congruent to 1 mod 4."""
    if p % 4 != 1 or p < 5 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise ValueError("Paley graph needs a prime p = 1 mod 4")
    qr = quadratic_residues(p)
    return from_edge_list(p, [(u, v) for u, v in itertools.combinations(range(p), 2) if (v - u) % p in qr])


def rook_graph(a: int, b: int) -> Graph:
    """Line graph of K_{a,b}: cells adjacent when they share a row or column."""
    cells = [(i, j) for i in range(a) for j in range(b)]
    return from_edge_list(
        len(cells),
        [(x, y) for x, y in itertools.combinations(range(len(cells)), 2)
         if cells[x][0] == cells[y][0] or cells[x][1] == cells[y][1]],
    )


def graph_from_code(n: int, code: int) -> Graph:
    """Labelled graph whose upper-triangle pairs (in combinations order) are the bits of ``code``."""
    pairs = itertools.combinations(range(n), 2)
    return from_edge_list(n, [e for i, e in enumerate(pairs) if code >> i & 1])


def all_labeled_graphs(n: int):
    """Every labelled graph on ``n`` vertices (2^(n choose 2) of them)."""
    for code in range(1 << (n * (n - 1) // 2)):
        yield graph_from_code(n, code)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return from_edge_list(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])
