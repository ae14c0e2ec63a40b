"""Chordless cycle enumeration, even-hole detection and hole witnesses."""

from __future__ import annotations

from typing import Iterator

from . import config
from .errors import CapExceeded
from .graph import Graph, bits

HoleWitness = tuple  # cyclic vertex sequence, minimum vertex first


def chordless_cycles(g: Graph, max_len: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield every hole (chordless cycle of length >= 4) of ``g`` exactly once.

    Each cycle starts at its minimum vertex and its second vertex is smaller
    than its last one.
    """
    adj = g.adj
    limit = g.n if max_len is None else max_len
    if limit < 4:
        return
    for s in range(g.n):
        higher = g.full & ~((2 << s) - 1)
        for a in bits(adj[s] & higher):
            # (path, path mask, union of neighbourhoods of the interior vertices)
            stack = [([s, a], (1 << s) | (1 << a), 0)]
            while stack:
                path, used, inner = stack.pop()
                last = path[-1]
                cand = adj[last] & higher & ~used & ~inner
                inner |= adj[last]
                for u in bits(cand):
                    if adj[u] >> s & 1:
                        if len(path) >= 3 and a < u:
                            yield tuple(path) + (u,)
                    elif len(path) + 1 < limit:
                        stack.append((path + [u], used | (1 << u), inner))


def is_hole(g: Graph, cycle) -> bool:
    c = list(cycle)
    L = len(c)
    if L < 4 or len(set(c)) != L or any(not 0 <= v < g.n for v in c):
        return False
    for i in range(L):
        for j in range(i + 1, L):
            consecutive = j == i + 1 or (i == 0 and j == L - 1)
            if g.has_edge(c[i], c[j]) != consecutive:
                return False
    return True


def _check_cap(g: Graph, cap: int | None) -> None:
    limit = config.cap("even_hole", cap)
    if g.n > limit:
        raise CapExceeded("even-hole detection", g.n, limit)


def shortest_even_hole(g: Graph, cap: int | None = None) -> HoleWitness | None:
    """A minimum-length even hole, lexicographically smallest among those; ``None`` if even-hole-free."""
    _check_cap(g, cap)
    best = None
    bound = g.n if g.n % 2 == 0 else g.n - 1
    # holes of length 4 first: if any exist no longer search is needed
    for L in (4, bound):
        for cyc in chordless_cycles(g, L):
            if len(cyc) % 2 == 0 and (best is None or (len(cyc), cyc) < (len(best), best)):
                best = cyc
        if best is not None:
            return best
    return None


def find_even_hole(g: Graph, cap: int | None = None) -> HoleWitness | None:
    """Any even hole (first found), or ``None``."""
    _check_cap(g, cap)
    for cyc in chordless_cycles(g):
        if len(cyc) % 2 == 0:
            return cyc
    return None


def is_even_hole_free(g: Graph, cap: int | None = None) -> bool:
    return find_even_hole(g, cap) is None


def find_odd_hole(g: Graph) -> HoleWitness | None:
    for cyc in chordless_cycles(g):
        if len(cyc) % 2 == 1:
            return cyc
    return None
