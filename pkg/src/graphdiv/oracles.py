"""Exact desk-scale solvers: clique, independence and chromatic numbers,
perfection, perfect divisibility and k-divisibility.

These double as production subroutines (the divider asks for clique numbers
of small vertex sets) and as ground truth in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import ceil

from . import config
from .errors import CapExceeded
from .evenhole import find_odd_hole
from .graph import Graph, bits, complement, lowest, popcount, to_set


@dataclass(frozen=True)
class CliqueResult:
    size: int
    witness: frozenset[int]


@dataclass(frozen=True)
class ColoringResult:
    chi: int
    colors: tuple[int, ...]


@dataclass(frozen=True)
class PerfectResult:
    perfect: bool
    witness: tuple[int, ...] | None = None
    kind: str | None = None  # "odd hole" or "odd antihole"

    def __bool__(self) -> bool:
        return self.perfect


@dataclass(frozen=True)
class PerfectDivResult:
    divisible: bool
    a: frozenset[int] | None = None
    b: frozenset[int] | None = None
    memo: dict[int, int] = field(default_factory=dict, repr=False)  # subset mask -> A mask
    failing: frozenset[int] | None = None


@dataclass(frozen=True)
class KDivResult:
    divisible: bool
    k: int
    parts: tuple[frozenset[int], ...] | None = None
    failing: frozenset[int] | None = None


# ---------------------------------------------------------------- cliques

def _color_sort(adj, P):
    """Greedy sequential colouring of P; returns vertices and their colour bounds."""
    order, bounds = [], []
    U = P
    color = 0
    while U:
        color += 1
        Q = U
        while Q:
            v = lowest(Q)
            Q &= ~adj[v] & ~(1 << v)
            U &= ~(1 << v)
            order.append(v)
            bounds.append(color)
    return order, bounds


def clique_mask(adj, cand: int) -> int:
    """Bitmask of a maximum clique inside ``cand`` (branch and bound with colouring bounds)."""
    if not cand:
        return 0
    best = [0, 0]  # size, mask
    # greedy seed
    P, R = cand, 0
    while P:
        v = max(bits(P), key=lambda x: (popcount(adj[x] & P), -x))
        R |= 1 << v
        P &= adj[v]
    best[:] = [popcount(R), R]

    def expand(R, rsize, P):
        order, bounds = _color_sort(adj, P)
        for i in range(len(order) - 1, -1, -1):
            if rsize + bounds[i] <= best[0]:
                return
            v = order[i]
            newP = P & adj[v]
            if newP:
                expand(R | (1 << v), rsize + 1, newP)
            elif rsize + 1 > best[0]:
                best[:] = [rsize + 1, R | (1 << v)]
            P &= ~(1 << v)

    expand(0, 0, cand)
    return best[1]


def clique_number_of(g: Graph, mask: int) -> int:
    return popcount(clique_mask(g.adj, mask))


def max_clique(g: Graph) -> CliqueResult:
    m = clique_mask(g.adj, g.full)
    return CliqueResult(popcount(m), to_set(m))


def max_independent_set(g: Graph) -> CliqueResult:
    return max_clique(complement(g))


def count_cliques(adj, mask: int, size: int) -> int:
    """Number of cliques of exactly ``size`` vertices inside ``mask``."""
    if size == 0:
        return 1
    if size == 1:
        return popcount(mask)
    if size == 2:
        return sum(popcount(adj[v] & mask) for v in bits(mask)) // 2
    total = 0
    while mask:
        v = lowest(mask)
        mask &= mask - 1
        total += count_cliques(adj, adj[v] & mask, size - 1)
    return total


# ---------------------------------------------------------------- colouring

def chi_lower_bounds(g: Graph) -> int:
    if g.n == 0:
        return 0
    omega = max_clique(g).size
    alpha = max_independent_set(g).size
    return max(omega, ceil(g.n / alpha))


def _dsatur_pick(adj, classes, uncolored):
    best, best_key = -1, None
    for v in bits(uncolored):
        sat = sum(1 for c in classes if c & adj[v])
        key = (sat, popcount(adj[v] & uncolored))
        if best_key is None or key > best_key:
            best, best_key = v, key
    return best


def _dsatur_greedy(g: Graph) -> list[int]:
    adj = g.adj
    colors = [-1] * g.n
    classes: list[int] = []
    uncolored = g.full
    while uncolored:
        v = _dsatur_pick(adj, classes, uncolored)
        c = next((i for i, cl in enumerate(classes) if not cl & adj[v]), len(classes))
        if c == len(classes):
            classes.append(0)
        classes[c] |= 1 << v
        colors[v] = c
        uncolored &= ~(1 << v)
    return colors


def _k_colorable(g: Graph, k: int, seed_clique: int) -> list[int] | None:
    adj = g.adj
    colors = [-1] * g.n
    classes = [0] * k
    used = 0
    for i, v in enumerate(bits(seed_clique)):
        colors[v] = i
        classes[i] |= 1 << v
        used = i + 1
    uncolored = g.full & ~seed_clique

    def rec(uncolored, used):
        if not uncolored:
            return True
        v = _dsatur_pick(adj, classes[:used], uncolored)
        for c in range(min(used + 1, k)):
            if classes[c] & adj[v]:
                continue
            classes[c] |= 1 << v
            colors[v] = c
            if rec(uncolored & ~(1 << v), max(used, c + 1)):
                return True
            classes[c] &= ~(1 << v)
            colors[v] = -1
        return False

    return colors if rec(uncolored, used) else None


def chromatic_number(g: Graph, cap: int | None = None) -> ColoringResult:
    """Exact chromatic number with a witness colouring.

    Iterative deepening from ``max(omega, ceil(n/alpha))`` with DSATUR
    backtracking; a maximum clique is precoloured to break symmetry.
    """
    limit = config.cap("chromatic", cap)
    if g.n > limit:
        raise CapExceeded("exact chromatic number", g.n, limit)
    if g.n == 0:
        return ColoringResult(0, ())
    upper = _dsatur_greedy(g)
    ub = max(upper) + 1
    lb = chi_lower_bounds(g)
    seed = clique_mask(g.adj, g.full)
    for k in range(lb, ub):
        found = _k_colorable(g, k, seed)
        if found is not None:
            return ColoringResult(k, tuple(found))
    return ColoringResult(ub, tuple(upper))


def is_proper_coloring(g: Graph, colors) -> bool:
    return len(colors) == g.n and all(colors[u] != colors[v] for u, v in g.edges())


# ---------------------------------------------------------------- perfection

def is_perfect(g: Graph, cap: int | None = None) -> PerfectResult:
    """Decide perfection by searching for an odd hole in ``g`` or its complement."""
    limit = config.cap("perfect", cap)
    if g.n > limit:
        raise CapExceeded("perfection test", g.n, limit)
    hole = find_odd_hole(g)
    if hole is not None and len(hole) >= 5:
        return PerfectResult(False, hole, "odd hole")
    anti = find_odd_hole(complement(g))
    if anti is not None and len(anti) >= 5:
        return PerfectResult(False, anti, "odd antihole")
    return PerfectResult(True)


def _connected(adj, mask: int) -> bool:
    if not mask:
        return True
    seen = frontier = mask & -mask
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & mask & ~seen
        seen |= frontier
    return seen == mask


def _is_odd_cycle(adj, mask: int) -> bool:
    size = popcount(mask)
    if size < 5 or size % 2 == 0:
        return False
    return all(popcount(adj[v] & mask) == 2 for v in bits(mask)) and _connected(adj, mask)


def subset_tables(g: Graph) -> tuple[list[int], list[bool]]:
    """Clique number and perfection of every induced subgraph, indexed by vertex mask."""
    n = g.n
    adj = g.adj
    cadj = complement(g).adj
    size = 1 << n
    omega = [0] * size
    perfect = [True] * size
    for S in range(1, size):
        low = S & -S
        v = low.bit_length() - 1
        rest = S ^ low
        omega[S] = max(omega[rest], 1 + omega[S & adj[v]])
        ok = True
        T = S
        while T:
            b = T & -T
            if not perfect[S ^ b]:
                ok = False
                break
            T ^= b
        if ok and (_is_odd_cycle(adj, S) or _is_odd_cycle(cadj, S)):
            ok = False
        perfect[S] = ok
    return omega, perfect


def _submasks_desc(S: int):
    T = S
    while True:
        yield T
        if T == 0:
            return
        T = (T - 1) & S


def is_perfectly_divisible(g: Graph, cap: int | None = None) -> PerfectDivResult:
    """Exhaustive check: every induced subgraph with an edge splits into A perfect and B with smaller clique number."""
    limit = config.cap("perfect_div", cap)
    if g.n > limit:
        raise CapExceeded("perfect divisibility", g.n, limit)
    omega, perfect = subset_tables(g)
    memo: dict[int, int] = {}
    for S in range(1, 1 << g.n):
        if omega[S] < 2:
            continue
        for A in _submasks_desc(S):
            if perfect[A] and omega[S ^ A] < omega[S]:
                memo[S] = A
                break
        else:
            return PerfectDivResult(False, memo=memo, failing=to_set(S))
    full = g.full
    if omega[full] < 2:
        return PerfectDivResult(True, to_set(full), frozenset(), memo)
    return PerfectDivResult(True, to_set(memo[full]), to_set(full ^ memo[full]), memo)


def is_k_divisible(g: Graph, k: int, cap: int | None = None) -> KDivResult:
    """Exhaustive check of k-divisibility over all induced subgraphs with an edge."""
    if k < 2:
        raise ValueError("k must be at least 2")
    limit = config.cap("k_div", cap)
    if g.n > limit:
        raise CapExceeded("k-divisibility", g.n, limit)
    if g.m == 0:
        raise ValueError("k-divisibility is defined for graphs with at least one edge")
    omega, _ = subset_tables(g)

    def split(T: int, j: int, w: int, memo) -> list[int] | None:
        if omega[T] < w:
            return [T] + [0] * (j - 1)
        if j == 1:
            return None
        key = (T, j)
        if key in memo:
            return memo[key]
        low = T & -T
        rest = T ^ low
        result = None
        # parts containing the lowest vertex of T; larger parts first
        for extra in _submasks_desc(rest):
            A = low | extra
            if omega[A] < w:
                tail = split(T ^ A, j - 1, w, memo)
                if tail is not None:
                    result = [A] + tail
                    break
        memo[key] = result
        return result

    top = None
    for S in range(1, 1 << g.n):
        w = omega[S]
        if w < 2:
            continue
        parts = split(S, k, w, {})
        if parts is None:
            return KDivResult(False, k, failing=to_set(S))
        if S == g.full:
            top = parts
    return KDivResult(True, k, tuple(to_set(p) for p in top))
