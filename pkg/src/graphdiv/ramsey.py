"""Checks for Ramsey-style counterexamples to perfect divisibility with alpha <= 3.

For a K4-free graph H, its complement G has alpha(G) = omega(H) <= 3. Any
perfectly divisible graph satisfies chi <= omega^2, while chi(G) >= n/alpha(G).
If the lower bound exceeds omega(G)^2, G cannot be perfectly divisible.
Exact chi is never needed, only the lower bound.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import asdict, dataclass
from fractions import Fraction

from . import config
from .errors import CapExceeded
from .formats import encode_graph6
from .graph import Graph, complement, popcount
from .oracles import clique_mask, count_cliques

COUNTEREXAMPLE = "COUNTEREXAMPLE"
INCONCLUSIVE = "INCONCLUSIVE"
INVALID = "INVALID"


@dataclass(frozen=True)
class RamseyReport:
    n: int
    omega_H: int
    alpha_H: int
    t: int
    alpha_G: int
    omega_G: int
    chi_lb: int
    hoang_bound: int
    verdict: str

    def to_dict(self, graph6: str | None = None) -> dict:
        d = asdict(self)
        if graph6 is not None:
            d["graph6"] = graph6
        return d

    def to_json(self, graph6: str | None = None) -> str:
        return json.dumps(self.to_dict(graph6), separators=(",", ":"))


def verify_counterexample(h: Graph, t: int, cap: int | None = None) -> RamseyReport:
    limit = config.cap("ramsey", cap)
    if h.n > limit:
        raise CapExceeded("exact clique/independence numbers", h.n, limit)
    g = complement(h)
    omega_h = popcount(clique_mask(h.adj, h.full))
    alpha_h = popcount(clique_mask(g.adj, g.full))
    alpha_g, omega_g = omega_h, alpha_h
    chi_lb = max(omega_g, math.ceil(h.n / alpha_g)) if h.n else 0
    hoang = omega_g * omega_g
    return RamseyReport(h.n, omega_h, alpha_h, t, alpha_g, omega_g, chi_lb, hoang, classify(omega_h, chi_lb, hoang))


def classify(omega_h: int, chi_lb: int, hoang_bound: int) -> str:
    if omega_h >= 4:
        return INVALID
    if chi_lb > hoang_bound:
        return COUNTEREXAMPLE
    return INCONCLUSIVE


@dataclass(frozen=True)
class TScanRow:
    t: int
    lhs: float
    rhs: int
    satisfied: bool


def required_t_scan(c, t_max: int) -> list[TScanRow]:
    """Tabulate c*t^3/ln(t)^4 - 1 against 3(t-1)^2 for t = 4..t_max.

    ``c`` is the unknown constant of the R(4,t) lower bound; natural log is used.
    """
    c = Fraction(c)
    if c <= 0:
        raise ValueError("c must be positive")
    rows = []
    for t in range(4, t_max + 1):
        lhs = float(c) * t**3 / math.log(t) ** 4 - 1
        rhs = 3 * (t - 1) ** 2
        rows.append(TScanRow(t, lhs, rhs, lhs > rhs))
    return rows


# ---------------------------------------------------------------- local search

class ViolationCounter:
    """Tracks #K4 + #independent (alpha_target+1)-sets under single edge flips."""

    def __init__(self, n: int, alpha_target: int, adj=None):
        if alpha_target < 1:
            raise ValueError("alpha_target must be at least 1")
        self.n = n
        self.s = alpha_target + 1
        self.full = (1 << n) - 1
        self.adj = list(adj) if adj is not None else [0] * n

    def cadj(self, v: int) -> int:
        return self.full & ~self.adj[v] & ~(1 << v)

    def total(self) -> int:
        cad = [self.cadj(v) for v in range(self.n)]
        return count_cliques(self.adj, self.full, 4) + count_cliques(cad, self.full, self.s)

    def flip_delta(self, u: int, v: int) -> int:
        adj = self.adj
        full = self.full
        others = full & ~(1 << u) & ~(1 << v)
        common = adj[u] & adj[v] & others
        k4 = 0
        m = common
        while m:
            low = m & -m
            m ^= low
            k4 += (adj[low.bit_length() - 1] & m).bit_count()
        common_non = full & ~adj[u] & ~adj[v] & others
        if self.s == 2:
            ind = 1
        elif self.s == 3:
            ind = common_non.bit_count()
        else:
            cad = [full & ~a & ~(1 << x) for x, a in enumerate(adj)]
            ind = count_cliques(cad, common_non, self.s - 2)
        if adj[u] >> v & 1:
            return ind - k4
        return k4 - ind

    def flip(self, u: int, v: int) -> None:
        self.adj[u] ^= 1 << v
        self.adj[v] ^= 1 << u

    def graph(self) -> Graph:
        return Graph(self.n, tuple(self.adj))


@dataclass(frozen=True)
class SearchResult:
    graph: Graph
    violations: int
    steps: int
    report: RamseyReport | None


def search_k4_free(n: int, alpha_target: int, budget: int, seed: int, tabu: int | None = None) -> SearchResult:
    """Local search over single edge flips for a K4-free graph with no independent (alpha_target+1)-set.

    Each step applies the best non-tabu flip (ties broken by the seeded RNG),
    even if it does not improve, so the search can walk across plateaus; the
    search restarts from a fresh random graph every ``budget // 10`` steps.
    Deterministic for a fixed seed and budget.
    """
    if not 0 < n <= 64:
        raise ValueError("n must be between 1 and 64")
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if tabu is None:
        tabu = max(1, len(pairs) // 10)
    restart_every = max(1, budget // 10)

    best_key = None
    best_adj = None
    steps = 0
    while steps < budget and (best_key is None or best_key[0] > 0):
        counter = ViolationCounter(n, alpha_target)
        for u, v in pairs:
            if rng.random() < 0.5:
                counter.flip(u, v)
        current = counter.total()
        recent: dict[tuple[int, int], int] = {}
        local_steps = 0
        while True:
            if best_key is None or current <= best_key[0]:
                key = (current, encode_graph6(counter.graph()))
                if best_key is None or key < best_key:
                    best_key, best_adj = key, list(counter.adj)
            if current == 0 or steps >= budget or local_steps >= restart_every:
                break
            best_delta, moves = None, []
            for e in pairs:
                d = counter.flip_delta(*e)
                if recent.get(e, -1) >= steps and current + d >= best_key[0]:
                    continue  # tabu unless it beats the best so far
                if best_delta is None or d < best_delta:
                    best_delta, moves = d, [e]
                elif d == best_delta:
                    moves.append(e)
            steps += 1
            local_steps += 1
            if not moves:
                continue
            e = moves[rng.randrange(len(moves))]
            counter.flip(*e)
            current += best_delta
            recent[e] = steps + tabu

    graph = Graph(n, tuple(best_adj))
    report = verify_counterexample(graph, alpha_target + 1) if n <= config.cap("ramsey") else None
    return SearchResult(graph, best_key[0], steps, report)


def violations(g: Graph, alpha_target: int) -> int:
    """From-scratch violation count: K4 subsets plus independent (alpha_target+1)-subsets."""
    return ViolationCounter(g.n, alpha_target, g.adj).total()

