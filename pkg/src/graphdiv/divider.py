"""(k+1)-divisions from k-simplicial elimination orderings, and colourings built from them.

Vertices are re-inserted in reverse elimination order while a partition
into k+1 parts is maintained in which no part holds a maximum clique of the
current graph. When the clique number grows, the new vertex goes to the
first part. Otherwise a part is *bad* if its intersection with N(v) holds a
clique one smaller than the clique number; since N(v) is covered by k
cliques of size at most w-1, at most k parts are bad and v joins the first
good one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import OrderingError, TheoremViolation
from .graph import Graph, bits, induced_subgraph, to_set
from .oracles import clique_number_of, is_proper_coloring
from .simplicial import EliminationOrder, elimination_order, is_valid_order, partial_elimination

GROW = "grow"
STAY = "stay"


@dataclass(frozen=True)
class TraceStep:
    v: int
    branch: str
    bad: tuple[bool, ...]
    chosen: int

    def to_dict(self) -> dict:
        return {"v": self.v, "branch": self.branch, "bad": list(self.bad), "chosen": self.chosen}


@dataclass(frozen=True)
class Division:
    k_plus_1: int
    parts: tuple[int, ...]  # vertex -> part index
    omega: int
    per_part_clique: tuple[int, ...]

    def part_mask(self, i: int) -> int:
        m = 0
        for v, p in enumerate(self.parts):
            if p == i:
                m |= 1 << v
        return m

    def part_sets(self) -> list[frozenset[int]]:
        return [to_set(self.part_mask(i)) for i in range(self.k_plus_1)]


def certificate(d: Division, trace: list[TraceStep]) -> dict:
    return {
        "n": len(d.parts),
        "k": d.k_plus_1 - 1,
        "omega": d.omega,
        "parts": list(d.parts),
        "per_part_clique": list(d.per_part_clique),
        "trace": [t.to_dict() for t in trace],
    }


def certificate_json(d: Division, trace: list[TraceStep]) -> str:
    return json.dumps(certificate(d, trace), separators=(",", ":")) + "\n"


def division_from_certificate(cert: dict) -> Division:
    return Division(cert["k"] + 1, tuple(cert["parts"]), cert["omega"], tuple(cert["per_part_clique"]))


def divide(g: Graph, k: int, order: EliminationOrder, check: bool = False) -> tuple[Division, list[TraceStep]]:
    """Build a (k+1)-division of ``g`` from a k-simplicial elimination order.

    With ``check`` set, the incrementally tracked clique number is compared
    against a from-scratch computation after every insertion.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.m == 0:
        raise ValueError("divide needs a graph with at least one edge")
    if order.k != k or not is_valid_order(g, order):
        raise ValueError(f"not a valid {k}-simplicial elimination order for this graph")
    adj = g.adj
    parts = [0] * (k + 1)
    current = 0
    w = 0
    trace: list[TraceStep] = []

    for step in reversed(order.steps):
        v = step.v
        nb = adj[v] & current
        nb_omega = clique_number_of(g, nb)
        if nb_omega >= w:
            branch, bad = GROW, ()
            new_w = nb_omega + 1
            if new_w == 2 and w == 1:
                # first edge: everything so far is independent and sat in part 0
                parts[1] |= parts[0]
                parts[0] = 0
            chosen = 0
        else:
            branch, new_w = STAY, w
            if w <= 1:
                bad = (False,) * (k + 1)
                chosen = 0
            else:
                bad = tuple(clique_number_of(g, p & nb) >= w - 1 for p in parts)
                chosen = next((i for i, b in enumerate(bad) if not b), -1)
                if chosen < 0:
                    trace.append(TraceStep(v, branch, bad, chosen))
                    raise TheoremViolation(f"all {k + 1} parts are bad when inserting vertex {v}", trace)
        parts[chosen] |= 1 << v
        current |= 1 << v
        w = new_w
        trace.append(TraceStep(v, branch, bad, chosen))

        if w >= 2:
            for i, p in enumerate(parts):
                if clique_number_of(g, p) >= w:
                    raise TheoremViolation(f"part {i} holds a {w}-clique after inserting vertex {v}", trace)
        if check and clique_number_of(g, current) != w:
            raise TheoremViolation(f"clique number bookkeeping drifted at vertex {v}", trace)

    assignment = [0] * g.n
    for i, p in enumerate(parts):
        for v in bits(p):
            assignment[v] = i
    per_part = tuple(clique_number_of(g, p) for p in parts)
    return Division(k + 1, tuple(assignment), w, per_part), trace


def verify_division(g: Graph, d: Division) -> tuple[bool, str]:
    """Recheck a division from scratch; returns (ok, diagnostic)."""
    if len(d.parts) != g.n:
        return False, f"assignment covers {len(d.parts)} vertices, graph has {g.n}"
    if any(not 0 <= p < d.k_plus_1 for p in d.parts):
        return False, "part index out of range"
    if len(d.per_part_clique) != d.k_plus_1:
        return False, "per-part clique list has the wrong length"
    omega = clique_number_of(g, g.full)
    if d.omega != omega:
        return False, f"claimed omega {d.omega}, actual {omega}"
    for i in range(d.k_plus_1):
        c = clique_number_of(g, d.part_mask(i))
        if c != d.per_part_clique[i]:
            return False, f"part {i}: claimed clique number {d.per_part_clique[i]}, actual {c}"
        if g.m and c >= omega:
            return False, f"part {i} holds a {c}-clique (omega = {omega})"
    return True, "ok"


@dataclass(frozen=True)
class DivisionColoring:
    colors: tuple[int, ...]
    colors_used: int
    omega: int
    bound: int  # (k+1)^(omega-1)


def color_by_division(g: Graph, k: int) -> DivisionColoring:
    """Colour ``g`` by dividing recursively; each part gets its own colour range.

    Raises OrderingError if some part met during the recursion has no
    k-simplicial elimination ordering.
    """
    colors = _color(g, k, list(range(g.n)))
    omega = clique_number_of(g, g.full)
    if not is_proper_coloring(g, colors):
        raise TheoremViolation("division colouring is not proper")
    used = len(set(colors))
    return DivisionColoring(tuple(colors), used, omega, (k + 1) ** (omega - 1) if omega else 1)


def _color(g: Graph, k: int, labels: list[int]) -> list[int]:
    if g.n == 0:
        return []
    if g.m == 0:
        return [0] * g.n
    order = elimination_order(g, k)
    if order is None:
        _, residual = partial_elimination(g, k)
        stuck = frozenset(labels[v] for v in bits(residual))
        part = sorted(labels)
        raise OrderingError(f"part {part} has no {k}-simplicial ordering; stuck at {sorted(stuck)}", stuck)
    d, _ = divide(g, k, order)
    colors = [0] * g.n
    offset = 0
    for i in range(d.k_plus_1):
        mask = d.part_mask(i)
        if not mask:
            continue
        sub, index = induced_subgraph(g, mask)
        sub_labels = [labels[v] for v in bits(mask)]
        sub_colors = _color(sub, k, sub_labels)
        for v, j in index.items():
            colors[v] = offset + sub_colors[j]
        offset += max(sub_colors) + 1
    return colors

