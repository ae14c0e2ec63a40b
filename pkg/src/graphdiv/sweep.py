"""Corpus sweeps that write one JSON record per graph.

Shared by the experiment scripts and the acceptance suite. Output files are
a pure function of the inputs and seeds.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from math import comb
from pathlib import Path
from typing import Iterable

from .corpus import acceptance_corpus, graph_classes
from .divider import certificate, color_by_division, divide, verify_division
from .errors import OrderingError, TheoremViolation
from .formats import encode_graph6
from .generators import complete_graph, paley_graph, random_graph
from .graph import Graph
from .oracles import chromatic_number, is_perfect, is_perfectly_divisible, is_proper_coloring, max_clique
from .ramsey import search_k4_free, verify_counterexample
from .simplicial import elimination_order


def division_record(g: Graph, k: int, exact_chi_max_n: int = 8) -> dict:
    rec: dict = {"graph6": encode_graph6(g), "n": g.n, "k": k, "omega": max_clique(g).size}
    order = elimination_order(g, k)
    rec["order_found"] = order is not None
    if order is None:
        return rec
    try:
        d, trace = divide(g, k, order)
    except TheoremViolation as exc:
        rec["theorem_violation"] = str(exc)
        return rec
    rec["theorem_violation"] = None
    rec["verified"] = verify_division(g, d)[0]
    rec["certificate"] = certificate(d, trace)
    try:
        col = color_by_division(g, k)
    except OrderingError as exc:
        rec["coloring_error"] = str(exc)
        return rec
    rec["colors_used"] = col.colors_used
    rec["bound"] = col.bound
    rec["proper"] = is_proper_coloring(g, col.colors)
    rec["coloring"] = list(col.colors)
    rec["chi"] = chromatic_number(g).chi if g.n <= exact_chi_max_n else None
    return rec


def division_ok(rec: dict) -> bool:
    return bool(rec.get("order_found") and rec.get("theorem_violation") is None and rec.get("verified"))


def coloring_ok(rec: dict) -> bool:
    if "colors_used" not in rec:
        return False
    ok = rec["proper"] and rec["colors_used"] <= rec["bound"]
    if rec["chi"] is not None:
        ok = ok and rec["colors_used"] >= rec["chi"]
    return ok


def write_jsonl(path: str | Path, records: Iterable[dict]) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        for rec in records:
            fh.write(json.dumps(rec, separators=(",", ":")) + "\n")


def division_sweep(graphs: Iterable[Graph], k: int = 2, exact_chi_max_n: int = 8) -> list[dict]:
    return [division_record(g, k, exact_chi_max_n) for g in graphs]


def divisibility_record(g: Graph) -> dict:
    res = is_perfectly_divisible(g)
    omega = max_clique(g).size
    return {
        "graph6": encode_graph6(g),
        "n": g.n,
        "omega": omega,
        "perfect": is_perfect(g).perfect,
        "divisible": res.divisible,
        "chi": chromatic_number(g).chi,
        "bound": comb(omega + 1, 2),
    }


@dataclass(frozen=True)
class AcceptanceConfig:
    samples: int = 2000  # random even-hole-free graphs per order 8 and 9
    seed: int = 0
    div_samples: int = 500  # random graphs per order 8 and 9 for the divisibility check
    fuzz: int = 100  # graphs with a K4 fed to the Ramsey verifier
    search_seed: int = 3
    search_budget: int = 20000
    control_seeds: tuple[int, ...] = (1, 2, 3)
    control_budget: int = 1500


def ramsey_records(cfg: AcceptanceConfig) -> list[dict]:
    rng = random.Random(cfg.seed)
    out = [
        {"case": "paley17", **verify_counterexample(paley_graph(17), 4).to_dict(encode_graph6(paley_graph(17)))},
        {"case": "k4", **verify_counterexample(complete_graph(4), 4).to_dict("C~")},
    ]
    hits = 0
    while hits < cfg.fuzz:
        n = rng.randint(6, 14)
        h = random_graph(n, 0.5 + 0.4 * rng.random(), rng)
        if max_clique(h).size >= 4:
            hits += 1
            out.append({"case": "fuzz", **verify_counterexample(h, 5).to_dict(encode_graph6(h))})
    runs = [(17, cfg.search_seed, cfg.search_budget)] + [(18, s, cfg.control_budget) for s in cfg.control_seeds]
    for n, seed, budget in runs:
        r = search_k4_free(n, 3, budget, seed)
        out.append({"case": "search", "n": n, "seed": seed, "budget": budget, "violations": r.violations,
                    "steps": r.steps, "graph6": encode_graph6(r.graph)})
    return out


def write_acceptance_artifacts(outdir: str | Path, cfg: AcceptanceConfig = AcceptanceConfig()) -> dict[str, list[dict]]:
    """Run the division, divisibility and Ramsey sweeps and write one JSONL file per sweep."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    rng = random.Random(cfg.seed)
    div_graphs = [g for n in range(1, 8) for g in graph_classes(n)]
    div_graphs += [random_graph(n, rng.random(), rng) for n in (8, 9) for _ in range(cfg.div_samples)]
    results = {
        "division": division_sweep(acceptance_corpus(cfg.samples, cfg.seed)),
        "divisibility": [divisibility_record(g) for g in div_graphs],
        "ramsey": ramsey_records(cfg),
    }
    for name, recs in results.items():
        write_jsonl(outdir / f"{name}.jsonl", recs)
    return results
