"""Command-line front end.

Exit codes: 0 success, 1 negative mathematical result, 2 input/parse error,
3 size cap exceeded, 4 internal assertion (theorem-violation path).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass

from . import config
from .divider import certificate_json, color_by_division, divide, verify_division
from .errors import CapExceeded, OrderingError, TheoremViolation
from .evenhole import shortest_even_hole
from .formats import GraphFormatError, encode_graph6, read_graphs
from .graph import Graph, induced_subgraph, to_set
from .oracles import (
    chromatic_number,
    is_k_divisible,
    is_perfect,
    is_perfectly_divisible,
    max_clique,
    max_independent_set,
)
from .ramsey import required_t_scan, search_k4_free, verify_counterexample
from .simplicial import EliminationOrder, find_k_simplicial, partial_elimination

log = logging.getLogger("graphdiv")

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_CAP, EXIT_INTERNAL = 0, 1, 2, 3, 4


class InputError(Exception):
    pass


class NegativeResult(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    input: str | None
    g6: str | None
    format: str
    k: int
    t: int | None
    cap_n: int | None
    seed: int
    budget: int
    out: str | None
    json: bool
    batch: bool
    verbosity: int

    def validate(self) -> None:
        if self.cap_n is not None and self.cap_n <= 0:
            raise InputError("--cap-n must be positive")
        if self.k < 1:
            raise InputError("--k must be at least 1")


def _jdump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def load_graphs(cfg: RunConfig) -> list[Graph]:
    if (cfg.input is None) == (cfg.g6 is None):
        raise InputError("give exactly one input: a file path (or '-') or --g6")
    try:
        if cfg.g6 is not None:
            graphs = read_graphs(cfg.g6, "g6")
        else:
            if cfg.input == "-":
                text = sys.stdin.read()
            else:
                with open(cfg.input, encoding="ascii") as fh:
                    text = fh.read()
            graphs = read_graphs(text, cfg.format)
    except (OSError, UnicodeDecodeError, GraphFormatError) as exc:
        raise InputError(str(exc)) from None
    if not graphs:
        raise InputError("no graph in input")
    if len(graphs) > 1 and not cfg.batch:
        raise InputError(f"input holds {len(graphs)} graphs; pass --batch to process them all")
    return graphs


def emit(cfg: RunConfig, text: str) -> None:
    if cfg.out:
        with open(cfg.out, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _table(rows: dict) -> str:
    width = max(len(k) for k in rows)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in rows.items())


def _render(cfg: RunConfig, reports: list[dict]) -> str:
    if cfg.json or cfg.batch:
        return "".join(_jdump(r) + "\n" for r in reports)
    return "\n".join(_table(r) for r in reports)


# ---------------------------------------------------------------- subcommands

def cmd_info(cfg: RunConfig, graphs: list[Graph]) -> int:
    reports = []
    for g in graphs:
        r = {"graph6": encode_graph6(g), "n": g.n, "m": g.m,
             "omega": max_clique(g).size, "alpha": max_independent_set(g).size}
        try:
            r["chi"] = chromatic_number(g, cfg.cap_n).chi
        except CapExceeded:
            r["chi"] = None
        p = is_perfect(g, cfg.cap_n)
        r["perfect"] = p.perfect
        if not p.perfect:
            r["imperfect_witness"] = {"kind": p.kind, "cycle": list(p.witness)}
        hole = shortest_even_hole(g, cfg.cap_n)
        r["even_hole_free"] = hole is None
        if hole is not None:
            r["even_hole"] = list(hole)
        reports.append(r)
    emit(cfg, _render(cfg, reports))
    return EXIT_OK


def cmd_divide(cfg: RunConfig, graphs: list[Graph]) -> int:
    out = []
    for g in graphs:
        if g.m == 0:
            raise InputError("divide needs a graph with at least one edge")
        steps, residual = partial_elimination(g, cfg.k)
        if residual:
            stuck = encode_graph6(induced_subgraph(g, residual)[0])
            print(f"no {cfg.k}-simplicial elimination ordering; stuck residual "
                  f"{sorted(to_set(residual))} graph6 {stuck}", file=sys.stderr)
            raise NegativeResult()
        d, trace = divide(g, cfg.k, EliminationOrder(cfg.k, tuple(steps)))
        ok, why = verify_division(g, d)
        if not ok:
            raise TheoremViolation(f"produced division failed verification: {why}", trace)
        out.append(certificate_json(d, trace))
    emit(cfg, "".join(out))
    return EXIT_OK


def cmd_color(cfg: RunConfig, graphs: list[Graph]) -> int:
    reports = []
    failed = False
    for g in graphs:
        r = {"graph6": encode_graph6(g)}
        try:
            c = color_by_division(g, cfg.k)
        except OrderingError as exc:
            r.update(status="fail", error=str(exc))
            failed = True
            if not cfg.batch:
                print(str(exc), file=sys.stderr)
                raise NegativeResult() from None
        else:
            passed = c.colors_used <= c.bound
            failed |= not passed
            r.update(colors_used=c.colors_used, omega=c.omega, bound=c.bound,
                     status="pass" if passed else "fail", coloring=list(c.colors))
        reports.append(r)
    emit(cfg, _render(cfg, reports))
    return EXIT_NEGATIVE if failed else EXIT_OK


def cmd_evenhole(cfg: RunConfig, graphs: list[Graph], require_ehf: bool = False) -> int:
    reports = []
    for g in graphs:
        hole = shortest_even_hole(g, cfg.cap_n)
        reports.append({"graph6": encode_graph6(g), "even_hole_free": hole is None,
                        "even_hole": None if hole is None else list(hole)})
    emit(cfg, _render(cfg, reports))
    if require_ehf and any(not r["even_hole_free"] for r in reports):
        return EXIT_NEGATIVE
    return EXIT_OK


def cmd_simplicial(cfg: RunConfig, graphs: list[Graph]) -> int:
    reports = []
    for g in graphs:
        w = find_k_simplicial(g, cfg.k)
        steps, residual = partial_elimination(g, cfg.k)
        r = {"graph6": encode_graph6(g), "k": cfg.k,
             "vertex": None if w is None else w.v,
             "cover": None if w is None else [sorted(c) for c in w.cover],
             "order": [s.v for s in steps] if not residual else None,
             "stuck_residual": sorted(to_set(residual)) if residual else None}
        if cfg.k < 2:
            r["note"] = "k=1 is outside the k>=2 range the divisibility theorem is stated for"
        reports.append(r)
    emit(cfg, _render(cfg, reports))
    return EXIT_OK if all(r["order"] is not None for r in reports) else EXIT_NEGATIVE


def cmd_perfectdiv(cfg: RunConfig, graphs: list[Graph]) -> int:
    reports = []
    for g in graphs:
        res = is_perfectly_divisible(g, cfg.cap_n)
        reports.append({"graph6": encode_graph6(g), "divisible": res.divisible,
                        "A": sorted(res.a) if res.a is not None else None,
                        "B": sorted(res.b) if res.b is not None else None,
                        "failing": sorted(res.failing) if res.failing is not None else None})
    emit(cfg, _render(cfg, reports))
    return EXIT_OK if all(r["divisible"] for r in reports) else EXIT_NEGATIVE


def cmd_kdiv(cfg: RunConfig, graphs: list[Graph]) -> int:
    reports = []
    for g in graphs:
        if g.m == 0:
            raise InputError("k-divisibility needs a graph with at least one edge")
        res = is_k_divisible(g, cfg.k, cfg.cap_n) if cfg.k >= 2 else None
        if res is None:
            raise InputError("kdiv needs --k >= 2")
        reports.append({"graph6": encode_graph6(g), "k": cfg.k, "divisible": res.divisible,
                        "parts": [sorted(p) for p in res.parts] if res.parts else None,
                        "failing": sorted(res.failing) if res.failing is not None else None})
    emit(cfg, _render(cfg, reports))
    return EXIT_OK if all(r["divisible"] for r in reports) else EXIT_NEGATIVE


def cmd_ramsey_verify(cfg: RunConfig, graphs: list[Graph]) -> int:
    if cfg.t is None:
        raise InputError("ramsey-verify needs --t")
    lines = [verify_counterexample(g, cfg.t, cfg.cap_n).to_json(encode_graph6(g)) + "\n" for g in graphs]
    emit(cfg, "".join(lines))
    return EXIT_OK


def cmd_ramsey_search(cfg: RunConfig, n: int, alpha: int) -> int:
    res = search_k4_free(n, alpha, cfg.budget, cfg.seed)
    report = {"graph6": encode_graph6(res.graph), "n": n, "alpha_target": alpha, "seed": cfg.seed,
              "budget": cfg.budget, "steps": res.steps, "violations": res.violations,
              "report": None if res.report is None else res.report.to_dict()}
    emit(cfg, _jdump(report) + "\n")
    return EXIT_OK if res.violations == 0 else EXIT_NEGATIVE


def cmd_tscan(cfg: RunConfig, c: str, t_max: int) -> int:
    rows = required_t_scan(c, t_max)
    if cfg.json:
        text = "".join(_jdump({"t": r.t, "lhs": r.lhs, "rhs": r.rhs, "satisfied": r.satisfied,
                               "log": "natural", "c": c}) + "\n" for r in rows)
    else:
        text = f"# lhs = c*t^3/ln(t)^4 - 1 with c = {c} (constant not given by the bound; natural log)\n"
        text += "".join(f"{r.t}\t{r.lhs:.6g}\t{r.rhs}\t{'yes' if r.satisfied else 'no'}\n" for r in rows)
    emit(cfg, text)
    return EXIT_OK


# ---------------------------------------------------------------- wiring

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", nargs="?", help="graph file ('-' for stdin)")
    common.add_argument("--g6", help="inline graph6 string")
    common.add_argument("--format", choices=["g6", "dimacs", "edges"], default="g6")
    common.add_argument("--k", type=int, default=2)
    common.add_argument("--cap-n", type=int, default=None)
    common.add_argument("--seed", type=int, default=1)
    common.add_argument("--budget", type=int, default=20000)
    common.add_argument("--json", action="store_true")
    common.add_argument("--batch", action="store_true", help="one graph per line in, one JSON report per line out")
    common.add_argument("--out")
    common.add_argument("-v", "--verbose", action="count", default=0)

    p = argparse.ArgumentParser(prog="graphdiv", description="Graph divisibility tools.")
    sub = p.add_subparsers(dest="command", required=True)
    for name, help_ in [
        ("info", "clique/independence/chromatic numbers, perfection, even holes"),
        ("divide", "write a verified (k+1)-division certificate"),
        ("color", "colour by recursive division and check the (k+1)^(omega-1) bound"),
        ("simplicial", "k-simplicial vertex and elimination ordering"),
        ("perfectdiv", "exhaustive perfect-divisibility check"),
        ("kdiv", "exhaustive k-divisibility check"),
        ("ramsey-verify", "evaluate a K4-free candidate against the alpha<=3 counterexample chain"),
    ]:
        sub.add_parser(name, parents=[common], help=help_)
        if name == "ramsey-verify":
            sub.choices[name].add_argument("--t", type=int)
    ev = sub.add_parser("evenhole", parents=[common], help="shortest even hole")
    ev.add_argument("--require-ehf", action="store_true")
    rs = sub.add_parser("ramsey-search", parents=[common], help="local search for K4-free graphs with small alpha")
    rs.add_argument("--n", type=int, required=True)
    rs.add_argument("--alpha", type=int, default=3)
    ts = sub.add_parser("tscan", parents=[common], help="tabulate the t needed for the counterexample inequality")
    ts.add_argument("--c", default="1")
    ts.add_argument("--t-max", type=int, default=100)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(args.command, args.input, args.g6, args.format, args.k, getattr(args, "t", None),
                    args.cap_n, args.seed, args.budget, args.out, args.json, args.batch, args.verbose)
    logging.basicConfig(level=logging.WARNING - 10 * min(cfg.verbosity, 2), format="%(levelname)s %(message)s")
    try:
        cfg.validate()
        config.load_caps()
        if cfg.command == "ramsey-search":
            return cmd_ramsey_search(cfg, args.n, args.alpha)
        if cfg.command == "tscan":
            return cmd_tscan(cfg, args.c, args.t_max)
        graphs = load_graphs(cfg)
        if cfg.command == "evenhole":
            return cmd_evenhole(cfg, graphs, args.require_ehf)
        handler = {
            "info": cmd_info, "divide": cmd_divide, "color": cmd_color, "simplicial": cmd_simplicial,
            "perfectdiv": cmd_perfectdiv, "kdiv": cmd_kdiv, "ramsey-verify": cmd_ramsey_verify,
        }[cfg.command]
        return handler(cfg, graphs)
    except NegativeResult:
        return EXIT_NEGATIVE
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except TheoremViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        for step in exc.trace:
            print(_jdump(step.to_dict()), file=sys.stderr)
        return EXIT_INTERNAL
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
