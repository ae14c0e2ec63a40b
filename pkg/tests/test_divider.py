import json
import random

import pytest
from hypothesis import given

import brute
from graphdiv import divider
from graphdiv.corpus import connected_even_hole_free, random_even_hole_free
from graphdiv.divider import (
    GROW,
    STAY,
    Division,
    certificate,
    certificate_json,
    color_by_division,
    divide,
    division_from_certificate,
    verify_division,
)
from graphdiv.errors import OrderingError, TheoremViolation
from graphdiv.generators import complete_graph, cycle_graph, empty_graph, petersen_graph
from graphdiv.graph import induced_subgraph
from graphdiv.oracles import chromatic_number, is_proper_coloring, max_clique
from graphdiv.simplicial import EliminationOrder, SimplicialWitness, elimination_order
from helpers import graphs, random_graphs

K2, C5, C7 = complete_graph(2), cycle_graph(5), cycle_graph(7)


def _order(g, k):
    o = elimination_order(g, k)
    assert o is not None
    return o


def test_divide_k2():
    d, trace = divide(K2, 2, _order(K2, 2))
    assert _order(K2, 2).vertices == [0, 1]
    assert d.parts == (0, 1) and d.k_plus_1 == 3
    assert d.omega == 2 and d.per_part_clique == (1, 1, 0)
    assert [t.branch for t in trace] == [GROW, GROW]


@pytest.mark.parametrize("g", [C5, C7], ids=["C5", "C7"])
def test_divide_odd_cycles_gives_independent_parts(g):
    d, trace = divide(g, 2, _order(g, 2), check=True)
    assert d.k_plus_1 == 3 and d.omega == 2
    for part in d.part_sets():
        assert brute.is_independent(g, part)
    assert verify_division(g, d) == (True, "ok")


def test_divide_rejects_bad_input():
    with pytest.raises(ValueError):
        divide(empty_graph(3), 2, _order(empty_graph(3), 2))
    with pytest.raises(ValueError):
        divide(C5, 1, _order(C5, 2))
    bogus = EliminationOrder(2, tuple(SimplicialWitness(v, (frozenset(), frozenset())) for v in range(5)))
    with pytest.raises(ValueError):
        divide(C5, 2, bogus)


def test_theorem_violation_on_forged_order(monkeypatch):
    # C5 has no 1-simplicial ordering; a forged one must trip the defence
    monkeypatch.setattr(divider, "is_valid_order", lambda g, o: True)
    forged = EliminationOrder(1, tuple(SimplicialWitness(v, (frozenset(),)) for v in range(5)))
    with pytest.raises(TheoremViolation) as info:
        divide(C5, 1, forged)
    assert info.value.trace


def test_verify_division_examples():
    d, _ = divide(C5, 2, _order(C5, 2))
    assert verify_division(C5, d)[0]
    k4 = complete_graph(4)
    ok, why = verify_division(k4, Division(3, (0, 0, 0, 0), 4, (4, 0, 0)))
    assert not ok and "part 0" in why
    assert verify_division(K2, Division(3, (0, 1), 2, (1, 1, 0))) == (True, "ok")
    assert not verify_division(K2, Division(3, (0, 1), 1, (1, 1, 0)))[0]
    assert not verify_division(K2, Division(3, (0,), 2, (1, 1, 0)))[0]


def _check_trace(g, k, trace):
    w = 0
    current = 0
    for t in trace:
        nb_w = max_clique(induced_subgraph(g, (g.adj[t.v] & current))[0]).size
        grew = nb_w >= w
        assert t.branch == (GROW if grew else STAY)
        if t.branch == STAY and w >= 2:
            assert len(t.bad) == k + 1
            assert sum(t.bad) <= k
            assert not t.bad[t.chosen]
            assert t.chosen == t.bad.index(False)
        current |= 1 << t.v
        w = max_clique(induced_subgraph(g, current)[0]).size


def test_trace_bookkeeping_on_even_hole_free_graphs():
    for n in range(2, 8):
        for g in connected_even_hole_free(n):
            if g.m == 0:
                continue
            d, trace = divide(g, 2, _order(g, 2), check=True)
            assert verify_division(g, d)[0]
            _check_trace(g, 2, trace)
            for part in d.part_sets():
                if part:
                    assert brute.clique_number(g, part) <= d.omega - 1


def _chordal_graphs(count, seed):
    out = []
    for g in random_graphs(count * 4, 2, 8, seed=seed):
        if g.m and not brute.has_hole(g):
            out.append(g)
        if len(out) == count:
            break
    return out


def test_chordal_graphs_k1():
    graphs_ = _chordal_graphs(150, seed=42)
    assert len(graphs_) >= 100
    for g in graphs_:
        o = elimination_order(g, 1)
        assert o is not None  # chordal graphs have perfect elimination orderings
        d, trace = divide(g, 1, o, check=True)
        assert d.k_plus_1 == 2 and verify_division(g, d)[0]
        _check_trace(g, 1, trace)


def test_color_by_division_examples():
    c = color_by_division(K2, 2)
    assert c.colors_used == 2 and c.bound == 3
    c = color_by_division(C5, 2)
    assert c.colors_used == 3 == chromatic_number(C5).chi and c.bound == 3
    assert color_by_division(empty_graph(4), 2).colors_used == 1
    assert color_by_division(empty_graph(0), 2).colors_used == 0


def test_color_by_division_reports_stuck_part():
    with pytest.raises(OrderingError) as info:
        color_by_division(petersen_graph(), 2)
    assert info.value.residual == set(range(10))


def test_color_by_division_on_even_hole_free_graphs():
    rng = random.Random(3)
    seen_omega3 = 0
    corpus = [g for n in range(2, 8) for g in connected_even_hole_free(n)]
    corpus += [random_even_hole_free(n, rng) for n in (8, 9) for _ in range(60)]
    for g in corpus:
        c = color_by_division(g, 2)
        assert is_proper_coloring(g, c.colors)
        assert c.colors_used <= 3 ** (c.omega - 1) if c.omega else c.colors_used == 0
        assert c.colors_used >= chromatic_number(g).chi
        if c.omega == 3:
            seen_omega3 += 1
            assert c.colors_used <= 9
    assert seen_omega3 > 0


@given(graphs(min_n=2, max_n=9))
def test_divide_whenever_an_order_exists(g):
    for k in (1, 2, 3):
        o = elimination_order(g, k)
        if o is None or g.m == 0:
            continue
        d, trace = divide(g, k, o)
        assert verify_division(g, d)[0]
        _check_trace(g, k, trace)


def test_certificate_json_shape():
    d, trace = divide(C5, 2, _order(C5, 2))
    text = certificate_json(d, trace)
    obj = json.loads(text)
    assert list(obj) == ["n", "k", "omega", "parts", "per_part_clique", "trace"]
    assert list(obj["trace"][0]) == ["v", "branch", "bad", "chosen"]
    assert obj["n"] == 5 and obj["k"] == 2 and obj["omega"] == 2
    assert division_from_certificate(obj) == d
    assert certificate(d, trace) == obj
    assert certificate_json(*divide(C5, 2, _order(C5, 2))) == text
