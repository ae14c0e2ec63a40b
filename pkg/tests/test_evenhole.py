import itertools
import random

import pytest
from hypothesis import given, settings

import brute
from graphdiv.errors import CapExceeded
from graphdiv.evenhole import chordless_cycles, is_even_hole_free, is_hole, shortest_even_hole
from graphdiv.corpus import random_even_hole_free
from graphdiv.generators import all_labeled_graphs, complete_graph, cycle_graph, path_graph, rook_graph
from graphdiv.graph import from_edge_list, induced_subgraph
from helpers import graphs, random_graphs


def test_shortest_even_hole_examples():
    assert shortest_even_hole(cycle_graph(4)) == (0, 1, 2, 3)
    assert shortest_even_hole(cycle_graph(5)) is None
    h = shortest_even_hole(cycle_graph(6))
    assert len(h) == 6 and is_hole(cycle_graph(6), h)


def test_is_even_hole_free_examples():
    assert is_even_hole_free(complete_graph(4))
    assert is_even_hole_free(path_graph(6))
    assert is_even_hole_free(cycle_graph(7))
    rook = rook_graph(3, 3)
    assert brute.has_even_hole(rook)
    assert not is_even_hole_free(rook)
    assert len(shortest_even_hole(rook)) == 4


def test_cap():
    with pytest.raises(CapExceeded):
        is_even_hole_free(cycle_graph(19))
    assert not is_even_hole_free(cycle_graph(20), cap=20)


def test_shortest_prefers_length_then_lex():
    # C6 plus a C4 elsewhere: the 4-hole wins even though the 6-hole starts lower
    g = from_edge_list(10, [(i, (i + 1) % 6) for i in range(6)] + [(6, 7), (7, 8), (8, 9), (9, 6)])
    assert shortest_even_hole(g) == (6, 7, 8, 9)


@settings(max_examples=200)
@given(graphs(max_n=8))
def test_agrees_with_subset_brute_force(g):
    hole = shortest_even_hole(g)
    assert (hole is None) == (not brute.has_even_hole(g))
    if hole is not None:
        assert is_hole(g, hole) and len(hole) % 2 == 0
        shortest = min(len(c) for size in range(4, g.n + 1, 2)
                       for c in itertools.combinations(range(g.n), size)
                       if brute.induces_cycle(g, c))
        assert len(hole) == shortest


def test_agrees_exhaustively_up_to_six_vertices():
    for n in range(7):
        for g in all_labeled_graphs(n):
            assert is_even_hole_free(g) == (not brute.has_even_hole(g))


def test_random_eight_vertex_graphs():
    for g in random_graphs(400, 8, 8, seed=31):
        assert is_even_hole_free(g) == (not brute.has_even_hole(g))


def test_chordless_cycles_enumerated_once():
    for g in random_graphs(100, 4, 9, seed=17):
        found = list(chordless_cycles(g))
        assert len({frozenset(c) for c in found}) == len(found)
        expect = {frozenset(c) for size in range(4, g.n + 1)
                  for c in itertools.combinations(range(g.n), size) if brute.induces_cycle(g, c)}
        assert {frozenset(c) for c in found} == expect
        for c in found:
            assert is_hole(g, c) and c[0] == min(c) and c[1] < c[-1]


def test_hereditary_on_random_induced_subgraphs():
    rng = random.Random(5)
    for _ in range(50):
        g = random_even_hole_free(9, rng)
        keep = [v for v in range(9) if rng.random() < 0.6]
        assert is_even_hole_free(induced_subgraph(g, keep)[0])
