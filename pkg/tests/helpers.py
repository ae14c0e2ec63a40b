import random

import hypothesis.strategies as st

from graphdiv.graph import from_edge_list


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [e for e, k in zip(pairs, keep) if k])


def random_graphs(count, n_min, n_max, seed, p=None):
    """Seeded G(n, p) sample; p itself is drawn uniformly when not given."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(n_min, n_max)
        q = rng.random() if p is None else p
        out.append(from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < q]))
    return out
