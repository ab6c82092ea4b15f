import random
from itertools import combinations

import pytest

from tdtc import Graph


def _connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    seen = {1}
    frontier = [1]
    while frontier:
        nxt = []
        for v in frontier:
            for u in g.adj[v]:
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return len(seen) == g.n


@pytest.fixture(scope="session")
def exhaustive_connected_upto5() -> list[Graph]:
    """Every labeled connected graph on 2..5 vertices (771 graphs)."""
    out = []
    for n in range(2, 6):
        pairs = list(combinations(range(1, n + 1), 2))
        for mask in range(1 << len(pairs)):
            edges = frozenset(pairs[i] for i in range(len(pairs)) if mask >> i & 1)
            if len(edges) < n - 1:
                continue
            g = Graph(n, edges)
            if _connected(g):
                out.append(g)
    return out


@pytest.fixture(scope="session")
def random_corpus() -> list[Graph]:
    """200 seeded random graphs on at most 9 vertices with minimum degree 1."""
    rng = random.Random(20250810)
    out = []
    while len(out) < 200:
        n = rng.randint(2, 9)
        p = rng.choice((0.25, 0.4, 0.6))
        edges = {pair for pair in combinations(range(1, n + 1), 2) if rng.random() < p}
        touched = {v for e in edges for v in e}
        for v in range(1, n + 1):
            if v not in touched:
                u = rng.choice([w for w in range(1, n + 1) if w != v])
                edges.add((min(u, v), max(u, v)))
                touched.update((u, v))
        out.append(Graph(n, frozenset(edges)))
    return out
