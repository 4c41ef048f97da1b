"""Independent brute-force oracles used across the test suite.

These deliberately avoid the library's counting strategy (neighbor-pair
intersection): triangles and four-cycles are found by enumerating vertex
subsets, so agreement with the package is a genuine cross-check.
"""

import random
from itertools import combinations

from cycledensity.graphs import Graph


def brute_triangles(G: Graph) -> int:
    s = G.nbr_sets
    return sum(
        1
        for a, b, c in combinations(range(G.n), 3)
        if b in s[a] and c in s[a] and c in s[b]
    )


def _cycles_of_quadruple(G: Graph, quad):
    """All 4-cycles on a 4-vertex set, as (corner, opposite-pair) tuples."""
    a, b, c, d = quad
    s = G.nbr_sets
    found = []
    # three candidate cyclic orders on the quadruple
    for order in ((a, b, c, d), (a, c, b, d), (a, b, d, c)):
        w, x, y, z = order
        if x in s[w] and y in s[x] and z in s[y] and w in s[z]:
            found.append(order)
    return found


def brute_four_cycles(G: Graph) -> int:
    total = 0
    for quad in combinations(range(G.n), 4):
        total += len(_cycles_of_quadruple(G, quad))
    return total


def brute_four_cycles_through(G: Graph, x: int):
    """4-cycles through x with diagonal classification, by subset search.

    Returns (c4, (c41, c42, c43, c44)) where the split follows the two
    diagonals: root-to-opposite and the other one.
    """
    s = G.nbr_sets
    c4 = 0
    types = [0, 0, 0, 0]
    for quad in combinations(range(G.n), 4):
        if x not in quad:
            continue
        for order in _cycles_of_quadruple(G, quad):
            i = order.index(x)
            opp = order[(i + 2) % 4]
            n1, n2 = order[(i + 1) % 4], order[(i + 3) % 4]
            c4 += 1
            d_root = opp in s[x]
            d_far = n2 in s[n1]
            if d_root and d_far:
                types[0] += 1
            elif d_root:
                types[1] += 1
            elif d_far:
                types[2] += 1
            else:
                types[3] += 1
    return c4, tuple(types)


def brute_triangles_through(G: Graph, x: int) -> int:
    s = G.nbr_sets
    return sum(
        1
        for a, b in combinations(range(G.n), 2)
        if a != x and b != x and a in s[x] and b in s[x] and b in s[a]
    )


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [e for e in combinations(range(n), 2) if rng.random() < p]
    return Graph(n, edges)


def random_regular_via_shuffle(r: int, n: int, rng: random.Random, tries=5000) -> Graph:
    """Simple pairing-model sampler independent of the package's sampler."""
    assert (n * r) % 2 == 0
    stubs = [v for v in range(n) for _ in range(r)]
    for _ in range(tries):
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or (min(u, v), max(u, v)) in edges:
                ok = False
                break
            edges.add((min(u, v), max(u, v)))
        if ok:
            return Graph(n, edges)
    raise RuntimeError("random regular sampling failed")
