"""Finite simple graphs and their triangle / four-cycle / cherry statistics.

Vertices are 0..n-1. All counts are exact Python integers; densities are
exact ``fractions.Fraction`` values. Graphs are immutable after
construction and safe to share between threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Sequence


class Graph:
    """Immutable simple undirected graph given by vertex count and edge set."""

    __slots__ = ("n", "edges", "adj", "_nbr_sets")

    def __init__(self, n: int, edges: Iterable[Sequence[int]]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen = set()
        for e in edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {(u, v)} out of range for n={n}")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise ValueError(f"duplicate edge {(u, v)}")
            seen.add((u, v))
        self.n = n
        self.edges = tuple(sorted(seen))
        adj = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self.adj = tuple(tuple(sorted(a)) for a in adj)
        self._nbr_sets = None

    @property
    def nbr_sets(self):
        # built lazily; frozensets give O(1) adjacency tests in the hot loops
        if self._nbr_sets is None:
            self._nbr_sets = tuple(frozenset(a) for a in self.adj)
        return self._nbr_sets

    def degree(self, x: int) -> int:
        return len(self.adj[x])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.nbr_sets[u]

    def degree_sequence(self):
        return tuple(sorted((len(a) for a in self.adj), reverse=True))

    def regular_degree(self):
        """Common degree if the graph is regular, else None. n=0 counts as 0-regular."""
        if self.n == 0:
            return 0
        degs = {len(a) for a in self.adj}
        if len(degs) == 1:
            return degs.pop()
        return None

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"


@dataclass(frozen=True)
class LocalProfile:
    """Per-vertex cycle statistics.

    c3: triangles through the vertex; c4: four-cycles through it;
    ct: the diagonal-weighted four-cycle count (each four-cycle counts 1
    at every corner when both diagonals are present, 2 at the endpoints
    of the diagonal when exactly one is present, 0 otherwise);
    types: four-cycle counts split by which diagonals are present
    (both, root-diagonal only, far-diagonal only, neither);
    nbhd_degrees: non-increasing degree sequence of the induced
    neighborhood graph.
    """

    c3: int
    c4: int
    ct: int
    types: tuple
    nbhd_degrees: tuple

    def __post_init__(self):
        c41, c42, c43, c44 = self.types
        if self.c4 != c41 + c42 + c43 + c44:
            raise ValueError("type counts do not sum to c4")
        if self.ct != c41 + 2 * c42:
            raise ValueError("ct inconsistent with type counts")

    def point(self):
        return (Fraction(self.c3, 3), Fraction(self.c4, 4))


@dataclass(frozen=True)
class TripleProfile:
    """Edge count and the numbers of vertex triples spanning 0..3 edges."""

    e: int
    n0: int
    n1: int
    n2: int
    n3: int


def local_profile(G: Graph, x: int, require_regular: bool = False) -> LocalProfile:
    """Triangle, four-cycle and weighted-square statistics at vertex x.

    Four-cycles through x are enumerated via unordered pairs {a, c} of
    neighbors of x and their common neighbors b != x (the cherry a-b-c with
    both leaves next to x); each cycle x-a-b-c is then classified by its two
    diagonals x-b and a-c.
    """
    if not (0 <= x < G.n):
        raise ValueError(f"vertex {x} out of range")
    if require_regular and G.regular_degree() is None:
        raise ValueError("graph is not regular")
    nbrs = G.adj[x]
    sets = G.nbr_sets
    root_nbrs = sets[x]
    c3 = 0
    c41 = c42 = c43 = c44 = 0
    for i, a in enumerate(nbrs):
        sa = sets[a]
        for c in nbrs[i + 1:]:
            ac = c in sa
            if ac:
                c3 += 1
            for b in sa & sets[c]:
                if b == x:
                    continue
                if b in root_nbrs:
                    if ac:
                        c41 += 1
                    else:
                        c42 += 1
                else:
                    if ac:
                        c43 += 1
                    else:
                        c44 += 1
    gx = neighborhood_graph(G, x)
    tp = triple_profile(gx)
    ct = 3 * tp.n3 + 2 * tp.n2
    prof = LocalProfile(
        c3=c3,
        c4=c41 + c42 + c43 + c44,
        ct=ct,
        types=(c41, c42, c43, c44),
        nbhd_degrees=gx.degree_sequence(),
    )
    assert prof.c3 == len(gx.edges)
    return prof


def _c3_c4_at(G: Graph, x: int):
    # lean variant of local_profile for bulk recounts
    nbrs = G.adj[x]
    sets = G.nbr_sets
    c3 = 0
    c4 = 0
    for i, a in enumerate(nbrs):
        sa = sets[a]
        for c in nbrs[i + 1:]:
            if c in sa:
                c3 += 1
            common = sa & sets[c]
            c4 += len(common) - (x in common)
    return c3, c4


def cycle_totals(G: Graph):
    """Total numbers of triangles and four-cycles in the graph."""
    s3 = 0
    s4 = 0
    for x in range(G.n):
        c3, c4 = _c3_c4_at(G, x)
        s3 += c3
        s4 += c4
    assert s3 % 3 == 0 and s4 % 4 == 0
    return s3 // 3, s4 // 4


def cycle_point(G: Graph):
    """Exact (triangle density, square density) pair of a regular graph."""
    if G.n < 1:
        raise ValueError("need at least one vertex")
    if G.regular_degree() is None:
        raise ValueError("cycle_point requires a regular graph")
    c3, c4 = cycle_totals(G)
    return (Fraction(c3, G.n), Fraction(c4, G.n))


def triple_profile(H: Graph) -> TripleProfile:
    """Classify all vertex triples of H by how many edges they span."""
    counts = [0, 0, 0, 0]
    sets = H.nbr_sets
    for a, b, c in combinations(range(H.n), 3):
        k = (b in sets[a]) + (c in sets[a]) + (c in sets[b])
        counts[k] += 1
    tp = TripleProfile(e=len(H.edges), n0=counts[0], n1=counts[1], n2=counts[2], n3=counts[3])
    v = H.n
    assert tp.n0 + tp.n1 + tp.n2 + tp.n3 == comb(v, 3)
    assert tp.n1 + 2 * tp.n2 + 3 * tp.n3 == max(v - 2, 0) * tp.e
    return tp


def neighborhood_graph(G: Graph, x: int) -> Graph:
    """Induced subgraph on the neighbors of x, relabeled to 0..deg(x)-1."""
    if not (0 <= x < G.n):
        raise ValueError(f"vertex {x} out of range")
    nbrs = G.adj[x]
    index = {v: i for i, v in enumerate(nbrs)}
    edges = []
    for i, a in enumerate(nbrs):
        sa = G.nbr_sets[a]
        for c in nbrs[i + 1:]:
            if c in sa:
                edges.append((index[a], index[c]))
    return Graph(len(nbrs), edges)


def type2_cherries_at(G: Graph, x: int) -> int:
    """Cherries with both leaves in N(x) whose middle vertex avoids {x} u N(x)."""
    nbrx = G.nbr_sets[x]
    total = 0
    outside_hits = {}
    for a in G.adj[x]:
        for y in G.adj[a]:
            if y != x and y not in nbrx:
                outside_hits[y] = outside_hits.get(y, 0) + 1
    for k in outside_hits.values():
        total += k * (k - 1) // 2
    return total


def max_c4_given_degrees(r: int, degrees: Sequence[int]) -> int:
    """Largest possible four-cycle count at a vertex of an r-regular graph
    whose neighborhood has the given degree sequence.

    The outside part is maximized by the staircase assignment
    e_j = #{i : d_i < r - j}; the value is sum C(d_i,2) + sum C(e_j,2).
    """
    degrees = list(degrees)
    if len(degrees) != r:
        raise ValueError("degree sequence must have length r")
    if any(not (0 <= d <= r - 1) for d in degrees):
        raise ValueError("neighborhood degrees must lie in [0, r-1]")
    if any(degrees[i] < degrees[i + 1] for i in range(len(degrees) - 1)):
        raise ValueError("degree sequence must be non-increasing")
    inside = sum(comb(d, 2) for d in degrees)
    outside = 0
    for j in range(1, r):
        e_j = sum(1 for d in degrees if d < r - j)
        outside += comb(e_j, 2)
    return inside + outside


def under_top_segment(r: int, c3: int, c4: int) -> bool:
    """Whether the per-vertex point (c3/3, c4/4) lies on or under the chord
    from (0, (r-1)C(r,2)/4) to (C(r,2)/3, r C(r-1,2)/4).

    In (c3, c4) coordinates the chord has slope -1, so the test is a
    coordinate-sum bound.
    """
    return c3 + c4 <= (r - 1) * comb(r, 2)


# ---------------------------------------------------------------------------
# constructors and combinators


def complete_graph(k: int) -> Graph:
    return Graph(k, combinations(range(k), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def cycle_graph(m: int) -> Graph:
    if m < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(m, ((i, (i + 1) % m) for i in range(m)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def prism_graph() -> Graph:
    return Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def complement(G: Graph) -> Graph:
    edges = [(u, v) for u, v in combinations(range(G.n), 2) if v not in G.nbr_sets[u]]
    return Graph(G.n, edges)


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    n = 0
    edges = []
    for g in graphs:
        edges.extend((u + n, v + n) for u, v in g.edges)
        n += g.n
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# serialization

# Graph JSON: {"n": <int>, "edges": [[u, v], ...]} with u < v, sorted.


def to_json_dict(G: Graph) -> dict:
    return {"n": G.n, "edges": [list(e) for e in G.edges]}


def to_json(G: Graph, indent=None) -> str:
    return json.dumps(to_json_dict(G), indent=indent)


def from_json_dict(data: dict) -> Graph:
    return Graph(int(data["n"]), [tuple(e) for e in data["edges"]])


def from_json(text: str) -> Graph:
    return from_json_dict(json.loads(text))


def from_edge_list_text(text: str) -> Graph:
    """Parse a 'u v' per line edge list; n is inferred as max vertex + 1.

    Lines starting with '#' and blank lines are skipped. Trailing isolated
    vertices cannot be represented in this format; use JSON for those.
    """
    edges = []
    top = -1
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {line!r}")
        u, v = int(parts[0]), int(parts[1])
        top = max(top, u, v)
        edges.append((u, v))
    return Graph(top + 1, edges)


def load_graph(path) -> Graph:
    with open(path) as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return from_json(text)
    return from_edge_list_text(text)
