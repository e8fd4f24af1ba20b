"""Shared oracles and generators for the test suite.

Everything here recomputes results from first principles (itertools
scans, networkx algorithms) so package behaviour is always checked
against an independent route.
"""

from __future__ import annotations

import itertools
from random import Random

import networkx as nx

from dpcolor import (
    Cover,
    MultiGraph,
    PartialColoring,
    SimpleGraph,
    residual_list,
)


def to_nx(g: SimpleGraph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def from_nx(G: nx.Graph) -> SimpleGraph:
    G = nx.convert_node_labels_to_integers(G, ordering="sorted")
    return SimpleGraph(G.number_of_nodes(), G.edges())


def nx_graph6(G: nx.Graph) -> str:
    return nx.to_graph6_bytes(G, header=False).decode().strip()


def atlas_connected(sizes) -> list[nx.Graph]:
    """Connected atlas graphs with vertex count in ``sizes`` (exhaustive, n <= 7)."""
    from networkx.generators.atlas import graph_atlas_g

    out = []
    for G in graph_atlas_g():
        if G.number_of_nodes() in sizes and G.number_of_nodes() > 0 and nx.is_connected(G):
            out.append(nx.convert_node_labels_to_integers(G, ordering="sorted"))
    return out


# ---------------------------------------------------------------------------
# brute-force coloring oracles


def brute_force_colorings(c: Cover) -> list[tuple[int, ...]]:
    """Every full assignment avoiding all matched pairs, by direct product scan."""
    constraints = [(u, v, set(c.h_edges(u, v))) for u, v in c.edge_pairs()]
    hits = []
    for combo in itertools.product(*[range(c.size(u)) for u in range(c.n)]):
        if all((combo[u], combo[v]) not in h for u, v, h in constraints):
            hits.append(combo)
    return hits


def residual_count(c: Cover) -> int:
    """Count full colorings by recursing on residual lists, vertex by vertex."""

    def rec(p: PartialColoring, todo: list[int]) -> int:
        if not todo:
            return 1
        u, rest = todo[0], todo[1:]
        return sum(rec(p.extended({u: i}), rest) for i in residual_list(c, p, u))

    return rec(PartialColoring(), list(range(c.n)))


def brute_force_k_colorable(g: SimpleGraph, k: int) -> bool:
    """Proper k-colorability by scanning all k^n assignments."""
    for combo in itertools.product(range(k), repeat=g.n):
        if all(combo[u] != combo[v] for u, v in g.edges()):
            return True
    return g.n == 0


# ---------------------------------------------------------------------------
# random instances


def random_connected_graph(rng: Random, n: int, extra_p: float = 0.3) -> SimpleGraph:
    """Random spanning tree plus each remaining pair with probability extra_p."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u = order[rng.randrange(i)]
        v = order[i]
        edges.add((min(u, v), max(u, v)))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < extra_p:
                edges.add((u, v))
    return SimpleGraph(n, sorted(edges))


def random_partial_injection(rng: Random, a: int, b: int) -> tuple[tuple[int, int], ...]:
    rows = [i for i in range(a) if rng.random() < 0.6]
    cols = rng.sample(range(b), min(len(rows), b))
    rows = rows[: len(cols)]
    return tuple(sorted(zip(rows, cols)))


def random_perfect_matching(rng: Random, k: int) -> tuple[tuple[int, int], ...]:
    cols = list(range(k))
    rng.shuffle(cols)
    return tuple(sorted(zip(range(k), cols)))


def random_cover(rng: Random, g: SimpleGraph, sizes, perfect: bool = False) -> Cover:
    sizes = list(sizes)
    matchings = {}
    for u, v in g.edges():
        if perfect and sizes[u] == sizes[v]:
            matchings[(u, v)] = random_perfect_matching(rng, sizes[u])
        else:
            matchings[(u, v)] = random_partial_injection(rng, sizes[u], sizes[v])
    return Cover(g, sizes, matchings)


def random_multigraph(rng: Random, n: int, max_mult: int = 2) -> MultiGraph:
    triples = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.5:
                triples.append((u, v, rng.randint(1, max_mult)))
    return MultiGraph(n, triples)


# ---------------------------------------------------------------------------
# structural oracles built on networkx


def nx_block_kind(G: nx.Graph, block) -> str | None:
    sub = G.subgraph(block)
    b = sub.number_of_nodes()
    if sub.number_of_edges() == b * (b - 1) // 2:
        return "clique"
    if b >= 3 and all(d == 2 for _, d in sub.degree()):
        return "cycle"
    return None


def nx_is_gdp_forest(G: nx.Graph) -> bool:
    return all(nx_block_kind(G, b) is not None for b in nx.biconnected_components(G))


def nx_is_gallai_forest(G: nx.Graph) -> bool:
    for b in nx.biconnected_components(G):
        kind = nx_block_kind(G, b)
        if kind == "clique":
            continue
        if kind == "cycle" and len(b) % 2 == 1:
            continue
        return False
    return True


def nx_clique_number(G: nx.Graph) -> int:
    if G.number_of_nodes() == 0:
        return 0
    return max(len(c) for c in nx.find_cliques(G))


# ---------------------------------------------------------------------------
# exhaustive graph families


def _canonical_pool():
    """Bucketed isomorphism dedup: key by invariants, confirm by isomorphism."""
    buckets: dict[tuple, list[nx.Graph]] = {}

    def add(G: nx.Graph) -> bool:
        key = (
            G.number_of_nodes(),
            G.number_of_edges(),
            tuple(sorted(d for _, d in G.degree())),
            nx.weisfeiler_lehman_graph_hash(G),
        )
        bucket = buckets.setdefault(key, [])
        for H in bucket:
            if nx.is_isomorphic(G, H):
                return False
        bucket.append(G)
        return True

    return add


def connected_gdp_trees(max_n: int) -> list[SimpleGraph]:
    """All connected graphs with every block a clique or a cycle, up to iso.

    Grown by gluing a fresh leaf block (clique or cycle) onto one vertex
    of a smaller member; every such graph arises this way because its
    block-cut tree has a leaf block.
    """
    add = _canonical_pool()
    start = nx.Graph()
    start.add_node(0)
    add(start)
    done: list[nx.Graph] = []
    frontier = [start]
    while frontier:
        done.extend(frontier)
        grown: list[nx.Graph] = []
        for G in frontier:
            n = G.number_of_nodes()
            for v in range(n):
                for b in range(2, max_n - n + 2):
                    fresh = list(range(n, n + b - 1))
                    ring = [v] + fresh
                    for shape in ("clique", "cycle"):
                        if shape == "cycle" and b < 3:
                            continue
                        H = G.copy()
                        if shape == "clique":
                            H.add_edges_from(itertools.combinations(ring, 2))
                        else:
                            H.add_edges_from(zip(ring, ring[1:] + ring[:1]))
                        if add(H):
                            grown.append(H)
        frontier = grown
    return [from_nx(G) for G in done]


def connected_cubic_8() -> list[SimpleGraph]:
    """The connected 3-regular graphs on 8 vertices, exhaustively generated."""
    n = 8
    found: list[nx.Graph] = []
    add = _canonical_pool()
    deg = [0] * n
    adj: set[tuple[int, int]] = set()

    def rec(u: int):
        if u == n:
            G = nx.Graph(sorted(adj))
            G.add_nodes_from(range(n))
            if nx.is_connected(G) and add(G):
                found.append(G)
            return
        need = 3 - deg[u]
        if need < 0:
            return
        cands = [v for v in range(u + 1, n) if deg[v] < 3]
        # every isomorphism class has a labeling with N(0) = {1, 2, 3}
        choices = [(1, 2, 3)] if u == 0 else itertools.combinations(cands, need)
        for picks in choices:
            for v in picks:
                adj.add((u, v))
                deg[v] += 1
            deg[u] += need
            rec(u + 1)
            deg[u] -= need
            for v in picks:
                adj.discard((u, v))
                deg[v] -= 1

    rec(0)
    assert len(found) == 5, f"expected 5 connected cubic graphs on 8 vertices, got {len(found)}"
    return [from_nx(G) for G in found]


# ---------------------------------------------------------------------------
# witness checking


def dirac_witness_holds(g: SimpleGraph, k: int, w) -> bool:
    """Re-verify a claimed V1/V2/V3 split against every defining condition."""
    v1, v2, v3 = set(w.V1), set(w.V2), set(w.V3)
    if len(v1) != k or len(v2) != k - 1 or len(v3) != 2:
        return False
    if v1 | v2 | v3 != set(g.vertices) or len(v1) + len(v2) + len(v3) != g.n:
        return False
    x, y = sorted(v3)
    if g.has_edge(x, y):
        return False
    if any(not g.has_edge(a, b) for a in v1 for b in v1 if a < b):
        return False
    if any(not g.has_edge(a, b) for a in v2 for b in v2 if a < b):
        return False
    for u in v1:
        if len(v3 & g.neighbors(u)) != 1:
            return False
    for z in v3:
        if not (v1 & g.neighbors(z)):
            return False
    for u in v2:
        if v3 - g.neighbors(u):
            return False
    if any(g.has_edge(a, b) for a in v1 for b in v2):
        return False
    attach = dict(w.attachment)
    if set(attach) != v1:
        return False
    if any(not g.has_edge(u, z) or z not in v3 for u, z in attach.items()):
        return False
    return True
