"""Immutable simple graphs and loopless multigraphs, with graph6 I/O.

Vertices are always 0..n-1.  ``SimpleGraph`` stores a tuple of frozen
neighbor sets and is hashable; ``MultiGraph`` stores positive edge
multiplicities keyed by sorted vertex pairs.  The graph6 codec implements
the short form of McKay's format (n <= 62): one header byte ``n + 63``
followed by ceil(n(n-1)/2 / 6) payload bytes carrying the upper triangle
of the adjacency matrix in column order, six bits per byte, each offset
by 63.  Parse failures raise :class:`Graph6Error` naming the byte offset.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the failing byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class SimpleGraph:
    """Undirected simple graph on vertices 0..n-1, immutable after construction."""

    __slots__ = ("n", "m", "_adj", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        edge_set: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            a, b = (u, v) if u < v else (v, u)
            edge_set.add((a, b))
            adj[a].add(b)
            adj[b].add(a)
        self.n = n
        self.m = len(edge_set)
        self._adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in adj)
        self._edges: tuple[tuple[int, int], ...] = tuple(sorted(edge_set))

    @property
    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as (u, v) pairs with u < v, sorted."""
        return self._edges

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"vertex pair ({u}, {v}) out of range for n={self.n}")
        return v in self._adj[u]

    def neighbors(self, u: int) -> frozenset[int]:
        return self._adj[u]

    def degree(self, u: int) -> int:
        return len(self._adj[u])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self._adj)

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def induced(self, vertices: Iterable[int]) -> "SimpleGraph":
        """Induced subgraph; result vertex i corresponds to sorted(vertices)[i]."""
        vs = sorted(set(vertices))
        if vs and not (0 <= vs[0] and vs[-1] < self.n):
            raise ValueError(f"vertices {vs} out of range for n={self.n}")
        index = {v: i for i, v in enumerate(vs)}
        edges = [
            (index[u], index[v])
            for u, v in self._edges
            if u in index and v in index
        ]
        return SimpleGraph(len(vs), edges)

    def connected_components(self) -> tuple[frozenset[int], ...]:
        """Components sorted by smallest contained vertex."""
        seen = [False] * self.n
        comps: list[frozenset[int]] = []
        for start in range(self.n):
            if seen[start]:
                continue
            stack = [start]
            seen[start] = True
            comp = [start]
            while stack:
                u = stack.pop()
                for w in self._adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            comps.append(frozenset(comp))
        return tuple(comps)

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.connected_components()) == 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, m={self.m})"


class MultiGraph:
    """Loopless multigraph: positive multiplicities on sorted vertex pairs."""

    __slots__ = ("n", "m", "_mult")

    def __init__(self, n: int, edges: Iterable[tuple[int, int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        mult: dict[tuple[int, int], int] = {}
        for u, v, t in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            if t <= 0:
                raise ValueError(f"multiplicity for ({u}, {v}) must be positive, got {t}")
            key = (u, v) if u < v else (v, u)
            mult[key] = mult.get(key, 0) + t
        self.n = n
        self._mult: dict[tuple[int, int], int] = dict(sorted(mult.items()))
        self.m = sum(self._mult.values())

    @property
    def vertices(self) -> range:
        return range(self.n)

    def pairs(self) -> tuple[tuple[int, int, int], ...]:
        """Distinct adjacent pairs as (u, v, multiplicity), u < v, sorted."""
        return tuple((u, v, t) for (u, v), t in self._mult.items())

    def multiplicity(self, u: int, v: int) -> int:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"vertex pair ({u}, {v}) out of range for n={self.n}")
        key = (u, v) if u < v else (v, u)
        return self._mult.get(key, 0)

    def degree(self, u: int) -> int:
        """Degree counting multiplicities."""
        if not 0 <= u < self.n:
            raise ValueError(f"vertex {u} out of range for n={self.n}")
        return sum(t for (a, b), t in self._mult.items() if a == u or b == u)

    def degrees(self) -> tuple[int, ...]:
        degs = [0] * self.n
        for (a, b), t in self._mult.items():
            degs[a] += t
            degs[b] += t
        return tuple(degs)

    def simple(self) -> SimpleGraph:
        """Underlying simple graph (multiplicities collapsed)."""
        return SimpleGraph(self.n, self._mult.keys())

    def is_connected(self) -> bool:
        return self.simple().is_connected()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self.n == other.n and self._mult == other._mult

    def __hash__(self) -> int:
        return hash((self.n, tuple(self._mult.items())))

    def __repr__(self) -> str:
        return f"MultiGraph(n={self.n}, m={self.m})"


def parse_graph6(text: str) -> SimpleGraph:
    """Decode one short-form graph6 line (n <= 62) into a SimpleGraph.

    Accepts an optional ``>>graph6<<`` prefix and trailing whitespace.
    Long-form inputs (leading '~') and any byte outside the printable
    graph6 range raise :class:`Graph6Error` with the byte offset.
    """
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    first = ord(s[0])
    if first == 126:
        raise Graph6Error("long-form graph6 (n > 62) not supported", 0)
    if not 63 <= first <= 125:
        raise Graph6Error(f"invalid header byte {first}", 0)
    n = first - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(s) - 1 < nbytes:
        raise Graph6Error(
            f"payload too short: need {nbytes} bytes, got {len(s) - 1}", len(s)
        )
    if len(s) - 1 > nbytes:
        raise Graph6Error(
            f"payload too long: need {nbytes} bytes, got {len(s) - 1}", 1 + nbytes
        )
    bits: list[int] = []
    for pos in range(1, len(s)):
        val = ord(s[pos]) - 63
        if not 0 <= val <= 63:
            raise Graph6Error(f"invalid payload byte {ord(s[pos])}", pos)
        for shift in range(5, -1, -1):
            bits.append((val >> shift) & 1)
    for pad_index in range(nbits, len(bits)):
        if bits[pad_index]:
            raise Graph6Error("nonzero padding bits", 1 + pad_index // 6)
    edges = []
    t = 0
    for v in range(1, n):
        for u in range(v):
            if bits[t]:
                edges.append((u, v))
            t += 1
    return SimpleGraph(n, edges)


def emit_graph6(g: SimpleGraph) -> str:
    """Encode a SimpleGraph (n <= 62) as a short-form graph6 string."""
    if g.n > 62:
        raise ValueError(f"graph6 short form requires n <= 62, got {g.n}")
    bits: list[int] = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(1 if g.has_edge(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (maximal 2-connected pieces, bridges, isolated vertices) and cut vertices."""

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]


def block_decomposition(g: SimpleGraph) -> BlockDecomposition:
    """Hopcroft-Tarjan block decomposition, iterative.

    Every edge lies in exactly one block; an isolated vertex forms a
    singleton block.  Blocks are reported sorted by their vertex tuples.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    edge_stack: list[tuple[int, int]] = []
    blocks: list[frozenset[int]] = []
    cuts: set[int] = set()

    for root in range(n):
        if disc[root] != -1:
            continue
        if g.degree(root) == 0:
            blocks.append(frozenset((root,)))
            continue
        timer = 0
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        # stack entries: (vertex, parent, iterator over neighbors)
        stack = [(root, -1, iter(sorted(g.neighbors(root))))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((u, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    if u == root:
                        root_children += 1
                    stack.append((w, u, iter(sorted(g.neighbors(w)))))
                    advanced = True
                    break
                elif w != parent and disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                pu = stack[-1][0]
                low[pu] = min(low[pu], low[u])
                if low[u] >= disc[pu]:
                    # edges above (pu, u) on the stack form one block
                    block_vertices: set[int] = set()
                    while edge_stack:
                        a, b = edge_stack[-1]
                        if disc[a] < disc[u] and a != pu:
                            break
                        edge_stack.pop()
                        block_vertices.add(a)
                        block_vertices.add(b)
                        if (a, b) == (pu, u):
                            break
                    blocks.append(frozenset(block_vertices))
                    if pu != root:
                        cuts.add(pu)
        if root_children >= 2:
            cuts.add(root)

    blocks.sort(key=lambda b: tuple(sorted(b)))
    return BlockDecomposition(tuple(blocks), frozenset(cuts))


@dataclass(frozen=True)
class DegreeProfile:
    """Per-vertex degree excesses relative to a list size k.

    ``epsilon[u]`` is deg(u) - k, ``epsilon_total`` is their sum, i.e.
    2m - kn, and ``D`` collects the vertices of degree exactly k.
    """

    k: int
    D: frozenset[int]
    epsilon: tuple[int, ...]
    epsilon_total: int


def degree_profile(g: Union[SimpleGraph, MultiGraph], k: int) -> DegreeProfile:
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    degs = g.degrees()
    eps = tuple(d - k for d in degs)
    return DegreeProfile(
        k=k,
        D=frozenset(u for u, d in enumerate(degs) if d == k),
        epsilon=eps,
        epsilon_total=2 * g.m - k * g.n,
    )


def contains_clique(g: SimpleGraph, t: int) -> bool:
    """Exact test for a clique on t vertices (branch and bound)."""
    if t < 1:
        raise ValueError(f"clique size must be at least 1, got {t}")
    if t == 1:
        return g.n >= 1
    if t == 2:
        return g.m >= 1
    candidates = {u for u in g.vertices if g.degree(u) >= t - 1}

    def extend(size: int, cands: set[int]) -> bool:
        if size == t:
            return True
        if size + len(cands) < t:
            return False
        for v in sorted(cands):
            cands = cands - {v}
            if extend(size + 1, cands & g.neighbors(v)):
                return True
        return False

    return extend(0, candidates)


def clique_number(g: SimpleGraph) -> int:
    """Largest t such that g contains a t-clique (0 for the empty graph)."""
    if g.n == 0:
        return 0
    t = 1
    while t < g.n and contains_clique(g, t + 1):
        t += 1
    return t
