"""Covers (correspondence assignments) over simple graphs and multigraphs.

A cover assigns each vertex ``u`` a list of ``size(u)`` colors, indexed
0..size(u)-1, and each edge a partial injection ("matching") between the
endpoint lists.  Lists are pairwise disjoint by construction since colors
are per-vertex indices, and each list is implicitly a clique, so a
coloring is a set of picks, one per covered vertex, no two of which are
joined by a matching pair.  An edge of multiplicity t in a multigraph
carries t matchings, one per parallel edge; the cross-list constraints
are their union.

``enumerate_covers`` walks every k-fold cover of a connected simple
graph in one of two regimes:

* ``"perfect"``: every matching is a full bijection.  Per-vertex color
  relabelings are factored out by pinning the identity on the edges of a
  fixed spanning tree, leaving (k!)^(m-n+1) covers.
* ``"partial"``: every edge independently ranges over all partial
  injections of [k], with no relabeling reduction, giving P(k)^m covers
  where P(k) = sum_r C(k,r)^2 r!.
"""

from __future__ import annotations

import json
import math
from itertools import combinations, permutations, product
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .graphs import MultiGraph, SimpleGraph, emit_graph6, parse_graph6

BaseGraph = Union[SimpleGraph, MultiGraph]

Matching = tuple[tuple[int, int], ...]


def _normalize_matching(pairs: Iterable[Sequence[int]], where: str) -> Matching:
    out = []
    for p in pairs:
        p = tuple(p)
        if len(p) != 2 or not all(isinstance(x, int) for x in p):
            raise ValueError(f"{where}: matching pair {p!r} is not a pair of ints")
        out.append((p[0], p[1]))
    out.sort()
    return tuple(out)


class Cover:
    """A cover of ``base``: per-vertex list sizes plus per-edge matchings.

    ``matchings`` maps an edge (u, v) with u < v to its matching; for a
    multigraph base the value is a sequence of exactly multiplicity(u, v)
    matchings.  Edges absent from the mapping get empty matchings.  Keys
    that are not edges of the base are rejected: cross-list constraints
    may only sit over actual edges.
    """

    __slots__ = ("base", "list_size", "_slots", "_maps")

    def __init__(
        self,
        base: BaseGraph,
        sizes: Sequence[int],
        matchings: Mapping[tuple[int, int], object] = {},
    ):
        if len(sizes) != base.n:
            raise ValueError(f"got {len(sizes)} list sizes for {base.n} vertices")
        if any(s < 0 for s in sizes):
            raise ValueError("list sizes must be non-negative")
        self.base = base
        self.list_size = tuple(sizes)

        if isinstance(base, MultiGraph):
            mult = {(u, v): t for u, v, t in base.pairs()}
        else:
            mult = {e: 1 for e in base.edges()}

        slots: dict[tuple[int, int], tuple[Matching, ...]] = {
            e: ((),) * t for e, t in mult.items()
        }
        for key, value in matchings.items():
            u, v = key
            e = (u, v) if u < v else (v, u)
            if e not in mult:
                raise ValueError(f"matching key {key!r} is not an edge of the base graph")
            flipped = e != (u, v)
            if isinstance(base, MultiGraph):
                given = list(value)  # type: ignore[arg-type]
                if len(given) != mult[e]:
                    raise ValueError(
                        f"edge {e} has multiplicity {mult[e]} but {len(given)} matchings given"
                    )
                norm = []
                for s, slot in enumerate(given):
                    pairs = _normalize_matching(slot, f"edge {e} slot {s}")
                    if flipped:
                        pairs = tuple(sorted((j, i) for i, j in pairs))
                    norm.append(pairs)
                slots[e] = tuple(norm)
            else:
                pairs = _normalize_matching(value, f"edge {e}")  # type: ignore[arg-type]
                if flipped:
                    pairs = tuple(sorted((j, i) for i, j in pairs))
                slots[e] = (pairs,)
        self._slots = slots
        self._maps: dict[tuple[int, int], dict[int, tuple[int, ...]]] | None = None

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def k(self) -> int | None:
        """The uniform list size, or None if sizes differ."""
        if self.n == 0:
            return None
        first = self.list_size[0]
        return first if all(s == first for s in self.list_size) else None

    def size(self, u: int) -> int:
        return self.list_size[u]

    def edge_pairs(self) -> tuple[tuple[int, int], ...]:
        """Adjacent vertex pairs (u, v) with u < v, sorted."""
        return tuple(sorted(self._slots))

    def slot_matchings(self, u: int, v: int) -> tuple[Matching, ...]:
        """Per-parallel-edge matchings for the pair, oriented u -> v."""
        e = (u, v) if u < v else (v, u)
        if e not in self._slots:
            raise ValueError(f"({u}, {v}) is not an edge of the base graph")
        slots = self._slots[e]
        if e != (u, v):
            return tuple(tuple(sorted((j, i) for i, j in s)) for s in slots)
        return slots

    def h_edges(self, u: int, v: int) -> frozenset[tuple[int, int]]:
        """Union of the pair's matchings as (color of u, color of v) pairs."""
        return frozenset(p for slot in self.slot_matchings(u, v) for p in slot)

    def _oriented_maps(self) -> dict[tuple[int, int], dict[int, tuple[int, ...]]]:
        if self._maps is None:
            maps: dict[tuple[int, int], dict[int, tuple[int, ...]]] = {}
            for u, v in self._slots:
                fwd: dict[int, set[int]] = {}
                bwd: dict[int, set[int]] = {}
                for slot in self._slots[(u, v)]:
                    for i, j in slot:
                        fwd.setdefault(i, set()).add(j)
                        bwd.setdefault(j, set()).add(i)
                maps[(u, v)] = {i: tuple(sorted(js)) for i, js in fwd.items()}
                maps[(v, u)] = {j: tuple(sorted(is_)) for j, is_ in bwd.items()}
            self._maps = maps
        return self._maps

    def matched_colors(self, u: int, v: int, i: int) -> tuple[int, ...]:
        """Colors of v joined to color i of u (empty if none)."""
        return self._oriented_maps().get((u, v), {}).get(i, ())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cover):
            return NotImplemented
        return (
            self.base == other.base
            and self.list_size == other.list_size
            and self._slots == other._slots
        )

    def __hash__(self) -> int:
        return hash((self.base, self.list_size, tuple(sorted(self._slots.items()))))

    def __repr__(self) -> str:
        return f"Cover(n={self.n}, list_size={self.list_size})"


class PartialColoring:
    """Immutable map from covered vertices to picked color indices."""

    __slots__ = ("items",)

    def __init__(self, picks: Union[Mapping[int, int], Iterable[tuple[int, int]]] = ()):
        if isinstance(picks, Mapping):
            pairs = sorted(picks.items())
        else:
            pairs = sorted(tuple(p) for p in picks)
        seen = set()
        for v, i in pairs:
            if v in seen:
                raise ValueError(f"vertex {v} picked twice")
            if v < 0 or i < 0:
                raise ValueError(f"invalid pick ({v}, {i})")
            seen.add(v)
        self.items: tuple[tuple[int, int], ...] = tuple(pairs)

    @property
    def dom(self) -> frozenset[int]:
        return frozenset(v for v, _ in self.items)

    def get(self, u: int) -> int | None:
        for v, i in self.items:
            if v == u:
                return i
        return None

    def pick(self, u: int) -> int:
        i = self.get(u)
        if i is None:
            raise KeyError(f"vertex {u} not colored")
        return i

    def __contains__(self, u: int) -> bool:
        return self.get(u) is not None

    def __len__(self) -> int:
        return len(self.items)

    @property
    def picks(self) -> dict[int, int]:
        return dict(self.items)

    def extended(self, picks: Mapping[int, int]) -> "PartialColoring":
        merged = self.picks
        for v, i in picks.items():
            if v in merged:
                raise ValueError(f"vertex {v} already colored")
            merged[v] = i
        return PartialColoring(merged)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartialColoring):
            return NotImplemented
        return self.items == other.items

    def __hash__(self) -> int:
        return hash(self.items)

    def __repr__(self) -> str:
        return f"PartialColoring({dict(self.items)!r})"


def validate_cover(c: Cover) -> str | None:
    """None if well-formed, else a message naming the offending edge and pair.

    Checks that every matching references in-range color indices and is
    injective in both directions (per parallel edge).  The remaining
    cover conditions hold by construction: lists are disjoint per-vertex
    index spaces and matchings only sit over edges of the base graph.
    """
    for u, v in c.edge_pairs():
        for s, slot in enumerate(c.slot_matchings(u, v)):
            tag = f"edge ({u}, {v})" + (f" slot {s}" if len(c.slot_matchings(u, v)) > 1 else "")
            left = set()
            right = set()
            for i, j in slot:
                if not 0 <= i < c.size(u):
                    return f"{tag}: pair ({i}, {j}) has no color {i} at vertex {u}"
                if not 0 <= j < c.size(v):
                    return f"{tag}: pair ({i}, {j}) has no color {j} at vertex {v}"
                if i in left:
                    return f"{tag}: color {i} of vertex {u} matched twice"
                if j in right:
                    return f"{tag}: color {j} of vertex {v} matched twice"
                left.add(i)
                right.add(j)
    return None


def cover_from_lists(g: BaseGraph, lists: Sequence[Sequence[object]]) -> Cover:
    """Cover whose matchings join equal colors of adjacent lists.

    Color i of vertex u stands for sorted(lists[u])[i]; adjacent lists are
    matched on shared colors.  Colorings of the result are exactly the
    proper list-colorings of ``g`` from ``lists``.
    """
    if len(lists) != g.n:
        raise ValueError(f"got {len(lists)} lists for {g.n} vertices")
    sorted_lists = []
    for u, lst in enumerate(lists):
        values = list(lst)
        if len(set(values)) != len(values):
            raise ValueError(f"list of vertex {u} has repeated colors")
        sorted_lists.append(sorted(values))  # type: ignore[type-var]
    index = [{c: i for i, c in enumerate(lst)} for lst in sorted_lists]

    def shared(u: int, v: int) -> Matching:
        common = set(sorted_lists[u]) & set(sorted_lists[v])
        return tuple(sorted((index[u][c], index[v][c]) for c in common))

    if isinstance(g, MultiGraph):
        matchings: dict[tuple[int, int], object] = {
            (u, v): [shared(u, v)] * t for u, v, t in g.pairs()
        }
    else:
        matchings = {e: shared(*e) for e in g.edges()}
    return Cover(g, [len(lst) for lst in sorted_lists], matchings)


def residual_list(c: Cover, p: PartialColoring, u: int) -> tuple[int, ...]:
    """Colors of u not joined to any pick of p.  u must be uncovered."""
    if u in p:
        raise ValueError(f"vertex {u} is already colored")
    alive = set(range(c.size(u)))
    for w, j in p.items:
        for i in c.matched_colors(w, u, j):
            alive.discard(i)
    return tuple(sorted(alive))


def is_independent(c: Cover, p: PartialColoring) -> bool:
    """True iff no two picks of p are joined by a matching pair."""
    for v, i in p.items:
        if not 0 <= v < c.n or not 0 <= i < c.size(v):
            raise ValueError(f"pick ({v}, {i}) out of range")
    for idx, (v, i) in enumerate(p.items):
        for w, j in p.items[idx + 1 :]:
            if j in c.matched_colors(v, w, i):
                return False
    return True


def _spanning_tree_edges(g: SimpleGraph) -> set[tuple[int, int]]:
    # BFS from 0, neighbors ascending: deterministic
    tree: set[tuple[int, int]] = set()
    seen = {0}
    queue = [0]
    while queue:
        u = queue.pop(0)
        for w in sorted(g.neighbors(u)):
            if w not in seen:
                seen.add(w)
                tree.add((u, w) if u < w else (w, u))
                queue.append(w)
    return tree


def partial_injections(k: int) -> tuple[Matching, ...]:
    """All partial injections of {0..k-1} into itself, deterministic order."""
    out: list[Matching] = []
    for r in range(k + 1):
        for dom in combinations(range(k), r):
            for img in permutations(range(k), r):
                out.append(tuple(zip(dom, img)))
    return tuple(out)


def count_covers(g: SimpleGraph, k: int, regime: str) -> int:
    """Number of covers enumerate_covers will yield."""
    if regime == "perfect":
        return math.factorial(k) ** (g.m - g.n + 1)
    if regime == "partial":
        per_edge = sum(math.comb(k, r) ** 2 * math.factorial(r) for r in range(k + 1))
        return per_edge ** g.m
    raise ValueError(f"unknown regime {regime!r}")


def enumerate_covers(g: SimpleGraph, k: int, regime: str) -> Iterator[Cover]:
    """Yield every k-fold cover of a connected graph, deterministically.

    Perfect regime: matchings are full bijections; a spanning tree is
    pinned to the identity so each cover appears once per relabeling
    orbit.  Partial regime: every edge ranges over all partial
    injections, with no reduction.
    """
    if regime not in ("perfect", "partial"):
        raise ValueError(f"unknown regime {regime!r}")
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if not g.is_connected():
        raise ValueError("cover enumeration requires a connected graph")
    sizes = [k] * g.n

    if regime == "perfect":
        tree = _spanning_tree_edges(g)
        nontree = [e for e in g.edges() if e not in tree]
        identity: Matching = tuple((i, i) for i in range(k))
        perms = [
            tuple(sorted((i, pi) for i, pi in enumerate(perm)))
            for perm in permutations(range(k))
        ]
        fixed = {e: identity for e in tree}
        for combo in product(perms, repeat=len(nontree)):
            matchings = dict(fixed)
            matchings.update(zip(nontree, combo))
            yield Cover(g, sizes, matchings)
    else:
        injections = partial_injections(k)
        edges = g.edges()
        for combo in product(injections, repeat=len(edges)):
            yield Cover(g, sizes, dict(zip(edges, combo)))


def relabel_colors(c: Cover, perms: Sequence[Sequence[int]]) -> Cover:
    """Apply a per-vertex color permutation; preserves colorability exactly."""
    if len(perms) != c.n:
        raise ValueError(f"got {len(perms)} permutations for {c.n} vertices")
    tables = []
    for u, perm in enumerate(perms):
        table = tuple(perm)
        if sorted(table) != list(range(c.size(u))):
            raise ValueError(f"entry {u} is not a permutation of 0..{c.size(u) - 1}")
        tables.append(table)
    matchings: dict[tuple[int, int], object] = {}
    for u, v in c.edge_pairs():
        slots = [
            tuple(sorted((tables[u][i], tables[v][j]) for i, j in slot))
            for slot in c.slot_matchings(u, v)
        ]
        matchings[(u, v)] = slots if isinstance(c.base, MultiGraph) else slots[0]
    return Cover(c.base, c.list_size, matchings)


def cover_to_json(c: Cover) -> dict:
    """Plain-dict form of a cover; inverse of cover_from_json."""
    out: dict = {}
    if c.k is not None:
        out["k"] = c.k
    else:
        out["list_sizes"] = list(c.list_size)
    if isinstance(c.base, MultiGraph):
        out["multigraph"] = {
            "n": c.base.n,
            "edges": [[u, v, t] for u, v, t in c.base.pairs()],
        }
    else:
        out["graph6"] = emit_graph6(c.base)
    matchings: dict[str, list[list[int]]] = {}
    for u, v in c.edge_pairs():
        slots = c.slot_matchings(u, v)
        for s, slot in enumerate(slots):
            if not slot:
                continue
            key = f"{u}-{v}" if len(slots) == 1 else f"{u}-{v}#{s}"
            matchings[key] = [list(p) for p in slot]
    out["matchings"] = matchings
    return out


def cover_from_json(data: Mapping) -> Cover:
    """Rebuild a cover from its plain-dict form, validating shape."""
    if "graph6" in data:
        base: BaseGraph = parse_graph6(data["graph6"])
    elif "multigraph" in data:
        mg = data["multigraph"]
        base = MultiGraph(mg["n"], [tuple(e) for e in mg["edges"]])
    else:
        raise ValueError("cover JSON needs a 'graph6' or 'multigraph' entry")
    if "k" in data:
        k = data["k"]
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"invalid k: {k!r}")
        sizes = [k] * base.n
    elif "list_sizes" in data:
        sizes = [int(s) for s in data["list_sizes"]]
    else:
        raise ValueError("cover JSON needs a 'k' or 'list_sizes' entry")

    mult = (
        {(u, v): t for u, v, t in base.pairs()}
        if isinstance(base, MultiGraph)
        else {e: 1 for e in base.edges()}
    )
    per_edge: dict[tuple[int, int], dict[int, Matching]] = {}
    for key, pairs in data.get("matchings", {}).items():
        head, _, slot_txt = key.partition("#")
        try:
            u_txt, v_txt = head.split("-")
            u, v = int(u_txt), int(v_txt)
            slot = int(slot_txt) if slot_txt else 0
        except ValueError:
            raise ValueError(f"malformed matching key {key!r}") from None
        if u >= v:
            raise ValueError(f"matching key {key!r} must have u < v")
        if (u, v) not in mult:
            raise ValueError(f"matching key {key!r} is not an edge of the base graph")
        if not 0 <= slot < mult[(u, v)]:
            raise ValueError(f"matching key {key!r}: slot out of range")
        entry = per_edge.setdefault((u, v), {})
        if slot in entry:
            raise ValueError(f"matching key {key!r}: slot given twice")
        entry[slot] = tuple(tuple(p) for p in pairs)

    if isinstance(base, MultiGraph):
        matchings: dict[tuple[int, int], object] = {
            e: [per_edge.get(e, {}).get(s, ()) for s in range(t)]
            for e, t in mult.items()
        }
    else:
        matchings = {e: per_edge.get(e, {}).get(0, ()) for e in mult}
    cover = Cover(base, sizes, matchings)
    problem = validate_cover(cover)
    if problem is not None:
        raise ValueError(f"invalid cover: {problem}")
    return cover


def cover_to_json_text(c: Cover) -> str:
    return json.dumps(cover_to_json(c), separators=(",", ":"))


def cover_from_json_text(text: str) -> Cover:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid cover JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ValueError("cover JSON must be an object")
    return cover_from_json(data)


def coloring_to_json_text(p: PartialColoring | None) -> str:
    if p is None:
        return "null"
    return json.dumps([[v, i] for v, i in p.items], separators=(",", ":"))


def coloring_from_json_text(text: str) -> PartialColoring | None:
    data = json.loads(text)
    if data is None:
        return None
    return PartialColoring([(int(v), int(i)) for v, i in data])
