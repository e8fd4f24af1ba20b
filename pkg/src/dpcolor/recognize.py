"""Structural recognizers: Gallai/GDP forests, the sharp extremal family, bricks.

A Gallai forest has every block a clique or an odd cycle; a GDP forest
allows cycles of either parity.  The Dirac recognizer decides membership
in the family of k-Dirac graphs: vertex set splittable into a k-clique
V1, a (k-1)-clique V2, and two nonadjacent vertices V3 such that every
V1 vertex has exactly one neighbor in V3, every V3 vertex at least one
neighbor in V1, every V2 vertex is adjacent to both V3 vertices, and no
other edges exist.  A k-brick is a k-regular multigraph with uniform
edge multiplicity whose underlying simple graph is a clique or a cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Optional

from .graphs import MultiGraph, SimpleGraph, block_decomposition


def _block_is_clique(sub: SimpleGraph) -> bool:
    return sub.m == sub.n * (sub.n - 1) // 2


def _block_is_cycle(sub: SimpleGraph) -> bool:
    # a biconnected 2-regular graph is a single cycle
    return sub.n >= 3 and all(sub.degree(v) == 2 for v in sub.vertices)


def is_gallai_forest(g: SimpleGraph) -> bool:
    """Every block is a clique or an odd cycle."""
    for block in block_decomposition(g).blocks:
        sub = g.induced(block)
        if _block_is_clique(sub):
            continue
        if _block_is_cycle(sub) and sub.n % 2 == 1:
            continue
        return False
    return True


def is_gdp_forest(g: SimpleGraph) -> bool:
    """Every block is a clique or a cycle (any parity)."""
    for block in block_decomposition(g).blocks:
        sub = g.induced(block)
        if not (_block_is_clique(sub) or _block_is_cycle(sub)):
            return False
    return True


def gdp_deficiency(f: SimpleGraph, k: int) -> int:
    """sum of (k - deg(u)) over the vertices of a nonempty graph."""
    if f.n == 0:
        raise ValueError("deficiency undefined for the empty graph")
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    return sum(k - f.degree(u) for u in f.vertices)


@dataclass(frozen=True)
class DiracWitness:
    """A certified split of a k-Dirac graph."""

    k: int
    V1: tuple[int, ...]
    V2: tuple[int, ...]
    V3: tuple[int, int]
    attachment: tuple[tuple[int, int], ...]

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "V1": list(self.V1),
            "V2": list(self.V2),
            "V3": list(self.V3),
            "attachment": [list(p) for p in self.attachment],
        }


def recognize_dirac(g: SimpleGraph, k: int) -> Optional[DiracWitness]:
    """A witness split if g is k-Dirac, else None.

    Anchors on the unique nonadjacent pair that can play the role of the
    two end vertices: everything else is determined by adjacency to that
    pair, so each candidate pair is checked directly against all the
    defining conditions.
    """
    if k < 3:
        raise ValueError(f"k must be at least 3, got {k}")
    if g.n != 2 * k + 1 or g.m != k * k + k - 1:
        return None
    for x, y in combinations(range(g.n), 2):
        if g.has_edge(x, y):
            continue
        v1: list[int] = []
        v2: list[int] = []
        ok = True
        for w in g.vertices:
            if w == x or w == y:
                continue
            hits = (1 if g.has_edge(w, x) else 0) + (1 if g.has_edge(w, y) else 0)
            if hits == 2:
                v2.append(w)
            elif hits == 1:
                v1.append(w)
            else:
                ok = False
                break
        if not ok or len(v1) != k or len(v2) != k - 1:
            continue
        if not _block_is_clique(g.induced(v1)):
            continue
        if not _block_is_clique(g.induced(v2)):
            continue
        if any(g.has_edge(a, b) for a in v1 for b in v2):
            continue
        if not any(g.has_edge(w, x) for w in v1):
            continue
        if not any(g.has_edge(w, y) for w in v1):
            continue
        attachment = tuple(
            (w, x if g.has_edge(w, x) else y) for w in sorted(v1)
        )
        return DiracWitness(
            k=k,
            V1=tuple(sorted(v1)),
            V2=tuple(sorted(v2)),
            V3=(x, y),
            attachment=attachment,
        )
    return None


@dataclass(frozen=True)
class BrickWitness:
    """A k-brick found inside a multigraph.

    ``vertices`` is sorted for the clique shape and in traversal order
    (starting at the smallest vertex) for the cycle shape.
    """

    shape: str
    vertices: tuple[int, ...]
    multiplicity: int

    def to_json(self) -> dict:
        return {
            "shape": self.shape,
            "vertices": list(self.vertices),
            "multiplicity": self.multiplicity,
        }


def find_brick(
    g: MultiGraph, k: int, allow_submultiplicity: bool = True
) -> Optional[BrickWitness]:
    """Search for a k-brick inside g, smallest vertex sets first.

    With ``allow_submultiplicity`` (the default) the brick only needs
    each of its edges present with at least the brick multiplicity,
    which is subgraph containment; with it off, the vertex set must
    induce the brick exactly (no extra parallel copies, no extra
    adjacent pairs).
    """
    if k < 3:
        raise ValueError(f"k must be at least 3, got {k}")

    def pair_ok(u: int, v: int, t: int) -> bool:
        mu = g.multiplicity(u, v)
        return mu >= t if allow_submultiplicity else mu == t

    def no_extra_pairs(vs: tuple[int, ...], wanted: set[tuple[int, int]]) -> bool:
        for u, v in combinations(sorted(vs), 2):
            if (u, v) not in wanted and g.multiplicity(u, v) != 0:
                return False
        return True

    for r in range(2, g.n + 1):
        for vs in combinations(range(g.n), r):
            if k % (r - 1) == 0:
                t = k // (r - 1)
                pairs = {(u, v) for u, v in combinations(vs, 2)}
                if all(pair_ok(u, v, t) for u, v in pairs) and (
                    allow_submultiplicity or no_extra_pairs(vs, pairs)
                ):
                    return BrickWitness("clique", vs, t)
            if r >= 4 and k % 2 == 0:
                t = k // 2
                first, rest = vs[0], vs[1:]
                for order in permutations(rest):
                    if order[0] > order[-1]:
                        continue  # each cycle once, not its reflection
                    cyc = (first,) + order
                    ring = {
                        tuple(sorted((cyc[i], cyc[(i + 1) % r])))
                        for i in range(r)
                    }
                    if all(pair_ok(u, v, t) for u, v in ring) and (
                        allow_submultiplicity or no_extra_pairs(vs, ring)
                    ):
                        return BrickWitness("cycle", cyc, t)
    return None
