"""Exact search over covers: colorability, criticality, and list-size thresholds.

The search assigns color indices to vertices one at a time, always
branching on an uncovered vertex with the fewest surviving colors
(ties to the lowest index), trying colors in ascending order, and
pruning a neighbor's color the moment a matching pair joins it to the
current pick.  All answers are exact; instances are expected to be desk
scale (n at most about 13).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Optional

from .covers import Cover, PartialColoring, is_independent, residual_list, enumerate_covers
from .graphs import DegreeProfile, MultiGraph, SimpleGraph, clique_number


@dataclass
class SearchStats:
    """Counters filled in by find_coloring."""

    nodes_expanded: int = 0
    max_depth: int = 0
    elapsed: float = 0.0


def _adjacency(c: Cover) -> dict[int, tuple[int, ...]]:
    nbrs: dict[int, set[int]] = {u: set() for u in range(c.n)}
    for u, v in c.edge_pairs():
        nbrs[u].add(v)
        nbrs[v].add(u)
    return {u: tuple(sorted(s)) for u, s in nbrs.items()}


def find_coloring(
    c: Cover,
    target: Optional[Iterable[int]] = None,
    seed: Optional[PartialColoring] = None,
    stats: Optional[SearchStats] = None,
) -> Optional[PartialColoring]:
    """An independent set picking one color at every target vertex, or None.

    The result covers target plus the seed's domain; seed picks are kept
    as-is and must form an independent set.  ``target=None`` means all
    vertices.  Exhaustive: returns None only when no such set exists.
    """
    t0 = time.perf_counter()
    if seed is None:
        seed = PartialColoring()
    if not is_independent(c, seed):
        raise ValueError("seed is not independent")
    for v, _ in seed.items:
        if not 0 <= v < c.n:
            raise ValueError(f"seed vertex {v} out of range")
    todo = set(range(c.n)) if target is None else set(target)
    for u in todo:
        if not 0 <= u < c.n:
            raise ValueError(f"target vertex {u} out of range")
    todo -= seed.dom

    local = SearchStats()
    avail: dict[int, set[int]] = {}
    for u in sorted(todo):
        alive = set(range(c.size(u)))
        for w, j in seed.items:
            for i in c.matched_colors(w, u, j):
                alive.discard(i)
        avail[u] = alive

    nbrs = _adjacency(c)
    assignment: dict[int, int] = {}
    unassigned = set(todo)

    def search(depth: int) -> bool:
        local.max_depth = max(local.max_depth, depth)
        if not unassigned:
            return True
        u = min(unassigned, key=lambda x: (len(avail[x]), x))
        if not avail[u]:
            return False
        unassigned.remove(u)
        for i in sorted(avail[u]):
            local.nodes_expanded += 1
            removed: list[tuple[int, int]] = []
            dead = False
            for v in nbrs[u]:
                if v not in unassigned:
                    continue
                for j in c.matched_colors(u, v, i):
                    if j in avail[v]:
                        avail[v].remove(j)
                        removed.append((v, j))
                        if not avail[v]:
                            dead = True
            if not dead:
                assignment[u] = i
                if search(depth + 1):
                    return True
                del assignment[u]
            for v, j in removed:
                avail[v].add(j)
        unassigned.add(u)
        return False

    found = search(0)
    local.elapsed = time.perf_counter() - t0
    if stats is not None:
        stats.nodes_expanded = local.nodes_expanded
        stats.max_depth = local.max_depth
        stats.elapsed = local.elapsed
    if not found:
        return None
    return seed.extended(assignment)


def is_colorable(c: Cover, stats: Optional[SearchStats] = None) -> bool:
    return find_coloring(c, stats=stats) is not None


def is_critical(c: Cover) -> bool:
    """Not colorable, yet colorable after dropping any one vertex."""
    if is_colorable(c):
        return False
    everyone = set(range(c.n))
    for u in range(c.n):
        if find_coloring(c, everyone - {u}) is None:
            return False
    return True


def _chi_dp_connected(g: SimpleGraph, max_k: Optional[int]) -> int:
    lo = max(1, clique_number(g))
    hi = g.max_degree + 1
    # every (max_degree+1)-fold cover is colorable greedily, so k = hi
    # needs no enumeration
    cap = hi if max_k is None else min(hi, max_k + 1)
    for k in range(lo, cap):
        if all(is_colorable(c) for c in enumerate_covers(g, k, "perfect")):
            return k
    if max_k is not None and hi > max_k:
        raise ValueError(f"threshold exceeds max_k={max_k}")
    return hi


def chi_dp(g: SimpleGraph, max_k: Optional[int] = None) -> int:
    """Least k such that every k-fold cover is colorable.

    Checks k from the clique number up to max_degree + 1, testing only
    full-bijection covers with a spanning tree pinned to the identity:
    completing partial matchings never turns an uncolorable cover
    colorable, and per-vertex relabelings preserve colorability, so
    these covers decide every level.  Disconnected graphs take the
    maximum over components.
    """
    if g.n < 1:
        raise ValueError("threshold undefined for the empty graph")
    best = 1
    for comp in g.connected_components():
        sub = g.induced(comp)
        best = max(best, _chi_dp_connected(sub, max_k))
    return best


def is_enhanced(c: Cover, p: PartialColoring, u: int, profile: DegreeProfile) -> bool:
    """Does u keep more colors than its uncovered degree under p?

    u must be uncovered and have degree exactly profile.k.  The
    comparison is |residual list of u| > number of uncovered neighbors
    of u (counting multiplicities for a multigraph base).
    """
    if c.k is not None and c.k != profile.k:
        raise ValueError(f"cover has k={c.k} but profile has k={profile.k}")
    if u not in profile.D:
        raise ValueError(f"vertex {u} does not have degree exactly {profile.k}")
    if u in p:
        raise ValueError(f"vertex {u} is already colored")
    uncovered = set(range(c.n)) - p.dom
    base = c.base
    if isinstance(base, MultiGraph):
        deg_u = sum(base.multiplicity(u, w) for w in uncovered if w != u)
    else:
        deg_u = len(base.neighbors(u) & uncovered)
    return len(residual_list(c, p, u)) > deg_u


def find_enhancing_extension(
    c: Cover,
    p: PartialColoring,
    u: int,
    attach: Iterable[int],
    profile: DegreeProfile,
) -> Optional[PartialColoring]:
    """Extend p over the set ``attach`` so that u becomes enhanced.

    ``attach`` must be an uncovered independent set of neighbors of u.
    All pick combinations on ``attach`` (each from its residual list)
    are tried in lexicographic order; None means no extension over
    exactly this set enhances u.
    """
    a_sorted = sorted(set(attach))
    base = c.base
    simple = base.simple() if isinstance(base, MultiGraph) else base
    for a in a_sorted:
        if a in p:
            raise ValueError(f"attach vertex {a} is already colored")
        if not simple.has_edge(u, a):
            raise ValueError(f"attach vertex {a} is not a neighbor of {u}")
    for i, a in enumerate(a_sorted):
        for b in a_sorted[i + 1 :]:
            if simple.has_edge(a, b):
                raise ValueError(f"attach set is not independent: edge ({a}, {b})")
    residuals = [residual_list(c, p, a) for a in a_sorted]
    if not a_sorted:
        return p if is_enhanced(c, p, u, profile) else None
    for combo in product(*residuals):
        p2 = p.extended(dict(zip(a_sorted, combo)))
        if is_enhanced(c, p2, u, profile):
            return p2
    return None


@dataclass(frozen=True)
class GDPCertificate:
    """Outcome of coloring against a cover with list sizes at least degrees.

    Colorable instances carry the coloring.  Uncolorable instances carry
    the structure forced on the graph: every block a clique or a cycle,
    every list size equal to the degree, and a full two-sided matching
    on every edge joining two non-cut vertices.
    """

    colorable: bool
    coloring: Optional[PartialColoring]
    blocks: Optional[tuple[tuple[str, tuple[int, ...]], ...]]
    cut_vertices: Optional[tuple[int, ...]]
    degree_tight: Optional[bool]
    saturated_pairs: Optional[tuple[tuple[int, int], ...]]


def _block_kind(sub: SimpleGraph) -> Optional[str]:
    b = sub.n
    if sub.m == b * (b - 1) // 2:
        return "clique"
    if b >= 3 and all(sub.degree(v) == 2 for v in sub.vertices):
        return "cycle"
    return None


def color_degree_cover(g: SimpleGraph, c: Cover) -> GDPCertificate:
    """Solve a cover whose list sizes dominate the degrees, with proof.

    Uncolorability here forces a narrow structure; the returned
    certificate records it and ``certificate_is_valid`` rechecks it from
    scratch.  A structural check failing after an uncolorable verdict
    means a bug, and raises.
    """
    from .graphs import block_decomposition

    if not g.is_connected():
        raise ValueError("degree-cover coloring requires a connected graph")
    if not isinstance(c.base, SimpleGraph) or c.base != g:
        raise ValueError("cover base does not match the given graph")
    for u in g.vertices:
        if c.size(u) < g.degree(u):
            raise ValueError(f"list of vertex {u} is smaller than its degree")

    coloring = find_coloring(c)
    if coloring is not None:
        return GDPCertificate(True, coloring, None, None, None, None)

    bd = block_decomposition(g)
    blocks = []
    for block in bd.blocks:
        vs = tuple(sorted(block))
        kind = _block_kind(g.induced(vs))
        if kind is None:
            raise RuntimeError(
                f"uncolorable degree cover on a block {vs} that is neither "
                "a clique nor a cycle; solver or decomposition is wrong"
            )
        blocks.append((kind, vs))
    degree_tight = all(c.size(u) == g.degree(u) for u in g.vertices)
    if not degree_tight:
        raise RuntimeError(
            "uncolorable degree cover with a list strictly larger than a "
            "degree; solver is wrong"
        )
    saturated = []
    for u, v in g.edges():
        if u in bd.cut_vertices or v in bd.cut_vertices:
            continue
        pairs = c.h_edges(u, v)
        left = {i for i, _ in pairs}
        right = {j for _, j in pairs}
        if len(pairs) != c.size(u) or left != set(range(c.size(u))) or right != set(range(c.size(v))):
            raise RuntimeError(
                f"uncolorable degree cover but edge ({u}, {v}) between "
                "non-cut vertices is not a full matching; solver is wrong"
            )
        saturated.append((u, v))
    return GDPCertificate(
        False,
        None,
        tuple(blocks),
        tuple(sorted(bd.cut_vertices)),
        degree_tight,
        tuple(saturated),
    )


def certificate_is_valid(g: SimpleGraph, c: Cover, cert: GDPCertificate) -> bool:
    """Recheck a certificate from scratch (fresh cover, fresh decomposition)."""
    from .covers import cover_from_json_text, cover_to_json_text
    from .graphs import block_decomposition

    fresh = cover_from_json_text(cover_to_json_text(c))
    if cert.colorable:
        p = cert.coloring
        if p is None or p.dom != frozenset(g.vertices):
            return False
        for v, i in p.items:
            if not 0 <= i < fresh.size(v):
                return False
        return is_independent(fresh, p)

    if find_coloring(fresh) is not None:
        return False
    bd = block_decomposition(g)
    if cert.blocks is None or cert.cut_vertices is None:
        return False
    if tuple(sorted(bd.cut_vertices)) != cert.cut_vertices:
        return False
    found = {vs: kind for kind, vs in cert.blocks}
    actual = {tuple(sorted(b)) for b in bd.blocks}
    if set(found) != actual:
        return False
    for vs, kind in found.items():
        if _block_kind(g.induced(vs)) is None or kind not in ("clique", "cycle"):
            return False
        sub = g.induced(vs)
        if kind == "clique" and sub.m != sub.n * (sub.n - 1) // 2:
            return False
        if kind == "cycle" and not (sub.n >= 3 and all(sub.degree(v) == 2 for v in sub.vertices)):
            return False
    if cert.degree_tight is not True:
        return False
    if any(fresh.size(u) != g.degree(u) for u in g.vertices):
        return False
    expected_pairs = tuple(
        (u, v)
        for u, v in g.edges()
        if u not in bd.cut_vertices and v not in bd.cut_vertices
    )
    if cert.saturated_pairs is None or tuple(sorted(cert.saturated_pairs)) != expected_pairs:
        return False
    for u, v in expected_pairs:
        pairs = fresh.h_edges(u, v)
        if len(pairs) != fresh.size(u):
            return False
        if {i for i, _ in pairs} != set(range(fresh.size(u))):
            return False
        if {j for _, j in pairs} != set(range(fresh.size(v))):
            return False
    return True
