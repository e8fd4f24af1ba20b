"""Desk-scale verification of the sharp density bound for critical covers.

The claim under test: for k >= 3, a connected graph with minimum degree
at least k, no clique on k+1 vertices, and not in the k-Dirac family
admits no critical k-fold cover unless 2m > kn + k - 2.  The sweep
filters a stream of graph6 lines down to the candidates satisfying
2m <= kn + k - 2, enumerates every cover in the chosen regime, and
reports per-graph rows; any critical cover found is a refutation and is
embedded in the row, then revalidated from its serialized form alone.

Reports are written as CSV (header always present) or JSON with a fixed
field order.  All fields except ``seconds`` are deterministic for a
given input stream and configuration.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from typing import Iterable, Optional, Sequence, TextIO, Union

from .covers import (
    Cover,
    cover_from_json_text,
    cover_to_json_text,
    enumerate_covers,
    validate_cover,
)
from .graphs import (
    Graph6Error,
    MultiGraph,
    SimpleGraph,
    contains_clique,
    emit_graph6,
    parse_graph6,
)
from .recognize import is_gdp_forest, recognize_dirac
from .solver import is_colorable, is_critical

logger = logging.getLogger(__name__)

REPORT_FIELDS = (
    "graph6",
    "n",
    "m",
    "deficit",
    "has_big_clique",
    "is_dirac",
    "regime",
    "critical_cover_found",
    "witness_cover",
    "covers_examined",
    "seconds",
)


def default_max_n(k: int) -> int:
    # cover counts grow as (k!)^(m-n+1); these caps keep a sweep at
    # desk scale unless explicitly overridden
    return 9 if k <= 3 else 7


@dataclass(frozen=True)
class SweepConfig:
    """Parameters of one verification sweep."""

    k: int
    regime: str = "perfect"
    max_n: Optional[int] = None
    parallelism: int = 1
    include_dirac: bool = False

    def __post_init__(self):
        if self.k < 3:
            raise ValueError(f"k must be at least 3, got {self.k}")
        if self.regime not in ("perfect", "partial"):
            raise ValueError(f"unknown regime {self.regime!r}")
        if self.parallelism < 1:
            raise ValueError(f"parallelism must be at least 1, got {self.parallelism}")

    def resolved_max_n(self) -> int:
        return self.max_n if self.max_n is not None else default_max_n(self.k)


@dataclass(frozen=True)
class DiracReportRow:
    """One accepted candidate graph and the outcome of its cover sweep.

    ``deficit`` is 2m - (kn + k - 2), never positive for an accepted
    candidate.  ``witness_cover`` is the serialized critical cover when
    one was found, else empty.
    """

    graph6: str
    n: int
    m: int
    deficit: int
    has_big_clique: bool
    is_dirac: bool
    regime: str
    critical_cover_found: bool
    witness_cover: str
    covers_examined: int
    seconds: float


def candidate_filter(g: SimpleGraph, k: int, include_dirac: bool = False) -> Optional[str]:
    """None if g can carry a critical k-fold cover within the bound, else why not.

    Rejections: disconnected graphs and graphs with a vertex of degree
    below k cannot be critical at all; graphs with 2m > kn + k - 2
    already satisfy the claimed inequality; graphs containing a clique
    on k+1 vertices and k-Dirac graphs are the two excluded families
    (the latter kept when ``include_dirac`` is set).
    """
    if k < 3:
        raise ValueError(f"k must be at least 3, got {k}")
    if not g.is_connected():
        return "disconnected"
    if g.min_degree < k:
        return "min degree below k"
    if 2 * g.m > k * g.n + k - 2:
        return "2m exceeds kn + k - 2"
    if contains_clique(g, k + 1):
        return "contains a clique of size k + 1"
    if not include_dirac and recognize_dirac(g, k) is not None:
        return "k-Dirac graph"
    return None


def _sweep_one(args: tuple[str, int, str]) -> DiracReportRow:
    g6, k, regime = args
    g = parse_graph6(g6)
    t0 = time.perf_counter()
    examined = 0
    witness = ""
    found = False
    for cover in enumerate_covers(g, k, regime):
        examined += 1
        if is_critical(cover):
            witness = cover_to_json_text(cover)
            found = True
            break
    return DiracReportRow(
        graph6=g6,
        n=g.n,
        m=g.m,
        deficit=2 * g.m - (k * g.n + k - 2),
        has_big_clique=contains_clique(g, k + 1),
        is_dirac=recognize_dirac(g, k) is not None,
        regime=regime,
        critical_cover_found=found,
        witness_cover=witness,
        covers_examined=examined,
        seconds=time.perf_counter() - t0,
    )


def verify_dirac_bound(cfg: SweepConfig, lines: Iterable[str]) -> list[DiracReportRow]:
    """Sweep a stream of graph6 lines; one report row per accepted candidate.

    Parse errors and graphs above the size cap abort with the offending
    line number.  Row order follows input order.  Every row claiming a
    critical cover is revalidated from its serialized witness before
    this function returns.
    """
    max_n = cfg.resolved_max_n()
    accepted: list[str] = []
    rejected: dict[str, int] = {}
    total = 0
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line:
            continue
        total += 1
        try:
            g = parse_graph6(line)
        except Graph6Error as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
        if g.n > max_n:
            raise ValueError(
                f"line {lineno}: graph has {g.n} vertices, above the cap of {max_n}"
            )
        reason = candidate_filter(g, cfg.k, include_dirac=cfg.include_dirac)
        if reason is None:
            accepted.append(emit_graph6(g))
        else:
            rejected[reason] = rejected.get(reason, 0) + 1

    logger.info(
        "k=%d regime=%s: %d graphs read, %d accepted, rejected: %s",
        cfg.k,
        cfg.regime,
        total,
        len(accepted),
        dict(sorted(rejected.items())) or "none",
    )

    work = [(g6, cfg.k, cfg.regime) for g6 in accepted]
    if cfg.parallelism > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=cfg.parallelism) as pool:
            rows = list(pool.map(_sweep_one, work))
    else:
        rows = [_sweep_one(item) for item in work]

    for row in rows:
        if row.critical_cover_found and not revalidate_row(row):
            raise RuntimeError(
                f"witness for {row.graph6!r} failed revalidation; sweep is inconsistent"
            )
        if row.critical_cover_found:
            logger.warning("critical cover found on %s", row.graph6)
    return rows


def revalidate_row(row: DiracReportRow) -> bool:
    """Recheck a refutation row from its serialized witness alone."""
    if not row.critical_cover_found:
        return row.witness_cover == ""
    try:
        cover = cover_from_json_text(row.witness_cover)
    except ValueError:
        return False
    base = cover.base
    if not isinstance(base, SimpleGraph):
        return False
    if emit_graph6(base) != row.graph6 or base.n != row.n or base.m != row.m:
        return False
    if validate_cover(cover) is not None:
        return False
    if row.regime == "perfect":
        for u, v in cover.edge_pairs():
            if len(cover.h_edges(u, v)) != cover.size(u):
                return False
    return is_critical(cover)


@dataclass(frozen=True)
class ComponentCheck:
    """Boundary count of one component of the degree-k subgraph."""

    vertices: tuple[int, ...]
    boundary_edges: int
    is_full_clique: bool  # component is a clique on k+1 vertices
    bound_ok: bool
    equality: bool
    equality_shape_ok: bool  # boundary == k only for a clique on k vertices


@dataclass(frozen=True)
class CriticalStructureReport:
    """Structure of the degree-k vertices of a critical cover.

    For a critical k-fold cover, the vertices of degree exactly k must
    induce a GDP forest, and every component of that subgraph must send
    at least k edges to the rest of the graph, exactly k only when the
    component is a clique on k vertices.  The full-graph clique on k+1
    vertices is the one exception and is flagged, not counted as a
    violation.
    """

    k: int
    in_scope: bool  # the structural claims are stated for k >= 3
    min_degree: int
    min_degree_ok: bool
    D: tuple[int, ...]
    gdp_forest: bool
    components: tuple[ComponentCheck, ...]
    ok: bool


def verify_critical_structure(c: Cover) -> CriticalStructureReport:
    """Check the forced structure of the degree-k subgraph of a critical cover.

    Precondition: c is a uniform critical cover (this is verified and
    violations raise).  Multigraph bases use multiplicity-counting
    degrees and boundary counts, with the forest check applied to the
    underlying simple graph.
    """
    k = c.k
    if k is None or k < 1:
        raise ValueError("cover does not have a uniform positive list size")
    if not is_critical(c):
        raise ValueError("cover is not critical")
    base = c.base
    simple = base.simple() if isinstance(base, MultiGraph) else base
    degrees = base.degrees()
    low = tuple(sorted(u for u in range(base.n) if degrees[u] == k))
    low_set = set(low)
    induced = simple.induced(low)
    forest_ok = is_gdp_forest(induced)

    def multiplicity(u: int, w: int) -> int:
        if isinstance(base, MultiGraph):
            return base.multiplicity(u, w)
        return 1 if simple.has_edge(u, w) else 0

    checks = []
    for comp in induced.connected_components():
        vs = tuple(sorted(low[i] for i in comp))
        boundary = sum(
            multiplicity(u, w)
            for u in vs
            for w in simple.neighbors(u)
            if w not in low_set
        )
        sub = simple.induced(vs)
        complete = sub.m == sub.n * (sub.n - 1) // 2
        is_full = complete and sub.n == k + 1 and base.n == k + 1
        bound_ok = is_full or boundary >= k
        equality = boundary == k
        equality_shape_ok = (not equality) or (complete and sub.n == k)
        checks.append(
            ComponentCheck(vs, boundary, is_full, bound_ok, equality, equality_shape_ok)
        )

    min_degree = min(degrees) if degrees else 0
    in_scope = k >= 3
    # below k = 3 the forest and boundary claims are not asserted, only
    # computed for inspection; the minimum-degree bound holds regardless
    structure_ok = forest_ok and all(
        ch.bound_ok and ch.equality_shape_ok for ch in checks
    )
    ok = min_degree >= k and (structure_ok or not in_scope)
    return CriticalStructureReport(
        k=k,
        in_scope=in_scope,
        min_degree=min_degree,
        min_degree_ok=min_degree >= k,
        D=low,
        gdp_forest=forest_ok,
        components=tuple(checks),
        ok=ok,
    )


def _cell(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.6f}"
    return str(value)


def emit_report(
    rows: Sequence[DiracReportRow], fmt: str, sink: Union[str, TextIO]
) -> None:
    """Write rows as CSV (always with a header) or JSON, fixed field order."""
    if fmt not in ("csv", "json"):
        raise ValueError(f"unknown report format {fmt!r}")
    own = isinstance(sink, str)
    out: TextIO = open(sink, "w", newline="") if own else sink  # type: ignore[arg-type]
    try:
        if fmt == "csv":
            writer = csv.writer(out)
            writer.writerow(REPORT_FIELDS)
            for row in rows:
                data = asdict(row)
                writer.writerow([_cell(data[name]) for name in REPORT_FIELDS])
        else:
            payload = []
            for row in rows:
                data = asdict(row)
                payload.append({name: data[name] for name in REPORT_FIELDS})
            json.dump(payload, out, indent=2)
            out.write("\n")
    finally:
        if own:
            out.close()


def parse_report_csv(text: str) -> list[DiracReportRow]:
    """Read back a CSV report produced by emit_report."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header != list(REPORT_FIELDS):
        raise ValueError(f"unexpected report header: {header!r}")
    rows = []
    for record in reader:
        if not record:
            continue
        data = dict(zip(REPORT_FIELDS, record))
        rows.append(
            DiracReportRow(
                graph6=data["graph6"],
                n=int(data["n"]),
                m=int(data["m"]),
                deficit=int(data["deficit"]),
                has_big_clique=data["has_big_clique"] == "true",
                is_dirac=data["is_dirac"] == "true",
                regime=data["regime"],
                critical_cover_found=data["critical_cover_found"] == "true",
                witness_cover=data["witness_cover"],
                covers_examined=int(data["covers_examined"]),
                seconds=float(data["seconds"]),
            )
        )
    return rows
