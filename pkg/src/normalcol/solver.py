"""Exact minimization of abnormal edges over proper k-edge-colorings.

The search is a depth-first branch and bound over edge colors:

* the three edges at vertex 0 are pre-colored 1, 2, 3, and a color may only
  be introduced once all smaller colors appear somewhere (color classes are
  interchangeable, so both reductions preserve the minimum);
* the branch edge is the uncolored edge whose endpoint stars forbid the most
  colors, ties broken by lowest edge id;
* an edge is counted abnormal only once both endpoint stars are fully
  colored, and branches whose committed abnormal count cannot beat the
  incumbent (or exceed the configured budget) are cut.

`exhaustive_oracle` enumerates every proper coloring in plain edge id order
with no bounding and no symmetry reduction; it exists to validate the branch
and bound on small inputs and shares none of its shortcuts.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional

from .coloring import EdgeColoring
from .errors import SizeLimitError
from .graphs import CubicGraph, connectivity_report

_POP = tuple(bin(i).count("1") for i in range(1 << 7))


class SolveStatus(Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    LIMIT = "limit"


@dataclass(frozen=True)
class SearchConfig:
    """Solver knobs.  The search itself has no random component; the
    deterministic flag is part of the config surface and asserts intent."""

    k: int = 5
    abnormal_budget: Optional[int] = None
    node_limit: Optional[int] = None
    deterministic: bool = True

    def __post_init__(self) -> None:
        if self.abnormal_budget is not None and self.abnormal_budget < 0:
            raise ValueError("abnormal_budget must be non-negative")
        if self.node_limit is not None and self.node_limit < 0:
            raise ValueError("node_limit must be non-negative")


@dataclass(frozen=True)
class SolveResult:
    status: SolveStatus
    best_count: int  # -1 when no coloring satisfied the constraints
    witness: Optional[EdgeColoring]
    nodes_explored: int


class _NodeLimit(Exception):
    pass


def min_abnormal(graph: CubicGraph, cfg: SearchConfig | None = None) -> SolveResult:
    """Exact minimum of |N_G(c)| over proper k-edge-colorings of a cubic graph.

    Returns status OPTIMAL with a witness attaining the minimum, INFEASIBLE
    when no proper coloring satisfies the constraints (always the case for
    k < 3; possible for k in {3, 4}; never for k >= 5 without a budget), or
    LIMIT when the node budget ran out first.
    """
    if cfg is None:
        cfg = SearchConfig()
    if cfg.k < 3:
        return SolveResult(SolveStatus.INFEASIBLE, -1, None, 0)

    n, m, k = graph.n, graph.m, cfg.k
    endpoints = graph.edges
    incident = graph.incidence

    color = [0] * m
    pal = [0] * n          # palette bitmask per vertex
    ncol = [0] * n         # colored incident edges per vertex
    decided = [False] * m  # both endpoint stars complete
    state = {"committed": 0, "max_used": 0, "nodes": 0, "best": m + 1}
    best_witness: list[Optional[tuple[int, ...]]] = [None]
    budget = cfg.abnormal_budget

    def assign(eid: int, c: int) -> tuple[list[int], int, bool, int, int]:
        """Apply one assignment; returns everything unassign needs to undo it."""
        bit = 1 << (c - 1)
        color[eid] = c
        newly: list[int] = []
        delta = 0
        u, v = endpoints[eid]
        save_u, save_v = pal[u], pal[v]
        pal[u] |= bit
        pal[v] |= bit
        ncol[u] += 1
        ncol[v] += 1
        for w in (u, v):
            if ncol[w] == 3:
                for f in incident[w]:
                    if color[f] == 0 or decided[f]:
                        continue
                    a, b = endpoints[f]
                    if ncol[a] == 3 and ncol[b] == 3:
                        decided[f] = True
                        newly.append(f)
                        if _POP[pal[a] | pal[b]] == 4:
                            delta += 1
        state["committed"] += delta
        new_color = c == state["max_used"] + 1
        if new_color:
            state["max_used"] = c
        return newly, delta, new_color, save_u, save_v

    def unassign(
        eid: int, c: int, newly: list[int], delta: int, new_color: bool,
        save_u: int, save_v: int,
    ) -> None:
        u, v = endpoints[eid]
        for f in newly:
            decided[f] = False
        state["committed"] -= delta
        ncol[u] -= 1
        ncol[v] -= 1
        pal[u] = save_u
        pal[v] = save_v
        color[eid] = 0
        if new_color:
            state["max_used"] = c - 1

    def pick_edge() -> int:
        best_eid = -1
        best_score = -1
        for eid in range(m):
            if color[eid]:
                continue
            u, v = endpoints[eid]
            score = _POP[pal[u] | pal[v]]
            if score > best_score:
                best_score = score
                best_eid = eid
        return best_eid

    def search() -> None:
        if state["committed"] >= state["best"]:
            return
        if budget is not None and state["committed"] > budget:
            return
        eid = pick_edge()
        if eid < 0:
            state["best"] = state["committed"]
            best_witness[0] = tuple(color)
            return
        u, v = endpoints[eid]
        forbidden = pal[u] | pal[v]
        top = min(k, state["max_used"] + 1)
        for c in range(1, top + 1):
            if forbidden & (1 << (c - 1)):
                continue
            state["nodes"] += 1
            if cfg.node_limit is not None and state["nodes"] > cfg.node_limit:
                raise _NodeLimit
            undo = assign(eid, c)
            search()
            unassign(eid, c, *undo)

    # pre-color the star of vertex 0 (proper colorings always admit a color
    # permutation putting 1, 2, 3 there in edge id order)
    for c, eid in enumerate(incident[0], start=1):
        assign(eid, c)

    status = SolveStatus.OPTIMAL
    try:
        search()
    except _NodeLimit:
        status = SolveStatus.LIMIT

    if best_witness[0] is None:
        if status is SolveStatus.LIMIT:
            return SolveResult(SolveStatus.LIMIT, -1, None, state["nodes"])
        return SolveResult(SolveStatus.INFEASIBLE, -1, None, state["nodes"])
    witness = EdgeColoring(k, best_witness[0])
    return SolveResult(status, state["best"], witness, state["nodes"])


def exhaustive_oracle(graph: CubicGraph, k: int = 5, max_edges: int = 18) -> SolveResult:
    """Brute-force minimum over all proper k-edge-colorings, no pruning.

    Enumerates colorings edge by edge in id order, rejecting only improper
    partial assignments.  Limited to small graphs; used as the independent
    correctness oracle for min_abnormal.
    """
    if graph.m > max_edges:
        raise SizeLimitError(f"{graph.m} edges exceed the oracle limit {max_edges}")
    if k < 3:
        return SolveResult(SolveStatus.INFEASIBLE, -1, None, 0)

    n, m = graph.n, graph.m
    endpoints = graph.edges
    color = [0] * m
    pal = [0] * n
    state = {"nodes": 0, "best": m + 1}
    best_witness: list[Optional[tuple[int, ...]]] = [None]
    pop = _POP

    # with the static edge order, edge f is classifiable right after the last
    # edge incident to its endpoints gets its color
    last_at = [max(graph.incident(v)) for v in range(n)]
    decided_at: list[list[tuple[int, int]]] = [[] for _ in range(m)]
    for f, (a, b) in enumerate(endpoints):
        decided_at[max(last_at[a], last_at[b])].append((a, b))

    def run(eid: int, committed: int) -> None:
        if eid == m:
            if committed < state["best"]:
                state["best"] = committed
                best_witness[0] = tuple(color)
            return
        u, v = endpoints[eid]
        save_u, save_v = pal[u], pal[v]
        forbidden = save_u | save_v
        steps = decided_at[eid]
        for c in range(1, k + 1):
            bit = 1 << (c - 1)
            if forbidden & bit:
                continue
            state["nodes"] += 1
            color[eid] = c
            pal[u] = save_u | bit
            pal[v] = save_v | bit
            delta = 0
            for a, b in steps:
                if pop[pal[a] | pal[b]] == 4:
                    delta += 1
            run(eid + 1, committed + delta)
        pal[u] = save_u
        pal[v] = save_v
        color[eid] = 0

    run(0, 0)
    if best_witness[0] is None:
        return SolveResult(SolveStatus.INFEASIBLE, -1, None, state["nodes"])
    return SolveResult(
        SolveStatus.OPTIMAL, state["best"], EdgeColoring(k, best_witness[0]), state["nodes"]
    )


def has_normal_k(graph: CubicGraph, k: int) -> Optional[EdgeColoring]:
    """A normal k-edge-coloring witness, or None if none exists (exhaustive)."""
    result = min_abnormal(graph, SearchConfig(k=k, abnormal_budget=0))
    if result.best_count == 0:
        return result.witness
    return None


def normal_chromatic_index(graph: CubicGraph, max_k: int | None = None) -> int:
    """Least k admitting a normal k-edge-coloring.

    Simple cubic graphs always have one (coloring every edge differently is
    normal), so the scan is bounded by |E|.  Multigraphs with parallel edges
    may have none; the scan stops at max_k (default 7) and reports the limit.
    """
    simple = graph.is_simple()
    if max_k is None:
        max_k = graph.m if simple else 7
    for k in range(3, max_k + 1):
        if simple and k >= graph.m:
            return k  # all-distinct coloring is proper and all-rich
        if has_normal_k(graph, k) is not None:
            return k
    raise ValueError(
        f"no normal edge-coloring found for k up to {max_k}"
        + ("" if simple else " (graph has parallel edges)")
    )


# ---------------------------------------------------------------------------
# Batch scans
# ---------------------------------------------------------------------------

@dataclass
class ScanRow:
    graph_id: int
    n: int
    m: int
    bridgeless: bool
    cyc4: bool
    min_abnormal: int
    nodes: int
    millis: int
    status: SolveStatus
    witness: Optional[EdgeColoring] = None


@dataclass
class ScanReport:
    rows: list[ScanRow] = field(default_factory=list)

    def distribution(self) -> dict[int, int]:
        dist: dict[int, int] = {}
        for row in self.rows:
            dist[row.min_abnormal] = dist.get(row.min_abnormal, 0) + 1
        return dict(sorted(dist.items()))

    def single_abnormal_ids(self) -> list[int]:
        """Graphs whose exact minimum is 1; expected empty on every stream."""
        return [
            r.graph_id
            for r in self.rows
            if r.status is SolveStatus.OPTIMAL and r.min_abnormal == 1
        ]

    def to_tsv(self, timing: bool = False) -> str:
        lines = ["graph_id\tn\tm\tbridgeless\tcyc4\tmin_abnormal\tnodes\tmillis"]
        for r in sorted(self.rows, key=lambda r: r.graph_id):
            millis = str(r.millis) if timing else "-"
            lines.append(
                f"{r.graph_id}\t{r.n}\t{r.m}\t{int(r.bridgeless)}\t{int(r.cyc4)}"
                f"\t{r.min_abnormal}\t{r.nodes}\t{millis}"
            )
        return "\n".join(lines) + "\n"

    def to_json_obj(self, timing: bool = False) -> dict:
        rows = []
        for r in sorted(self.rows, key=lambda r: r.graph_id):
            rows.append(
                {
                    "graph_id": r.graph_id,
                    "n": r.n,
                    "m": r.m,
                    "bridgeless": r.bridgeless,
                    "cyc4": r.cyc4,
                    "min_abnormal": r.min_abnormal,
                    "nodes": r.nodes,
                    "millis": r.millis if timing else None,
                    "status": r.status.value,
                    "witness": list(r.witness.colors) if r.witness else None,
                }
            )
        return {
            "rows": rows,
            "distribution": {str(k): v for k, v in self.distribution().items()},
            "single_abnormal": self.single_abnormal_ids(),
        }


def _scan_one(args: tuple[int, CubicGraph, SearchConfig]) -> ScanRow:
    graph_id, graph, cfg = args
    t0 = time.perf_counter()
    report = connectivity_report(graph)
    result = min_abnormal(graph, cfg)
    millis = int((time.perf_counter() - t0) * 1000)
    return ScanRow(
        graph_id=graph_id,
        n=graph.n,
        m=graph.m,
        bridgeless=report.bridgeless,
        cyc4=report.cyclically_4_edge_connected,
        min_abnormal=result.best_count,
        nodes=result.nodes_explored,
        millis=millis,
        status=result.status,
        witness=result.witness,
    )


def scan_no_single_abnormal(
    graphs: Iterable[CubicGraph],
    cfg: SearchConfig | None = None,
    jobs: int = 1,
) -> ScanReport:
    """Solve min_abnormal for each graph in the stream and aggregate minima.

    Any graph with exact minimum 1 is flagged; no proper 5-edge-coloring of a
    cubic graph has exactly one abnormal edge, so a flag would mean a solver
    bug (or a remarkable counterexample).  With jobs > 1 the per-graph solves
    run in a process pool; the merged report is re-sorted by graph id.
    """
    if cfg is None:
        cfg = SearchConfig()
    tasks = [(i, g, cfg) for i, g in enumerate(graphs)]
    if jobs > 1 and len(tasks) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_scan_one, tasks))
    else:
        rows = [_scan_one(t) for t in tasks]
    rows.sort(key=lambda r: r.graph_id)
    return ScanReport(rows)
