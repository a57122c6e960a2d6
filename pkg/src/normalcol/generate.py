"""Enumeration of connected simple cubic graphs on labeled vertices.

The generator completes the smallest unsaturated vertex with partners in
increasing order, which produces every labeled graph exactly once.  The
distinct mode additionally restricts the stream to BFS-consistent labelings:
N(0) = {1, 2, 3}, every later vertex has a smaller neighbor, and a vertex
touched for the first time must be the smallest untouched label.  Every
connected cubic graph has a BFS relabeling of that shape, so at least one
representative of each isomorphism class survives, and a canonical-form
filter then removes the remaining duplicates.

Downstream scans never depend on the deduplication being tight: emitting a
class twice only repeats a solve.
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

from .graphs import CubicGraph, is_connected


def _labeled_stream(n: int, constrained: bool) -> Iterator[tuple[tuple[int, int], ...]]:
    deg = [0] * n
    adj = [0] * n  # neighbor bitmask; simple graphs only
    edges: list[tuple[int, int]] = []

    def rec(prev_v: int, min_partner: int) -> Iterator[tuple[tuple[int, int], ...]]:
        v = -1
        for i in range(n):
            if deg[i] < 3:
                v = i
                break
        if v == -1:
            yield tuple(edges)
            return
        if v != prev_v:
            min_partner = v + 1
            if constrained and v > 0 and deg[v] == 0:
                return  # partners are always larger; v could never reach a smaller vertex
        if constrained and v == 0:
            # force N(0) = {1, 2, 3}
            u = deg[0] + 1
            candidates = range(u, u + 1)
        else:
            candidates = range(min_partner, n)
        fresh = -1
        if constrained:
            for w in range(v + 1, n):
                if deg[w] == 0:
                    fresh = w
                    break
        for u in candidates:
            if deg[u] >= 3 or (adj[v] >> u) & 1:
                continue
            if constrained and deg[u] == 0 and u != fresh:
                continue  # BFS labeling: first touch goes to the smallest untouched label
            deg[v] += 1
            deg[u] += 1
            adj[v] |= 1 << u
            adj[u] |= 1 << v
            edges.append((v, u))
            yield from rec(v, u + 1)
            edges.pop()
            deg[v] -= 1
            deg[u] -= 1
            adj[v] &= ~(1 << u)
            adj[u] &= ~(1 << v)

    yield from rec(-1, 1)


def _invariant_key(graph: CubicGraph) -> tuple[int, ...]:
    """Exact integer isomorphism invariant used only to bucket candidates."""
    a = np.zeros((graph.n, graph.n), dtype=np.int64)
    for u, v in graph.edges:
        a[u, v] += 1
        a[v, u] += 1
    power = a @ a
    traces = []
    for _ in range(4):  # tr(A^3) .. tr(A^6)
        power = power @ a
        traces.append(int(np.trace(power)))
    return (graph.n, *traces)


def _nx_graph(graph: CubicGraph):
    import networkx as nx

    g = nx.Graph()
    g.add_nodes_from(range(graph.n))
    g.add_edges_from(graph.edges)
    return g


def enumerate_cubic(n: int, distinct: bool = False) -> Iterator[CubicGraph]:
    """Stream of connected simple cubic graphs on n labeled vertices.

    With distinct=False every labeled graph appears exactly once.  With
    distinct=True one representative per isomorphism class is emitted.
    """
    if n < 4 or n % 2 != 0:
        raise ValueError("cubic graphs need an even vertex count of at least 4")
    if not distinct:
        for edges in _labeled_stream(n, constrained=False):
            graph = CubicGraph(n, edges)
            if is_connected(graph):
                yield graph
        return

    import networkx as nx

    seen: dict[tuple[int, ...], list] = {}
    for edges in _labeled_stream(n, constrained=True):
        graph = CubicGraph(n, edges)
        key = _invariant_key(graph)
        bucket = seen.setdefault(key, [])
        nxg = _nx_graph(graph)
        if any(nx.is_isomorphic(nxg, rep) for rep in bucket):
            continue
        bucket.append(nxg)
        yield graph


def count_isomorphism_classes(n: int) -> int:
    return sum(1 for _ in enumerate_cubic(n, distinct=True))
