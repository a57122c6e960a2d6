from __future__ import annotations

from itertools import product

import networkx as nx
import pytest

from normalcol.coloring import EdgeColoring, abnormal_set, is_proper
from normalcol.constructions import (
    K4_GADGET_COLORS,
    Q3_TWO_ABNORMAL,
    composite_graph,
    cyclic_join_one_edge,
    cyclic_join_two_edges,
    default_three_path,
    disjoint_copies,
    extend_one_edge,
    extend_two_edges,
    extend_vertex_star,
    k4_gadget_extend,
    k_abnormal_example,
    pigeonhole_demo,
    replacement_host,
    two_cut_connection,
    vertex_replacement,
)
from normalcol.graphs import CubicGraph, catalog, connectivity_report, is_connected, remove_and_mark
from normalcol.petersen import canonical_petersen

K4_PROPER = EdgeColoring(3, (1, 2, 3, 3, 2, 1))


def _adjacent_edges(g: CubicGraph, eid: int) -> set[int]:
    u, v = g.endpoints(eid)
    return (set(g.incident(u)) | set(g.incident(v))) - {eid}


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------

def test_disjoint_copies_sizes(k4, petersen):
    h = disjoint_copies(k4, 3)
    assert (h.n, h.m) == (12, 18)
    assert not is_connected(h)
    assert disjoint_copies(petersen, 1).edges == petersen.edges
    big = disjoint_copies(petersen, 4)
    assert big.n == 40
    assert connectivity_report(big).bridgeless


def test_cyclic_join_one_edge_t1_recreates(k4):
    h = cyclic_join_one_edge(k4, 0, 1)
    assert (h.n, h.m) == (4, 6)
    a, b = nx.Graph(h.edges), nx.Graph(k4.edges)
    assert nx.is_isomorphic(a, b)


def test_cyclic_join_one_edge_sizes(petersen):
    h = cyclic_join_one_edge(petersen, 0, 3)
    assert (h.n, h.m) == (30, 45)
    assert is_connected(h)
    assert connectivity_report(cyclic_join_one_edge(petersen, 0, 2)).bridgeless


def test_cyclic_join_two_edges_sizes(petersen):
    e1, e2 = default_three_path(petersen)
    h = cyclic_join_two_edges(petersen, e1, e2, 2)
    assert (h.n, h.m) == (20, 30)


def test_cyclic_join_two_edges_validation(petersen, k4):
    with pytest.raises(ValueError):
        cyclic_join_two_edges(petersen, 0, 1, 2)  # share a vertex
    e1, e2 = default_three_path(petersen)
    with pytest.raises(ValueError):
        cyclic_join_two_edges(petersen, e1, e2, 1)


def test_cyclic_join_two_edges_preserves_cyc4(petersen):
    e1, e2 = default_three_path(petersen)
    for t in (2, 3):
        h = cyclic_join_two_edges(petersen, e1, e2, t)
        assert connectivity_report(h).cyclically_4_edge_connected


def test_vertex_replacement_sizes(petersen, k4, k33):
    h = vertex_replacement(k33, k4, 0)
    assert (h.n, h.m) == (18, 27)
    assert vertex_replacement(catalog("prism", 6), petersen, 0).n == 108
    h2 = vertex_replacement(k33, petersen, 0)
    assert h2.n == 54
    assert connectivity_report(h2).edge_connectivity == 3


def test_two_cut_connection_sizes(k4, q3):
    h = two_cut_connection(k4, 0, k4, 0)
    assert (h.n, h.m) == (8, 12)
    h2 = two_cut_connection(q3, 0, k4, 0)
    assert (h2.n, h2.m) == (12, 18)
    # new edges join distinct graphs, so the result is loop-free by
    # construction; the CubicGraph invariant re-checks it
    assert all(u != v for u, v in h2.edges)


# ---------------------------------------------------------------------------
# Frozen tables
# ---------------------------------------------------------------------------

def test_q3_coloring_regeneration(q3):
    """The frozen cube coloring is the lex-min with exactly two abnormal edges."""
    m, n = q3.m, q3.n
    endpoints = q3.edges
    pal = [0] * n
    color = [0] * m
    hit: list[tuple[int, ...]] = []

    def run(eid: int) -> None:
        if hit:
            return
        if eid == m:
            c = EdgeColoring(5, tuple(color))
            if len(abnormal_set(q3, c)) == 2:
                hit.append(tuple(color))
            return
        u, v = endpoints[eid]
        su, sv = pal[u], pal[v]
        for c in range(1, 6):
            bit = 1 << (c - 1)
            if (su | sv) & bit:
                continue
            color[eid] = c
            pal[u] = su | bit
            pal[v] = sv | bit
            run(eid + 1)
            if hit:
                return
        pal[u] = su
        pal[v] = sv
        color[eid] = 0

    run(0)
    assert tuple(hit[0]) == Q3_TWO_ABNORMAL


def test_gadget_table_regeneration():
    """Exhaustive search over palette-preserving gadget extensions."""

    def mask(*colors: int) -> int:
        out = 0
        for c in colors:
            out |= 1 << (c - 1)
        return out

    pop = [bin(i).count("1") for i in range(64)]
    target_u, target_v = mask(1, 2, 3), mask(1, 2, 4)
    solutions = []
    for a, b, c, d, g, x, y in product(range(1, 6), repeat=7):
        if mask(2, 3) | mask(x) != target_u or mask(2, 4) | mask(y) != target_v:
            continue  # host palettes must be preserved
        if len({x, a, b}) < 3 or len({y, c, d}) < 3:
            continue
        if len({a, c, g}) < 3 or len({b, d, g}) < 3:
            continue
        s0, s1 = mask(x, a, b), mask(y, c, d)
        s2, s3 = mask(a, c, g), mask(b, d, g)
        unions = [target_u | s0, target_v | s1, s0 | s2, s0 | s3, s1 | s2, s1 | s3, s2 | s3]
        if sum(1 for u in unions if pop[u] == 4) == 2:
            solutions.append((a, b, c, d, g, x, y))
    assert min(solutions) == K4_GADGET_COLORS


# ---------------------------------------------------------------------------
# Gadget and family
# ---------------------------------------------------------------------------

def test_k4_gadget_extend_steps(q3):
    coloring = EdgeColoring(5, Q3_TWO_ABNORMAL)
    eid = min(abnormal_set(q3, coloring))
    h, ch = k4_gadget_extend(q3, coloring, eid)
    assert h.n == 12
    assert len(abnormal_set(h, ch)) == 3
    eid2 = min(abnormal_set(h, ch))
    h2, ch2 = k4_gadget_extend(h, ch, eid2)
    assert h2.n == 16
    assert len(abnormal_set(h2, ch2)) == 4


def test_k4_gadget_rejects_poor_edge(k4):
    with pytest.raises(ValueError):
        k4_gadget_extend(k4, EdgeColoring(5, K4_PROPER.colors), 0)


@pytest.mark.parametrize("k", range(2, 9))
def test_k_abnormal_family(k):
    graph, coloring = k_abnormal_example(k)
    assert graph.n == 8 + 4 * (k - 2)
    assert is_proper(graph, coloring, 5)
    assert len(abnormal_set(graph, coloring)) == k


def test_k_abnormal_rejects_small_k():
    with pytest.raises(ValueError):
        k_abnormal_example(1)
    with pytest.raises(ValueError):
        k_abnormal_example(0)


# ---------------------------------------------------------------------------
# Extensions
# ---------------------------------------------------------------------------

def test_extend_one_edge_k4(k4):
    marked = remove_and_mark(k4, edges=(0,))
    colors = {e: K4_PROPER.colors[e] for e in marked.live_edges()}
    out = extend_one_edge(marked, colors)
    assert is_proper(k4, out, 5)
    assert abnormal_set(k4, out) <= {0} | _adjacent_edges(k4, 0)
    assert len(abnormal_set(k4, out)) <= 5


def test_extend_one_edge_petersen_all_edges(petersen):
    kneser = canonical_petersen().ctilde
    for eid in range(petersen.m):
        marked = remove_and_mark(petersen, edges=(eid,))
        colors = {e: kneser.colors[e] for e in marked.live_edges()}
        out = extend_one_edge(marked, colors)
        assert is_proper(petersen, out, 5)
        bad = abnormal_set(petersen, out)
        assert bad <= {eid} | _adjacent_edges(petersen, eid)
        assert len(bad) <= 5


def test_extend_one_edge_unique_missing_color(q3):
    # palettes {1,2} and {3,4} at the stub ends force color 5
    colors = {1: 1, 2: 2, 3: 3, 4: 4, 5: 2, 6: 3, 7: 1, 8: 1, 9: 4, 10: 2, 11: 5}
    marked = remove_and_mark(q3, edges=(0,))
    out = extend_one_edge(marked, colors)
    assert out.colors[0] == 5


def test_extend_vertex_star_k4(k4):
    marked = remove_and_mark(k4, vertex=0)
    colors = {e: K4_PROPER.colors[e] for e in marked.live_edges()}
    externals = tuple(K4_PROPER.colors[e] for _, e in marked.stubs)
    out = extend_vertex_star(marked, colors, externals)
    assert is_proper(k4, out, 5)
    star = set(k4.incident(0))
    v2_edges = _adjacent_edges(k4, marked.stubs[1][1]) - star
    v3_edges = _adjacent_edges(k4, marked.stubs[2][1]) - star
    assert abnormal_set(k4, out) <= star | v2_edges | v3_edges
    assert len(abnormal_set(k4, out)) <= 7


def test_extend_vertex_star_petersen(petersen):
    kneser = canonical_petersen().ctilde
    marked = remove_and_mark(petersen, vertex=0)
    colors = {e: kneser.colors[e] for e in marked.live_edges()}
    externals = tuple(kneser.colors[e] for _, e in marked.stubs)
    out = extend_vertex_star(marked, colors, externals)
    assert is_proper(petersen, out, 5)
    assert len(abnormal_set(petersen, out)) <= 7


def test_extend_two_edges_petersen(petersen):
    kneser = canonical_petersen().ctilde
    e1, e2 = default_three_path(petersen)
    marked = remove_and_mark(petersen, edges=(e1, e2))
    colors = {e: kneser.colors[e] for e in marked.live_edges()}
    out = extend_two_edges(marked, colors)
    assert is_proper(petersen, out, 5)
    bad = abnormal_set(petersen, out)
    allowed = {e1, e2} | _adjacent_edges(petersen, e1) | _adjacent_edges(petersen, e2)
    assert bad <= allowed
    assert len(bad) <= 9


def test_extend_two_edges_requires_three_path(petersen):
    # find an independent pair at distance > 1: no common adjacent edge
    pair = None
    for e1 in range(petersen.m):
        for e2 in range(e1 + 1, petersen.m):
            a, b = petersen.endpoints(e1)
            c, d = petersen.endpoints(e2)
            if {a, b} & {c, d}:
                continue
            if not (_adjacent_edges(petersen, e1) & _adjacent_edges(petersen, e2)):
                pair = (e1, e2)
                break
        if pair:
            break
    assert pair is not None
    kneser = canonical_petersen().ctilde
    marked = remove_and_mark(petersen, edges=pair)
    colors = {e: kneser.colors[e] for e in marked.live_edges()}
    with pytest.raises(ValueError, match="3-edge path"):
        extend_two_edges(marked, colors)


# ---------------------------------------------------------------------------
# Pigeonhole demos
# ---------------------------------------------------------------------------

def test_demo_bounds_k4():
    for variant, bound in (("disjoint", 0), ("cyclic1", 5), ("vertex_replacement", 7), ("cyclic2", 9)):
        report = pigeonhole_demo(catalog("k4"), variant, 2)
        assert report.passed
        assert report.bound == bound
        assert report.abnormal_final <= bound


def test_demo_report_json_keys(k4):
    obj = pigeonhole_demo(k4, "disjoint", 2).to_json_obj()
    assert set(obj) == {
        "variant", "t", "nV_H", "abnormal_H", "clean_copy_index",
        "abnormal_final", "bound", "pass",
    }


def test_demo_pigeonhole_with_perturbed_coloring(k4):
    # perturb one copy of the composite; the other must be found clean
    h = composite_graph(k4, "disjoint", 2)
    tiled = list(K4_PROPER.colors) * 2
    tiled[7] = 5  # recolor an edge inside copy 1 (color 5 keeps it proper)
    coloring = EdgeColoring(5, tuple(tiled))
    assert is_proper(h, coloring, 5)
    report = pigeonhole_demo(k4, "disjoint", 2, coloring)
    assert report.abnormal_h > 0
    assert report.clean_copy_index == 0
    assert report.passed


def test_demo_no_clean_copy_reports_not_fatal(k4):
    h = composite_graph(k4, "disjoint", 2)
    tiled = list(K4_PROPER.colors) * 2
    tiled[1] = 5
    tiled[7] = 5  # both copies perturbed
    coloring = EdgeColoring(5, tuple(tiled))
    assert is_proper(h, coloring, 5)
    bad = abnormal_set(h, coloring)
    assert any(e < 6 for e in bad) and any(e >= 6 for e in bad)
    report = pigeonhole_demo(k4, "disjoint", 2, coloring)
    assert report.clean_copy_index is None
    assert not report.passed
    assert report.abnormal_final is None


def test_demo_clean_copy_guarantee(k4):
    # whenever |N_H| < copies, a clean copy must be found
    h = composite_graph(k4, "disjoint", 3)
    tiled = list(K4_PROPER.colors) * 3
    tiled[13] = 5  # perturb copy 2 only
    coloring = EdgeColoring(5, tuple(tiled))
    report = pigeonhole_demo(k4, "disjoint", 3, coloring)
    if report.abnormal_h < 3:
        assert report.clean_copy_index is not None


def test_demo_validates_scope(petersen):
    with pytest.raises(ValueError):
        pigeonhole_demo(petersen, "nosuch", 2)
    with pytest.raises(ValueError):
        pigeonhole_demo(petersen, "cyclic2", 1)


def test_demo_rejects_bad_connectivity():
    bridged = CubicGraph(
        6, ((0, 1), (0, 1), (0, 2), (1, 2), (2, 5), (3, 4), (3, 4), (3, 5), (4, 5))
    )
    with pytest.raises(ValueError):
        pigeonhole_demo(bridged, "disjoint", 2)


def test_replacement_host_shapes():
    assert replacement_host(2).n == 6   # no bipartite 3-connected cubic host on 4 vertices
    assert replacement_host(3).n == 6   # K33, the paper-exact host
    assert replacement_host(4).n == 8
    assert replacement_host(5).n == 12


def test_composite_graph_matches_demo(petersen):
    h = composite_graph(petersen, "cyclic1", 2)
    assert (h.n, h.m) == (20, 30)
