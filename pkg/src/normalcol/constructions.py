"""Graph constructions and the coloring-extension procedures.

Every construction lays its edges out copy-major so callers can locate a
copy by arithmetic alone:

* disjoint_copies:        copy i owns edge ids [i*m, (i+1)*m)
* cyclic_join_one_edge:   copy i owns [i*(m-1), (i+1)*(m-1)), then the t
                          joining edges y_i -- x_{i+1 mod t}
* cyclic_join_two_edges:  copy i owns [i*(m-2), (i+1)*(m-2)), then per step
                          the pair d_i -- a_{i+1}, c_i -- b_{i+1}
* vertex_replacement:     copy w owns [w*(m-3), (w+1)*(m-3)), then one edge
                          per host edge, in host edge id order
* two_cut_connection:     first graph's kept edges, second graph's kept
                          edges, then the two cross edges x1--x2, y1--y2

Within a copy, kept edges appear in increasing original edge id order, so
original id <-> copy position is a sorted-list lookup.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .coloring import (
    EdgeColoring,
    abnormal_set,
    classify_all,
    EdgeClass,
    is_proper,
    marked_is_proper,
    marked_palette,
)
from .errors import ImproperColoringError, VerificationError
from .graphs import (
    CubicGraph,
    MarkedGraph,
    catalog,
    connectivity_report,
    enumerate_paths_of_length_three,
    remove_and_mark,
)
from .solver import SearchConfig, min_abnormal

_ALL_COLORS = frozenset(range(1, 6))

# Proper 5-edge-coloring of the 3-cube with exactly two abnormal edges
# (edge ids follow catalog("q3")).  Lexicographically minimal such coloring;
# the regeneration test re-derives it by exhaustive search.
Q3_TWO_ABNORMAL = (1, 2, 3, 2, 3, 1, 4, 4, 4, 5, 5, 3)

# Colors of the seven edges added by the K4 gadget, in construction order
#   (w0,w2), (w0,w3), (w1,w2), (w1,w3), (w2,w3), u--w0, v--w1
# valid after the color permutation putting c(e)=1, S(u)={1,2,3},
# S(v)={1,2,4}.  Both cross edges keep color 1, so every palette of the host
# graph is unchanged, and exactly the two cross edges come out abnormal.
# Lexicographically minimal table; regenerated by the test suite.
K4_GADGET_COLORS = (2, 5, 5, 2, 1, 1, 1)


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------

def disjoint_copies(graph: CubicGraph, t: int) -> CubicGraph:
    """t disjoint labeled copies; copy i lives on vertices [i*n, (i+1)*n)."""
    if t < 1:
        raise ValueError("t must be at least 1")
    n = graph.n
    edges = []
    for i in range(t):
        edges.extend((i * n + u, i * n + v) for u, v in graph.edges)
    return CubicGraph(t * n, tuple(edges))


def cyclic_join_one_edge(graph: CubicGraph, eid: int, t: int) -> CubicGraph:
    """Join t copies of G-e in a ring: copy i's y-stub to copy i+1's x-stub.

    e = xy with x < y.  The pairing is one fixed choice among the consistent
    ones; any of them yields a cubic graph.
    """
    if t < 1:
        raise ValueError("t must be at least 1")
    marked = remove_and_mark(graph, edges=(eid,))
    x, y = graph.endpoints(eid)
    kept = marked.live_edges()
    n = graph.n
    edges = []
    for i in range(t):
        base = i * n
        edges.extend((base + u, base + v) for u, v in (graph.endpoints(f) for f in kept))
    for i in range(t):
        edges.append((i * n + y, ((i + 1) % t) * n + x))
    return CubicGraph(t * n, tuple(edges))


def cyclic_join_two_edges(graph: CubicGraph, e1: int, e2: int, t: int) -> CubicGraph:
    """Join t copies of G-e1-e2 cyclically: d_i a_{i+1} and c_i b_{i+1}.

    e1 = ab and e2 = cd must be independent; t >= 2.
    """
    if t < 2:
        raise ValueError("t must be at least 2")
    a, b = graph.endpoints(e1)
    c, d = graph.endpoints(e2)
    if e1 == e2 or {a, b} & {c, d}:
        raise ValueError("the two designated edges must be independent")
    marked = remove_and_mark(graph, edges=(e1, e2))
    kept = marked.live_edges()
    n = graph.n
    edges = []
    for i in range(t):
        base = i * n
        edges.extend((base + u, base + v) for u, v in (graph.endpoints(f) for f in kept))
    for i in range(t):
        nxt = ((i + 1) % t) * n
        edges.append((i * n + d, nxt + a))
        edges.append((i * n + c, nxt + b))
    return CubicGraph(t * n, tuple(edges))


def vertex_replacement(host: CubicGraph, graph: CubicGraph, v: int) -> CubicGraph:
    """Replace every host vertex with a copy of G-v.

    The host's incident edges at each vertex, in increasing edge id order,
    attach to the copy's stubs in recorded stub order.
    """
    if not (0 <= v < graph.n):
        raise ValueError(f"unknown vertex {v}")
    marked = remove_and_mark(graph, vertex=v)
    live = marked.vertices()
    relabel = {orig: i for i, orig in enumerate(live)}
    n_copy = graph.n - 1
    kept = marked.live_edges()
    edges = []
    for w in range(host.n):
        base = w * n_copy
        for f in kept:
            a, b = graph.endpoints(f)
            edges.append((base + relabel[a], base + relabel[b]))
    stubs = marked.stubs
    for f in range(host.m):
        w1, w2 = host.endpoints(f)
        r1 = host.incident(w1).index(f)
        r2 = host.incident(w2).index(f)
        edges.append(
            (w1 * n_copy + relabel[stubs[r1][0]], w2 * n_copy + relabel[stubs[r2][0]])
        )
    return CubicGraph(host.n * n_copy, tuple(edges))


def two_cut_connection(
    g1: CubicGraph, e1: int, g2: CubicGraph, e2: int
) -> CubicGraph:
    """Splice two cubic graphs: drop e1 = x1y1 and e2 = x2y2, add x1x2, y1y2."""
    x1, y1 = g1.endpoints(e1)
    x2, y2 = g2.endpoints(e2)
    kept1 = remove_and_mark(g1, edges=(e1,)).live_edges()
    kept2 = remove_and_mark(g2, edges=(e2,)).live_edges()
    off = g1.n
    edges = [g1.endpoints(f) for f in kept1]
    edges.extend((off + u, off + v) for u, v in (g2.endpoints(f) for f in kept2))
    edges.append((x1, off + x2))
    edges.append((y1, off + y2))
    return CubicGraph(g1.n + g2.n, tuple(edges))


# ---------------------------------------------------------------------------
# Coloring extensions
# ---------------------------------------------------------------------------

def _finish(parent: CubicGraph, assignment: dict[int, int]) -> EdgeColoring:
    out = EdgeColoring(5, tuple(assignment[e] for e in range(parent.m)))
    if not is_proper(parent, out, 5):
        raise VerificationError("extension produced an improper coloring")
    return out


def extend_one_edge(
    marked: MarkedGraph, colors: dict[int, int], eid: Optional[int] = None
) -> EdgeColoring:
    """Color the one removed edge with the smallest color missing at both ends."""
    if marked.removed_vertex is not None or len(marked.removed_edges) != 1:
        raise ValueError("expected a marked graph with exactly one removed edge")
    removed = marked.removed_edges[0]
    if eid is not None and eid != removed:
        raise ValueError(f"edge {eid} is not the removed edge {removed}")
    if not marked_is_proper(marked, colors):
        raise ImproperColoringError("the partial coloring must be proper")
    x, y = marked.parent.endpoints(removed)
    seen = marked_palette(marked, colors, x) | marked_palette(marked, colors, y)
    free = sorted(_ALL_COLORS - seen)
    if not free:
        raise VerificationError("no common missing color at the removed edge")
    assignment = dict(colors)
    assignment[removed] = free[0]
    return _finish(marked.parent, assignment)


def extend_vertex_star(
    marked: MarkedGraph,
    colors: dict[int, int],
    external_colors: tuple[int, int, int],
) -> EdgeColoring:
    """Restore a deleted vertex star: copy the first stub's external color,
    then color the other two star edges greedily.

    external_colors holds the colors of the three outside edges at the stub
    vertices, aligned with the recorded stub order.  Only the first is used;
    copying it keeps every palette at that stub vertex unchanged.  Each later
    step forbids at most four colors, so the greedy choice always exists.
    """
    if marked.removed_vertex is None:
        raise ValueError("expected a marked graph with a removed vertex")
    if not marked_is_proper(marked, colors):
        raise ImproperColoringError("the partial coloring must be proper")
    assignment = dict(colors)
    star: list[int] = []
    for idx, (stub_vertex, removed_eid) in enumerate(marked.stubs):
        forbidden = set(marked_palette(marked, colors, stub_vertex)) | set(star)
        if idx == 0:
            chosen = external_colors[0]
            if chosen in forbidden:
                raise VerificationError("external color collides at the copied stub")
        else:
            chosen = min(_ALL_COLORS - forbidden)
        assignment[removed_eid] = chosen
        star.append(chosen)
    return _finish(marked.parent, assignment)


def extend_two_edges(
    marked: MarkedGraph,
    colors: dict[int, int],
    e1: Optional[int] = None,
    e2: Optional[int] = None,
) -> EdgeColoring:
    """Color two removed independent edges, each with the smallest color
    missing at both of its endpoints.

    The two edges must be the end-edges of a path of length three in the
    parent graph, which caps the edges their restoration can disturb at nine.
    """
    if marked.removed_vertex is not None or len(marked.removed_edges) != 2:
        raise ValueError("expected a marked graph with exactly two removed edges")
    removed = marked.removed_edges
    if e1 is None and e2 is None:
        e1, e2 = removed
    if {e1, e2} != set(removed):
        raise ValueError("designated edges must be the removed pair")
    a, b = marked.parent.endpoints(e1)
    c, d = marked.parent.endpoints(e2)
    if {a, b} & {c, d}:
        raise ValueError("the removed edges must be independent")
    if not any(
        x == e1 and z == e2 or x == e2 and z == e1
        for x, _, z in enumerate_paths_of_length_three(marked.parent)
    ):
        raise ValueError("the removed edges must be end-edges of a 3-edge path")
    if not marked_is_proper(marked, colors):
        raise ImproperColoringError("the partial coloring must be proper")
    assignment = dict(colors)
    for eid in (e1, e2):
        x, y = marked.parent.endpoints(eid)
        seen = marked_palette(marked, colors, x) | marked_palette(marked, colors, y)
        assignment[eid] = min(_ALL_COLORS - seen)
    return _finish(marked.parent, assignment)


# ---------------------------------------------------------------------------
# The K4 gadget and the k-abnormal family
# ---------------------------------------------------------------------------

def _normalizing_permutation(
    graph: CubicGraph, coloring: EdgeColoring, eid: int
) -> dict[int, int]:
    """Color permutation sending c(e) to 1, the shared palette pair to {1,2},
    the rest of S(u) to 3 and the rest of S(v) to 4."""
    from .coloring import palette

    u, v = graph.endpoints(eid)
    s_u = palette(graph, coloring, u)
    s_v = palette(graph, coloring, v)
    shared = s_u & s_v
    ce = coloring.colors[eid]
    if len(shared) != 2 or ce not in shared:
        raise ValueError("edge palettes do not have the abnormal shape")
    (other_shared,) = shared - {ce}
    (third_u,) = s_u - shared
    (third_v,) = s_v - shared
    (last,) = _ALL_COLORS - {ce, other_shared, third_u, third_v}
    return {ce: 1, other_shared: 2, third_u: 3, third_v: 4, last: 5}


def k4_gadget_extend(
    graph: CubicGraph, coloring: EdgeColoring, eid: int
) -> tuple[CubicGraph, EdgeColoring]:
    """Splice a K4 onto an abnormal edge, extending the coloring so the
    result has exactly one more abnormal edge.

    Colors are permuted so the designated edge has the canonical abnormal
    shape, then the frozen gadget table colors the seven new edges.
    """
    classes = classify_all(graph, coloring)
    if classes[eid] is not EdgeClass.ABNORMAL:
        raise ValueError(f"edge {eid} must be abnormal")
    before = len(abnormal_set(graph, coloring))
    perm = _normalizing_permutation(graph, coloring, eid)
    normalized = coloring.permuted(perm)

    k4 = catalog("k4")
    combined = two_cut_connection(graph, eid, k4, 0)
    kept = remove_and_mark(graph, edges=(eid,)).live_edges()
    colors = [normalized.colors[f] for f in kept]
    colors.extend(K4_GADGET_COLORS[:5])
    colors.extend(K4_GADGET_COLORS[5:])
    extended = EdgeColoring(5, tuple(colors))
    if not is_proper(combined, extended, 5):
        raise VerificationError("gadget extension is not proper")
    after = len(abnormal_set(combined, extended))
    if after != before + 1:
        raise VerificationError(
            f"gadget extension changed the abnormal count from {before} to {after}"
        )
    return combined, extended


def k_abnormal_example(k: int) -> tuple[CubicGraph, EdgeColoring]:
    """A cubic graph on 8 + 4(k-2) vertices with a proper 5-edge-coloring
    having exactly k abnormal edges.

    k = 1 is rejected: no proper 5-edge-coloring of any cubic graph has
    exactly one abnormal edge.  The base case is the two-abnormal coloring
    of the 3-cube; each further step splices one K4 gadget.
    """
    if k < 2:
        raise ValueError("k must be at least 2; a single abnormal edge is impossible")
    graph = catalog("q3")
    coloring = EdgeColoring(5, Q3_TWO_ABNORMAL)
    for _ in range(k - 2):
        eid = min(abnormal_set(graph, coloring))
        graph, coloring = k4_gadget_extend(graph, coloring, eid)
    return graph, coloring


# ---------------------------------------------------------------------------
# Pigeonhole demonstrations
# ---------------------------------------------------------------------------

DEMO_VARIANTS = ("disjoint", "cyclic1", "vertex_replacement", "cyclic2")

_BOUNDS = {"disjoint": 0, "cyclic1": 5, "vertex_replacement": 7, "cyclic2": 9}


@dataclass(frozen=True)
class DemoReport:
    variant: str
    t: int
    n_vertices: int
    abnormal_h: int
    clean_copy_index: Optional[int]
    abnormal_final: Optional[int]
    bound: int
    passed: bool

    def to_json_obj(self) -> dict:
        return {
            "variant": self.variant,
            "t": self.t,
            "nV_H": self.n_vertices,
            "abnormal_H": self.abnormal_h,
            "clean_copy_index": self.clean_copy_index,
            "abnormal_final": self.abnormal_final,
            "bound": self.bound,
            "pass": self.passed,
        }


def default_three_path(graph: CubicGraph) -> tuple[int, int]:
    """End-edges of the first 3-edge path, scanning middle edges by id."""
    for e1, _, e2 in enumerate_paths_of_length_three(graph):
        return e1, e2
    raise ValueError("no path of length three found")


def replacement_host(t: int) -> CubicGraph:
    """Smallest catalog 3-connected bipartite cubic host on >= 2t vertices."""
    if 2 * t <= 6:
        return catalog("k33")
    return catalog("prism", t if t % 2 == 0 else t + 1)


def _solve_h_coloring(h: CubicGraph, units: int) -> EdgeColoring:
    for budget in range(units):
        result = min_abnormal(h, SearchConfig(k=5, abnormal_budget=budget))
        if result.witness is not None:
            return result.witness
    raise VerificationError(
        f"found no proper coloring of the composite with fewer than {units} abnormal edges"
    )


@dataclass(frozen=True)
class _Composite:
    h: CubicGraph
    marked: Optional[MarkedGraph]  # None for the disjoint variant
    units: int                     # number of copies for the pigeonhole
    span: int                      # edges per copy in h


def _build_composite(graph: CubicGraph, variant: str, t: int) -> _Composite:
    m = graph.m
    if variant == "disjoint":
        return _Composite(disjoint_copies(graph, t), None, t, m)
    if variant == "cyclic1":
        marked = remove_and_mark(graph, edges=(0,))
        return _Composite(cyclic_join_one_edge(graph, 0, t), marked, t, m - 1)
    if variant == "cyclic2":
        e1, e2 = default_three_path(graph)
        marked = remove_and_mark(graph, edges=(e1, e2))
        return _Composite(cyclic_join_two_edges(graph, e1, e2, t), marked, t, m - 2)
    host = replacement_host(t)
    marked = remove_and_mark(graph, vertex=0)
    return _Composite(vertex_replacement(host, graph, 0), marked, host.n, m - 3)


def composite_graph(graph: CubicGraph, variant: str, t: int) -> CubicGraph:
    """The composite graph a demo run would build for this variant and t."""
    if variant not in _BOUNDS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {DEMO_VARIANTS}")
    return _build_composite(graph, variant, t).h


def pigeonhole_demo(
    graph: CubicGraph,
    variant: str,
    t: int,
    coloring_of_h: Optional[EdgeColoring] = None,
) -> DemoReport:
    """Build the composite graph, locate a copy free of abnormal edges, apply
    the matching extension, and check the final abnormal count against the
    claimed constant (0 / 5 / 7 / 9).

    The clean copy exists whenever the composite coloring has fewer abnormal
    edges than copies; if not, the report carries clean_copy_index None and
    pass False instead of failing hard.
    """
    if variant not in _BOUNDS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {DEMO_VARIANTS}")
    if t < (2 if variant == "cyclic2" else 1):
        raise ValueError("copy count too small for this variant")
    report = connectivity_report(graph)
    requirement = {
        "disjoint": report.bridgeless,
        "cyclic1": report.edge_connectivity >= 2,
        "vertex_replacement": report.edge_connectivity >= 3,
        "cyclic2": report.cyclically_4_edge_connected,
    }[variant]
    if not requirement:
        raise ValueError(f"input graph fails the connectivity required by {variant!r}")

    built = _build_composite(graph, variant, t)
    h, marked, units, span = built.h, built.marked, built.units, built.span

    if coloring_of_h is None:
        coloring_of_h = _solve_h_coloring(h, units)
    elif not is_proper(h, coloring_of_h, 5):
        raise ImproperColoringError("supplied composite coloring is not proper")

    bad = abnormal_set(h, coloring_of_h)
    bound = _BOUNDS[variant]

    clean = None
    for i in range(units):
        if not any(i * span <= e < (i + 1) * span for e in bad):
            clean = i
            break
    if clean is None:
        if len(bad) < units:
            # copies own disjoint edge ranges, so fewer abnormal edges than
            # copies must leave one copy untouched
            raise VerificationError(
                "pigeonhole violated: fewer abnormal edges than copies, no clean copy"
            )
        return DemoReport(variant, t, h.n, len(bad), None, None, bound, False)

    if variant == "disjoint":
        final_coloring = EdgeColoring(
            5, tuple(coloring_of_h.colors[clean * span : (clean + 1) * span])
        )
    else:
        kept = marked.live_edges()
        copy_colors = {
            kept[pos]: coloring_of_h.colors[clean * span + pos]
            for pos in range(span)
        }
        if variant == "cyclic1":
            final_coloring = extend_one_edge(marked, copy_colors)
        elif variant == "cyclic2":
            final_coloring = extend_two_edges(marked, copy_colors)
        else:
            host = replacement_host(t)
            base = host.n * span
            externals = tuple(
                coloring_of_h.colors[base + host.incident(clean)[r]] for r in range(3)
            )
            final_coloring = extend_vertex_star(marked, copy_colors, externals)

    final = len(abnormal_set(graph, final_coloring))
    return DemoReport(variant, t, h.n, len(bad), clean, final, bound, final <= bound)
