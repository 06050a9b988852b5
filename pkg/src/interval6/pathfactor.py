"""Path factors: analysis of a given factor and search for new ones.

Two halves live here. The first half dissects a factor of a
(3,4)-biregular graph: the leftover subgraph (everything off the factor),
the link graph over the factor's interior X-vertices, and the proper
2-coloring of that link graph. Those three objects are exactly what the
coloring construction consumes.

The second half finds factors. `p7_factor_via_24` is the constructive
route: peel off a set of Y-vertices whose neighborhoods exactly cover X,
split the remaining (2,4)-biregular graph into length-2 paths via
Eulerian parity classes, and stitch pairs of those paths through the
peeled vertices into length-6 paths. `search_proper_path_factor` and
`search_full_3regular` are bounded exhaustive searches used when no
structure is known.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .bigraph import (
    BipartiteMultigraph,
    Vertex,
    biregular34_k,
    build,
    components,
    delete_y,
    eulerian_circuit,
    is_biregular,
    xv,
    yv,
)
from .checker import FACTOR_LENGTHS, Path, PathFactor, check_proper_path_factor, path_factor_violation
from .errors import BudgetExceeded, InvariantError


@dataclass(frozen=True)
class QDecomposition:
    """The subgraph left after removing a factor's edges.

    Against a valid factor every Y-vertex keeps degree 2 and every
    X-vertex keeps degree 1 (factor-interior) or 2 (factor-endpoint), so
    the leftover splits into even cycles and paths whose two endpoints
    are factor-interior X-vertices.
    """

    cycles: tuple[tuple[int, ...], ...]  # edge ids in cyclic walk order
    paths: tuple[Path, ...]


class PEdge(NamedTuple):
    u: int  # X-side vertex index
    v: int
    kind: str  # "a": same length-6 path; "b": distance 4 in a length-8 path; "c": leftover path ends


@dataclass(frozen=True)
class PGraph:
    """Link graph over the factor-interior X-vertices.

    Vertices are the X-vertices of degree 2 on the factor. Kind (a) and
    (b) edges tie together interior vertices of one factor path; kind (c)
    edges tie the two ends of each leftover path. Every vertex carries
    exactly one (c) edge and at most one (a)/(b) edge, so components
    alternate edge kinds and the graph is bipartite.
    """

    vertices: tuple[int, ...]
    edges: tuple[PEdge, ...]

    def neighbors(self, u: int) -> list[tuple[int, str]]:
        out = []
        for e in self.edges:
            if e.u == u:
                out.append((e.v, e.kind))
            elif e.v == u:
                out.append((e.u, e.kind))
        return out


@dataclass
class TwoColoring:
    assignment: dict[int, str]  # X-side vertex index -> "A" | "B"

    def __getitem__(self, u: int) -> str:
        return self.assignment[u]


@dataclass(frozen=True)
class HalfFactor:
    """Half of a (2,4)-biregular graph: X-degrees 1, Y-degrees 2.

    Components are length-2 paths centered on Y-vertices; `paths` lists
    them sorted by center, each written with ascending X-endpoints.
    """

    edge_set: frozenset[int]
    paths: tuple[Path, ...]


@dataclass(frozen=True)
class SearchResult:
    status: str  # "found" | "none" | "unknown"
    factor: PathFactor | None
    nodes: int


def _factor_or_raise(g: BipartiteMultigraph, factor: PathFactor) -> None:
    why = path_factor_violation(g, factor)
    if why is not None:
        raise ValueError(f"not a proper path factor: {why}")


def build_q(g: BipartiteMultigraph, factor: PathFactor) -> QDecomposition:
    """Split the off-factor edges into even cycles and X-to-X paths."""
    biregular34_k(g)
    _factor_or_raise(g, factor)
    on_factor = factor.edge_ids()
    adj: dict[Vertex, list[tuple[int, Vertex]]] = {v: [] for v in g.vertices()}
    for eid, (x, y) in enumerate(g.edges):
        if eid in on_factor:
            continue
        adj[xv(x)].append((eid, yv(y)))
        adj[yv(y)].append((eid, xv(x)))

    def walk(start: Vertex, used: set[int]) -> tuple[list[Vertex], list[int]]:
        verts, eids = [start], []
        cur = start
        while True:
            step = next(((eid, w) for eid, w in adj[cur] if eid not in used), None)
            if step is None:
                return verts, eids
            used.add(step[0])
            eids.append(step[0])
            verts.append(step[1])
            cur = step[1]

    cycles: list[tuple[int, ...]] = []
    paths: list[Path] = []
    visited: set[Vertex] = set()
    used: set[int] = set()
    for v0 in g.vertices():
        if v0 in visited:
            continue
        # gather the component of v0 in the leftover graph
        comp = [v0]
        visited.add(v0)
        stack = [v0]
        while stack:
            v = stack.pop()
            for _, w in adj[v]:
                if w not in visited:
                    visited.add(w)
                    comp.append(w)
                    stack.append(w)
        degs = {v: len(adj[v]) for v in comp}
        if any(d == 0 for d in degs.values()):
            raise InvariantError(f"leftover graph has an isolated vertex in {sorted(comp)}")
        ones = sorted(v for v, d in degs.items() if d == 1)
        if not ones:
            start = min(comp)
            verts, eids = walk(start, used)
            if verts[0] != verts[-1] or len(eids) % 2:
                raise InvariantError("leftover component is not an even closed walk")
            cycles.append(tuple(eids))
        else:
            if len(ones) != 2 or any(v.side != "X" for v in ones):
                raise InvariantError(f"leftover path must join two X-vertices, got {ones}")
            verts, eids = walk(ones[0], used)
            if verts[-1] != ones[1]:
                raise InvariantError("leftover path walk did not reach the other endpoint")
            paths.append(Path(tuple(verts), tuple(eids)))
    return QDecomposition(tuple(cycles), tuple(paths))


def build_pgraph(g: BipartiteMultigraph, factor: PathFactor) -> PGraph:
    """Link graph of a factor; see PGraph. Computes the leftover split itself."""
    qd = build_q(g, factor)
    vertices: list[int] = []
    edges: list[PEdge] = []
    for p in factor.paths:
        interior = [p.vertices[i].index for i in range(2, p.length - 1, 2)]
        vertices.extend(interior)
        if p.length == 6:
            edges.append(PEdge(interior[0], interior[1], "a"))
        elif p.length == 8:
            edges.append(PEdge(interior[0], interior[2], "b"))
    for qp in qd.paths:
        edges.append(PEdge(qp.vertices[0].index, qp.vertices[-1].index, "c"))

    pg = PGraph(tuple(sorted(vertices)), tuple(edges))
    counts: dict[int, dict[str, int]] = {u: {"a": 0, "b": 0, "c": 0} for u in pg.vertices}
    for e in pg.edges:
        for end in (e.u, e.v):
            if end not in counts:
                raise InvariantError(f"link edge touches non-interior vertex x{end}")
            counts[end][e.kind] += 1
    for u, c in counts.items():
        if c["c"] != 1 or c["a"] + c["b"] > 1:
            raise InvariantError(f"vertex x{u} has link degrees {c}")
    return pg


def two_color_pgraph(pg: PGraph) -> TwoColoring:
    """Proper 2-coloring A/B of the link graph (BFS, lowest root gets A)."""
    color: dict[int, str] = {}
    adj: dict[int, list[int]] = {u: [] for u in pg.vertices}
    for e in pg.edges:
        adj[e.u].append(e.v)
        adj[e.v].append(e.u)
    for root in pg.vertices:
        if root in color:
            continue
        color[root] = "A"
        queue = [root]
        while queue:
            u = queue.pop(0)
            for w in adj[u]:
                if w not in color:
                    color[w] = "B" if color[u] == "A" else "A"
                    queue.append(w)
                elif color[w] == color[u]:
                    raise InvariantError(f"odd cycle in link graph at x{u}, x{w}")
    return TwoColoring(color)


def p3_half_factor(h: BipartiteMultigraph, parity: int = 0, start: int = 0) -> HalfFactor:
    """One parity class of per-component Eulerian circuits of a (2,4)-biregular graph.

    Each component of h has an even number of edges; the circuit
    alternates around it and the edges at even (parity=0) or odd
    (parity=1) positions give every X-vertex degree 1 and every Y-vertex
    degree 2, i.e. a disjoint union of length-2 paths covering h. Both
    parity classes together partition the edges. `start` rotates the
    circuit's starting vertex (used by retry logic upstream).
    """
    if parity not in (0, 1):
        raise ValueError("parity is 0 or 1")
    if not is_biregular(h, 2, 4):
        raise ValueError("graph is not (2,4)-biregular")
    chosen: set[int] = set()
    seen: set[Vertex] = set()
    for v0 in h.vertices():
        if v0 in seen:
            continue
        comp = [v0]
        seen.add(v0)
        stack = [v0]
        while stack:
            v = stack.pop()
            for _, w in h.incident(v):
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        circuit = eulerian_circuit(h, comp, start=start)
        chosen.update(circuit[parity::2])

    xdeg = [0] * h.x_count
    ydeg = [0] * h.y_count
    at_y: dict[int, list[int]] = {}
    for eid in chosen:
        x, y = h.edges[eid]
        xdeg[x] += 1
        ydeg[y] += 1
        at_y.setdefault(y, []).append(eid)
    if any(d != 1 for d in xdeg) or any(d != 2 for d in ydeg):
        raise InvariantError("parity class is not a half factor")
    paths = []
    for y in sorted(at_y):
        e1, e2 = sorted(at_y[y])
        a, b = h.edges[e1][0], h.edges[e2][0]
        if a > b:
            a, b = b, a
            e1, e2 = e2, e1
        paths.append(Path((xv(a), yv(y), xv(b)), (e1, e2)))
    return HalfFactor(frozenset(chosen), tuple(paths))


def _exact_cover(
    universe: int,
    candidates: list[tuple[int, frozenset[int]]],
    max_nodes: int | None = None,
) -> tuple[int, ...] | None:
    """Subfamily of pairwise-disjoint sets covering 0..universe-1 exactly.

    Backtracking on the uncovered element with the fewest usable sets,
    candidates tried in ascending id. Returns chosen ids sorted, or None.
    """
    owners: list[list[tuple[int, frozenset[int]]]] = [[] for _ in range(universe)]
    for cid, s in sorted(candidates):
        for el in s:
            owners[el].append((cid, s))
    covered = [False] * universe
    chosen: list[int] = []
    nodes = 0

    def usable(s: frozenset[int]) -> bool:
        return not any(covered[el] for el in s)

    def go() -> bool:
        nonlocal nodes
        nodes += 1
        if max_nodes is not None and nodes > max_nodes:
            raise BudgetExceeded(f"exact cover stopped after {nodes} nodes")
        best = None
        best_opts = None
        for el in range(universe):
            if covered[el]:
                continue
            opts = [cs for cs in owners[el] if usable(cs[1])]
            if best_opts is None or len(opts) < len(best_opts):
                best, best_opts = el, opts
                if not opts:
                    return False
        if best is None:
            return True
        for cid, s in best_opts:
            for el in s:
                covered[el] = True
            chosen.append(cid)
            if go():
                return True
            chosen.pop()
            for el in s:
                covered[el] = False
        return False

    return tuple(sorted(chosen)) if go() else None


def find_y_cover(g: BipartiteMultigraph) -> tuple[int, ...] | None:
    """k Y-vertices whose neighborhoods exactly cover X, or None.

    Only Y-vertices with four distinct neighbors qualify (a parallel edge
    would leave its X-vertex short after deletion). Deleting such a set
    leaves every X-vertex with exactly 2 edges, i.e. a (2,4)-biregular
    graph.
    """
    biregular34_k(g)
    cands = []
    for j in range(g.y_count):
        nbrs = frozenset(i for _, i in g.y_adj[j])
        if len(nbrs) == 4:
            cands.append((j, nbrs))
    return _exact_cover(g.x_count, cands)


def _degenerate(hf: HalfFactor) -> bool:
    # both edges of some center landing on one contracted endpoint
    return any(p.vertices[0] == p.vertices[2] for p in hf.paths)


def p7_factor_via_24(g: BipartiteMultigraph) -> PathFactor | None:
    """All-lengths-6 factor via Y-cover peeling, or None when no cover exists.

    Pipeline: find a Y-cover, take a half factor T_1..T_2k of the peeled
    (2,4)-biregular graph, contract each T_i to a point against the cover
    vertices (every X-vertex keeps exactly one edge into the cover), take
    a half factor of that contracted (2,4)-biregular graph, and expand
    each of its length-2 paths back into a length-6 path T_i - u - T_j.

    If a contracted half factor ever came out degenerate (both edges of
    some cover vertex on one contracted point) the construction retries
    with the opposite parity class and then with rotated circuit starts
    before giving up. A valid half factor cannot actually be degenerate
    (each contracted point has degree exactly 1 in it), so the retries
    are a safety net rather than an expected code path.
    """
    k = biregular34_k(g)
    cover = find_y_cover(g)
    if cover is None:
        return None
    h, h_edges, h_ys = delete_y(g, cover)
    assert is_biregular(h, 2, 4)
    base = p3_half_factor(h)

    # which length-2 path each X-vertex ends, and the cover edge it keeps
    t_of_x: dict[int, int] = {}
    for ti, p in enumerate(base.paths):
        t_of_x[p.vertices[0].index] = ti
        t_of_x[p.vertices[2].index] = ti
    cover_sorted = sorted(cover)
    cover_index = {j: jj for jj, j in enumerate(cover_sorted)}
    cover_set = set(cover_sorted)
    contact: list[tuple[int, int, int]] = []  # (x, g_eid, cover position) per X-vertex
    for x in range(g.x_count):
        into = [(eid, j) for eid, j in g.x_adj[x] if j in cover_set]
        if len(into) != 1:
            raise InvariantError(f"x{x} has {len(into)} edges into the cover")
        contact.append((x, into[0][0], cover_index[into[0][1]]))

    contracted = build(
        len(base.paths),
        len(cover_sorted),
        [(t_of_x[x], cj) for x, _, cj in contact],
    )
    # contracted edge id == x index, by construction above
    rotations = 1 + max(len(c) for c in components(contracted))
    attempts = [(p, s) for s in range(rotations) for p in (0, 1)]
    for parity, start in attempts:
        try:
            top = p3_half_factor(contracted, parity=parity, start=start)
        except InvariantError:
            continue
        if _degenerate(top):
            continue
        factor = _assemble_via24(g, base, h_edges, h_ys, cover_sorted, contact, top)
        if factor is not None:
            return factor
    return None


def _assemble_via24(g, base, h_edges, h_ys, cover_sorted, contact, top) -> PathFactor | None:
    paths = []
    for p in top.paths:
        u = cover_sorted[p.vertices[1].index]
        # contracted edge ids are X-vertex indices of g
        x_i = p.edges[0]
        x_j = p.edges[1]
        ti = base.paths[p.vertices[0].index]
        tj = base.paths[p.vertices[2].index]
        paths.append(_stitch(g, ti, x_i, contact[x_i][1], u, tj, x_j, contact[x_j][1], h_edges, h_ys))
    factor = PathFactor(tuple(paths))
    if check_proper_path_factor(g, factor):
        return factor
    return None


def _stitch(g, ti: Path, xi: int, ei: int, u: int, tj: Path, xj: int, ej: int, h_edges, h_ys) -> Path:
    """Length-6 path: far end of ti, through u, to the far end of tj."""

    def orient(t: Path, contact_x: int, contact_last: bool) -> tuple[list[Vertex], list[int]]:
        a, y, b = t.vertices
        e1, e2 = (h_edges[e] for e in t.edges)
        verts = [a, yv(h_ys[y.index]), b]
        eids = [e1, e2]
        at_end = verts[-1].index == contact_x
        if at_end != contact_last:
            verts.reverse()
            eids.reverse()
        return verts, eids

    vi, eidsi = orient(ti, xi, contact_last=True)
    vj, eidsj = orient(tj, xj, contact_last=False)
    verts = vi + [yv(u)] + vj
    eids = eidsi + [ei, ej] + eidsj
    return Path(tuple(verts), tuple(eids))


def search_proper_path_factor(
    g: BipartiteMultigraph,
    max_nodes: int | None = 10_000_000,
    lengths: tuple[int, ...] = FACTOR_LENGTHS,
) -> SearchResult:
    """Exhaustive factor search by growing paths from pivot vertices.

    Repeatedly picks the lowest uncovered X-vertex and enumerates every
    path through it (two arms, so the pivot may end up interior), closing
    only at X-vertices with a total length in `lengths`. `max_nodes`
    bounds the number of extension steps; running out yields status
    "unknown", which is distinct from the definitive "none".
    """
    biregular34_k(g)
    allowed = frozenset(lengths)
    if not allowed or not allowed <= set(FACTOR_LENGTHS):
        raise ValueError(f"lengths must be a nonempty subset of {FACTOR_LENGTHS}")
    longest = max(allowed)

    xcov = [False] * g.x_count
    ycov = [False] * g.y_count
    committed: list[Path] = []
    nodes = 0

    def covered(v: Vertex) -> bool:
        return xcov[v.index] if v.side == "X" else ycov[v.index]

    def set_cover(v: Vertex, val: bool) -> None:
        if v.side == "X":
            xcov[v.index] = val
        else:
            ycov[v.index] = val

    def feasible() -> bool:
        for j in range(g.y_count):
            if ycov[j]:
                continue
            if len({i for _, i in g.y_adj[j] if not xcov[i]}) < 2:
                return False
        for i in range(g.x_count):
            if not xcov[i] and not any(not ycov[j] for _, j in g.x_adj[i]):
                return False
        return True

    class _Stop(Exception):
        pass

    def tick() -> None:
        nonlocal nodes
        nodes += 1
        if max_nodes is not None and nodes > max_nodes:
            raise _Stop

    def solve() -> bool:
        tick()
        pivot = next((i for i in range(g.x_count) if not xcov[i]), None)
        if pivot is None:
            return not any(not c for c in ycov)
        xcov[pivot] = True
        ok = grow_right(xv(pivot), [xv(pivot)], [])
        xcov[pivot] = False
        return ok

    def grow_right(end: Vertex, rv: list[Vertex], re_: list[int]) -> bool:
        tick()
        if end.side == "X" and re_:
            if grow_left(rv[0], [], [], rv, re_):
                return True
        if len(re_) < longest:
            for eid, w in g.incident(end):
                if not covered(w):
                    set_cover(w, True)
                    rv.append(w)
                    re_.append(eid)
                    if grow_right(w, rv, re_):
                        return True
                    re_.pop()
                    rv.pop()
                    set_cover(w, False)
        return False

    def grow_left(end: Vertex, lv: list[Vertex], le: list[int], rv, re_) -> bool:
        tick()
        total = len(le) + len(re_)
        if end.side == "X" and total in allowed:
            verts = tuple(reversed(lv)) + tuple(rv)
            eids = tuple(reversed(le)) + tuple(re_)
            committed.append(Path(verts, eids))
            if feasible() and solve():
                return True
            committed.pop()
        if total < longest:
            for eid, w in g.incident(end):
                if covered(w):
                    continue
                if not le and eid < re_[0]:
                    continue  # interior pivots: count each arm pair once
                set_cover(w, True)
                lv.append(w)
                le.append(eid)
                if grow_left(w, lv, le, rv, re_):
                    return True
                le.pop()
                lv.pop()
                set_cover(w, False)
        return False

    try:
        if solve():
            factor = PathFactor(tuple(committed))
            assert check_proper_path_factor(g, factor)
            return SearchResult("found", factor, nodes)
        return SearchResult("none", None, nodes)
    except _Stop:
        return SearchResult("unknown", None, nodes)


def search_full_3regular(
    g: BipartiteMultigraph, max_nodes: int | None = None
) -> "SubgraphCertificate | None":
    """Subgraph that is 3-regular on Y and all-or-nothing on X, or None.

    An X-vertex has degree exactly 3, so it either contributes all of its
    edges or none; the subgraph is determined by the deleted X-set, and
    feasibility means every Y-vertex has exactly one edge (counting
    multiplicity) into that set. That is an exact cover of Y by
    X-neighborhoods, searched with the same backtracking as find_y_cover.
    """
    from .checker import SubgraphCertificate

    biregular34_k(g)
    cands = []
    for i in range(g.x_count):
        nbrs = frozenset(j for _, j in g.x_adj[i])
        if len(nbrs) == 3:
            cands.append((i, nbrs))
    chosen = _exact_cover(g.y_count, cands, max_nodes=max_nodes)
    if chosen is None:
        return None
    drop = set(chosen)
    cert = SubgraphCertificate(frozenset(eid for eid, (x, _) in enumerate(g.edges) if x not in drop))
    from .checker import check_full_3regular

    assert check_full_3regular(g, cert)
    return cert
