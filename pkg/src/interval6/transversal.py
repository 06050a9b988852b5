"""Path factors from a full 3-regular subgraph via triple transversals.

Given a (3,4)-biregular graph with a full 3-regular subgraph, the
X-vertices outside the subgraph see Y partitioned into triples, and a
proper 3-edge-coloring of the subgraph turns colors 1 and 2 into a
2-regular "link" structure F on Y: each remaining X-vertex contributes
one F-edge joining the far ends of its color-1 and color-2 edges. F is
stored directed, color-1 end to color-2 end, which orients every cycle
at once (each Y-vertex has one edge of each color, so in- and
out-degrees are 1).

Picking one vertex per triple (a transversal) that is independent in F,
or spread along its cycles, or a per-component mix of the two, yields a
proper path factor. Color 1 doubles as the perfect matching M used to
cap paths in both constructions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

from .bigraph import BipartiteMultigraph, biregular34_k, xv, yv
from .checker import Path, PathFactor, SubgraphCertificate, check_full_3regular, path_factor_violation
from .errors import InvariantError


class FEdge(NamedTuple):
    u: int  # Y-vertex at the color-1 end
    v: int  # Y-vertex at the color-2 end
    mid_x: int | None = None  # X-vertex between them; None in synthetic instances
    edge1: int | None = None  # color-1 edge id in the underlying graph
    edge2: int | None = None  # color-2 edge id


@dataclass(frozen=True)
class FGraph:
    """2-regular directed multigraph on Y-vertices 0..n-1 (loops allowed).

    Every vertex has in-degree and out-degree exactly 1, so the edge set
    is a disjoint union of directed cycles (a loop counts as a cycle of
    length 1, a doubled edge as one of length 2).
    """

    n: int
    edges: tuple[FEdge, ...]

    def __post_init__(self) -> None:
        indeg = [0] * self.n
        outdeg = [0] * self.n
        for e in self.edges:
            if not (0 <= e.u < self.n and 0 <= e.v < self.n):
                raise ValueError(f"edge {e} outside 0..{self.n - 1}")
            outdeg[e.u] += 1
            indeg[e.v] += 1
        bad = next((w for w in range(self.n) if indeg[w] != 1 or outdeg[w] != 1), None)
        if bad is not None:
            raise ValueError(f"vertex {bad} has in/out degree {indeg[bad]}/{outdeg[bad]}, want 1/1")

    @cached_property
    def out_index(self) -> tuple[int, ...]:
        idx = [-1] * self.n
        for pos, e in enumerate(self.edges):
            idx[e.u] = pos
        return tuple(idx)

    @cached_property
    def in_index(self) -> tuple[int, ...]:
        idx = [-1] * self.n
        for pos, e in enumerate(self.edges):
            idx[e.v] = pos
        return tuple(idx)

    def out_edge(self, u: int) -> FEdge:
        return self.edges[self.out_index[u]]

    def in_edge(self, v: int) -> FEdge:
        return self.edges[self.in_index[v]]

    @cached_property
    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Vertex cycles in forward order, each starting at its smallest vertex."""
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            cyc = []
            w = start
            while not seen[w]:
                seen[w] = True
                cyc.append(w)
                w = self.out_edge(w).v
            out.append(tuple(cyc))
        return tuple(out)


@dataclass(frozen=True)
class TripleSystem:
    triples: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for t in self.triples:
            if len(t) != 3 or list(t) != sorted(t) or len(set(t)) != 3:
                raise ValueError(f"triple {t} is not three ascending vertices")
            if seen & set(t):
                raise ValueError(f"triple {t} overlaps another")
            seen |= set(t)

    @cached_property
    def triple_of(self) -> dict[int, int]:
        return {y: i for i, t in enumerate(self.triples) for y in t}


class TransversalPart(NamedTuple):
    indices: tuple[int, ...]  # triple indices of one F* component
    case: str  # "independent" | "spread"


@dataclass(frozen=True)
class MixedTransversal:
    members: tuple[int, ...]  # chosen Y-vertex per triple, by triple index
    parts: tuple[TransversalPart, ...]


def _check_partition(f: FGraph, ts: TripleSystem) -> None:
    flat = {y for t in ts.triples for y in t}
    if flat != set(range(f.n)):
        raise ValueError("triples do not partition the F-graph vertices")


def fstar_components(f: FGraph, ts: TripleSystem) -> tuple[tuple[int, ...], ...]:
    """Components of F plus a triangle on each triple, as sorted vertex tuples."""
    _check_partition(f, ts)
    parent = list(range(f.n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for e in f.edges:
        union(e.u, e.v)
    for t in ts.triples:
        union(t[0], t[1])
        union(t[0], t[2])
    groups: dict[int, list[int]] = {}
    for y in range(f.n):
        groups.setdefault(find(y), []).append(y)
    return tuple(tuple(sorted(g)) for _, g in sorted(groups.items()))


def is_spread(f: FGraph, members: Iterable[int], orientation: int = 1) -> bool:
    """True when every F-cycle meets `members` with gaps of at most 3.

    A gap is a maximal run of consecutive non-members along the cycle.
    `orientation` 1 follows the stored direction, -1 the reverse; runs
    are the same vertex sets either way, so the answer cannot depend on
    it (the parameter exists to make that checkable).
    """
    if orientation not in (1, -1):
        raise ValueError("orientation is 1 or -1")
    chosen = set(members)
    for cyc in f.cycles:
        walk = cyc if orientation == 1 else cyc[::-1]
        pos = [i for i, y in enumerate(walk) if y in chosen]
        if not pos:
            return False
        for a, b in zip(pos, pos[1:] + [pos[0] + len(walk)]):
            if b - a - 1 > 3:
                return False
    return True


def _f_neighbors(f: FGraph) -> tuple[dict[int, set[int]], set[int]]:
    nbrs: dict[int, set[int]] = {y: set() for y in range(f.n)}
    looped: set[int] = set()
    for e in f.edges:
        if e.u == e.v:
            looped.add(e.u)
        else:
            nbrs[e.u].add(e.v)
            nbrs[e.v].add(e.u)
    return nbrs, looped


def _independent_for(f: FGraph, ts: TripleSystem, idxs: tuple[int, ...]) -> dict[int, int] | None:
    """Complete backtracking for an independent transversal of the given triples.

    A vertex carrying a loop can never be chosen: its loop makes it
    adjacent to itself. That convention extends the construction to
    multigraph-derived instances, where loops arise from parallel edges.
    """
    nbrs, looped = _f_neighbors(f)
    domains = {i: [y for y in ts.triples[i] if y not in looped] for i in idxs}
    chosen: dict[int, int] = {}

    def options(i: int) -> list[int]:
        banned = set()
        for m in chosen.values():
            banned |= nbrs[m]
        return [y for y in domains[i] if y not in banned]

    def go() -> bool:
        todo = [i for i in idxs if i not in chosen]
        if not todo:
            return True
        i = min(todo, key=lambda j: (len(options(j)), j))
        for y in options(i):
            chosen[i] = y
            if go():
                return True
            del chosen[i]
        return False

    return dict(chosen) if go() else None


def _spread_for(
    f: FGraph, ts: TripleSystem, idxs: tuple[int, ...], comp: set[int]
) -> dict[int, int] | None:
    """Complete backtracking for a spread transversal of one component."""
    cycles = [c for c in f.cycles if c[0] in comp]
    if len(cycles) > len(idxs):
        return None  # each cycle needs a member and triples give one each
    chosen: dict[int, int] = {}

    def feasible() -> bool:
        members = set(chosen.values())
        open_triples = {i for i in idxs if i not in chosen}
        total_need = 0
        for cyc in cycles:
            pos = [i for i, y in enumerate(cyc) if y in members]
            if not pos:
                pots = {ts.triple_of[y] for y in cyc if ts.triple_of[y] in open_triples}
                if not pots:
                    return False
                total_need += math.ceil(len(cyc) / 4)
                continue
            for a, b in zip(pos, pos[1:] + [pos[0] + len(cyc)]):
                gap = b - a - 1
                if gap <= 3:
                    continue
                arc = [cyc[t % len(cyc)] for t in range(a + 1, b)]
                pots = {ts.triple_of[y] for y in arc if ts.triple_of[y] in open_triples}
                need = math.ceil((gap - 3) / 4)
                if len(pots) < need:
                    return False
                total_need += need
        return total_need <= len(open_triples)

    def complete() -> bool:
        members = set(chosen.values())
        for cyc in cycles:
            pos = [i for i, y in enumerate(cyc) if y in members]
            if not pos:
                return False
            for a, b in zip(pos, pos[1:] + [pos[0] + len(cyc)]):
                if b - a - 1 > 3:
                    return False
        return True

    order = sorted(idxs)

    def go(at: int) -> bool:
        if at == len(order):
            return complete()
        i = order[at]
        for y in ts.triples[i]:
            chosen[i] = y
            if feasible() and go(at + 1):
                return True
            del chosen[i]
        return False

    return dict(chosen) if go(0) else None


def find_independent_transversal(f: FGraph, ts: TripleSystem) -> tuple[int, ...] | None:
    """One vertex per triple, no two joined by an F-edge; None if impossible."""
    _check_partition(f, ts)
    got = _independent_for(f, ts, tuple(range(len(ts.triples))))
    return None if got is None else tuple(got[i] for i in range(len(ts.triples)))


def find_spread_transversal(f: FGraph, ts: TripleSystem) -> tuple[int, ...] | None:
    """One vertex per triple meeting every F-cycle with gaps at most 3; None if impossible."""
    _check_partition(f, ts)
    got = _spread_for(f, ts, tuple(range(len(ts.triples))), set(range(f.n)))
    return None if got is None else tuple(got[i] for i in range(len(ts.triples)))


def find_mixed_transversal(f: FGraph, ts: TripleSystem) -> MixedTransversal | None:
    """Per F*-component, an independent or a spread transversal; None if some
    component supports neither."""
    comps = fstar_components(f, ts)
    members: dict[int, int] = {}
    parts = []
    for comp in comps:
        comp_set = set(comp)
        idxs = tuple(sorted({ts.triple_of[y] for y in comp}))
        got = _independent_for(f, ts, idxs)
        case = "independent"
        if got is None:
            got = _spread_for(f, ts, idxs, comp_set)
            case = "spread"
        if got is None:
            return None
        members.update(got)
        parts.append(TransversalPart(idxs, case))
    return MixedTransversal(
        tuple(members[i] for i in range(len(ts.triples))), tuple(parts)
    )


def _kuhn_round(xs: list[int], rem: dict[int, list[tuple[int, int]]]) -> dict[int, int]:
    """Maximum matching (x -> chosen edge id) by augmenting paths."""
    match_y: dict[int, tuple[int, int]] = {}  # y -> (x, eid)
    pair_x: dict[int, int] = {}

    def augment(x: int, banned: set[int]) -> bool:
        for eid, y in rem[x]:
            if y in banned:
                continue
            banned.add(y)
            if y not in match_y or augment(match_y[y][0], banned):
                match_y[y] = (x, eid)
                pair_x[x] = eid
                return True
        return False

    for x in xs:
        augment(x, set())
    return pair_x


def proper_3_edge_color(g: BipartiteMultigraph, edge_set: frozenset[int]) -> dict[int, int]:
    """Proper 3-edge-coloring (colors 1..3) of a 3-regular edge subset.

    Peels two perfect matchings by augmenting paths; the remainder must
    then be a perfect matching itself. Regularity guarantees all three
    rounds succeed, so a failure raises InvariantError.
    """
    deg: dict[tuple[str, int], int] = {}
    rem: dict[int, list[tuple[int, int]]] = {}
    for eid in sorted(edge_set):
        if not (0 <= eid < g.edge_count):
            raise ValueError(f"no edge {eid}")
        x, y = g.edges[eid]
        deg[("X", x)] = deg.get(("X", x), 0) + 1
        deg[("Y", y)] = deg.get(("Y", y), 0) + 1
        rem.setdefault(x, []).append((eid, y))
    if any(d != 3 for d in deg.values()):
        raise ValueError("edge set does not induce a 3-regular subgraph")
    xs = sorted(rem)
    colors: dict[int, int] = {}
    for color in (1, 2):
        got = _kuhn_round(xs, rem)
        if len(got) != len(xs):
            raise InvariantError(f"color {color} matching is not perfect")
        for x, eid in got.items():
            colors[eid] = color
            rem[x] = [(e, y) for e, y in rem[x] if e != eid]
    for x in xs:
        if len(rem[x]) != 1:
            raise InvariantError("leftover color class is not a perfect matching")
        colors[rem[x][0][0]] = 3
    return colors


def _validate_3_edge_coloring(
    g: BipartiteMultigraph, edge_set: frozenset[int], colors: dict[int, int]
) -> None:
    if set(colors) != edge_set:
        raise ValueError("coloring does not cover the subgraph edge set")
    seen: dict[tuple[str, int], set[int]] = {}
    for eid, c in colors.items():
        if c not in (1, 2, 3):
            raise ValueError(f"color {c} outside 1..3")
        x, y = g.edges[eid]
        for key in (("X", x), ("Y", y)):
            if c in seen.setdefault(key, set()):
                raise ValueError(f"color {c} repeats at {key[0].lower()}{key[1]}")
            seen[key].add(c)


def build_f(
    g: BipartiteMultigraph,
    cert: SubgraphCertificate,
    colors: dict[int, int] | None = None,
) -> tuple[FGraph, TripleSystem]:
    """Link graph F and the Y-triple system of a full 3-regular subgraph.

    F has one edge per subgraph X-vertex, directed from the far end of
    its color-1 edge to the far end of its color-2 edge; triples are the
    neighborhoods of the X-vertices outside the subgraph, in ascending
    X order. Parallel edges of the input surface as loops in F. A
    `colors` override (any proper 3-edge-coloring of the subgraph, for
    instance a color permutation) replaces the computed one.
    """
    if not check_full_3regular(g, cert):
        raise ValueError("certificate is not a full 3-regular subgraph")
    if colors is None:
        colors = proper_3_edge_color(g, cert.edge_set)
    else:
        _validate_3_edge_coloring(g, cert.edge_set, colors)
    by_x: dict[int, dict[int, int]] = {}
    for eid, c in colors.items():
        by_x.setdefault(g.edges[eid][0], {})[c] = eid
    fedges = []
    for x in sorted(by_x):
        e1, e2 = by_x[x][1], by_x[x][2]
        fedges.append(FEdge(g.edges[e1][1], g.edges[e2][1], x, e1, e2))
    f = FGraph(g.y_count, tuple(fedges))

    outside = [x for x in range(g.x_count) if x not in by_x]
    triples = tuple(tuple(sorted(j for _, j in g.x_adj[x])) for x in outside)
    return f, TripleSystem(triples)


def _x0_vertices(g: BipartiteMultigraph, cert: SubgraphCertificate) -> list[int]:
    inside = {g.edges[eid][0] for eid in cert.edge_set}
    return [x for x in range(g.x_count) if x not in inside]


def factor_from_mixed_transversal(
    g: BipartiteMultigraph,
    cert: SubgraphCertificate,
    mixed: MixedTransversal | None = None,
    colors: dict[int, int] | None = None,
) -> PathFactor | None:
    """Proper path factor from a full 3-regular subgraph, or None.

    Computes F and the triples, finds a mixed transversal (or uses the
    one supplied), then builds the factor component by component. With
    an independent part, each triple contributes the length-4 path
    through its outside X-vertex and the two unchosen triple members,
    capped by their color-1 partners; each chosen member then extends
    one of those paths by its color-2 edge and its own color-1 partner.
    With a spread part, each chosen member starts a walk along surviving
    F-edges (incoming edges of chosen members are deleted), expanded to
    length-2 steps through the F-edge middles and capped by the final
    vertex's color-1 partner, which is exactly the middle of the deleted
    edge ahead.
    """
    biregular34_k(g)
    f, ts = build_f(g, cert, colors=colors)
    if mixed is None:
        mixed = find_mixed_transversal(f, ts)
        if mixed is None:
            return None
    _validate_mixed(f, ts, mixed)

    x0s = _x0_vertices(g, cert)
    trip_eid: dict[tuple[int, int], int] = {}
    for x in x0s:
        for eid, j in g.x_adj[x]:
            trip_eid[(x, j)] = eid

    def m_of(y: int) -> tuple[int, int]:
        e = f.out_edge(y)
        return e.mid_x, e.edge1

    def c2_of(y: int) -> tuple[int, int]:
        e = f.in_edge(y)
        return e.mid_x, e.edge2

    paths: list[Path] = []
    for part in mixed.parts:
        if part.case == "independent":
            paths.extend(_case_independent(f, ts, mixed, part, x0s, trip_eid, m_of, c2_of))
        else:
            paths.extend(_case_spread(f, ts, mixed, part, x0s, trip_eid))

    factor = PathFactor(tuple(paths))
    why = path_factor_violation(g, factor)
    if why is not None:
        raise InvariantError(f"transversal construction failed: {why}")
    return factor


def _validate_mixed(f: FGraph, ts: TripleSystem, mixed: MixedTransversal) -> None:
    k = len(ts.triples)
    if len(mixed.members) != k:
        raise ValueError("one member per triple required")
    for i, y in enumerate(mixed.members):
        if y not in ts.triples[i]:
            raise ValueError(f"member {y} is not in triple {i}")
    covered = sorted(i for part in mixed.parts for i in part.indices)
    if covered != list(range(k)):
        raise ValueError("parts do not partition the triples")
    nbrs, looped = _f_neighbors(f)
    for part in mixed.parts:
        chosen = [mixed.members[i] for i in part.indices]
        if part.case == "independent":
            bad = set(chosen) & looped
            if bad or any(b in nbrs[a] for a in chosen for b in chosen):
                raise ValueError("part is not an independent transversal")
        elif part.case == "spread":
            comp = {y for i in part.indices for y in ts.triples[i]}
            for cyc in f.cycles:
                if cyc[0] not in comp:
                    continue
                pos = [i for i, y in enumerate(cyc) if y in set(chosen)]
                if not pos:
                    raise ValueError("part misses an F-cycle, not spread")
                for a, b in zip(pos, pos[1:] + [pos[0] + len(cyc)]):
                    if b - a - 1 > 3:
                        raise ValueError("part leaves a gap over 3, not spread")
        else:
            raise ValueError(f"unknown case {part.case!r}")


def _case_independent(f, ts, mixed, part, x0s, trip_eid, m_of, c2_of) -> list[Path]:
    bases: dict[int, tuple[list, list]] = {}
    end_at: dict[int, tuple[int, int]] = {}  # base endpoint x -> (triple, 0 left / 1 right)
    for i in part.indices:
        y1 = mixed.members[i]
        y2, y3 = sorted(set(ts.triples[i]) - {y1})
        x2, e2 = m_of(y2)
        x3, e3 = m_of(y3)
        x0 = x0s[i]
        verts = [xv(x2), yv(y2), xv(x0), yv(y3), xv(x3)]
        eids = [e2, trip_eid[(x0, y2)], trip_eid[(x0, y3)], e3]
        bases[i] = (verts, eids)
        end_at[x2] = (i, 0)
        end_at[x3] = (i, 1)
    used_ends: set[int] = set()
    for i in part.indices:
        y1 = mixed.members[i]
        xh, eh = c2_of(y1)
        x1, e1 = m_of(y1)
        if xh not in end_at or xh in used_ends:
            raise InvariantError(f"color-2 neighbor x{xh} of y{y1} is not a free path end")
        used_ends.add(xh)
        j, side = end_at[xh]
        verts, eids = bases[j]
        if side == 0:
            verts[:0] = [xv(x1), yv(y1)]
            eids[:0] = [e1, eh]
        else:
            verts.extend([yv(y1), xv(x1)])
            eids.extend([eh, e1])
    return [Path(tuple(v), tuple(e)) for v, e in (bases[i] for i in part.indices)]


def _case_spread(f, ts, mixed, part, x0s, trip_eid) -> list[Path]:
    members = {mixed.members[i] for i in part.indices}
    deleted = {f.in_index[m] for m in members}
    paths = []
    for i in part.indices:
        m = mixed.members[i]
        x0 = x0s[i]
        verts = [xv(x0), yv(m)]
        eids = [trip_eid[(x0, m)]]
        cur = m
        steps = 0
        while f.out_index[cur] not in deleted:
            e = f.out_edge(cur)
            verts.extend([xv(e.mid_x), yv(e.v)])
            eids.extend([e.edge1, e.edge2])
            cur = e.v
            steps += 1
            if steps > 3:
                raise InvariantError("spread walk exceeded 3 F-edges")
        e = f.out_edge(cur)  # deleted ahead; its middle is still uncovered
        verts.append(xv(e.mid_x))
        eids.append(e.edge1)
        paths.append(Path(tuple(verts), tuple(eids)))
    return paths
