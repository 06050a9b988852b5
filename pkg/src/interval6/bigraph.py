"""Bipartite multigraphs with stable integer edge ids.

Everything in this library runs over one concrete representation. The two
sides of the bipartition are index ranges: X-side vertices 0..x_count-1
and Y-side vertices 0..y_count-1. An edge is an (x, y) pair stored at a
fixed position in the edge list, and that position is the edge's id.
Parallel edges are therefore distinct objects, and certificates (path
factors, colorings, subgraphs) can reference edges unambiguously.

Graphs are immutable after build(); operations that need a modified graph
(deleting Y-vertices, composing two graphs) return a new one together
with index maps back to the original.
"""

from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence


class Vertex(NamedTuple):
    side: str  # "X" or "Y"
    index: int

    @property
    def label(self) -> str:
        return f"{self.side.lower()}{self.index}"


def xv(i: int) -> Vertex:
    return Vertex("X", i)


def yv(j: int) -> Vertex:
    return Vertex("Y", j)


_LABEL_RE = re.compile(r"^([xy])(\d+)$")


def parse_vertex(label: str) -> Vertex:
    m = _LABEL_RE.match(label)
    if not m:
        raise ValueError(f"bad vertex label {label!r}")
    return Vertex(m.group(1).upper(), int(m.group(2)))


@dataclass(frozen=True)
class BipartiteMultigraph:
    x_count: int
    y_count: int
    edges: tuple[tuple[int, int], ...]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    # Adjacency is cached per instance; edge lists are kept in edge-id
    # order so every traversal that walks them is deterministic.
    @cached_property
    def x_adj(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.x_count)]
        for eid, (x, y) in enumerate(self.edges):
            adj[x].append((eid, y))
        return tuple(tuple(a) for a in adj)

    @cached_property
    def y_adj(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.y_count)]
        for eid, (x, y) in enumerate(self.edges):
            adj[y].append((eid, x))
        return tuple(tuple(a) for a in adj)

    def degree(self, v: Vertex) -> int:
        if v.side == "X":
            return len(self.x_adj[v.index])
        return len(self.y_adj[v.index])

    def vertices(self) -> list[Vertex]:
        return [xv(i) for i in range(self.x_count)] + [yv(j) for j in range(self.y_count)]

    def incident(self, v: Vertex) -> tuple[tuple[int, Vertex], ...]:
        """Edges at v as (edge id, other endpoint), in edge-id order."""
        if v.side == "X":
            return tuple((eid, yv(j)) for eid, j in self.x_adj[v.index])
        return tuple((eid, xv(i)) for eid, i in self.y_adj[v.index])

    def endpoints(self, eid: int) -> tuple[Vertex, Vertex]:
        x, y = self.edges[eid]
        return xv(x), yv(y)


def build(x_count: int, y_count: int, edges: Sequence[tuple[int, int]]) -> BipartiteMultigraph:
    """Build a graph, validating every endpoint index.

    Edge ids are the positions in `edges`; the list is kept as given.
    """
    if x_count < 0 or y_count < 0:
        raise ValueError("vertex counts must be nonnegative")
    clean = []
    for pos, pair in enumerate(edges):
        x, y = pair
        if not (0 <= x < x_count and 0 <= y < y_count):
            raise ValueError(f"edge {pos} joins ({x}, {y}), outside 0..{x_count - 1} x 0..{y_count - 1}")
        clean.append((int(x), int(y)))
    return BipartiteMultigraph(x_count, y_count, tuple(clean))


def is_biregular(g: BipartiteMultigraph, a: int, b: int) -> bool:
    """True when every X-vertex has degree a and every Y-vertex degree b."""
    return all(len(adj) == a for adj in g.x_adj) and all(len(adj) == b for adj in g.y_adj)


def biregular34_k(g: BipartiteMultigraph) -> int:
    """The scale k of a (3,4)-biregular graph (|X| = 4k, |Y| = 3k); raises otherwise."""
    if not is_biregular(g, 3, 4):
        raise ValueError("graph is not (3,4)-biregular")
    k, rem = divmod(g.x_count, 4)
    if rem or g.y_count != 3 * k:
        # unreachable: 3|X| = edges = 4|Y| forces |X| = 4k, |Y| = 3k
        raise ValueError("side sizes inconsistent with (3,4)-biregularity")
    return k


def is_simple(g: BipartiteMultigraph) -> bool:
    return len(set(g.edges)) == len(g.edges)


def components(g: BipartiteMultigraph) -> list[list[Vertex]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex.

    Isolated vertices form their own singleton components. X-vertices sort
    before Y-vertices, so the ordering is deterministic.
    """
    seen: set[Vertex] = set()
    out: list[list[Vertex]] = []
    for start in g.vertices():
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for _, w in g.incident(v):
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def eulerian_circuit(g: BipartiteMultigraph, component: Iterable[Vertex], start: int = 0) -> list[int]:
    """Closed walk through every edge of one component, as edge ids.

    `component` must be one connected component (as produced by
    components()); every vertex in it must have even degree, otherwise a
    ValueError names an offending vertex. Ties are broken by always
    leaving along the lowest unused edge id, so the circuit is
    deterministic; `start` rotates which vertex the walk begins at
    (index into the sorted vertices that have edges).
    """
    verts = sorted(set(component))
    for v in verts:
        if g.degree(v) % 2:
            raise ValueError(f"vertex {v.label} has odd degree {g.degree(v)}")
    carriers = [v for v in verts if g.degree(v) > 0]
    if not carriers:
        return []
    start_v = carriers[start % len(carriers)]
    vset = set(verts)

    adj = {v: list(g.incident(v)) for v in carriers}
    ptr = {v: 0 for v in carriers}
    used: set[int] = set()
    total = sum(len(a) for a in adj.values()) // 2

    stack: list[tuple[Vertex, int | None]] = [(start_v, None)]
    rev: list[int] = []
    while stack:
        v, entry = stack[-1]
        if v not in vset:
            raise ValueError(f"edge leaves the given component at {v.label}")
        take = None
        while ptr[v] < len(adj[v]):
            eid, w = adj[v][ptr[v]]
            if eid in used:
                ptr[v] += 1
                continue
            take = (eid, w)
            break
        if take is None:
            stack.pop()
            if entry is not None:
                rev.append(entry)
        else:
            eid, w = take
            used.add(eid)
            stack.append((w, eid))
    if len(rev) != total:
        raise ValueError("component argument is not connected")
    rev.reverse()
    return rev


def is_two_edge_connected(g: BipartiteMultigraph) -> bool:
    """Connected and bridgeless. Parallel edges are never bridges."""
    n = g.x_count + g.y_count
    if n == 0:
        return False
    comps = components(g)
    if len(comps) != 1:
        return False
    if g.edge_count == 0:
        return n == 1

    def vid(v: Vertex) -> int:
        return v.index if v.side == "X" else g.x_count + v.index

    disc = [-1] * n
    low = [0] * n
    timer = 0
    incid = {vid(v): g.incident(v) for v in g.vertices()}
    # iterative DFS; skip only the edge id we arrived by, so a parallel
    # companion still gives a back edge
    stack: list[tuple[int, int, int]] = [(vid(xv(0)), -1, 0)]
    verts = g.vertices()
    while stack:
        v, pedge, i = stack.pop()
        if i == 0:
            disc[v] = low[v] = timer
            timer += 1
        advanced = False
        lst = incid[v]
        while i < len(lst):
            eid, w0 = lst[i]
            w = vid(w0)
            if eid == pedge:
                i += 1
                continue
            if disc[w] == -1:
                stack.append((v, pedge, i + 1))
                stack.append((w, eid, 0))
                advanced = True
                break
            low[v] = min(low[v], disc[w])
            i += 1
        if advanced:
            continue
        # v is finished; fold into parent if any
        if stack:
            pv = stack[-1][0]
            low[pv] = min(low[pv], low[v])
            if low[v] > disc[pv]:
                return False  # the entry edge of v is a bridge
    return True


def delete_y(g: BipartiteMultigraph, ys: Iterable[int]) -> tuple[BipartiteMultigraph, tuple[int, ...], tuple[int, ...]]:
    """New graph without the given Y-vertices.

    Returns (h, edge_map, y_map): edge_map[new_eid] = old edge id and
    y_map[new_y] = old y index. X-side indexing is unchanged.
    """
    drop = set(ys)
    for j in drop:
        if not (0 <= j < g.y_count):
            raise ValueError(f"no Y-vertex {j}")
    y_map = [j for j in range(g.y_count) if j not in drop]
    back = {old: new for new, old in enumerate(y_map)}
    new_edges = []
    edge_map = []
    for eid, (x, y) in enumerate(g.edges):
        if y in drop:
            continue
        new_edges.append((x, back[y]))
        edge_map.append(eid)
    h = BipartiteMultigraph(g.x_count, len(y_map), tuple(new_edges))
    return h, tuple(edge_map), tuple(y_map)


# --- serialization -----------------------------------------------------

def to_dict(g: BipartiteMultigraph) -> dict:
    return {
        "x_count": g.x_count,
        "y_count": g.y_count,
        "edges": [[x, y] for x, y in g.edges],
    }


def from_dict(d: dict) -> BipartiteMultigraph:
    try:
        return build(d["x_count"], d["y_count"], [tuple(e) for e in d["edges"]])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed graph object: {exc}") from exc


def to_json(g: BipartiteMultigraph) -> str:
    return json.dumps(to_dict(g))


def from_json(text: str) -> BipartiteMultigraph:
    return from_dict(json.loads(text))


# Edge colors 1..6 rendered into DOT output.
DOT_PALETTE = {
    1: "#e41a1c",
    2: "#377eb8",
    3: "#4daf4a",
    4: "#984ea3",
    5: "#ff7f00",
    6: "#a65628",
}


def to_dot(g: BipartiteMultigraph, edge_colors: dict[int, int] | None = None) -> str:
    """DOT text: X-vertices as circles, Y as squares, parallel edges separate.

    With `edge_colors` (edge id -> color 1..6), edges are drawn in a fixed
    palette and labeled with their color.
    """
    lines = ["graph G {", "  rankdir=LR;"]
    lines.append("  { rank=same; " + " ".join(f"x{i};" for i in range(g.x_count)) + " }")
    lines.append("  { rank=same; " + " ".join(f"y{j};" for j in range(g.y_count)) + " }")
    for i in range(g.x_count):
        lines.append(f'  x{i} [shape=circle, label="x{i}"];')
    for j in range(g.y_count):
        lines.append(f'  y{j} [shape=square, label="y{j}"];')
    for eid, (x, y) in enumerate(g.edges):
        if edge_colors is None:
            lines.append(f"  x{x} -- y{y};")
        else:
            c = edge_colors[eid]
            tint = DOT_PALETTE.get(c, "#000000")
            lines.append(f'  x{x} -- y{y} [color="{tint}", label="{c}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
