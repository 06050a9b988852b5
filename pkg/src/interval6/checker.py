"""Certificates and their checkers.

Everything a construction can hand back is a certificate: an edge
coloring, a path factor, or an edge-set subgraph. The checkers here are
the ground truth the rest of the library (and its tests) verify against,
so they are written as directly as possible from the definitions and do
no clever work.

Conventions: a malformed certificate (dangling edge id, vertex out of
range, partial coloring) raises ValueError; a well-formed certificate
that simply fails the property returns False.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .bigraph import BipartiteMultigraph, Vertex, is_biregular, parse_vertex, xv, yv

FACTOR_LENGTHS = (2, 4, 6, 8)


@dataclass(frozen=True)
class Path:
    """A walk written as alternating vertices and edge ids.

    vertices[i] and vertices[i+1] are joined by edges[i]; the number of
    edges is the path's length.
    """

    vertices: tuple[Vertex, ...]
    edges: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edges)

    def interleaved(self) -> list:
        out: list = [self.vertices[0]]
        for eid, v in zip(self.edges, self.vertices[1:]):
            out.append(eid)
            out.append(v)
        return out


@dataclass(frozen=True)
class PathFactor:
    paths: tuple[Path, ...]

    def edge_ids(self) -> frozenset[int]:
        return frozenset(e for p in self.paths for e in p.edges)


@dataclass(frozen=True)
class EdgeColoring:
    """Total map edge id -> color, stored positionally."""

    colors: tuple[int, ...]
    palette_size: int


@dataclass(frozen=True)
class SubgraphCertificate:
    edge_set: frozenset[int]


def _validate_coloring(g: BipartiteMultigraph, coloring: EdgeColoring) -> None:
    if len(coloring.colors) != g.edge_count:
        missing = list(range(len(coloring.colors), g.edge_count))
        raise ValueError(f"partial coloring: edges {missing} uncolored")
    bad = [eid for eid, c in enumerate(coloring.colors) if not (1 <= c <= coloring.palette_size)]
    if bad:
        raise ValueError(f"colors outside 1..{coloring.palette_size} on edges {bad}")


def vertex_colors(g: BipartiteMultigraph, coloring: EdgeColoring, v: Vertex) -> list[int]:
    """Colors incident to v, sorted, multiplicities kept."""
    return sorted(coloring.colors[eid] for eid, _ in g.incident(v))


def check_proper(g: BipartiteMultigraph, coloring: EdgeColoring) -> bool:
    """No color repeats at any vertex. Partial colorings are an error."""
    _validate_coloring(g, coloring)
    for v in g.vertices():
        cols = vertex_colors(g, coloring, v)
        if len(set(cols)) != len(cols):
            return False
    return True


def interval_violation(g: BipartiteMultigraph, coloring: EdgeColoring) -> tuple[Vertex, tuple[int, ...]] | None:
    """First vertex whose incident colors are not consecutive, with its colors.

    Properness is a precondition (consecutiveness of a multiset with
    repeats is not meaningful), so an improper coloring raises.
    """
    if not check_proper(g, coloring):
        raise ValueError("coloring is not proper; interval property undefined")
    for v in g.vertices():
        cols = vertex_colors(g, coloring, v)
        if not cols:
            continue
        if cols[-1] - cols[0] != len(cols) - 1:
            return v, tuple(cols)
    return None


def check_interval(g: BipartiteMultigraph, coloring: EdgeColoring) -> bool:
    """Proper and, at every vertex, the incident colors form a consecutive run."""
    return interval_violation(g, coloring) is None


def _validate_path_structure(g: BipartiteMultigraph, p: Path) -> None:
    if len(p.vertices) != len(p.edges) + 1:
        raise ValueError(f"path has {len(p.vertices)} vertices but {len(p.edges)} edges")
    for v in p.vertices:
        limit = g.x_count if v.side == "X" else g.y_count
        if v.side not in ("X", "Y") or not (0 <= v.index < limit):
            raise ValueError(f"path mentions unknown vertex {v!r}")
    for eid in p.edges:
        if not (0 <= eid < g.edge_count):
            raise ValueError(f"path references edge {eid}, graph has {g.edge_count}")


def path_factor_violation(g: BipartiteMultigraph, factor: PathFactor) -> str | None:
    """Why `factor` is not a proper path factor of g, or None if it is one.

    Checks, in order: each path is a real path of g (edge ids join the
    stated vertices, no vertex repeats), every path has both endpoints on
    the X side with length in {2,4,6,8}, the paths are pairwise
    vertex-disjoint, edge-disjoint, and together cover every vertex.
    """
    seen_vertices: set[Vertex] = set()
    seen_edges: set[int] = set()
    for pi, p in enumerate(factor.paths):
        _validate_path_structure(g, p)
        if p.length not in FACTOR_LENGTHS:
            return f"path {pi} has length {p.length}, allowed {FACTOR_LENGTHS}"
        if p.vertices[0].side != "X" or p.vertices[-1].side != "X":
            return f"path {pi} does not have both endpoints on the X side"
        if len(set(p.vertices)) != len(p.vertices):
            return f"path {pi} repeats a vertex"
        for i, eid in enumerate(p.edges):
            a, b = p.vertices[i], p.vertices[i + 1]
            x, y = g.edges[eid]
            if {a, b} != {xv(x), yv(y)}:
                return f"path {pi}: edge {eid} joins x{x},y{y}, not {a.label},{b.label}"
            if eid in seen_edges:
                return f"edge {eid} used twice"
            seen_edges.add(eid)
        for v in p.vertices:
            if v in seen_vertices:
                return f"vertex {v.label} lies on two paths"
            seen_vertices.add(v)
    uncovered = [v for v in g.vertices() if v not in seen_vertices]
    if uncovered:
        return f"vertices not covered: {', '.join(v.label for v in uncovered[:8])}"
    return None


def check_proper_path_factor(g: BipartiteMultigraph, factor: PathFactor) -> bool:
    """Spanning collection of disjoint paths, X-endpoints, lengths in {2,4,6,8}."""
    return path_factor_violation(g, factor) is None


def check_full_3regular(g: BipartiteMultigraph, cert: SubgraphCertificate) -> bool:
    """Edge set whose subgraph is 3-regular on all of Y, degree 0 or 3 on X.

    Only defined over (3,4)-biregular graphs; anything else raises.
    """
    if not is_biregular(g, 3, 4):
        raise ValueError("full 3-regular subgraphs are defined over (3,4)-biregular graphs")
    for eid in cert.edge_set:
        if not (0 <= eid < g.edge_count):
            raise ValueError(f"certificate references edge {eid}, graph has {g.edge_count}")
    xdeg = [0] * g.x_count
    ydeg = [0] * g.y_count
    for eid in cert.edge_set:
        x, y = g.edges[eid]
        xdeg[x] += 1
        ydeg[y] += 1
    return all(d == 3 for d in ydeg) and all(d in (0, 3) for d in xdeg)


# --- serialization -----------------------------------------------------
#
# Paths travel as interleaved arrays ["x0", 3, "y1", 7, "x2"]: vertex
# labels at even positions, edge ids at odd ones.

def factor_to_dict(factor: PathFactor) -> dict:
    return {
        "paths": [
            [item if isinstance(item, int) else item.label for item in p.interleaved()]
            for p in factor.paths
        ]
    }


def factor_from_dict(d: dict) -> PathFactor:
    try:
        raw = d["paths"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed factor object: {exc}") from exc
    paths = []
    for seq in raw:
        if len(seq) % 2 == 0 or len(seq) < 3:
            raise ValueError(f"path array of length {len(seq)} cannot alternate vertex/edge")
        verts = []
        eids = []
        for i, item in enumerate(seq):
            if i % 2 == 0:
                verts.append(parse_vertex(item))
            else:
                if not isinstance(item, int):
                    raise ValueError(f"expected edge id at position {i}, got {item!r}")
                eids.append(item)
        paths.append(Path(tuple(verts), tuple(eids)))
    return PathFactor(tuple(paths))


def coloring_to_dict(coloring: EdgeColoring) -> dict:
    return {"palette_size": coloring.palette_size, "colors": list(coloring.colors)}


def coloring_from_dict(d: dict) -> EdgeColoring:
    try:
        return EdgeColoring(tuple(int(c) for c in d["colors"]), int(d["palette_size"]))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed coloring object: {exc}") from exc


def cert_to_dict(cert: SubgraphCertificate) -> dict:
    return {"edges": sorted(cert.edge_set)}


def cert_from_dict(d: dict) -> SubgraphCertificate:
    try:
        return SubgraphCertificate(frozenset(int(e) for e in d["edges"]))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed subgraph object: {exc}") from exc


def dump_certificate(obj, path: str) -> None:
    if isinstance(obj, PathFactor):
        d = factor_to_dict(obj)
    elif isinstance(obj, EdgeColoring):
        d = coloring_to_dict(obj)
    elif isinstance(obj, SubgraphCertificate):
        d = cert_to_dict(obj)
    else:
        raise TypeError(f"not a certificate: {obj!r}")
    with open(path, "w") as fh:
        json.dump(d, fh, indent=1)
        fh.write("\n")
