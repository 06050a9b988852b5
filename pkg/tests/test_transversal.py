"""Tests for the transversal route to proper path-factors."""

import itertools
import random

import pytest

from interval6.bigraph import build
from interval6.checker import check_full_3regular, check_proper_path_factor
from interval6.generators import (
    claw_triple_graph,
    independent_obstruction,
    no_mixed_transversal_instance,
    random_34_biregular,
    spread_obstruction,
    two_eight_triples,
)
from interval6.pathfactor import search_full_3regular
from interval6.transversal import (
    FEdge,
    FGraph,
    MixedTransversal,
    TransversalPart,
    TripleSystem,
    build_f,
    factor_from_mixed_transversal,
    find_independent_transversal,
    find_mixed_transversal,
    find_spread_transversal,
    fstar_components,
    is_spread,
    proper_3_edge_color,
)


def nine_cycle_instance():
    # Three X-vertices hit spaced triples of a 9-cycle on Y, and nine
    # more each cover three consecutive Y-vertices, so the subgraph is
    # forced and its link graph is a single directed 9-cycle.
    edges = []
    for j, trip in enumerate([(0, 2, 3), (1, 4, 6), (5, 7, 8)]):
        for y in trip:
            edges.append((j, y))
    for i in range(9):
        edges.extend([(3 + i, i), (3 + i, (i + 1) % 9), (3 + i, (i + 2) % 9)])
    return build(12, 9, edges)


def permutation_fgraph(n, rng):
    targets = list(range(n))
    rng.shuffle(targets)
    return FGraph(n, tuple(FEdge(u, v) for u, v in enumerate(targets)))


def consecutive_triples(n):
    return TripleSystem(tuple((i, i + 1, i + 2) for i in range(0, n, 3)))


def brute_independent(f, ts):
    adj = {y: set() for y in range(f.n)}
    looped = set()
    for e in f.edges:
        if e.u == e.v:
            looped.add(e.u)
        adj[e.u].add(e.v)
        adj[e.v].add(e.u)
    for pick in itertools.product(*ts.triples):
        if any(y in looped for y in pick):
            continue
        if any(b in adj[a] for a, b in itertools.combinations(pick, 2)):
            continue
        return pick
    return None


def brute_spread(f, ts):
    for pick in itertools.product(*ts.triples):
        if is_spread(f, pick):
            return pick
    return None


def test_three_edge_color_on_claw():
    g = claw_triple_graph()
    cert = search_full_3regular(g)
    assert cert.edge_set == frozenset(range(3, 12))
    colors = proper_3_edge_color(g, cert.edge_set)
    assert set(colors) == set(range(3, 12))
    assert set(colors.values()) == {1, 2, 3}
    # each x has three parallel edges to one y; both sides see all colors
    for x in (1, 2, 3):
        eids = [eid for eid, _ in g.x_adj[x]]
        assert sorted(colors[e] for e in eids) == [1, 2, 3]


def test_three_edge_color_partitions_random():
    rng = random.Random(20)
    for _ in range(15):
        n = rng.randrange(3, 9)
        edges = []
        for _ in range(3):
            perm = list(range(n))
            rng.shuffle(perm)
            edges.extend((i, perm[i]) for i in range(n))
        g = build(n, n, edges)
        colors = proper_3_edge_color(g, frozenset(range(len(edges))))
        again = proper_3_edge_color(g, frozenset(range(len(edges))))
        assert colors == again
        for c in (1, 2, 3):
            klass = [g.edges[e] for e, got in colors.items() if got == c]
            assert len(klass) == n
            assert len({x for x, _ in klass}) == n
            assert len({y for _, y in klass}) == n


def test_three_edge_color_rejects_unbalanced():
    g = claw_triple_graph()
    with pytest.raises(ValueError):
        proper_3_edge_color(g, frozenset(range(3)))


def test_fgraph_validation():
    with pytest.raises(ValueError):
        FGraph(2, (FEdge(0, 1), FEdge(0, 1)))
    with pytest.raises(ValueError):
        FGraph(2, (FEdge(0, 1),))
    with pytest.raises(ValueError):
        FGraph(1, (FEdge(0, 3),))


def test_fgraph_cycles_canonical():
    f = FGraph(3, (FEdge(0, 1), FEdge(1, 0), FEdge(2, 2)))
    assert f.cycles == ((0, 1), (2,))
    f = FGraph(4, (FEdge(1, 3), FEdge(3, 0), FEdge(0, 2), FEdge(2, 1)))
    assert f.cycles == ((0, 2, 1, 3),)
    assert f.out_edge(2) == FEdge(2, 1)
    assert f.in_edge(2) == FEdge(0, 2)


def test_triple_system_validation():
    with pytest.raises(ValueError):
        TripleSystem(((0, 2, 1),))
    with pytest.raises(ValueError):
        TripleSystem(((0, 1, 1),))
    with pytest.raises(ValueError):
        TripleSystem(((0, 1, 2), (2, 3, 4)))


def test_is_spread_on_nine_cycle():
    f = FGraph(9, tuple(FEdge(i, (i + 1) % 9) for i in range(9)))
    assert is_spread(f, (0, 1, 5))
    assert is_spread(f, (0, 4, 8))
    assert not is_spread(f, (0,))
    assert not is_spread(f, (0, 4))
    assert not is_spread(f, ())
    with pytest.raises(ValueError):
        is_spread(f, (0, 1, 5), orientation=0)


def test_is_spread_direction_invariant():
    rng = random.Random(21)
    for _ in range(200):
        n = rng.randrange(4, 16)
        f = permutation_fgraph(n, rng)
        members = [y for y in range(n) if rng.random() < 0.4]
        fwd = is_spread(f, members, orientation=1)
        assert fwd == is_spread(f, members, orientation=-1)


def test_find_independent_matches_brute_force():
    rng = random.Random(22)
    found = 0
    for _ in range(150):
        n = rng.choice([6, 9, 12])
        f = permutation_fgraph(n, rng)
        ts = consecutive_triples(n)
        got = find_independent_transversal(f, ts)
        want = brute_independent(f, ts)
        assert (got is None) == (want is None)
        if got is not None:
            found += 1
            assert all(got[i] in ts.triples[i] for i in range(len(ts.triples)))
            # re-check independence directly
            adj = {(e.u, e.v) for e in f.edges} | {(e.v, e.u) for e in f.edges}
            assert all((a, b) not in adj for a, b in itertools.combinations(got, 2))
            assert all((y, y) not in adj for y in got)
    assert found > 20


def test_find_spread_matches_brute_force():
    rng = random.Random(23)
    found = 0
    for _ in range(150):
        n = rng.choice([6, 9, 12])
        f = permutation_fgraph(n, rng)
        ts = consecutive_triples(n)
        got = find_spread_transversal(f, ts)
        want = brute_spread(f, ts)
        assert (got is None) == (want is None)
        if got is not None:
            found += 1
            assert all(got[i] in ts.triples[i] for i in range(len(ts.triples)))
            assert is_spread(f, got)
    assert found > 20


def test_search_rejects_partial_triples():
    f = FGraph(9, tuple(FEdge(i, (i + 1) % 9) for i in range(9)))
    ts = TripleSystem(((0, 1, 2), (3, 4, 5)))
    with pytest.raises(ValueError):
        find_independent_transversal(f, ts)
    with pytest.raises(ValueError):
        find_spread_transversal(f, ts)


def test_independent_obstruction():
    for k in (6, 12):
        f, ts = independent_obstruction(k)
        assert f.n == 3 * k
        assert len(ts.triples) == k
        assert len(f.cycles) == k // 2 + k // 3
        assert find_independent_transversal(f, ts) is None
        got = find_spread_transversal(f, ts)
        assert got is not None
        assert is_spread(f, got)
    with pytest.raises(ValueError):
        independent_obstruction(4)


def test_spread_obstruction():
    for k in (4, 8):
        f, ts = spread_obstruction(k)
        assert f.n == 3 * k
        assert len(ts.triples) == k
        assert len(f.cycles) == 3 * k // 2
        assert find_spread_transversal(f, ts) is None
        got = find_independent_transversal(f, ts)
        assert got is not None
    with pytest.raises(ValueError):
        spread_obstruction(3)


def test_no_mixed_transversal_instance():
    f, ts = no_mixed_transversal_instance()
    assert f.n == 60
    assert len(ts.triples) == 20
    assert len(f.cycles) == 22
    comps = fstar_components(f, ts)
    assert len(comps) == 1
    assert find_mixed_transversal(f, ts) is None
    # the parts on their own are fine; only the splice is stuck
    f1, t1 = independent_obstruction(12)
    f2, t2 = spread_obstruction(8)
    assert find_mixed_transversal(f1, t1) is not None
    assert find_mixed_transversal(f2, t2) is not None


def test_fstar_components_split_and_join():
    f = FGraph(6, (FEdge(0, 1), FEdge(1, 2), FEdge(2, 0),
                   FEdge(3, 4), FEdge(4, 5), FEdge(5, 3)))
    assert fstar_components(f, TripleSystem(((0, 1, 2), (3, 4, 5)))) == (
        (0, 1, 2), (3, 4, 5))
    assert fstar_components(f, TripleSystem(((0, 1, 3), (2, 4, 5)))) == (
        (0, 1, 2, 3, 4, 5),)


def test_build_f_on_claw():
    g = claw_triple_graph()
    cert = search_full_3regular(g)
    f, ts = build_f(g, cert)
    assert ts.triples == ((0, 1, 2),)
    # parallel edges collapse to loops, one per subgraph x
    assert f.edges == (
        FEdge(0, 0, mid_x=1, edge1=3, edge2=4),
        FEdge(1, 1, mid_x=2, edge1=6, edge2=7),
        FEdge(2, 2, mid_x=3, edge1=9, edge2=10),
    )
    assert find_mixed_transversal(f, ts) is None
    assert factor_from_mixed_transversal(g, cert) is None


def test_build_f_on_nine_cycle():
    g = nine_cycle_instance()
    cert = search_full_3regular(g)
    assert cert is not None and check_full_3regular(g, cert)
    f, ts = build_f(g, cert)
    assert ts.triples == ((0, 2, 3), (1, 4, 6), (5, 7, 8))
    assert len(f.cycles) == 1 and set(f.cycles[0]) == set(range(9))
    assert sorted(e.mid_x for e in f.edges) == list(range(3, 12))
    for e in f.edges:
        assert g.edges[e.edge1] == (e.mid_x, e.u)
        assert g.edges[e.edge2] == (e.mid_x, e.v)


def test_build_f_rejects_bad_certificate():
    g = nine_cycle_instance()
    cert = search_full_3regular(g)
    from interval6.checker import SubgraphCertificate
    broken = SubgraphCertificate(cert.edge_set - {min(cert.edge_set)})
    with pytest.raises(ValueError):
        build_f(g, broken)


def test_factor_via_independent_case():
    g = nine_cycle_instance()
    cert = search_full_3regular(g)
    f, ts = build_f(g, cert)
    mixed = find_mixed_transversal(f, ts)
    assert mixed is not None
    assert [p.case for p in mixed.parts] == ["independent"]
    factor = factor_from_mixed_transversal(g, cert)
    assert check_proper_path_factor(g, factor)
    assert sorted(p.length for p in factor.paths) == [6, 6, 6]


def test_factor_via_spread_case():
    g = nine_cycle_instance()
    cert = search_full_3regular(g)
    f, ts = build_f(g, cert)
    members = find_spread_transversal(f, ts)
    assert members == (0, 1, 5)
    forced = MixedTransversal(members, (TransversalPart((0, 1, 2), "spread"),))
    factor = factor_from_mixed_transversal(g, cert, mixed=forced)
    assert check_proper_path_factor(g, factor)
    assert sorted(p.length for p in factor.paths) == [2, 8, 8]
    # every path starts at a deleted-x vertex and steps onto its member
    starts = sorted(p.vertices[0].label for p in factor.paths)
    assert starts == ["x0", "x1", "x2"]
    seconds = sorted(p.vertices[1].index for p in factor.paths)
    assert seconds == [0, 1, 5]


def test_factor_rejects_bad_mixed():
    g = nine_cycle_instance()
    cert = search_full_3regular(g)
    part = TransversalPart((0, 1, 2), "spread")
    with pytest.raises(ValueError):  # member outside its triple
        factor_from_mixed_transversal(
            g, cert, mixed=MixedTransversal((1, 1, 5), (part,)))
    with pytest.raises(ValueError):  # parts miss a triple
        factor_from_mixed_transversal(
            g, cert, mixed=MixedTransversal((0, 1, 5), (TransversalPart((0, 1), "spread"),)))
    with pytest.raises(ValueError):  # not spread: gap of four behind 2
        factor_from_mixed_transversal(
            g, cert, mixed=MixedTransversal((2, 1, 5), (part,)))
    with pytest.raises(ValueError):  # 0 and 1 are F-adjacent
        factor_from_mixed_transversal(
            g, cert, mixed=MixedTransversal((0, 1, 5), (TransversalPart((0, 1, 2), "independent"),)))
    with pytest.raises(ValueError):  # unknown case tag
        factor_from_mixed_transversal(
            g, cert, mixed=MixedTransversal((0, 1, 5), (TransversalPart((0, 1, 2), "chained"),)))


def test_two_eight_triples_instance():
    g, factor = two_eight_triples()
    assert (g.x_count, g.y_count, g.edge_count) == (16, 12, 48)
    assert check_proper_path_factor(g, factor)
    assert sorted(p.length for p in factor.paths) == [6, 6, 6, 6]


def test_factor_from_transversal_on_random_instances():
    rng = random.Random(24)
    certs = 0
    factors = 0
    for _ in range(60):
        g = random_34_biregular(rng.choice([2, 3]), seed=rng.randrange(10**6))
        cert = search_full_3regular(g)
        if cert is None:
            continue
        certs += 1
        factor = factor_from_mixed_transversal(g, cert)
        if factor is None:
            continue
        factors += 1
        assert check_proper_path_factor(g, factor)
        assert all(p.length in (2, 4, 6, 8) for p in factor.paths)
    assert certs >= 10
    assert factors >= 10
