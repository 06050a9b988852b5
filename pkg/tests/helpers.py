"""Random instance builders shared by several test modules."""

import random

from interval6.bigraph import BipartiteMultigraph, build


def random_24_biregular(m: int, rng: random.Random) -> BipartiteMultigraph:
    """Configuration-model multigraph with 2m X-vertices of degree 2 and m Y-vertices of degree 4."""
    y_stubs = [j for j in range(m) for _ in range(4)]
    rng.shuffle(y_stubs)
    return build(2 * m, m, [(s // 2, y_stubs[s]) for s in range(4 * m)])


def random_cover_admitting(k: int, rng: random.Random) -> BipartiteMultigraph:
    """(3,4)-biregular graph that certainly has a Y-set exactly covering X.

    Takes a random (2,4)-biregular graph on 4k X-vertices and adds k new
    Y-vertices wired to a random partition of X into quadruples.
    """
    h = random_24_biregular(2 * k, rng)
    order = list(range(4 * k))
    rng.shuffle(order)
    edges = list(h.edges)
    for j in range(k):
        for x in order[4 * j : 4 * j + 4]:
            edges.append((x, 2 * k + j))
    return build(4 * k, 3 * k, edges)
