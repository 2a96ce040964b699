"""Shared test utilities: independent brute-force oracles and random data."""

import itertools
import random

from propertyb import Hypergraph, has_monochromatic_edge


def brute_force_colorable(h: Hypergraph):
    """Exhaustive scan over all 2^V colorings, independent of the solver.

    Returns a proper coloring or None.  Only for small vertex counts.
    """
    for coloring in itertools.product((0, 1), repeat=h.num_vertices):
        if has_monochromatic_edge(h, coloring) is None:
            return coloring
    return None


def random_hypergraph(rng: random.Random, max_vertices: int = 14) -> Hypergraph:
    """Random uniform hypergraph with a handful of distinct edges."""
    nv = rng.randint(3, max_vertices)
    n = rng.randint(2, min(5, nv))
    max_edges = min(40, len(list(itertools.combinations(range(nv), n))))
    count = rng.randint(1, max_edges)
    pool = list(itertools.combinations(range(nv), n))
    edges = rng.sample(pool, count)
    return Hypergraph(n, nv, edges)


def random_permutation(rng: random.Random, size: int) -> list[int]:
    perm = list(range(size))
    rng.shuffle(perm)
    return perm
