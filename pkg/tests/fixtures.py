"""Fixture hosts shared by the adversary, CLI and acceptance tests."""

from __future__ import annotations

import random
from itertools import combinations

from sizeramsey.hypergraph import make_hypergraph
from sizeramsey.paths import build_ell_path


def shifted_path(k, ell, n, offset=0):
    return [tuple(v + offset for v in e) for e in build_ell_path(k, ell, n).edges]


def path_host(k, ell, n):
    return make_hypergraph(k, range(n), shifted_path(k, ell, n))


def disjoint_paths_host(k, ell, n, copies):
    edges = [e for c in range(copies) for e in shifted_path(k, ell, n, c * n)]
    return make_hypergraph(k, range(copies * n), edges)


def constellation_k6():
    """Three disjoint tight 6-uniform paths on 12 vertices, plus two edges that
    reach from the first path's halves into the second path.  In the first
    halving step both extra edges fall into the neighborhoods of the two
    halves of the first path while overlapping each other."""
    edges = [e for c in range(3) for e in shifted_path(6, 5, 12, 12 * c)]
    edges += [(2, 3, 4, 5, 12, 13), (6, 7, 8, 9, 12, 13)]
    return make_hypergraph(6, range(36), edges)


def random_host(rng: random.Random, k, max_vertices, max_edges, min_edges=1):
    nv = rng.randint(k, max_vertices)
    pool = list(combinations(range(nv), k))
    m = rng.randint(min(min_edges, len(pool)), min(max_edges, len(pool)))
    edges = rng.sample(pool, m)
    used = sorted({v for e in edges for v in e})
    return make_hypergraph(k, used, edges)


def tight_iterative_fixtures():
    """(name, host, n, strict) runs of the iterative halving procedure."""
    rng = random.Random(6)
    runs = [
        ("path-4-12", path_host(4, 3, 12), 12, True),
        ("three-paths-4-10", disjoint_paths_host(4, 3, 10, 3), 10, True),
        ("three-paths-4-11", disjoint_paths_host(4, 3, 11, 3), 11, True),
        ("constellation-6", constellation_k6(), 12, False),
        ("three-paths-5-10", disjoint_paths_host(5, 4, 10, 3), 10, False),
    ]
    for i in range(4):
        base = [e for c in range(3) for e in shifted_path(4, 3, 10, 10 * c)]
        extra = rng.sample(list(combinations(range(30), 4)), 12)
        host = make_hypergraph(4, range(30), sorted(set(base) | set(extra)))
        runs.append((f"noisy-paths-4-10-{i}", host, 10, True))
    return runs


def arrow_fixtures():
    """(name, host, target) for the arrowing oracle."""
    rng = random.Random(7)
    out = [
        ("K3", make_hypergraph(2, range(3), [(0, 1), (1, 2), (0, 2)]), (2, 1, 3)),
        ("P3", path_host(2, 1, 3), (2, 1, 3)),
        ("K5-P4", make_hypergraph(2, range(5), list(combinations(range(5), 2))), (2, 1, 4)),
        ("tight-3-7", path_host(3, 2, 7), (3, 2, 5)),
    ]
    for i in range(4):
        out.append((f"random-2-{i}", random_host(rng, 2, 7, 14, 6), (2, 1, 4)))
        out.append((f"random-3-{i}", random_host(rng, 3, 7, 14, 6), (3, 2, 5)))
    return out
