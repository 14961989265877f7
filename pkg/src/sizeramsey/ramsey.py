"""Ground-truth oracles: arrowing decision, tiny size-Ramsey search, min-W oracle.

``arrows`` first lists every l-path copy in the host (as an edge-index set).
The host arrows the path iff no red/blue coloring of its edges leaves every
copy bichromatic, so the search is a 2-coloring search over those copies:
edges are assigned most-constrained first, a branch dies as soon as a copy
turns monochromatic, and a copy with all but one edge in one color forces the
last edge to the other color.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache, partial
from itertools import combinations, product

from ._search import NodeCounter, ordered_first, run_subtree
from .bounds import trivial_lower_bound
from .errors import BudgetExceeded, RamseyError
from .hypergraph import Color, Coloring, Hypergraph, canonical_code, make_hypergraph, CANON_MAX_VERTICES
from .paths import EllPath, check_path_params, enumerate_path_copies

DEFAULT_MAX_EDGES = 30
PREFIX_DEPTH = 5
SIZE_RAMSEY_MAX_EDGES = 8
MIN_W_MAX_VERTICES = 24

ARROWS = "Arrows"
DOES_NOT_ARROW = "DoesNotArrow"
UNKNOWN = "Unknown"


@dataclass
class ArrowResult:
    verdict: str
    witness: Coloring | None = None
    colorings_examined: int = 0
    nodes: int = 0
    copies: int = 0

    @property
    def arrows(self) -> bool:
        return self.verdict == ARROWS


@dataclass(frozen=True)
class _ColoringProblem:
    m: int
    copies: tuple  # each a tuple of edge indices
    copies_of: tuple  # per edge: indices of copies containing it
    order: tuple  # decision edges, most constrained first


def _coloring_search(prob: _ColoringProblem, prefix: tuple, counter: NodeCounter):
    """DFS below a fixed color prefix; returns a conflict-free color tuple or None."""
    m, copies, copies_of, order = prob.m, prob.copies, prob.copies_of, prob.order
    color = [0] * m  # 0 unassigned, 1 red, 2 blue
    cnt = ([0] * len(copies), [0] * len(copies), [0] * len(copies))

    def assign(e: int, c: int, trail: list) -> bool:
        stack = [(e, c)]
        while stack:
            e, c = stack.pop()
            if color[e]:
                if color[e] != c:
                    return False
                continue
            counter.tick()
            color[e] = c
            trail.append(e)
            mine, other = cnt[c], cnt[3 - c]
            for t in copies_of[e]:
                mine[t] += 1
            for t in copies_of[e]:
                size = len(copies[t])
                if mine[t] == size:
                    return False
                if mine[t] == size - 1 and other[t] == 0:
                    f = next(f for f in copies[t] if not color[f])
                    stack.append((f, 3 - c))
        return True

    def undo(trail: list) -> None:
        for e in trail:
            c = color[e]
            for t in copies_of[e]:
                cnt[c][t] -= 1
            color[e] = 0

    base: list[int] = []
    for e, c in zip(order, prefix):
        if not assign(e, c, base):
            counter.leaves += 1
            return None

    def dfs(i: int):
        while i < len(order) and color[order[i]]:
            i += 1
        if i == len(order):
            counter.leaves += 1
            return tuple(color)
        e = order[i]
        for c in (1, 2):
            trail: list[int] = []
            if assign(e, c, trail):
                hit = dfs(i + 1)
                if hit is not None:
                    return hit
            else:
                counter.leaves += 1
            undo(trail)
        return None

    return dfs(len(prefix))


def _coloring_worker(prob: _ColoringProblem, prefix: tuple, limit, deadline):
    return run_subtree(partial(_coloring_search, prob), prefix, limit, deadline)


def _check_target(G: Hypergraph, target) -> tuple:
    k, ell, n = target
    check_path_params(k, ell, n)
    if G.k != k:
        raise RamseyError("BAD_PARAMS", f"host is {G.k}-uniform but the target is {k}-uniform")
    return k, ell, n


def arrows(
    G: Hypergraph,
    target,
    budget: int | None = None,
    jobs: int = 1,
    max_edges: int = DEFAULT_MAX_EDGES,
    time_limit: float | None = None,
) -> ArrowResult:
    """Decide whether every red/blue coloring of G has a monochromatic l-path copy.

    ``target`` is (k, ell, n).  The verdict is Unknown, never a guess, when the
    node budget runs out.
    """
    k, ell, n = _check_target(G, target)
    if G.m > max_edges:
        raise RamseyError("TOO_LARGE", f"host has {G.m} edges, exhaustive mode is capped at {max_edges}")
    counter = NodeCounter(budget, time_limit)
    try:
        copies = enumerate_path_copies(G, k, ell, n, counter=counter)
    except BudgetExceeded:
        return ArrowResult(UNKNOWN, nodes=counter.nodes)
    if not copies:
        return ArrowResult(DOES_NOT_ARROW, Coloring.uniform(G, Color.RED), 1, counter.nodes, 0)

    copies_of = [[] for _ in range(G.m)]
    for t, cp in enumerate(copies):
        for e in cp:
            copies_of[e].append(t)
    order = sorted((e for e in range(G.m) if copies_of[e]), key=lambda e: (-len(copies_of[e]), e))
    prob = _ColoringProblem(G.m, tuple(copies), tuple(map(tuple, copies_of)), tuple(order))

    # The first decision edge is fixed red: swapping colors maps witnesses to witnesses.
    depth = min(PREFIX_DEPTH, len(order))
    prefixes = [(1,) + rest for rest in product((1, 2), repeat=depth - 1)]
    try:
        hit = ordered_first(partial(_coloring_worker, prob), prefixes, counter, jobs)
    except BudgetExceeded:
        return ArrowResult(UNKNOWN, None, counter.leaves, counter.nodes, len(copies))
    if hit is None:
        return ArrowResult(ARROWS, None, counter.leaves, counter.nodes, len(copies))
    colors = [Color.BLUE if c == 2 else Color.RED for c in hit]
    return ArrowResult(DOES_NOT_ARROW, Coloring(G, colors), counter.leaves, counter.nodes, len(copies))


# -- size-Ramsey search -------------------------------------------------------


def _extensions(H: Hypergraph, max_vertices: int):
    v = H.n
    k = H.k
    present = set(H.edges)
    for t in range(k, -1, -1):
        fresh = tuple(range(v, v + k - t))
        if v + k - t > max_vertices:
            continue
        for S in combinations(range(v), t):
            e = S + fresh
            if e in present:
                continue
            yield make_hypergraph(k, range(v + k - t), list(H.edges) + [e])


@lru_cache(maxsize=None)
def _host_levels(k: int, m: int, max_vertices: int) -> tuple:
    if m == 0:
        return (make_hypergraph(k, (), ()),)
    seen: dict[bytes, Hypergraph] = {}
    for H in _host_levels(k, m - 1, max_vertices):
        for G in _extensions(H, max_vertices):
            code = canonical_code(G)
            if code not in seen:
                seen[code] = G
    return tuple(seen[c] for c in sorted(seen))


def enumerate_hosts(k: int, m: int, max_vertices: int) -> tuple:
    """One representative per isomorphism class of k-graphs with m edges,
    no isolated vertices and at most ``max_vertices`` vertices."""
    if k < 2 or m < 0:
        raise RamseyError("BAD_PARAMS", f"need k >= 2 and m >= 0, got k={k}, m={m}")
    if max_vertices > CANON_MAX_VERTICES:
        raise RamseyError("TOO_LARGE", f"host enumeration is capped at {CANON_MAX_VERTICES} vertices")
    return _host_levels(k, m, max_vertices)


@dataclass
class SizeRamseySearch:
    """Outcome of a bounded size-Ramsey search."""

    k: int
    ell: int
    n: int
    lower_bound: int
    m: int | None = None
    witness: Hypergraph | None = None
    hosts_checked: dict = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.m is not None


def size_ramsey_search(
    k: int,
    ell: int,
    n: int,
    max_edges: int,
    max_vertices: int | None = None,
    budget: int | None = None,
    jobs: int = 1,
) -> SizeRamseySearch:
    """Smallest m <= max_edges such that some k-graph with m edges arrows the path.

    Starts at the trivial lower bound.  Raises BUDGET_EXCEEDED if any host's
    arrowing check runs out of nodes.
    """
    check_path_params(k, ell, n)
    if max_edges > SIZE_RAMSEY_MAX_EDGES:
        raise RamseyError(
            "TOO_LARGE",
            f"max_edges={max_edges} exceeds the cap of {SIZE_RAMSEY_MAX_EDGES}: host enumeration grows super-exponentially",
        )
    if max_vertices is None:
        max_vertices = min(k * max_edges, CANON_MAX_VERTICES)
    if max_vertices > CANON_MAX_VERTICES:
        raise RamseyError("TOO_LARGE", f"max_vertices is capped at {CANON_MAX_VERTICES}")
    lb = math.ceil(trivial_lower_bound(k, ell, n))
    result = SizeRamseySearch(k, ell, n, lb)
    counter = NodeCounter(budget)
    for m in range(max(lb, 1), max_edges + 1):
        cap = min(k * m, max_vertices)
        checked = 0
        for H in enumerate_hosts(k, m, cap):
            if H.n < n:
                continue
            checked += 1
            res = arrows(H, (k, ell, n), budget=counter.remaining(), jobs=jobs)
            if res.verdict == UNKNOWN:
                raise BudgetExceeded(f"arrowing check ran out of nodes at m={m}", nodes=budget or 0)
            counter.tick(res.nodes)
            if res.arrows:
                result.hosts_checked[m] = checked
                result.m, result.witness = m, H
                return result
        result.hosts_checked[m] = checked
    return result


# -- counting oracle ------------------------------------------------------------


def min_W_oracle(P: EllPath, alpha, budget: int | None = None) -> int:
    """Minimum |W| over W within V(P) such that every edge meets W in >= alpha vertices.

    Exhaustive over vertex subsets in order of increasing size.
    """
    if P.n > MIN_W_MAX_VERTICES:
        raise RamseyError("TOO_LARGE", f"min_W_oracle is capped at {MIN_W_MAX_VERTICES} vertices")
    need = math.ceil(alpha)
    if need <= 0:
        return 0
    if need > P.k:
        raise RamseyError("BAD_PARAMS", f"alpha={alpha} exceeds the edge size {P.k}")
    pos = {v: i for i, v in enumerate(P.order)}
    masks = []
    for e in P.edges:
        mask = 0
        for v in e:
            mask |= 1 << pos[v]
        masks.append(mask)
    counter = NodeCounter(budget)
    for size in range(P.n + 1):
        for combo in combinations(range(P.n), size):
            counter.tick()
            W = 0
            for i in combo:
                W |= 1 << i
            if all((W & e).bit_count() >= need for e in masks):
                return size
    raise AssertionError("W = V(P) always satisfies the constraint")
