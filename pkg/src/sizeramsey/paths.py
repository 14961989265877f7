"""Canonical l-paths and exhaustive search for (monochromatic) l-path copies.

The search assigns host vertices to path positions 1..n left to right.  A
vertex is only tried at position p if, for every path edge that contains p
and already has vertices placed, some allowed host edge contains those
vertices and the candidate.  Positions lying in exactly the same path edges
are interchangeable, so their vertices are forced to increase.  Candidates
are tried in increasing vertex order, which makes the first complete
assignment the lexicographically least embedding.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import partial
from typing import Iterable, Iterator

from ._search import NodeCounter, ordered_first, run_subtree
from .errors import RamseyError
from .hypergraph import Color, Coloring, Hypergraph


def check_path_params(k: int, ell: int, n: int) -> int:
    """Validate (k, ell, n) and return the edge count (n - ell) / (k - ell)."""
    if k < 2 or not 1 <= ell <= k - 1:
        raise RamseyError("BAD_PARAMS", f"need k >= 2 and 1 <= ell <= k-1, got k={k}, ell={ell}")
    if n < k:
        raise RamseyError("BAD_PARAMS", f"need n >= k, got n={n}, k={k}")
    if (n - ell) % (k - ell):
        raise RamseyError("BAD_DIVISIBILITY", f"(n - ell)/(k - ell) = ({n}-{ell})/({k}-{ell}) is not an integer")
    return (n - ell) // (k - ell)


def path_edge_count(k: int, ell: int, n: int) -> int:
    return check_path_params(k, ell, n)


def is_valid_path_size(k: int, ell: int, n: int) -> bool:
    return n >= k and (n - ell) % (k - ell) == 0


@dataclass(frozen=True)
class EllPath:
    """An l-path given by the ordering of its vertices."""

    k: int
    ell: int
    order: tuple

    def __post_init__(self):
        check_path_params(self.k, self.ell, len(self.order))
        if len(set(self.order)) != len(self.order):
            raise RamseyError("BAD_PARAMS", "path vertices must be distinct")

    @property
    def n(self) -> int:
        return len(self.order)

    @property
    def step(self) -> int:
        return self.k - self.ell

    @property
    def edge_count(self) -> int:
        return (self.n - self.ell) // self.step

    @property
    def edges(self) -> tuple:
        """Edges as sorted vertex tuples, in path order."""
        s, k = self.step, self.k
        return tuple(tuple(sorted(self.order[j * s : j * s + k])) for j in range(self.edge_count))


def build_ell_path(k: int, ell: int, n: int) -> EllPath:
    check_path_params(k, ell, n)
    return EllPath(k, ell, tuple(range(n)))


@dataclass(frozen=True)
class PathEmbedding:
    host: Hypergraph
    path: EllPath
    color: Color | None = None

    def edge_indices(self) -> tuple:
        """Host indices of the path's edges, in path order."""
        return tuple(self.host.index_of(e) for e in self.path.edges)

    def is_valid(self, coloring: Coloring | None = None) -> bool:
        if not all(self.host.has_edge(e) for e in self.path.edges):
            return False
        if self.color is not None and coloring is not None:
            return all(coloring[i] is self.color for i in self.edge_indices())
        return True


def subpath(P: PathEmbedding, from_pos: int, to_pos: int) -> PathEmbedding:
    """Restrict P to the 1-based position interval [from_pos, to_pos]."""
    k, ell, n = P.path.k, P.path.ell, P.path.n
    length = to_pos - from_pos + 1
    if not (1 <= from_pos <= to_pos <= n):
        raise RamseyError("BAD_CUT", f"interval [{from_pos}, {to_pos}] outside 1..{n}")
    if (from_pos - 1) % (k - ell):
        raise RamseyError("BAD_CUT", f"position {from_pos} is not an edge boundary")
    if not is_valid_path_size(k, ell, length):
        raise RamseyError("BAD_CUT", f"an {ell}-path cannot have {length} vertices for k={k}")
    order = P.path.order[from_pos - 1 : to_pos]
    return PathEmbedding(P.host, EllPath(k, ell, order), P.color)


# -- search -------------------------------------------------------------------


@dataclass(frozen=True)
class _Problem:
    """Picklable search instance over vertex positions of the host."""

    k: int
    ell: int
    n: int
    masks: tuple  # allowed edge masks
    incident: tuple  # per vertex position: allowed masks containing it
    cover: int

    @classmethod
    def build(cls, G: Hypergraph, allowed: Iterable[int], k: int, ell: int, n: int) -> "_Problem":
        masks = tuple(G.masks[i] for i in sorted(set(allowed)))
        incident = [[] for _ in range(G.n)]
        cover = 0
        for mask in masks:
            cover |= mask
            rest = mask
            while rest:
                low = rest & -rest
                incident[low.bit_length() - 1].append(mask)
                rest ^= low
        return cls(k, ell, n, masks, tuple(map(tuple, incident)), cover)


def _layout(k: int, ell: int, n: int):
    """Per position: path edges started before it that contain it, and whether
    it lies in the same edges as the previous position."""
    s = k - ell
    count = (n - ell) // s
    containing = []
    for p in range(n):
        lo = max(0, -(-(p - k + 1) // s))
        hi = min(count - 1, p // s)
        containing.append(tuple(range(lo, hi + 1)))
    constraining = [tuple(j for j in containing[p] if j * s < p) for p in range(n)]
    same_prev = [p > 0 and containing[p] == containing[p - 1] for p in range(n)]
    return count, containing, constraining, same_prev


def _embeddings(prob: _Problem, counter: NodeCounter, first: int | None = None) -> Iterator[tuple]:
    """Yield vertex-position orders of all path copies in lexicographic order."""
    k, ell, n = prob.k, prob.ell, prob.n
    count, containing, constraining, same_prev = _layout(k, ell, n)
    incident = prob.incident
    order = [0] * n
    partial_masks = [0] * count

    def candidates(p: int, used: int) -> int:
        if not constraining[p]:
            cand = prob.cover
        else:
            cand = -1
            for j in constraining[p]:
                assigned = partial_masks[j]
                anchor = (assigned & -assigned).bit_length() - 1
                union = 0
                for e in incident[anchor]:
                    if e & assigned == assigned:
                        union |= e
                cand &= union
                if not cand:
                    return 0
        cand &= ~used
        if same_prev[p]:
            cand &= ~((2 << order[p - 1]) - 1)
        return cand

    def place(p: int, used: int):
        if p == n:
            yield tuple(order)
            return
        if (prob.cover & ~used).bit_count() < n - p:
            return
        cand = candidates(p, used)
        if p == 0 and first is not None:
            cand &= 1 << first
        touched = containing[p]
        while cand:
            low = cand & -cand
            cand ^= low
            counter.tick()
            v = low.bit_length() - 1
            order[p] = v
            for j in touched:
                partial_masks[j] |= low
            yield from place(p + 1, used | low)
            for j in touched:
                partial_masks[j] &= ~low

    yield from place(0, 0)


def _first_from_seed(prob: _Problem, seed: int, counter: NodeCounter):
    return next(_embeddings(prob, counter, first=seed), None)


def _seed_worker(prob: _Problem, seed: int, limit, deadline):
    return run_subtree(partial(_first_from_seed, prob), seed, limit, deadline)


def _seeds(prob: _Problem) -> list[int]:
    out, rest = [], prob.cover
    while rest:
        low = rest & -rest
        out.append(low.bit_length() - 1)
        rest ^= low
    return out


def find_ell_path(
    G: Hypergraph,
    k: int,
    ell: int,
    n: int,
    edges: Iterable[int] | None = None,
    budget: int | None = None,
    jobs: int = 1,
    counter: NodeCounter | None = None,
    color: Color | None = None,
) -> PathEmbedding | None:
    """Lexicographically least copy of the l-path on n vertices using only ``edges``.

    ``None`` is a proof that no copy exists.  Raises BudgetExceeded when the
    node budget runs out first.
    """
    check_path_params(k, ell, n)
    if G.k != k:
        raise RamseyError("BAD_PARAMS", f"host is {G.k}-uniform but the target path is {k}-uniform")
    allowed = range(G.m) if edges is None else edges
    prob = _Problem.build(G, allowed, k, ell, n)
    counter = counter if counter is not None else NodeCounter(budget)
    if jobs > 1:
        hit = ordered_first(partial(_seed_worker, prob), _seeds(prob), counter, jobs)
    else:
        hit = next(_embeddings(prob, counter), None)
    if hit is None:
        return None
    order = tuple(G.vertices[p] for p in hit)
    return PathEmbedding(G, EllPath(k, ell, order), color)


def find_mono_ell_path(
    G: Hypergraph,
    coloring: Coloring,
    color: Color,
    k: int,
    ell: int,
    n: int,
    budget: int | None = None,
    jobs: int = 1,
    counter: NodeCounter | None = None,
) -> PathEmbedding | None:
    """Lexicographically least l-path copy all of whose edges have ``color``."""
    if coloring.host != G:
        raise RamseyError("BAD_PARAMS", "coloring belongs to a different host")
    return find_ell_path(
        G, k, ell, n, coloring.indices(color), budget=budget, jobs=jobs, counter=counter, color=color
    )


def enumerate_path_copies(
    G: Hypergraph,
    k: int,
    ell: int,
    n: int,
    edges: Iterable[int] | None = None,
    counter: NodeCounter | None = None,
) -> list[tuple]:
    """Edge-index sets (sorted tuples) of all distinct path copies in G."""
    check_path_params(k, ell, n)
    if G.k != k:
        raise RamseyError("BAD_PARAMS", f"host is {G.k}-uniform but the target path is {k}-uniform")
    allowed = range(G.m) if edges is None else edges
    prob = _Problem.build(G, allowed, k, ell, n)
    counter = counter if counter is not None else NodeCounter()
    s = k - ell
    count = (n - ell) // s
    index = {mask: i for i, mask in enumerate(G.masks)}
    found = set()
    for order in _embeddings(prob, counter):
        ids = []
        for j in range(count):
            mask = 0
            for p in order[j * s : j * s + k]:
                mask |= 1 << p
            ids.append(index[mask])
        found.add(tuple(sorted(ids)))
    return sorted(found)
