"""k-uniform hypergraphs, covered sets, induced subgraphs and q-neighborhoods.

Edges are sorted tuples of vertex ids.  Inside a :class:`Hypergraph` every edge
also has a bitmask over the *positions* of its vertices in the sorted vertex
tuple, so intersection sizes are popcounts.  Edge sets relative to a host are
frozensets of edge indices into ``host.edges``.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import RamseyError

Edge = tuple  # strictly increasing tuple of vertex ids
EdgeSet = frozenset  # of edge indices into a fixed host
VertexSet = frozenset

CANON_MAX_VERTICES = 16


class Hypergraph:
    """An immutable k-uniform hypergraph with lexicographically ordered edges."""

    __slots__ = ("k", "vertices", "edges", "_pos", "_masks", "_index")

    def __init__(self, k: int, vertices: Sequence[int], edges: Sequence[Edge]):
        # Trusts its input; use make_hypergraph() for validation.
        self.k = k
        self.vertices = tuple(vertices)
        self.edges = tuple(edges)
        self._pos = {v: i for i, v in enumerate(self.vertices)}
        self._masks = tuple(self.mask_of(e) for e in self.edges)
        self._index = {e: i for i, e in enumerate(self.edges)}

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def masks(self) -> tuple[int, ...]:
        return self._masks

    def position(self, v: int) -> int:
        return self._pos[v]

    def mask_of(self, vertices: Iterable[int]) -> int:
        mask = 0
        for v in vertices:
            mask |= 1 << self._pos[v]
        return mask

    def vertices_of(self, mask: int) -> tuple[int, ...]:
        out = []
        while mask:
            low = mask & -mask
            out.append(self.vertices[low.bit_length() - 1])
            mask ^= low
        return tuple(out)

    def index_of(self, edge: Iterable[int]) -> int:
        """Index of ``edge`` in the host, or KeyError if it is not a host edge."""
        return self._index[tuple(sorted(edge))]

    def has_edge(self, edge: Iterable[int]) -> bool:
        return tuple(sorted(edge)) in self._index

    def cover(self, indices: Iterable[int]) -> VertexSet:
        return cover(self.edges[i] for i in indices)

    def degree(self, v: int) -> int:
        bit = 1 << self._pos[v]
        return sum(1 for mask in self._masks if mask & bit)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.k, self.vertices, self.edges) == (other.k, other.vertices, other.edges)

    def __hash__(self) -> int:
        return hash((self.k, self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"Hypergraph(k={self.k}, n={self.n}, m={self.m})"


def make_hypergraph(k: int, vertices: Iterable[int], edges: Iterable[Iterable[int]]) -> Hypergraph:
    """Validate and canonically order a k-uniform hypergraph.

    Raises RamseyError with code NON_UNIFORM, UNKNOWN_VERTEX or DUPLICATE_EDGE.
    """
    if k < 2:
        raise RamseyError("BAD_PARAMS", f"uniformity must be >= 2, got {k}")
    vset = set(vertices)
    if any(v < 0 for v in vset):
        raise RamseyError("UNKNOWN_VERTEX", "vertex ids must be non-negative integers")
    seen = set()
    for raw in edges:
        raw = list(raw)
        e = tuple(sorted(set(raw)))
        if len(raw) != k or len(e) != k:
            raise RamseyError("NON_UNIFORM", f"edge {raw} does not have {k} distinct vertices")
        missing = [v for v in e if v not in vset]
        if missing:
            raise RamseyError("UNKNOWN_VERTEX", f"edge {raw} uses vertices {missing} outside the vertex set")
        if e in seen:
            raise RamseyError("DUPLICATE_EDGE", f"edge {raw} listed twice")
        seen.add(e)
    return Hypergraph(k, sorted(vset), sorted(seen))


def cover(edges: Iterable[Iterable[int]]) -> VertexSet:
    """Union of the vertices of ``edges``."""
    out: set[int] = set()
    for e in edges:
        out.update(e)
    return frozenset(out)


def induced_subgraph(G: Hypergraph, W: Iterable[int]) -> Hypergraph:
    W = frozenset(W)
    unknown = W - set(G.vertices)
    if unknown:
        raise RamseyError("UNKNOWN_VERTEX", f"vertices {sorted(unknown)} not in host")
    wmask = G.mask_of(W)
    kept = [e for e, mask in zip(G.edges, G.masks) if mask & wmask == mask]
    return Hypergraph(G.k, sorted(W), kept)


def as_rational(q) -> Fraction:
    """Coerce an int, Fraction or (num, den) pair to a Fraction; floats are refused."""
    if isinstance(q, bool):
        raise TypeError("q must be rational, not bool")
    if isinstance(q, (int, Fraction)):
        return Fraction(q)
    if isinstance(q, tuple) and len(q) == 2:
        return Fraction(q[0], q[1])
    raise TypeError(f"q must be an exact rational (int, Fraction or pair), got {type(q).__name__}")


def overlap_threshold(q, k: int) -> int:
    """Smallest intersection size that is strictly greater than ``q``."""
    q = as_rational(q)
    if q < 0 or q >= k:
        raise RamseyError("Q_OUT_OF_RANGE", f"need 0 <= q < {k}, got {q}")
    return q.numerator // q.denominator + 1


def q_neighborhood(G: Hypergraph, Z: Iterable[int], q) -> EdgeSet:
    """Indices of host edges meeting some edge of ``Z`` in more than ``q`` vertices."""
    t = overlap_threshold(q, G.k)
    zmasks = [G.masks[i] for i in Z]
    masks = G.masks
    return frozenset(
        i for i, mask in enumerate(masks) if any((mask & z).bit_count() >= t for z in zmasks)
    )


# -- canonical codes ---------------------------------------------------------


def canonical_code(G: Hypergraph) -> bytes:
    """Isomorphism-invariant byte string: equal codes iff isomorphic hypergraphs.

    Each connected component is canonicalized separately by exhaustive
    individualization/refinement over vertex relabelings (keeping the
    lexicographically least relabeled edge list); twin vertices are branched
    on once.  The sorted component forms are then concatenated.
    """
    if G.n > CANON_MAX_VERTICES:
        raise RamseyError("TOO_LARGE", f"canonical_code supports at most {CANON_MAX_VERTICES} vertices, got {G.n}")
    forms = sorted(_component_form(verts, edges) for verts, edges in _components(G))
    parts = [G.k, G.n, len(forms)]
    for nv, edges in forms:
        parts.append(nv)
        parts.append(len(edges))
        for e in edges:
            parts.extend(e)
    return ",".join(map(str, parts)).encode("ascii")


def are_isomorphic(G: Hypergraph, H: Hypergraph) -> bool:
    return G.k == H.k and G.m == H.m and G.n == H.n and canonical_code(G) == canonical_code(H)


def _components(G: Hypergraph):
    """Yield (local vertex count, local edge tuples) per connected component."""
    parent = list(range(G.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pos_edges = [tuple(G.position(v) for v in e) for e in G.edges]
    for e in pos_edges:
        r = find(e[0])
        for v in e[1:]:
            parent[find(v)] = r
    groups: dict[int, list[int]] = {}
    for v in range(G.n):
        groups.setdefault(find(v), []).append(v)
    edge_groups: dict[int, list[tuple]] = {}
    for e in pos_edges:
        edge_groups.setdefault(find(e[0]), []).append(e)
    for root, verts in groups.items():
        local = {v: i for i, v in enumerate(verts)}
        edges = [tuple(local[v] for v in e) for e in edge_groups.get(root, [])]
        yield len(verts), edges


def _refine(colors: list[int], incidence: list[list[tuple]]) -> list[int]:
    """Color refinement on vertices; colors are ranks of invariant signatures."""
    ncolors = len(set(colors))
    while True:
        sigs = [
            (colors[v], tuple(sorted(tuple(sorted(colors[u] for u in e if u != v)) for e in incidence[v])))
            for v in range(len(colors))
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [rank[s] for s in sigs]
        if len(rank) == ncolors:
            return colors
        ncolors = len(rank)


def _twin_classes(nv: int, edges: list[tuple]) -> list[int]:
    """Representative of each vertex's class under automorphic transpositions."""
    eset = {tuple(sorted(e)) for e in edges}
    rep = list(range(nv))
    for u in range(nv):
        if rep[u] != u:
            continue
        for v in range(u + 1, nv):
            if rep[v] != v:
                continue
            swap = {u: v, v: u}
            if all(tuple(sorted(swap.get(x, x) for x in e)) in eset for e in eset):
                rep[v] = u
    return rep


def _component_form(nv: int, edges: list[tuple]):
    incidence: list[list[tuple]] = [[] for _ in range(nv)]
    for e in edges:
        for v in e:
            incidence[v].append(e)
    twins = _twin_classes(nv, edges)
    best = None

    def search(colors):
        nonlocal best
        colors = _refine(colors, incidence)
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min((c for c, cnt in counts.items() if cnt > 1), default=None)
        if target is None:
            form = tuple(sorted(tuple(sorted(colors[v] for v in e)) for e in edges))
            if best is None or form < best:
                best = form
            return
        tried = set()
        for v in range(nv):
            if colors[v] != target or twins[v] in tried:
                continue
            tried.add(twins[v])
            search([2 * c if u == v else 2 * c + 1 for u, c in enumerate(colors)])

    search([0] * nv)
    return nv, best


# -- colorings ----------------------------------------------------------------


class Color(enum.Enum):
    RED = "R"
    BLUE = "B"

    @property
    def other(self) -> "Color":
        return Color.BLUE if self is Color.RED else Color.RED


class Coloring:
    """A total red/blue assignment on a host's edges, indexed like ``host.edges``."""

    __slots__ = ("host", "colors")

    def __init__(self, host: Hypergraph, colors: Sequence[Color]):
        colors = tuple(colors)
        if len(colors) != host.m or not all(isinstance(c, Color) for c in colors):
            raise RamseyError("NOT_TOTAL", f"coloring must assign a Color to each of the {host.m} edges")
        self.host = host
        self.colors = colors

    @classmethod
    def uniform(cls, host: Hypergraph, color: Color) -> "Coloring":
        return cls(host, [color] * host.m)

    @classmethod
    def from_red(cls, host: Hypergraph, red: Iterable[int]) -> "Coloring":
        red = set(red)
        return cls(host, [Color.RED if i in red else Color.BLUE for i in range(host.m)])

    def __getitem__(self, i: int) -> Color:
        return self.colors[i]

    def indices(self, color: Color) -> EdgeSet:
        return frozenset(i for i, c in enumerate(self.colors) if c is color)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Coloring):
            return NotImplemented
        return self.host == other.host and self.colors == other.colors

    def __hash__(self) -> int:
        return hash(self.colors)

    def __repr__(self) -> str:
        return "Coloring(" + "".join(c.value for c in self.colors) + ")"


# -- text format --------------------------------------------------------------


def _content_lines(text: str):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse ``k n m`` followed by m edge lines; ``#`` starts a comment.

    Vertex ids already inside ``0..n-1`` are kept; any other ids are remapped
    to ``0..`` in increasing order.
    """
    lines = list(_content_lines(text))
    if not lines:
        raise RamseyError("BAD_FORMAT", "empty hypergraph file")
    try:
        k, n, m = (int(x) for x in lines[0].split())
        rows = [[int(x) for x in line.split()] for line in lines[1:]]
    except ValueError as exc:
        raise RamseyError("BAD_FORMAT", f"malformed hypergraph file: {exc}") from None
    if len(rows) != m:
        raise RamseyError("BAD_FORMAT", f"header announces {m} edges, found {len(rows)}")
    ids = sorted({v for row in rows for v in row})
    if any(v < 0 or v >= n for v in ids):
        if len(ids) > n:
            raise RamseyError("BAD_FORMAT", f"{len(ids)} distinct vertex ids but header says n={n}")
        remap = {v: i for i, v in enumerate(ids)}
        rows = [[remap[v] for v in row] for row in rows]
    return make_hypergraph(k, range(n), rows)


def format_hypergraph(G: Hypergraph) -> str:
    lines = [f"{G.k} {G.n} {G.m}"]
    lines.extend(" ".join(map(str, e)) for e in G.edges)
    return "\n".join(lines) + "\n"


def all_k_subsets(vertices: Iterable[int], k: int) -> list[Edge]:
    return list(combinations(sorted(vertices), k))
