"""Naive reference implementations used as test oracles.

Nothing here imports the search code under test: copies are found by trying
every vertex ordering, arrowing by trying every coloring, bounds straight
from the closed forms with integer-only log ceilings.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import permutations, product


def path_edges(order, k, ell):
    s = k - ell
    count = (len(order) - ell) // s
    return [frozenset(order[j * s : j * s + k]) for j in range(count)]


def naive_orders(vertices, edges, k, ell, n):
    """All vertex orderings whose path edges are all in ``edges``, lex order."""
    E = {frozenset(e) for e in edges}
    out = []
    for order in permutations(sorted(vertices), n):
        if all(e in E for e in path_edges(order, k, ell)):
            out.append(order)
    return out


def naive_copies(vertices, edges, k, ell, n):
    """Distinct copies as frozensets of edges."""
    return {frozenset(path_edges(o, k, ell)) for o in naive_orders(vertices, edges, k, ell, n)}


def naive_lex_least(vertices, edges, k, ell, n):
    orders = naive_orders(vertices, edges, k, ell, n)
    return orders[0] if orders else None


def naive_arrows(vertices, edges, k, ell, n):
    """(arrows?, list of good colorings as tuples of 'R'/'B') by full 2^m enumeration."""
    edges = [frozenset(e) for e in edges]
    index = {e: i for i, e in enumerate(edges)}
    copies = [sum(1 << index[e] for e in cp) for cp in naive_copies(vertices, edges, k, ell, n)]
    m = len(edges)
    full = (1 << m) - 1
    good = []
    for red in range(1 << m):
        blue = full ^ red
        if not any(c & red == c or c & blue == c for c in copies):
            good.append(tuple("R" if red >> i & 1 else "B" for i in range(m)))
    return not good, good


def naive_min_w(order, k, ell, alpha):
    edges = path_edges(order, k, ell)
    for size in range(len(order) + 1):
        for bits in product((0, 1), repeat=len(order)):
            if sum(bits) != size:
                continue
            W = {v for v, b in zip(order, bits) if b}
            if all(len(e & W) >= alpha for e in edges):
                return size
    return None


# -- closed forms ------------------------------------------------------------------


def clog2(x: Fraction) -> int:
    """ceil(log2 x) for rational x >= 1 via the integer ceiling of x."""
    return (math.ceil(x) - 1).bit_length()


def c_of(k, ell):
    c = 0
    while (k + c) % (k - ell):
        c += 1
    return c


def ref_trivial(k, ell, n):
    return 2 * Fraction(n - ell, k - ell) - 1


def ref_tight3(n):
    return Fraction(8, 3) * n - Fraction(28, 3)


def ref_tight(k, n):
    return clog2(Fraction(k + 1)) * n - 2 * k**2


def ref_gen_small(k, ell, n):
    return (2 + Fraction(ell, k + c_of(k, ell))) * Fraction(n - ell, k - ell) - 4


def ref_gen_large(k, ell, n):
    return clog2(Fraction(2 * k - ell, k - ell)) * Fraction(n - ell, k - ell) - 4 * k**2


def ref_lambda(k):
    return clog2(Fraction(k + 1)) - 1


def ref_q(i, k):
    return (1 - Fraction(1, 2**i)) * (k + 1)


def ref_counting(k, ell, n, alpha):
    if ell == k - 1:
        return alpha * Fraction(n - k + 1, k)
    return alpha * Fraction(n - ell, k + c_of(k, ell))
