"""Adversarial colorings that force an arrowing host to contain disjoint paths.

Every procedure walks the same state machine.  A stage builds a coloring in
which red copies of the target are (provably, given the thresholds) absent,
then asks the host for a blue copy.  If none exists the coloring is a
non-arrow witness.  Otherwise the blue copy is carved into edge sets that are
disjoint from everything extracted before, and the next stage starts.  The
extracted sets form a ``LowerBound`` certificate.

Runs outside the theorems' hypotheses (``strict=False``) are allowed; their
certificates are marked unsound and proof violations become warnings.
"""

from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from ._search import NodeCounter
from .bounds import ceil_log2, lambda_of, q_of, smallest_c, thm_gen_small_bound, thm_tight3_bound
from .certificate import (
    LOWER_BOUND,
    NON_ARROW,
    UNKNOWN,
    AuditLog,
    Certificate,
    ExtractedSet,
)
from .errors import BudgetExceeded, ProofViolation, RamseyError
from .hypergraph import Color, Coloring, Hypergraph, EdgeSet, q_neighborhood
from .paths import PathEmbedding, check_path_params, find_ell_path, is_valid_path_size, subpath

log = logging.getLogger(__name__)

TIGHT_ITERATIVE = "tight-iterative"
THREE_PATH = "three-path"
GENERAL_SMALL_ELL = "general-small-ell"
PROCEDURES = (TIGHT_ITERATIVE, THREE_PATH, GENERAL_SMALL_ELL)


@dataclass(frozen=True)
class AdversaryConfig:
    procedure: str
    k: int
    ell: int
    n: int
    budget: int | None = None  # search nodes for the whole run
    strict: bool = True
    jobs: int = 1
    verify_budget: int = 400  # red-path audits run only on hosts with at most this many edges
    claim_exhaustive_edges: int = 200
    claim_samples: int = 20000
    observation_shortcut: bool = True
    rescue_max_edges: int = 30

    def validate(self) -> None:
        k, ell, n = self.k, self.ell, self.n
        if self.procedure not in PROCEDURES:
            raise RamseyError("BAD_CONFIG", f"unknown procedure {self.procedure!r}")
        check_path_params(k, ell, n)
        if self.procedure == TIGHT_ITERATIVE and not (k >= 4 and ell == k - 1):
            raise RamseyError("BAD_CONFIG", f"{TIGHT_ITERATIVE} needs k >= 4 and ell = k-1, got k={k}, ell={ell}")
        if self.procedure == THREE_PATH and not (k == 3 and ell == 2):
            raise RamseyError("BAD_CONFIG", f"{THREE_PATH} needs k = 3 and ell = 2, got k={k}, ell={ell}")
        if self.procedure == GENERAL_SMALL_ELL and 3 * ell > 2 * k:
            raise RamseyError("BAD_PARAMS", f"{GENERAL_SMALL_ELL} needs ell <= 2k/3, got k={k}, ell={ell}")


# -- building blocks -----------------------------------------------------------


def _halves(P: PathEmbedding) -> tuple[PathEmbedding, PathEmbedding]:
    k, n = P.path.k, P.path.n
    if P.path.ell != k - 1:
        raise RamseyError("BAD_PARAMS", "halving is defined for tight paths")
    if n < 2 * k:
        raise RamseyError("PATH_TOO_SHORT", f"a tight path on {n} < 2k = {2 * k} vertices has an edgeless half")
    half = n // 2
    return subpath(P, 1, half), subpath(P, n - half + 1, n)


def split_into_halves(P: PathEmbedding) -> tuple[EdgeSet, EdgeSet]:
    """Edge sets of the tight paths induced by the first and last floor(n/2) vertices."""
    first, second = _halves(P)
    return frozenset(first.edge_indices()), frozenset(second.edge_indices())


def neighborhood_coloring(G: Hypergraph, Zsets: Iterable[Iterable[int]], q) -> Coloring:
    """Red on the union of the q-neighborhoods of the given edge sets, blue elsewhere."""
    red: set[int] = set()
    for Z in Zsets:
        red |= q_neighborhood(G, Z, q)
    return Coloring.from_red(G, red)


def observation_coloring(G: Hypergraph, k: int, ell: int, n: int) -> Coloring | None:
    """Witness for hosts with fewer edges than the trivial bound, else None.

    With at most 2e(P) - 2 edges, giving e(P) - 1 edges one color and the rest
    the other leaves both color classes too small for a copy of P.
    """
    need = check_path_params(k, ell, n)
    if G.m > 2 * need - 2:
        return None
    return Coloring.from_red(G, range(min(G.m, need - 1)))


def _set_of(name: str, P: PathEmbedding) -> ExtractedSet:
    return ExtractedSet(name, P.path.n, P.path.edges)


def _largest_valid_size(k: int, ell: int, bound: int) -> int:
    size = bound
    while size >= k and not is_valid_path_size(k, ell, size):
        size -= 1
    return size


class _Run:
    """Shared state for one adversary run: counter, audit log and cert factory."""

    def __init__(self, G: Hypergraph, cfg: AdversaryConfig, sound: bool, paper_bound: Fraction):
        self.G = G
        self.cfg = cfg
        self.k, self.ell, self.n = cfg.k, cfg.ell, cfg.n
        self.sound = sound
        self.paper_bound = paper_bound
        self.counter = NodeCounter(cfg.budget)
        self.audit = AuditLog()
        self.notes: list[str] = []

    def cert(self, variant: str, **kw) -> Certificate:
        cert = Certificate(
            variant,
            self.k,
            self.ell,
            self.n,
            procedure=self.cfg.procedure,
            paper_bound=self.paper_bound,
            sound=self.sound,
            notes=list(self.notes),
            **kw,
        )
        cert.audit = self.audit
        return cert

    def non_arrow(self, coloring: Coloring, why: str) -> Certificate:
        self.notes.append(f"witness: {why}")
        return self.cert(NON_ARROW, coloring=coloring.colors)

    def lower_bound(self, sets: list[ExtractedSet]) -> Certificate:
        return self.cert(LOWER_BOUND, sets=sets, total=sum(s.size for s in sets))

    def path(self, coloring: Coloring, color: Color, n: int | None = None) -> PathEmbedding | None:
        return find_ell_path(
            self.G,
            self.k,
            self.ell,
            self.n if n is None else n,
            coloring.indices(color),
            jobs=self.cfg.jobs,
            counter=self.counter,
            color=color,
        )

    def violation(self, message: str, dump: str = "") -> None:
        if self.cfg.strict:
            raise ProofViolation(message, dump)
        log.warning("%s %s", message, dump)
        self.audit.warnings.append(f"{message} {dump}".strip())

    def avoid(self, P: PathEmbedding, red: EdgeSet, stage: str) -> None:
        hit = set(P.edge_indices()) & red
        if hit:
            msg = f"{stage}: accepted blue path uses {len(hit)} red edges"
            self.audit.avoidance_violations.append(msg)
            self.violation(msg)

    def red_path_if_audited(self, coloring: Coloring, force: bool) -> PathEmbedding | None:
        if not force and self.G.m > self.cfg.verify_budget:
            return None
        return self.path(coloring, Color.RED)

    def stalled(self, coloring: Coloring, red_path: PathEmbedding, stage: str, partial: list[ExtractedSet]) -> Certificate:
        """No blue copy, but a red one: this coloring is no witness.  Fall back to
        an exhaustive arrowing search, or the sets extracted so far."""
        self.notes.append(f"{stage}: no blue copy but a red copy exists; coloring is not a witness")
        if self.G.m <= self.cfg.rescue_max_edges:
            from .ramsey import DOES_NOT_ARROW, arrows

            res = arrows(self.G, (self.k, self.ell, self.n), budget=self.counter.remaining(), jobs=self.cfg.jobs)
            if res.verdict == DOES_NOT_ARROW:
                return self.non_arrow(res.witness, "exhaustive arrowing search after the stall")
            if res.arrows:
                self.notes.append("exhaustive search: host arrows the target")
        return self.lower_bound(partial)


# -- iterative halving (tight paths, k >= 4) -------------------------------------


def _claim_audit(run: _Run, neighborhoods: list[tuple[str, EdgeSet]], i: int) -> None:
    G, bound = run.G, run.k - 1
    masks = G.masks
    pairs = list(combinations(neighborhoods, 2))
    if G.m <= run.cfg.claim_exhaustive_edges:
        for (la, Na), (lb, Nb) in pairs:
            for e1 in Na:
                for e2 in Nb:
                    run.audit.claim_pairs_checked += 1
                    if (masks[e1] & masks[e2]).bit_count() >= bound:
                        _claim_violation(run, i, la, lb, e1, e2)
        return
    rng = random.Random(i)
    for _ in range(run.cfg.claim_samples if pairs else 0):
        (la, Na), (lb, Nb) = pairs[rng.randrange(len(pairs))]
        if not Na or not Nb:
            continue
        e1, e2 = rng.choice(sorted(Na)), rng.choice(sorted(Nb))
        run.audit.claim_pairs_checked += 1
        if (masks[e1] & masks[e2]).bit_count() >= bound:
            _claim_violation(run, i, la, lb, e1, e2)


def _claim_violation(run: _Run, i: int, la: str, lb: str, e1: int, e2: int) -> None:
    msg = f"iteration {i}: edges {run.G.edges[e1]} in N({la}) and {run.G.edges[e2]} in N({lb}) share >= {run.k - 1} vertices"
    run.audit.claim_violations.append(msg)
    run.violation(msg)


def _proposition_check(run: _Run, red: PathEmbedding, neighborhoods: list[tuple[str, EdgeSet]], stage: str) -> None:
    """A red copy found outside the theorem's range must sit in one neighborhood,
    and the path length must be what breaks the counting argument."""
    ids = set(red.edge_indices())
    inside = [label for label, N in neighborhoods if ids <= N]
    k, n = run.k, run.n
    msg = f"{stage}: red copy on {list(red.path.order)}"
    run.audit.red_paths.append(msg)
    if not inside:
        run.audit.claim_violations.append(f"{msg} spans several neighborhoods")
    if 2 * n > k * k + k - 2:
        run.violation(f"{msg} although n > (k^2+k-2)/2", dump=str(red.path.order))
    else:
        run.audit.warnings.append(f"{msg} inside N({inside[0] if inside else '?'}); expected since n <= (k^2+k-2)/2")


def run_tight_iterative(G: Hypergraph, n: int, k: int, cfg: AdversaryConfig | None = None) -> Certificate:
    cfg = cfg or AdversaryConfig(TIGHT_ITERATIVE, k, k - 1, n)
    if (cfg.procedure, cfg.k, cfg.ell, cfg.n) != (TIGHT_ITERATIVE, k, k - 1, n):
        raise RamseyError("BAD_CONFIG", "configuration does not match the requested run")
    cfg.validate()
    if G.k != k:
        raise RamseyError("BAD_PARAMS", f"host is {G.k}-uniform, target is {k}-uniform")
    sound = 2 * n > k * k + k - 2
    if cfg.strict and not sound:
        raise RamseyError("PRECONDITION", f"strict mode needs n > (k^2+k-2)/2 = {Fraction(k * k + k - 2, 2)}, got n={n}")
    if n < 2 * k:
        raise RamseyError("PATH_TOO_SHORT", f"halving needs n >= 2k = {2 * k}, got n={n}")

    lam = lambda_of(k)
    run = _Run(G, cfg, sound, Fraction(ceil_log2(k + 1) * n - 2 * k * k))
    run.notes.append(f"stated chain lambda(n-2k-1)+(n-k+1) = {lam * (n - 2 * k - 1) + n - k + 1}")
    run.notes.append(f"sharp chain lambda(n-2k+1)+(n-k+1) = {lam * (n - 2 * k + 1) + n - k + 1}")
    try:
        witness = observation_coloring(G, k, k - 1, n) if cfg.observation_shortcut else None
        if witness is not None:
            return run.non_arrow(witness, "fewer edges than the trivial bound")

        all_blue = Coloring.uniform(G, Color.BLUE)
        P = run.path(all_blue, Color.BLUE)
        if P is None:
            return run.non_arrow(all_blue, "stage 0: the host has no copy of the target")

        Z: list[tuple[str, PathEmbedding]] = []
        for i in range(1, lam + 1):
            first, second = _halves(P)
            c1, c2 = set(first.path.order), set(second.path.order)
            if c1 & c2:
                msg = f"iteration {i}: halves share vertices {sorted(c1 & c2)}"
                run.audit.cover_violations.append(msg)
                run.violation(msg)
            Z += [(f"Z1_{i}", first), (f"Z2_{i}", second)]

            q = q_of(i, k)
            hoods = [(label, q_neighborhood(G, emb.edge_indices(), q)) for label, emb in Z]
            red = frozenset().union(*(N for _, N in hoods))
            coloring = Coloring.from_red(G, red)
            _claim_audit(run, hoods, i)

            nxt = run.path(coloring, Color.BLUE)
            red_path = run.red_path_if_audited(coloring, force=nxt is None)
            if red_path is not None:
                _proposition_check(run, red_path, hoods, f"iteration {i}")
            if nxt is None:
                if red_path is None:
                    return run.non_arrow(coloring, f"iteration {i}: red on N_>q({i}) of all halves")
                partial = [ExtractedSet(lbl, emb.path.n, emb.path.edges) for lbl, emb in Z[:-2]]
                return run.stalled(coloring, red_path, f"iteration {i}", partial + [_set_of(f"P_{i - 1}", P)])
            run.avoid(nxt, red, f"iteration {i}")
            P = nxt

        sets = [ExtractedSet(lbl, emb.path.n, emb.path.edges) for lbl, emb in Z]
        sets.append(_set_of(f"P_{lam}", P))
        return run.lower_bound(sets)
    except BudgetExceeded:
        run.notes.append(f"budget exhausted after {run.counter.nodes} nodes")
        return run.cert(UNKNOWN)


# -- three edge-disjoint paths (k = 3 tight, and ell <= 2k/3) ------------------------


def _run_three_stage(run: _Run, n0: int, n1: int) -> Certificate:
    G, k, ell, n = run.G, run.k, run.ell, run.n
    try:
        witness = observation_coloring(G, k, ell, n) if run.cfg.observation_shortcut else None
        if witness is not None:
            return run.non_arrow(witness, "fewer edges than the trivial bound")

        all_blue = Coloring.uniform(G, Color.BLUE)
        P_init = run.path(all_blue, Color.BLUE)
        if P_init is None:
            return run.non_arrow(all_blue, "stage 0: the host has no copy of the target")
        P0 = subpath(P_init, 1, n0)

        red1 = q_neighborhood(G, P0.edge_indices(), ell - 1)
        col1 = Coloring.from_red(G, red1)
        B1 = run.path(col1, Color.BLUE)
        red_path = run.red_path_if_audited(col1, force=B1 is None)
        if red_path is not None:
            _red_found(run, red_path, "stage 1")
        if B1 is None:
            if red_path is None:
                return run.non_arrow(col1, f"stage 1: red on N_>{ell - 1}(E(P0))")
            return run.stalled(col1, red_path, "stage 1", [_set_of("P_init", P_init)])
        run.avoid(B1, red1, "stage 1")
        P1 = subpath(B1, 1, n1)

        red2 = frozenset(P0.edge_indices()) | frozenset(P1.edge_indices())
        col2 = Coloring.from_red(G, red2)
        P2 = run.path(col2, Color.BLUE)
        red_path = run.red_path_if_audited(col2, force=P2 is None)
        if red_path is not None:
            _red_found(run, red_path, "stage 2")
        if P2 is None:
            if red_path is None:
                return run.non_arrow(col2, "stage 2: red on E(P0) and E(P1)")
            return run.stalled(col2, red_path, "stage 2", [_set_of("P0", P0), _set_of("P1_full", B1)])
        run.avoid(P2, red2, "stage 2")
        return run.lower_bound([_set_of("P0", P0), _set_of("P1", P1), _set_of("P2", P2)])
    except BudgetExceeded:
        run.notes.append(f"budget exhausted after {run.counter.nodes} nodes")
        return run.cert(UNKNOWN)


def _red_found(run: _Run, red: PathEmbedding, stage: str) -> None:
    msg = f"{stage}: red copy on {list(red.path.order)}"
    run.audit.red_paths.append(msg)
    if run.sound:
        run.violation(msg, dump=str(red.path.order))
    else:
        run.audit.warnings.append(f"{msg}; expected outside the theorem's range")


def three_path_sizes(n: int) -> tuple[int, int]:
    """(n0, n1) for 3-uniform tight paths: n0 = ceil(2n/3 - 4/3) - 1, n1 = n - 1."""
    return math.ceil(Fraction(2 * n - 4, 3)) - 1, n - 1


def general_small_sizes(k: int, ell: int, n: int) -> tuple[int, int, int]:
    """(unsnapped n0, snapped n0, snapped n1) for the three-path construction on l-paths.

    Sizes are snapped down to the nearest valid l-path size, and never below k.
    """
    c = smallest_c(k, ell)
    n0 = math.ceil(Fraction(ell * (n - ell), k + c)) - 1
    s0 = max(_largest_valid_size(k, ell, n0), k)
    s1 = max(_largest_valid_size(k, ell, n - 1), k)
    return n0, s0, s1


def run_three_path(G: Hypergraph, n: int, cfg: AdversaryConfig | None = None) -> Certificate:
    cfg = cfg or AdversaryConfig(THREE_PATH, 3, 2, n)
    if (cfg.procedure, cfg.k, cfg.ell, cfg.n) != (THREE_PATH, 3, 2, n):
        raise RamseyError("BAD_CONFIG", "configuration does not match the requested run")
    cfg.validate()
    if G.k != 3:
        raise RamseyError("BAD_PARAMS", f"host is {G.k}-uniform, target is 3-uniform")
    sound = n >= 7
    if cfg.strict and not sound:
        raise RamseyError("PRECONDITION", f"strict mode needs n >= 7, got n={n}")
    n0, n1 = three_path_sizes(n)
    run = _Run(G, cfg, sound, thm_tight3_bound(n) if n >= 7 else Fraction(8 * n - 28, 3))
    if n0 < 3:
        run.notes.append(f"n0 = {n0} raised to 3")
        n0 = 3
    run.notes.append(f"sizes n0={n0} n1={n1} n2={n}")
    return _run_three_stage(run, n0, n1)


def run_general_small_ell(G: Hypergraph, k: int, ell: int, n: int, cfg: AdversaryConfig | None = None) -> Certificate:
    cfg = cfg or AdversaryConfig(GENERAL_SMALL_ELL, k, ell, n)
    if (cfg.procedure, cfg.k, cfg.ell, cfg.n) != (GENERAL_SMALL_ELL, k, ell, n):
        raise RamseyError("BAD_CONFIG", "configuration does not match the requested run")
    cfg.validate()
    if G.k != k:
        raise RamseyError("BAD_PARAMS", f"host is {G.k}-uniform, target is {k}-uniform")
    raw_n0, n0, n1 = general_small_sizes(k, ell, n)
    sound = raw_n0 >= k
    if cfg.strict and not sound:
        raise RamseyError("PRECONDITION", f"strict mode needs n0 = {raw_n0} >= k = {k}; n is too small")
    run = _Run(G, cfg, sound, thm_gen_small_bound(k, ell, n))
    run.notes.append(f"sizes n0={n0} (unsnapped {raw_n0}) n1={n1} n2={n} c={smallest_c(k, ell)}")
    return _run_three_stage(run, n0, n1)


def certify(G: Hypergraph, cfg: AdversaryConfig) -> Certificate:
    """Dispatch on ``cfg.procedure``."""
    cfg.validate()
    if cfg.procedure == TIGHT_ITERATIVE:
        return run_tight_iterative(G, cfg.n, cfg.k, cfg)
    if cfg.procedure == THREE_PATH:
        return run_three_path(G, cfg.n, cfg)
    return run_general_small_ell(G, cfg.k, cfg.ell, cfg.n, cfg)
