"""Adversary certificates: data model, text format and an independent verifier.

Text format::

    CERT v1 <NonArrow|LowerBound|Unknown> k=<k> l=<ell> n=<n>
    # procedure <name>
    # <free-form notes>
    <NonArrow body: one "edge-index R|B" line per host edge>
    <LowerBound body: per set, "SET <name> <path-n> <size>" then its edges>
    TOTAL <int> PAPER_BOUND <rational> SOUND <yes|no>
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import BudgetExceeded, RamseyError
from .hypergraph import Color, Coloring, Hypergraph
from .paths import check_path_params, find_ell_path, find_mono_ell_path, is_valid_path_size

NON_ARROW = "NonArrow"
LOWER_BOUND = "LowerBound"
UNKNOWN = "Unknown"
VARIANTS = (NON_ARROW, LOWER_BOUND, UNKNOWN)


@dataclass(frozen=True)
class ExtractedSet:
    """An edge set claimed to form an l-path on ``path_n`` vertices."""

    name: str
    path_n: int
    edges: tuple  # vertex tuples, in path order when produced by the adversary

    @property
    def size(self) -> int:
        return len(self.edges)


@dataclass
class AuditLog:
    """Runtime checks of the invariants the lower-bound argument relies on."""

    claim_pairs_checked: int = 0
    claim_violations: list = field(default_factory=list)
    cover_violations: list = field(default_factory=list)
    avoidance_violations: list = field(default_factory=list)
    red_paths: list = field(default_factory=list)
    warnings: list = field(default_factory=list)

    @property
    def violations(self) -> list:
        return self.claim_violations + self.cover_violations + self.avoidance_violations


@dataclass
class Certificate:
    variant: str
    k: int
    ell: int
    n: int
    procedure: str = ""
    coloring: tuple | None = None  # Colors indexed like host.edges
    sets: list = field(default_factory=list)
    total: int = 0
    paper_bound: Fraction = Fraction(0)
    sound: bool = False
    notes: list = field(default_factory=list)
    audit: AuditLog = field(default_factory=AuditLog, compare=False, repr=False)

    @property
    def target(self) -> tuple:
        return (self.k, self.ell, self.n)


def _rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_certificate(cert: Certificate) -> str:
    lines = [f"CERT v1 {cert.variant} k={cert.k} l={cert.ell} n={cert.n}"]
    if cert.procedure:
        lines.append(f"# procedure {cert.procedure}")
    lines.extend(f"# {note}" for note in cert.notes)
    if cert.variant == NON_ARROW:
        lines.extend(f"{i} {c.value}" for i, c in enumerate(cert.coloring))
    elif cert.variant == LOWER_BOUND:
        for s in cert.sets:
            lines.append(f"SET {s.name} {s.path_n} {s.size}")
            lines.extend(" ".join(map(str, e)) for e in s.edges)
    lines.append(f"TOTAL {cert.total} PAPER_BOUND {_rational(cert.paper_bound)} SOUND {'yes' if cert.sound else 'no'}")
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> Certificate:
    lines = [line.rstrip() for line in text.splitlines() if line.strip()]
    if len(lines) < 2:
        raise RamseyError("BAD_FORMAT", "certificate needs a header and a footer")
    head = lines[0].split()
    try:
        if len(head) != 6 or head[:2] != ["CERT", "v1"] or head[2] not in VARIANTS:
            raise ValueError(lines[0])
        if not (head[3].startswith("k=") and head[4].startswith("l=") and head[5].startswith("n=")):
            raise ValueError(lines[0])
        k, ell, n = (int(tok[2:]) for tok in head[3:])
    except ValueError as exc:
        raise RamseyError("BAD_FORMAT", f"bad certificate header: {exc}") from None
    cert = Certificate(head[2], k, ell, n)

    foot = lines[-1].split()
    if len(foot) != 6 or foot[0] != "TOTAL" or foot[2] != "PAPER_BOUND" or foot[4] != "SOUND" or foot[5] not in ("yes", "no"):
        raise RamseyError("BAD_FORMAT", f"bad certificate footer: {lines[-1]!r}")
    try:
        cert.total = int(foot[1])
        cert.paper_bound = Fraction(foot[3])
    except ValueError as exc:
        raise RamseyError("BAD_FORMAT", f"bad certificate footer: {exc}") from None
    cert.sound = foot[5] == "yes"

    body = []
    for line in lines[1:-1]:
        if line.startswith("#"):
            comment = line[1:].strip()
            if comment.startswith("procedure ") and not cert.procedure and not cert.notes:
                cert.procedure = comment.split(None, 1)[1]
            else:
                cert.notes.append(comment)
        else:
            body.append(line.split())
    try:
        if cert.variant == NON_ARROW:
            colors = []
            for i, row in enumerate(body):
                if len(row) != 2 or int(row[0]) != i or row[1] not in ("R", "B"):
                    raise ValueError(f"coloring line {' '.join(row)!r}")
                colors.append(Color(row[1]))
            cert.coloring = tuple(colors)
        elif cert.variant == LOWER_BOUND:
            i = 0
            while i < len(body):
                row = body[i]
                if len(row) != 4 or row[0] != "SET":
                    raise ValueError(f"expected SET line, got {' '.join(row)!r}")
                size = int(row[3])
                edges = tuple(tuple(int(v) for v in r) for r in body[i + 1 : i + 1 + size])
                if len(edges) != size:
                    raise ValueError(f"set {row[1]} is truncated")
                cert.sets.append(ExtractedSet(row[1], int(row[2]), edges))
                i += 1 + size
        elif body:
            raise ValueError("Unknown certificates carry no body")
    except ValueError as exc:
        raise RamseyError("BAD_FORMAT", str(exc)) from None
    return cert


# -- verification -------------------------------------------------------------


@dataclass(frozen=True)
class Check:
    code: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        text = f"{'PASS' if self.ok else 'FAIL'} {self.code}"
        return f"{text}: {self.detail}" if self.detail else text


@dataclass
class VerificationReport:
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return bool(self.checks) and all(c.ok for c in self.checks)

    def failed(self) -> list:
        return [c for c in self.checks if not c.ok]

    def add(self, code: str, ok: bool, detail: str = "") -> None:
        self.checks.append(Check(code, ok, detail))

    def text(self) -> str:
        status = "VERIFIED" if self.ok else "REJECTED"
        return "\n".join([c.line() for c in self.checks] + [status]) + "\n"


def verify_certificate(G: Hypergraph, cert: Certificate, target, budget: int | None = None) -> VerificationReport:
    """Re-check everything a certificate asserts against the host from scratch."""
    rep = VerificationReport()
    k, ell, n = target
    same = cert.target == (k, ell, n) and G.k == k
    rep.add("TARGET", same, f"certificate k={cert.k} l={cert.ell} n={cert.n}, expected k={k} l={ell} n={n}, host k={G.k}")
    if not same:
        return rep
    try:
        check_path_params(k, ell, n)
    except RamseyError as exc:
        rep.add("TARGET", False, exc.message)
        return rep

    if cert.variant == UNKNOWN:
        rep.add("VERDICT", False, "certificate records an exhausted budget, nothing to verify")
    elif cert.variant == NON_ARROW:
        _verify_non_arrow(G, cert, rep, budget)
    else:
        _verify_lower_bound(G, cert, rep, budget)
    return rep


def _verify_non_arrow(G: Hypergraph, cert: Certificate, rep: VerificationReport, budget) -> None:
    colors = cert.coloring or ()
    total = len(colors) == G.m
    rep.add("COLORING_TOTAL", total, f"{len(colors)} colors for {G.m} host edges")
    if not total:
        return
    coloring = Coloring(G, colors)
    for color in (Color.RED, Color.BLUE):
        try:
            hit = find_mono_ell_path(G, coloring, color, cert.k, cert.ell, cert.n, budget=budget)
        except BudgetExceeded:
            rep.add("MONO_ABSENCE", False, f"{color.name.lower()} search ran out of budget")
            continue
        if hit is None:
            rep.add("MONO_ABSENCE", True, f"no {color.name.lower()} copy of the target")
        else:
            rep.add("MONO_ABSENCE", False, f"{color.name.lower()} copy on vertices {list(hit.path.order)}")


def _verify_lower_bound(G: Hypergraph, cert: Certificate, rep: VerificationReport, budget) -> None:
    index_sets = []
    in_host = True
    for s in cert.sets:
        missing = [e for e in s.edges if not G.has_edge(e)]
        if missing:
            in_host = False
            rep.add("EDGE_NOT_IN_HOST", False, f"set {s.name}: {list(missing[0])} is not a host edge")
        index_sets.append(frozenset(G.index_of(e) for e in s.edges if G.has_edge(e)))
    if in_host:
        rep.add("EDGE_NOT_IN_HOST", True, "every listed edge is a host edge")

    disjoint = True
    for (a, ia), (b, ib) in combinations(zip(cert.sets, index_sets), 2):
        shared = ia & ib
        if shared:
            disjoint = False
            rep.add("DISJOINTNESS", False, f"sets {a.name} and {b.name} share {len(shared)} edge(s)")
    if disjoint:
        rep.add("DISJOINTNESS", True, f"{len(cert.sets)} sets pairwise disjoint")

    for s, ids in zip(cert.sets, index_sets):
        if not is_valid_path_size(cert.k, cert.ell, s.path_n):
            rep.add("PATH_SHAPE", False, f"set {s.name}: no {cert.ell}-path has {s.path_n} vertices")
            continue
        want = (s.path_n - cert.ell) // (cert.k - cert.ell)
        if len(set(s.edges)) != s.size or s.size != want:
            rep.add("PATH_SHAPE", False, f"set {s.name}: {s.size} distinct edges, a path on {s.path_n} vertices has {want}")
            continue
        covered = {v for e in s.edges for v in e}
        if len(covered) != s.path_n or len(ids) != s.size:
            rep.add("PATH_SHAPE", False, f"set {s.name}: covers {len(covered)} vertices, expected {s.path_n}")
            continue
        try:
            hit = find_ell_path(G, cert.k, cert.ell, s.path_n, ids, budget=budget)
        except BudgetExceeded:
            rep.add("PATH_SHAPE", False, f"set {s.name}: path search ran out of budget")
            continue
        rep.add("PATH_SHAPE", hit is not None, f"set {s.name}: {'forms' if hit else 'does not form'} an {cert.ell}-path on {s.path_n} vertices")

    total = sum(s.size for s in cert.sets)
    rep.add("TOTAL", total == cert.total, f"sizes sum to {total}, certificate states {cert.total}")
    rep.add("TOTAL_LE_HOST", total <= G.m, f"{total} <= e(G) = {G.m}")
