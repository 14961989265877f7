"""Command-line entry point.

Exit codes: 0 success or positive verdict, 1 negative verdict or failed
verification, 2 usage error, 3 unknown (budget exhausted).
"""

from __future__ import annotations

import argparse
import csv
import io
import logging
import os
import sys
from dataclasses import dataclass

from .adversary import PROCEDURES, AdversaryConfig, certify
from .bounds import CSV_COLUMNS, bound_report, format_rational, report_rows
from .certificate import UNKNOWN, format_certificate, parse_certificate, verify_certificate
from .errors import BudgetExceeded, ProofViolation, RamseyError
from .hypergraph import Hypergraph, all_k_subsets, format_hypergraph, make_hypergraph, parse_hypergraph
from .paths import build_ell_path, check_path_params
from .ramsey import ARROWS, DEFAULT_MAX_EDGES, DOES_NOT_ARROW, arrows, size_ramsey_search

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_UNKNOWN = 0, 1, 2, 3
DEFAULT_NODE_BUDGET = 20_000_000
BUDGET_ENV = "RF_NODE_BUDGET"

log = logging.getLogger("sizeramsey")


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    k: int | None = None
    ell: int | None = None
    n: int | None = None
    host: str | None = None
    out: str | None = None
    budget: int | None = None
    jobs: int = 1
    time_limit: float | None = None
    strict: bool = True
    fmt: str = "text"

    def validate(self) -> None:
        if self.k is not None:
            check_path_params(self.k, self.ell, self.n)
        if self.jobs < 1:
            raise RamseyError("BAD_PARAMS", f"--jobs must be >= 1, got {self.jobs}")
        if self.budget is not None and self.budget < 1:
            raise RamseyError("BAD_PARAMS", f"node budget must be >= 1, got {self.budget}")


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_NODE_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise RamseyError("BAD_PARAMS", f"{BUDGET_ENV}={raw!r} is not an integer") from None


def _read(path: str) -> str:
    try:
        with open(path, encoding="ascii") as fh:
            return fh.read()
    except OSError as exc:
        raise RamseyError("BAD_FILE", f"cannot read {path}: {exc.strerror}") from None


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)


def _load_host(path: str) -> Hypergraph:
    return parse_hypergraph(_read(path))


def _coloring_text(colors) -> str:
    return "".join(f"{i} {c.value}\n" for i, c in enumerate(colors))


def _describe(G: Hypergraph) -> str:
    if set(G.edges) == set(all_k_subsets(G.vertices, G.k)):
        return f"K_{G.n}" if G.k == 2 else f"K^({G.k})_{G.n}"
    return "{" + ", ".join("{" + ",".join(map(str, e)) + "}" for e in G.edges) + "}"


# -- subcommands ------------------------------------------------------------------


def cmd_gen_path(cfg: RunConfig) -> int:
    cfg.validate()
    P = build_ell_path(cfg.k, cfg.ell, cfg.n)
    _emit(format_hypergraph(make_hypergraph(cfg.k, P.order, P.edges)), cfg.out)
    return EXIT_OK


def cmd_check_arrow(cfg: RunConfig, max_edges: int = DEFAULT_MAX_EDGES) -> int:
    cfg.validate()
    G = _load_host(cfg.host)
    res = arrows(G, (cfg.k, cfg.ell, cfg.n), budget=cfg.budget, jobs=cfg.jobs, max_edges=max_edges, time_limit=cfg.time_limit)
    print(res.verdict)
    print(f"copies {res.copies} colorings {res.colorings_examined} nodes {res.nodes}")
    if res.verdict == DOES_NOT_ARROW:
        _emit(_coloring_text(res.witness.colors), cfg.out)
        return EXIT_NEGATIVE
    return EXIT_OK if res.verdict == ARROWS else EXIT_UNKNOWN


def cmd_certify(cfg: RunConfig, procedure: str) -> int:
    cfg.validate()
    G = _load_host(cfg.host)
    acfg = AdversaryConfig(procedure, cfg.k, cfg.ell, cfg.n, budget=cfg.budget, strict=cfg.strict, jobs=cfg.jobs)
    cert = certify(G, acfg)
    _emit(format_certificate(cert), cfg.out)
    for warning in cert.audit.warnings:
        log.warning(warning)
    print(f"{cert.variant} total {cert.total} sound {'yes' if cert.sound else 'no'}", file=sys.stderr)
    return EXIT_UNKNOWN if cert.variant == UNKNOWN else EXIT_OK


def cmd_verify(host: str, certfile: str, budget: int | None) -> int:
    G = _load_host(host)
    cert = parse_certificate(_read(certfile))
    report = verify_certificate(G, cert, cert.target, budget=budget)
    sys.stdout.write(report.text())
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def cmd_bounds(cfg: RunConfig) -> int:
    cfg.validate()
    rep = bound_report(cfg.k, cfg.ell, cfg.n)
    if cfg.fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(report_rows(rep))
        _emit(buf.getvalue(), cfg.out)
        return EXIT_OK
    lines = [f"bounds for k={rep.k} ell={rep.ell} n={rep.n}"]
    for e in rep.entries:
        value = "-" if e.value is None else format_rational(e.value)
        ceiling = "-" if e.value is None else str(e.ceiling)
        applicable = "applicable" if e.applicable else "not-applicable"
        row = f"{e.name:<14} {value:>10} {ceiling:>8}  {applicable:<14} precondition={e.precondition_ok}"
        lines.append(f"{row}  ({e.note})" if e.note else row)
    _emit("\n".join(lines) + "\n", cfg.out)
    return EXIT_OK


def cmd_size_ramsey(cfg: RunConfig, max_edges: int, max_vertices: int | None) -> int:
    cfg.validate()
    res = size_ramsey_search(cfg.k, cfg.ell, cfg.n, max_edges, max_vertices, budget=cfg.budget, jobs=cfg.jobs)
    if res.found:
        print(f"R̂ = {res.m}, witness {_describe(res.witness)}")
        return EXIT_OK
    print(f"not found ≤ {max_edges} (trivial bound {res.lower_bound})")
    return EXIT_NEGATIVE


# -- argument parsing -----------------------------------------------------------------


def _target(p: argparse.ArgumentParser) -> None:
    p.add_argument("k", type=int)
    p.add_argument("ell", type=int)
    p.add_argument("n", type=int)


def _budgets(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget", type=int, default=None, help=f"node budget (default ${BUDGET_ENV} or {DEFAULT_NODE_BUDGET})")
    p.add_argument("--jobs", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sizeramsey", description="Size-Ramsey experiments for uniform hypergraph paths.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-path", help="write the canonical l-path")
    _target(p)
    p.add_argument("-o", "--out")

    p = sub.add_parser("check-arrow", help="decide whether a host arrows the path")
    p.add_argument("host")
    _target(p)
    p.add_argument("--witness", dest="out", help="file for the witness coloring (default: stdout)")
    p.add_argument("--max-edges", type=int, default=DEFAULT_MAX_EDGES)
    p.add_argument("--time-limit", type=float, default=None, help="soft wall-clock cap in seconds")
    _budgets(p)

    p = sub.add_parser("certify", help="run an adversary procedure and write a certificate")
    p.add_argument("host")
    _target(p)
    p.add_argument("--proc", required=True, choices=PROCEDURES)
    p.add_argument("--strict", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("-o", "--out")
    _budgets(p)

    p = sub.add_parser("verify", help="independently check a certificate against a host")
    p.add_argument("host")
    p.add_argument("cert")
    p.add_argument("--budget", type=int, default=None)

    p = sub.add_parser("bounds", help="evaluate the closed-form lower bounds")
    _target(p)
    p.add_argument("--format", dest="fmt", choices=("text", "csv"), default="text")
    p.add_argument("-o", "--out")

    p = sub.add_parser("size-ramsey", help="exhaustive size-Ramsey search over tiny hosts")
    _target(p)
    p.add_argument("--max-edges", type=int, required=True)
    p.add_argument("--max-vertices", type=int, default=None)
    _budgets(p)
    return parser


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        budget = getattr(args, "budget", None)
        if budget is None:
            budget = default_budget()
        target = {}
        if hasattr(args, "k"):
            target = dict(k=args.k, ell=args.ell, n=args.n)
        cfg = RunConfig(
            args.command,
            host=getattr(args, "host", None),
            out=getattr(args, "out", None),
            budget=budget,
            jobs=getattr(args, "jobs", 1),
            time_limit=getattr(args, "time_limit", None),
            strict=getattr(args, "strict", True),
            fmt=getattr(args, "fmt", "text"),
            **target,
        )
        if args.command == "gen-path":
            return cmd_gen_path(cfg)
        if args.command == "check-arrow":
            return cmd_check_arrow(cfg, args.max_edges)
        if args.command == "certify":
            return cmd_certify(cfg, args.proc)
        if args.command == "verify":
            return cmd_verify(args.host, args.cert, budget)
        if args.command == "bounds":
            return cmd_bounds(cfg)
        return cmd_size_ramsey(cfg, args.max_edges, args.max_vertices)
    except ProofViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.dump:
            print(exc.dump, file=sys.stderr)
        return EXIT_NEGATIVE
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    except RamseyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
