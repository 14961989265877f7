"""Exact tools for size-Ramsey numbers of uniform hypergraph paths."""

from .adversary import AdversaryConfig, certify, run_general_small_ell, run_three_path, run_tight_iterative
from .bounds import bound_report, prop_counting_bound, thm_gen_large_bound, thm_gen_small_bound, thm_tight3_bound, thm_tight_bound, trivial_lower_bound
from .certificate import Certificate, format_certificate, parse_certificate, verify_certificate
from .errors import BudgetExceeded, ProofViolation, RamseyError
from .hypergraph import Color, Coloring, Hypergraph, canonical_code, make_hypergraph, parse_hypergraph, q_neighborhood
from .paths import build_ell_path, find_ell_path, find_mono_ell_path
from .ramsey import arrows, min_W_oracle, size_ramsey_search

__version__ = "0.1.0"
