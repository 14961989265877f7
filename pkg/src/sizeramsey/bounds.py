"""Exact evaluation of the closed-form size-Ramsey lower bounds for l-paths.

All values are :class:`fractions.Fraction` or ``int``; nothing here touches
floating point.  Integer edge-count forms (ceilings) are separate accessors
because the theorems bound a rational expression.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import RamseyError
from .hypergraph import as_rational
from .paths import check_path_params


def ceil_log2(x) -> int:
    """Exact ceil(log2(x)) for a rational x >= 1."""
    x = as_rational(x)
    if x < 1:
        raise RamseyError("BAD_PARAMS", f"ceil_log2 needs x >= 1, got {x}")
    t = 0
    while (1 << t) * x.denominator < x.numerator:
        t += 1
    return t


def lambda_of(k: int) -> int:
    """Number of halving iterations, ceil(log2(k+1)) - 1."""
    if k < 2:
        raise RamseyError("BAD_PARAMS", f"need k >= 2, got {k}")
    return ceil_log2(k + 1) - 1


def q_of(i: int, k: int) -> Fraction:
    """Neighborhood threshold (1 - 2^-i)(k + 1) for iteration i."""
    if not 0 <= i <= lambda_of(k):
        raise RamseyError("I_OUT_OF_RANGE", f"need 0 <= i <= {lambda_of(k)} for k={k}, got {i}")
    return (1 - Fraction(1, 2**i)) * (k + 1)


def smallest_c(k: int, ell: int) -> int:
    """Least c >= 0 such that (k - ell) divides (k + c)."""
    if k < 2 or not 1 <= ell <= k - 1:
        raise RamseyError("BAD_PARAMS", f"need k >= 2 and 1 <= ell <= k-1, got k={k}, ell={ell}")
    return -(k) % (k - ell)


def trivial_lower_bound(k: int, ell: int, n: int) -> Fraction:
    """2(n - ell)/(k - ell) - 1."""
    _check(k, ell, n)
    return Fraction(2 * (n - ell), k - ell) - 1


def thm_tight3_bound(n: int) -> Fraction:
    """8n/3 - 28/3 for 3-uniform tight paths, n >= 7."""
    if n < 7:
        raise RamseyError("N_TOO_SMALL", f"the 3-uniform tight bound needs n >= 7, got {n}")
    return Fraction(8 * n - 28, 3)


def thm_tight3_ceiling(n: int) -> int:
    return math.ceil(thm_tight3_bound(n))


def thm_tight_bound(k: int, n: int) -> int:
    """ceil(log2(k+1)) * n - 2k^2 for k >= 4 and n > (k^2 + k - 2)/2."""
    if k < 4:
        raise RamseyError("K_TOO_SMALL", f"the iterative tight bound needs k >= 4, got {k}")
    if 2 * n <= k * k + k - 2:
        raise RamseyError("N_TOO_SMALL", f"need n > (k^2+k-2)/2 = {Fraction(k * k + k - 2, 2)}, got {n}")
    return ceil_log2(k + 1) * n - 2 * k * k


def thm_gen_small_bound(k: int, ell: int, n: int) -> Fraction:
    """(2 + ell/(k+c)) (n - ell)/(k - ell) - 4 for 1 <= ell <= 2k/3.

    The "n sufficiently large" hypothesis has no explicit threshold; the
    formula is evaluated for every parameter-valid n.
    """
    _check(k, ell, n)
    if 3 * ell > 2 * k:
        raise RamseyError("BAD_PARAMS", f"needs ell <= 2k/3, got k={k}, ell={ell}")
    c = smallest_c(k, ell)
    return (2 + Fraction(ell, k + c)) * Fraction(n - ell, k - ell) - 4


def thm_gen_large_bound(k: int, ell: int, n: int) -> int:
    """ceil(log2((2k - ell)/(k - ell))) (n - ell)/(k - ell) - 4k^2 for 2k/3 < ell <= k-1."""
    _check(k, ell, n)
    if k < 4 or 3 * ell <= 2 * k:
        raise RamseyError("BAD_PARAMS", f"needs k >= 4 and 2k/3 < ell <= k-1, got k={k}, ell={ell}")
    t = ceil_log2(Fraction(2 * k - ell, k - ell))
    return t * ((n - ell) // (k - ell)) - 4 * k * k


def prop_counting_bound(k: int, ell: int, n: int, alpha) -> Fraction:
    """Lower bound on |W| when every path edge meets W in at least alpha vertices.

    Tight paths: alpha (n - k + 1)/k.  General l-paths: alpha (n - ell)/(k + c).
    """
    _check(k, ell, n)
    alpha = as_rational(alpha)
    if not 1 <= alpha <= k:
        raise RamseyError("BAD_PARAMS", f"need 1 <= alpha <= k, got {alpha}")
    if ell == k - 1:
        return alpha * Fraction(n - k + 1, k)
    return alpha * Fraction(n - ell, k + smallest_c(k, ell))


def _check(k: int, ell: int, n: int) -> None:
    try:
        check_path_params(k, ell, n)
    except RamseyError as exc:
        raise RamseyError("BAD_PARAMS", exc.message) from None


# -- reports ------------------------------------------------------------------

BOUND_NAMES = ("trivial", "thm_tight3", "thm_tight", "thm_gen_small", "thm_gen_large")


@dataclass(frozen=True)
class BoundEntry:
    name: str
    value: Fraction | None
    applicable: bool
    precondition_ok: str  # "yes", "no" or "unverified"
    note: str = ""

    @property
    def ceiling(self) -> int | None:
        return None if self.value is None else math.ceil(self.value)


@dataclass
class BoundReport:
    k: int
    ell: int
    n: int
    entries: list[BoundEntry] = field(default_factory=list)

    def __getitem__(self, name: str) -> BoundEntry:
        for entry in self.entries:
            if entry.name == name:
                return entry
        raise KeyError(name)


def bound_report(k: int, ell: int, n: int) -> BoundReport:
    """Evaluate every bound; inapplicable entries are flagged and left empty."""
    _check(k, ell, n)
    rep = BoundReport(k, ell, n)
    rep.entries.append(BoundEntry("trivial", trivial_lower_bound(k, ell, n), True, "yes"))

    tight = ell == k - 1
    if k == 3 and tight:
        if n >= 7:
            rep.entries.append(BoundEntry("thm_tight3", thm_tight3_bound(n), True, "yes"))
        else:
            rep.entries.append(BoundEntry("thm_tight3", None, True, "no", "needs n >= 7"))
    else:
        rep.entries.append(BoundEntry("thm_tight3", None, False, "no", "needs k = 3, ell = 2"))

    if k >= 4 and tight:
        if 2 * n > k * k + k - 2:
            rep.entries.append(BoundEntry("thm_tight", Fraction(thm_tight_bound(k, n)), True, "yes"))
        else:
            rep.entries.append(BoundEntry("thm_tight", None, True, "no", "needs n > (k^2+k-2)/2"))
    else:
        rep.entries.append(BoundEntry("thm_tight", None, False, "no", "needs k >= 4, ell = k-1"))

    if 3 * ell <= 2 * k:
        rep.entries.append(
            BoundEntry("thm_gen_small", thm_gen_small_bound(k, ell, n), True, "unverified", "n threshold unstated")
        )
    else:
        rep.entries.append(BoundEntry("thm_gen_small", None, False, "no", "needs ell <= 2k/3"))

    if k >= 4 and 3 * ell > 2 * k:
        rep.entries.append(
            BoundEntry(
                "thm_gen_large", Fraction(thm_gen_large_bound(k, ell, n)), True, "unverified", "n threshold unstated"
            )
        )
    else:
        rep.entries.append(BoundEntry("thm_gen_large", None, False, "no", "needs k >= 4, 2k/3 < ell"))
    return rep


CSV_COLUMNS = ("k", "ell", "n", "name", "value_num", "value_den", "ceiling", "applicable", "precondition_ok")


def report_rows(rep: BoundReport) -> list[dict]:
    rows = []
    for e in rep.entries:
        rows.append(
            {
                "k": rep.k,
                "ell": rep.ell,
                "n": rep.n,
                "name": e.name,
                "value_num": "" if e.value is None else e.value.numerator,
                "value_den": "" if e.value is None else e.value.denominator,
                "ceiling": "" if e.value is None else e.ceiling,
                "applicable": "yes" if e.applicable else "no",
                "precondition_ok": e.precondition_ok,
            }
        )
    return rows


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
