"""k-Wall-Sun-Sun classification through four independent criteria.

A prime p is k-Wall-Sun-Sun when pi(p^2) = pi(p). Under the standing
hypotheses (4 does not divide k, D = (k^2+4)/gcd(2,k)^2 squarefree) this
is equivalent to three other computable statements, and classify() runs
all of them side by side as a cross-check:

  period       pi(p^2) = pi(p)                      (the definition)
  entry        U_{p - delta_p} = 0 mod p^2          (p >= 3)
  alpha        x^{2p} - kx^p - 1 vanishes at alpha in R_{p^2}  (p >= 3)
  monogenic    x^{2p} - kx^p - 1 is NOT monogenic
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import CriterionUnsupportedError, HypothesisError, InconsistencyError
from .intmath import is_prime, is_squarefree, jacobi
from .lucas import lucas_u, pisano_period, period_p_squared
from .quadring import eval_fp_alpha
from .trinomial import is_monogenic_fp

CRITERIA = ("period", "entry", "alpha", "monogenic", "all")


@dataclass(frozen=True)
class WssHypotheses:
    k: int
    d_value: int
    four_ok: bool
    squarefree_ok: bool

    @property
    def satisfied(self) -> bool:
        return self.four_ok and self.squarefree_ok


@dataclass(frozen=True)
class WssClassification:
    k: int
    p: int
    delta: int
    delta_applicable: bool  # False at p = 2, where delta is not defined
    pi_p: int
    pi_p2: int
    by_period: bool
    by_entry: bool
    by_alpha: bool
    by_monogenic: bool
    entry_alpha_derived: bool  # True at p = 2: entry/alpha mirror the period verdict
    consistent: bool

    @property
    def is_wss(self) -> bool:
        return self.by_period


def validate_k(k: int, *, factor_budget: int | None = None) -> WssHypotheses:
    """Check the two standing hypotheses on k, reporting both flags."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    g = 2 if k % 2 == 0 else 1
    d = (k * k + 4) // (g * g)
    return WssHypotheses(
        k=k,
        d_value=d,
        four_ok=k % 4 != 0,
        squarefree_ok=is_squarefree(d, budget=factor_budget),
    )


def _require_valid_k(k: int, factor_budget: int | None) -> WssHypotheses:
    hyp = validate_k(k, factor_budget=factor_budget)
    if not hyp.four_ok:
        raise HypothesisError(f"k = {k} is divisible by 4")
    if not hyp.squarefree_ok:
        raise HypothesisError(f"D = {hyp.d_value} is not squarefree for k = {k}")
    return hyp


def delta_p(k: int, p: int) -> int:
    """Legendre symbol (k^2+4 | p) for odd prime p."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if p == 2:
        raise ValueError("delta_p is defined for odd primes only")
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    return jacobi(k * k + 4, p)


def is_wss_by_period(k: int, p: int) -> bool:
    return period_p_squared(k, p) == pisano_period(k, p)


def is_wss_by_entry(k: int, p: int) -> bool:
    """U_{p - delta_p} = 0 mod p^2, for p >= 3.

    The delta_p = 0 branch returns false outright: a ramified odd prime is
    never k-Wall-Sun-Sun. The sweeps verify this against the period
    criterion rather than trusting the shortcut.
    """
    if p == 2:
        raise CriterionUnsupportedError(
            "entry criterion needs p >= 3; use the period criterion at p = 2"
        )
    d = delta_p(k, p)
    if d == 0:
        return False
    return lucas_u(k, p - d, p * p) == 0


def is_wss_by_alpha(k: int, p: int, *, factor_budget: int | None = None) -> bool:
    """F_p(alpha) = 0 in R_{p^2}, for p >= 3 under the hypotheses."""
    if p == 2:
        raise CriterionUnsupportedError(
            "alpha criterion needs p >= 3; use the period criterion at p = 2"
        )
    _require_valid_k(k, factor_budget)
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    return eval_fp_alpha(k, p).is_zero()


def is_wss_by_monogenicity(k: int, p: int, *, factor_budget: int | None = None) -> bool:
    return not is_monogenic_fp(k, p, factor_budget=factor_budget).monogenic


def classify(k: int, p: int, *, factor_budget: int | None = None) -> WssClassification:
    """Run every applicable criterion on (k, p) and check they agree.

    At p = 2 the entry and alpha criteria are not defined; their fields
    mirror the period verdict and entry_alpha_derived is set. Disagreement
    between criteria raises InconsistencyError carrying the classification,
    since agreement is a theorem under the hypotheses.
    """
    _require_valid_k(k, factor_budget)
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    pi_p = pisano_period(k, p)
    pi_p2 = period_p_squared(k, p)
    by_period = pi_p2 == pi_p
    if p == 2:
        delta, applicable = 0, False
        by_entry = by_alpha = by_period
        derived = True
    else:
        delta, applicable = delta_p(k, p), True
        by_entry = is_wss_by_entry(k, p)
        by_alpha = eval_fp_alpha(k, p).is_zero()
        derived = False
    by_monogenic = is_wss_by_monogenicity(k, p, factor_budget=factor_budget)
    consistent = by_period == by_entry == by_alpha == by_monogenic
    record = WssClassification(
        k=k,
        p=p,
        delta=delta,
        delta_applicable=applicable,
        pi_p=pi_p,
        pi_p2=pi_p2,
        by_period=by_period,
        by_entry=by_entry,
        by_alpha=by_alpha,
        by_monogenic=by_monogenic,
        entry_alpha_derived=derived,
        consistent=consistent,
    )
    if not consistent:
        raise InconsistencyError(
            f"criteria disagree at k={k}, p={p}: period={by_period}, "
            f"entry={by_entry}, alpha={by_alpha}, monogenic={by_monogenic}",
            classification=record,
        )
    return record


@dataclass(frozen=True)
class SearchHit:
    k: int
    p: int
    pi_p: int
    pi_p2: int
    classification: WssClassification | None = None


@dataclass(frozen=True)
class SearchResult:
    criterion: str
    k_min: int
    k_max: int
    p_max: int
    hits: tuple[SearchHit, ...]
    skipped_k: tuple[int, ...]


def _primes_upto(limit: int) -> list[int]:
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    i = 2
    while i * i <= limit:
        if flags[i]:
            flags[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
        i += 1
    return [n for n, f in enumerate(flags) if f]


def _cell_is_hit(k: int, p: int, criterion: str, factor_budget: int | None) -> "SearchHit | None":
    if criterion == "all":
        c = classify(k, p, factor_budget=factor_budget)
        if not c.is_wss:
            return None
        return SearchHit(k=k, p=p, pi_p=c.pi_p, pi_p2=c.pi_p2, classification=c)
    if criterion == "period":
        hit = is_wss_by_period(k, p)
    elif criterion == "entry":
        # the criterion is undefined at p = 2; ground truth there is the period
        hit = is_wss_by_period(k, p) if p == 2 else is_wss_by_entry(k, p)
    elif criterion == "alpha":
        hit = (
            is_wss_by_period(k, p)
            if p == 2
            else is_wss_by_alpha(k, p, factor_budget=factor_budget)
        )
    elif criterion == "monogenic":
        hit = is_wss_by_monogenicity(k, p, factor_budget=factor_budget)
    else:
        raise ValueError(f"unknown criterion {criterion!r}")
    if not hit:
        return None
    return SearchHit(k=k, p=p, pi_p=pisano_period(k, p), pi_p2=period_p_squared(k, p))


def _search_chunk(args: tuple) -> list[SearchHit]:
    cells, criterion, factor_budget = args
    out = []
    for k, p in cells:
        hit = _cell_is_hit(k, p, criterion, factor_budget)
        if hit is not None:
            out.append(hit)
    return out


def search(
    k_min: int,
    k_max: int,
    p_max: int,
    criterion: str = "all",
    *,
    jobs: int | None = None,
    factor_budget: int | None = None,
) -> SearchResult:
    """Scan k in [k_min, k_max] and primes p <= p_max for k-Wall-Sun-Sun hits.

    criterion picks the detector; "all" runs the full cross-checked
    classification per cell. Criteria that are only meaningful under the
    hypotheses (alpha, monogenic, all) skip failing k values and report
    them in skipped_k; period and entry scan every k. The hit list is
    sorted by (k, p) and does not depend on jobs or scheduling.
    """
    if k_min < 1:
        raise ValueError(f"k_min must be >= 1, got {k_min}")
    if k_min > k_max:
        raise ValueError(f"empty k range: k_min {k_min} > k_max {k_max}")
    if p_max < 2:
        raise ValueError(f"p_max must be >= 2, got {p_max}")
    if criterion not in CRITERIA:
        raise ValueError(f"criterion must be one of {CRITERIA}, got {criterion!r}")

    needs_hypotheses = criterion in ("alpha", "monogenic", "all")
    skipped = []
    scan_ks = []
    for k in range(k_min, k_max + 1):
        if needs_hypotheses and not validate_k(k, factor_budget=factor_budget).satisfied:
            skipped.append(k)
        else:
            scan_ks.append(k)
    primes = _primes_upto(p_max)
    cells = [(k, p) for k in scan_ks for p in primes]

    if jobs is None:
        jobs = os.cpu_count() or 1
    hits: list[SearchHit] = []
    if jobs <= 1 or len(cells) <= 1:
        hits = _search_chunk((cells, criterion, factor_budget))
    else:
        nchunks = min(len(cells), jobs * 4)
        size = -(-len(cells) // nchunks)
        chunks = [
            (cells[i : i + size], criterion, factor_budget)
            for i in range(0, len(cells), size)
        ]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_search_chunk, chunks):
                hits.extend(part)
    hits.sort(key=lambda h: (h.k, h.p))
    return SearchResult(
        criterion=criterion,
        k_min=k_min,
        k_max=k_max,
        p_max=p_max,
        hits=tuple(hits),
        skipped_k=tuple(skipped),
    )
