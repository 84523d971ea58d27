"""Verifies, exactly, that consecutive (k-)Fibonacci windows embed the
natural numbers into the coprime-tuple metric space with distance
distortion at most one.

For indices m, n the embedding sends n to the tuple of `ell`
consecutive k-Fibonacci numbers starting at F_{k,n}.  Each checked pair
produces a QIRow whose flags are exact integer comparisons:

  lower_ok / upper_ok    phi_k^(gap-1) <= max_q <= phi_k^(gap+1),
                         decided in surd arithmetic (no floats);
  lemma_lower_ok         element level: q * largest_generator >= target;
  lemma_upper_ok         element level: q never exceeds the cost of the
                         explicit two-coefficient witness built from the
                         addition identity of the sequence.

The ell > 2 theorem is stated for the plain Fibonacci sequence; pairing
ell > 2 with k > 1 is allowed only under `experimental=True` and comes
with no pass/fail contract.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .metric import CoprimeTuple, make_tuple, q_point
from .sequences import compare_power, kfib, metallic


@dataclass(frozen=True)
class EmbeddingSpec:
    """Which embedding to verify: sequence parameter k, window width ell."""

    k: int = 1
    ell: int = 2
    experimental: bool = False

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"sequence parameter k must be >= 1, got {self.k}")
        if self.ell < 2:
            raise ValueError(f"window width ell must be >= 2, got {self.ell}")
        if self.ell > 2 and self.k != 1 and not self.experimental:
            raise ValueError(
                f"ell={self.ell} with k={self.k} is outside the verified "
                "contract; enable the experimental flag to run it anyway"
            )


@dataclass(frozen=True)
class QIRow:
    """One verified index pair; all flags are exact integer comparisons.

    q_nm is the q value with generators f_n and targets f_m; q_mn the
    reverse direction.
    """

    m: int
    n: int
    q_nm: int
    q_mn: int
    max_q: int
    index_gap: int
    lower_ok: bool
    upper_ok: bool
    lemma_lower_ok: bool
    lemma_upper_ok: bool
    log_display: float

    @property
    def passed(self) -> bool:
        return (
            self.lower_ok
            and self.upper_ok
            and self.lemma_lower_ok
            and self.lemma_upper_ok
        )


@dataclass(frozen=True)
class QIReport:
    spec: EmbeddingSpec
    max_index: int
    rows: tuple[QIRow, ...]
    all_pass: bool


def embedding_point(spec: EmbeddingSpec, n: int) -> CoprimeTuple:
    """Tuple of ell consecutive k-Fibonacci numbers starting at index n.

    Duplicates collapse (the window at n=1 contains 1 twice).  The
    constructor re-checks coprimality and fails loudly if it ever
    breaks, which would mean an arithmetic bug upstream.
    """
    if n < 1:
        raise ValueError(f"embedding index must be >= 1, got {n}")
    return make_tuple(kfib(spec.k, n + i) for i in range(spec.ell))


def _directed_q(spec: EmbeddingSpec, gens: CoprimeTuple, start: int) -> list[int]:
    """q values over `gens` of the window targets F_{k,start+i}, by offset i."""
    cache: dict[int, int] = {}
    out = []
    for i in range(spec.ell):
        v = kfib(spec.k, start + i)
        if v not in cache:
            cache[v] = q_point(gens, v).value
        out.append(cache[v])
    return out


def _witness_cost(spec: EmbeddingSpec, target_idx: int, anchor_idx: int) -> int:
    """Cost |F_{k,d}| + |F_{k,d+1}| of the two-coefficient solution with
    d = target_idx - anchor_idx - 1, valid over the generator pair
    (F_{k,anchor_idx}, F_{k,anchor_idx+1}) for any index signs."""
    d = target_idx - anchor_idx - 1
    return abs(kfib(spec.k, d)) + abs(kfib(spec.k, d + 1))


def qi_check_pair(spec: EmbeddingSpec, m: int, n: int) -> QIRow:
    """Check one index pair; exact q values, exact bound flags."""
    lo, hi = min(m, n), max(m, n)
    f_lo = embedding_point(spec, lo)
    f_hi = embedding_point(spec, hi)
    gap = hi - lo

    q_lo_of_hi = _directed_q(spec, f_lo, hi)  # generators f_lo, targets f_hi
    q_hi_of_lo = _directed_q(spec, f_hi, lo)
    if m >= n:
        q_nm, q_mn = max(q_lo_of_hi), max(q_hi_of_lo)
    else:
        q_nm, q_mn = max(q_hi_of_lo), max(q_lo_of_hi)
    max_q = max(q_nm, q_mn)

    lower_ok = compare_power(max_q, spec.k, gap - 1) >= 0
    upper_ok = compare_power(max_q, spec.k, gap + 1) <= 0

    # element-level sandwich: any representation of v over generators
    # bounded by g_max costs at least v / g_max
    g_max = f_lo.elements[-1]
    lemma_lower_ok = all(
        q_lo_of_hi[i] * g_max >= kfib(spec.k, hi + i) for i in range(spec.ell)
    )
    # the higher window is reached through the top two generators of the
    # lower one, the lower window through the bottom two of the higher
    lemma_upper_ok = all(
        q_lo_of_hi[i] <= _witness_cost(spec, hi + i, lo + spec.ell - 2)
        and q_hi_of_lo[i] <= _witness_cost(spec, lo + i, hi)
        for i in range(spec.ell)
    )

    return QIRow(
        m=m,
        n=n,
        q_nm=q_nm,
        q_mn=q_mn,
        max_q=max_q,
        index_gap=gap,
        lower_ok=lower_ok,
        upper_ok=upper_ok,
        lemma_lower_ok=lemma_lower_ok,
        lemma_upper_ok=lemma_upper_ok,
        log_display=math.log(max_q) / math.log(metallic(spec.k).value),
    )


def qi_scan(spec: EmbeddingSpec, max_index: int, threads: int = 1) -> QIReport:
    """Check every unordered index pair {n, m} with n <= m <= max_index.

    Row order is lexicographic (n, m) regardless of `threads`; rows are
    independent, so the fan-out does not affect the report.
    """
    if max_index < 1:
        raise ValueError(f"max_index must be >= 1, got {max_index}")
    if threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")
    pairs = [
        (n, m) for n in range(1, max_index + 1) for m in range(n, max_index + 1)
    ]
    if threads == 1:
        rows = [qi_check_pair(spec, m, n) for (n, m) in pairs]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(lambda p: qi_check_pair(spec, p[1], p[0]), pairs))
    return QIReport(
        spec=spec,
        max_index=max_index,
        rows=tuple(rows),
        all_pass=all(r.passed for r in rows),
    )
