"""Replication summaries and the Wilcoxon rank-sum test."""

import math
from dataclasses import dataclass

import numpy as np

#: Largest pooled sample size handled by exact enumeration.
EXACT_MAX_TOTAL = 14


@dataclass(frozen=True)
class SampleSummary:
    mean: float
    std: float
    n: int

    @property
    def degenerate(self):
        """True when n == 1 and the reported std of 0 carries no information."""
        return self.n == 1


@dataclass(frozen=True)
class WilcoxonResult:
    rank_sum: float
    p_value: float
    method: str


def summarize(samples):
    x = np.asarray(samples, dtype=float).ravel()
    if x.size == 0:
        raise ValueError("cannot summarize an empty sample")
    std = float(np.std(x, ddof=1)) if x.size > 1 else 0.0
    return SampleSummary(float(np.mean(x)), std, int(x.size))


def average_ranks(values):
    """1-based ranks with ties given their average rank."""
    values = np.asarray(values, dtype=float)
    order = np.argsort(values, kind="mergesort")
    ranks = np.empty(values.size)
    sorted_vals = values[order]
    i = 0
    while i < values.size:
        j = i
        while j + 1 < values.size and sorted_vals[j + 1] == sorted_vals[i]:
            j += 1
        ranks[order[i : j + 1]] = (i + j) / 2.0 + 1.0
        i = j + 1
    return ranks


def _exact_p(ranks, n_a, observed):
    # Count subsets of size n_a by doubled rank sum (doubling keeps .5 ranks integral).
    doubled = np.rint(2 * ranks).astype(int)
    total = int(doubled.sum())
    counts = np.zeros((n_a + 1, total + 1))
    counts[0, 0] = 1.0
    for r in doubled:
        counts[1:, r:] = counts[1:, r:] + counts[:-1, : total + 1 - r]
    dist = counts[n_a]
    sums = np.arange(total + 1)
    expected2 = n_a * total / ranks.size
    obs_dev = abs(2 * observed - expected2)
    extreme = np.abs(sums - expected2) >= obs_dev - 1e-9
    return float(dist[extreme].sum() / dist.sum())


def _normal_p(ranks, n_a, n_b, observed):
    n = n_a + n_b
    _, counts = np.unique(ranks, return_counts=True)
    tie_term = float(np.sum(counts**3 - counts)) / (n * (n - 1)) if n > 1 else 0.0
    var = n_a * n_b / 12.0 * ((n + 1) - tie_term)
    if var <= 0:
        return 1.0
    dev = abs(observed - n_a * (n + 1) / 2.0) - 0.5
    if dev <= 0:
        return 1.0
    return min(1.0, math.erfc(dev / math.sqrt(2 * var)))


def wilcoxon_rank_sum(a, b):
    """Two-sided Wilcoxon rank-sum test of samples ``a`` and ``b``.

    The statistic is the rank sum of ``a`` in the pooled sample. Exact
    enumeration is used when the pooled size is at most ``EXACT_MAX_TOTAL``,
    otherwise the normal approximation with tie and continuity correction.
    """
    a = np.asarray(a, dtype=float).ravel()
    b = np.asarray(b, dtype=float).ravel()
    if a.size == 0 or b.size == 0:
        raise ValueError("both samples must be non-empty")
    ranks = average_ranks(np.concatenate([a, b]))
    w = float(ranks[: a.size].sum())
    if a.size + b.size <= EXACT_MAX_TOTAL:
        p, method = _exact_p(ranks, a.size, w), "exact"
    else:
        p, method = _normal_p(ranks, a.size, b.size, w), "normal_approx"
    return WilcoxonResult(w, min(1.0, max(0.0, p)), method)
