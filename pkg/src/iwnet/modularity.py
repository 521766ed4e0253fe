"""Observed/expected contingency machinery and all modularity quantities.

Two parallel tracks are kept:

* the scalar track (plain weighted networks, used on interval midpoints),
  with the unnormalized modularity, both the full and the reduced gain of
  merging two communities, and the normalized form; and
* the interval track, where the expected interval weights go through the
  pairwise adjustment of the total weight and the difference between
  observed and expected blocks is taken with the signed endpoint
  difference D.

Partition-level quantities are evaluated blockwise on the super-vertex
matrix implied by the partition; per-community totals accumulate
others-first-then-own so the interval track degenerates bit for bit to
the scalar track on degenerate networks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    DegenerateDenominator,
    SameCommunity,
    ZeroInAdjustedTotal,
    ZeroTotalWeight,
)
from .interval import Interval, ZERO, signed_diff
from .network import IWNetwork, aggregate_minmax, aggregate_sum
from .partition import Partition

__all__ = [
    "ExpectedTable",
    "expected_scalar",
    "expected_interval_adjusted",
    "adjusted_total_bounds",
    "q_scalar",
    "q_scalar_communities",
    "dq_scalar_full",
    "dq_scalar_reduced",
    "q_norm_scalar",
    "q_interval",
    "dq_interval",
    "q_interval_adjusted",
    "q_interval_communities",
    "q_max_interval_adjusted",
    "q_max_scalar",
    "q_norm_interval",
]

Matrix = Sequence[Sequence[float]]


@dataclass(frozen=True)
class ExpectedTable:
    """Symmetric table of expected weights under row-column independence.

    ``mode`` is "scalar" (degenerate entries e_ij = s_i s_j / 2w) or
    "interval-adjusted" (pairwise-adjusted interval quotients). The
    adjusted table has no meaningful marginal totals.
    """

    mode: str
    e: tuple[tuple[Interval, ...], ...]

    @property
    def n(self) -> int:
        return len(self.e)


def _row_sums(mid: Matrix) -> list[float]:
    return [sum(row) for row in mid]


def expected_scalar(mid: Matrix) -> ExpectedTable:
    """Pairwise expected weights e_ij = s_i * s_j / 2w of a scalar matrix."""
    s = _row_sums(mid)
    two_w = sum(s)
    if two_w <= 0:
        raise ZeroTotalWeight("total weight is zero")
    e = tuple(
        tuple(Interval(si * sj / two_w, si * sj / two_w) for sj in s) for si in s
    )
    return ExpectedTable("scalar", e)


def _interval_strengths(net: IWNetwork) -> list[Interval]:
    return [net.strength(i) for i in range(net.n)]


def adjusted_total_bounds(
    strengths: Sequence[Interval], i: int, j: int
) -> tuple[float, float]:
    """(adjusted minimum, adjusted maximum) of the total weight for pair (i, j).

    The pair's own strength endpoints are pinned: the adjusted maximum is
    the largest total reachable while both pinned strengths sit at their
    lower endpoints (it divides the expected lower bound), and the
    adjusted minimum is the smallest total with both at their upper
    endpoints (it divides the expected upper bound).
    """
    others_lo = 0.0
    others_hi = 0.0
    for l, s in enumerate(strengths):
        if l != i and l != j:
            others_lo += s.lo
            others_hi += s.hi
    if i == j:
        adj_max = others_hi + strengths[i].lo
        adj_min = others_lo + strengths[i].hi
    else:
        adj_max = others_hi + strengths[i].lo + strengths[j].lo
        adj_min = others_lo + strengths[i].hi + strengths[j].hi
    return adj_min, adj_max


def _adjusted_expected(
    strengths: Sequence[Interval], i: int, j: int
) -> Interval:
    adj_min, adj_max = adjusted_total_bounds(strengths, i, j)
    if adj_min <= 0 or adj_max <= 0:
        raise ZeroInAdjustedTotal(
            f"adjusted total for pair ({i}, {j}) contains zero"
        )
    return Interval(
        strengths[i].lo * strengths[j].lo / adj_max,
        strengths[i].hi * strengths[j].hi / adj_min,
    )


def expected_interval_adjusted(net: IWNetwork) -> ExpectedTable:
    """Adjusted expected interval weights for all vertex pairs."""
    s = _interval_strengths(net)
    n = net.n
    e = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            e[i][j] = e[j][i] = _adjusted_expected(s, i, j)
    return ExpectedTable("interval-adjusted", tuple(tuple(row) for row in e))


# ---------------------------------------------------------------------------
# scalar modularity


def _aggregate_scalar(mid: Matrix, comms: Sequence[Sequence[int]]) -> list[list[float]]:
    # mirrored blocks, same traversal as the interval aggregation
    q = len(comms)
    out = [[0.0] * q for _ in range(q)]
    for r in range(q):
        for c in range(r, q):
            acc = 0.0
            for i in comms[r]:
                for j in comms[c]:
                    acc += mid[i][j]
            out[r][c] = out[c][r] = acc
    return out


def _aggregate_interval(
    weights: Sequence[Sequence[Interval]], comms: Sequence[Sequence[int]]
) -> list[list[Interval]]:
    q = len(comms)
    out = [[ZERO] * q for _ in range(q)]
    for r in range(q):
        for c in range(r, q):
            acc = ZERO
            for i in comms[r]:
                for j in comms[c]:
                    acc = acc + weights[i][j]
            out[r][c] = out[c][r] = acc
    return out


def _q_scalar_blocks(blocks: Sequence[Sequence[float]]) -> float:
    q = len(blocks)
    s = [sum(row) for row in blocks]
    if sum(s) <= 0:
        raise ZeroTotalWeight("total weight is zero")
    total = 0.0
    for r in range(q):
        tw = 0.0
        for l in range(q):
            if l != r:
                tw += s[l]
        tw += s[r]
        total += blocks[r][r] - s[r] * s[r] / tw
    return total


def q_scalar_communities(mid: Matrix, comms: Sequence[Sequence[int]]) -> float:
    """q_scalar over explicit community member lists (driver hot path)."""
    return _q_scalar_blocks(_aggregate_scalar(mid, comms))


def q_scalar(mid: Matrix, p: Partition) -> float:
    """Unnormalized scalar modularity of a partition (no 1/2w factor)."""
    return q_scalar_communities(mid, p.communities)


def dq_scalar_full(mid: Matrix, p: Partition, r: int, s: int) -> float:
    """Gain of merging communities r and s, as Q(after) - Q(before)."""
    if r == s:
        raise SameCommunity(f"cannot merge community {r} with itself")
    return q_scalar(mid, p.merge(r, s)) - q_scalar(mid, p)


def dq_scalar_reduced(mid: Matrix, p: Partition, r: int, s: int) -> float:
    """Gain of merging communities r and s via the local form 2(o_rs - e_rs)."""
    if r == s:
        raise SameCommunity(f"cannot merge community {r} with itself")
    strengths = _row_sums(mid)
    two_w = sum(strengths)
    if two_w <= 0:
        raise ZeroTotalWeight("total weight is zero")
    o_rs = 0.0
    for i in p.communities[r]:
        for j in p.communities[s]:
            o_rs += mid[i][j]
    s_r = sum(strengths[i] for i in p.communities[r])
    s_s = sum(strengths[j] for j in p.communities[s])
    return 2.0 * (o_rs - s_r * s_s / two_w)


def _q_max_scalar_blocks(blocks: Sequence[Sequence[float]]) -> float:
    q = len(blocks)
    total = 0.0
    for row in blocks:
        for x in row:
            total += x
    s = [sum(row) for row in blocks]
    e_sum = 0.0
    for r in range(q):
        tw = 0.0
        for l in range(q):
            if l != r:
                tw += s[l]
        tw += s[r]
        e_sum += s[r] * s[r] / tw
    return total - e_sum


def q_norm_scalar(mid: Matrix, p: Partition) -> float:
    """Normalized scalar modularity Q / (2w - sum of expected diagonal blocks)."""
    blocks = _aggregate_scalar(mid, p.communities)
    q = _q_scalar_blocks(blocks)
    q_max = _q_max_scalar_blocks(blocks)
    if q_max == 0:
        raise DegenerateDenominator("Q_max is zero")
    return q / q_max


# ---------------------------------------------------------------------------
# interval modularity


def q_interval(
    o_blocks: Sequence[Interval], e_blocks: Sequence[Interval]
) -> float:
    """Interval modularity: sum of D(observed, expected) over communities."""
    if len(o_blocks) != len(e_blocks):
        raise ValueError("observed and expected block counts differ")
    total = 0.0
    for o, e in zip(o_blocks, e_blocks):
        total += signed_diff(o, e)
    return total


def dq_interval(q_new: float, q_last: float) -> float:
    """Interval modularity gain. Only the full difference is valid: the
    scalar reduction to 2(o_rs - e_rs) does not survive interval
    arithmetic."""
    return q_new - q_last


def _diag_blocks_adjusted(
    blocks: Sequence[Sequence[Interval]],
) -> tuple[list[Interval], list[Interval]]:
    """(observed diagonal, adjusted expected diagonal) of a block matrix."""
    q = len(blocks)
    s = []
    for r in range(q):
        acc = ZERO
        for b in blocks[r]:
            acc = acc + b
        s.append(acc)
    e_blocks = [_adjusted_expected(s, r, r) for r in range(q)]
    o_blocks = [blocks[r][r] for r in range(q)]
    return o_blocks, e_blocks


def q_interval_communities(
    weights: Sequence[Sequence[Interval]], comms: Sequence[Sequence[int]]
) -> float:
    """Interval modularity (adjusted expectations) over explicit member lists.

    Communities are collapsed by interval summation and the adjusted
    expectations are recomputed from scratch at that level, so the value
    of a partition equals the value of its aggregated network under
    singleton communities.
    """
    o_blocks, e_blocks = _diag_blocks_adjusted(_aggregate_interval(weights, comms))
    return q_interval(o_blocks, e_blocks)


def q_interval_adjusted(net: IWNetwork, p: Partition) -> float:
    """Interval modularity of a partition under adjusted expectations."""
    return q_interval_communities(net.weights, p.communities)


def _q_max_interval_blocks(blocks: Sequence[Sequence[Interval]]) -> float:
    total = ZERO
    for row in blocks:
        for w in row:
            total = total + w
    _, e_blocks = _diag_blocks_adjusted(blocks)
    e_sum = ZERO
    for e in e_blocks:
        e_sum = e_sum + e
    return signed_diff(total, e_sum)


def q_max_interval_adjusted(net: IWNetwork, p: Partition) -> float:
    """Interval normalization denominator D([2w_lo, 2w_hi], sum e_rr),
    evaluated on the aggregated network of the partition."""
    agg = aggregate_sum(net, p)
    return _q_max_interval_blocks(agg.weights)


def q_max_scalar(mid: Matrix, p: Partition) -> float:
    """Scalar normalization denominator 2w - sum of expected diagonal blocks."""
    return _q_max_scalar_blocks(_aggregate_scalar(mid, p.communities))


def q_norm_interval(net: IWNetwork, p: Partition, method: str = "cl") -> float:
    """Normalized interval modularity Q / D([2w_lo, 2w_hi], sum e_rr).

    Both numerator and denominator are evaluated on the aggregated
    network of the partition (the level at which Q itself is defined).
    ``method`` is "cl" (interval-sum aggregation, adjusted interval
    expectations) or "hl" (min-max aggregation, midpoint expectations).
    """
    if method == "cl":
        agg = aggregate_sum(net, p)
        singles = [[r] for r in range(agg.n)]
        q = q_interval_communities(agg.weights, singles)
        q_max = _q_max_interval_blocks(agg.weights)
    elif method == "hl":
        agg = aggregate_minmax(net, p)
        blocks = agg.midpoints()
        q = _q_scalar_blocks(blocks)
        q_max = _q_max_scalar_blocks(blocks)
    else:
        raise ValueError(f"unknown method {method!r}")
    if q_max == 0:
        raise DegenerateDenominator("Q_max is zero")
    return q / q_max
