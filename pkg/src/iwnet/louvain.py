"""Louvain driver for interval-weighted networks.

Three strategies share one greedy two-phase loop:

* ``classic-interval`` (CL): gains are full interval-modularity
  differences under pairwise-adjusted expectations (the reduced local
  form is not valid for intervals), and communities aggregate by
  interval summation;
* ``hybrid`` (HL): gains use the reduced scalar form on the current
  network's midpoints, and communities aggregate by the min-max
  envelope, after which the modularity is recomputed (it may drop);
* ``midpoint``: the degenerate baseline, scalar gains with sum
  aggregation on the midpoint projection of the input.

Vertices are swept in index order and every decision is deterministic,
so identical inputs produce byte-identical traces.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from typing import ClassVar, Sequence

from .errors import EmptyNetwork, IterationLimit, ZeroTotalWeight
from .interval import Interval
from .modularity import (
    q_interval_communities,
    q_max_interval_adjusted,
    q_max_scalar,
    q_scalar_communities,
)
from .network import IWNetwork, aggregate_minmax, aggregate_sum, format_matrix
from .partition import Partition

__all__ = [
    "Strategy",
    "CLASSIC_INTERVAL",
    "HYBRID",
    "MIDPOINT",
    "PassRecord",
    "LouvainRun",
    "run",
    "evaluate_moves",
    "compose_partitions",
    "emit_trace",
]

SWEEP_LIMIT = 100


@dataclass(frozen=True)
class Strategy:
    """Pairing of a phase-1 gain evaluator with a phase-2 aggregation rule."""

    name: str

    _NAMES: ClassVar[dict[str, str]] = {
        "cl": "classic-interval",
        "classic-interval": "classic-interval",
        "hl": "hybrid",
        "hybrid": "hybrid",
        "midpoint": "midpoint",
    }

    def __post_init__(self):
        if self.name not in ("classic-interval", "hybrid", "midpoint"):
            raise ValueError(f"unknown strategy {self.name!r}")

    @classmethod
    def from_name(cls, name: str) -> "Strategy":
        try:
            return cls(cls._NAMES[name])
        except KeyError:
            raise ValueError(f"unknown strategy {name!r}") from None

    @property
    def code(self) -> str:
        return {"classic-interval": "cl", "hybrid": "hl", "midpoint": "midpoint"}[
            self.name
        ]

    @property
    def interval_gain(self) -> bool:
        return self.name == "classic-interval"

    @property
    def aggregation(self) -> str:
        return "minmax" if self.name == "hybrid" else "sum"


CLASSIC_INTERVAL = Strategy("classic-interval")
HYBRID = Strategy("hybrid")
MIDPOINT = Strategy("midpoint")


@dataclass(frozen=True)
class PassRecord:
    """Outcome of one optimization+aggregation pass."""

    number: int
    iterations: int
    partition: Partition  # partition of the pass's input network
    modularity: float  # reported at pass end (post-aggregation for hybrid)
    aggregated: IWNetwork  # input network itself for a no-change pass
    changed: bool


@dataclass(frozen=True)
class LouvainRun:
    """Full hierarchy produced by one driver run."""

    strategy: Strategy
    network: IWNetwork
    passes: tuple[PassRecord, ...]
    final_partition: Partition  # on original vertices
    final_network: IWNetwork
    final_q: float
    final_q_norm: float  # NaN when Q_max is zero
    final_q_max: float
    trace: tuple[str, ...]


class _PassState:
    """Mutable community bookkeeping for one optimization phase."""

    def __init__(self, net: IWNetwork, strategy: Strategy, partition: Partition | None = None):
        self.net = net
        self.strategy = strategy
        n = net.n
        if partition is None:
            partition = Partition.singletons(n)
        self.comm_of = list(partition.assignment)
        n_comms = partition.n_communities
        self.members: list[list[int]] = [[] for _ in range(n_comms)]
        for v, c in enumerate(self.comm_of):
            self.members[c].append(v)
        self.neigh = [net.neighbors(i) for i in range(n)]
        if not strategy.interval_gain:
            self.mid = net.midpoints()
            self.s = [sum(row) for row in self.mid]
            self.two_w = sum(self.s)

    def label(self, cid: int) -> str:
        return ",".join(self.net.labels[v] for v in self.members[cid])

    def comms(self) -> list[list[int]]:
        return [m for m in self.members if m]

    def _comms_with_isolated(self, v: int) -> list[list[int]]:
        return self.comms() + [[v]]

    def _comms_with(self, v: int, cid: int) -> list[list[int]]:
        out = []
        for c, m in enumerate(self.members):
            if c == cid:
                placed = list(m)
                bisect.insort(placed, v)
                out.append(placed)
            elif m:
                out.append(m)
        return out

    def _gain_scalar(self, v: int, cid: int) -> float:
        # reduced form 2(o_{v,C} - s_v s_C / 2w); v is already removed
        o = 0.0
        se = 0.0
        for u in self.members[cid]:
            o += self.mid[v][u]
            se += self.s[u]
        return 2.0 * (o - self.s[v] * se / self.two_w)

    def evaluate(self, v: int) -> tuple[int, str, list[int], dict[int, float], float]:
        """Isolate v and price every candidate move.

        Returns (own community id, its label before removal, candidate ids
        in first-neighbor-appearance order, gains, gain of returning home).
        The caller must place v afterwards via ``place``.
        """
        own = self.comm_of[v]
        own_label = self.label(own)
        self.members[own].remove(v)
        self.comm_of[v] = -1

        cand_ids: list[int] = []
        for u in self.neigh[v]:
            c = own if u == v else self.comm_of[u]
            if c not in cand_ids:
                cand_ids.append(c)

        gains: dict[int, float] = {}
        if self.strategy.interval_gain:
            weights = self.net.weights
            q_base = q_interval_communities(weights, self._comms_with_isolated(v))
            for c in cand_ids:
                if c == own and not self.members[own]:
                    gains[c] = 0.0  # re-entering an emptied community is a no-op
                else:
                    gains[c] = (
                        q_interval_communities(weights, self._comms_with(v, c)) - q_base
                    )
            if own in gains:
                gain_own = gains[own]
            elif not self.members[own]:
                gain_own = 0.0
            else:
                gain_own = (
                    q_interval_communities(weights, self._comms_with(v, own)) - q_base
                )
        else:
            for c in cand_ids:
                gains[c] = self._gain_scalar(v, c)
            gain_own = gains[own] if own in gains else self._gain_scalar(v, own)
        return own, own_label, cand_ids, gains, gain_own

    def place(self, v: int, cid: int) -> None:
        bisect.insort(self.members[cid], v)
        self.comm_of[v] = cid

    def q_current(self) -> float:
        if self.strategy.interval_gain:
            return q_interval_communities(self.net.weights, self.comms())
        return q_scalar_communities(self.mid, self.comms())


def _decide(own: int, cand_ids: Sequence[int], gains: dict[int, float], gain_own: float) -> int | None:
    """Target community for a strictly improving move, else None (keep).

    A move needs a strictly positive gain that strictly beats returning to
    the former community; gain ties among candidates go to the smallest
    community id, and a tie with the former community keeps the vertex.
    """
    best_c = None
    best_gain = 0.0
    for c in sorted(cand_ids):
        if c == own:
            continue
        g = gains[c]
        if g > 0.0 and g > gain_own and (best_c is None or g > best_gain):
            best_c = c
            best_gain = g
    return best_c


def _fmt_gain(gain: float) -> str:
    if gain == 0.0:
        mark = "0"
    elif gain > 0.0:
        mark = "+"
    else:
        mark = "-"
    sign = "-" if gain < 0.0 else "+"
    return f"gain={sign}{abs(gain):.3f} ({mark})"


def _optimize(state: _PassState, lines: list[str]) -> tuple[int, bool, float]:
    """Phase 1: greedy sweeps until one completes without a move.

    Returns (sweeps performed, whether any move happened, end modularity).
    """
    n = state.net.n
    iterations = 0
    any_move = False
    q_now = math.nan
    for _ in range(SWEEP_LIMIT):
        sweep_moved = False
        for v in range(n):
            vlabel = state.net.labels[v]
            own, own_label, cand_ids, gains, gain_own = state.evaluate(v)
            for c in cand_ids:
                clabel = own_label if c == own else state.label(c)
                lines.append(f"\tTry {vlabel} -> {clabel:<15} | {_fmt_gain(gains[c])}")
            target = _decide(own, cand_ids, gains, gain_own)
            if target is None:
                state.place(v, own)
                lines.append(f"\tKeep vertex {vlabel} at community {own_label}")
            else:
                target_label = state.label(target)
                state.place(v, target)
                lines.append(f"\tMove {vlabel} -> {target_label}")
                sweep_moved = True
                any_move = True
        iterations += 1
        q_now = state.q_current()
        lines.append(f"Iteration {iterations} Modularity={q_now:.3f}")
        if not sweep_moved:
            return iterations, any_move, q_now
    raise IterationLimit(f"no convergence after {SWEEP_LIMIT} sweeps")


def _degenerate_projection(net: IWNetwork) -> IWNetwork:
    w = tuple(
        tuple(Interval(c.midpoint, c.midpoint) for c in row) for row in net.weights
    )
    return IWNetwork(net.labels, w)


def _pass_end_q(strategy: Strategy, net: IWNetwork) -> float:
    singles = [[r] for r in range(net.n)]
    if strategy.interval_gain:
        return q_interval_communities(net.weights, singles)
    return q_scalar_communities(net.midpoints(), singles)


def _q_max(strategy: Strategy, net: IWNetwork) -> float:
    p = Partition.singletons(net.n)
    if strategy.interval_gain:
        return q_max_interval_adjusted(net, p)
    return q_max_scalar(net.midpoints(), p)


def run(net: IWNetwork, strategy: Strategy | str = CLASSIC_INTERVAL) -> LouvainRun:
    """Run the Louvain hierarchy to convergence.

    One pass = greedy vertex sweeps (phase 1) followed by aggregation
    (phase 2); the run ends when a pass moves nothing. The terminal
    no-change pass is recorded alongside the productive passes.
    """
    if isinstance(strategy, str):
        strategy = Strategy.from_name(strategy)
    if net.n == 0:
        raise EmptyNetwork("cannot run on an empty network")
    if net.total_weight().hi <= 0:
        raise ZeroTotalWeight("network has no weight")

    work = _degenerate_projection(net) if strategy.name == "midpoint" else net
    lines: list[str] = ["Initial Interval-Weighted Network:"]
    lines += format_matrix(work)
    lines.append("")
    lines.append(f"* Initial Modularity={_pass_end_q(strategy, work):.3f}")

    passes: list[PassRecord] = []
    cur = work
    pass_no = 0
    while True:
        pass_no += 1
        lines.append(f"* Begin Pass number {pass_no}")
        state = _PassState(cur, strategy)
        iterations, any_move, q_phase = _optimize(state, lines)
        if not any_move:
            lines.append(f"* End Pass number {pass_no} -- no change")
            passes.append(
                PassRecord(
                    pass_no, iterations, Partition.singletons(cur.n), q_phase, cur, False
                )
            )
            break
        p = Partition.from_communities(state.comms(), cur.n)
        if strategy.aggregation == "minmax":
            agg = aggregate_minmax(cur, p)
        else:
            agg = aggregate_sum(cur, p)
        pass_q = _pass_end_q(strategy, agg)
        lines.append("")
        lines.append("New network: ---------------")
        lines += format_matrix(agg)
        lines.append(
            f"* End Pass number {pass_no} Modularity={pass_q:.3f} "
            f"Communities={' / '.join(agg.labels)}"
        )
        lines.append("---------------------------")
        passes.append(PassRecord(pass_no, iterations, p, pass_q, agg, True))
        if agg.n == cur.n:
            # phase 1 moved vertices without shrinking the network; repeating
            # the pass would replay the same decisions forever
            cur = agg
            break
        cur = agg

    final_q = passes[-1].modularity
    q_max = _q_max(strategy, cur)
    q_norm = final_q / q_max if q_max != 0.0 else math.nan
    final_partition = _compose(passes)

    lines.append("")
    lines.append(f"* Final communities: {' / '.join(cur.labels)} (n={cur.n})")
    prefix = "Hybrid - Before Normalized" if strategy.name == "hybrid" else "Before Normalized"
    lines.append(f"* {prefix}: {final_q:.3f}")
    lines.append(f"* Normalized modularity: {q_norm:.3f} (Qmax={q_max:.6f})")
    lines.append("---------------------------")
    lines.append("Final Interval-weighted network:")
    lines.append("")
    lines += format_matrix(cur)

    return LouvainRun(
        strategy=strategy,
        network=net,
        passes=tuple(passes),
        final_partition=final_partition,
        final_network=cur,
        final_q=final_q,
        final_q_norm=q_norm,
        final_q_max=q_max,
        trace=tuple(lines),
    )


def evaluate_moves(
    net: IWNetwork,
    p: Partition,
    vertex: int,
    strategy: Strategy | str = CLASSIC_INTERVAL,
) -> list[tuple[int, float]]:
    """Candidate (community id, gain) list for moving one vertex.

    Candidates are the communities of the vertex's topological neighbors,
    in first-appearance order along the neighbor scan; the vertex is
    isolated from its own community for the evaluation and put back
    afterwards.
    """
    if isinstance(strategy, str):
        strategy = Strategy.from_name(strategy)
    state = _PassState(net, strategy, partition=p)
    own, _, cand_ids, gains, _ = state.evaluate(vertex)
    state.place(vertex, own)
    return [(c, gains[c]) for c in cand_ids]


def _compose(passes: Sequence[PassRecord]) -> Partition:
    p = passes[0].partition
    for rec in passes[1:]:
        p = p.compose(rec.partition.assignment)
    return p


def compose_partitions(run: LouvainRun) -> Partition:
    """Final communities expressed on the original vertices."""
    return _compose(run.passes)


def emit_trace(run: LouvainRun) -> str:
    """Human-readable log of the whole run (one string, newline-joined)."""
    return "\n".join(run.trace) + "\n"
