"""Interval models and canonicalization.

An interval model is a family of closed real intervals; its intersection
graph has one vertex per interval and an edge where intervals meet (a shared
endpoint counts, the intervals being closed). Canonicalization rewrites the
endpoints as 2n pairwise-distinct integers without changing the intersection
graph, and sorts the intervals by left endpoint.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .graph import Graph

Number = int | float | Fraction


@dataclass(frozen=True)
class IntervalModel:
    """A family of closed intervals, indexed by vertex id.

    When `canonical` is true, all 2n endpoints are distinct integers and the
    intervals are sorted by increasing left endpoint; `perm` then maps each
    id of the model this one was canonicalized from to its new id (it is the
    identity permutation for models built canonical from scratch).
    """

    intervals: tuple[tuple[Number, Number], ...]
    canonical: bool = False
    perm: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        for k, (a, b) in enumerate(self.intervals):
            if a >= b:
                raise ValueError(f"degenerate interval {k}: [{a},{b}]")

    @property
    def n(self) -> int:
        return len(self.intervals)


def intersection_graph(m: IntervalModel) -> Graph:
    """Graph on interval ids with edges between intersecting intervals."""
    edges = []
    ivs = m.intervals
    for i in range(len(ivs)):
        ai, bi = ivs[i]
        for j in range(i + 1, len(ivs)):
            aj, bj = ivs[j]
            if ai <= bj and aj <= bi:
                edges.append((i, j))
    return Graph(len(ivs), edges)


def canonicalize_intervals(m: IntervalModel) -> IntervalModel:
    """Rewrite endpoints as distinct integers, preserving the intersection graph.

    All 2n endpoint events are sorted by value; at equal value a left
    endpoint precedes a right endpoint (so closed intervals that only touch
    stay intersecting), and ties within the same kind break by interval
    index. Event ranks become the new endpoints. The returned model is
    sorted by left endpoint and carries the id permutation.
    """
    n = m.n
    events = []
    for k, (a, b) in enumerate(m.intervals):
        events.append((a, 0, k))  # left endpoint
        events.append((b, 1, k))  # right endpoint
    events.sort()
    new = [[0, 0] for _ in range(n)]
    for rank, (_, kind, k) in enumerate(events):
        new[k][kind] = rank
    order = sorted(range(n), key=lambda k: new[k][0])
    perm = [0] * n
    for pos, k in enumerate(order):
        perm[k] = pos
    return IntervalModel(
        intervals=tuple((new[k][0], new[k][1]) for k in order),
        canonical=True,
        perm=tuple(perm),
    )


def ensure_canonical(m: IntervalModel) -> IntervalModel:
    """Canonical form of m, with perm mapping m's own ids to canonical ids.

    For an already-canonical input that mapping is the identity, whatever
    provenance permutation the model happens to carry.
    """
    if m.canonical:
        return IntervalModel(m.intervals, True, tuple(range(m.n)))
    return canonicalize_intervals(m)


def model_from_pairs(pairs: Iterable[tuple[Number, Number]]) -> IntervalModel:
    return IntervalModel(intervals=tuple((a, b) for a, b in pairs))
