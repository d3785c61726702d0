"""Seeded instance generators for tests, acceptance suites and benchmarks.

Randomness comes from a self-contained SplitMix64 stream rather than a
platform RNG, so the same seed yields bit-identical instances on every
machine and Python version. Golden tests pin the outputs.
"""

from __future__ import annotations

from .graph import Graph, SplitPartition, connected_components
from .intervals import IntervalModel, canonicalize_intervals
from . import reductions

_MASK64 = (1 << 64) - 1

NAMED_FAMILIES = ("path", "cycle", "star", "complete", "gp4")


class SplitMix64:
    """SplitMix64: state advances by the golden-gamma constant, output is the
    finalizer mix of the new state. Reference: Steele, Lea & Flood's
    splittable PRNG family (public-domain constants)."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        return (self.next_u64() >> 11) * (2.0 ** -53)

    def randrange(self, n: int) -> int:
        if n <= 0:
            raise ValueError("randrange needs a positive bound")
        return self.next_u64() % n

    def sample_without_replacement(self, bound: int, k: int) -> list[int]:
        """k distinct values from range(bound), via partial Fisher-Yates."""
        if k > bound:
            raise ValueError("sample larger than population")
        pool = list(range(bound))
        for i in range(k):
            j = i + self.randrange(bound - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]


def gen_connected_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi style graph, patched to connectivity with random bridges."""
    if n < 1:
        raise ValueError("need at least one vertex")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability out of range: {p}")
    rng = SplitMix64(seed)
    edges = set()
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    g = Graph(n, sorted(edges))
    comps = connected_components(g)
    while len(comps) > 1:
        a = comps[0][rng.randrange(len(comps[0]))]
        b = comps[1][rng.randrange(len(comps[1]))]
        edges.add((min(a, b), max(a, b)))
        g = Graph(n, sorted(edges))
        comps = connected_components(g)
    return g


def gen_interval_model(n: int, seed: int) -> IntervalModel:
    """n intervals with endpoints sampled from 4n distinct integers, canonicalized."""
    if n < 1:
        raise ValueError("need at least one interval")
    rng = SplitMix64(seed)
    vals = rng.sample_without_replacement(4 * n, 2 * n)
    pairs = []
    for i in range(n):
        a, b = vals[2 * i], vals[2 * i + 1]
        pairs.append((min(a, b), max(a, b)))
    canon = canonicalize_intervals(IntervalModel(tuple(pairs)))
    # the pre-canonicalization ids are internal; expose an identity mapping
    return IntervalModel(canon.intervals, True, tuple(range(n)))


def gen_split_graph(p_clique: int, q_ind: int, density: float,
                    seed: int) -> tuple[Graph, SplitPartition]:
    """Random split graph: clique 0..p-1, independent p..p+q-1, random cross
    edges, and every otherwise-isolated independent vertex attached to a
    random clique vertex."""
    if p_clique < 1:
        raise ValueError("clique part must be nonempty")
    if q_ind < 0:
        raise ValueError("independent part size must be nonnegative")
    if not 0.0 <= density <= 1.0:
        raise ValueError(f"density out of range: {density}")
    rng = SplitMix64(seed)
    n = p_clique + q_ind
    edges = set()
    for u in range(p_clique):
        for v in range(u + 1, p_clique):
            edges.add((u, v))
    for w in range(p_clique, n):
        for u in range(p_clique):
            if rng.random() < density:
                edges.add((u, w))
    for w in range(p_clique, n):
        if not any((u, w) in edges for u in range(p_clique)):
            edges.add((rng.randrange(p_clique), w))
    g = Graph(n, sorted(edges))
    part = SplitPartition(clique=tuple(range(p_clique)),
                          independent=tuple(range(p_clique, n)))
    return g, part


def gen_named(family: str, size: int, seed: int = 0) -> Graph:
    """Standard families; gp4 hangs a 4-edge path off every vertex of a
    random connected base of the given size."""
    if family == "path":
        if size < 1:
            raise ValueError("path needs size >= 1")
        return Graph(size, [(i, i + 1) for i in range(size - 1)])
    if family == "cycle":
        if size < 3:
            raise ValueError("cycle needs size >= 3")
        return Graph(size, [(i, i + 1) for i in range(size - 1)] + [(0, size - 1)])
    if family == "star":
        if size < 1:
            raise ValueError("star needs size >= 1")
        return Graph(size, [(0, i) for i in range(1, size)])
    if family == "complete":
        if size < 1:
            raise ValueError("complete graph needs size >= 1")
        return Graph(size, [(u, v) for u in range(size) for v in range(u + 1, size)])
    if family == "gp4":
        base = gen_connected_graph(size, 0.5, seed)
        return reductions.build_gadget(base, reductions.GadgetKind.GP4).h
    raise ValueError(f"unknown family: {family}")
