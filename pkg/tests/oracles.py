"""Independent brute-force oracles used to cross-check the library.

Everything here is computed straight from the definitions with its own BFS
and subset enumeration, deliberately not sharing code with the solvers under
test.
"""

import itertools
from collections import deque

INF = float("inf")


def adjacency(n, edges):
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def bfs_all(adj, src):
    dist = {src: 0}
    queue = deque([src])
    while queue:
        w = queue.popleft()
        for x in adj[w]:
            if x not in dist:
                dist[x] = dist[w] + 1
                queue.append(x)
    return dist


def is_valid_set(n, edges, members, kind):
    """kind in {'dominating', 'total', 'semitotal'}, straight from definitions."""
    adj = adjacency(n, edges)
    sset = set(members)
    if kind == "total":
        return all(adj[v] & sset for v in range(n))
    for v in range(n):
        if v not in sset and not adj[v] & sset:
            return False
    if kind == "semitotal":
        for v in sset:
            dist = bfs_all(adj, v)
            if not any(dist.get(w, INF) <= 2 for w in sset if w != v):
                return False
    return True


def brute_min(n, edges, kind):
    """Smallest valid set under the cardinality-then-lexicographic order."""
    for k in range(1, n + 1):
        for subset in itertools.combinations(range(n), k):
            if is_valid_set(n, edges, subset, kind):
                return subset
    return None


def brute_min_cover(universe, family_sets):
    """Minimum number of sets covering the universe; None if impossible."""
    target = set(universe)
    if not target:
        return 0
    for k in range(1, len(family_sets) + 1):
        for combo in itertools.combinations(family_sets, k):
            if set().union(*combo) >= target:
                return k
    return None


def brute_min_vertex_cover_size(n, edges):
    if not edges:
        return 0
    for k in range(1, n + 1):
        for subset in itertools.combinations(range(n), k):
            chosen = set(subset)
            if all(u in chosen or v in chosen for u, v in edges):
                return k
    return n


def brute_overlap_arcs(intervals):
    """Arc set of the overlap digraph, recomputed from scratch.

    `intervals` are the canonical model's (a, b) pairs. Sentinels are placed
    at coordinates different from the library's; the construction only looks
    at endpoint order, so the arc sets must still agree. Returns
    (vertices, {(i, j): class}) with class in {"A1", "A2_MARKED",
    "A2_UNMARKED"} and indices 1..n for model intervals.
    """
    lo = min(a for a, _ in intervals)
    hi = max(b for _, b in intervals)
    ivs = [(lo - 200, lo - 100)] + list(intervals) + [(hi + 100, hi + 200)]
    total = len(ivs)

    def contained(k):
        ak, bk = ivs[k]
        return any(h != k and ivs[h][0] < ak and bk < ivs[h][1] for h in range(total))

    verts = [k for k in range(total) if not contained(k)]
    arcs = {}
    for i in verts:
        for j in verts:
            if not i < j:
                continue
            ai, bi = ivs[i]
            aj, bj = ivs[j]
            if ai <= bj and aj <= bi:  # overlapping
                if 1 <= i and j <= total - 2:
                    arcs[(i, j)] = "A1"
            else:  # disjoint, bi < aj
                gap = any(bi < ivs[h][0] and ivs[h][1] < aj for h in range(total))
                if not gap:
                    spans = any(h not in (i, j)
                                and ivs[h][0] < bi and aj < ivs[h][1]
                                for h in range(total))
                    arcs[(i, j)] = "A2_MARKED" if spans else "A2_UNMARKED"
    return verts, arcs
