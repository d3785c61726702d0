"""Gadget constructions mapping between domination-style problems.

Each builder takes a source graph G on vertices 0..n-1 and produces a gadget
graph H together with a role map tying every H-vertex back to its origin.
Original vertices keep their ids; gadget vertices are appended block by block
(one block per role tag, index-ascending inside a block), so the numbering is
deterministic and stable.

The five kinds:

  GP4        a 4-edge path hung off every vertex; relates total domination
             of the source to total domination of H, while H's semitotal
             number is always 2n.
  BIPARTITE  a 5-vertex path x y z u w per vertex, attached via z; relates
             domination of G to semitotal domination of H (offset 2n).
  SPLIT      for split graphs: pendants x_i/y_j folded into an enlarged
             clique plus a 5-vertex anchor {w,z,r,s,t}; offset 2.
  LN         one leaf per vertex plus a shared hub y and pendant z; relates
             domination of G to semitotal domination of H (offset 1).
  APX        a 4-cycle-with-pendant block per vertex and a subdivision
             vertex per edge; relates vertex cover of G to semitotal
             domination of H (offset 2n).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from .domination import DominationKind, exact_min, verify
from .errors import InfeasibleError, SizeCapError
from .graph import Graph, SplitPartition, check_vertex_set, is_connected

Role = tuple

ORACLE_CAPS = {
    "GP4": 4,
    "BIPARTITE": 4,
    "SPLIT": 6,
    "LN": 6,
    "APX": 3,
}
APX_EDGE_CAP = 3


class GadgetKind(enum.Enum):
    GP4 = "GP4"
    BIPARTITE = "BIPARTITE"
    SPLIT = "SPLIT"
    LN = "LN"
    APX = "APX"


@dataclass(frozen=True)
class GadgetOutput:
    h: Graph
    kind: GadgetKind
    roles: dict[int, Role]
    source_size: int
    source_edges: tuple[tuple[int, int], ...]
    partition: SplitPartition | None = None

    def vertices_with_tag(self, tag: str) -> list[int]:
        return sorted(v for v, role in self.roles.items() if role[0] == tag)


@dataclass(frozen=True)
class ReductionReport:
    kind: GadgetKind
    holds: bool
    details: dict[str, int]


def _require_connected(g: Graph) -> None:
    if g.n < 1:
        raise ValueError("source graph is empty")
    if not is_connected(g):
        raise ValueError("source graph must be connected")


def build_gadget(g: Graph, kind: GadgetKind,
                 partition: SplitPartition | None = None) -> GadgetOutput:
    """Construct the gadget graph H of the given kind from g."""
    _require_connected(g)
    n = g.n
    edges = sorted(g.edges)
    roles: dict[int, Role] = {v: ("original", v) for v in range(n)}

    if kind is GadgetKind.GP4:
        w, x, y, z = (lambda i: n + i), (lambda i: 2 * n + i), (lambda i: 3 * n + i), (lambda i: 4 * n + i)
        he = list(edges)
        for i in range(n):
            roles[w(i)] = ("w", i)
            roles[x(i)] = ("x", i)
            roles[y(i)] = ("y", i)
            roles[z(i)] = ("z", i)
            he += [(i, w(i)), (w(i), x(i)), (x(i), y(i)), (y(i), z(i))]
        h = Graph(5 * n, he)

    elif kind is GadgetKind.BIPARTITE:
        if n < 2:
            raise ValueError("bipartite gadget needs a non-trivial source (n >= 2)")
        x, y, z = (lambda i: n + i), (lambda i: 2 * n + i), (lambda i: 3 * n + i)
        u, w = (lambda i: 4 * n + i), (lambda i: 5 * n + i)
        he = list(edges)
        for i in range(n):
            roles[x(i)] = ("x", i)
            roles[y(i)] = ("y", i)
            roles[z(i)] = ("z", i)
            roles[u(i)] = ("u", i)
            roles[w(i)] = ("w", i)
            he += [(x(i), y(i)), (y(i), z(i)), (z(i), u(i)), (u(i), w(i)), (i, z(i))]
        h = Graph(6 * n, he)

    elif kind is GadgetKind.SPLIT:
        if partition is None:
            raise ValueError("split gadget needs a split partition")
        partition.validate(g)
        clique = sorted(partition.clique)
        indep = sorted(partition.independent)
        p, q = len(clique), len(indep)
        xs = {clique[i]: n + i for i in range(p)}
        ys = {indep[j]: n + p + j for j in range(q)}
        w, z, r, s, t = 2 * n, 2 * n + 1, 2 * n + 2, 2 * n + 3, 2 * n + 4
        for v, xid in xs.items():
            roles[xid] = ("x", v)
        for v, yid in ys.items():
            roles[yid] = ("y", v)
        roles[w] = ("w", None)
        roles[z] = ("z", None)
        roles[r] = ("r", None)
        roles[s] = ("s", None)
        roles[t] = ("t", None)
        he = set(edges)
        clique_h = clique + sorted(ys.values()) + [s, w]
        for a, b in itertools.combinations(sorted(clique_h), 2):
            he.add((a, b))
        for v, xid in xs.items():
            he.add((v, xid))
            he.add((xid, w))
        for v, yid in ys.items():
            he.add((v, yid))
            he.add((yid, t))
        he.update([(r, s), (s, t), (w, z)])
        h = Graph(2 * n + 5, sorted(he))

    elif kind is GadgetKind.LN:
        x = lambda i: n + i
        y, z = 2 * n, 2 * n + 1
        he = list(edges)
        for i in range(n):
            roles[x(i)] = ("x", i)
            he += [(i, x(i)), (x(i), y)]
        roles[y] = ("y", None)
        roles[z] = ("z", None)
        he.append((y, z))
        h = Graph(2 * n + 2, he)

    elif kind is GadgetKind.APX:
        u, x, y = (lambda i: n + i), (lambda i: 2 * n + i), (lambda i: 3 * n + i)
        z, w = (lambda i: 4 * n + i), (lambda i: 5 * n + i)
        he = []
        for i in range(n):
            roles[u(i)] = ("u", i)
            roles[x(i)] = ("x", i)
            roles[y(i)] = ("y", i)
            roles[z(i)] = ("z", i)
            roles[w(i)] = ("w", i)
            he += [(i, u(i)), (u(i), w(i)), (u(i), x(i)), (x(i), y(i)),
                   (y(i), z(i)), (z(i), u(i))]
        for idx, (a, b) in enumerate(edges):
            ev = 6 * n + idx
            roles[ev] = ("edge", idx)
            he += [(a, ev), (b, ev)]
        h = Graph(6 * n + len(edges), he)

    else:
        raise ValueError(f"unknown gadget kind: {kind}")

    return GadgetOutput(h=h, kind=kind, roles=roles, source_size=n,
                        source_edges=tuple(edges), partition=partition)


def _source_graph(go: GadgetOutput) -> Graph:
    return Graph(go.source_size, go.source_edges)


def _is_vertex_cover(go: GadgetOutput, members: set[int]) -> bool:
    return all(a in members or b in members for a, b in go.source_edges)


def extend_solution(go: GadgetOutput, d_g) -> tuple[int, ...]:
    """Lift a source solution to a verified solution on the gadget graph H.

    Expects a dominating set of G (BIPARTITE, SPLIT, LN), a total dominating
    set (GP4) or a vertex cover (APX); the output then satisfies TOTAL on H
    for GP4 and SEMITOTAL on H for the other kinds.
    """
    g = _source_graph(go)
    members = set(check_vertex_set(g, d_g))
    n = go.source_size
    kind = go.kind
    if kind is GadgetKind.GP4:
        if not verify(g, members, DominationKind.TOTAL).valid:
            raise ValueError("d_g is not a total dominating set of the source")
        # x_i and y_i dominate the whole pendant path totally (w_i would
        # leave y_i without a neighbor in the set)
        extra = [2 * n + i for i in range(n)] + [3 * n + i for i in range(n)]
    elif kind is GadgetKind.APX:
        if not _is_vertex_cover(go, members):
            raise ValueError("d_g is not a vertex cover of the source")
        extra = [n + i for i in range(n)] + [3 * n + i for i in range(n)]  # u_i, y_i
    else:
        if not verify(g, members, DominationKind.DOMINATING).valid:
            raise ValueError("d_g is not a dominating set of the source")
        if kind is GadgetKind.BIPARTITE:
            extra = [4 * n + i for i in range(n)] + [2 * n + i for i in range(n)]  # u_i, y_i
        elif kind is GadgetKind.SPLIT:
            extra = [2 * n, 2 * n + 3]  # w, s
        else:  # LN
            extra = [2 * n]  # y
    return tuple(sorted(members | set(extra)))


def extract_solution(go: GadgetOutput, d_h) -> tuple[int, ...]:
    """Project a gadget solution back to a source solution.

    Verifies d_h on H first (TOTAL for GP4, SEMITOTAL otherwise), then
    applies the role-wise replacements; where a replacement allows a choice,
    the smallest eligible id is taken. The result is a dominating set
    (BIPARTITE, SPLIT, LN), a total dominating set (GP4) or a vertex cover
    (APX) of the source, no larger than |d_h| minus the gadget overhead.
    """
    kind = go.kind
    need = DominationKind.TOTAL if kind is GadgetKind.GP4 else DominationKind.SEMITOTAL
    members = set(check_vertex_set(go.h, d_h))
    if not verify(go.h, members, need).valid:
        raise ValueError("d_h is not valid on the gadget graph")
    g = _source_graph(go)
    n = go.source_size

    if kind is GadgetKind.BIPARTITE:
        out = {v for v in members if v < n}
        out.update(i for i in range(n) if 3 * n + i in members)  # z_i -> v_i
        return tuple(sorted(out))

    if kind is GadgetKind.GP4:
        out = {v for v in members if v < n}
        for i in range(n):
            if n + i in members:  # w_i -> smallest source neighbor of v_i
                nb = g.neighbors(i)
                if not nb:
                    raise InfeasibleError("source vertex has no neighbor to stand in for its pendant")
                out.add(nb[0])
        return tuple(sorted(out))

    if kind is GadgetKind.LN:
        out = {v for v in members if v < n}
        out.update(i for i in range(n) if n + i in members)  # x_i -> v_i
        return tuple(sorted(out))

    if kind is GadgetKind.APX:
        out = {v for v in members if v < n}
        for idx, (a, b) in enumerate(go.source_edges):
            if 6 * n + idx in members:  # edge vertex -> smaller endpoint
                out.add(min(a, b))
        return tuple(sorted(out))

    # SPLIT
    clique = sorted(go.partition.clique)
    indep = sorted(go.partition.independent)
    p = len(clique)
    xs = {n + i: clique[i] for i in range(p)}
    ys = {n + p + j: indep[j] for j in range(len(indep))}
    out = {v for v in members if v < n}
    out.update(xs[v] for v in members if v in xs)
    out.update(ys[v] for v in members if v in ys)
    if not verify(g, out, DominationKind.DOMINATING).valid:
        # Only clique vertices without independent neighbors can be left
        # uncovered, and only when no clique vertex was selected; swapping
        # one independent member for one of its clique neighbors fixes every
        # such vertex without changing the cardinality.
        indep_members = sorted(out & set(indep))
        if not indep_members:
            raise InfeasibleError("gadget solution cannot be projected: empty independent part")
        u_star = indep_members[0]
        k_star = min(g.neighbors(u_star))
        out.discard(u_star)
        out.add(k_star)
    return tuple(sorted(out))


def min_vertex_cover(g: Graph) -> tuple[int, ...]:
    """Exhaustive minimum vertex cover (lexicographically smallest optimum)."""
    edges = sorted(g.edges)
    if not edges:
        return ()
    for size in range(1, g.n + 1):
        for subset in itertools.combinations(range(g.n), size):
            chosen = set(subset)
            if all(a in chosen or b in chosen for a, b in edges):
                return subset
    return tuple(range(g.n))


def check_reduction(g: Graph, kind: GadgetKind,
                    partition: SplitPartition | None = None) -> ReductionReport:
    """Compare both sides of a gadget identity with the exact oracle.

    Size caps keep the brute force affordable; exceeding one raises
    SizeCapError.
    """
    cap = ORACLE_CAPS[kind.value]
    if g.n > cap or (kind is GadgetKind.APX and g.m > APX_EDGE_CAP):
        raise SizeCapError(f"source too large for {kind.value} check (cap n<={cap})")
    go = build_gadget(g, kind, partition)
    h = go.h
    n = g.n
    details: dict[str, int] = {"n": n, "m": g.m, "h_n": h.n, "h_m": h.m}

    if kind is GadgetKind.GP4:
        semi_h = len(exact_min(h, DominationKind.SEMITOTAL))
        total_h = len(exact_min(h, DominationKind.TOTAL))
        total_g = len(exact_min(g, DominationKind.TOTAL))
        details.update(semitotal_h=semi_h, total_h=total_h, total_g=total_g)
        holds = semi_h == 2 * n and total_h == 2 * n + total_g
    elif kind is GadgetKind.BIPARTITE:
        semi_h = len(exact_min(h, DominationKind.SEMITOTAL))
        gamma_g = len(exact_min(g, DominationKind.DOMINATING))
        details.update(semitotal_h=semi_h, gamma_g=gamma_g)
        holds = semi_h == 2 * n + gamma_g
    elif kind is GadgetKind.SPLIT:
        semi_h = len(exact_min(h, DominationKind.SEMITOTAL))
        gamma_g = len(exact_min(g, DominationKind.DOMINATING))
        details.update(semitotal_h=semi_h, gamma_g=gamma_g)
        holds = semi_h == gamma_g + 2
    elif kind is GadgetKind.APX:
        semi_h = len(exact_min(h, DominationKind.SEMITOTAL))
        tau_g = len(min_vertex_cover(g))
        details.update(semitotal_h=semi_h, tau_g=tau_g)
        holds = semi_h == tau_g + 2 * n
    else:  # LN
        opt_h = exact_min(h, DominationKind.SEMITOTAL)
        gamma_g = len(exact_min(g, DominationKind.DOMINATING))
        extracted = extract_solution(go, opt_h)
        details.update(semitotal_h=len(opt_h), gamma_g=gamma_g)
        holds = (len(opt_h) <= gamma_g + 1
                 and verify(g, extracted, DominationKind.DOMINATING).valid)
    return ReductionReport(kind=kind, holds=holds, details=details)
