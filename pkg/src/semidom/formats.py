"""Text file formats: edge lists, interval models, vertex sets, partitions.

All formats are line-based; blank lines and lines starting with `#` are
ignored. Edge lists start with `n m` followed by m lines `u v` (0-based,
u < v). Interval files start with `n` followed by n lines `a b` with decimal
endpoints. Vertex-set files are whitespace-separated ids. Partition files
hold two labelled lines, `clique ...ids` and `independent ...ids`.
"""

from __future__ import annotations

from fractions import Fraction

from .graph import Graph, SplitPartition
from .intervals import IntervalModel


def _data_lines(text: str) -> list[list[str]]:
    out = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        out.append(line.split())
    return out


def parse_edgelist(text: str) -> Graph:
    lines = _data_lines(text)
    if not lines:
        raise ValueError("empty edge-list file")
    head = lines[0]
    if len(head) != 2:
        raise ValueError(f"expected header 'n m', got {' '.join(head)!r}")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for parts in lines[1:]:
        if len(parts) != 2:
            raise ValueError(f"malformed edge line: {' '.join(parts)!r}")
        u, v = int(parts[0]), int(parts[1])
        if not u < v:
            raise ValueError(f"edges must be written u v with u < v, got {u} {v}")
        edges.append((u, v))
    return Graph(n, edges)


def write_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def _parse_number(token: str) -> int | Fraction:
    try:
        return int(token)
    except ValueError:
        return Fraction(token)


def _format_number(x) -> str:
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction) and x.denominator == 1:
        return str(x.numerator)
    return str(float(x))


def parse_intervals(text: str) -> IntervalModel:
    lines = _data_lines(text)
    if not lines:
        raise ValueError("empty interval file")
    if len(lines[0]) != 1:
        raise ValueError(f"expected header 'n', got {' '.join(lines[0])!r}")
    n = int(lines[0][0])
    if len(lines) - 1 != n:
        raise ValueError(f"expected {n} interval lines, found {len(lines) - 1}")
    pairs = []
    for parts in lines[1:]:
        if len(parts) != 2:
            raise ValueError(f"malformed interval line: {' '.join(parts)!r}")
        pairs.append((_parse_number(parts[0]), _parse_number(parts[1])))
    return IntervalModel(tuple(pairs))


def write_intervals(m: IntervalModel) -> str:
    lines = [str(m.n)]
    lines += [f"{_format_number(a)} {_format_number(b)}" for a, b in m.intervals]
    return "\n".join(lines) + "\n"


def parse_vertex_set(text: str) -> list[int]:
    ids = []
    for parts in _data_lines(text):
        ids.extend(int(tok) for tok in parts)
    return ids


def write_vertex_set(members) -> str:
    return " ".join(str(v) for v in sorted(members)) + "\n"


def parse_partition(text: str) -> SplitPartition:
    clique: list[int] | None = None
    indep: list[int] | None = None
    for parts in _data_lines(text):
        label, ids = parts[0].lower(), [int(tok) for tok in parts[1:]]
        if label == "clique":
            clique = ids
        elif label == "independent":
            indep = ids
        else:
            raise ValueError(f"unknown partition label: {label!r}")
    if clique is None:
        raise ValueError("partition file is missing the 'clique' line")
    return SplitPartition(clique=tuple(sorted(clique)),
                          independent=tuple(sorted(indep or [])))


def write_partition(part: SplitPartition) -> str:
    return ("clique " + " ".join(str(v) for v in part.clique) + "\n"
            + "independent " + " ".join(str(v) for v in part.independent) + "\n")
