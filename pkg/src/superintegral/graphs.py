"""Commuting graphs and their clique structure."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .groups import FiniteGroup
from .structure import center


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected irreflexive graph; ``adjacency[i]`` is the neighbour bitmask of i."""

    vertex_count: int
    adjacency: tuple[int, ...]
    vertex_labels: tuple[int, ...] | None = None

    def __post_init__(self):
        if len(self.adjacency) != self.vertex_count:
            raise ValueError("adjacency length differs from vertex count")
        for i, row in enumerate(self.adjacency):
            if (row >> i) & 1:
                raise ValueError(f"loop at vertex {i}")
            for j in _bits(row):
                if not (self.adjacency[j] >> i) & 1:
                    raise ValueError(f"asymmetric edge {i}-{j}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[int] | None = None) -> "SimpleGraph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), tuple(labels) if labels is not None else None)

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adjacency[u] >> v) & 1 == 1

    def degree(self, v: int) -> int:
        return bin(self.adjacency[v]).count("1")

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in range(self.vertex_count)]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.vertex_count) for v in _bits(self.adjacency[u]) if u < v]

    def induced(self, vertices: Sequence[int]) -> "SimpleGraph":
        pos = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for w in _bits(self.adjacency[v]):
                if w in pos:
                    row |= 1 << pos[w]
            rows.append(row)
        labels = tuple(self.vertex_labels[v] for v in vertices) if self.vertex_labels else tuple(vertices)
        return SimpleGraph(len(vertices), tuple(rows), labels)

    def to_edge_list(self) -> str:
        """One ``u v`` line per edge, 0-based, u < v."""
        return "".join(f"{u} {v}\n" for u, v in self.edges())

    def to_adjacency_list(self) -> str:
        """One ``v: n1 n2 ...`` line per vertex."""
        return "".join(
            f"{v}:" + "".join(f" {w}" for w in _bits(self.adjacency[v])) + "\n" for v in range(self.vertex_count)
        )


def _bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def complete_graph(n: int) -> SimpleGraph:
    full = (1 << n) - 1
    return SimpleGraph(n, tuple(full & ~(1 << i) for i in range(n)))


@dataclass(frozen=True)
class CliqueDecomposition:
    """Multiset of (clique size, copies), distinct sizes sorted descending."""

    parts: tuple[tuple[int, int], ...]

    @classmethod
    def normalized(cls, parts: Iterable[tuple[int, int]]) -> "CliqueDecomposition":
        tally: Counter[int] = Counter()
        for size, count in parts:
            if size < 1 or count < 0:
                raise ValueError(f"invalid clique part K_{size} x {count}")
            tally[size] += count
        return cls(tuple((s, c) for s, c in sorted(tally.items(), reverse=True) if c > 0))

    @property
    def vertex_count(self) -> int:
        return sum(s * c for s, c in self.parts)

    @property
    def clique_count(self) -> int:
        return sum(c for _, c in self.parts)

    def __str__(self) -> str:
        return " + ".join(f"{c}K{s}" if c > 1 else f"K{s}" for s, c in self.parts) or "empty"


def disjoint_cliques(decomposition: CliqueDecomposition) -> SimpleGraph:
    """The graph l_1 K_{m_1} + ... realized on consecutive vertex blocks."""
    rows: list[int] = []
    start = 0
    for size, count in decomposition.parts:
        for _ in range(count):
            block = ((1 << size) - 1) << start
            rows.extend(block & ~(1 << (start + i)) for i in range(size))
            start += size
    return SimpleGraph(start, tuple(rows))


def commuting_graph(g: FiniteGroup) -> SimpleGraph:
    """Graph on G \\ Z(G) joining distinct commuting elements."""
    if g.is_abelian():
        raise ValueError("commuting graph is undefined for abelian groups (no non-central elements)")
    z = center(g)
    verts = [x for x in range(g.order) if x not in z]
    sub = g.commute[verts][:, verts].copy()
    for i in range(len(verts)):
        sub[i, i] = False
    rows = tuple(int.from_bytes(np.packbits(r, bitorder="little").tobytes(), "little") for r in sub)
    return SimpleGraph(len(verts), rows, tuple(verts))


def connected_components(g: SimpleGraph) -> list[list[int]]:
    """Vertex sets of the components, each sorted, ordered by smallest vertex."""
    seen = 0
    comps = []
    for v in range(g.vertex_count):
        if (seen >> v) & 1:
            continue
        comp_mask, frontier = 1 << v, 1 << v
        while frontier:
            nxt = 0
            for w in _bits(frontier):
                nxt |= g.adjacency[w]
            frontier = nxt & ~comp_mask
            comp_mask |= frontier
        seen |= comp_mask
        comps.append(list(_bits(comp_mask)))
    return comps


def is_complete(g: SimpleGraph, vertices: Sequence[int]) -> bool:
    s = len(vertices)
    return sum(bin(g.adjacency[v]).count("1") for v in vertices) == s * (s - 1)


def clique_decomposition(g: SimpleGraph) -> CliqueDecomposition | None:
    """Sizes of the components if every component is complete, else None."""
    comps = connected_components(g)
    if not all(is_complete(g, c) for c in comps):
        return None
    return CliqueDecomposition.normalized((len(c), 1) for c in comps)


def clique_union_planarity(d: CliqueDecomposition) -> bool:
    """A disjoint union of cliques is planar iff no clique has 5 or more vertices."""
    return all(size <= 4 for size, _ in d.parts)
