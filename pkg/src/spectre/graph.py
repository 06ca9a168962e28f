"""Minimal undirected simple graph used by the AD-graph and split code."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Hashable, Iterable


@dataclass(frozen=True)
class Graph:
    vertices: tuple
    adj: dict = field(compare=False, repr=False)

    @classmethod
    def from_edges(cls, vertices: Iterable[Hashable], edges: Iterable) -> "Graph":
        verts = tuple(vertices)
        adj = {v: set() for v in verts}
        for u, w in edges:
            if u == w:
                raise ValueError("self-loop %r" % (u,))
            adj[u].add(w)
            adj[w].add(u)
        return cls(verts, {v: frozenset(s) for v, s in adj.items()})

    @classmethod
    def from_predicate(cls, vertices: Iterable[Hashable], adjacent) -> "Graph":
        verts = tuple(vertices)
        edges = [(u, w) for u, w in combinations(verts, 2) if adjacent(u, w)]
        return cls.from_edges(verts, edges)

    def __len__(self) -> int:
        return len(self.vertices)

    def neighbors(self, v) -> frozenset:
        return self.adj[v]

    def degree(self, v) -> int:
        return len(self.adj[v])

    def has_edge(self, u, w) -> bool:
        return w in self.adj[u]

    def edges(self) -> list:
        index = {v: i for i, v in enumerate(self.vertices)}
        out = []
        for u in self.vertices:
            for w in self.adj[u]:
                if index[u] < index[w]:
                    out.append((u, w))
        return sorted(out, key=lambda e: (index[e[0]], index[e[1]]))

    def is_clique(self, vs) -> bool:
        vs = list(vs)
        return all(self.has_edge(u, w) for u, w in combinations(vs, 2))

    def is_independent(self, vs) -> bool:
        vs = list(vs)
        return not any(self.has_edge(u, w) for u, w in combinations(vs, 2))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return set(self.vertices) == set(other.vertices) and all(
            self.adj[v] == other.adj[v] for v in self.vertices)

    def __hash__(self):
        return hash(frozenset(self.vertices))

    def to_dot(self, name: str = "G") -> str:
        """DOT text, vertices in ascending order, edges sorted."""
        verts = sorted(self.vertices)
        lines = ["graph %s {" % name]
        for v in verts:
            lines.append('  "%s";' % v)
        es = sorted(tuple(sorted(e)) for e in self.edges())
        for u, w in es:
            lines.append('  "%s" -- "%s";' % (u, w))
        lines.append("}")
        return "\n".join(lines) + "\n"
