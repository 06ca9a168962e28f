"""Split graphs: recognition from the degree sequence, maximum cocliques,
and reading the rank off a coclique size."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph
from .spectra import MinSpec, omega_contains

__all__ = [
    "SplitPartition", "split_partition", "max_coclique_split",
    "coclique_size_formula", "ranks_from_coclique", "theta_star_4",
]


@dataclass(frozen=True)
class SplitPartition:
    clique: frozenset
    independent: frozenset

    def is_valid_for(self, G: Graph) -> bool:
        return (self.clique | self.independent == set(G.vertices)
                and not self.clique & self.independent
                and G.is_clique(self.clique) and G.is_independent(self.independent))


def split_partition(G: Graph) -> SplitPartition | None:
    """Clique/coclique partition of G, or None when G is not split.

    Sort by degree d_1 >= ... >= d_n and let h = max{i : d_i >= i - 1}.
    G is split iff sum_{i<=h} d_i == h(h-1) + sum_{i>h} d_i, and then the top
    h vertices form the clique.
    """
    order = sorted(G.vertices, key=lambda v: -G.degree(v))
    if not order:
        return SplitPartition(frozenset(), frozenset())
    degs = [G.degree(v) for v in order]
    h = max(i for i in range(1, len(degs) + 1) if degs[i - 1] >= i - 1)
    if sum(degs[:h]) != h * (h - 1) + sum(degs[h:]):
        return None
    K, I = set(order[:h]), set(order[h:])
    # a clique vertex with no neighbour in I can always move over
    if len(K) == 1:
        (v,) = K
        if not G.neighbors(v):
            K, I = set(), I | {v}
    part = SplitPartition(frozenset(K), frozenset(I))
    if not part.is_valid_for(G):
        raise AssertionError("degree criterion accepted a non-split partition")
    return part


def max_coclique_split(G: Graph, P: SplitPartition) -> frozenset:
    """Exact maximum independent set; it meets the clique at most once."""
    best = P.independent
    for v in sorted(P.clique, key=lambda x: G.vertices.index(x)):
        cand = frozenset({v}) | (P.independent - G.neighbors(v))
        if len(cand) > len(best):
            best = cand
    return best


def coclique_size_formula(family: str, n: int) -> int:
    """Largest coclique of the prime graph, by family; n is the dimension for
    L and U and the Lie rank otherwise."""
    if family in ("L", "U"):
        return (n + 1) // 2
    if family in ("S", "O_odd"):
        return (3 * n + 5) // 4
    if family == "O_plus":
        return (3 * n + 3) // 4 if n % 4 == 3 else (3 * n + 1) // 4
    if family == "O_minus":
        return (3 * n + 4) // 4
    raise ValueError("unknown family %r" % family)


def ranks_from_coclique(t: int, family: str) -> list:
    # every family formula grows at least like n/2, so n <= 2t + 2
    return [n for n in range(1, 2 * t + 3) if coclique_size_formula(family, n) == t]


def theta_star_4(mu, adg) -> tuple:
    """Vertices v with 4v outside omega(mu); returns (count, vertices)."""
    mu = MinSpec(mu)
    verts = tuple(v for v in adg.vertices if not omega_contains(mu, 4 * v))
    return len(verts), verts
