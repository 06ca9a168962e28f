"""Atomic divisors of a set of integers and the AD-graph on them."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd

import mpmath

from .arith import nu_coprime_part
from .graph import Graph
from .spectra import MinSpec, omega_contains

__all__ = [
    "AtomSet", "ADGraph", "TooMany", "atomic_divisors_incremental",
    "atomic_divisors_bruteforce", "build_ad_graph", "size_cap_C",
    "prime_graph_restricted",
]


@dataclass(frozen=True)
class TooMany:
    """The running atom count passed the cap while processing element ``stage``."""

    stage: int
    count: int
    cap: int

    def __bool__(self):
        return False


@dataclass(frozen=True)
class AtomSet:
    atoms: tuple
    owner: MinSpec

    def support(self, v: int) -> tuple:
        """Elements of the owner set divisible by atom v."""
        return tuple(a for a in self.owner if a % v == 0)

    def atom_of(self, r: int):
        """The atom sharing a factor with r, if any (r should be prime)."""
        for v in self.atoms:
            if gcd(v, r) > 1:
                return v
        return None

    def __iter__(self):
        return iter(self.atoms)

    def __len__(self):
        return len(self.atoms)


def atomic_divisors_incremental(mu, cap: int, history: list | None = None):
    """Fold the elements in one at a time.

    With V the atoms of the first i-1 elements and a the next one, the new
    atoms are the nontrivial values among gcd(v, a), the a'-part of v, and
    the part of a coprime to everything seen so far.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    elements = list(mu)
    atoms = []
    for i, a in enumerate(elements):
        new = []
        rest = a
        for v in atoms:
            g = gcd(v, a)
            if g > 1:
                new.append(g)
            w = nu_coprime_part(v, (a,))
            if w > 1:
                new.append(w)
            rest = nu_coprime_part(rest, (v,))
        if rest > 1:
            new.append(rest)
        atoms = new
        if history is not None:
            history.append(len(atoms))
        if len(atoms) > cap:
            return TooMany(i, len(atoms), cap)
    return AtomSet(tuple(sorted(atoms)), MinSpec(elements))


def atomic_divisors_bruteforce(mu) -> AtomSet:
    """Every v(S) > 1 over nonempty subsets S, straight from the definition."""
    elements = list(mu)
    if len(elements) > 12:
        raise ValueError("subset enumeration limited to 12 elements")
    out = set()
    for size in range(1, len(elements) + 1):
        for S in combinations(range(len(elements)), size):
            g = 0
            for i in S:
                g = gcd(g, elements[i])
            for j, b in enumerate(elements):
                if j in S:
                    continue
                h = gcd(g, b)
                while h > 1:
                    g //= h
                    h = gcd(g, h)
            if g > 1:
                out.add(g)
    return AtomSet(tuple(sorted(out)), MinSpec(elements))


@dataclass(frozen=True)
class ADGraph:
    atoms: AtomSet
    graph: Graph

    @property
    def vertices(self):
        return self.graph.vertices

    def adjacent(self, u, v) -> bool:
        return self.graph.has_edge(u, v)

    def to_dot(self) -> str:
        return self.graph.to_dot("AD")


def build_ad_graph(mu, cap: int):
    mu = MinSpec(mu)
    atoms = atomic_divisors_incremental(mu, cap)
    if isinstance(atoms, TooMany):
        return atoms
    g = Graph.from_predicate(atoms.atoms, lambda u, w: omega_contains(mu, u * w))
    return ADGraph(atoms, g)


def size_cap_C(M: int, classical_only: bool = False) -> int:
    """ceil(max(140, (ln 2M / 0.99)^2, 2 (log2 M + 3))) with an exact ceiling."""
    if M < 2:
        raise ValueError("need M >= 2")
    if M & (M - 1) == 0:
        lin = 2 * (M.bit_length() - 1 + 3)
    else:
        lin = _ceil_irrational(lambda: 2 * (mpmath.log(mpmath.mpf(M), 2) + 3), M)
    if classical_only:
        return lin
    # ln is transcendental here, so the square is never an integer
    sq = _ceil_irrational(lambda: (mpmath.log(2 * mpmath.mpf(M)) * 100 / 99) ** 2, M)
    return max(140, sq, lin)


def _ceil_irrational(expr, M) -> int:
    prec = M.bit_length() + 80
    while True:
        with mpmath.workprec(prec):
            val = expr()
            if abs(val - mpmath.nint(val)) > mpmath.mpf(2) ** (-(prec // 2)):
                return int(mpmath.ceil(val))
        prec *= 2


def prime_graph_restricted(mu, primes) -> Graph:
    mu = MinSpec(mu)
    verts = [p for p in primes if omega_contains(mu, p)]
    return Graph.from_predicate(verts, lambda p, r: omega_contains(mu, p * r))
