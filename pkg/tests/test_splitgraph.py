import random
from itertools import combinations

import pytest

from spectre.atomic import build_ad_graph
from spectre.graph import Graph
from spectre.oracle import alt_mu_oracle, coclique_oracle, split_oracle
from spectre.splitgraph import (
    coclique_size_formula, max_coclique_split, ranks_from_coclique, split_partition,
    theta_star_4,
)
from spectre.spectra import CLASSICAL_FAMILIES, MinSpec


def path4():
    return Graph.from_edges("abcd", [("a", "b"), ("b", "c"), ("c", "d")])


def cycle(n):
    return Graph.from_edges(range(n), [(i, (i + 1) % n) for i in range(n)])


def test_split_examples():
    P = split_partition(path4())
    assert P.clique == {"b", "c"} and P.independent == {"a", "d"}
    assert split_partition(cycle(5)) is None
    assert split_partition(cycle(4)) is None
    one = Graph.from_edges(["v"], [])
    P = split_partition(one)
    assert P.clique == frozenset() and P.independent == {"v"}


def test_coclique_examples():
    G = path4()
    assert len(max_coclique_split(G, split_partition(G))) == 2
    K = Graph.from_edges(range(5), combinations(range(5), 2))
    assert len(max_coclique_split(K, split_partition(K))) == 1
    E = Graph.from_edges(range(5), [])
    assert max_coclique_split(E, split_partition(E)) == frozenset(range(5))


def test_oracles_on_small_graphs():
    assert split_oracle(cycle(4)) is False
    assert coclique_oracle(path4()) == 2


def test_split_random_agrees_with_oracle():
    rng = random.Random(11)
    for _ in range(500):
        n = rng.randint(1, 9)
        dens = rng.random()
        edges = [e for e in combinations(range(n), 2) if rng.random() < dens]
        G = Graph.from_edges(range(n), edges)
        P = split_partition(G)
        assert (P is not None) == split_oracle(G)
        if P is not None:
            assert P.is_valid_for(G)
            best = max_coclique_split(G, P)
            assert G.is_independent(best)
            assert len(best) == coclique_oracle(G)


def test_rank_formulas():
    # floor((n+1)/2) = 7 has solutions 13 and 14
    assert ranks_from_coclique(7, "L") == [13, 14]
    assert ranks_from_coclique(7, "U") == [13, 14]
    assert ranks_from_coclique(10, "S") == [12]
    assert ranks_from_coclique(10, "O_odd") == [12]
    assert coclique_size_formula("O_plus", 15) == 12
    assert coclique_size_formula("O_plus", 16) == 12
    for fam in CLASSICAL_FAMILIES:
        for n in range(12, 201):
            cands = ranks_from_coclique(coclique_size_formula(fam, n), fam)
            assert n in cands and len(cands) <= 2
            assert max(cands) - min(cands) <= 1


def test_theta_star_4():
    mu = MinSpec(alt_mu_oracle(5))
    adg = build_ad_graph(mu, 100)
    assert theta_star_4(mu, adg)[0] == 3
    mu = MinSpec([60])
    assert theta_star_4(mu, build_ad_graph(mu, 10))[0] == 1
    empty = MinSpec([1])
    assert theta_star_4(empty, build_ad_graph(empty, 10))[0] == 0
