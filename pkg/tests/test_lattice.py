import math
import random

import pytest

from sigmagroups.catalog import built_group, built_lattice
from sigmagroups.errors import CapExceeded
from sigmagroups.group import generated_subgroup, product_permutes
from sigmagroups.lattice import (
    all_subgroups,
    chief_series,
    complement_search,
    frattini,
    hall_subgroups,
    maximal_subgroups,
    minimal_normal_subgroups,
    normal_subgroups,
)
from sigmagroups.perm import Permutation


def by_cycles(G, cycles):
    return G.index_of(Permutation.from_cycles(G.degree, cycles))


def pairwise_closure_oracle(G):
    """Independent enumeration: closures of all 1- and 2-element seeds.

    Complete for groups whose subgroups are all 2-generated (true for S4),
    which makes it a fair cross-check for the join-based enumeration.
    """
    found = {frozenset((G.identity_index,))}
    for a in range(G.order):
        found.add(G.closure_indices((a,)))
        for b in range(a + 1, G.order):
            found.add(G.closure_indices((a, b)))
    return found


def test_subgroup_counts():
    assert len(built_lattice("c6")) == 4
    assert len(built_lattice("s4")) == 30
    assert len(all_subgroups(built_group("c2"))) == 2


def test_s4_lattice_matches_pairwise_oracle():
    G = built_group("s4")
    L = built_lattice("s4")
    assert set(L.members) == pairwise_closure_oracle(G)


def test_trivial_group_lattice():
    from sigmagroups.group import group_from_generators

    L = all_subgroups(group_from_generators(1, []))
    assert len(L) == 1


def test_lattice_cap():
    with pytest.raises(CapExceeded):
        all_subgroups(built_group("s4"), max_subgroups=10)


def test_lattice_closed_under_conjugation():
    for name in ("s4", "a5", "g168"):
        L = built_lattice(name)
        G = L.group
        for i in range(len(L)):
            for g in G.generator_indices:
                conj = frozenset(G.conj(a, g) for a in L.members[i])
                assert conj in L.index


def test_conjugacy_class_sizes_sum_to_total():
    L = built_lattice("s4")
    seen = set()
    total = 0
    for i in range(len(L)):
        if i in seen:
            continue
        cls = L.conjugacy_class(i, L.top_id)
        seen.update(cls)
        total += len(cls)
    assert total == len(L)


def test_normal_and_minimal_normal_s4():
    L = built_lattice("s4")
    assert sorted(s.order for s in normal_subgroups(L)) == [1, 4, 12, 24]
    minimal = minimal_normal_subgroups(L)
    assert [s.order for s in minimal] == [4]


def test_frattini():
    assert frattini(built_lattice("s3")).order == 1
    assert frattini(built_lattice("c4")).order == 2
    assert frattini(built_lattice("q8")).order == 2


def test_maximal_subgroups_s3():
    orders = sorted(s.order for s in maximal_subgroups(built_lattice("s3")))
    assert orders == [2, 2, 2, 3]


def test_chief_series_s4():
    G = built_group("s4")
    L = built_lattice("s4")
    series = chief_series(G, L)
    assert [t.order for t in series.terms] == [1, 4, 12, 24]
    assert series.factor_orders() == (4, 3, 2)


def test_chief_series_c6_both_routes():
    G = built_group("c6")
    L = built_lattice("c6")
    series = chief_series(G, L)
    assert sorted(series.factor_orders()) == [2, 3]
    assert len(series.terms) == 3


def test_chief_series_trivial():
    from sigmagroups.group import group_from_generators

    G = group_from_generators(1, [])
    series = chief_series(G, all_subgroups(G))
    assert len(series.terms) == 1


def test_chief_series_through():
    G = built_group("s4")
    L = built_lattice("s4")
    a4 = generated_subgroup(G, [by_cycles(G, [(0, 1, 2)]), by_cycles(G, [(1, 2, 3)])])
    series = chief_series(G, L, through=a4)
    assert any(t.members == a4.members for t in series.terms)


def test_chief_series_through_non_normal_rejected():
    from sigmagroups.errors import NotNormal

    G = built_group("s4")
    L = built_lattice("s4")
    syl3 = generated_subgroup(G, [by_cycles(G, [(0, 1, 2)])])
    with pytest.raises(NotNormal):
        chief_series(G, L, through=syl3)


def test_chief_factor_multiset_series_independent():
    G = built_group("s4")
    L = built_lattice("s4")
    base = sorted(chief_series(G, L).factor_orders())
    for seed in range(5):
        rng = random.Random(seed)
        assert sorted(chief_series(G, L, rng=rng).factor_orders()) == base


def test_hall_subgroups():
    L3 = built_lattice("s3")
    assert [s.order for s in hall_subgroups(L3, {3})] == [3]
    assert [s.order for s in hall_subgroups(L3, {2, 3})] == [6]
    La4 = built_lattice("a4")
    assert [s.order for s in hall_subgroups(La4, {3})] == [3, 3, 3, 3]
    # no Hall {2,5}-subgroup of A5
    assert hall_subgroups(built_lattice("a5"), {2, 5}) == []


def test_hall_order_coprime_to_index():
    for name in ("s4", "g168"):
        L = built_lattice(name)
        n = L.group.order
        for pi in ({2}, {3}, {7}, {2, 3}):
            for h in hall_subgroups(L, pi):
                assert math.gcd(h.order, n // h.order) == 1


def test_complement_search():
    G = built_group("s3")
    L = built_lattice("s3")
    a3 = generated_subgroup(G, [by_cycles(G, [(0, 1, 2)])])
    M = complement_search(G, L, a3)
    assert M is not None and M.order == 2
    C4 = built_group("c4")
    L4 = built_lattice("c4")
    c2 = generated_subgroup(C4, [next(i for i in range(4) if C4.element_order(i) == 2)])
    assert complement_search(C4, L4, c2) is None
    assert complement_search(G, L, G.trivial_subgroup()).order == 6


def test_schur_zassenhaus_over_corpus():
    for name in ("c6", "s3", "s4", "a4", "d6", "f21", "sl23", "g168"):
        G = built_group(name)
        L = built_lattice(name)
        for n in L.normal_ids():
            N = L.subgroup(n)
            if math.gcd(N.order, G.order // N.order) == 1:
                assert complement_search(G, L, N) is not None, (name, N.order)


def test_join_based_permutes_agrees_with_set_product():
    L = built_lattice("s4")
    G = L.group
    rng = random.Random(11)
    for _ in range(60):
        i, j = rng.randrange(len(L)), rng.randrange(len(L))
        direct = product_permutes(L.subgroup(i), L.subgroup(j))
        assert direct == L.permutes(i, j)


def test_chief_factors_prime_power_iff_soluble():
    from sigmagroups.group import basic_predicates

    for name in ("c6", "s3", "s4", "a4", "a5", "f21", "sl23", "g168"):
        G = built_group(name)
        L = built_lattice(name)
        factors = chief_series(G, L).factor_orders()
        prime_power = all(len(set(_prime_list(f))) == 1 for f in factors)
        assert prime_power == basic_predicates(G)["is_soluble"], name


def _prime_list(n):
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out
