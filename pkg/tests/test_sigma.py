import pytest
from hypothesis import given, strategies as st

from sigmagroups.catalog import SIGMA_CONFIGS, built_group, built_lattice
from sigmagroups.errors import OverlappingBlocks
from sigmagroups.sigma import (
    O_sigma_lower,
    O_sigma_upper,
    SigmaPartition,
    complete_hall_sigma_sets,
    is_D_pi,
    is_primary_order,
    is_sigma_full_sylow_type,
    is_sigma_nilpotent,
    is_sigma_primary,
    is_sigma_soluble,
    part_for_block,
    sigma_nilpotent_by_decomposition,
    sigma_of,
)

S0 = SIGMA_CONFIGS["s0"]
P23 = SIGMA_CONFIGS["p23"]
P23S = SIGMA_CONFIGS["p23-split"]


def test_partition_validation():
    with pytest.raises(OverlappingBlocks):
        SigmaPartition(((2,), (2, 5)), "singletons")
    with pytest.raises(ValueError):
        SigmaPartition(((4,),), "singletons")
    with pytest.raises(ValueError):
        SigmaPartition((), "sometimes")


def test_sigma_of_examples():
    assert sigma_of(P23, 168) == {("blk", 0), ("rest",)}
    assert sigma_of(P23, 1) == frozenset()
    assert sigma_of(S0, 12) == {("p", 2), ("p", 3)}


@given(st.integers(min_value=1, max_value=10**6), st.integers(min_value=1, max_value=10**6))
def test_sigma_of_multiplicative(a, b):
    assert sigma_of(S0, a * b) == sigma_of(S0, a) | sigma_of(S0, b)


@given(st.integers(min_value=1, max_value=10**6))
def test_parts_multiply_back(n):
    total = 1
    for bid in sigma_of(P23S, n):
        total *= part_for_block(P23S, n, bid)
    assert total == n


def test_is_sigma_primary():
    assert is_sigma_primary(built_group("sl23"), P23)
    assert not is_sigma_primary(built_group("s3"), S0)
    assert is_sigma_primary(built_group("c2"), S0)
    assert is_primary_order(S0, 1)


def test_is_sigma_nilpotent():
    assert is_sigma_nilpotent(built_group("c6"), built_lattice("c6"), S0)
    assert not is_sigma_nilpotent(built_group("s3"), built_lattice("s3"), S0)
    assert is_sigma_nilpotent(built_group("s3"), built_lattice("s3"), P23)


def test_nilpotent_decomposition_oracle_agrees():
    for name in ("c6", "c30", "s3", "s4", "a4", "q8", "d4", "d6", "f21", "sl23", "g168"):
        G, L = built_group(name), built_lattice(name)
        for sigma in (S0, P23, P23S):
            assert is_sigma_nilpotent(G, L, sigma) == sigma_nilpotent_by_decomposition(
                G, L, sigma
            ), (name, sigma.key())


def test_is_sigma_soluble():
    assert is_sigma_soluble(built_group("s4"), built_lattice("s4"), S0)
    assert not is_sigma_soluble(built_group("a5"), built_lattice("a5"), S0)
    one_block = SigmaPartition.pair((2, 3, 5))
    assert is_sigma_soluble(built_group("a5"), built_lattice("a5"), one_block)


def test_is_D_pi():
    # soluble groups have full Hall coverage for every prime set
    for name in ("c6", "s3", "s4", "d6", "f21", "sl23"):
        G, L = built_group(name), built_lattice(name)
        for pi in ({2}, {3}, {2, 3}, {2, 7}, {3, 7}):
            assert is_D_pi(G, L, pi), (name, pi)
    assert not is_D_pi(built_group("a5"), built_lattice("a5"), {2, 5})
    # p-groups are covered for any single prime
    assert is_D_pi(built_group("d4"), built_lattice("d4"), {2})


def test_sigma_full_sylow_type():
    assert is_sigma_full_sylow_type(built_group("s4"), built_lattice("s4"), S0)
    assert is_sigma_full_sylow_type(built_group("d4"), built_lattice("d4"), P23)
    assert not is_sigma_full_sylow_type(
        built_group("a5"), built_lattice("a5"), SigmaPartition.pair((2, 5))
    )


def test_complete_hall_sigma_sets():
    assert len(complete_hall_sigma_sets(built_group("s3"), built_lattice("s3"), S0)) == 3
    assert len(complete_hall_sigma_sets(built_group("c6"), built_lattice("c6"), S0)) == 1
    assert (
        complete_hall_sigma_sets(
            built_group("a5"), built_lattice("a5"), SigmaPartition.pair((2, 5))
        )
        == []
    )
    # trivial group: the empty choice tuple
    from sigmagroups.group import group_from_generators
    from sigmagroups.lattice import all_subgroups

    T = group_from_generators(1, [])
    assert len(complete_hall_sigma_sets(T, all_subgroups(T), S0)) == 1


def test_O_sigma_operators():
    G, L = built_group("s4"), built_lattice("s4")
    assert O_sigma_lower(G, L, S0, ("p", 2)).order == 4
    assert O_sigma_upper(G, L, S0, ("p", 2)).order == 12
    C6, L6 = built_group("c6"), built_lattice("c6")
    assert O_sigma_lower(C6, L6, S0, ("p", 3)).order == 3
    assert O_sigma_upper(C6, L6, S0, ("p", 3)).order == 2
    Q8, LQ8 = built_group("q8"), built_lattice("q8")
    assert O_sigma_lower(Q8, LQ8, P23, ("blk", 0)).order == 8
    assert O_sigma_upper(Q8, LQ8, P23, ("blk", 0)).order == 1


def test_describe_and_key_are_stable():
    assert P23.key() == "2.3;rest=one_block"
    assert S0.key() == ";rest=singletons"
    assert P23.describe_block(("blk", 0)) == "{2,3}"
    assert P23.describe_block(("rest",)) == "{2,3}'"
    assert S0.describe_block(("p", 5)) == "{5}"
