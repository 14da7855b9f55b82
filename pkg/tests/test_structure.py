import pytest

from sigmagroups.catalog import SIGMA_CONFIGS, built_group, built_lattice
from sigmagroups.errors import PreconditionFailed
from sigmagroups.group import generated_subgroup
from sigmagroups.perm import Permutation
from sigmagroups.structure import (
    check_theorem_A,
    check_theorem_B,
    corollary_closure_check,
    induces_power_automorphisms,
    is_sigma_hall_subgroup,
    sigma_nilpotent_residual,
)

S0 = SIGMA_CONFIGS["s0"]
P23 = SIGMA_CONFIGS["p23"]


def by_cycles(G, cycles):
    return G.index_of(Permutation.from_cycles(G.degree, cycles))


def test_residual_examples():
    assert sigma_nilpotent_residual(built_group("c12"), built_lattice("c12"), S0).order == 1
    assert sigma_nilpotent_residual(built_group("s4"), built_lattice("s4"), S0).order == 12
    assert sigma_nilpotent_residual(built_group("g168"), built_lattice("g168"), P23).order == 7
    assert sigma_nilpotent_residual(built_group("g168"), built_lattice("g168"), S0).order == 56
    assert sigma_nilpotent_residual(built_group("s3"), built_lattice("s3"), S0).order == 3


def test_power_automorphisms():
    G = built_group("s3")
    a3 = generated_subgroup(G, [by_cycles(G, [(0, 1, 2)])])
    ok, witness = induces_power_automorphisms(G, a3)
    assert ok and witness is None
    S4 = built_group("s4")
    a4 = generated_subgroup(S4, [by_cycles(S4, [(0, 1, 2)]), by_cycles(S4, [(1, 2, 3)])])
    ok, witness = induces_power_automorphisms(S4, a4)
    assert not ok and witness is not None
    g, d = witness
    assert S4.conj(d, g) not in S4.closure_indices((d,))
    # central subgroups always qualify
    Q8 = built_group("q8")
    centre = generated_subgroup(Q8, [next(i for i in range(8) if Q8.element_order(i) == 2)])
    assert induces_power_automorphisms(Q8, centre)[0]


def test_sigma_hall_recognition():
    G = built_group("s4")
    assert is_sigma_hall_subgroup(G, S0, G.full_subgroup()) == {("p", 2), ("p", 3)}
    syl3 = generated_subgroup(G, [by_cycles(G, [(0, 1, 2)])])
    assert is_sigma_hall_subgroup(G, S0, syl3) == {("p", 3)}
    S3 = built_group("s3")
    a3 = generated_subgroup(S3, [by_cycles(S3, [(0, 1, 2)])])
    assert is_sigma_hall_subgroup(S3, S0, a3) == {("p", 3)}
    # order 2 subgroups of S4 share the prime 2 with their index
    c2 = generated_subgroup(G, [by_cycles(G, [(0, 1)])])
    assert is_sigma_hall_subgroup(G, S0, c2) is None


def test_theorem_a_f21():
    G, L = built_group("f21"), built_lattice("f21")
    rep = check_theorem_A(G, L, S0)
    assert rep.residual.order == 7
    assert rep.is_sigma_soluble
    assert rep.condition_i.ok
    assert all(r.ok for r in rep.condition_ii.values())
    assert rep.psigmat_bruteforce
    assert rep.equivalence_holds


def test_theorem_a_s4():
    rep = check_theorem_A(built_group("s4"), built_lattice("s4"), S0)
    assert rep.residual.order == 12
    assert not rep.condition_i.d_abelian
    assert not rep.psigmat_bruteforce
    assert rep.equivalence_holds


def test_theorem_a_g168():
    rep = check_theorem_A(built_group("g168"), built_lattice("g168"), P23)
    assert rep.condition_i.ok
    assert all(r.ok for r in rep.condition_ii.values())
    assert rep.psigmat_bruteforce and rep.equivalence_holds


def test_theorem_b_examples():
    G, L = built_group("s3"), built_lattice("s3")
    a3 = generated_subgroup(G, [by_cycles(G, [(0, 1, 2)])])
    rep = check_theorem_B(G, L, S0, a3)
    assert rep.hypotheses_hold and rep.conclusion_holds
    # D = 1 reduces the hypotheses to transitivity of the group itself
    rep = check_theorem_B(G, L, S0, G.trivial_subgroup())
    assert rep.hypotheses_hold and rep.conclusion_holds

    S4, LS4 = built_group("s4"), built_lattice("s4")
    a4 = generated_subgroup(S4, [by_cycles(S4, [(0, 1, 2)]), by_cycles(S4, [(1, 2, 3)])])
    rep = check_theorem_B(S4, LS4, S0, a4)
    assert not rep.hypotheses_hold and not rep.conclusion_holds
    assert rep.failing_subnormal is not None and rep.failing_subnormal.order == 2


def test_corollary_closure():
    G, L = built_group("f21"), built_lattice("f21")
    ok, witness = corollary_closure_check(G, L, S0)
    assert ok and witness is None
    with pytest.raises(PreconditionFailed):
        corollary_closure_check(built_group("s4"), built_lattice("s4"), S0)


def test_residual_lattice_membership():
    # the residual is normal and its quotient passes the nilpotency criterion
    from sigmagroups.sigma import has_normal_halls

    for name in ("s3", "s4", "a4", "d6", "sl23", "g168"):
        L = built_lattice(name)
        G = built_group(name)
        for sigma in (S0, P23):
            D = sigma_nilpotent_residual(G, L, sigma)
            d_id = L.id_of(D.members)
            assert L.is_normal(d_id, L.top_id)
            assert has_normal_halls(L, sigma, above=d_id)
