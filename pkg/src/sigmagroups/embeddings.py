"""Subgroup embedding predicates: permutability, subnormal chains,
transitive permutability, hypercentral embedding, nested-pair coverage and
the join/meet modular law.

Everything is evaluated relative to an *ambient* subgroup id over one
lattice, so "K permutable in H" for H <= G reuses G's enumeration.
Verdicts are cached on the lattice keyed by partition and mode.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import Inconsistent, PreconditionFailed
from .group import Group, Subgroup, centralizer_of_factor, product_members, product_permutes
from .lattice import SubgroupLattice
from .sigma import (
    BlockId,
    CompleteHallSigmaSet,
    SigmaPartition,
    hall_ids_for_block,
    is_primary_order,
    sigma_of,
    sorted_blocks,
)

STRICT = "strict"
WITNESS = "witness"
NO_HALL_SET = "no-complete-hall-set"


@dataclass(frozen=True)
class PermutabilityVerdict:
    """Outcome of a permutability test, with the failing pair or the witness."""

    holds: bool
    mode: str
    counterexample: tuple[BlockId, Subgroup | None] | None = None
    witness: CompleteHallSigmaSet | None = None
    reason: str | None = None


def _hall_table(L: SubgroupLattice, sigma: SigmaPartition, ambient: int):
    """(blocks, per-block hall ids, complete-set-exists) for an ambient subgroup."""
    key = ("hall_table", sigma.key(), ambient)
    got = L.scratch.get(key)
    if got is None:
        blocks = sorted_blocks(sigma, L.orders[ambient])
        halls = [hall_ids_for_block(L, sigma, ambient, bid) for bid in blocks]
        got = (blocks, halls, all(halls))
        L.scratch[key] = got
    return got


def permutability_in(
    L: SubgroupLattice,
    sigma: SigmaPartition,
    ambient: int,
    target: int,
    mode: str = STRICT,
) -> PermutabilityVerdict:
    """Definition-level permutability of one lattice member inside another.

    strict: the target permutes with every Hall subgroup of the ambient for
    every block.  witness: some complete Hall set exists all of whose members
    permute with the target after conjugation by any ambient element.  Both
    require the ambient to possess a complete Hall set at all.
    """
    key = ("perm", sigma.key(), mode, ambient, target)
    got = L.scratch.get(key)
    if got is not None:
        return got
    blocks, halls, complete = _hall_table(L, sigma, ambient)
    if not complete:
        missing = next(bid for bid, ids in zip(blocks, halls) if not ids)
        verdict = PermutabilityVerdict(
            False, mode, counterexample=(missing, None), reason=NO_HALL_SET
        )
        L.scratch[key] = verdict
        return verdict
    verdict = None
    if mode == STRICT:
        for bid, ids in zip(blocks, halls):
            for h in ids:
                if not L.permutes(target, h):
                    verdict = PermutabilityVerdict(
                        False, mode, counterexample=(bid, L.subgroup(h))
                    )
                    break
            if verdict:
                break
        if verdict is None:
            verdict = PermutabilityVerdict(True, mode)
    elif mode == WITNESS:
        chosen = []
        for bid, ids in zip(blocks, halls):
            pick = None
            first_failure = None
            for h in ids:
                bad = next(
                    (c for c in L.conjugacy_class(h, ambient) if not L.permutes(target, c)),
                    None,
                )
                if bad is None:
                    pick = h
                    break
                if first_failure is None:
                    first_failure = bad
            if pick is None:
                verdict = PermutabilityVerdict(
                    False, mode, counterexample=(bid, L.subgroup(first_failure))
                )
                break
            chosen.append((bid, L.subgroup(pick)))
        if verdict is None:
            verdict = PermutabilityVerdict(True, mode, witness=CompleteHallSigmaSet(tuple(chosen)))
    else:
        raise ValueError(f"unknown permutability mode {mode!r}")
    L.scratch[key] = verdict
    return verdict


def is_sigma_permutable(
    G: Group, L: SubgroupLattice, sigma: SigmaPartition, A: Subgroup, mode: str = STRICT
) -> PermutabilityVerdict:
    return permutability_in(L, sigma, L.top_id, L.id_of_subgroup(A), mode)


# -- subnormal chains -----------------------------------------------------------


@dataclass(frozen=True)
class SubnormalChain:
    """Chain A = A0 <= ... <= An = ambient with tagged steps."""

    terms: tuple[Subgroup, ...]
    step_kinds: tuple[str, ...]


def _subnormal_links(L: SubgroupLattice, sigma: SigmaPartition, ambient: int) -> dict[int, int | None]:
    """Map from each subnormally-reachable id to its chain successor."""
    key = ("subnormal", sigma.key(), ambient)
    got = L.scratch.get(key)
    if got is not None:
        return got

    ids = L.within(ambient)

    def step_ok(x: int, y: int) -> bool:
        if L.is_normal(x, y):
            return True
        quotient = L.orders[y] // L.orders[L.core_in(x, y)]
        return is_primary_order(sigma, quotient)

    links: dict[int, int | None] = {ambient: None}
    changed = True
    while changed:
        changed = False
        for x in ids:
            if x in links:
                continue
            for y in ids:
                if y in links and L.members[x] < L.members[y] and step_ok(x, y):
                    links[x] = y
                    changed = True
                    break
    L.scratch[key] = links
    return links


def subnormal_chain_in(
    L: SubgroupLattice, sigma: SigmaPartition, ambient: int, target: int
) -> SubnormalChain | None:
    links = _subnormal_links(L, sigma, ambient)
    if target not in links:
        return None
    terms = [target]
    kinds = []
    while links[terms[-1]] is not None:
        x = terms[-1]
        y = links[x]
        kinds.append("normal" if L.is_normal(x, y) else "primary-quotient")
        terms.append(y)
    return SubnormalChain(
        tuple(L.subgroup(i) for i in terms),
        tuple(kinds),
    )


def is_sigma_subnormal(
    G: Group, L: SubgroupLattice, sigma: SigmaPartition, A: Subgroup
) -> SubnormalChain | None:
    return subnormal_chain_in(L, sigma, L.top_id, L.id_of_subgroup(A))


def subnormal_ids_in(L: SubgroupLattice, sigma: SigmaPartition, ambient: int) -> tuple[int, ...]:
    links = _subnormal_links(L, sigma, ambient)
    return tuple(sorted(links))


# -- transitive permutability -----------------------------------------------------


def psigmat_transitive_in(
    L: SubgroupLattice, sigma: SigmaPartition, ambient: int, mode: str = STRICT
) -> tuple[bool, tuple[Subgroup, Subgroup] | None]:
    """Transitivity of permutability inside an ambient subgroup.

    Returns the first (K, H) with K permutable in H and H permutable in the
    ambient but K not permutable in the ambient.
    """
    key = ("psigmat", sigma.key(), mode, ambient)
    got = L.scratch.get(key)
    if got is not None:
        return got
    result: tuple[bool, tuple[Subgroup, Subgroup] | None] = (True, None)
    for h in L.within(ambient):
        if not permutability_in(L, sigma, ambient, h, mode).holds:
            continue
        for k in L.within(h):
            if (
                permutability_in(L, sigma, h, k, mode).holds
                and not permutability_in(L, sigma, ambient, k, mode).holds
            ):
                result = (False, (L.subgroup(k), L.subgroup(h)))
                break
        if not result[0]:
            break
    L.scratch[key] = result
    return result


def is_PsigmaT_transitive(
    G: Group, L: SubgroupLattice, sigma: SigmaPartition, mode: str = STRICT
) -> tuple[bool, tuple[Subgroup, Subgroup] | None]:
    return psigmat_transitive_in(L, sigma, L.top_id, mode)


def is_PsigmaT_via_subnormal(
    G: Group, L: SubgroupLattice, sigma: SigmaPartition, mode: str = STRICT
) -> tuple[bool, Subgroup | None]:
    """Every subnormally-embedded subgroup is permutable."""
    for a in subnormal_ids_in(L, sigma, L.top_id):
        if not permutability_in(L, sigma, L.top_id, a, mode).holds:
            return False, L.subgroup(a)
    return True, None


# -- hypercentre -----------------------------------------------------------------


def _chief_chain_to(L: SubgroupLattice, target: int) -> list[tuple[int, int]]:
    """Cover pairs of a canonical chief chain from the trivial subgroup to target."""
    normals = L.normal_ids()
    chain = []
    current = L.trivial_id
    while current != target:
        step = next(
            n
            for n in normals
            if L.members[current] < L.members[n] <= L.members[target]
            and not any(
                L.members[current] < L.members[m] < L.members[n]
                for m in normals
                if L.members[m] <= L.members[target]
            )
        )
        chain.append((current, step))
        current = step
    return chain


def _factor_is_central(L: SubgroupLattice, sigma: SigmaPartition, k: int, h: int) -> bool:
    """Factor H/K together with the induced automorphism group is one-block."""
    key = ("central", sigma.key(), k, h)
    got = L.scratch.get(key)
    if got is None:
        G = L.group
        C = centralizer_of_factor(G, L.subgroup(h), L.subgroup(k))
        factor = L.orders[h] // L.orders[k]
        induced = G.order // C.order
        got = len(sigma_of(sigma, factor) | sigma_of(sigma, induced)) <= 1
        L.scratch[key] = got
    return got


def sigma_hypercentre(G: Group, L: SubgroupLattice, sigma: SigmaPartition) -> Subgroup:
    """Largest normal subgroup all of whose chief factors below it are central
    in the one-block sense.

    The qualifying set is closed under joins in theory; that closure is
    verified here rather than assumed, and a failure raises Inconsistent.
    """
    key = ("hypercentre", sigma.key())
    got = L.scratch.get(key)
    if got is not None:
        return L.subgroup(got)

    def qualifies(n: int) -> bool:
        return all(_factor_is_central(L, sigma, k, h) for k, h in _chief_chain_to(L, n))

    quals = [n for n in L.normal_ids() if qualifies(n)]
    z = L.trivial_id
    for n in quals:
        z = L.join(z, n)
    if z not in quals:
        pair = next(
            (
                (a, b)
                for a in quals
                for b in quals
                if a < b and L.join(a, b) not in quals
            ),
            None,
        )
        raise Inconsistent(
            f"qualifying normal subgroups are not join-closed (witness pair {pair})"
        )
    L.scratch[key] = z
    return L.subgroup(z)


def iterated_centre(G: Group) -> Subgroup:
    """Limit of the upper central series (test oracle for the hypercentre
    under the all-singletons partition)."""
    z = frozenset((G.identity_index,))
    while True:
        nxt = frozenset(
            g
            for g in range(G.order)
            if all(G.commutator(g, x) in z for x in G.generator_indices)
        )
        if nxt == z:
            return Subgroup(G, z)
        z = nxt


def is_hypercentrally_embedded(
    G: Group, L: SubgroupLattice, sigma: SigmaPartition, H: Subgroup
) -> bool:
    """H over its normal core lands inside the hypercentre of the quotient."""
    h_id = L.id_of_subgroup(H)
    core_id = L.core_in(h_id, L.top_id)
    Q, proj, LQ = L.quotient_by(core_id)
    image = frozenset(proj[i] for i in H.members)
    z = sigma_hypercentre(Q, LQ, sigma)
    return image <= z.members


# -- nested block-subgroup coverage ------------------------------------------------


def satisfies_Y(
    G: Group, L: SubgroupLattice, sigma: SigmaPartition, bid: BlockId, mode: str = STRICT
) -> tuple[bool, tuple[Subgroup, Subgroup] | None]:
    """Nested block-primary subgroups H <= K have H permutable in N_G(K)."""
    block_ids = [i for i in range(len(L)) if sigma_of(sigma, L.orders[i]) <= {bid}]
    for k in block_ids:
        norm = L.normalizer_in(k, L.top_id)
        for h in block_ids:
            if not L.members[h] <= L.members[k]:
                continue
            if not permutability_in(L, sigma, norm, h, mode).holds:
                return False, (L.subgroup(h), L.subgroup(k))
    return True, None


# -- modular law ---------------------------------------------------------------------


def is_sigma_modular_everywhere(
    G: Group, L: SubgroupLattice, sigma: SigmaPartition, A: Subgroup
) -> tuple[bool, tuple[Subgroup, Subgroup, Subgroup] | None]:
    """<A, H meet C> = <A, H> meet C against every Hall subgroup H of every
    subgroup R containing A and every intermediate C, quantified exhaustively.

    Returns the first violating (R, C, H).
    """
    a = L.id_of_subgroup(A)
    for r in L.over(a):
        blocks, halls, _complete = _hall_table(L, sigma, r)
        betweens = [c for c in L.within(r) if L.members[a] <= L.members[c]]
        for _bid, ids in zip(blocks, halls):
            for h in ids:
                join_ah = L.join(a, h)
                for c in betweens:
                    left = L.join(a, L.meet(h, c))
                    right = L.meet(join_ah, c)
                    if left != right:
                        return False, (L.subgroup(r), L.subgroup(c), L.subgroup(h))
    return True, None


# -- set-level factorization oracle ---------------------------------------------------


def hall_factorization_check(
    G: Group, L: SubgroupLattice, N: Subgroup, H: Subgroup, K: Subgroup
) -> bool:
    """N meet HK = (N meet H)(N meet K), computed on raw element sets.

    Requires H, K, N pairwise permutable and H a Hall subgroup of G.
    """
    for a, b in ((H, K), (H, N), (K, N)):
        if not product_permutes(a, b):
            raise PreconditionFailed("subgroups are not pairwise permutable")
    if math.gcd(H.order, G.order // H.order) != 1:
        raise PreconditionFailed("H is not a Hall subgroup of the group")
    hk = product_members(G, H.members, K.members)
    lhs = N.members & hk
    rhs = product_members(G, N.members & H.members, N.members & K.members)
    return lhs == rhs
