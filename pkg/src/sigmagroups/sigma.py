"""Prime partitions and the block-relative group classes built on them.

A partition splits the primes into disjoint blocks.  Finitely many blocks
are listed explicitly; the remaining primes are governed by a rest policy,
either one singleton block per prime or a single cofinal block.  Block ids
are small tags: ``("blk", i)`` for the i-th explicit block, ``("p", p)``
for a rest singleton, ``("rest",)`` for the cofinal block.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce

from .errors import OverlappingBlocks
from .group import Group, Subgroup, prime_factors, product_members
from .lattice import SubgroupLattice, chief_series

BlockId = tuple

REST_SINGLETONS = "singletons"
REST_ONE_BLOCK = "one_block"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def block_sort_key(bid: BlockId):
    kind = bid[0]
    if kind == "blk":
        return (0, bid[1])
    if kind == "p":
        return (1, bid[1])
    return (2, 0)


@dataclass(frozen=True)
class SigmaPartition:
    """A partition of all primes: explicit blocks plus a rest policy."""

    blocks: tuple[tuple[int, ...], ...]
    rest_policy: str

    def __post_init__(self):
        if self.rest_policy not in (REST_SINGLETONS, REST_ONE_BLOCK):
            raise ValueError(f"unknown rest policy {self.rest_policy!r}")
        seen: set[int] = set()
        norm = []
        for block in self.blocks:
            block = tuple(sorted(block))
            if not block:
                raise ValueError("blocks must be nonempty")
            for p in block:
                if not is_prime(p):
                    raise ValueError(f"{p} is not a prime")
                if p in seen:
                    raise OverlappingBlocks(f"prime {p} appears in two blocks")
                seen.add(p)
            norm.append(block)
        object.__setattr__(self, "blocks", tuple(norm))

    @classmethod
    def singletons(cls) -> SigmaPartition:
        """Every prime in its own block (the classical case)."""
        return cls((), REST_SINGLETONS)

    @classmethod
    def pair(cls, pi) -> SigmaPartition:
        """Two blocks: the given primes, and everything else."""
        return cls((tuple(sorted(pi)),), REST_ONE_BLOCK)

    @classmethod
    def split_pair(cls, pi) -> SigmaPartition:
        """One singleton block per given prime, everything else together."""
        return cls(tuple((p,) for p in sorted(pi)), REST_ONE_BLOCK)

    def block_of(self, p: int) -> BlockId:
        for i, block in enumerate(self.blocks):
            if p in block:
                return ("blk", i)
        if self.rest_policy == REST_SINGLETONS:
            return ("p", p)
        return ("rest",)

    def key(self) -> str:
        blocks = "|".join(".".join(str(p) for p in b) for b in self.blocks)
        return f"{blocks};rest={self.rest_policy}"

    def describe(self) -> str:
        if self.blocks:
            blocks = ", ".join("{" + ",".join(str(p) for p in b) + "}" for b in self.blocks)
        else:
            blocks = "none"
        rest = "singletons" if self.rest_policy == REST_SINGLETONS else "one block"
        return f"blocks {blocks}; remaining primes {rest}"

    def describe_block(self, bid: BlockId) -> str:
        if bid[0] == "blk":
            return "{" + ",".join(str(p) for p in self.blocks[bid[1]]) + "}"
        if bid[0] == "p":
            return "{" + str(bid[1]) + "}"
        listed = sorted(p for b in self.blocks for p in b)
        if not listed:
            return "all primes"
        return "{" + ",".join(str(p) for p in listed) + "}'"


def sigma_of(sigma: SigmaPartition, n: int) -> frozenset[BlockId]:
    """Block ids meeting the prime divisors of n; empty for n = 1."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    return frozenset(sigma.block_of(p) for p in prime_factors(n))


def part_for_block(sigma: SigmaPartition, n: int, bid: BlockId) -> int:
    """The bid-part of n: the product of its prime powers lying in the block."""
    part = 1
    for p, e in prime_factors(n).items():
        if sigma.block_of(p) == bid:
            part *= p**e
    return part


def is_primary_order(sigma: SigmaPartition, n: int) -> bool:
    return len(sigma_of(sigma, n)) <= 1


def is_sigma_primary(G: Group, sigma: SigmaPartition) -> bool:
    return is_primary_order(sigma, G.order)


def sorted_blocks(sigma: SigmaPartition, n: int) -> list[BlockId]:
    return sorted(sigma_of(sigma, n), key=block_sort_key)


# -- nilpotency ---------------------------------------------------------------


def has_normal_halls(
    L: SubgroupLattice,
    sigma: SigmaPartition,
    ambient: int | None = None,
    above: int | None = None,
) -> bool:
    """Normal-Hall criterion for block-wise nilpotency of ambient/above.

    With ``above`` given (a subgroup normal in the ambient), decides the
    property for the quotient ambient/above using the correspondence between
    its normal subgroups and the normal overgroups of ``above``.
    """
    if ambient is None:
        ambient = L.top_id
    base_order = L.orders[ambient] if above is None else L.orders[ambient] // L.orders[above]
    normals = L.normal_ids(ambient)
    if above is not None:
        normals = [n for n in normals if L.contains(n, above)]
    lower = 1 if above is None else L.orders[above]
    for bid in sigma_of(sigma, base_order):
        want = part_for_block(sigma, base_order, bid) * lower
        if not any(L.orders[n] == want for n in normals):
            return False
    return True


def is_sigma_nilpotent(G: Group, L: SubgroupLattice, sigma: SigmaPartition) -> bool:
    """Every block of the order signature has a normal Hall subgroup."""
    return has_normal_halls(L, sigma)


def sigma_nilpotent_by_decomposition(G: Group, L: SubgroupLattice, sigma: SigmaPartition) -> bool:
    """Direct search for an internal direct product of block-primary normals.

    Independent cross-check of :func:`is_sigma_nilpotent`: looks for one
    normal block-primary subgroup per block whose orders multiply to |G|,
    then verifies trivial pairwise meets and that the iterated product set
    is the whole group.
    """
    blocks = sorted_blocks(sigma, G.order)
    if not blocks:
        return True
    normals = L.normal_ids()
    per_block = [
        [n for n in normals if sigma_of(sigma, L.orders[n]) <= {bid}] for bid in blocks
    ]
    for choice in itertools.product(*per_block):
        total = 1
        for n in choice:
            total *= L.orders[n]
        if total != G.order:
            continue
        if any(
            len(L.members[a] & L.members[b]) != 1
            for a, b in itertools.combinations(choice, 2)
        ):
            continue
        prod = reduce(
            lambda acc, n: product_members(G, acc, L.members[n]),
            choice,
            frozenset((G.identity_index,)),
        )
        if len(prod) == G.order:
            return True
    return False


# -- solubility ---------------------------------------------------------------


def is_sigma_soluble(G: Group, L: SubgroupLattice, sigma: SigmaPartition) -> bool:
    """Every chief factor order lies in a single block."""
    series = chief_series(G, L)
    return all(is_primary_order(sigma, f) for f in series.factor_orders())


# -- Hall-covering properties ---------------------------------------------------


def _is_D_property(L: SubgroupLattice, ambient: int, part: int, order_is_pi) -> bool:
    """Some Hall subgroup's ambient-conjugates cover every pi-subgroup."""
    halls = L.hall_ids(ambient, part)
    if not halls:
        return False
    pi_subs = [i for i in L.within(ambient) if order_is_pi(L.orders[i])]
    for h in halls:
        covers = [L.members[c] for c in L.conjugacy_class(h, ambient)]
        if all(any(L.members[s] <= c for c in covers) for s in pi_subs):
            return True
    return False


def is_D_pi(G: Group, L: SubgroupLattice, pi) -> bool:
    """Hall pi-subgroup exists and dominates every pi-subgroup up to conjugacy."""
    pi = frozenset(pi)
    part = 1
    for p, e in prime_factors(G.order).items():
        if p in pi:
            part *= p**e

    def order_is_pi(n: int) -> bool:
        return all(p in pi for p in prime_factors(n))

    return _is_D_property(L, L.top_id, part, order_is_pi)


def is_D_block_rel(L: SubgroupLattice, sigma: SigmaPartition, ambient: int, bid: BlockId) -> bool:
    part = part_for_block(sigma, L.orders[ambient], bid)

    def order_is_pi(n: int) -> bool:
        return sigma_of(sigma, n) <= {bid}

    return _is_D_property(L, ambient, part, order_is_pi)


def is_sigma_full_sylow_type(G: Group, L: SubgroupLattice, sigma: SigmaPartition) -> bool:
    """Every subgroup dominates each of its blocks in the Hall-covering sense."""
    key = ("sigma_full", sigma.key())
    got = L.scratch.get(key)
    if got is None:
        got = all(
            is_D_block_rel(L, sigma, e, bid)
            for e in range(len(L))
            for bid in sigma_of(sigma, L.orders[e])
        )
        L.scratch[key] = got
    return got


# -- complete Hall sets ---------------------------------------------------------


@dataclass(frozen=True)
class CompleteHallSigmaSet:
    """One Hall subgroup per block of the group's order signature."""

    entries: tuple[tuple[BlockId, Subgroup], ...]

    def subgroups(self) -> tuple[Subgroup, ...]:
        return tuple(s for _, s in self.entries)


def hall_ids_for_block(
    L: SubgroupLattice, sigma: SigmaPartition, ambient: int, bid: BlockId
) -> tuple[int, ...]:
    key = ("halls", sigma.key(), ambient, bid)
    got = L.scratch.get(key)
    if got is None:
        got = L.hall_ids(ambient, part_for_block(sigma, L.orders[ambient], bid))
        L.scratch[key] = got
    return got


def complete_hall_sigma_sets(
    G: Group, L: SubgroupLattice, sigma: SigmaPartition
) -> list[CompleteHallSigmaSet]:
    """All choice tuples of per-block Hall subgroups; empty if a block has none."""
    blocks = sorted_blocks(sigma, G.order)
    per_block = [hall_ids_for_block(L, sigma, L.top_id, bid) for bid in blocks]
    if any(not ids for ids in per_block):
        return []
    out = []
    for choice in itertools.product(*per_block):
        entries = tuple((bid, L.subgroup(i)) for bid, i in zip(blocks, choice))
        out.append(CompleteHallSigmaSet(entries))
    return out


# -- block radicals and residual-style operators --------------------------------


def block_radical_id(L: SubgroupLattice, sigma: SigmaPartition, bid: BlockId, ambient: int) -> int:
    """Largest normal block-primary subgroup: the join of all of them."""
    out = L.trivial_id
    for n in L.normal_ids(ambient):
        if sigma_of(sigma, L.orders[n]) <= {bid}:
            out = L.join(out, n)
    return out


def O_sigma_lower(G: Group, L: SubgroupLattice, sigma: SigmaPartition, bid: BlockId) -> Subgroup:
    return L.subgroup(block_radical_id(L, sigma, bid, L.top_id))


def block_coresidual_id(L: SubgroupLattice, sigma: SigmaPartition, bid: BlockId, ambient: int) -> int:
    """Smallest normal subgroup whose quotient order lies in the block."""
    members = L.members[ambient]
    for n in L.normal_ids(ambient):
        if sigma_of(sigma, L.orders[ambient] // L.orders[n]) <= {bid}:
            members = members & L.members[n]
    return L.id_of(members)


def O_sigma_upper(G: Group, L: SubgroupLattice, sigma: SigmaPartition, bid: BlockId) -> Subgroup:
    return L.subgroup(block_coresidual_id(L, sigma, bid, L.top_id))
