"""Exhaustive subgroup lattices and derived structure.

The lattice of a group G is the complete, canonically ordered list of its
subgroups.  Every subgroup-relative question downstream (Hall subgroups of
a subgroup, normality inside a subgroup, joins, conjugacy classes, chief
chains) is answered from this one enumeration: the subgroups of H <= G are
exactly the listed subgroups contained in H, so nested lattices are views,
not recomputations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import CapExceeded, NotNormal
from .group import (
    Group,
    Subgroup,
    conjugate_members,
    core_members,
    normal_closure_members,
    normalizer_members,
)

DEFAULT_MAX_SUBGROUPS = 20000


class SubgroupLattice:
    """All subgroups of a group, sorted by (order, member tuple).

    Joins, cores, normalizers, conjugacy classes and quotients are memoized
    on the lattice, which makes repeated predicate evaluation over nested
    ambient subgroups cheap.
    """

    def __init__(self, group: Group, member_sets, gen_sets, max_subgroups: int):
        order = sorted(range(len(member_sets)), key=lambda i: (len(member_sets[i]), sorted(member_sets[i])))
        self.group = group
        self.max_subgroups = max_subgroups
        self.members: tuple[frozenset[int], ...] = tuple(member_sets[i] for i in order)
        self.gens: tuple[tuple[int, ...], ...] = tuple(gen_sets[i] for i in order)
        self.orders: tuple[int, ...] = tuple(len(m) for m in self.members)
        self.index: dict[frozenset[int], int] = {m: i for i, m in enumerate(self.members)}
        self.trivial_id = 0
        self.top_id = len(self.members) - 1
        self._join: dict[tuple[int, int], int] = {}
        self._normal: dict[tuple[int, int], bool] = {}
        self._core: dict[tuple[int, int], int] = {}
        self._nclosure: dict[tuple[int, int], int] = {}
        self._normalizer: dict[tuple[int, int], int] = {}
        self._conjclass: dict[tuple[int, int], tuple[int, ...]] = {}
        self._within: dict[int, tuple[int, ...]] = {}
        self._over: dict[int, tuple[int, ...]] = {}
        self._normal_ids: dict[int, tuple[int, ...]] = {}
        self._quotients: dict[int, tuple] = {}
        self.scratch: dict = {}

    def __len__(self) -> int:
        return len(self.members)

    # -- lookups ---------------------------------------------------------

    def subgroup(self, sid: int) -> Subgroup:
        return Subgroup(self.group, self.members[sid])

    def id_of(self, members: frozenset[int]) -> int:
        return self.index[members]

    def id_of_subgroup(self, S: Subgroup) -> int:
        return self.index[S.members]

    def order_of(self, sid: int) -> int:
        return self.orders[sid]

    def contains(self, outer: int, inner: int) -> bool:
        return self.members[inner] <= self.members[outer]

    def within(self, sid: int) -> tuple[int, ...]:
        """Ids of all subgroups contained in sid, in canonical order."""
        got = self._within.get(sid)
        if got is None:
            m = self.members[sid]
            got = tuple(i for i, s in enumerate(self.members) if s <= m)
            self._within[sid] = got
        return got

    def over(self, sid: int) -> tuple[int, ...]:
        got = self._over.get(sid)
        if got is None:
            m = self.members[sid]
            got = tuple(i for i, s in enumerate(self.members) if m <= s)
            self._over[sid] = got
        return got

    # -- algebra ----------------------------------------------------------

    def join(self, a: int, b: int) -> int:
        if a == b:
            return a
        key = (a, b) if a < b else (b, a)
        got = self._join.get(key)
        if got is None:
            if self.members[a] <= self.members[b]:
                got = b
            elif self.members[b] <= self.members[a]:
                got = a
            else:
                closure = self.group.closure_indices(self.gens[a] + self.gens[b])
                got = self.index[closure]
            self._join[key] = got
        return got

    def meet(self, a: int, b: int) -> int:
        if a == b:
            return a
        return self.index[self.members[a] & self.members[b]]

    def product_order(self, a: int, b: int) -> int:
        return self.orders[a] * self.orders[b] // len(self.members[a] & self.members[b])

    def permutes(self, a: int, b: int) -> bool:
        """Whether the two subgroups permute: |AB| equals |<A,B>|."""
        return self.product_order(a, b) == self.orders[self.join(a, b)]

    def is_normal(self, sid: int, ambient: int) -> bool:
        key = (sid, ambient)
        got = self._normal.get(key)
        if got is None:
            got = all(
                conjugate_members(self.group, self.members[sid], g) == self.members[sid]
                for g in self.gens[ambient]
            )
            self._normal[key] = got
        return got

    def core_in(self, sid: int, ambient: int) -> int:
        key = (sid, ambient)
        got = self._core.get(key)
        if got is None:
            got = self.index[core_members(self.group, self.members[sid], self.members[ambient])]
            self._core[key] = got
        return got

    def normal_closure_in(self, sid: int, ambient: int) -> int:
        key = (sid, ambient)
        got = self._nclosure.get(key)
        if got is None:
            got = self.index[
                normal_closure_members(self.group, self.members[sid], self.members[ambient])
            ]
            self._nclosure[key] = got
        return got

    def normalizer_in(self, sid: int, ambient: int) -> int:
        key = (sid, ambient)
        got = self._normalizer.get(key)
        if got is None:
            got = self.index[
                normalizer_members(self.group, self.members[sid], self.members[ambient])
            ]
            self._normalizer[key] = got
        return got

    def conjugacy_class(self, sid: int, ambient: int) -> tuple[int, ...]:
        """Orbit of a subgroup under conjugation by the ambient subgroup."""
        key = (sid, ambient)
        got = self._conjclass.get(key)
        if got is None:
            seen = {sid}
            frontier = [sid]
            while frontier:
                new = []
                for x in frontier:
                    for g in self.gens[ambient]:
                        y = self.index[conjugate_members(self.group, self.members[x], g)]
                        if y not in seen:
                            seen.add(y)
                            new.append(y)
                frontier = new
            got = tuple(sorted(seen))
            self._conjclass[key] = got
        return got

    def normal_ids(self, ambient: int | None = None) -> tuple[int, ...]:
        if ambient is None:
            ambient = self.top_id
        got = self._normal_ids.get(ambient)
        if got is None:
            got = tuple(i for i in self.within(ambient) if self.is_normal(i, ambient))
            self._normal_ids[ambient] = got
        return got

    def hall_ids(self, ambient: int, part: int) -> tuple[int, ...]:
        """Ids of subgroups of the ambient with the exact order ``part``."""
        return tuple(i for i in self.within(ambient) if self.orders[i] == part)

    def quotient_by(self, normal_id: int):
        """Materialized quotient (Q, projection, lattice of Q), cached."""
        got = self._quotients.get(normal_id)
        if got is None:
            from .group import quotient_group

            Q, proj = quotient_group(self.group, self.subgroup(normal_id))
            LQ = all_subgroups(Q, self.max_subgroups)
            got = (Q, proj, LQ)
            self._quotients[normal_id] = got
        return got


def all_subgroups(G: Group, max_subgroups: int = DEFAULT_MAX_SUBGROUPS) -> SubgroupLattice:
    """Enumerate every subgroup of G.

    Seeds with all cyclic subgroups and closes under joins with cyclic
    subgroups; since every subgroup is a join of cyclic ones, the fixed
    point is the full lattice.
    """
    found: dict[frozenset[int], tuple[int, ...]] = {}
    trivial = frozenset((G.identity_index,))
    found[trivial] = ()
    cyclics: list[frozenset[int]] = [trivial]
    for i in range(G.order):
        members = G.closure_indices((i,))
        if members not in found:
            found[members] = (i,)
            cyclics.append(members)
    worklist = list(found)
    pos = 0
    while pos < len(worklist):
        current = worklist[pos]
        pos += 1
        cgens = found[current]
        for cyc in cyclics:
            if cyc <= current:
                continue
            gens = cgens + found[cyc]
            joined = G.closure_indices(gens)
            if joined not in found:
                found[joined] = gens
                worklist.append(joined)
                if len(found) > max_subgroups:
                    raise CapExceeded(
                        f"subgroup enumeration exceeded max_subgroups={max_subgroups}"
                    )
    member_sets = list(found)
    gen_sets = [found[m] for m in member_sets]
    return SubgroupLattice(G, member_sets, gen_sets, max_subgroups)


def normal_subgroups(L: SubgroupLattice) -> list[Subgroup]:
    return [L.subgroup(i) for i in L.normal_ids()]


def minimal_normal_subgroups(L: SubgroupLattice) -> list[Subgroup]:
    ids = [i for i in L.normal_ids() if L.orders[i] > 1]
    out = []
    for i in ids:
        if not any(j != i and L.orders[j] > 1 and L.members[j] < L.members[i] for j in ids):
            out.append(L.subgroup(i))
    return out


def maximal_subgroups(L: SubgroupLattice) -> list[Subgroup]:
    top = L.members[L.top_id]
    proper = [i for i in range(len(L)) if L.members[i] != top]
    out = []
    for i in proper:
        if not any(j != i and L.members[i] < L.members[j] for j in proper):
            out.append(L.subgroup(i))
    return out


def frattini(L: SubgroupLattice) -> Subgroup:
    maxima = maximal_subgroups(L)
    if not maxima:
        return L.subgroup(L.top_id)
    members = L.members[L.top_id]
    for m in maxima:
        members = members & m.members
    return Subgroup(L.group, members)


@dataclass(frozen=True)
class ChiefSeries:
    """Ascending series 1 = T0 < ... < Tk = G with G-chief factors."""

    terms: tuple[Subgroup, ...]

    def factor_orders(self) -> tuple[int, ...]:
        return tuple(
            self.terms[i].order // self.terms[i - 1].order for i in range(1, len(self.terms))
        )


def _minimal_over(L: SubgroupLattice, normals, current: int, bound: frozenset[int] | None):
    candidates = [
        n
        for n in normals
        if L.members[current] < L.members[n] and (bound is None or L.members[n] <= bound)
    ]
    return [
        n
        for n in candidates
        if not any(L.members[current] < L.members[m] < L.members[n] for m in candidates)
    ]


def chief_series(
    G: Group,
    L: SubgroupLattice,
    through: Subgroup | None = None,
    rng: random.Random | None = None,
) -> ChiefSeries:
    """A chief series of G, optionally passing through a given normal subgroup.

    Deterministic (first candidate in canonical order) unless an rng is
    supplied, in which case each step picks a random minimal candidate;
    factor order multisets are series-independent either way.
    """
    normals = L.normal_ids()
    through_id = None
    if through is not None:
        through_id = L.id_of(through.members)
        if not L.is_normal(through_id, L.top_id):
            raise NotNormal("chief series can only pass through a normal subgroup")
    current = L.trivial_id
    terms = [current]
    while current != L.top_id:
        bound = None
        if through_id is not None and not L.contains(current, through_id):
            bound = L.members[through_id]
        choices = _minimal_over(L, normals, current, bound)
        current = rng.choice(choices) if rng is not None else choices[0]
        terms.append(current)
    return ChiefSeries(tuple(L.subgroup(i) for i in terms))


def pi_part(n: int, pi) -> int:
    """Largest divisor of n supported on the prime set pi."""
    part = 1
    for p in pi:
        while n % p == 0:
            part *= p
            n //= p
    return part


def hall_subgroups(L: SubgroupLattice, pi) -> list[Subgroup]:
    """All subgroups whose order is exactly the pi-part of |G|."""
    part = pi_part(L.group.order, pi)
    return [L.subgroup(i) for i in L.hall_ids(L.top_id, part)]


def complement_search(G: Group, L: SubgroupLattice, N: Subgroup) -> Subgroup | None:
    """First subgroup M with M disjoint from N and |M| * |N| = |G|."""
    want = G.order // N.order
    for i in range(len(L)):
        if L.orders[i] == want and len(L.members[i] & N.members) == 1:
            return L.subgroup(i)
    return None
