"""Concrete finite permutation groups with fully materialized element lists.

Everything downstream (lattices, partition predicates, theorem checkers)
works on element *indices* into a group's canonical element list, which is
sorted lexicographically by image arrays so equal groups serialize
identically.  Groups up to ``TABLE_LIMIT`` elements carry a full Cayley
table; larger ones multiply permutations directly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadIso, BadPermutation, CapExceeded, NotNormal
from .perm import Permutation

DEFAULT_MAX_ORDER = 1000
TABLE_LIMIT = 1500


class Group:
    """A finite permutation group materialized as a canonical element list."""

    def __init__(self, degree, generators, elements, name=None):
        self.degree = degree
        self.name = name
        self.generators = tuple(generators)
        self.elements = tuple(sorted(elements))
        self.order = len(self.elements)
        self._index = {p: i for i, p in enumerate(self.elements)}
        self.identity_index = self._index[Permutation.identity(degree)]
        self.generator_indices = tuple(self._index[g] for g in self.generators)
        if self.order <= TABLE_LIMIT:
            images = [p.images for p in self.elements]
            index = self._index
            self._table = [
                [index[Permutation(tuple(qi[x] for x in pi))] for qi in images]
                for pi in images
            ]
        else:
            self._table = None
        inv = [0] * self.order
        for i, p in enumerate(self.elements):
            inv[i] = self._index[p.inverse()]
        self._inv = inv
        if len(self.closure_indices(self.generator_indices)) != self.order:
            raise ValueError("generators do not generate the element list")

    # -- element-index arithmetic -------------------------------------------

    def mult(self, i: int, j: int) -> int:
        if self._table is not None:
            return self._table[i][j]
        p, q = self.elements[i], self.elements[j]
        return self._index[p * q]

    def inv(self, i: int) -> int:
        return self._inv[i]

    def conj(self, a: int, g: int) -> int:
        """Index of g^-1 * a * g."""
        return self.mult(self.mult(self._inv[g], a), g)

    def commutator(self, a: int, b: int) -> int:
        """Index of a^-1 b^-1 a b."""
        return self.mult(self.mult(self._inv[a], self._inv[b]), self.mult(a, b))

    def element_order(self, i: int) -> int:
        n = 1
        x = i
        while x != self.identity_index:
            x = self.mult(x, i)
            n += 1
        return n

    def index_of(self, perm: Permutation) -> int:
        return self._index[perm]

    def __contains__(self, perm: Permutation) -> bool:
        return perm in self._index

    def closure_indices(self, seed) -> frozenset[int]:
        """Indices of the subgroup generated by the seed indices."""
        seed = list(seed)
        seen = bytearray(self.order)
        seen[self.identity_index] = 1
        frontier = [self.identity_index]
        members = [self.identity_index]
        while frontier:
            new = []
            for x in frontier:
                for g in seed:
                    y = self.mult(x, g)
                    if not seen[y]:
                        seen[y] = 1
                        members.append(y)
                        new.append(y)
            frontier = new
        return frozenset(members)

    def subgroup(self, members) -> Subgroup:
        return Subgroup(self, frozenset(members))

    def trivial_subgroup(self) -> Subgroup:
        return Subgroup(self, frozenset((self.identity_index,)))

    def full_subgroup(self) -> Subgroup:
        return Subgroup(self, frozenset(range(self.order)))

    def __repr__(self):
        label = self.name or "Group"
        return f"<{label}: degree {self.degree}, order {self.order}>"


@dataclass(frozen=True)
class Subgroup:
    """An element-index subset of a parent group, closed under its operation."""

    parent: Group
    members: frozenset[int]

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index_in_parent(self) -> int:
        return self.parent.order // len(self.members)

    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def contains(self, other: Subgroup) -> bool:
        return other.members <= self.members

    def generator_indices(self) -> tuple[int, ...]:
        """Deterministic small generating set (greedy over canonical order)."""
        G = self.parent
        if len(self.members) == 1:
            return ()
        gens: list[int] = []
        have = frozenset((G.identity_index,))
        for m in self.sorted_members():
            if m not in have:
                gens.append(m)
                have = G.closure_indices(gens)
                if len(have) == len(self.members):
                    break
        return tuple(gens)

    def generator_perms(self) -> tuple[Permutation, ...]:
        G = self.parent
        return tuple(G.elements[i] for i in self.generator_indices())

    def element_perms(self) -> tuple[Permutation, ...]:
        return tuple(self.parent.elements[i] for i in self.sorted_members())

    def __repr__(self):
        gens = ", ".join(p.cycle_string() for p in self.generator_perms()) or "()"
        return f"<Subgroup order {self.order} = <{gens}>>"


# -- construction ------------------------------------------------------------


def group_from_generators(degree, gens, max_order=DEFAULT_MAX_ORDER, name=None) -> Group:
    """Breadth-first closure of the generators under composition."""
    if degree < 1:
        raise BadPermutation("degree must be at least 1")
    if max_order < 1:
        raise ValueError("max_order must be at least 1")
    gens = list(gens)
    for g in gens:
        if not isinstance(g, Permutation):
            raise BadPermutation(f"{g!r} is not a Permutation")
        if g.degree != degree:
            raise BadPermutation(f"generator degree {g.degree} != {degree}")
    ident = Permutation.identity(degree)
    elements = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for p in frontier:
            for g in gens:
                q = p * g
                if q not in elements:
                    elements.add(q)
                    new.append(q)
                    if len(elements) > max_order:
                        raise CapExceeded(
                            f"closure exceeded max_order={max_order} at degree {degree}"
                        )
        frontier = new
    return Group(degree, gens, elements, name=name)


def subgroup_as_group(S: Subgroup, name=None) -> Group:
    """Materialize a subgroup as a standalone group on the same points."""
    gens = S.generator_perms()
    return Group(S.parent.degree, gens, S.element_perms(), name=name)


# -- elementary subgroup operations ------------------------------------------


def generated_subgroup(G: Group, seed) -> Subgroup:
    """Smallest subgroup of G containing the seed element indices."""
    return Subgroup(G, G.closure_indices(seed))


def conjugate_subgroup(A: Subgroup, g: int) -> Subgroup:
    G = A.parent
    return Subgroup(G, frozenset(G.conj(a, g) for a in A.members))


def conjugate_members(G: Group, members: frozenset[int], g: int) -> frozenset[int]:
    return frozenset(G.conj(a, g) for a in members)


def _gen_indices_for(G: Group, within: frozenset[int] | None) -> tuple[int, ...]:
    """Generating indices of an ambient set (whole group -> its generators)."""
    if within is None or len(within) == G.order:
        return G.generator_indices
    return Subgroup(G, within).generator_indices()


def is_normal_in(G: Group, a: frozenset[int], within: frozenset[int] | None = None) -> bool:
    """Whether the subgroup with members ``a`` is normal in ``within``."""
    for g in _gen_indices_for(G, within):
        if conjugate_members(G, a, g) != a:
            return False
    return True


def core_members(G: Group, a: frozenset[int], within: frozenset[int] | None = None) -> frozenset[int]:
    """Largest subgroup of ``a`` normal in ``within`` (intersection of conjugates)."""
    gens = _gen_indices_for(G, within)
    s = a
    changed = True
    while changed:
        changed = False
        for g in gens:
            # intersecting with a conjugate keeps a subgroup; no reclosure needed
            t = s & conjugate_members(G, s, g)
            if len(t) != len(s):
                s = t
                changed = True
    return s


def normal_closure_members(G: Group, a: frozenset[int], within: frozenset[int] | None = None) -> frozenset[int]:
    """Smallest subgroup containing ``a`` normal in ``within``."""
    gens = _gen_indices_for(G, within)
    s = G.closure_indices(a - {G.identity_index})
    changed = True
    while changed:
        changed = False
        extra = set()
        for g in gens:
            extra |= conjugate_members(G, s, g) - s
        if extra:
            s = G.closure_indices(set(s) | extra)
            changed = True
    return s


def core(G: Group, A: Subgroup) -> Subgroup:
    return Subgroup(G, core_members(G, A.members))


def normal_closure(G: Group, A: Subgroup) -> Subgroup:
    return Subgroup(G, normal_closure_members(G, A.members))


def normalizer_members(G: Group, a: frozenset[int], within: frozenset[int] | None = None) -> frozenset[int]:
    domain = range(G.order) if within is None else within
    return frozenset(g for g in domain if conjugate_members(G, a, g) == a)


def normalizer(G: Group, A: Subgroup) -> Subgroup:
    return Subgroup(G, normalizer_members(G, A.members))


def centralizer_of_factor(G: Group, H: Subgroup, K: Subgroup) -> Subgroup:
    """C_G(H/K) = elements whose commutator with all of H lands in K."""
    if not K.members <= H.members or not is_normal_in(G, K.members, H.members):
        raise NotNormal("K must be a normal subgroup of H")
    if not is_normal_in(G, H.members) or not is_normal_in(G, K.members):
        raise NotNormal("H and K must both be normal in G")
    hgens = Subgroup(G, H.members).generator_indices()
    km = K.members
    out = frozenset(
        g for g in range(G.order) if all(G.commutator(g, h) in km for h in hgens)
    )
    return Subgroup(G, out)


def centre(G: Group) -> Subgroup:
    return centralizer_of_factor(G, G.full_subgroup(), G.trivial_subgroup())


def product_members(G: Group, a: frozenset[int], b: frozenset[int]) -> frozenset[int]:
    return frozenset(G.mult(x, y) for x in a for y in b)


def product_set(A: Subgroup, B: Subgroup) -> frozenset[int]:
    return product_members(A.parent, A.members, B.members)


def product_permutes(A: Subgroup, B: Subgroup) -> bool:
    """AB == BA as element sets (equivalently, AB is a subgroup)."""
    if A.parent is not B.parent:
        raise ValueError("subgroups must share a parent group")
    G = A.parent
    ab = product_members(G, A.members, B.members)
    return all(G.mult(y, x) in ab for x in A.members for y in B.members)


# -- quotients and products ---------------------------------------------------


def quotient_group(G: Group, N: Subgroup, name=None) -> tuple[Group, tuple[int, ...]]:
    """Quotient as the permutation action on right cosets of N.

    Returns (Q, projection) where projection maps each element index of G to
    the index of its image in Q's canonical element list.
    """
    if not is_normal_in(G, N.members):
        raise NotNormal("quotient requires a normal subgroup")
    m = G.order // N.order
    coset_of = [-1] * G.order
    reps: list[int] = []
    for i in range(G.order):
        if coset_of[i] == -1:
            c = len(reps)
            reps.append(i)
            for n in N.members:
                coset_of[G.mult(n, i)] = c
    # right multiplication by g permutes the cosets; this is a homomorphism
    # under apply-left-then-right composition
    images: dict[tuple[int, ...], list[int]] = {}
    for g in range(G.order):
        img = tuple(coset_of[G.mult(reps[c], g)] for c in range(m))
        images.setdefault(img, []).append(g)
    perms = sorted(Permutation(img) for img in images)
    gen_perms = []
    for g in G.generator_indices:
        img = tuple(coset_of[G.mult(reps[c], g)] for c in range(m))
        p = Permutation(img)
        if not p.is_identity() and p not in gen_perms:
            gen_perms.append(p)
    if not gen_perms:
        gen_perms = [Permutation.identity(m)]
    Q = Group(m, gen_perms, perms, name=name)
    projection = [0] * G.order
    for img, gs in images.items():
        qi = Q.index_of(Permutation(img))
        for g in gs:
            projection[g] = qi
    return Q, tuple(projection)


def direct_product(G1: Group, G2: Group, name=None) -> Group:
    """Degree-summed action of G1 x G2."""
    d1, d2 = G1.degree, G2.degree
    elements = []
    for p in G1.elements:
        left = p.images
        for q in G2.elements:
            elements.append(Permutation(left + tuple(x + d1 for x in q.images)))
    gens = [Permutation(g.images + tuple(range(d1, d1 + d2))) for g in G1.generators]
    gens += [Permutation(tuple(range(d1)) + tuple(x + d1 for x in g.images)) for g in G2.generators]
    gens = [g for g in gens if not g.is_identity()] or [Permutation.identity(d1 + d2)]
    return Group(d1 + d2, gens, elements, name=name)


def _validate_iso(Q1: Group, Q2: Group, iso) -> list[int]:
    if Q1.order != Q2.order:
        raise BadIso("quotients have different orders")
    mapping = [iso[i] for i in range(Q1.order)] if not isinstance(iso, dict) else [
        iso[i] for i in range(Q1.order)
    ]
    if sorted(mapping) != list(range(Q2.order)):
        raise BadIso("quotient-matching map is not a bijection")
    for a in range(Q1.order):
        for b in range(Q1.order):
            if mapping[Q1.mult(a, b)] != Q2.mult(mapping[a], mapping[b]):
                raise BadIso("quotient-matching map does not respect products")
    return mapping


def subdirect_product(G1: Group, G2: Group, N1: Subgroup, N2: Subgroup, iso, name=None) -> Group:
    """Pairs (a, b) of the direct product whose matched quotient images agree.

    ``iso`` maps element indices of G1/N1 to element indices of G2/N2 and is
    validated to be an isomorphism.  Passing N1 = G1 and N2 = G2 degenerates
    to the full direct product.
    """
    Q1, proj1 = quotient_group(G1, N1)
    Q2, proj2 = quotient_group(G2, N2)
    mapping = _validate_iso(Q1, Q2, iso)
    d1 = G1.degree
    elements = []
    for i, p in enumerate(G1.elements):
        target = mapping[proj1[i]]
        left = p.images
        for j, q in enumerate(G2.elements):
            if proj2[j] == target:
                elements.append(Permutation(left + tuple(x + d1 for x in q.images)))
    degree = d1 + G2.degree
    # greedy deterministic generating set for the filtered element list
    member_set = set(elements)
    gens: list[Permutation] = []
    have = {Permutation.identity(degree)}
    for p in sorted(member_set):
        if p not in have:
            gens.append(p)
            have = _perm_closure(gens, degree)
            if len(have) == len(member_set):
                break
    if not gens:
        gens = [Permutation.identity(degree)]
    return Group(degree, gens, elements, name=name)


def _perm_closure(gens, degree):
    ident = Permutation.identity(degree)
    out = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for p in frontier:
            for g in gens:
                q = p * g
                if q not in out:
                    out.add(q)
                    new.append(q)
        frontier = new
    return out


def match_cyclic_quotients(Q1: Group, Q2: Group) -> list[int]:
    """Canonical isomorphism between two cyclic groups of equal prime order."""
    if Q1.order != Q2.order:
        raise BadIso("quotients have different orders")
    n = Q1.order
    if n == 1:
        return [0]
    g1 = next(i for i in range(n) if Q1.element_order(i) == n)
    g2 = next(i for i in range(n) if Q2.element_order(i) == n)
    mapping = [0] * n
    a, b = Q1.identity_index, Q2.identity_index
    for _ in range(n):
        mapping[a] = b
        a, b = Q1.mult(a, g1), Q2.mult(b, g2)
    return mapping


# -- basic structural predicates ----------------------------------------------


def derived_subgroup(G: Group) -> Subgroup:
    """Subgroup generated by all commutators."""
    comms = {G.commutator(a, b) for a in range(G.order) for b in range(G.order)}
    return Subgroup(G, G.closure_indices(comms))


def derived_members(G: Group, within: frozenset[int]) -> frozenset[int]:
    comms = {G.commutator(a, b) for a in within for b in within}
    return G.closure_indices(comms)


def is_abelian(G: Group) -> bool:
    gens = G.generator_indices
    return all(G.mult(a, b) == G.mult(b, a) for a in gens for b in gens)


def is_soluble(G: Group) -> bool:
    """Derived series reaches the trivial subgroup."""
    current = frozenset(range(G.order))
    while len(current) > 1:
        nxt = derived_members(G, current)
        if len(nxt) == len(current):
            return False
        current = nxt
    return True


def prime_factors(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_nilpotent(G: Group) -> bool:
    """Every Sylow subgroup is normal (its prime's elements close at Sylow order)."""
    factors = prime_factors(G.order)
    for p, e in factors.items():
        p_elems = [i for i in range(G.order) if G.element_order(i) % p == 0 and _is_p_element(G, i, p)]
        if len(G.closure_indices(p_elems)) != p**e:
            return False
    return True


def _is_p_element(G: Group, i: int, p: int) -> bool:
    o = G.element_order(i)
    while o % p == 0:
        o //= p
    return o == 1


def basic_predicates(G: Group) -> dict[str, bool]:
    return {
        "is_abelian": is_abelian(G),
        "is_nilpotent": is_nilpotent(G),
        "is_soluble": is_soluble(G),
    }
