"""Built-in group constructors, the named catalog and the default corpus.

Builders return permutation groups with documented orders; the catalog maps
stable names to builders so corpus pairs, CLI references and regression pins
all resolve the same way.  Groups and lattices are cached per process.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cache
from typing import Callable

from .errors import CapExceeded
from .group import (
    Group,
    Subgroup,
    generated_subgroup,
    group_from_generators,
    match_cyclic_quotients,
    quotient_group,
    subdirect_product,
    subgroup_as_group,
)
from .lattice import DEFAULT_MAX_SUBGROUPS, SubgroupLattice, all_subgroups
from .perm import Permutation
from .sigma import SigmaPartition

SYMMETRIC_CAP = 8


def cyclic(n: int) -> Group:
    if n < 1:
        raise ValueError("cyclic order must be positive")
    if n == 1:
        return group_from_generators(1, [], max_order=1, name="C1")
    gen = Permutation.from_cycles(n, [tuple(range(n))])
    return group_from_generators(n, [gen], max_order=n, name=f"C{n}")


def dihedral(n: int) -> Group:
    """Symmetries of the regular n-gon, order 2n (n >= 3)."""
    if n < 3:
        raise ValueError("dihedral builder needs n >= 3")
    rotation = Permutation.from_cycles(n, [tuple(range(n))])
    reflection = Permutation([(n - i) % n for i in range(n)])
    return group_from_generators(n, [rotation, reflection], max_order=2 * n, name=f"D{n}")


def symmetric(n: int) -> Group:
    if n < 1 or n > SYMMETRIC_CAP:
        raise CapExceeded(f"symmetric builder bounded to 1 <= n <= {SYMMETRIC_CAP}")
    if n == 1:
        return group_from_generators(1, [], max_order=1, name="S1")
    gens = [Permutation.from_cycles(n, [(0, 1)])]
    if n > 2:
        gens.append(Permutation.from_cycles(n, [tuple(range(n))]))
    return group_from_generators(n, gens, max_order=math.factorial(n), name=f"S{n}")


def alternating(n: int) -> Group:
    if n < 3 or n > SYMMETRIC_CAP:
        raise CapExceeded(f"alternating builder bounded to 3 <= n <= {SYMMETRIC_CAP}")
    gens = [Permutation.from_cycles(n, [(i, i + 1, i + 2)]) for i in range(n - 2)]
    return group_from_generators(n, gens, max_order=math.factorial(n) // 2, name=f"A{n}")


def elementary_abelian(p: int, k: int) -> Group:
    """Direct power of k cyclic groups of prime order p, on p*k points."""
    if k < 1:
        raise ValueError("k must be positive")
    degree = p * k
    gens = [
        Permutation.from_cycles(degree, [tuple(range(i * p, (i + 1) * p))]) for i in range(k)
    ]
    return group_from_generators(degree, gens, max_order=p**k, name=f"E{p}^{k}")


def frobenius21() -> Group:
    """Nonabelian group of order 21: a 7-cycle normalized by a 3-element."""
    a = Permutation.from_cycles(7, [tuple(range(7))])
    b = Permutation.from_cycles(7, [(1, 2, 4), (3, 6, 5)])
    return group_from_generators(7, [a, b], max_order=21, name="F21")


def special_linear_2_3() -> Group:
    """SL(2,3) acting on the 8 nonzero vectors of the plane over GF(3)."""
    vectors = [(x, y) for x in range(3) for y in range(3) if (x, y) != (0, 0)]
    index = {v: i for i, v in enumerate(vectors)}

    def matrix_perm(a, b, c, d):
        images = [0] * 8
        for (x, y), i in index.items():
            images[i] = index[((a * x + b * y) % 3, (c * x + d * y) % 3)]
        return Permutation(images)

    gens = [matrix_perm(1, 1, 0, 1), matrix_perm(1, 0, 1, 1)]
    return group_from_generators(8, gens, max_order=24, name="SL(2,3)")


def _sylow2_of_sl23(sl23: Group) -> Subgroup:
    order4 = [i for i in range(sl23.order) if sl23.element_order(i) == 4]
    return generated_subgroup(sl23, order4)


def quaternion() -> Group:
    """The order-8 group of unit quaternions, as the Sylow 2-subgroup of SL(2,3)."""
    sl23 = special_linear_2_3()
    q = subgroup_as_group(_sylow2_of_sl23(sl23), name="Q8")
    if q.order != 8:
        raise CapExceeded("unexpected Sylow 2-subgroup order in SL(2,3)")
    return q


def amalgam168() -> Group:
    """Order-168 subdirect product of SL(2,3) and F21 over their C3 quotients.

    Filters the degree-15 direct product down to the pairs whose images in
    the two order-3 quotients match under the canonical generator-matching
    isomorphism.
    """
    g1 = special_linear_2_3()
    g2 = frobenius21()
    n1 = _sylow2_of_sl23(g1)
    n2 = generated_subgroup(g2, [i for i in range(g2.order) if g2.element_order(i) == 7])
    q1, _ = quotient_group(g1, n1)
    q2, _ = quotient_group(g2, n2)
    iso = match_cyclic_quotients(q1, q2)
    return subdirect_product(g1, g2, n1, n2, iso, name="G168")


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    builder: Callable[[], Group]
    order: int
    summary: str


CATALOG: dict[str, CatalogEntry] = {
    entry.name: entry
    for entry in [
        CatalogEntry("c2", lambda: cyclic(2), 2, "cyclic group of order 2"),
        CatalogEntry("c3", lambda: cyclic(3), 3, "cyclic group of order 3"),
        CatalogEntry("c4", lambda: cyclic(4), 4, "cyclic group of order 4"),
        CatalogEntry("c6", lambda: cyclic(6), 6, "cyclic group of order 6"),
        CatalogEntry("c12", lambda: cyclic(12), 12, "cyclic group of order 12"),
        CatalogEntry("c21", lambda: cyclic(21), 21, "cyclic group of order 21"),
        CatalogEntry("c30", lambda: cyclic(30), 30, "cyclic group of order 30"),
        CatalogEntry("c36", lambda: cyclic(36), 36, "cyclic group of order 36"),
        CatalogEntry("c105", lambda: cyclic(105), 105, "cyclic group of order 105"),
        CatalogEntry("v4", lambda: elementary_abelian(2, 2), 4, "Klein four-group"),
        CatalogEntry("e8", lambda: elementary_abelian(2, 3), 8, "elementary abelian of order 8"),
        CatalogEntry("d4", lambda: dihedral(4), 8, "dihedral group of the square"),
        CatalogEntry("d5", lambda: dihedral(5), 10, "dihedral group of the pentagon"),
        CatalogEntry("d6", lambda: dihedral(6), 12, "dihedral group of the hexagon"),
        CatalogEntry("d15", lambda: dihedral(15), 30, "dihedral group of the 15-gon"),
        CatalogEntry("q8", quaternion, 8, "quaternion group"),
        CatalogEntry("s3", lambda: symmetric(3), 6, "symmetric group on 3 points"),
        CatalogEntry("s4", lambda: symmetric(4), 24, "symmetric group on 4 points"),
        CatalogEntry("a4", lambda: alternating(4), 12, "alternating group on 4 points"),
        CatalogEntry("a5", lambda: alternating(5), 60, "alternating group on 5 points"),
        CatalogEntry("f21", frobenius21, 21, "nonabelian group of order 21"),
        CatalogEntry("sl23", special_linear_2_3, 24, "special linear group SL(2,3)"),
        CatalogEntry("g168", amalgam168, 168, "order-168 amalgam of SL(2,3) and F21"),
    ]
}


SIGMA_CONFIGS: dict[str, SigmaPartition] = {
    "s0": SigmaPartition.singletons(),
    "p23": SigmaPartition.pair((2, 3)),
    "p23-split": SigmaPartition.split_pair((2, 3)),
    "p37": SigmaPartition.pair((3, 7)),
    "p37-split": SigmaPartition.split_pair((3, 7)),
}

# every corpus pair here possesses a complete Hall set (all groups are
# soluble except a5, whose three configs below have full Hall coverage),
# keeping the definition-level predicates non-vacuous across the corpus
CORPUS_SIGMAS = ("s0", "p23", "p23-split")

BUILTIN_CORPUS: tuple[tuple[str, str], ...] = tuple(
    (gname, sname) for gname in CATALOG for sname in CORPUS_SIGMAS
)


@cache
def built_group(name: str) -> Group:
    entry = CATALOG.get(name)
    if entry is None:
        raise KeyError(f"no catalog group named {name!r}")
    group = entry.builder()
    if group.order != entry.order:
        raise CapExceeded(f"catalog entry {name} built order {group.order} != {entry.order}")
    return group


@cache
def built_lattice(name: str, max_subgroups: int = DEFAULT_MAX_SUBGROUPS) -> SubgroupLattice:
    return all_subgroups(built_group(name), max_subgroups)


# regression pins; provenance notes say how each value was settled
BUILTIN_MANIFEST = """\
# built-in regression pins
check g168 p23 psigmat expect true    # pinned: exhaustive transitivity sweep over all 168-group subgroup pairs
check g168 s0 psigmat expect false    # pinned: exhaustive sweep finds a non-permutable subnormal subgroup
check s3 s0 psigmat expect true       # pinned: hand enumeration of the six subgroups
check f21 s0 psigmat expect true      # pinned: hand enumeration, normal Sylow 7
check s4 s0 psigmat expect false      # pinned: double transposition inside the Klein subgroup
check a4 s0 psigmat expect false      # pinned: double transposition vs the Sylow 3s
check q8 s0 psigmat expect true       # pinned: all subgroups normal
check c30 s0 sigma-nilpotent expect true   # pinned: abelian
check s4 s0 sigma-soluble expect true      # pinned: chief factor orders 4, 3, 2
check a5 s0 sigma-soluble expect false     # pinned: simple nonabelian chief factor
check a5 p23 sigma-soluble expect false    # pinned: same chief factor spans two blocks
check g168 p23 sigma-soluble expect true   # pinned: chief factors 7, 2, 4, 3 land in single blocks
"""
