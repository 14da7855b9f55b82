"""Permutations on {0..degree-1} with left-to-right composition.

``p * q`` means "apply p first, then q", so ``(p * q)[x] == q[p[x]]``.
Under this convention the conjugate ``g.inverse() * a * g`` relabels the
cycles of ``a`` by the point map of ``g``.
"""

from __future__ import annotations

from .errors import BadPermutation


class Permutation:
    """Immutable permutation stored as a tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        seen = [False] * n
        for x in images:
            if not isinstance(x, int) or x < 0 or x >= n or seen[x]:
                raise BadPermutation(f"images {images!r} are not a bijection on 0..{n - 1}")
            seen[x] = True
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def degree(self) -> int:
        return len(self.images)

    @staticmethod
    def identity(degree: int) -> Permutation:
        return Permutation(range(degree))

    @staticmethod
    def from_cycles(degree: int, cycles) -> Permutation:
        """Build from disjoint 0-based cycles; repeated points are rejected."""
        images = list(range(degree))
        used = set()
        for cycle in cycles:
            for point in cycle:
                if not 0 <= point < degree:
                    raise BadPermutation(f"point {point} out of range for degree {degree}")
                if point in used:
                    raise BadPermutation(f"point {point} appears in more than one cycle")
                used.add(point)
            for i, point in enumerate(cycle):
                images[point] = cycle[(i + 1) % len(cycle)]
        return Permutation(images)

    def __mul__(self, other: Permutation) -> Permutation:
        if other.degree != self.degree:
            raise BadPermutation("cannot compose permutations of different degrees")
        oi = other.images
        return Permutation(tuple(oi[x] for x in self.images))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(inv)

    def __pow__(self, k: int) -> Permutation:
        base = self if k >= 0 else self.inverse()
        result = Permutation.identity(self.degree)
        for _ in range(abs(k)):
            result = result * base
        return result

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images))

    def order(self) -> int:
        n = 1
        p = self
        while not p.is_identity():
            p = p * self
            n += 1
        return n

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles of length > 1, each starting at its least point."""
        out = []
        seen = [False] * self.degree
        for start in range(self.degree):
            if seen[start] or self.images[start] == start:
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self.images[x]
            out.append(tuple(cyc))
        return out

    def cycle_string(self, one_based: bool = True) -> str:
        """Cycle notation, e.g. ``(1 2 3)(4 5)``; identity renders as ``()``."""
        shift = 1 if one_based else 0
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(p + shift) for p in cyc) + ")" for cyc in cycles)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: Permutation):
        return self.images < other.images

    def __le__(self, other: Permutation):
        return self.images <= other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({self.cycle_string()}, degree={self.degree})"
