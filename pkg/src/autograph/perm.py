"""Permutations on {0..n-1} and small permutation groups.

Groups are represented by generators plus an explicitly enumerated element
list.  Full enumeration is capped at MAX_GROUP_ORDER, which covers every
group this library works with; automorphism groups that may be larger are
handled separately (see :func:`group_order`).
"""

from __future__ import annotations

from math import lcm
from typing import Iterable, Sequence

MAX_GROUP_ORDER = 256


class GroupError(ValueError):
    """Invalid group construction, bad parameters, or out-of-range order."""


class Permutation:
    """A bijection on {0..n-1}; ``images[i]`` is the image of ``i``."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]) -> None:
        imgs = tuple(int(x) for x in images)
        if sorted(imgs) != list(range(len(imgs))):
            raise GroupError(f"not a permutation of 0..{len(imgs) - 1}: {imgs!r}")
        self.images = imgs

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        imgs = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                imgs[a] = b
        return cls(imgs)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, v: int) -> int:
        return self.images[v]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: ``(p * q)(v) == p(q(v))`` (q first, then p)."""
        q = other.images
        p = self.images
        return Permutation(p[q[v]] for v in range(len(p)))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = [False] * len(self.images)
        out = []
        for v in range(len(self.images)):
            if seen[v] or self.images[v] == v:
                seen[v] = True
                continue
            cyc = []
            w = v
            while not seen[w]:
                seen[w] = True
                cyc.append(w)
                w = self.images[w]
            out.append(tuple(cyc))
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(v) for v in c) + ")" for c in cycs)


def generate_closure(
    generators: Sequence[Permutation], degree: int, limit: int = MAX_GROUP_ORDER
) -> tuple[Permutation, ...]:
    """Close a generator set under products; elements sorted by image tuple."""
    for g in generators:
        if g.degree != degree:
            raise GroupError(f"generator degree {g.degree} != {degree}")
    elems = {Permutation.identity(degree)}
    frontier = [g for g in generators]
    elems.update(frontier)
    while frontier:
        if len(elems) > limit:
            raise GroupError(f"group order exceeds supported limit {limit}")
        new = []
        for g in generators:
            for x in frontier:
                y = g * x
                if y not in elems:
                    elems.add(y)
                    new.append(y)
        frontier = new
    if len(elems) > limit:
        raise GroupError(f"group order exceeds supported limit {limit}")
    return tuple(sorted(elems))


class PermGroup:
    """Permutation group given by generators, with full element list."""

    __slots__ = ("degree", "generators", "elements", "_index")

    def __init__(self, degree: int, generators: Sequence[Permutation]) -> None:
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = generate_closure(self.generators, degree)
        self._index = {p: i for i, p in enumerate(self.elements)}

    @classmethod
    def trivial(cls, degree: int = 1) -> "PermGroup":
        return cls(degree, ())

    @classmethod
    def from_elements(cls, degree: int, elements: Iterable[Permutation]) -> "PermGroup":
        return cls(degree, tuple(sorted(set(elements))))

    @property
    def order(self) -> int:
        return len(self.elements)

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def index(self, p: Permutation) -> int:
        try:
            return self._index[p]
        except KeyError:
            raise GroupError(f"{p!r} is not an element of this group") from None

    def __contains__(self, p: Permutation) -> bool:
        return p in self._index

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PermGroup)
            and self.degree == other.degree
            and self.elements == other.elements
        )

    def __hash__(self) -> int:
        return hash((self.degree, self.elements))

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self.order})"


def _orbit_transversal(
    point: int, gens: list[tuple[int, ...]], n: int
) -> dict[int, tuple[int, ...]]:
    ident = tuple(range(n))
    orbit = {point: ident}
    queue = [point]
    while queue:
        p = queue.pop(0)
        rep = orbit[p]
        for g in gens:
            q = g[p]
            if q not in orbit:
                orbit[q] = tuple(g[rep[i]] for i in range(n))
                queue.append(q)
    return orbit


def group_order(generators: Iterable[Sequence[int]], degree: int) -> int:
    """Order of the group generated by image tuples, via Schreier-Sims.

    Handles groups far larger than MAX_GROUP_ORDER (e.g. S_8); used by the
    automorphism engine where element enumeration would be wasteful.
    """
    n = degree
    ident = tuple(range(n))
    gens = sorted({tuple(g) for g in generators} - {ident})
    if not gens:
        return 1
    base = min(p for g in gens for p in range(n) if g[p] != p)
    orbit = _orbit_transversal(base, gens, n)
    inv_reps = {p: _invert(rep) for p, rep in orbit.items()}
    stab: set[tuple[int, ...]] = set()
    for p, rep in sorted(orbit.items()):
        for g in gens:
            t = tuple(g[rep[i]] for i in range(n))
            u_inv = inv_reps[t[base]]
            s = tuple(u_inv[t[i]] for i in range(n))
            if s != ident:
                stab.add(s)
    return len(orbit) * group_order(stab, n)


def _invert(p: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)
