"""Cayley graphs, GRR eligibility, and connection-set search."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .aut import automorphisms
from .graphs import Graph
from .groups import classify, generated_subgroup
from .perm import GroupError, PermGroup, Permutation


class ConnectionSetError(ValueError):
    """Connection set violates the Cayley graph requirements."""


@dataclass(frozen=True)
class ConnectionSet:
    """Inverse-closed subset of a group, identity excluded."""

    elements: tuple[Permutation, ...]

    @classmethod
    def of(cls, group: PermGroup, elements) -> "ConnectionSet":
        elems = tuple(sorted(set(elements)))
        ident = group.identity()
        for s in elems:
            if s not in group:
                raise ConnectionSetError(f"{s!r} is not a group element")
            if s == ident:
                raise ConnectionSetError("identity is not allowed in a connection set")
            if s.inverse() not in elems:
                raise ConnectionSetError(f"set is not inverse-closed at {s!r}")
        return cls(elems)

    def __len__(self) -> int:
        return len(self.elements)


def cayley_graph(group: PermGroup, conn: ConnectionSet | tuple) -> Graph:
    """Cay(G, S): vertices are group elements, x ~ sx for s in S.

    Vertex i is group.elements[i]; the graph is |S|-regular and the right
    translations x -> xg are always automorphisms.
    """
    if not isinstance(conn, ConnectionSet):
        conn = ConnectionSet.of(group, conn)
    idx = group._index
    edges = []
    for i, x in enumerate(group.elements):
        for s in conn.elements:
            j = idx[s * x]
            if i < j:
                edges.append((i, j))
    g = Graph.from_edges(group.order, edges)
    assert g.is_regular() and (group.order == 0 or g.degree(0) == len(conn))
    return g


def has_grr(group: PermGroup) -> bool:
    """Whether some Cayley graph of the group has automorphism group exactly G."""
    return classify(group).has_grr


@dataclass(frozen=True)
class GrrSearchResult:
    """Outcome of a connection-set search.

    status is "found", "absent" (enumeration completed with no hit; a
    nonexistence certificate), or "budget_exhausted" (not a certificate).
    """

    status: str
    connection_set: ConnectionSet | None
    graph: Graph | None
    sets_tested: int

    @property
    def found(self) -> bool:
        return self.status == "found"


MAX_GRR_ORDER = 32


def find_grr(group: PermGroup, budget: int = 200_000) -> GrrSearchResult:
    """Search for a GRR connection set, smallest sets first, deterministically.

    Enumerates inverse-closed sets as unions of {s, s^-1} atoms, by
    increasing |S| then lexicographically.  Only |S| <= (|G|-1)/2 is
    enumerated: the complement of a GRR connection set is again one (the
    complement graph has the same automorphism group), so completing this
    range with no hit certifies that no GRR exists.  Sets that do not
    generate the group are skipped (their Cayley graphs are disconnected
    unions of isomorphic blocks, never GRRs).
    """
    n = group.order
    if n > MAX_GRR_ORDER:
        raise GroupError(f"GRR search capped at order {MAX_GRR_ORDER}")
    if n == 1:
        return GrrSearchResult("found", ConnectionSet(()), Graph.empty(1), 1)
    ident = group.identity()
    atoms = []
    seen = set()
    for e in group.elements:
        if e == ident or e in seen:
            continue
        inv = e.inverse()
        atom = tuple(sorted({e, inv}))
        atoms.append(atom)
        seen.update(atom)
    singles = [a for a in atoms if len(a) == 1]
    pairs = [a for a in atoms if len(a) == 2]
    tested = 0
    half = (n - 1) // 2
    for size in range(1, half + 1):
        for npairs in range(size // 2 + 1):
            nsingles = size - 2 * npairs
            if nsingles > len(singles) or npairs > len(pairs):
                continue
            for sc in combinations(singles, nsingles):
                for pc in combinations(pairs, npairs):
                    elems = tuple(e for a in sc + pc for e in a)
                    if len(generated_subgroup(group, elems)) != n:
                        continue
                    if tested >= budget:
                        return GrrSearchResult("budget_exhausted", None, None, tested)
                    tested += 1
                    conn = ConnectionSet(tuple(sorted(elems)))
                    g = cayley_graph(group, conn)
                    if automorphisms(g).order == n:
                        return GrrSearchResult("found", conn, g, tested)
    return GrrSearchResult("absent", None, None, tested)
