"""Graph automorphism groups by equitable refinement plus backtracking.

The engine explores the individualization-refinement tree: leaves whose
relabelled adjacency equals the first leaf's yield automorphisms, and the
lexicographically largest leaf defines the canonical form.  Subtrees are
pruned only when an already-discovered automorphism fixing the current
individualization prefix maps an explored sibling onto the candidate, so
both the generated group and the canonical leaf are exact.

automorphisms_bruteforce is the independent oracle: it tests all n!
permutations (vectorized) and is used by the test suite to validate the
engine on every graph up to 5 vertices and large random samples at 6-8.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _itertools_permutations

import numpy as np

from .perm import Permutation, group_order

MAX_VERTICES = 64
BRUTEFORCE_MAX = 8


class AutError(ValueError):
    """Input outside the engine's supported range."""


@dataclass(frozen=True)
class AutResult:
    """Automorphism group of a graph: generators, order, vertex orbits."""

    generators: tuple[Permutation, ...]
    order: int
    orbit_partition: tuple[tuple[int, ...], ...]

    def contains_all(self, perms) -> bool:
        have = {g.images for g in self.generators}
        return all(tuple(p.images) in have for p in perms)


def _refine(n: int, rows: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Refine to the coarsest equitable partition below ``cells``.

    Splitting keys are neighbour counts into splitter cells (isomorphism
    invariants), and split parts are ordered by ascending count, so the
    refinement commutes with relabelling.
    """
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        for splitter in list(cells):
            smask = 0
            for v in splitter:
                smask |= 1 << v
            new_cells: list[list[int]] = []
            for cell in cells:
                if len(cell) == 1:
                    new_cells.append(cell)
                    continue
                buckets: dict[int, list[int]] = {}
                for v in cell:
                    buckets.setdefault((rows[v] & smask).bit_count(), []).append(v)
                if len(buckets) == 1:
                    new_cells.append(cell)
                else:
                    changed = True
                    for key in sorted(buckets):
                        new_cells.append(buckets[key])
            cells = new_cells
            if changed:
                break
    return cells


def _target_cell_index(cells: list[list[int]]) -> int | None:
    """First smallest non-singleton cell, in partition order."""
    best = None
    best_size = None
    for i, cell in enumerate(cells):
        if len(cell) > 1 and (best_size is None or len(cell) < best_size):
            best, best_size = i, len(cell)
    return best


def _leaf_key(n: int, rows: tuple[int, ...], seq: list[int]) -> tuple[int, ...]:
    """Adjacency rows after relabelling seq[i] -> i."""
    pos = [0] * n
    for i, v in enumerate(seq):
        pos[v] = i
    out = []
    for v in seq:
        r = rows[v]
        new = 0
        while r:
            w = (r & -r).bit_length() - 1
            new |= 1 << pos[w]
            r &= r - 1
        out.append(new)
    return tuple(out)


class _Explorer:
    def __init__(self, n: int, rows: tuple[int, ...]):
        self.n = n
        self.rows = rows
        self.gens: list[tuple[int, ...]] = []
        self.first: tuple[tuple[int, ...], list[int]] | None = None
        self.best: tuple[tuple[int, ...], list[int]] | None = None

    def run(self) -> None:
        self._descend(_refine(self.n, self.rows, [list(range(self.n))]), [])

    def _descend(self, cells: list[list[int]], prefix: list[int]) -> None:
        t = _target_cell_index(cells)
        if t is None:
            self._leaf([c[0] for c in cells])
            return
        cell = cells[t]
        explored: list[int] = []
        for v in cell:
            if explored and v in self._pruned(explored, prefix):
                continue
            explored.append(v)
            rest = [w for w in cell if w != v]
            child = cells[:t] + [[v], rest] + cells[t + 1 :]
            self._descend(_refine(self.n, self.rows, child), prefix + [v])

    def _pruned(self, explored: list[int], prefix: list[int]) -> set[int]:
        """Orbit of explored siblings under found automorphisms fixing prefix."""
        fixing = [g for g in self.gens if all(g[p] == p for p in prefix)]
        orbit = set(explored)
        queue = list(explored)
        while queue:
            v = queue.pop()
            for g in fixing:
                w = g[v]
                if w not in orbit:
                    orbit.add(w)
                    queue.append(w)
        return orbit

    def _leaf(self, seq: list[int]) -> None:
        key = _leaf_key(self.n, self.rows, seq)
        if self.best is None or key > self.best[0]:
            self.best = (key, seq)
        if self.first is None:
            self.first = (key, seq)
            return
        if key == self.first[0]:
            # identical relabelled adjacency: first_seq[i] -> seq[i] is an
            # automorphism
            images = [0] * self.n
            for i, v in enumerate(self.first[1]):
                images[v] = seq[i]
            g = tuple(images)
            if g != tuple(range(self.n)):
                self.gens.append(g)


def _check_size(graph) -> None:
    if graph.n > MAX_VERTICES:
        raise AutError(f"graph has {graph.n} > {MAX_VERTICES} vertices")


def _orbits_from_gens(n: int, gens) -> tuple[tuple[int, ...], ...]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return tuple(tuple(groups[r]) for r in sorted(groups))


def automorphisms(graph) -> AutResult:
    """Exact automorphism group of a graph on at most MAX_VERTICES vertices."""
    _check_size(graph)
    if graph.n == 0:
        return AutResult((), 1, ())
    ex = _Explorer(graph.n, graph.rows)
    ex.run()
    gens = tuple(Permutation(g) for g in ex.gens)
    order = group_order([g.images for g in gens], graph.n)
    return AutResult(gens, order, _orbits_from_gens(graph.n, ex.gens))


def canonical_form(graph):
    """Isomorphism-invariant relabelling: equal outputs iff inputs isomorphic."""
    from .graphs import Graph

    _check_size(graph)
    if graph.n == 0:
        return Graph(0, [])
    ex = _Explorer(graph.n, graph.rows)
    ex.run()
    assert ex.best is not None
    return Graph(graph.n, ex.best[0])


_perm_tables: dict[int, np.ndarray] = {}


def _perm_table(n: int) -> np.ndarray:
    if n not in _perm_tables:
        _perm_tables[n] = np.array(
            list(_itertools_permutations(range(n))), dtype=np.int8
        )
    return _perm_tables[n]


def automorphisms_bruteforce(graph) -> AutResult:
    """Oracle: test all n! permutations.  Generators are all automorphisms."""
    if graph.n > BRUTEFORCE_MAX:
        raise AutError(f"brute force capped at {BRUTEFORCE_MAX} vertices")
    if graph.n == 0:
        return AutResult((), 1, ())
    n = graph.n
    adj = np.zeros((n, n), dtype=np.int8)
    for i in range(n):
        for j in range(n):
            adj[i, j] = (graph.rows[i] >> j) & 1
    perms = _perm_table(n)
    permuted = adj[perms[:, :, None], perms[:, None, :]]
    mask = (permuted == adj).all(axis=(1, 2))
    autos = [tuple(int(x) for x in p) for p in perms[mask]]
    gens = tuple(Permutation(a) for a in autos if a != tuple(range(n)))
    return AutResult(gens, len(autos), _orbits_from_gens(n, autos))
