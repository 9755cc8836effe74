"""Exhaustive small-graph search for minimal realizations.

Two modes: labeled brute force over all 2^C(n,2) graphs with degree-class
pruning and resumable checkpoints, and isomorph-free scanning with one
representative per isomorphism class (generated level by level through the
canonical form, so the expensive mode reuses the verified engine).
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from pathlib import Path

from .aut import automorphisms, canonical_form
from .graphs import Graph, from_graph6, to_graph6
from .groups import is_isomorphic
from .perm import PermGroup


class SearchError(ValueError):
    """Search parameters outside the supported range."""


LABELED_MAX = 8
ISO_MAX = 10
INVARIANT_MAX = 12

#: number of isomorphism classes of graphs on n vertices, used as an
#: internal self-check of the enumerator
ISO_CLASS_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}

_iso_cache: dict[int, list[Graph]] = {}


def enumerate_iso_classes(n: int) -> list[Graph]:
    """One canonical representative per isomorphism class on n vertices."""
    if not 1 <= n <= ISO_MAX:
        raise SearchError(f"isomorph-free enumeration capped at {ISO_MAX} vertices")
    if n in _iso_cache:
        return _iso_cache[n]
    if n == 1:
        reps = [Graph.empty(1)]
    else:
        parents = enumerate_iso_classes(n - 1)
        seen: dict[tuple[int, ...], Graph] = {}
        for parent in parents:
            for mask in range(1 << (n - 1)):
                rows = [
                    r | (((mask >> i) & 1) << (n - 1))
                    for i, r in enumerate(parent.rows)
                ]
                rows.append(mask)
                c = canonical_form(Graph(n, rows))
                if c.rows not in seen:
                    seen[c.rows] = c
        reps = [seen[k] for k in sorted(seen)]
    if n in ISO_CLASS_COUNTS and len(reps) != ISO_CLASS_COUNTS[n]:
        raise SearchError(
            f"enumerated {len(reps)} classes on {n} vertices, "
            f"expected {ISO_CLASS_COUNTS[n]}"
        )
    _iso_cache[n] = reps
    return reps


@dataclass(frozen=True)
class SearchReport:
    """Outcome of a minimal-realization scan."""

    target: str
    n_max: int
    mode: str
    found_n: int | None
    found_graph: Graph | None
    certified_absent_up_to: int
    graphs_examined: int
    wall_time: float

    @property
    def found(self) -> bool:
        return self.found_graph is not None

    def to_json(self) -> dict:
        return {
            "target": self.target,
            "n_max": self.n_max,
            "mode": self.mode,
            "found_n": self.found_n,
            "found_graph6": to_graph6(self.found_graph) if self.found_graph else None,
            "certified_absent_up_to": self.certified_absent_up_to,
            "graphs_examined": self.graphs_examined,
            "wall_time": round(self.wall_time, 3),
        }


def _matches(graph: Graph, target: PermGroup) -> bool:
    result = automorphisms(graph)
    if result.order != target.order:
        return False
    return is_isomorphic(PermGroup(graph.n, result.generators), target)


def _degree_class_prune(rows: list[int], smallest_prime: int) -> bool:
    """True when the graph cannot support a faithful action of the target.

    Vertices in one automorphism orbit share a degree, and a faithful action
    of a nontrivial group moves some vertex in an orbit of at least
    smallest-prime size, so some degree class must be at least that large.
    """
    counts: dict[int, int] = {}
    for r in rows:
        d = r.bit_count()
        counts[d] = counts.get(d, 0) + 1
    return max(counts.values()) < smallest_prime


def _smallest_prime_factor(n: int) -> int:
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


def _labeled_scan(
    target: PermGroup,
    n: int,
    checkpoint: str | Path | None,
    checkpoint_every: int,
    state: dict,
) -> Graph | None:
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    total = 1 << len(pairs)
    prune = target.order > 1
    q = _smallest_prime_factor(target.order) if prune else 1
    start = 0
    if checkpoint is not None and state.get("n") == n:
        start = state.get("next_mask", 0)
    for mask in range(start, total):
        rows = [0] * n
        m = mask
        for (i, j) in pairs:
            if m & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            m >>= 1
        state["examined"] = state.get("examined", 0) + 1
        if checkpoint is not None and state["examined"] % checkpoint_every == 0:
            _write_checkpoint(checkpoint, {"n": n, "next_mask": mask + 1, **state})
        if prune and n and _degree_class_prune(rows, q):
            continue
        g = Graph(n, rows)
        if _matches(g, target):
            return g
    if checkpoint is not None:
        _write_checkpoint(checkpoint, {"n": n + 1, "next_mask": 0, **state})
    return None


def _write_checkpoint(path: str | Path, payload: dict) -> None:
    data = {k: v for k, v in payload.items() if k in ("n", "next_mask", "examined")}
    Path(path).write_text(json.dumps(data))


def _read_checkpoint(path: str | Path) -> dict:
    p = Path(path)
    if not p.exists():
        return {}
    return json.loads(p.read_text())


def min_realization(
    target: PermGroup,
    n_max: int,
    mode: str = "iso",
    target_name: str = "",
    checkpoint: str | Path | None = None,
    checkpoint_every: int = 1_000_000,
) -> SearchReport:
    """Scan n = 1..n_max for the least vertex count realizing the target.

    Returns the first (therefore minimal) hit and certifies absence below
    it; if nothing is found the whole range is certified absent.
    """
    if mode not in ("iso", "labeled"):
        raise SearchError(f"unknown mode {mode!r}")
    limit = ISO_MAX if mode == "iso" else LABELED_MAX
    if not 1 <= n_max <= limit:
        raise SearchError(f"mode {mode!r} supports n_max 1..{limit}")
    t0 = time.time()
    state = _read_checkpoint(checkpoint) if checkpoint else {}
    examined = state.get("examined", 0)
    start_n = state.get("n", 1) if mode == "labeled" else 1
    for n in range(start_n, n_max + 1):
        if mode == "iso":
            found = None
            for g in enumerate_iso_classes(n):
                examined += 1
                if _matches(g, target):
                    found = g
                    break
        else:
            state["examined"] = examined
            found = _labeled_scan(target, n, checkpoint, checkpoint_every, state)
            examined = state["examined"]
        if found is not None:
            return SearchReport(
                target_name, n_max, mode, n, found, n - 1, examined,
                time.time() - t0,
            )
    return SearchReport(
        target_name, n_max, mode, None, None, n_max, examined, time.time() - t0
    )


def find_with_aut(target: PermGroup, n: int, target_name: str = "") -> Graph | None:
    """Some graph on exactly n vertices with Aut isomorphic to the target.

    For cyclic targets of prime order the scan runs over graphs invariant
    under a fixed order-p permutation, one orbit profile at a time; this is
    exhaustive for such targets (any realization can be relabelled so that
    its order-p automorphism becomes the canonical one) and extends the
    reach to n = 12.  Other targets scan the isomorphism classes.
    """
    p = target.order
    if _is_prime(p) and n > 8:
        if n > INVARIANT_MAX:
            raise SearchError(f"invariant search capped at {INVARIANT_MAX} vertices")
        return _invariant_scan(target, n, p)
    if n > ISO_MAX:
        raise SearchError(f"class scan capped at {ISO_MAX} vertices")
    for g in enumerate_iso_classes(n):
        if _matches(g, target):
            return g
    return None


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def _invariant_scan(target: PermGroup, n: int, p: int) -> Graph | None:
    for cycles in range(n // p, 0, -1):
        fixed = n - p * cycles
        sigma = []
        for c in range(cycles):
            base = c * p
            sigma.extend(base + (i + 1) % p for i in range(p))
        sigma.extend(range(p * cycles, n))
        orbits = _pair_orbits(n, sigma)
        for mask in range(1 << len(orbits)):
            edges = [
                e for i in range(len(orbits)) if (mask >> i) & 1 for e in orbits[i]
            ]
            g = Graph.from_edges(n, edges)
            if _matches(g, target):
                return g
    return None


def _pair_orbits(n: int, sigma: list[int]) -> list[list[tuple[int, int]]]:
    orbits = []
    seen: set[tuple[int, int]] = set()
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) in seen:
                continue
            orb = []
            u, v = i, j
            while (min(u, v), max(u, v)) not in seen:
                e = (min(u, v), max(u, v))
                seen.add(e)
                orb.append(e)
                u, v = sigma[u], sigma[v]
            orbits.append(orb)
    return orbits
