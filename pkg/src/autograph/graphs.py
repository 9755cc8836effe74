"""Simple undirected graphs with bit-row adjacency, plus graph6/DOT I/O."""

from __future__ import annotations

from typing import Iterable, Sequence


class GraphError(ValueError):
    """Malformed graph data or encoding."""


class Graph:
    """Finite simple undirected graph on vertices 0..n-1.

    ``rows[i]`` is an integer bitmask; bit ``j`` is set iff i ~ j.  Optional
    display labels carry source-text vertex names (1-based, primes) for
    DOT output; indices stay 0-based everywhere else.
    """

    __slots__ = ("n", "rows", "labels")

    def __init__(
        self,
        n: int,
        rows: Sequence[int],
        labels: Sequence[str] | None = None,
    ) -> None:
        if n < 0 or len(rows) != n:
            raise GraphError(f"need {n} adjacency rows, got {len(rows)}")
        rows = tuple(int(r) for r in rows)
        mask = (1 << n) - 1
        for i, r in enumerate(rows):
            if r & ~mask:
                raise GraphError(f"row {i} has bits outside 0..{n - 1}")
            if (r >> i) & 1:
                raise GraphError(f"loop at vertex {i}")
        for i in range(n):
            for j in range(i + 1, n):
                if ((rows[i] >> j) & 1) != ((rows[j] >> i) & 1):
                    raise GraphError(f"adjacency not symmetric at ({i}, {j})")
        self.n = n
        self.rows = rows
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise GraphError("label count != vertex count")
        self.labels = labels

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [0] * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        mask = (1 << n) - 1
        return cls(n, [mask ^ (1 << i) for i in range(n)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise GraphError("cycle needs at least 3 vertices")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows, labels)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool((self.rows[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if (self.rows[i] >> j) & 1
        ]

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.rows[v].bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(r.bit_count() for r in self.rows))

    def is_regular(self) -> bool:
        return self.n == 0 or len({r.bit_count() for r in self.rows}) == 1

    def complement(self) -> "Graph":
        mask = (1 << self.n) - 1
        return Graph(
            self.n,
            [(mask ^ r) & ~(1 << i) for i, r in enumerate(self.rows)],
            self.labels,
        )

    def disjoint_union(self, other: "Graph") -> "Graph":
        rows = list(self.rows) + [r << self.n for r in other.rows]
        labels = None
        if self.labels is not None and other.labels is not None:
            labels = self.labels + other.labels
        return Graph(self.n + other.n, rows, labels)

    def relabel(self, images: Sequence[int]) -> "Graph":
        """Image of the graph under the vertex map i -> images[i]."""
        rows = [0] * self.n
        for i in range(self.n):
            r = self.rows[i]
            new = 0
            for j in range(self.n):
                if (r >> j) & 1:
                    new |= 1 << images[j]
            rows[images[i]] = new
        labels = None
        if self.labels is not None:
            lab = [""] * self.n
            for i in range(self.n):
                lab[images[i]] = self.labels[i]
            labels = lab
        return Graph(self.n, rows, labels)

    def connected_components(self) -> list[tuple[int, ...]]:
        seen = 0
        comps = []
        for v in range(self.n):
            if (seen >> v) & 1:
                continue
            comp = 1 << v
            frontier = self.rows[v]
            while frontier & ~comp:
                comp |= frontier
                frontier = 0
                m = comp
                while m:
                    w = (m & -m).bit_length() - 1
                    frontier |= self.rows[w]
                    m &= m - 1
            seen |= comp
            comps.append(tuple(i for i in range(self.n) if (comp >> i) & 1))
        return comps

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range 0..{self.n - 1}")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count()})"


def to_graph6(g: Graph) -> str:
    """Encode in graph6: column-major upper triangle, 6-bit groups, offset 63."""
    n = g.n
    if n <= 62:
        header = chr(63 + n)
    elif n <= 258047:
        header = "~" + "".join(
            chr(63 + ((n >> shift) & 0x3F)) for shift in (12, 6, 0)
        )
    else:
        raise GraphError("graph too large for graph6 encoding")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append((g.rows[i] >> j) & 1)
    while len(bits) % 6:
        bits.append(0)
    chars = [
        chr(63 + int("".join(map(str, bits[k : k + 6])), 2))
        for k in range(0, len(bits), 6)
    ]
    return header + "".join(chars)


def from_graph6(text: str) -> Graph:
    """Decode a graph6 string (optionally prefixed with '>>graph6<<')."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise GraphError("empty graph6 string")
    vals = []
    for ch in s:
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise GraphError(f"invalid graph6 character {ch!r}")
        vals.append(v)
    if vals[0] == 63:  # '~': 18-bit vertex count
        if len(vals) < 4:
            raise GraphError("truncated graph6 header")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphError(
            f"graph6 body length {len(body)} != expected {(nbits + 5) // 6}"
        )
    bits = []
    for v in body:
        bits.extend((v >> k) & 1 for k in (5, 4, 3, 2, 1, 0))
    if any(bits[nbits:]):
        raise GraphError("nonzero padding bits in graph6 body")
    rows = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    return Graph(n, rows)


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        label = g.labels[v] if g.labels is not None else str(v)
        lines.append(f'  {v} [label="{label}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines)
