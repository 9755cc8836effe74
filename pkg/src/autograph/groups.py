"""Group catalog, structure analysis, and isomorphism testing.

Every group family the constructions need is realised as a faithful
permutation group: natural small-degree actions where available (cyclic,
dihedral, alternating), the regular action otherwise.  Structure queries
(classification, quotients, abelian splittings) all work by element
enumeration, which the order cap keeps cheap.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product as _iproduct
from math import lcm

from .perm import MAX_GROUP_ORDER, GroupError, PermGroup, Permutation

# --------------------------------------------------------------------------
# Group specifications
# --------------------------------------------------------------------------

_SPEC_KINDS = {
    "trivial",
    "cyclic",
    "abelian",
    "dihedral",
    "gendihedral",
    "dicyclic",
    "quaternion",
    "gendicyclic",
    "product",
    "table2",
    "alternating",
    "g16",
    "g16prime",
}


@dataclass(frozen=True)
class GroupSpec:
    """Symbolic identifier of a catalog group, e.g. cyclic(12) or table2(8)."""

    kind: str
    args: tuple = ()

    def __post_init__(self):
        if self.kind not in _SPEC_KINDS:
            raise GroupError(f"unknown group kind {self.kind!r}")

    @property
    def text(self) -> str:
        k, a = self.kind, self.args
        if k in ("trivial", "g16", "g16prime"):
            return k
        if k in ("cyclic", "dihedral", "dicyclic", "quaternion", "table2", "alternating"):
            return f"{k}:{a[0]}"
        if k in ("abelian", "gendihedral"):
            return f"{k}:" + "x".join(str(q) for q in a)
        if k == "gendicyclic":
            factors, c_idx = a
            s = f"gendicyclic:" + "x".join(str(q) for q in factors)
            return s if c_idx == 0 else f"{s}@{c_idx}"
        if k == "product":
            return "product:" + ",".join(s.text for s in a)
        raise GroupError(f"unprintable spec {self!r}")

    def __str__(self) -> str:
        return self.text


def parse_group_spec(text: str) -> GroupSpec:
    """Parse the CLI syntax, e.g. ``cyclic:12`` or ``product:quaternion:8,cyclic:2``."""
    text = text.strip()
    if text in ("trivial", "g16", "g16prime"):
        return GroupSpec(text)
    head, sep, rest = text.partition(":")
    if not sep:
        raise GroupError(f"cannot parse group spec {text!r}")
    if head == "product":
        parts = _split_product_args(rest)
        if len(parts) < 2:
            raise GroupError("product needs at least two factors")
        return GroupSpec("product", tuple(parse_group_spec(p) for p in parts))
    if head in ("cyclic", "dihedral", "dicyclic", "quaternion", "table2", "alternating"):
        if not re.fullmatch(r"\d+", rest):
            raise GroupError(f"bad parameter in {text!r}")
        return GroupSpec(head, (int(rest),))
    if head in ("abelian", "gendihedral"):
        if not re.fullmatch(r"\d+(x\d+)*", rest):
            raise GroupError(f"bad factor list in {text!r}")
        return GroupSpec(head, tuple(int(q) for q in rest.split("x")))
    if head == "gendicyclic":
        m = re.fullmatch(r"(\d+(?:x\d+)*)(?:@(\d+))?", rest)
        if not m:
            raise GroupError(f"bad gendicyclic spec {text!r}")
        factors = tuple(int(q) for q in m.group(1).split("x"))
        c_idx = int(m.group(2)) if m.group(2) else 0
        return GroupSpec("gendicyclic", (factors, c_idx))
    raise GroupError(f"unknown group kind {head!r}")


def _split_product_args(rest: str) -> list[str]:
    # commas only separate factors at product top level; nested products keep theirs
    parts, depth, cur = [], 0, []
    for ch in rest:
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            if ch == ":" and "".join(cur).endswith("product"):
                depth += 1
            cur.append(ch)
    parts.append("".join(cur))
    return parts


# --------------------------------------------------------------------------
# Realizations
# --------------------------------------------------------------------------


def _regular_from_table(size: int, mul, gens_idx: list[int]) -> PermGroup:
    """Regular action of an abstract group given by index multiplication."""
    perms = [
        Permutation(tuple(mul(g, x) for x in range(size))) for g in gens_idx
    ]
    group = PermGroup(size, perms)
    if group.order != size:
        raise GroupError(f"regular action closed to order {group.order} != {size}")
    return group


def _cyclic(n: int) -> PermGroup:
    if n < 1:
        raise GroupError("cyclic order must be >= 1")
    if n == 1:
        return PermGroup.trivial()
    return PermGroup(n, [Permutation([(i + 1) % n for i in range(n)])])


def _abelian(factors: tuple[int, ...]) -> PermGroup:
    if not factors or any(q < 2 for q in factors):
        raise GroupError("abelian factors must all be >= 2")
    groups = [_cyclic(q) for q in factors]
    out = groups[0]
    for g in groups[1:]:
        out = _direct_product(out, g)
    return out


def _dihedral(order: int) -> PermGroup:
    if order < 2 or order % 2:
        raise GroupError(f"dihedral group order must be even >= 2, got {order}")
    m = order // 2
    if m == 1:
        return _cyclic(2)
    if m == 2:
        return _abelian((2, 2))
    rot = Permutation([(i + 1) % m for i in range(m)])
    ref = Permutation([(-i) % m for i in range(m)])
    return PermGroup(m, [rot, ref])


def _gen_dihedral(factors: tuple[int, ...]) -> PermGroup:
    a = _abelian(factors)
    size = 2 * a.order
    elems = a.elements
    idx = {p: i for i, p in enumerate(elems)}

    def mul(u: int, v: int) -> int:
        ua, ue = divmod(u, 2)
        va, ve = divmod(v, 2)
        right = elems[va] if ue == 0 else elems[va].inverse()
        return idx[elems[ua] * right] * 2 + (ue ^ ve)

    gens = [idx[g] * 2 for g in a.generators] + [1]  # (a_i, 0) and (e, 1)
    return _regular_from_table(size, mul, gens)


def _gen_dicyclic(factors: tuple[int, ...], c_index: int) -> PermGroup:
    a = _abelian(factors)
    if not any(e.order() % 2 == 0 and e.order() >= 4 for e in a.elements):
        raise GroupError(
            "generalised dicyclic needs an abelian base with an element of "
            f"order 2k, k >= 2; abelian:{'x'.join(map(str, factors))} has none"
        )
    involutions = [e for e in a.elements if e.order() == 2]
    if c_index >= len(involutions):
        raise GroupError(
            f"involution index {c_index} out of range ({len(involutions)} available)"
        )
    c = involutions[c_index]
    elems = a.elements
    idx = {p: i for i, p in enumerate(elems)}
    c_i = idx[c]
    size = 2 * a.order

    def mul(u: int, v: int) -> int:
        # elements are pairs (x, e) ~ x * b^e with b^2 = c and b x b^-1 = x^-1
        ua, ue = divmod(u, 2)
        va, ve = divmod(v, 2)
        right = elems[va] if ue == 0 else elems[va].inverse()
        prod = elems[ua] * right
        if ue + ve == 2:
            prod = prod * elems[c_i]
        return idx[prod] * 2 + ((ue + ve) % 2)

    gens = [idx[g] * 2 for g in a.generators] + [1]
    return _regular_from_table(size, mul, gens)


def _dicyclic(m: int) -> PermGroup:
    if m < 2:
        raise GroupError(f"dicyclic parameter must be >= 2, got {m}")
    # A = C_2m, b^2 = a^m
    a = _cyclic(2 * m)
    inv_index = next(
        i for i, e in enumerate(a.elements) if e.order() == 2
    )
    involutions = [e for e in a.elements if e.order() == 2]
    c_index = involutions.index(a.elements[inv_index])
    return _gen_dicyclic((2 * m,), c_index)


def _quaternion(order: int) -> PermGroup:
    if order < 8 or order & (order - 1):
        raise GroupError(f"generalised quaternion order must be 2^r, r >= 3, got {order}")
    return _dicyclic(order // 4)


def _alternating(n: int) -> PermGroup:
    if n != 4:
        raise GroupError("only alternating:4 is catalogued")
    return PermGroup(
        4,
        [Permutation.from_cycles(4, [(0, 1, 2)]), Permutation.from_cycles(4, [(0, 1), (2, 3)])],
    )


def _g16() -> PermGroup:
    # <a, b | a^4 = b^4 = 1, b a b^-1 = a^-1>; normal form a^i b^j
    def mul(u: int, v: int) -> int:
        ui, uj = divmod(u, 4)
        vi, vj = divmod(v, 4)
        i = (ui + (vi if uj % 2 == 0 else -vi)) % 4
        return i * 4 + (uj + vj) % 4

    return _regular_from_table(16, mul, [4, 1])  # a = (1,0), b = (0,1)


def _g16prime() -> PermGroup:
    # <a, b | a^8 = b^2 = 1, b a b^-1 = a^5> on 8 points: a: i -> i+1, b: i -> 5i
    a = Permutation([(i + 1) % 8 for i in range(8)])
    b = Permutation([(5 * i) % 8 for i in range(8)])
    g = PermGroup(8, [a, b])
    if g.order != 16:
        raise GroupError("g16prime realization has wrong order")
    return g


_PAULI_PROD = {
    ("I", "I"): (0, "I"), ("I", "X"): (0, "X"), ("I", "Y"): (0, "Y"), ("I", "Z"): (0, "Z"),
    ("X", "I"): (0, "X"), ("Y", "I"): (0, "Y"), ("Z", "I"): (0, "Z"),
    ("X", "X"): (0, "I"), ("Y", "Y"): (0, "I"), ("Z", "Z"): (0, "I"),
    ("X", "Y"): (1, "Z"), ("Y", "X"): (3, "Z"),
    ("Y", "Z"): (1, "X"), ("Z", "Y"): (3, "X"),
    ("Z", "X"): (1, "Y"), ("X", "Z"): (3, "Y"),
}
_PAULI_SIGMAS = ("I", "X", "Y", "Z")


def _pauli16() -> PermGroup:
    # <a,b,c | a^2 = b^2 = c^2 = 1, abc = bca = cab>: the order-16 Pauli group
    # {i^k s}, realised through its regular action.  abc is the central i*I.
    def mul(u: int, v: int) -> int:
        uk, us = divmod(u, 4)
        vk, vs = divmod(v, 4)
        ph, s = _PAULI_PROD[(_PAULI_SIGMAS[us], _PAULI_SIGMAS[vs])]
        return ((uk + vk + ph) % 4) * 4 + _PAULI_SIGMAS.index(s)

    g = _regular_from_table(16, mul, [1, 2, 3])  # X, Y, Z
    _check_pauli_presentation(g, mul)
    return g


def _check_pauli_presentation(g: PermGroup, mul) -> None:
    # recorded as a runtime check: order 16 and abc = bca = cab for the
    # generating involutions
    a, b, c = 1, 2, 3
    abc = mul(mul(a, b), c)
    bca = mul(mul(b, c), a)
    cab = mul(mul(c, a), b)
    if not (g.order == 16 and abc == bca == cab):
        raise GroupError("table2:8 presentation check failed")


def _heisenberg27() -> PermGroup:
    # <a,b,c | a^3 = c^3 = 1, ac = ca, bc = cb, b^-1 a b = ac>: upper
    # unitriangular 3x3 matrices over F_3, via the regular action on triples
    def enc(x, y, z):
        return (x * 3 + y) * 3 + z

    def mul(u: int, v: int) -> int:
        ux, r = divmod(u, 9)
        uy, uz = divmod(r, 3)
        vx, r = divmod(v, 9)
        vy, vz = divmod(r, 3)
        return enc((ux + vx) % 3, (uy + vy) % 3, (uz + vz + ux * vy) % 3)

    g = _regular_from_table(27, mul, [enc(1, 0, 0), enc(0, 1, 0), enc(0, 0, 1)])
    # b^-1 a b = a c with a = (1,0,0), b = (0,1,0), c = (0,0,1)
    a, b, c = g.generators
    if b.inverse() * a * b != a * c:
        raise GroupError("table2:11 presentation check failed")
    return g


def _direct_product(a: PermGroup, b: PermGroup) -> PermGroup:
    na, nb = a.degree, b.degree
    gens = [Permutation(list(g.images) + list(range(na, na + nb))) for g in a.generators]
    gens += [
        Permutation(list(range(na)) + [na + g.images[i] for i in range(nb)])
        for g in b.generators
    ]
    return PermGroup(na + nb, gens)


_TABLE2_SPECS = {
    1: GroupSpec("abelian", (2, 2)),
    2: GroupSpec("abelian", (2, 2, 2)),
    3: GroupSpec("abelian", (2, 2, 2, 2)),
    4: GroupSpec("dihedral", (6,)),
    5: GroupSpec("dihedral", (8,)),
    6: GroupSpec("dihedral", (10,)),
    7: GroupSpec("alternating", (4,)),
    # 8 is the order-16 group <a,b,c | a^2=b^2=c^2=1, abc=bca=cab>
    9: GroupSpec("g16prime"),
    10: GroupSpec("gendihedral", (3, 3)),
    # 11 is the order-27 group <a,b,c | a^3=c^3=1, ac=ca, bc=cb, b^-1ab=ac>
    12: GroupSpec("product", (GroupSpec("quaternion", (8,)), GroupSpec("cyclic", (3,)))),
    13: GroupSpec("product", (GroupSpec("quaternion", (8,)), GroupSpec("cyclic", (4,)))),
}


@lru_cache(maxsize=None)
def _realize_text(text: str) -> PermGroup:
    return _realize(parse_group_spec(text))


def realize(spec: GroupSpec | str) -> PermGroup:
    """Faithful permutation realization of a catalog spec (order <= 256)."""
    if isinstance(spec, str):
        return _realize_text(spec)
    return _realize_text(spec.text)


def _realize(spec: GroupSpec) -> PermGroup:
    k, a = spec.kind, spec.args
    if k == "trivial":
        return PermGroup.trivial()
    if k == "cyclic":
        return _cyclic(a[0])
    if k == "abelian":
        return _abelian(a)
    if k == "dihedral":
        return _dihedral(a[0])
    if k == "gendihedral":
        return _gen_dihedral(a)
    if k == "dicyclic":
        return _dicyclic(a[0])
    if k == "quaternion":
        return _quaternion(a[0])
    if k == "gendicyclic":
        return _gen_dicyclic(a[0], a[1])
    if k == "alternating":
        return _alternating(a[0])
    if k == "g16":
        return _g16()
    if k == "g16prime":
        return _g16prime()
    if k == "table2":
        idx = a[0]
        if not 1 <= idx <= 13:
            raise GroupError(f"table2 index must be 1..13, got {idx}")
        if idx == 8:
            return _pauli16()
        if idx == 11:
            return _heisenberg27()
        return _realize(_TABLE2_SPECS[idx])
    if k == "product":
        out = _realize(a[0])
        for s in a[1:]:
            out = _direct_product(out, _realize(s))
        if out.order > MAX_GROUP_ORDER:
            raise GroupError("product order exceeds supported limit")
        return out
    raise GroupError(f"cannot realize {spec!r}")


def spec_order(spec: GroupSpec) -> int:
    """Group order computed from the spec arithmetically (no realization)."""
    k, a = spec.kind, spec.args
    if k == "trivial":
        return 1
    if k in ("cyclic", "dihedral", "quaternion"):
        return a[0]
    if k == "dicyclic":
        return 4 * a[0]
    if k == "abelian":
        p = 1
        for q in a:
            p *= q
        return p
    if k == "gendihedral":
        return 2 * spec_order(GroupSpec("abelian", a))
    if k == "gendicyclic":
        return 2 * spec_order(GroupSpec("abelian", a[0]))
    if k == "alternating":
        return 12
    if k in ("g16", "g16prime"):
        return 16
    if k == "table2":
        return {1: 4, 2: 8, 3: 16, 4: 6, 5: 8, 6: 10, 7: 12, 8: 16,
                9: 16, 10: 18, 11: 27, 12: 24, 13: 32}[a[0]]
    if k == "product":
        p = 1
        for s in a:
            p *= spec_order(s)
        return p
    raise GroupError(f"cannot size {spec!r}")


# --------------------------------------------------------------------------
# Structure queries
# --------------------------------------------------------------------------


def order_histogram(g: PermGroup) -> tuple[tuple[int, int], ...]:
    counts: dict[int, int] = {}
    for e in g.elements:
        o = e.order()
        counts[o] = counts.get(o, 0) + 1
    return tuple(sorted(counts.items()))


def is_abelian(g: PermGroup) -> bool:
    gens = g.generators
    return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1 :])


def exponent(g: PermGroup) -> int:
    return lcm(*(e.order() for e in g.elements))


def is_cyclic(g: PermGroup) -> bool:
    return any(e.order() == g.order for e in g.elements)


def center_elements(g: PermGroup) -> tuple[Permutation, ...]:
    return tuple(
        z for z in g.elements if all(z * h == h * z for h in g.generators)
    )


def conjugacy_class_sizes(g: PermGroup) -> tuple[int, ...]:
    seen: set[Permutation] = set()
    sizes = []
    for e in g.elements:
        if e in seen:
            continue
        cls = {h * e * h.inverse() for h in g.elements}
        seen |= cls
        sizes.append(len(cls))
    return tuple(sorted(sizes))


def subgroup_closure(g: PermGroup, elems) -> frozenset[Permutation]:
    ident = g.identity()
    out = {ident}
    frontier = [e for e in elems if e != ident]
    out.update(frontier)
    while frontier:
        new = []
        for a in elems:
            for x in frontier:
                y = a * x
                if y not in out:
                    out.add(y)
                    new.append(y)
        frontier = new
    return frozenset(out)


def generated_subgroup(g: PermGroup, gens) -> frozenset[Permutation]:
    gens = list(gens)
    ident = g.identity()
    out = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for x in frontier:
            for a in gens:
                for y in (a * x, a.inverse() * x):
                    if y not in out:
                        out.add(y)
                        new.append(y)
        frontier = new
    return frozenset(out)


def cyclic_shape(n: int) -> tuple:
    """Order classification used by the alpha dispatcher for cyclic groups."""
    if n < 2:
        return ("other",)
    fac = _factorize(n)
    if len(fac) == 1:
        p, k = next(iter(fac.items()))
        return ("prime_power", p, k)
    if len(fac) == 2 and fac.get(2) == 1:
        p = max(fac)
        if fac[p] == 1:
            return ("two_p", p)
    return ("other",)


def _factorize(n: int) -> dict[int, int]:
    fac: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            fac[d] = fac.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        fac[n] = fac.get(n, 0) + 1
    return fac


def abelian_shape(g: PermGroup) -> tuple[int, ...]:
    """Primary decomposition of an abelian group as sorted prime powers."""
    if not is_abelian(g):
        raise GroupError("abelian_shape needs an abelian group")
    n = g.order
    shape: list[int] = []
    for p in _factorize(n):
        # m_i = #elements killed by p^i; e_i = #cyclic p-factors of exponent >= i
        ms = [1]
        i = 1
        while True:
            m = sum(1 for e in g.elements if e.order() % (p ** i) == 0 and _is_p_power(e.order(), p))
            m_i = sum(
                1 for e in g.elements
                if _is_p_power(e.order(), p) and e.order() <= p ** i
            )
            ms.append(m_i)
            if m_i == ms[i - 1]:
                break
            i += 1
        es = []
        for j in range(1, len(ms)):
            q, r = divmod(ms[j], ms[j - 1])
            assert r == 0
            e_j = 0
            while q > 1:
                q //= p
                e_j += 1
            es.append(e_j)
        es = [e for e in es if e > 0]
        for j, e_j in enumerate(es):
            nxt = es[j + 1] if j + 1 < len(es) else 0
            shape.extend([p ** (j + 1)] * (e_j - nxt))
    return tuple(sorted(shape))


def _is_p_power(m: int, p: int) -> bool:
    while m % p == 0:
        m //= p
    return m == 1


def index2_subgroups(g: PermGroup) -> list[frozenset[Permutation]]:
    """All index-2 subgroups, via hyperplanes over G / <squares, commutators>."""
    if g.order % 2:
        return []
    gens = list(g.generators)
    kgens = [a * a for a in gens] + [
        a * b * a.inverse() * b.inverse() for a in gens for b in gens
    ]
    k = generated_subgroup(g, kgens)
    if len(k) == g.order:
        return []
    # quotient is elementary abelian of rank t
    cosets: list[frozenset[Permutation]] = []
    assigned: dict[Permutation, int] = {}
    for e in g.elements:
        if e in assigned:
            continue
        cs = frozenset(e * x for x in k)
        idx = len(cosets)
        cosets.append(cs)
        for x in cs:
            assigned[x] = idx
    # quotient is elementary abelian; find an F_2 basis of coset indices
    reps = [min(cs) for cs in cosets]
    basis: list[int] = []
    span = {0}
    for i in range(1, len(cosets)):
        if i not in span:
            basis.append(i)
            span = _span_closure(span | {i}, assigned, reps)
    out = []
    for mask in range(1, 1 << len(basis)):
        # kernel of the character sending basis[j] -> bit j of mask
        val = {0: 0}
        for j, b_idx in enumerate(basis):
            bit = (mask >> j) & 1
            for c_idx, v in list(val.items()):
                val[assigned[reps[c_idx] * reps[b_idx]]] = v ^ bit
        changed = True
        while changed and len(val) < len(cosets):
            changed = False
            for a, va in list(val.items()):
                for b, vb in list(val.items()):
                    pidx = assigned[reps[a] * reps[b]]
                    if pidx not in val:
                        val[pidx] = va ^ vb
                        changed = True
        members = [x for i, cs in enumerate(cosets) if val[i] == 0 for x in cs]
        if len(members) == g.order // 2:
            out.append(frozenset(members))
    return sorted(set(out), key=lambda h: sorted(p.images for p in h))


def _span_closure(span, assigned, reps):
    out = set(span)
    changed = True
    while changed:
        changed = False
        for a in list(out):
            for b in list(out):
                c = assigned[reps[a] * reps[b]]
                if c not in out:
                    out.add(c)
                    changed = True
    return out


def gen_dicyclic_witnesses(g: PermGroup):
    """Yield (A, b) with A abelian of index 2, b^4 = 1, b^2 in A - {1},
    and conjugation by b inverting A elementwise."""
    if g.order % 4:
        return
    ident = g.identity()
    for sub in index2_subgroups(g):
        members = sorted(sub)
        if not all(
            x * y == y * x for i, x in enumerate(members) for y in members[i + 1 :]
        ):
            continue
        for b in g.elements:
            if b in sub:
                continue
            b2 = b * b
            if b2 == ident or b2 not in sub:
                continue
            if b2 * b2 != ident:
                continue
            binv = b.inverse()
            if all(b * a * binv == a.inverse() for a in members):
                yield tuple(members), b


@dataclass(frozen=True)
class Classification:
    """Structural flags driving the main case dispatch."""

    order: int
    is_abelian: bool
    exponent: int
    is_cyclic: bool
    cyclic_order_shape: tuple | None
    abelian_shape: tuple[int, ...] | None
    is_gen_dicyclic: bool
    gen_dicyclic_witness: tuple | None  # (A elements, b)
    is_gen_quaternion: bool
    is_q2r_times_c2: bool
    table1_index: int | None
    table2_index: int | None
    has_grr: bool


_TABLE1_ORDERS = {
    1: 12, 2: 15, 3: 20, 4: 21, 5: 8, 6: 9, 7: 16, 8: 25, 9: 12, 10: 18,
    11: 12, 12: 20, 13: 24, 14: 16, 15: 12, 16: 16, 17: 24,
}


def table1_spec(index: int) -> GroupSpec:
    if index <= 4:
        return GroupSpec("cyclic", ({1: 12, 2: 15, 3: 20, 4: 21}[index],))
    if index <= 10:
        return GroupSpec(
            "abelian",
            {5: (2, 4), 6: (3, 3), 7: (4, 4), 8: (5, 5), 9: (2, 2, 3), 10: (2, 3, 3)}[index],
        )
    if index <= 13:
        return GroupSpec("dicyclic", ({11: 3, 12: 5, 13: 6}[index],))
    return {
        14: GroupSpec("g16"),
        15: GroupSpec("alternating", (4,)),
        16: GroupSpec("g16prime"),
        17: GroupSpec("product", (GroupSpec("quaternion", (8,)), GroupSpec("cyclic", (3,)))),
    }[index]


_TABLE2_ORDERS = {1: 4, 2: 8, 3: 16, 4: 6, 5: 8, 6: 10, 7: 12, 8: 16,
                  9: 16, 10: 18, 11: 27, 12: 24, 13: 32}


def classify(g: PermGroup) -> Classification:
    """All structural flags of Theorem 2.5 / the main theorem's case split."""
    n = g.order
    abelian = is_abelian(g)
    exp = exponent(g)
    cyclic = is_cyclic(g)
    shape = abelian_shape(g) if abelian else None

    witness = None
    if not abelian:
        witness = next(gen_dicyclic_witnesses(g), None)
    gen_dic = witness is not None

    gen_quat = False
    if gen_dic and n & (n - 1) == 0:
        gen_quat = any(
            _elements_cyclic(a_elems) for a_elems, _ in gen_dicyclic_witnesses(g)
        )

    q2r_c2 = False
    if not abelian and n >= 16 and n & (n - 1) == 0:
        q2r_c2 = is_isomorphic(
            g,
            realize(GroupSpec("product", (GroupSpec("quaternion", (n // 2,)), GroupSpec("cyclic", (2,))))),
        )

    t1 = next(
        (
            i
            for i, o in _TABLE1_ORDERS.items()
            if o == n and is_isomorphic(g, realize(table1_spec(i)))
        ),
        None,
    )
    t2 = next(
        (
            i
            for i, o in _TABLE2_ORDERS.items()
            if o == n and is_isomorphic(g, realize(GroupSpec("table2", (i,))))
        ),
        None,
    )

    has_grr = not (abelian and exp > 2) and not gen_dic and t2 is None
    return Classification(
        order=n,
        is_abelian=abelian,
        exponent=exp,
        is_cyclic=cyclic,
        cyclic_order_shape=cyclic_shape(n) if cyclic else None,
        abelian_shape=shape,
        is_gen_dicyclic=gen_dic,
        gen_dicyclic_witness=witness,
        is_gen_quaternion=gen_quat,
        is_q2r_times_c2=q2r_c2,
        table1_index=t1,
        table2_index=t2,
        has_grr=has_grr,
    )


def _elements_cyclic(elems: tuple[Permutation, ...]) -> bool:
    return any(e.order() == len(elems) for e in elems)


# --------------------------------------------------------------------------
# Isomorphism testing
# --------------------------------------------------------------------------


def _power_fingerprint(g: PermGroup, k: int) -> tuple[int, ...]:
    """Sorted multiset of k-th-root counts; separates power-map twins."""
    counts: dict[Permutation, int] = {}
    for e in g.elements:
        p = e
        for _ in range(k - 1):
            p = p * e
        counts[p] = counts.get(p, 0) + 1
    return tuple(sorted(counts.values()))


def _invariants(g: PermGroup):
    inv = [g.order, order_histogram(g), is_abelian(g)]
    if inv[2]:
        inv.append(abelian_shape(g))
    else:
        inv.append(len(center_elements(g)))
        inv.append(conjugacy_class_sizes(g))
        inv.append(_power_fingerprint(g, 2))
        inv.append(_power_fingerprint(g, 3))
    return tuple(inv)


def is_isomorphic(g: PermGroup, h: PermGroup) -> bool:
    """Isomorphism test: invariant filter, then backtracking on generator images."""
    if g.order != h.order:
        return False
    if g.order > MAX_GROUP_ORDER or h.order > MAX_GROUP_ORDER:
        raise GroupError("isomorphism testing capped at order 256")
    if _invariants(g) != _invariants(h):
        return False
    if is_abelian(g):
        return True  # equal abelian shapes
    gens = _greedy_generating_set(g)
    sig = {e: _element_signature(g, e) for e in g.elements}
    pools = []
    for a in gens:
        want = sig[a]
        pools.append([e for e in h.elements if _element_signature(h, e) == want])
    return _map_generators(g, h, gens, pools, 0, {g.identity(): h.identity()})


def _element_signature(g: PermGroup, e: Permutation):
    cent = sum(1 for x in g.elements if x * e == e * x)
    return (e.order(), cent)


def _map_generators(g, h, gens, pools, depth, phi) -> bool:
    """DFS over generator images with incremental word-consistency checks."""
    if depth == len(gens):
        if len(phi) != g.order or len(set(phi.values())) != g.order:
            return False
        items = list(phi.items())
        return all(
            phi[x * y] == fx * fy for x, fx in items for y, fy in items
        )
    a = gens[depth]
    used = set(phi.values())
    for cand in pools[depth]:
        if cand in used:
            continue
        ext = _extend_partial(g, dict(phi), gens[: depth + 1], a, cand)
        if ext is not None:
            if _map_generators(g, h, gens, pools, depth + 1, ext):
                return True
    return False


def _extend_partial(g, phi, gens_so_far, new_gen, image):
    """Close phi over <gens so far + new_gen>; None on any conflict."""
    if new_gen in phi:
        return phi if phi[new_gen] == image else None
    phi[new_gen] = image
    pairs = [(a, phi[a]) for a in gens_so_far]
    frontier = list(phi.keys())
    while frontier:
        new = []
        for x in frontier:
            fx = phi[x]
            for a, fa in pairs:
                y = a * x
                fy = fa * fx
                prev = phi.get(y)
                if prev is None:
                    phi[y] = fy
                    new.append(y)
                elif prev != fy:
                    return None
        frontier = new
    return phi


def _greedy_generating_set(g: PermGroup) -> tuple[Permutation, ...]:
    """Deterministic inclusion-minimal generating set, highest orders first.

    Linear-time alternative to the exact smallest set; used where only
    minimality by inclusion matters (isomorphism backtracking).
    """
    if g.order == 1:
        return ()
    gens: list[Permutation] = []
    span: frozenset[Permutation] = frozenset([g.identity()])
    for e in sorted(g.elements, key=lambda e: (-e.order(), e.images)):
        if e not in span:
            gens.append(e)
            span = generated_subgroup(g, gens)
            if len(span) == g.order:
                break
    # prune to inclusion-minimality
    changed = True
    while changed:
        changed = False
        for i in range(len(gens)):
            rest = gens[:i] + gens[i + 1 :]
            if rest and len(generated_subgroup(g, rest)) == g.order:
                gens = rest
                changed = True
                break
    return tuple(gens)


def minimal_generating_set(
    g: PermGroup, require_first: Permutation | None = None
) -> tuple[Permutation, ...]:
    """Smallest, lexicographically least generating set (deterministic).

    With ``require_first``, that element is fixed as the first member and the
    rest are chosen the same way.
    """
    if g.order == 1:
        return ()
    elems = [e for e in g.elements if not e.is_identity()]
    fixed = []
    if require_first is not None:
        if require_first not in g:
            raise GroupError("require_first not in group")
        fixed = [require_first]
        elems = [e for e in elems if e != require_first]
    max_rank = g.order.bit_length()  # rank of a group of order n is <= log2 n
    for size in range(max(1, len(fixed)), max_rank + 1):
        for extra in combinations(elems, size - len(fixed)):
            cand = fixed + list(extra)
            if len(generated_subgroup(g, cand)) == g.order:
                return tuple(cand)
    raise GroupError("no generating set found")  # unreachable


# --------------------------------------------------------------------------
# Decompositions used by the dicyclic construction
# --------------------------------------------------------------------------


def sylow_hall_split(a: PermGroup) -> tuple[PermGroup, PermGroup]:
    """Split abelian A as (Sylow 2-subgroup, odd Hall subgroup)."""
    if not is_abelian(a):
        raise GroupError("sylow_hall_split needs an abelian group")
    two = [e for e in a.elements if e.order() & (e.order() - 1) == 0]
    odd = [e for e in a.elements if e.order() % 2 == 1]
    a2 = PermGroup(a.degree, tuple(two))
    a2p = PermGroup(a.degree, tuple(odd))
    assert a2.order * a2p.order == a.order
    return a2, a2p


def _abelian_basis(g: PermGroup) -> list[Permutation]:
    """Independent cyclic generators with <b_1> + ... + <b_k> = G (abelian).

    Greedy by descending element order, keeping an element whenever it is
    independent of the span so far; in a finite abelian group this always
    completes to a direct decomposition.
    """
    if g.order == 1:
        return []
    ordered = sorted(g.elements, key=lambda e: (-e.order(), e.images))
    basis: list[Permutation] = []
    span: frozenset[Permutation] = frozenset([g.identity()])
    for e in ordered:
        if e in span:
            continue
        trial = generated_subgroup(g, basis + [e])
        if len(trial) == len(span) * e.order():
            basis.append(e)
            span = trial
            if len(span) == g.order:
                break
    if len(span) != g.order:
        raise GroupError("abelian basis extraction failed")
    return basis


def split_off_involution(
    a2: PermGroup, c: Permutation
) -> tuple[Permutation, PermGroup]:
    """For an abelian 2-group, write A = <y> + B with c in <y>.

    Follows the constructive splitting: express c over a cyclic basis, and
    combine the basis elements supporting c, scaled so the lowest-order one
    appears with exponent 1.
    """
    if not is_abelian(a2) or a2.order & (a2.order - 1):
        raise GroupError("split_off_involution needs an abelian 2-group")
    if c.order() != 2 or c not in a2:
        raise GroupError("c must be an involution of the group")
    basis = _abelian_basis(a2)
    coords = _coordinates(a2, basis, c)
    active = [i for i, e in enumerate(coords) if e != 0]
    assert active, "involution with empty support"
    r_min = min(basis[i].order() for i in active)
    y = a2.identity()
    for i in active:
        k = basis[i].order() // r_min
        y = y * _power(basis[i], k)
    first = min(
        (i for i in active if basis[i].order() == r_min),
    )
    rest = [b for i, b in enumerate(basis) if i != first]
    comp = PermGroup(a2.degree, tuple(generated_subgroup(a2, rest))) if rest else PermGroup.trivial(a2.degree)
    # post checks: direct sum and c in <y>
    ysub = generated_subgroup(a2, [y])
    assert c in ysub, "c not inside <y>"
    assert len(ysub) * comp.order == a2.order
    assert len(ysub & frozenset(comp.elements)) == 1
    return y, comp


def _coordinates(
    g: PermGroup, basis: list[Permutation], target: Permutation
) -> tuple[int, ...]:
    for exps in _iproduct(*(range(b.order()) for b in basis)):
        prod = g.identity()
        for b, e in zip(basis, exps):
            prod = prod * _power(b, e)
        if prod == target:
            return exps
    raise GroupError("element not in span of basis")


def _power(p: Permutation, k: int) -> Permutation:
    out = Permutation.identity(p.degree)
    for _ in range(k):
        out = out * p
    return out


def left_cosets(
    g: PermGroup, normal: frozenset[Permutation]
) -> tuple[list[frozenset[Permutation]], dict[Permutation, int]]:
    """Left cosets of a subgroup, in deterministic order of least member."""
    cosets: list[frozenset[Permutation]] = []
    coset_of: dict[Permutation, int] = {}
    for e in g.elements:
        if e in coset_of:
            continue
        cs = frozenset(e * x for x in normal)
        idx = len(cosets)
        cosets.append(cs)
        for x in cs:
            coset_of[x] = idx
    return cosets, coset_of


def quotient_action(g: PermGroup, normal) -> PermGroup:
    """G acting on the cosets of a normal subgroup: the quotient group G/N."""
    n_set = frozenset(normal)
    ident = g.identity()
    if ident not in n_set:
        raise GroupError("normal subgroup must contain the identity")
    for a in g.generators:
        ainv = a.inverse()
        for x in n_set:
            if a * x * ainv not in n_set:
                raise GroupError("subgroup is not normal")
    cosets, coset_of = left_cosets(g, n_set)
    gens = []
    for a in g.generators:
        images = [coset_of[a * min(cs)] for cs in cosets]
        gens.append(Permutation(images))
    q = PermGroup(len(cosets), gens)
    assert q.order == g.order // len(n_set)
    return q


# --------------------------------------------------------------------------
# Catalog
# --------------------------------------------------------------------------


def _abelian_shapes(max_order: int):
    """Multisets of prime powers with product <= max_order, non-cyclic only."""
    shapes = set()

    def gen(prefix: list[int], min_q: int):
        prod = 1
        for q in prefix:
            prod *= q
        if len(prefix) >= 2:
            shapes.add(tuple(sorted(prefix)))
        for p in (2, 3, 5, 7, 11, 13):
            q = p
            while prod * q <= max_order:
                if q >= min_q:
                    gen(prefix + [q], q)
                q *= p

    gen([], 2)
    out = []
    for s in sorted(shapes, key=lambda s: (len(s), s)):
        primes = [min(_factorize(q)) for q in s]
        if len(set(primes)) == len(primes):
            continue  # pairwise coprime factors: isomorphic to a cyclic group
        out.append(s)
    return out


def catalog_groups(max_order: int) -> list[GroupSpec]:
    """Deterministic catalog of named groups up to the given order."""
    specs: list[GroupSpec] = [GroupSpec("trivial")]
    specs += [GroupSpec("cyclic", (n,)) for n in range(2, max_order + 1)]
    specs += [GroupSpec("abelian", s) for s in _abelian_shapes(max_order)]
    specs += [GroupSpec("dihedral", (2 * m,)) for m in range(3, max_order // 2 + 1)]
    specs += [
        GroupSpec("dicyclic", (m,)) for m in range(3, max_order // 4 + 1) if m not in (4, 8)
    ]
    if max_order >= 8:
        specs += [GroupSpec("quaternion", (q,)) for q in (8, 16, 32, 64) if q <= max_order]
    if max_order >= 12:
        specs.append(GroupSpec("alternating", (4,)))
    if max_order >= 16:
        specs += [GroupSpec("g16"), GroupSpec("g16prime"), GroupSpec("table2", (8,))]
        specs.append(GroupSpec("gendihedral", (2, 4)))
        specs.append(
            GroupSpec("product", (GroupSpec("quaternion", (8,)), GroupSpec("cyclic", (2,))))
        )
    if max_order >= 18:
        specs.append(GroupSpec("gendihedral", (3, 3)))
    if max_order >= 24:
        specs.append(
            GroupSpec("product", (GroupSpec("quaternion", (8,)), GroupSpec("cyclic", (3,))))
        )
        specs.append(
            GroupSpec("product", (GroupSpec("alternating", (4,)), GroupSpec("cyclic", (2,))))
        )
    if max_order >= 27:
        specs.append(GroupSpec("table2", (11,)))
    if max_order >= 32:
        specs.append(
            GroupSpec("product", (GroupSpec("quaternion", (8,)), GroupSpec("cyclic", (4,))))
        )
        specs.append(
            GroupSpec("product", (GroupSpec("quaternion", (16,)), GroupSpec("cyclic", (2,))))
        )
        specs.append(
            GroupSpec("product", (GroupSpec("quaternion", (8,)), GroupSpec("abelian", (2, 2))))
        )
    return [s for s in specs if spec_order(s) <= max_order]
