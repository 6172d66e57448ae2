"""Finite groups as multiplication tables, with homomorphisms between them.

Elements are the integers 0..n-1 and 0 is always the identity. Tables are
validated on construction (closure, identity, inverses, associativity).
"""
from __future__ import annotations

import itertools
import os
from collections import deque
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import MalformedError

DEFAULT_MAX_ORDER = 256


def max_group_order() -> int:
    raw = os.environ.get("WPGL_MAX_GROUP_ORDER")
    if raw is None:
        return DEFAULT_MAX_ORDER
    try:
        return int(raw)
    except ValueError:
        raise MalformedError(f"WPGL_MAX_GROUP_ORDER is not an integer: {raw!r}") from None


class FiniteGroup:
    def __init__(self, table: Sequence[Sequence[int]], generators: Sequence[int] | None = None, name: str | None = None):
        rows = [list(r) for r in table]
        n = len(rows)
        if n == 0:
            raise MalformedError("empty multiplication table")
        cap = max_group_order()
        if n > cap:
            raise MalformedError(f"group order {n} exceeds the configured cap {cap}")
        if any(len(r) != n for r in rows):
            raise MalformedError("multiplication table is not square")
        if any(not isinstance(x, (int, np.integer)) or not 0 <= x < n for r in rows for x in r):
            raise MalformedError("multiplication table has entries outside 0..n-1")
        self.table = tuple(tuple(int(x) for x in r) for r in rows)
        self.order = n
        self.name = name
        if self.table[0] != tuple(range(n)) or any(self.table[a][0] != a for a in range(n)):
            raise MalformedError("element 0 is not the identity")
        inv = []
        for a in range(n):
            row = self.table[a]
            try:
                b = row.index(0)
            except ValueError:
                raise MalformedError(f"element {a} has no inverse") from None
            if self.table[b][a] != 0:
                raise MalformedError(f"element {a} has no two-sided inverse")
            inv.append(b)
        self.inverse_table = tuple(inv)
        t = np.asarray(self.table, dtype=np.int64)
        left = t[t]  # [a,b,c] -> (ab)c
        right = t[np.arange(n)[:, None, None], t[None, :, :]]  # a(bc)
        bad = np.argwhere(left != right)
        if len(bad):
            a, b, c = (int(x) for x in bad[0])
            raise MalformedError(f"multiplication is not associative at ({a},{b},{c})")
        if generators is not None:
            generators = [int(g) for g in generators]
            if any(not 0 <= g < n for g in generators):
                raise MalformedError("generator outside the group")
            if len(self.closure(generators)) != n:
                raise MalformedError("declared generators do not generate the group")
        self._generators = tuple(generators) if generators is not None else None

    # -- basic operations ---------------------------------------------------

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(range(self.order))

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse_table[a]

    def prod(self, *xs: int) -> int:
        out = 0
        for x in xs:
            out = self.table[out][x]
        return out

    def conj(self, x: int, a: int) -> int:
        """x⁻¹ a x."""
        return self.table[self.table[self.inverse_table[x]][a]][x]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        out = 0
        for _ in range(k):
            out = self.table[out][a]
        return out

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        return tuple(self.element_order(a) for a in range(self.order))

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    def center(self) -> list[int]:
        t = self.table
        return [a for a in range(self.order) if all(t[a][b] == t[b][a] for b in range(self.order))]

    def is_central(self, elements) -> bool:
        z = set(self.center())
        return all(e in z for e in elements)

    def closure(self, gens) -> list[int]:
        seen = {0}
        queue = deque([0])
        gens = list(gens)
        while queue:
            x = queue.popleft()
            for g in gens:
                y = self.table[x][g]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return sorted(seen)

    def is_subgroup(self, elements) -> bool:
        s = set(elements)
        return 0 in s and all(self.table[a][self.inverse_table[b]] in s for a in s for b in s)

    def is_normal(self, elements) -> bool:
        s = set(elements)
        return self.is_subgroup(s) and all(self.conj(x, a) in s for x in range(self.order) for a in s)

    @property
    def generators(self) -> tuple[int, ...]:
        if self._generators is None:
            self._generators = self._greedy_generators()
        return self._generators

    def _greedy_generators(self) -> tuple[int, ...]:
        gens: list[int] = []
        span = {0}
        candidates = sorted(range(1, self.order), key=lambda a: (-self.element_orders[a], a))
        for a in candidates:
            if len(span) == self.order:
                break
            if a not in span:
                gens.append(a)
                span = set(self.closure(gens))
        return tuple(gens)

    # -- derived groups -----------------------------------------------------

    def subgroup(self, elements) -> tuple[FiniteGroup, list[int]]:
        """The subgroup on ``elements`` and its embedding (sorted, identity first)."""
        elems = sorted(set(elements))
        if not self.is_subgroup(elems):
            raise MalformedError("elements do not form a subgroup")
        index = {e: i for i, e in enumerate(elems)}
        table = [[index[self.table[a][b]] for b in elems] for a in elems]
        return FiniteGroup(table), elems

    def cosets(self, normal) -> list[list[int]]:
        """Left cosets of a subgroup, each sorted, ordered by minimal element."""
        normal = sorted(set(normal))
        seen, out = set(), []
        for g in range(self.order):
            if g in seen:
                continue
            coset = sorted(self.table[g][n] for n in normal)
            seen.update(coset)
            out.append(coset)
        return out

    def quotient(self, normal) -> tuple[FiniteGroup, list[int]]:
        """G/N named by minimal coset representatives; returns (G/N, projection)."""
        if not self.is_normal(normal):
            raise MalformedError("quotient by a non-normal subgroup")
        cosets = self.cosets(normal)
        proj = [0] * self.order
        for i, c in enumerate(cosets):
            for g in c:
                proj[g] = i
        reps = [c[0] for c in cosets]
        table = [[proj[self.table[a][b]] for b in reps] for a in reps]
        return FiniteGroup(table), proj

    def subgroups(self) -> list[list[int]]:
        """All subgroups, as joins of cyclic subgroups closed under further joins."""
        found = {tuple(self.closure([]))}
        frontier = [tuple(self.closure([g])) for g in range(self.order)]
        found.update(frontier)
        cyclic = sorted(set(frontier))
        changed = True
        while changed:
            changed = False
            for h in list(found):
                for c in cyclic:
                    k = tuple(self.closure(set(h) | set(c)))
                    if k not in found:
                        found.add(k)
                        changed = True
        return sorted((list(h) for h in found), key=lambda h: (len(h), h))

    def to_json(self) -> dict:
        out = {"order": self.order, "table": [list(r) for r in self.table]}
        if self._generators is not None:
            out["generators"] = list(self._generators)
        return out

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        label = self.name or structure_name(self)
        return f"FiniteGroup({label}, order={self.order})"


# -- constructors -------------------------------------------------------------


def trivial_group() -> FiniteGroup:
    return FiniteGroup([[0]], name="1")


def cyclic_group(n: int) -> FiniteGroup:
    return FiniteGroup([[(a + b) % n for b in range(n)] for a in range(n)], generators=[1] if n > 1 else [], name=f"C{n}")


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Element (a, b) is numbered a*|H| + b."""
    m = h.order
    n = g.order * m
    table = [[0] * n for _ in range(n)]
    for x in range(n):
        a1, b1 = divmod(x, m)
        for y in range(n):
            a2, b2 = divmod(y, m)
            table[x][y] = g.table[a1][a2] * m + h.table[b1][b2]
    return FiniteGroup(table)


def semidirect_product(n_group: FiniteGroup, h: FiniteGroup, act) -> FiniteGroup:
    """N ⋊ H with (n, h)(n', h') = (n · act(h, n'), hh'); ``act`` a left action.

    Element (n, h) is numbered n*|H| + h.
    """
    m = h.order
    size = n_group.order * m
    table = [[0] * size for _ in range(size)]
    for x in range(size):
        a1, h1 = divmod(x, m)
        for y in range(size):
            a2, h2 = divmod(y, m)
            table[x][y] = n_group.table[a1][act(h1, a2)] * m + h.table[h1][h2]
    return FiniteGroup(table)


def permutation_group(perms: Sequence[Sequence[int]], name: str | None = None) -> FiniteGroup:
    """Group generated by permutations (tuples of images), identity numbered 0."""
    degree = len(perms[0])
    ident = tuple(range(degree))
    elems = [ident]
    index = {ident: 0}
    queue = deque([ident])
    gens = [tuple(p) for p in perms]
    while queue:
        x = queue.popleft()
        for g in gens:
            y = tuple(g[x[i]] for i in range(degree))  # y = g∘x
            if y not in index:
                index[y] = len(elems)
                elems.append(y)
                queue.append(y)
    # product a*b := a∘b (apply b first)
    table = [[index[tuple(a[b[i]] for i in range(degree))] for b in elems] for a in elems]
    return FiniteGroup(table, name=name)


def symmetric_group(n: int) -> FiniteGroup:
    if n == 1:
        return trivial_group()
    gens = [tuple([1, 0] + list(range(2, n))), tuple(list(range(1, n)) + [0])]
    return permutation_group(gens, name=f"S{n}")


def alternating_group(n: int) -> FiniteGroup:
    gens = [tuple([1, 2, 0] + list(range(3, n)))]
    for k in range(3, n):
        p = list(range(n))
        p[0], p[1], p[k] = p[1], p[k], p[0]
        gens.append(tuple(p))
    return permutation_group(gens, name=f"A{n}")


def dihedral_group(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return permutation_group([rot, ref], name=f"D{n}")


def quaternion_group() -> FiniteGroup:
    # elements ±1, ±i, ±j, ±k as (sign, unit) with unit in 1,i,j,k
    units = ["1", "i", "j", "k"]
    mult = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    elems = [(s, u) for s in (1, -1) for u in units]
    index = {e: i for i, e in enumerate(elems)}
    table = []
    for s1, u1 in elems:
        row = []
        for s2, u2 in elems:
            s, u = mult[(u1, u2)]
            row.append(index[(s * s1 * s2, u)])
        table.append(row)
    return FiniteGroup(table, name="Q8")


# -- homomorphisms ------------------------------------------------------------


def hom_violations(dom: FiniteGroup, cod: FiniteGroup, values: Sequence[int], limit: int | None = None):
    """Pairs (a, b) with f(ab) != f(a)f(b); includes (0, 0) when f(1) != 1."""
    out = []
    for a in range(dom.order):
        fa = values[a]
        for b in range(dom.order):
            if values[dom.table[a][b]] != cod.table[fa][values[b]]:
                out.append((a, b))
                if limit is not None and len(out) >= limit:
                    return out
    return out


class GroupHom:
    def __init__(self, domain: FiniteGroup, codomain: FiniteGroup, values: Sequence[int], check: bool = True):
        values = [int(v) for v in values]
        if len(values) != domain.order or any(not 0 <= v < codomain.order for v in values):
            raise MalformedError("homomorphism table has the wrong length or range")
        self.domain, self.codomain, self.values = domain, codomain, tuple(values)
        if check:
            bad = hom_violations(domain, codomain, values, limit=1)
            if bad:
                a, b = bad[0]
                raise MalformedError(f"not a homomorphism: f({a}*{b}) != f({a})*f({b})")

    def __call__(self, a: int) -> int:
        return self.values[a]

    def kernel(self) -> list[int]:
        return [a for a, v in enumerate(self.values) if v == 0]

    def image(self) -> list[int]:
        return sorted(set(self.values))

    def is_injective(self) -> bool:
        return len(set(self.values)) == self.domain.order

    def is_surjective(self) -> bool:
        return len(set(self.values)) == self.codomain.order

    def then(self, other: GroupHom) -> GroupHom:
        """other∘self."""
        return GroupHom(self.domain, other.codomain, [other.values[v] for v in self.values], check=False)

    @classmethod
    def trivial(cls, domain, codomain):
        return cls(domain, codomain, [0] * domain.order, check=False)

    @classmethod
    def identity(cls, g):
        return cls(g, g, list(range(g.order)), check=False)


def extend_on_generators(dom: FiniteGroup, gens: Sequence[int], images: Sequence[int], cod: FiniteGroup) -> list[int] | None:
    """The homomorphism sending gens[i] to images[i], or None if none exists.

    Walks the Cayley graph of ``dom``; a conflicting edge is a violated
    relation, so the partial map is rejected as soon as one appears.
    """
    values = [-1] * dom.order
    values[0] = 0
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for g, im in zip(gens, images):
            y = dom.table[x][g]
            fy = cod.table[values[x]][im]
            if values[y] == -1:
                values[y] = fy
                queue.append(y)
            elif values[y] != fy:
                return None
    if -1 in values:
        raise ValueError("generators do not generate the domain")
    return values


def find_isomorphism(g: FiniteGroup, h: FiniteGroup) -> list[int] | None:
    if g.order != h.order or sorted(g.element_orders) != sorted(h.element_orders):
        return None
    gens = g.generators
    options = [[y for y in range(h.order) if h.element_orders[y] == g.element_orders[x]] for x in gens]
    for images in itertools.product(*options):
        values = extend_on_generators(g, gens, images, h)
        if values is not None and len(set(values)) == h.order:
            return values
    return None


def is_isomorphic(g: FiniteGroup, h: FiniteGroup) -> bool:
    return find_isomorphism(g, h) is not None


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def abelian_invariants(g: FiniteGroup) -> list[int]:
    """Invariant factors d_1 | d_2 | ... of an abelian group (trivial group -> [])."""
    if not g.is_abelian():
        raise ValueError("group is not abelian")
    orders = g.element_orders
    primary: list[list[int]] = []
    for p in _prime_factors(g.order):
        # |G[p^k]| = p^{sum_i min(k, e_i)}; successive differences give the partition
        counts, k = [], 0
        while True:
            k += 1
            size = sum(1 for o in orders if (p ** k) % o == 0)
            exp = 0
            while size > 1:
                size //= p
                exp += 1
            counts.append(exp)
            if len(counts) >= 2 and counts[-1] == counts[-2]:
                break
        parts_at_least = [counts[0]] + [counts[i] - counts[i - 1] for i in range(1, len(counts))]
        exps = []
        for k in range(len(parts_at_least)):
            nxt = parts_at_least[k + 1] if k + 1 < len(parts_at_least) else 0
            exps += [k + 1] * (parts_at_least[k] - nxt)
        primary.append(sorted(p ** e for e in exps))
    width = max((len(x) for x in primary), default=0)
    factors = []
    for i in range(width):
        d = 1
        for col in primary:
            j = len(col) - width + i
            if j >= 0:
                d *= col[j]
        factors.append(d)
    return factors


_NAMED = {}


def _named_catalog():
    if not _NAMED:
        for grp in (symmetric_group(3), dihedral_group(4), quaternion_group(), alternating_group(4),
                    dihedral_group(5), dihedral_group(6), dihedral_group(7), dihedral_group(8), symmetric_group(4)):
            _NAMED.setdefault(grp.order, []).append(grp)
    return _NAMED


def structure_name(g: FiniteGroup) -> str:
    """Readable isomorphism type: "1", "C4", "C2xC2", "S3", ..."""
    if g.order == 1:
        return "1"
    if g.is_abelian():
        return "x".join(f"C{d}" for d in abelian_invariants(g))
    for cand in _named_catalog().get(g.order, []):
        if is_isomorphic(g, cand):
            return cand.name
    return f"nonabelian order {g.order}"
