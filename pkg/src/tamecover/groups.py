"""Finite groups as explicit multiplication tables.

These serve as the input to constant group-scheme constructors and as the
independent oracle for derived-subgroup and abelianization computations:
commutator subgroups, abelian quotients and homomorphism enumeration are
all done directly on the table.
"""

from __future__ import annotations

from itertools import product


class FiniteGroup:
    """A finite group given by labels and a multiplication table of indices."""

    def __init__(self, labels, table, name: str = ""):
        self.labels = tuple(str(x) for x in labels)
        self.table = tuple(tuple(int(x) for x in row) for row in table)
        self.order = len(self.labels)
        self.name = name or f"group{self.order}"
        self._validate()
        self.identity = next(e for e in range(self.order)
                             if all(self.table[e][g] == g for g in range(self.order)))
        self._inv = tuple(next(h for h in range(self.order)
                               if self.table[g][h] == self.identity)
                          for g in range(self.order))

    def _validate(self):
        n = self.order
        if len(self.table) != n or any(len(r) != n for r in self.table):
            raise ValueError("table shape mismatch")
        for row in self.table:
            if sorted(row) != list(range(n)):
                raise ValueError("table rows must be permutations")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                        raise ValueError("table is not associative")
        # identity and inverses are found in __init__; existence checked there

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self._inv[a]

    def commutator(self, a: int, b: int) -> int:
        return self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))

    def element_order(self, a: int) -> int:
        k, acc = 1, a
        while acc != self.identity:
            acc = self.mul(acc, a)
            k += 1
        return k

    def is_abelian(self) -> bool:
        return all(self.table[a][b] == self.table[b][a]
                   for a in range(self.order) for b in range(self.order))

    def commutator_set(self) -> frozenset:
        """All single commutators [a, b]."""
        return frozenset(self.commutator(a, b)
                         for a in range(self.order) for b in range(self.order))

    def subgroup_closure(self, seed) -> frozenset:
        elems = {self.identity, *seed}
        frontier = list(elems)
        while frontier:
            g = frontier.pop()
            for h in list(elems):
                for x in (self.mul(g, h), self.mul(h, g), self.inv(g)):
                    if x not in elems:
                        elems.add(x)
                        frontier.append(x)
        return frozenset(elems)

    def commutator_subgroup(self) -> frozenset:
        return self.subgroup_closure(self.commutator_set())

    def cosets(self, normal) -> list:
        seen = set()
        out = []
        for g in range(self.order):
            coset = frozenset(self.mul(g, h) for h in normal)
            if coset not in seen:
                seen.add(coset)
                out.append(coset)
        return out

    def quotient(self, normal) -> "FiniteGroup":
        cosets = self.cosets(normal)
        index = {c: i for i, c in enumerate(cosets)}
        reps = [min(c) for c in cosets]
        table = [[index[frozenset(self.mul(self.mul(reps[i], reps[j]), h) for h in normal)]
                  for j in range(len(cosets))] for i in range(len(cosets))]
        labels = ["{" + ",".join(self.labels[x] for x in sorted(c)) + "}" for c in cosets]
        return FiniteGroup(labels, table, name=f"{self.name}/N")

    def abelianization(self) -> "FiniteGroup":
        return self.quotient(self.commutator_subgroup())

    def abelian_invariants(self) -> tuple:
        """Invariant factors d1 | d2 | ... of an abelian group."""
        if not self.is_abelian():
            raise ValueError("invariants defined for abelian groups only")
        remaining = set(range(self.order))
        factors = []
        generated: frozenset = frozenset({self.identity})
        while len(generated) < self.order:
            best = max(remaining - generated,
                       key=lambda g: self._order_in_quotient(g, generated))
            factors.append(self._order_in_quotient(best, generated))
            generated = self.subgroup_closure(generated | {best})
        factors.sort()
        # normalize to a divisibility chain via elementwise prime regrouping
        return _divisor_chain(factors, self.order)

    def _order_in_quotient(self, g: int, sub: frozenset) -> int:
        k, acc = 1, g
        while acc not in sub:
            acc = self.mul(acc, g)
            k += 1
        return k

    def generators_minimal(self) -> tuple:
        """A small generating set, greedily extending by worst-covered element."""
        gens: list = []
        covered = frozenset({self.identity})
        while len(covered) < self.order:
            g = next(x for x in range(self.order) if x not in covered)
            gens.append(g)
            covered = self.subgroup_closure(gens)
        return tuple(gens)

    def word_tree(self, gens):
        """Expression of every element as parent * generator (BFS)."""
        tree = {self.identity: None}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for g in frontier:
                for gi, s in enumerate(gens):
                    h = self.mul(g, s)
                    if h not in tree:
                        tree[h] = (g, gi)
                        nxt.append(h)
            frontier = nxt
        if len(tree) != self.order:
            raise ValueError("not a generating set")
        return tree

    def homomorphisms_to(self, other: "FiniteGroup") -> list:
        """All homomorphisms self -> other, as index maps."""
        gens = self.generators_minimal()
        tree = self.word_tree(gens)
        homs = []
        for images in product(range(other.order), repeat=len(gens)):
            # element orders must be compatible before full expansion
            if any(self.element_order(g) % other.element_order(im)
                   for g, im in zip(gens, images)):
                continue
            phi = {self.identity: other.identity}
            ok = True
            for g in self._bfs_order(tree):
                parent = tree[g]
                if parent is None:
                    continue
                base, gi = parent
                phi[g] = other.mul(phi[base], images[gi])
            for a in range(self.order):
                for b in range(self.order):
                    if phi[self.mul(a, b)] != other.mul(phi[a], phi[b]):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                homs.append(tuple(phi[g] for g in range(self.order)))
        return homs

    def _bfs_order(self, tree):
        order_list = [g for g in tree if tree[g] is None]
        placed = set(order_list)
        while len(placed) < len(tree):
            for g, parent in tree.items():
                if g not in placed and parent is not None and parent[0] in placed:
                    order_list.append(g)
                    placed.add(g)
        return order_list

    def multiplication_closed(self) -> bool:
        return True  # validated at construction

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"


def _divisor_chain(factors, order) -> tuple:
    """Regroup cyclic factors into the canonical divisibility chain."""
    from math import prod
    # collect p-power multiset per prime
    ppowers: dict = {}
    for f in factors:
        n = f
        d = 2
        while d * d <= n:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            if e:
                ppowers.setdefault(d, []).append(d ** e)
            d += 1
        if n > 1:
            ppowers.setdefault(n, []).append(n)
    for v in ppowers.values():
        v.sort(reverse=True)
    chain = []
    while any(ppowers.values()):
        d = prod(v.pop(0) for v in ppowers.values() if v)
        chain.append(d)
    chain.sort()
    assert prod(chain) == order if chain else order == 1
    return tuple(chain)


# -- constructions -----------------------------------------------------------

def cyclic(n: int) -> FiniteGroup:
    labels = [f"g{i}" if i else "e" for i in range(n)]
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(labels, table, name=f"C{n}")


def direct_product(a: FiniteGroup, b: FiniteGroup, name: str = "") -> FiniteGroup:
    pairs = [(i, j) for i in range(a.order) for j in range(b.order)]
    index = {pq: k for k, pq in enumerate(pairs)}
    labels = [f"({a.labels[i]},{b.labels[j]})" for i, j in pairs]
    table = [[index[(a.mul(i1, i2), b.mul(j1, j2))] for (i2, j2) in pairs]
             for (i1, j1) in pairs]
    return FiniteGroup(labels, table, name=name or f"{a.name}x{b.name}")


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n (n >= 1)."""
    elems = [(r, f) for f in (0, 1) for r in range(n)]
    index = {e: k for k, e in enumerate(elems)}

    def mul(x, y):
        r1, f1 = x
        r2, f2 = y
        if f1 == 0:
            return ((r1 + r2) % n, f2)
        return ((r1 - r2) % n, 1 - f2)

    labels = [("e" if (r, f) == (0, 0) else f"r{r}" if f == 0 else f"sr{r}")
              for r, f in elems]
    table = [[index[mul(x, y)] for y in elems] for x in elems]
    return FiniteGroup(labels, table, name=f"D{n}")


def dicyclic(n: int) -> FiniteGroup:
    """Dicyclic group of order 4n; n = 2 gives the quaternion group."""
    m = 2 * n
    elems = [(r, f) for f in (0, 1) for r in range(m)]
    index = {e: k for k, e in enumerate(elems)}

    def mul(x, y):
        r1, f1 = x
        r2, f2 = y
        if f1 == 0:
            return ((r1 + r2) % m, f2)
        # (a^r1 b) * (a^r2 b^f2) with b a = a^-1 b and b^2 = a^n
        if f2 == 0:
            return ((r1 - r2) % m, 1)
        return ((r1 - r2 + n) % m, 0)

    labels = [("e" if (r, f) == (0, 0) else f"a{r}" if f == 0 else f"a{r}b")
              for r, f in elems]
    table = [[index[mul(x, y)] for y in elems] for x in elems]
    return FiniteGroup(labels, table, name=f"Dic{n}")


def quaternion() -> FiniteGroup:
    g = dicyclic(2)
    return FiniteGroup(g.labels, g.table, name="Q8")


def _perm_group(perms, name) -> FiniteGroup:
    """Closure of a set of permutations (tuples) under composition."""
    n = len(perms[0])
    ident = tuple(range(n))
    elems = [ident]
    seen = {ident}
    frontier = [ident]
    gens = [tuple(p) for p in perms]
    while frontier:
        g = frontier.pop()
        for s in gens:
            h = tuple(g[s[i]] for i in range(n))
            if h not in seen:
                seen.add(h)
                elems.append(h)
                frontier.append(h)
    elems.sort()
    index = {e: k for k, e in enumerate(elems)}
    table = [[index[tuple(x[y[i]] for i in range(n))] for y in elems] for x in elems]
    labels = ["".join(map(str, e)) for e in elems]
    return FiniteGroup(labels, table, name=name)


def symmetric(n: int) -> FiniteGroup:
    if n < 2 or n > 4:
        raise ValueError("symmetric(n) supported for 2 <= n <= 4")
    transposition = tuple([1, 0] + list(range(2, n)))
    cycle = tuple(list(range(1, n)) + [0])
    return _perm_group([transposition, cycle], name=f"S{n}")


def alternating4() -> FiniteGroup:
    return _perm_group([(1, 0, 3, 2), (1, 2, 0, 3)], name="A4")


def special_linear_2_3() -> FiniteGroup:
    """SL(2, 3), order 24, as 2x2 matrices over F_3."""
    mats = []
    for a in range(3):
        for b in range(3):
            for c in range(3):
                for d in range(3):
                    if (a * d - b * c) % 3 == 1:
                        mats.append((a, b, c, d))
    index = {m: k for k, m in enumerate(mats)}

    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return ((a * e + b * g) % 3, (a * f + b * h) % 3,
                (c * e + d * g) % 3, (c * f + d * h) % 3)

    table = [[index[mul(x, y)] for y in mats] for x in mats]
    labels = ["".join(map(str, m)) for m in mats]
    return FiniteGroup(labels, table, name="SL23")


def elementary_abelian(p: int, k: int) -> FiniteGroup:
    g = cyclic(p)
    for _ in range(k - 1):
        g = direct_product(g, cyclic(p))
    return FiniteGroup(g.labels, g.table, name=f"C{p}^{k}")


def bundled_groups() -> dict:
    """The bundled table set: named groups of order <= 24."""
    groups = {}

    def put(g):
        groups[g.name] = g

    for n in (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 15, 16, 18, 20, 21, 24):
        put(cyclic(n))
    put(FiniteGroup(direct_product(cyclic(2), cyclic(2)).labels,
                    direct_product(cyclic(2), cyclic(2)).table, name="V4"))
    put(direct_product(cyclic(2), cyclic(4)))
    put(direct_product(cyclic(2), cyclic(6)))
    put(direct_product(cyclic(3), cyclic(3)))
    put(direct_product(cyclic(2), cyclic(8)))
    put(direct_product(cyclic(4), cyclic(4)))
    put(direct_product(cyclic(2), cyclic(10)))
    put(direct_product(cyclic(2), cyclic(12)))
    put(elementary_abelian(2, 3))
    put(elementary_abelian(2, 4))
    put(symmetric(3))
    put(symmetric(4))
    put(alternating4())
    put(dihedral(4))
    put(dihedral(5))
    put(dihedral(6))
    put(dihedral(7))
    put(dihedral(8))
    put(dihedral(9))
    put(dihedral(10))
    put(dihedral(12))
    put(quaternion())
    put(dicyclic(3))
    put(dicyclic(4))
    put(dicyclic(5))
    put(dicyclic(6))
    put(special_linear_2_3())
    put(direct_product(cyclic(2), alternating4(), name="C2xA4"))
    put(direct_product(cyclic(3), symmetric(3), name="C3xS3"))
    put(direct_product(cyclic(2), quaternion(), name="C2xQ8"))
    put(direct_product(cyclic(2), dihedral(4), name="C2xD4"))
    assert all(g.order <= 24 for g in groups.values())
    return groups


def group_by_name(name: str) -> FiniteGroup:
    groups = bundled_groups()
    if name not in groups:
        raise ValueError(f"unknown group {name!r}; bundled: {sorted(groups)}")
    return groups[name]
