"""Exact finite-group arithmetic on dense multiplication tables.

Elements are integer ids ``0..order-1``; every operation works purely on
tables, so all checks are exhaustive and exact.
"""

from __future__ import annotations

import os
from itertools import permutations

from .report import CapacityError, Report, StructuralError

DEFAULT_MAX_ORDER = 64


def max_order() -> int:
    """Capacity bound for isomorphism/morphism searches (env ``GCAT_MAX_ORDER``)."""
    return int(os.environ.get("GCAT_MAX_ORDER", DEFAULT_MAX_ORDER))


def validate_group(table, order=None) -> Report:
    """Check a candidate multiplication table against the group axioms.

    Structural problems (wrong dimensions, out-of-range entries) are reported
    under ``group.structure`` and short-circuit the axiom sweep; axiom failures
    carry witness element ids.
    """
    r = Report()
    n = len(table) if order is None else order
    if len(table) != n:
        r.fail("group.structure", (len(table),), f"expected {n} rows, got {len(table)}")
        return r
    for i, row in enumerate(table):
        if len(row) != n:
            r.fail("group.structure", (i,), f"row {i} has {len(row)} entries, expected {n}")
            return r
        for j, v in enumerate(row):
            if not isinstance(v, int) or not (0 <= v < n):
                r.fail("group.structure", (i, j), f"entry table[{i}][{j}]={v!r} out of range")
                return r
    for i in range(n):
        row = set(table[i])
        col = set(table[j][i] for j in range(n))
        r.record("group.latin", len(row) == n and len(col) == n, (i,),
                 "row/column is not a permutation")
    identity = None
    for e in range(n):
        if all(table[e][x] == x and table[x][e] == x for x in range(n)):
            identity = e
            break
    r.record("group.identity", identity is not None, (), "no two-sided identity")
    if identity is not None:
        for a in range(n):
            r.record("group.inverse",
                     any(table[a][b] == identity and table[b][a] == identity for b in range(n)),
                     (a,), f"element {a} has no two-sided inverse")
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    r.fail("group.assoc", (a, b, c),
                           f"(a b) c = {table[table[a][b]][c]} != a (b c) = {table[a][table[b][c]]}")
    r.counts["group.assoc"] = n * n * n
    return r


class FiniteGroup:
    """A finite group given by its multiplication table.

    ``table[a][b]`` is the id of the product ``a*b``.  The constructor derives
    the identity and the inverse table and raises :class:`StructuralError`
    if the table is not a valid group (use :func:`validate_group` to get a
    witness report for a bad candidate).
    """

    def __init__(self, table, names=None, name=""):
        self.order = len(table)
        self.table = tuple(tuple(row) for row in table)
        self.name = name
        if any(len(row) != self.order for row in self.table):
            raise StructuralError(f"group {name!r}: table is not square")
        if names is not None and len(names) != self.order:
            raise StructuralError(f"group {name!r}: {len(names)} names for {self.order} elements")
        self.names = tuple(names) if names is not None else None
        rep = validate_group(self.table)
        if not rep.ok:
            raise StructuralError(f"group {name!r}: {rep.violations[0]}")
        self.identity = next(e for e in range(self.order)
                             if all(self.table[e][x] == x for x in range(self.order)))
        inv = [None] * self.order
        for a in range(self.order):
            for b in range(self.order):
                if self.table[a][b] == self.identity:
                    inv[a] = b
                    break
        self.inverse = tuple(inv)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conj(self, a: int, x: int) -> int:
        """a x a^-1"""
        return self.table[self.table[a][x]][self.inverse[a]]

    def prod(self, *elems) -> int:
        out = self.identity
        for x in elems:
            out = self.table[out][x]
        return out

    @property
    def elements(self) -> range:
        return range(self.order)

    def element_name(self, a: int) -> str:
        return self.names[a] if self.names else str(a)

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    def order_profile(self) -> tuple:
        """Sorted multiset of element orders; an isomorphism invariant."""
        return tuple(sorted(self.element_order(a) for a in self.elements))

    def is_abelian(self) -> bool:
        return all(self.table[a][b] == self.table[b][a]
                   for a in self.elements for b in self.elements)

    def closure(self, gens) -> frozenset:
        seen = {self.identity, *gens}
        frontier = list(seen)
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    for c in (self.table[a][g], self.table[g][a]):
                        if c not in seen:
                            seen.add(c)
                            nxt.append(c)
            frontier = nxt
        return frozenset(seen)

    def generators(self) -> list:
        """A small generating sequence, chosen deterministically by element id."""
        gens = []
        known = self.closure(gens)
        for a in self.elements:
            if a not in known:
                gens.append(a)
                known = self.closure(gens)
                if len(known) == self.order:
                    break
        return gens

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"FiniteGroup({self.name or self.order!r}, order={self.order})"


class GroupHom:
    """A homomorphism between finite groups, stored as a per-element image table."""

    def __init__(self, dom: FiniteGroup, cod: FiniteGroup, mapping, check=True):
        self.dom = dom
        self.cod = cod
        self.mapping = tuple(mapping)
        if len(self.mapping) != dom.order:
            raise StructuralError(f"hom: map has {len(self.mapping)} entries for order {dom.order}")
        if any(not (0 <= v < cod.order) for v in self.mapping):
            raise StructuralError("hom: image out of range")
        if check:
            rep = self.validate()
            if not rep.ok:
                raise StructuralError(f"hom: {rep.violations[0]}")

    def validate(self) -> Report:
        r = Report()
        f = self.mapping
        r.record("hom.identity", f[self.dom.identity] == self.cod.identity, (),
                 "identity not preserved")
        for a in self.dom.elements:
            for b in self.dom.elements:
                r.record("hom.mult", f[self.dom.mul(a, b)] == self.cod.mul(f[a], f[b]), (a, b),
                         "f(ab) != f(a)f(b)")
        return r

    def __call__(self, a: int) -> int:
        return self.mapping[a]

    def image(self) -> frozenset:
        return frozenset(self.mapping)

    def is_injective(self) -> bool:
        return len(set(self.mapping)) == self.dom.order

    def is_surjective(self) -> bool:
        return len(set(self.mapping)) == self.cod.order

    def is_bijective(self) -> bool:
        return self.is_injective() and self.dom.order == self.cod.order

    def __eq__(self, other):
        return (isinstance(other, GroupHom) and self.mapping == other.mapping
                and self.dom == other.dom and self.cod == other.cod)

    def __hash__(self):
        return hash((self.mapping, self.dom.table, self.cod.table))

    def __repr__(self):
        return f"GroupHom({self.dom.name or self.dom.order} -> {self.cod.name or self.cod.order})"


def hom_compose(outer: GroupHom, inner: GroupHom) -> GroupHom:
    if inner.cod != outer.dom:
        raise StructuralError("hom_compose: codomain/domain mismatch")
    return GroupHom(inner.dom, outer.cod, [outer(inner(a)) for a in inner.dom.elements], check=False)


def identity_hom(g: FiniteGroup) -> GroupHom:
    return GroupHom(g, g, list(g.elements), check=False)


class AutomorphismAction:
    """A left action of ``actor`` on ``space`` by group automorphisms.

    ``act[p][h]`` is the image of ``h`` under the automorphism attached to
    ``p``; the axioms (each map an automorphism, ``act(e)=id``,
    ``act(pq)=act(p)∘act(q)``) are exhaustively checkable via :meth:`validate`.
    """

    def __init__(self, actor: FiniteGroup, space: FiniteGroup, act, check=True):
        self.actor = actor
        self.space = space
        self.act = tuple(tuple(row) for row in act)
        if len(self.act) != actor.order or any(len(row) != space.order for row in self.act):
            raise StructuralError("action: table dimensions do not match group orders")
        if check:
            rep = self.validate()
            if not rep.ok:
                raise StructuralError(f"action: {rep.violations[0]}")

    def __call__(self, p: int, h: int) -> int:
        return self.act[p][h]

    def validate(self) -> Report:
        r = Report()
        e = self.actor.identity
        r.record("action.unit", self.act[e] == tuple(self.space.elements), (),
                 "act(e) is not the identity map")
        for p in self.actor.elements:
            row = self.act[p]
            r.record("action.bijective", len(set(row)) == self.space.order, (p,),
                     "act(p) is not a bijection")
            for h1 in self.space.elements:
                for h2 in self.space.elements:
                    r.record("action.automorphism",
                             row[self.space.mul(h1, h2)] == self.space.mul(row[h1], row[h2]),
                             (p, h1, h2), "act(p) is not multiplicative")
        for p in self.actor.elements:
            for q in self.actor.elements:
                pq = self.actor.mul(p, q)
                for h in self.space.elements:
                    r.record("action.compose",
                             self.act[pq][h] == self.act[p][self.act[q][h]],
                             (p, q, h), "act(pq) != act(p)∘act(q)")
        return r

    def __eq__(self, other):
        return (isinstance(other, AutomorphismAction) and self.act == other.act
                and self.actor == other.actor and self.space == other.space)

    def __repr__(self):
        return f"AutomorphismAction({self.actor.name or self.actor.order} on {self.space.name or self.space.order})"


def trivial_action(actor: FiniteGroup, space: FiniteGroup) -> AutomorphismAction:
    row = tuple(space.elements)
    return AutomorphismAction(actor, space, [row] * actor.order, check=False)


# ----------------------------------------------------------------------------
# constructors


def cyclic(n: int, name=None) -> FiniteGroup:
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup(table, name=name or f"C{n}")


def trivial() -> FiniteGroup:
    return cyclic(1, name="1")


def from_permutations(perms, name="") -> FiniteGroup:
    """Group generated by composition of the given permutation tuples.

    The element list is the closure, sorted; composition ``(p*q)(i) = p[q[i]]``
    (right factor applied first).
    """
    degree = len(perms[0])
    ident = tuple(range(degree))
    elems = {ident}
    frontier = [ident]
    gens = [tuple(p) for p in perms]
    while frontier:
        nxt = []
        for p in frontier:
            for q in gens:
                c = tuple(p[q[i]] for i in range(degree))
                if c not in elems:
                    elems.add(c)
                    nxt.append(c)
                c = tuple(q[p[i]] for i in range(degree))
                if c not in elems:
                    elems.add(c)
                    nxt.append(c)
        frontier = nxt
    ordered = sorted(elems)
    index = {p: i for i, p in enumerate(ordered)}
    table = [[index[tuple(p[q[i]] for i in range(degree))] for q in ordered] for p in ordered]
    g = FiniteGroup(table, name=name)
    g.permutations = tuple(ordered)
    return g


def symmetric(n: int) -> FiniteGroup:
    if n == 1:
        return trivial()
    gens = [tuple([1, 0] + list(range(2, n)))]
    if n > 2:
        gens.append(tuple(list(range(1, n)) + [0]))
    return from_permutations(gens, name=f"S{n}")


def alternating(n: int) -> FiniteGroup:
    if n < 3:
        return trivial()
    gens = [(1, 2, 0) + tuple(range(3, n))]
    if n > 3:
        gens.append(tuple(range(n - 3)) + (n - 2, n - 1, n - 3))
    return from_permutations(gens, name=f"A{n}")


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n as permutations of an n-gon."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((n - i) % n for i in range(n))
    return from_permutations([rot, ref], name=f"D{n}")


def quaternion() -> FiniteGroup:
    """Q8 with elements 1,-1,i,-i,j,-j,k,-k (in that id order)."""
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    idx = {s: k for k, s in enumerate(names)}

    def mul(a, b):
        sa, ua = (-1, a[1:]) if a.startswith("-") else (1, a)
        sb, ub = (-1, b[1:]) if b.startswith("-") else (1, b)
        basemul = {
            ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
            ("i", "1"): (1, "i"), ("j", "1"): (1, "j"), ("k", "1"): (1, "k"),
            ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
            ("i", "j"): (1, "k"), ("j", "i"): (-1, "k"),
            ("j", "k"): (1, "i"), ("k", "j"): (-1, "i"),
            ("k", "i"): (1, "j"), ("i", "k"): (-1, "j"),
        }
        s, u = basemul[(ua, ub)]
        sign = sa * sb * s
        return idx[u if sign == 1 else "-" + u]

    table = [[mul(a, b) for b in names] for a in names]
    return FiniteGroup(table, names=names, name="Q8")


def direct_product(a: FiniteGroup, b: FiniteGroup, name=None) -> FiniteGroup:
    n = a.order * b.order

    def pid(x, y):
        return x * b.order + y

    table = [[0] * n for _ in range(n)]
    for x1 in a.elements:
        for y1 in b.elements:
            for x2 in a.elements:
                for y2 in b.elements:
                    table[pid(x1, y1)][pid(x2, y2)] = pid(a.mul(x1, x2), b.mul(y1, y2))
    return FiniteGroup(table, name=name or f"{a.name}x{b.name}")


def klein_four() -> FiniteGroup:
    return direct_product(cyclic(2), cyclic(2), name="V4")


def subgroup(g: FiniteGroup, elements) -> tuple:
    """Materialize the subgroup on the given closed element set.

    Returns ``(FiniteGroup, GroupHom)`` where the hom is the inclusion.
    Raises :class:`StructuralError` if the set is not closed.
    """
    elems = sorted(set(elements))
    index = {x: i for i, x in enumerate(elems)}
    table = []
    for x in elems:
        row = []
        for y in elems:
            p = g.mul(x, y)
            if p not in index:
                raise StructuralError(f"subset not closed: {x}*{y}={p} escapes")
            row.append(index[p])
        table.append(row)
    names = [g.element_name(x) for x in elems] if g.names else None
    sub = FiniteGroup(table, names=names, name=f"{g.name}-sub{len(elems)}")
    incl = GroupHom(sub, g, elems, check=False)
    return sub, incl


# ----------------------------------------------------------------------------
# kernels, cokernels, isomorphism search


def kernel(f: GroupHom) -> tuple:
    """Subgroup ``{a : f(a)=e}`` with its inclusion hom."""
    elems = [a for a in f.dom.elements if f(a) == f.cod.identity]
    return subgroup(f.dom, elems)


class NonNormalImageError(StructuralError):
    def __init__(self, witness, message):
        super().__init__(message)
        self.witness = witness


def cokernel(f: GroupHom) -> tuple:
    """Quotient of ``cod`` by the image of ``f``, with the projection hom.

    The image must be normal; otherwise :class:`NonNormalImageError` is raised
    naming a conjugation witness ``(g, h, g h g^-1)``.
    """
    cod = f.cod
    img = f.image()
    for g in cod.elements:
        for h in img:
            c = cod.conj(g, h)
            if c not in img:
                raise NonNormalImageError(
                    (g, h, c), f"image not normal: {g}·{h}·{g}⁻¹ = {c} escapes the image")
    coset_of = [None] * cod.order
    reps = []
    for a in cod.elements:
        if coset_of[a] is None:
            k = len(reps)
            reps.append(a)
            for h in img:
                coset_of[cod.mul(h, a)] = k
    n = len(reps)
    table = [[coset_of[cod.mul(reps[i], reps[j])] for j in range(n)] for i in range(n)]
    quot = FiniteGroup(table, name=f"{cod.name}/im")
    proj = GroupHom(cod, quot, coset_of, check=False)
    return quot, proj


def _extend_partial(dom: FiniteGroup, cod: FiniteGroup, pairs):
    """Close a partial generator assignment under multiplication.

    ``pairs`` maps dom elements to images.  Returns the closed dict or ``None``
    on conflict (the map cannot extend to a homomorphism).
    """
    mapping = dict(pairs)
    mapping[dom.identity] = cod.identity
    frontier = list(mapping)
    while frontier:
        nxt = []
        items = list(mapping.items())
        for a in frontier:
            fa = mapping[a]
            for b, fb in items:
                for p, fp in ((dom.mul(a, b), cod.mul(fa, fb)),
                              (dom.mul(b, a), cod.mul(fb, fa))):
                    if p in mapping:
                        if mapping[p] != fp:
                            return None
                    else:
                        mapping[p] = fp
                        nxt.append(p)
        frontier = nxt
    return mapping


def _iso_candidates(dom, cod, gens):
    by_order = {}
    for x in cod.elements:
        by_order.setdefault(cod.element_order(x), []).append(x)
    return [by_order.get(dom.element_order(g), []) for g in gens]


def enumerate_isomorphisms(a: FiniteGroup, b: FiniteGroup):
    """Yield every isomorphism ``a -> b`` (deterministic generator-image backtracking)."""
    if a.order != b.order or a.order_profile() != b.order_profile():
        return
    gens = a.generators()
    if not gens:
        yield GroupHom(a, b, [b.identity], check=False)
        return
    cands = _iso_candidates(a, b, gens)

    def backtrack(i, mapping):
        if i == len(gens):
            if len(set(mapping.values())) == a.order:
                table = [mapping[x] for x in a.elements]
                yield GroupHom(a, b, table, check=False)
            return
        g = gens[i]
        if g in mapping:
            yield from backtrack(i + 1, mapping)
            return
        for img in cands[i]:
            ext = _extend_partial(a, b, {**mapping, g: img})
            if ext is not None and len(set(ext.values())) == len(ext):
                yield from backtrack(i + 1, ext)

    yield from backtrack(0, {a.identity: b.identity})


def find_isomorphism(a: FiniteGroup, b: FiniteGroup, bound=None):
    """First isomorphism ``a -> b`` in backtracking order, or ``None``.

    Orders above the capacity bound raise :class:`CapacityError`.
    """
    limit = bound if bound is not None else max_order()
    if a.order > limit or b.order > limit:
        raise CapacityError(f"isomorphism search bound {limit} exceeded (orders {a.order}, {b.order})")
    for iso in enumerate_isomorphisms(a, b):
        return iso
    return None


def enumerate_homs(a: FiniteGroup, b: FiniteGroup, bound=None):
    """Yield every homomorphism ``a -> b``; guarded by the capacity bound."""
    limit = bound if bound is not None else max_order()
    if a.order > limit or b.order > limit:
        raise CapacityError(f"hom search bound {limit} exceeded (orders {a.order}, {b.order})")
    gens = a.generators()
    if not gens:
        yield GroupHom(a, b, [b.identity] * a.order, check=False)
        return
    cands = []
    for g in gens:
        og = a.element_order(g)
        cands.append([x for x in b.elements if og % b.element_order(x) == 0])

    def backtrack(i, mapping):
        if i == len(gens):
            table = [mapping[x] for x in a.elements]
            yield GroupHom(a, b, table, check=False)
            return
        g = gens[i]
        if g in mapping:
            yield from backtrack(i + 1, mapping)
            return
        for img in cands[i]:
            ext = _extend_partial(a, b, {**mapping, g: img})
            if ext is not None:
                yield from backtrack(i + 1, ext)

    yield from backtrack(0, {a.identity: b.identity})
