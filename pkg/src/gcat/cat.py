"""Finite categories with strict monoidal structure, monoidal functors and
natural isomorphisms, all stored as dense integer tables."""

from __future__ import annotations

from .report import Report, StructuralError


class FiniteCategory:
    """A finite category: morphism ids with source/target/identity tables and a
    composition map on composable pairs.

    ``compose(late, early)`` is "late after early" and is defined exactly when
    ``tgt(early) == src(late)``.
    """

    def __init__(self, n_objects: int, src, tgt, identity, comp):
        self.n_objects = n_objects
        self.src = tuple(src)
        self.tgt = tuple(tgt)
        self.identity = tuple(identity)
        self.comp = dict(comp)
        self.n_morphisms = len(self.src)
        if len(self.tgt) != self.n_morphisms:
            raise StructuralError("category: src/tgt length mismatch")
        if len(self.identity) != n_objects:
            raise StructuralError("category: one identity per object required")
        if any(not (0 <= x < n_objects) for x in self.src + self.tgt):
            raise StructuralError("category: src/tgt object id out of range")
        if any(not (0 <= m < self.n_morphisms) for m in self.identity):
            raise StructuralError("category: identity morphism id out of range")
        self._hom = {}
        for m in range(self.n_morphisms):
            self._hom.setdefault((self.src[m], self.tgt[m]), []).append(m)
        self._inverse = None

    def hom(self, x: int, y: int) -> tuple:
        return tuple(self._hom.get((x, y), ()))

    def composable(self, late: int, early: int) -> bool:
        return self.tgt[early] == self.src[late]

    def compose(self, late: int, early: int) -> int:
        try:
            return self.comp[(late, early)]
        except KeyError:
            raise StructuralError(
                f"composition undefined for ({late}, {early}); "
                f"tgt(early)={self.tgt[early]}, src(late)={self.src[late]}") from None

    def compose_path(self, *mors) -> int:
        """Compose a path listed first-to-last: compose_path(f, g, h) = h∘g∘f."""
        out = mors[0]
        for m in mors[1:]:
            out = self.compose(m, out)
        return out

    def id_mor(self, x: int) -> int:
        return self.identity[x]

    def inverse(self, m: int):
        """Two-sided inverse morphism id, or ``None``."""
        if self._inverse is None:
            inv = [None] * self.n_morphisms
            for f in range(self.n_morphisms):
                for g in self.hom(self.tgt[f], self.src[f]):
                    if (self.comp.get((g, f)) == self.identity[self.src[f]]
                            and self.comp.get((f, g)) == self.identity[self.tgt[f]]):
                        inv[f] = g
                        break
            self._inverse = inv
        return self._inverse[m]

    def is_iso(self, m: int) -> bool:
        return self.inverse(m) is not None

    def validate(self) -> Report:
        r = Report()
        for x in range(self.n_objects):
            i = self.identity[x]
            r.record("cat.identity_typing", self.src[i] == x and self.tgt[i] == x, (x,),
                     "identity morphism not an endomorphism of its object")
        for (late, early), m in self.comp.items():
            ok = (0 <= late < self.n_morphisms and 0 <= early < self.n_morphisms
                  and self.tgt[early] == self.src[late])
            r.record("cat.comp_defined", ok, (late, early),
                     "composition defined on a non-composable pair")
            if ok:
                r.record("cat.comp_typing",
                         self.src[m] == self.src[early] and self.tgt[m] == self.tgt[late],
                         (late, early, m), "composite has wrong endpoints")
        for early in range(self.n_morphisms):
            y = self.tgt[early]
            for late in range(self.n_morphisms):
                if self.src[late] == y:
                    r.record("cat.comp_total", (late, early) in self.comp, (late, early),
                             "composable pair without a composite")
        if not r.ok:
            return r
        for x in range(self.n_objects):
            for m in range(self.n_morphisms):
                if self.src[m] == x:
                    r.record("cat.identity_neutral",
                             self.comp.get((m, self.identity[x])) == m, (m, x),
                             "m ∘ id != m")
                if self.tgt[m] == x:
                    r.record("cat.identity_neutral",
                             self.comp.get((self.identity[x], m)) == m, (m, x),
                             "id ∘ m != m")
        for f in range(self.n_morphisms):
            for g in range(self.n_morphisms):
                if not self.composable(g, f):
                    continue
                gf = self.comp[(g, f)]
                for h in range(self.n_morphisms):
                    if not self.composable(h, g):
                        continue
                    r.record("cat.assoc",
                             self.comp[(h, gf)] == self.comp[(self.comp[(h, g)], f)],
                             (h, g, f), "composition not associative")
        return r


class StrictMonoidalCategory(FiniteCategory):
    """A finite category with strictly associative, strictly unital tensor tables."""

    def __init__(self, n_objects, src, tgt, identity, comp, unit, obj_tensor, mor_tensor):
        super().__init__(n_objects, src, tgt, identity, comp)
        self.unit = unit
        self.obj_tensor = tuple(tuple(row) for row in obj_tensor)
        self.mor_tensor = tuple(tuple(row) for row in mor_tensor)
        if len(self.obj_tensor) != n_objects or any(len(r_) != n_objects for r_ in self.obj_tensor):
            raise StructuralError("monoidal: object tensor table must be n×n")
        if (len(self.mor_tensor) != self.n_morphisms
                or any(len(r_) != self.n_morphisms for r_ in self.mor_tensor)):
            raise StructuralError("monoidal: morphism tensor table must be m×m")

    def tensor_obj(self, x: int, y: int) -> int:
        return self.obj_tensor[x][y]

    def tensor_mor(self, f: int, l: int) -> int:
        return self.mor_tensor[f][l]

    def validate(self) -> Report:
        r = super().validate()
        if not r.ok:
            return r
        n, u = self.n_objects, self.unit
        for x in range(n):
            r.record("mon.obj_unit",
                     self.obj_tensor[x][u] == x and self.obj_tensor[u][x] == x, (x,),
                     "unit object is not strict")
            for y in range(n):
                for z in range(n):
                    r.record("mon.obj_assoc",
                             self.obj_tensor[self.obj_tensor[x][y]][z]
                             == self.obj_tensor[x][self.obj_tensor[y][z]],
                             (x, y, z), "object tensor not associative")
        m = self.n_morphisms
        for f in range(m):
            for l in range(m):
                t = self.mor_tensor[f][l]
                r.record("mon.mor_typing",
                         self.src[t] == self.obj_tensor[self.src[f]][self.src[l]]
                         and self.tgt[t] == self.obj_tensor[self.tgt[f]][self.tgt[l]],
                         (f, l), "tensor of morphisms has wrong endpoints")
        iu = self.identity[u]
        for f in range(m):
            r.record("mon.mor_unit",
                     self.mor_tensor[f][iu] == f and self.mor_tensor[iu][f] == f, (f,),
                     "id_1 is not a strict unit for ⊗ on morphisms")
        for f in range(m):
            for l in range(m):
                fl = self.mor_tensor[f][l]
                for k in range(m):
                    r.record("mon.mor_assoc",
                             self.mor_tensor[fl][k] == self.mor_tensor[f][self.mor_tensor[l][k]],
                             (f, l, k), "morphism tensor not associative")
        for x in range(n):
            for y in range(n):
                r.record("mon.id_tensor",
                         self.mor_tensor[self.identity[x]][self.identity[y]]
                         == self.identity[self.obj_tensor[x][y]],
                         (x, y), "id_X ⊗ id_Y != id_{X⊗Y}")
        for f2 in range(m):
            for f1 in range(m):
                if not self.composable(f2, f1):
                    continue
                for l2 in range(m):
                    for l1 in range(m):
                        if not self.composable(l2, l1):
                            continue
                        lhs = self.mor_tensor[self.comp[(f2, f1)]][self.comp[(l2, l1)]]
                        rhs = self.comp[(self.mor_tensor[f2][l2], self.mor_tensor[f1][l1])]
                        r.record("mon.interchange", lhs == rhs, (f2, f1, l2, l1),
                                 "(f∘f')⊗(l∘l') != (f⊗l)∘(f'⊗l')")
        return r


class MonoidalFunctor:
    """A monoidal functor ``(F, F2, F0)`` between strict monoidal categories.

    ``f2[x][y]`` is the structure iso ``F(X⊗Y) -> F(X)⊗F(Y)`` and ``f0`` the
    iso ``F(1) -> 1``.
    """

    def __init__(self, dom: StrictMonoidalCategory, cod: StrictMonoidalCategory,
                 obj_map, mor_map, f2, f0):
        self.dom = dom
        self.cod = cod
        self.obj_map = tuple(obj_map)
        self.mor_map = tuple(mor_map)
        self.f2 = tuple(tuple(row) for row in f2)
        self.f0 = f0
        if len(self.obj_map) != dom.n_objects or len(self.mor_map) != dom.n_morphisms:
            raise StructuralError("functor: map tables have wrong length")
        if len(self.f2) != dom.n_objects or any(len(r_) != dom.n_objects for r_ in self.f2):
            raise StructuralError("functor: F2 table must be n×n")

    def on_obj(self, x: int) -> int:
        return self.obj_map[x]

    def on_mor(self, m: int) -> int:
        return self.mor_map[m]

    def is_unital(self) -> bool:
        return self.f0 == self.cod.identity[self.cod.unit]

    def is_strict(self) -> bool:
        return self.is_unital() and all(
            self.f2[x][y] == self.cod.identity[self.obj_map[self.dom.obj_tensor[x][y]]]
            for x in range(self.dom.n_objects) for y in range(self.dom.n_objects))

    def validate(self) -> Report:
        r = Report()
        d, c = self.dom, self.cod
        for m in range(d.n_morphisms):
            r.record("fun.mor_typing",
                     c.src[self.mor_map[m]] == self.obj_map[d.src[m]]
                     and c.tgt[self.mor_map[m]] == self.obj_map[d.tgt[m]],
                     (m,), "F(f) has wrong endpoints")
        for x in range(d.n_objects):
            r.record("fun.identity",
                     self.mor_map[d.identity[x]] == c.identity[self.obj_map[x]], (x,),
                     "F(id) != id")
        for g in range(d.n_morphisms):
            for f in range(d.n_morphisms):
                if d.composable(g, f):
                    r.record("fun.compose",
                             self.mor_map[d.comp[(g, f)]]
                             == c.comp.get((self.mor_map[g], self.mor_map[f])),
                             (g, f), "F(g∘f) != F(g)∘F(f)")
        r.record("fun.f0_typing",
                 c.src[self.f0] == self.obj_map[d.unit] and c.tgt[self.f0] == c.unit
                 and c.is_iso(self.f0), (), "F0 is not an iso F(1)->1")
        for x in range(d.n_objects):
            for y in range(d.n_objects):
                m = self.f2[x][y]
                ok = (c.src[m] == self.obj_map[d.obj_tensor[x][y]]
                      and c.tgt[m] == c.obj_tensor[self.obj_map[x]][self.obj_map[y]]
                      and c.is_iso(m))
                r.record("fun.f2_typing", ok, (x, y), "F2(X,Y) is not an iso F(X⊗Y)->F(X)⊗F(Y)")
        if not r.ok:
            return r
        for f in range(d.n_morphisms):
            for l in range(d.n_morphisms):
                lhs = c.compose(self.f2[d.tgt[f]][d.tgt[l]], self.mor_map[d.mor_tensor[f][l]])
                rhs = c.compose(c.mor_tensor[self.mor_map[f]][self.mor_map[l]],
                                self.f2[d.src[f]][d.src[l]])
                r.record("fun.f2_natural", lhs == rhs, (f, l), "F2 is not natural")
        for x in range(d.n_objects):
            for y in range(d.n_objects):
                for z in range(d.n_objects):
                    xy = d.obj_tensor[x][y]
                    yz = d.obj_tensor[y][z]
                    lhs = c.compose(
                        c.mor_tensor[self.f2[x][y]][c.identity[self.obj_map[z]]],
                        self.f2[xy][z])
                    rhs = c.compose(
                        c.mor_tensor[c.identity[self.obj_map[x]]][self.f2[y][z]],
                        self.f2[x][yz])
                    r.record("fun.assoc_square", lhs == rhs, (x, y, z),
                             "associativity square for F2 fails")
        u = d.unit
        for x in range(d.n_objects):
            fx = self.obj_map[x]
            lhs = c.compose(c.mor_tensor[c.identity[fx]][self.f0], self.f2[x][u])
            r.record("fun.unit_right", lhs == c.identity[fx], (x,),
                     "(id⊗F0)∘F2(X,1) != id")
            lhs = c.compose(c.mor_tensor[self.f0][c.identity[fx]], self.f2[u][x])
            r.record("fun.unit_left", lhs == c.identity[fx], (x,),
                     "(F0⊗id)∘F2(1,X) != id")
        return r

    def __eq__(self, other):
        return (isinstance(other, MonoidalFunctor) and self.obj_map == other.obj_map
                and self.mor_map == other.mor_map and self.f2 == other.f2
                and self.f0 == other.f0)

    def __repr__(self):
        return f"MonoidalFunctor(obj={self.obj_map})"


def identity_functor(c: StrictMonoidalCategory) -> MonoidalFunctor:
    f2 = [[c.identity[c.obj_tensor[x][y]] for y in range(c.n_objects)]
          for x in range(c.n_objects)]
    return MonoidalFunctor(c, c, range(c.n_objects), range(c.n_morphisms),
                           f2, c.identity[c.unit])


def compose_functors(outer: MonoidalFunctor, inner: MonoidalFunctor) -> MonoidalFunctor:
    """(G∘F) with (GF)2 = G2(FX,FY) ∘ G(F2(X,Y)) and (GF)0 = G0 ∘ G(F0)."""
    if inner.cod is not outer.dom:
        raise StructuralError("compose_functors: endpoint mismatch")
    d = inner.dom
    c = outer.cod
    obj_map = [outer.obj_map[inner.obj_map[x]] for x in range(d.n_objects)]
    mor_map = [outer.mor_map[inner.mor_map[m]] for m in range(d.n_morphisms)]
    f2 = [[c.compose(outer.f2[inner.obj_map[x]][inner.obj_map[y]],
                     outer.mor_map[inner.f2[x][y]])
           for y in range(d.n_objects)] for x in range(d.n_objects)]
    f0 = c.compose(outer.f0, outer.mor_map[inner.f0])
    return MonoidalFunctor(d, c, obj_map, mor_map, f2, f0)


class MonoidalNatIso:
    """A monoidal natural isomorphism between parallel monoidal functors."""

    def __init__(self, src: MonoidalFunctor, dst: MonoidalFunctor, components):
        if src.dom is not dst.dom or src.cod is not dst.cod:
            raise StructuralError("nat iso: functors are not parallel")
        self.src = src
        self.dst = dst
        self.components = tuple(components)
        if len(self.components) != src.dom.n_objects:
            raise StructuralError("nat iso: one component per object required")

    def validate(self) -> Report:
        r = Report()
        f, g = self.src, self.dst
        d, c = f.dom, f.cod
        for x in range(d.n_objects):
            m = self.components[x]
            r.record("niso.typing",
                     c.src[m] == f.obj_map[x] and c.tgt[m] == g.obj_map[x] and c.is_iso(m),
                     (x,), "component is not an iso F(X)->G(X)")
        if not r.ok:
            return r
        for m in range(d.n_morphisms):
            lhs = c.compose(self.components[d.tgt[m]], f.mor_map[m])
            rhs = c.compose(g.mor_map[m], self.components[d.src[m]])
            r.record("niso.natural", lhs == rhs, (m,), "naturality square fails")
        r.record("niso.unit",
                 c.compose(g.f0, self.components[d.unit]) == f.f0, (),
                 "G0 ∘ φ_1 != F0")
        for x in range(d.n_objects):
            for y in range(d.n_objects):
                xy = d.obj_tensor[x][y]
                lhs = c.compose(g.f2[x][y], self.components[xy])
                rhs = c.compose(c.mor_tensor[self.components[x]][self.components[y]], f.f2[x][y])
                r.record("niso.monoidal", lhs == rhs, (x, y),
                         "G2(X,Y)∘φ_{X⊗Y} != (φ_X⊗φ_Y)∘F2(X,Y)")
        return r

    def is_all_identities(self) -> bool:
        c = self.src.cod
        return all(self.components[x] == c.identity[c.src[self.components[x]]]
                   for x in range(self.src.dom.n_objects))

    def __eq__(self, other):
        return isinstance(other, MonoidalNatIso) and self.components == other.components

    def __repr__(self):
        return f"MonoidalNatIso({self.components})"


def identity_nat_iso(f: MonoidalFunctor) -> MonoidalNatIso:
    return MonoidalNatIso(f, f, [f.cod.identity[f.obj_map[x]] for x in range(f.dom.n_objects)])


def unitalize(f: MonoidalFunctor) -> tuple:
    """Normalize a monoidal functor to a unital one.

    Returns ``(F', sigma)`` where ``F'`` sends the unit to the unit, has
    identity F0, and ``sigma: F -> F'`` is the monoidal natural isomorphism
    with ``sigma(1) = F0`` and identity components elsewhere.  Morphism maps
    and F2 are transported along sigma, so the result is well-typed even when
    a tensor of non-unit objects lands on the unit.
    """
    d, c = f.dom, f.cod
    u = d.unit
    obj_map = [c.unit if x == u else f.obj_map[x] for x in range(d.n_objects)]
    sigma = [f.f0 if x == u else c.identity[f.obj_map[x]] for x in range(d.n_objects)]
    sigma_inv = [c.inverse(m) for m in sigma]
    mor_map = [c.compose_path(sigma_inv[d.src[m]], f.mor_map[m], sigma[d.tgt[m]])
               for m in range(d.n_morphisms)]
    f2 = [[c.compose_path(sigma_inv[d.obj_tensor[x][y]], f.f2[x][y],
                          c.mor_tensor[sigma[x]][sigma[y]])
           for y in range(d.n_objects)] for x in range(d.n_objects)]
    unital = MonoidalFunctor(d, c, obj_map, mor_map, f2, c.identity[c.unit])
    return unital, MonoidalNatIso(f, unital, sigma)
