"""Monoidal G-categories: group actions on strict monoidal categories with
their coherence isos, plus the categorical-group bridge from crossed modules."""

from __future__ import annotations

from .cat import MonoidalFunctor, StrictMonoidalCategory
from .groups import FiniteGroup
from .report import Report, StructuralError
from .xmod import CrossedModule, WeakGAction


class MonoidalGCategory:
    """An action of ``group`` on a strict monoidal category.

    Data per group element g: an endofunctor (``act_obj[g]``, ``act_mor[g]``)
    with monoidal structure ``psi[g][x][y] : g_*(X⊗Y) -> g_*(X)⊗g_*(Y)``, and
    per pair (g,h) the composition isos
    ``phi[g][h][x] : (gh)_*(X) -> g_*(h_*(X))``.
    """

    def __init__(self, cat: StrictMonoidalCategory, group: FiniteGroup,
                 act_obj, act_mor, psi, phi):
        self.cat = cat
        self.group = group
        self.act_obj = tuple(tuple(row) for row in act_obj)
        self.act_mor = tuple(tuple(row) for row in act_mor)
        self.psi = tuple(tuple(tuple(row) for row in plane) for plane in psi)
        self.phi = tuple(tuple(tuple(row) for row in plane) for plane in phi)
        n, m, o = group.order, cat.n_morphisms, cat.n_objects
        if len(self.act_obj) != n or any(len(row) != o for row in self.act_obj):
            raise StructuralError("g-category: object action table must be |G|×|Obj|")
        if len(self.act_mor) != n or any(len(row) != m for row in self.act_mor):
            raise StructuralError("g-category: morphism action table must be |G|×|Mor|")
        if len(self.psi) != n or any(len(p) != o or any(len(row) != o for row in p)
                                     for p in self.psi):
            raise StructuralError("g-category: psi table must be |G|×|Obj|×|Obj|")
        if len(self.phi) != n or any(len(p) != n or any(len(row) != o for row in p)
                                     for p in self.phi):
            raise StructuralError("g-category: phi table must be |G|×|G|×|Obj|")

    def on_obj(self, g: int, x: int) -> int:
        return self.act_obj[g][x]

    def on_mor(self, g: int, m: int) -> int:
        return self.act_mor[g][m]

    def functor(self, g: int) -> MonoidalFunctor:
        """The endofunctor g_* with its monoidal structure (always unital here)."""
        return MonoidalFunctor(self.cat, self.cat, self.act_obj[g], self.act_mor[g],
                               self.psi[g], self.cat.identity[self.cat.unit])

    def is_strict(self) -> bool:
        c = self.cat
        ident = c.identity
        return (all(self.psi[g][x][y] == ident[c.src[self.psi[g][x][y]]]
                    and c.src[self.psi[g][x][y]] == c.tgt[self.psi[g][x][y]]
                    for g in self.group.elements
                    for x in range(c.n_objects) for y in range(c.n_objects))
                and all(self.phi[g][h][x] == ident[c.src[self.phi[g][h][x]]]
                        and c.src[self.phi[g][h][x]] == c.tgt[self.phi[g][h][x]]
                        for g in self.group.elements for h in self.group.elements
                        for x in range(c.n_objects)))

    def validate(self, check_base: bool = True) -> Report:
        r = Report()
        c, grp = self.cat, self.group
        if check_base:
            base = c.validate()
            r.merge(base, "base.")
            if not base.ok:
                return r
        e = grp.identity
        ident = c.identity

        # structural typing of the tables
        for g in grp.elements:
            for x in range(c.n_objects):
                if not (0 <= self.act_obj[g][x] < c.n_objects):
                    r.fail("gcat.structure", (g, x), "object action out of range")
                    return r
            for m in range(c.n_morphisms):
                fm = self.act_mor[g][m]
                if not (0 <= fm < c.n_morphisms):
                    r.fail("gcat.structure", (g, m), "morphism action out of range")
                    return r
                r.record("gcat.action_typing",
                         c.src[fm] == self.act_obj[g][c.src[m]]
                         and c.tgt[fm] == self.act_obj[g][c.tgt[m]],
                         (g, m), "g_*(f) has wrong endpoints")

        # unital normalization: g_*(1)=1, psi unital, e_*=Id, phi(e,g)=phi(g,e)=Id
        for g in grp.elements:
            r.record("gcat.unital", self.act_obj[g][c.unit] == c.unit, (g,),
                     "g_*(1) != 1")
            for x in range(c.n_objects):
                gx = self.act_obj[g][x]
                r.record("gcat.unital",
                         self.psi[g][x][c.unit] == ident[gx]
                         and self.psi[g][c.unit][x] == ident[gx],
                         (g, x), "psi^g(X,1) or psi^g(1,X) is not the identity")
        r.record("gcat.unital",
                 self.act_obj[e] == tuple(range(c.n_objects))
                 and self.act_mor[e] == tuple(range(c.n_morphisms)), (e,),
                 "e_* is not the identity functor")
        for g in grp.elements:
            for x in range(c.n_objects):
                gx = self.act_obj[g][x]
                r.record("gcat.unital",
                         self.phi[e][g][x] == ident[gx] and self.phi[g][e][x] == ident[gx],
                         (g, x), "phi(e,g) or phi(g,e) is not the identity")

        # each g_* is a functor and each psi/phi component is iso
        for g in grp.elements:
            for x in range(c.n_objects):
                r.record("gcat.functor",
                         self.act_mor[g][ident[x]] == ident[self.act_obj[g][x]],
                         (g, x), "g_*(id) != id")
            for (late, early), m in c.comp.items():
                r.record("gcat.functor",
                         self.act_mor[g][m] == c.comp.get(
                             (self.act_mor[g][late], self.act_mor[g][early])),
                         (g, late, early), "g_*(l∘f) != g_*(l)∘g_*(f)")
            for x in range(c.n_objects):
                for y in range(c.n_objects):
                    m = self.psi[g][x][y]
                    r.record("gcat.psi_typing",
                             c.src[m] == self.act_obj[g][c.obj_tensor[x][y]]
                             and c.tgt[m] == c.obj_tensor[self.act_obj[g][x]][self.act_obj[g][y]]
                             and c.is_iso(m),
                             (g, x, y), "psi^g(X,Y) is not an iso g_*(X⊗Y)->g_*(X)⊗g_*(Y)")
        for g in grp.elements:
            for h in grp.elements:
                gh = grp.mul(g, h)
                for x in range(c.n_objects):
                    m = self.phi[g][h][x]
                    r.record("gcat.phi_typing",
                             c.src[m] == self.act_obj[gh][x]
                             and c.tgt[m] == self.act_obj[g][self.act_obj[h][x]]
                             and c.is_iso(m),
                             (g, h, x), "phi(g,h)_X is not an iso (gh)_*(X)->g_*h_*(X)")
        if not r.ok:
            return r

        # naturality sweeps
        for g in grp.elements:
            for m in range(c.n_morphisms):
                x, y = c.src[m], c.tgt[m]
                for l in range(c.n_morphisms):
                    xl, yl = c.src[l], c.tgt[l]
                    lhs = c.compose(self.psi[g][y][yl], self.act_mor[g][c.mor_tensor[m][l]])
                    rhs = c.compose(c.mor_tensor[self.act_mor[g][m]][self.act_mor[g][l]],
                                    self.psi[g][x][xl])
                    r.record("gcat.psi_natural", lhs == rhs, (g, m, l),
                             "psi^g not natural")
        for g in grp.elements:
            for h in grp.elements:
                gh = grp.mul(g, h)
                for m in range(c.n_morphisms):
                    lhs = c.compose(self.phi[g][h][c.tgt[m]], self.act_mor[gh][m])
                    rhs = c.compose(self.act_mor[g][self.act_mor[h][m]], self.phi[g][h][c.src[m]])
                    r.record("gcat.phi_natural", lhs == rhs, (g, h, m),
                             "phi(g,h) not natural")

        # action associativity square: phi(g,h)_{k_*(X)} ∘ phi(gh,k)_X
        #                            = g_*(phi(h,k)_X) ∘ phi(g,hk)_X
        for g in grp.elements:
            for h in grp.elements:
                gh = grp.mul(g, h)
                for k in grp.elements:
                    hk = grp.mul(h, k)
                    for x in range(c.n_objects):
                        kx = self.act_obj[k][x]
                        lhs = c.compose(self.phi[g][h][kx], self.phi[gh][k][x])
                        rhs = c.compose(self.act_mor[g][self.phi[h][k][x]], self.phi[g][hk][x])
                        r.record("gcat.action_assoc", lhs == rhs, (g, h, k, x),
                                 "phi(gh,k) square fails")

        # monoidality of each g_*: (psi^g(X,Y)⊗id)∘psi^g(X⊗Y,Z) = (id⊗psi^g(Y,Z))∘psi^g(X,Y⊗Z)
        for g in grp.elements:
            for x in range(c.n_objects):
                gx = self.act_obj[g][x]
                for y in range(c.n_objects):
                    xy = c.obj_tensor[x][y]
                    for z in range(c.n_objects):
                        yz = c.obj_tensor[y][z]
                        gz = self.act_obj[g][z]
                        lhs = c.compose(c.mor_tensor[self.psi[g][x][y]][ident[gz]],
                                        self.psi[g][xy][z])
                        rhs = c.compose(c.mor_tensor[ident[gx]][self.psi[g][y][z]],
                                        self.psi[g][x][yz])
                        r.record("gcat.functor_monoidal", lhs == rhs, (g, x, y, z),
                                 "psi^g(X,Y⊗Z) square fails")

        # compatibility of psi and phi:
        # (phi(g,h)_X ⊗ phi(g,h)_Y) ∘ psi^{gh}(X,Y)
        #   = psi^g(h_*X, h_*Y) ∘ g_*(psi^h(X,Y)) ∘ phi(g,h)_{X⊗Y}
        for g in grp.elements:
            for h in grp.elements:
                gh = grp.mul(g, h)
                for x in range(c.n_objects):
                    hx = self.act_obj[h][x]
                    for y in range(c.n_objects):
                        hy = self.act_obj[h][y]
                        xy = c.obj_tensor[x][y]
                        lhs = c.compose(c.mor_tensor[self.phi[g][h][x]][self.phi[g][h][y]],
                                        self.psi[gh][x][y])
                        rhs = c.compose_path(self.phi[g][h][xy],
                                             self.act_mor[g][self.psi[h][x][y]],
                                             self.psi[g][hx][hy])
                        r.record("gcat.psi_phi_compat", lhs == rhs, (g, h, x, y),
                                 "psi/phi compatibility square fails")
        return r


def validate_monoidal_g_category(gc: MonoidalGCategory, check_base: bool = True) -> Report:
    return gc.validate(check_base=check_base)


def trivial_g_action(cat: StrictMonoidalCategory, group: FiniteGroup) -> MonoidalGCategory:
    """Every element acts as the identity functor, all isos identities."""
    n, o = group.order, cat.n_objects
    act_obj = [list(range(o))] * n
    act_mor = [list(range(cat.n_morphisms))] * n
    psi = [[[cat.identity[cat.obj_tensor[x][y]] for y in range(o)] for x in range(o)]] * n
    phi = [[[cat.identity[x] for x in range(o)]] * n] * n
    return MonoidalGCategory(cat, group, act_obj, act_mor, psi, phi)


# ----------------------------------------------------------------------------
# categorical groups C(H, P, ∂)


class CategoricalGroup(StrictMonoidalCategory):
    """The strict categorical group built from a crossed module.

    Objects are the elements of P; a morphism ``(h, g)`` runs ``g -> ∂(h)g``.
    Composition of ``(h, g): g -> ∂(h)g`` followed by ``(h', ∂(h)g)`` is
    ``(h'h, g)``; the tensor product is ``(h,g)⊗(h',g') = (h·^g h', g g')``.
    """

    def __init__(self, cm: CrossedModule, legacy_composition: bool = False):
        self.xmod = cm
        h, p, d = cm.h, cm.p, cm.boundary
        pairs = [(x, g) for x in h.elements for g in p.elements]
        index = {pair: i for i, pair in enumerate(pairs)}
        self.mor_pairs = tuple(pairs)
        self.mor_index = index
        src = [g for (x, g) in pairs]
        tgt = [p.mul(d(x), g) for (x, g) in pairs]
        identity = [index[(h.identity, g)] for g in p.elements]
        comp = {}
        for i, (x1, g1) in enumerate(pairs):
            t1 = p.mul(d(x1), g1)
            for x2 in h.elements:
                j = index[(x2, t1)]
                if legacy_composition:
                    comp[(j, i)] = index[(h.mul(x1, x2), g1)]
                else:
                    comp[(j, i)] = index[(h.mul(x2, x1), g1)]
        obj_tensor = [[p.mul(g1, g2) for g2 in p.elements] for g1 in p.elements]
        mor_tensor = [[index[(h.mul(x1, cm.act(g1, x2)), p.mul(g1, g2))]
                       for (x2, g2) in pairs] for (x1, g1) in pairs]
        super().__init__(p.order, src, tgt, identity, comp, p.identity,
                         obj_tensor, mor_tensor)

    def mor(self, x: int, g: int) -> int:
        """Morphism id of the pair (h-element, source object)."""
        return self.mor_index[(x, g)]

    def pair(self, m: int) -> tuple:
        return self.mor_pairs[m]


def categorical_group(cm: CrossedModule, legacy_composition: bool = False) -> CategoricalGroup:
    return CategoricalGroup(cm, legacy_composition=legacy_composition)


def induced_g_action(wa: WeakGAction, cat: CategoricalGroup = None) -> MonoidalGCategory:
    """The monoidal G-category structure a weak action puts on C(H,P,∂).

    The functors are strict (all psi identities); the composition isos are
    ``phi(x,y)_g = (θ_{x,y}(g), φ_{xy}(g))``.
    """
    if cat is None:
        cat = CategoricalGroup(wa.target)
    elif cat.xmod != wa.target:
        raise StructuralError("induced action: category built from a different crossed module")
    grp = wa.group
    cm = wa.target
    p = cm.p
    act_obj = [[wa.phi(x)(g) for g in p.elements] for x in grp.elements]
    act_mor = [[cat.mor(wa.alpha(x)(hh), wa.phi(x)(g)) for (hh, g) in cat.mor_pairs]
               for x in grp.elements]
    psi = [[[cat.identity[cat.obj_tensor[act_obj[x][a]][act_obj[x][b]]]
             for b in p.elements] for a in p.elements] for x in grp.elements]
    phi = [[[cat.mor(wa.theta(x, y)(g), wa.phi(grp.mul(x, y))(g)) for g in p.elements]
            for y in grp.elements] for x in grp.elements]
    return MonoidalGCategory(cat, grp, act_obj, act_mor, psi, phi)


# ----------------------------------------------------------------------------
# G-functors and G-natural transformations


class GFunctor:
    """A monoidal functor between G-categories together with the isos
    ``gamma[g][x] : g_*(F(X)) -> F(g_*(X))``."""

    def __init__(self, src: MonoidalGCategory, dst: MonoidalGCategory,
                 functor: MonoidalFunctor, gamma):
        if functor.dom is not src.cat or functor.cod is not dst.cat:
            raise StructuralError("g-functor: underlying functor endpoints mismatch")
        if src.group != dst.group:
            raise StructuralError("g-functor: the two categories carry different groups")
        self.src = src
        self.dst = dst
        self.functor = functor
        self.gamma = tuple(tuple(row) for row in gamma)
        n = src.group.order
        if len(self.gamma) != n or any(len(row) != src.cat.n_objects for row in self.gamma):
            raise StructuralError("g-functor: gamma table must be |G|×|Obj(src)|")


def check_g_functor(gf: GFunctor) -> Report:
    r = Report()
    src, dst, f = gf.src, gf.dst, gf.functor
    grp = src.group
    c = dst.cat
    r.merge(f.validate(), "gfun.")
    if not r.ok:
        return r
    for g in grp.elements:
        for x in range(src.cat.n_objects):
            m = gf.gamma[g][x]
            ok = (c.src[m] == dst.act_obj[g][f.obj_map[x]]
                  and c.tgt[m] == f.obj_map[src.act_obj[g][x]]
                  and c.is_iso(m))
            r.record("gfun.gamma_typing", ok, (g, x),
                     "gamma(g)_X is not an iso g_*(F X) -> F(g_* X)")
    if not r.ok:
        return r
    e = grp.identity
    for x in range(src.cat.n_objects):
        r.record("gfun.gamma_unit",
                 gf.gamma[e][x] == c.identity[f.obj_map[x]], (x,),
                 "gamma(e) is not the identity")
    for g in grp.elements:
        for m in range(src.cat.n_morphisms):
            lhs = c.compose(gf.gamma[g][src.cat.tgt[m]], dst.act_mor[g][f.mor_map[m]])
            rhs = c.compose(f.mor_map[src.act_mor[g][m]], gf.gamma[g][src.cat.src[m]])
            r.record("gfun.gamma_natural", lhs == rhs, (g, m),
                     "gamma(g) not natural")
    # coherence square:
    # F(phi^src(g,h)_X) ∘ gamma(gh)_X = gamma(g)_{h_*X} ∘ g_*(gamma(h)_X) ∘ phi^dst(g,h)_{F X}
    for g in grp.elements:
        for h in grp.elements:
            gh = grp.mul(g, h)
            for x in range(src.cat.n_objects):
                hx = src.act_obj[h][x]
                lhs = c.compose(f.mor_map[src.phi[g][h][x]], gf.gamma[gh][x])
                rhs = c.compose_path(dst.phi[g][h][f.obj_map[x]],
                                     dst.act_mor[g][gf.gamma[h][x]],
                                     gf.gamma[g][hx])
                r.record("gfun.coherence", lhs == rhs, (g, h, x),
                         "G-functor square fails")
    # monoidality of each gamma(g): with composite structures this reads
    # F2(g_*X, g_*Y) ∘ F(psi^g(X,Y)) ∘ gamma(g)_{X⊗Y}
    #   = (gamma(g)_X ⊗ gamma(g)_Y) ∘ psi^g(F X, F Y) ∘ g_*(F2(X,Y))
    for g in grp.elements:
        for x in range(src.cat.n_objects):
            for y in range(src.cat.n_objects):
                xy = src.cat.obj_tensor[x][y]
                gx, gy = src.act_obj[g][x], src.act_obj[g][y]
                lhs = c.compose_path(gf.gamma[g][xy],
                                     f.mor_map[src.psi[g][x][y]],
                                     f.f2[gx][gy])
                rhs = c.compose_path(dst.act_mor[g][f.f2[x][y]],
                                     dst.psi[g][f.obj_map[x]][f.obj_map[y]],
                                     c.mor_tensor[gf.gamma[g][x]][gf.gamma[g][y]])
                r.record("gfun.gamma_monoidal", lhs == rhs, (g, x, y),
                         "gamma(g) not monoidal")
        lhs = c.compose(f.f0, gf.gamma[g][src.cat.unit])
        rhs = dst.act_mor[g][f.f0]
        r.record("gfun.gamma_monoidal_unit", lhs == rhs, (g,),
                 "gamma(g) unit condition fails")
    return r


class GNatTransf:
    """A monoidal natural transformation between parallel G-functors."""

    def __init__(self, src: GFunctor, dst: GFunctor, components):
        if src.src is not dst.src or src.dst is not dst.dst:
            raise StructuralError("g-nat-transf: functors are not parallel")
        self.src = src
        self.dst = dst
        self.components = tuple(components)
        if len(self.components) != src.src.cat.n_objects:
            raise StructuralError("g-nat-transf: one component per object required")


def check_g_nat_transf(t: GNatTransf) -> Report:
    from .cat import MonoidalNatIso
    r = Report()
    fg, lg = t.src, t.dst
    r.merge(MonoidalNatIso(fg.functor, lg.functor, t.components).validate(), "gnat.")
    if not r.ok:
        return r
    grp = fg.src.group
    c = fg.dst.cat
    # chi(g)_X ∘ g_*(phi_X) = phi_{g_*X} ∘ eta(g)_X
    for g in grp.elements:
        for x in range(fg.src.cat.n_objects):
            gx = fg.src.act_obj[g][x]
            lhs = c.compose(lg.gamma[g][x], fg.dst.act_mor[g][t.components[x]])
            rhs = c.compose(t.components[gx], fg.gamma[g][x])
            r.record("gnat.square", lhs == rhs, (g, x),
                     "G-naturality square fails")
    return r
