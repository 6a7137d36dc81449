"""Gradings, crossed structures and braidings.

A braiding on a graded G-category sends ``X⊗Y`` to ``g_*(Y)⊗X`` where g is the
degree of X; on crossed modules the same data is a bracket ``P×P -> H``.  The
bracket axioms are stated here in the product order matching the type-correct
composition convention of the categorical groups, and the two validators are
kept in exact agreement (see the checker-equivalence tests).
"""

from __future__ import annotations

from itertools import product

from .cat import StrictMonoidalCategory
from .gaction import (CategoricalGroup, GFunctor, MonoidalGCategory,
                      categorical_group, induced_g_action)
from .groups import FiniteGroup, GroupHom
from .report import CapacityError, Report, StructuralError
from .strictify import (GMorphism, Strictification, act, tensor_objects)
from .xmod import WeakGAction


class GGrading:
    """A per-object group degree on (the category underlying) a G-category."""

    def __init__(self, gcat: MonoidalGCategory, group: FiniteGroup, degrees):
        self.gcat = gcat
        self.group = group
        self.degrees = tuple(degrees)
        if group != gcat.group:
            raise StructuralError("grading: degree group must be the acting group")
        if len(self.degrees) != gcat.cat.n_objects:
            raise StructuralError("grading: one degree per object required")
        if any(not (0 <= d < group.order) for d in self.degrees):
            raise StructuralError("grading: degree out of range")

    def degree(self, x: int) -> int:
        return self.degrees[x]

    def validate(self, check_crossed: bool = True) -> Report:
        r = Report()
        c = self.gcat.cat
        grp = self.group
        r.record("grading.unit_degree", self.degrees[c.unit] == grp.identity, (),
                 "degree(1) != e")
        for x in range(c.n_objects):
            for y in range(c.n_objects):
                r.record("grading.tensor_degree",
                         self.degrees[c.obj_tensor[x][y]]
                         == grp.mul(self.degrees[x], self.degrees[y]),
                         (x, y), "degree(X⊗Y) != degree(X)·degree(Y)")
        for m in range(c.n_morphisms):
            r.record("grading.hom_degree",
                     self.degrees[c.src[m]] == self.degrees[c.tgt[m]], (m,),
                     "a morphism connects different degrees")
        if check_crossed:
            for g in self.gcat.group.elements:
                for x in range(c.n_objects):
                    r.record("grading.crossed",
                             self.degrees[self.gcat.act_obj[g][x]]
                             == grp.conj(g, self.degrees[x]),
                             (g, x), "degree(g_*(X)) != g·degree(X)·g⁻¹")
        return r


def validate_grading(grading: GGrading, check_crossed: bool = True) -> Report:
    return grading.validate(check_crossed=check_crossed)


class GradingHom:
    """A grading homomorphism ``gr: P -> G`` for a crossed module carrying a
    weak G-action: the boundary image dies and degrees move by conjugation."""

    def __init__(self, weak_action: WeakGAction, gr: GroupHom):
        self.weak_action = weak_action
        self.gr = gr
        cm = weak_action.target
        if gr.dom != cm.p or gr.cod != weak_action.group:
            raise StructuralError("grading hom: gr must map P to the acting group")

    def validate(self) -> Report:
        r = Report()
        r.merge(self.gr.validate(), "grhom.")
        cm = self.weak_action.target
        grp = self.weak_action.group
        for x in cm.h.elements:
            r.record("grhom.kernel",
                     self.gr(cm.boundary(x)) == grp.identity, (x,),
                     "Im(∂) not contained in ker(gr)")
        for g in grp.elements:
            for x in cm.p.elements:
                r.record("grhom.conj",
                         self.gr(self.weak_action.phi(g)(x)) == grp.conj(g, self.gr(x)),
                         (g, x), "gr(φ_x(g)) != x·gr(g)·x⁻¹")
        return r


def validate_grading_hom(gh: GradingHom) -> Report:
    return gh.validate()


def grading_from_hom(gh: GradingHom, gcat: MonoidalGCategory) -> GGrading:
    """Object-level grading on the induced categorical group: degree(p) = gr(p)."""
    cat = gcat.cat
    if not isinstance(cat, CategoricalGroup) or cat.xmod != gh.weak_action.target:
        raise StructuralError("grading_from_hom: category does not match the crossed module")
    return GGrading(gcat, gh.weak_action.group, [gh.gr(x) for x in range(cat.n_objects)])


# ----------------------------------------------------------------------------
# braidings on categories


class CategoryBraiding:
    """Components ``c[x][y] : X⊗Y -> deg(X)_*(Y) ⊗ X`` on a graded G-category."""

    def __init__(self, grading: GGrading, components):
        self.grading = grading
        self.gcat = grading.gcat
        self.components = tuple(tuple(row) for row in components)
        n = self.gcat.cat.n_objects
        if len(self.components) != n or any(len(row) != n for row in self.components):
            raise StructuralError("braiding: component table must be n×n")

    def c(self, x: int, y: int) -> int:
        return self.components[x][y]

    def validate(self) -> Report:
        r = Report()
        gc = self.gcat
        cat = gc.cat
        grp = self.grading.group
        deg = self.grading.degrees
        for x in range(cat.n_objects):
            g = deg[x]
            for y in range(cat.n_objects):
                m = self.components[x][y]
                ok = (cat.src[m] == cat.obj_tensor[x][y]
                      and cat.tgt[m] == cat.obj_tensor[gc.act_obj[g][y]][x]
                      and cat.is_iso(m))
                r.record("braid.typing", ok, (x, y),
                         "c_{X,Y} is not an iso X⊗Y -> g_*(Y)⊗X")
        if not r.ok:
            return r
        # naturality in both arguments
        for u in range(cat.n_morphisms):
            x, x2 = cat.src[u], cat.tgt[u]
            g = deg[x]
            for v in range(cat.n_morphisms):
                y, y2 = cat.src[v], cat.tgt[v]
                lhs = cat.compose(self.components[x2][y2], cat.mor_tensor[u][v])
                rhs = cat.compose(cat.mor_tensor[gc.act_mor[g][v]][u], self.components[x][y])
                r.record("braid.naturality", lhs == rhs, (u, v),
                         "braiding not natural")
        # action compatibility (the conjugation square)
        for g in grp.elements:
            ginv = grp.inv(g)
            for x in range(cat.n_objects):
                h = deg[x]
                ghg = grp.mul(grp.mul(g, h), ginv)
                for z in range(cat.n_objects):
                    hz = gc.act_obj[h][z]
                    gx, gz = gc.act_obj[g][x], gc.act_obj[g][z]
                    lhs = cat.compose(gc.psi[g][hz][x], gc.act_mor[g][self.components[x][z]])
                    inv_phi = cat.inverse(gc.phi[ghg][g][z])
                    rhs = cat.compose_path(
                        gc.psi[g][x][z],
                        self.components[gx][gz],
                        cat.mor_tensor[inv_phi][cat.identity[gx]],
                        cat.mor_tensor[gc.phi[g][h][z]][cat.identity[gx]])
                    r.record("braid.action_compat", lhs == rhs, (g, x, z),
                             "g_*(c_{X,Z}) square fails")
        # splitting the second tensor factor
        for x in range(cat.n_objects):
            g = deg[x]
            for y in range(cat.n_objects):
                gy = gc.act_obj[g][y]
                for z in range(cat.n_objects):
                    yz = cat.obj_tensor[y][z]
                    lhs = cat.compose(cat.mor_tensor[gc.psi[g][y][z]][cat.identity[x]],
                                      self.components[x][yz])
                    rhs = cat.compose(
                        cat.mor_tensor[cat.identity[gy]][self.components[x][z]],
                        cat.mor_tensor[self.components[x][y]][cat.identity[z]])
                    r.record("braid.second_factor", lhs == rhs, (x, y, z),
                             "c_{X,Y⊗Z} square fails")
        # splitting the first tensor factor
        for x in range(cat.n_objects):
            g = deg[x]
            for y in range(cat.n_objects):
                h = deg[y]
                xy = cat.obj_tensor[x][y]
                for z in range(cat.n_objects):
                    hz = gc.act_obj[h][z]
                    lhs = cat.compose(
                        cat.mor_tensor[gc.phi[g][h][z]][cat.identity[xy]],
                        self.components[xy][z])
                    rhs = cat.compose(
                        cat.mor_tensor[self.components[x][hz]][cat.identity[y]],
                        cat.mor_tensor[cat.identity[x]][self.components[y][z]])
                    r.record("braid.first_factor", lhs == rhs, (x, y, z),
                             "c_{X⊗Y,Z} square fails")
        return r

    def strict_identities(self) -> Report:
        """The three identities that hold on the nose in the strict case."""
        r = Report()
        gc = self.gcat
        cat = gc.cat
        deg = self.grading.degrees
        for g in self.grading.group.elements:
            for x in range(cat.n_objects):
                for z in range(cat.n_objects):
                    r.record("braid.strict_action",
                             gc.act_mor[g][self.components[x][z]]
                             == self.components[gc.act_obj[g][x]][gc.act_obj[g][z]],
                             (g, x, z), "g_*(c_{X,Z}) != c_{g_*X, g_*Z}")
        for x in range(cat.n_objects):
            g = deg[x]
            for y in range(cat.n_objects):
                gy = gc.act_obj[g][y]
                for z in range(cat.n_objects):
                    yz = cat.obj_tensor[y][z]
                    rhs = cat.compose(
                        cat.mor_tensor[cat.identity[gy]][self.components[x][z]],
                        cat.mor_tensor[self.components[x][y]][cat.identity[z]])
                    r.record("braid.strict_second", self.components[x][yz] == rhs,
                             (x, y, z), "c_{X,Y⊗Z} != (id⊗c)∘(c⊗id)")
        for x in range(cat.n_objects):
            for y in range(cat.n_objects):
                h = deg[y]
                xy = cat.obj_tensor[x][y]
                for z in range(cat.n_objects):
                    hz = gc.act_obj[h][z]
                    rhs = cat.compose(
                        cat.mor_tensor[self.components[x][hz]][cat.identity[y]],
                        cat.mor_tensor[cat.identity[x]][self.components[y][z]])
                    r.record("braid.strict_first", self.components[xy][z] == rhs,
                             (x, y, z), "c_{X⊗Y,Z} != (c⊗id)∘(id⊗c)")
        return r


def validate_category_braiding(b: CategoryBraiding) -> Report:
    return b.validate()


def braided_functor_report(gf: GFunctor, src_braiding: CategoryBraiding,
                           dst_braiding: CategoryBraiding) -> Report:
    """The compatibility square of a G-functor with braidings on both sides:
    ``F2(g_*Y, X) ∘ F(c_{X,Y}) = (gamma(g)_Y ⊗ id_{F X}) ∘ c_{F X, F Y} ∘ F2(X,Y)``."""
    r = Report()
    src, dst = gf.src, gf.dst
    f = gf.functor
    c = dst.cat
    deg = src_braiding.grading.degrees
    for x in range(src.cat.n_objects):
        g = deg[x]
        r.record("braidfun.degree",
                 dst_braiding.grading.degrees[f.obj_map[x]] == g, (x,),
                 "functor does not preserve degrees")
    if not r.ok:
        return r
    for x in range(src.cat.n_objects):
        g = deg[x]
        for y in range(src.cat.n_objects):
            gy = src.act_obj[g][y]
            lhs = c.compose(f.f2[gy][x], f.mor_map[src_braiding.components[x][y]])
            rhs = c.compose_path(
                f.f2[x][y],
                dst_braiding.components[f.obj_map[x]][f.obj_map[y]],
                c.mor_tensor[gf.gamma[g][y]][c.identity[f.obj_map[x]]])
            r.record("braidfun.square", lhs == rhs, (x, y),
                     "braided-functor square fails")
    return r


# ----------------------------------------------------------------------------
# braidings on crossed modules


class CrossedModuleBraiding:
    """A bracket ``P×P -> H`` braiding a crossed module with weak G-action and
    grading hom.

    The axioms are checked in the product order dictated by the categorical
    composition convention (see induce_braiding); θ's in (d) and (f) are
    evaluated at the second bracket argument.
    """

    def __init__(self, grading: GradingHom, bracket):
        self.grading = grading
        self.weak_action = grading.weak_action
        self.bracket = tuple(tuple(row) for row in bracket)
        cm = self.weak_action.target
        n = cm.p.order
        if len(self.bracket) != n or any(len(row) != n for row in self.bracket):
            raise StructuralError("bracket: table must be |P|×|P|")
        if any(not (0 <= v < cm.h.order) for row in self.bracket for v in row):
            raise StructuralError("bracket: value out of range")

    def validate(self) -> Report:
        r = Report()
        wa = self.weak_action
        cm = wa.target
        h, p, d = cm.h, cm.p, cm.boundary
        gr = self.grading.gr
        grp = wa.group
        br = self.bracket

        def phi(g):
            return wa.phi(g)

        def alpha(g):
            return wa.alpha(g)

        # (a) ∂({x,y})·x·y = φ_{gr(x)}(y)·x
        for x in p.elements:
            fx = phi(gr(x))
            for y in p.elements:
                r.record("xbraid.a",
                         p.prod(d(br[x][y]), x, y) == p.mul(fx(y), x), (x, y),
                         "∂({x,y})xy != φ_{gr(x)}(y)·x")
        # (b) {∂(h)x, y}·h = ^{φ_{gr(x)}(y)}h · {x,y}
        for x in p.elements:
            fx = phi(gr(x))
            for y in p.elements:
                fy = fx(y)
                for hh in h.elements:
                    lhs = h.mul(br[p.mul(d(hh), x)][y], hh)
                    rhs = h.mul(cm.act(fy, hh), br[x][y])
                    r.record("xbraid.b", lhs == rhs, (hh, x, y),
                             "{∂(h)x,y}·h != ^{φ_{gr(x)}(y)}h·{x,y}")
        # (c) {x, ∂(k)y}·^x k = α_{gr(x)}(k)·{x,y}
        for x in p.elements:
            ax = alpha(gr(x))
            for y in p.elements:
                for k in h.elements:
                    lhs = h.mul(br[x][p.mul(d(k), y)], cm.act(x, k))
                    rhs = h.mul(ax(k), br[x][y])
                    r.record("xbraid.c", lhs == rhs, (k, x, y),
                             "{x,∂(k)y}·^x k != α_{gr(x)}(k)·{x,y}")
        # (d) α_g({x,y}) = θ_{g,gr(x)}(y) · θ_{g·gr(x)·g⁻¹, g}(y)⁻¹ · {φ_g(x),φ_g(y)}
        for g in grp.elements:
            fg, ag = phi(g), alpha(g)
            for x in p.elements:
                hx = gr(x)
                ghg = grp.conj(g, hx)
                for y in p.elements:
                    lhs = ag(br[x][y])
                    rhs = h.prod(wa.theta(g, hx)(y),
                                 h.inv(wa.theta(ghg, g)(y)),
                                 br[fg(x)][fg(y)])
                    r.record("xbraid.d", lhs == rhs, (g, x, y),
                             "α_g({x,y}) != θ_{g,gr x}(y)·θ_{g gr(x) g⁻¹,g}(y)⁻¹·{φ_g x, φ_g y}")
        # (e) {x, yz} = ^{φ_{gr(x)}(y)}{x,z} · {x,y}
        for x in p.elements:
            fx = phi(gr(x))
            for y in p.elements:
                fy = fx(y)
                for z in p.elements:
                    lhs = br[x][p.mul(y, z)]
                    rhs = h.mul(cm.act(fy, br[x][z]), br[x][y])
                    r.record("xbraid.e", lhs == rhs, (x, y, z),
                             "{x,yz} != ^{φ_{gr(x)}(y)}{x,z}·{x,y}")
        # (f) θ_{gr(x),gr(y)}(z)·{xy,z} = {x, φ_{gr(y)}(z)} · ^x{y,z}
        for x in p.elements:
            for y in p.elements:
                fy = phi(gr(y))
                th = wa.theta(gr(x), gr(y))
                for z in p.elements:
                    lhs = h.mul(th(z), br[p.mul(x, y)][z])
                    rhs = h.mul(br[x][fy(z)], cm.act(x, br[y][z]))
                    r.record("xbraid.f", lhs == rhs, (x, y, z),
                             "θ_{gr x,gr y}(z)·{xy,z} != {x,φ_{gr(y)}(z)}·^x{y,z}")
        return r

    def __eq__(self, other):
        return (isinstance(other, CrossedModuleBraiding) and self.bracket == other.bracket
                and self.grading is other.grading)

    def __hash__(self):
        return hash(self.bracket)

    def __repr__(self):
        return f"CrossedModuleBraiding({self.bracket})"


def validate_xmod_braiding(b: CrossedModuleBraiding) -> Report:
    return b.validate()


def induce_braiding(b: CrossedModuleBraiding, gcat: MonoidalGCategory = None) -> CategoryBraiding:
    """The braiding ``c_{x,y} = ({x,y}, xy) : xy -> φ_{gr(x)}(y)·x`` on the
    induced G-category of the weak action."""
    if gcat is None:
        gcat = induced_g_action(b.weak_action)
    cat = gcat.cat
    if not isinstance(cat, CategoricalGroup) or cat.xmod != b.weak_action.target:
        raise StructuralError("induce_braiding: category does not match the crossed module")
    grading = grading_from_hom(b.grading, gcat)
    p = b.weak_action.target.p
    components = [[cat.mor(b.bracket[x][y], p.mul(x, y)) for y in p.elements]
                  for x in p.elements]
    return CategoryBraiding(grading, components)


def search_braidings(grading: GradingHom, bound: int = 1 << 20) -> list:
    """All brackets satisfying the braiding axioms, by exhaustive search.

    Candidates are pruned by the forced unit values ``{x,e} = {e,y} = e``;
    the remaining assignments are swept and validated in full.
    """
    wa = grading.weak_action
    cm = wa.target
    p, h = cm.p, cm.h
    free = [(x, y) for x in p.elements for y in p.elements
            if x != p.identity and y != p.identity]
    total = h.order ** len(free)
    if total > bound:
        raise CapacityError(f"bracket search space {total} exceeds bound {bound}")
    out = []
    e = h.identity
    for assignment in product(h.elements, repeat=len(free)):
        table = [[e] * p.order for _ in p.elements]
        for (xy, v) in zip(free, assignment):
            table[xy[0]][xy[1]] = v
        cand = CrossedModuleBraiding(grading, table)
        if cand.validate().ok:
            out.append(cand)
    return out


# ----------------------------------------------------------------------------
# transport across strictification


def transported_grading(b: CategoryBraiding, st: Strictification) -> GGrading:
    """degree(L, eta) = degree(L_e); fixed by the construction, never user data."""
    e = st.parent.group.identity
    return GGrading(st.gcat, b.grading.group,
                    [b.grading.degrees[a.components[e]] for a in st.objects])


def transport_braiding(b: CategoryBraiding, st: Strictification) -> CategoryBraiding:
    """Carry a braiding over to the strictification along the slice equivalence.

    For (L,eta) of degree g and (T,chi), the component at h is

      (chi_{h,g} ⊗ eta_{h,e}) ∘ psi^h(T_g, L_e)
        ∘ h_*((chi_{g,e} ⊗ id_{L_e}) ∘ c_{L_e,T_e})
        ∘ psi^h(L_e, T_e)⁻¹ ∘ (eta_{h,e} ⊗ chi_{h,e})⁻¹.

    Components failing to assemble into GMorphisms indicate invalid input and
    raise StructuralError.
    """
    parent = st.parent
    if b.gcat is not parent:
        raise StructuralError("transport: braiding does not live on the parent category")
    cat = parent.cat
    grp = parent.group
    e = grp.identity
    grading = transported_grading(b, st)
    components = []
    for i, a in enumerate(st.objects):
        g = grading.degrees[i]
        le = a.components[e]
        row = []
        for bobj in st.objects:
            te = bobj.components[e]
            tg = bobj.components[g]
            base = cat.compose(cat.mor_tensor[bobj.transitions[g][e]][cat.identity[le]],
                               b.components[le][te])
            comps = []
            for hh in grp.elements:
                pre = cat.inverse(cat.compose(
                    cat.mor_tensor[a.transitions[hh][e]][bobj.transitions[hh][e]],
                    parent.psi[hh][le][te]))
                post = cat.compose(cat.mor_tensor[bobj.transitions[hh][g]][a.transitions[hh][e]],
                                   parent.psi[hh][tg][le])
                comps.append(cat.compose_path(pre, parent.act_mor[hh][base], post))
            src_ob = tensor_objects(a, bobj)
            dst_ob = tensor_objects(act(g, bobj), a)
            cand = GMorphism(src_ob, dst_ob, comps)
            if not cand.validate().ok:
                raise StructuralError(
                    "transport: component is not a morphism of the strictification "
                    f"(objects {i}, {st.obj_index[bobj]})")
            row.append(st.mor_index[cand])
        components.append(row)
    return CategoryBraiding(grading, components)
