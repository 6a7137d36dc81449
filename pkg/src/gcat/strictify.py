"""Strictification of a monoidal G-category.

Objects of the strictified category are pairs ``(L, eta)``: a family of
objects ``L_g`` indexed by the group together with transition isomorphisms
``eta_{g,h} : g_*(L_h) -> L_{gh}`` satisfying a cocycle condition.  The
group then acts strictly by re-indexing, and projecting at the identity
slice is an equivalence back to the original category.
"""

from __future__ import annotations

from .cat import MonoidalFunctor, StrictMonoidalCategory
from .gaction import GFunctor, MonoidalGCategory
from .report import CapacityError, Report, StructuralError


class GObject:
    """An object of the strictification: per-g components plus transition isos.

    ``components[g]`` is an object id of the parent category and
    ``transitions[g][h]`` a morphism id ``g_*(L_h) -> L_{gh}``.
    """

    __slots__ = ("parent", "components", "transitions")

    def __init__(self, parent: MonoidalGCategory, components, transitions):
        self.parent = parent
        self.components = tuple(components)
        self.transitions = tuple(tuple(row) for row in transitions)
        n = parent.group.order
        if len(self.components) != n:
            raise StructuralError("g-object: one component per group element required")
        if len(self.transitions) != n or any(len(row) != n for row in self.transitions):
            raise StructuralError("g-object: transition table must be |G|×|G|")

    def component(self, g: int) -> int:
        return self.components[g]

    def transition(self, g: int, h: int) -> int:
        return self.transitions[g][h]

    def validate(self) -> Report:
        r = Report()
        par = self.parent
        c, grp = par.cat, par.group
        e = grp.identity
        for g in grp.elements:
            for h in grp.elements:
                m = self.transitions[g][h]
                ok = (c.src[m] == par.act_obj[g][self.components[h]]
                      and c.tgt[m] == self.components[grp.mul(g, h)]
                      and c.is_iso(m))
                r.record("gobj.typing", ok, (g, h),
                         "transition is not an iso g_*(L_h) -> L_{gh}")
        if not r.ok:
            return r
        for g in grp.elements:
            r.record("gobj.unit_slice",
                     self.transitions[e][g] == c.identity[self.components[g]], (g,),
                     "eta_{e,g} != id")
        # cocycle: eta_{gh,k} = eta_{g,hk} ∘ g_*(eta_{h,k}) ∘ phi(g,h)_{L_k}
        for g in grp.elements:
            for h in grp.elements:
                gh = grp.mul(g, h)
                for k in grp.elements:
                    hk = grp.mul(h, k)
                    lhs = self.transitions[gh][k]
                    rhs = c.compose_path(par.phi[g][h][self.components[k]],
                                         par.act_mor[g][self.transitions[h][k]],
                                         self.transitions[g][hk])
                    r.record("gobj.cocycle", lhs == rhs, (g, h, k),
                             "transition cocycle fails")
        return r

    def _key(self):
        return (self.components, self.transitions)

    def __eq__(self, other):
        return (isinstance(other, GObject) and self.parent is other.parent
                and self._key() == other._key())

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"GObject(L={self.components})"


class GMorphism:
    """A morphism of the strictification: a per-g family intertwining transitions."""

    __slots__ = ("src", "dst", "components")

    def __init__(self, src: GObject, dst: GObject, components):
        if src.parent is not dst.parent:
            raise StructuralError("g-morphism: endpoints live over different categories")
        self.src = src
        self.dst = dst
        self.components = tuple(components)
        if len(self.components) != src.parent.group.order:
            raise StructuralError("g-morphism: one component per group element required")

    def component(self, g: int) -> int:
        return self.components[g]

    def validate(self) -> Report:
        r = Report()
        par = self.src.parent
        c, grp = par.cat, par.group
        for g in grp.elements:
            m = self.components[g]
            r.record("gmor.typing",
                     c.src[m] == self.src.components[g] and c.tgt[m] == self.dst.components[g],
                     (g,), "component is not L_g -> T_g")
        if not r.ok:
            return r
        # f_{gh} ∘ eta_{g,h} = chi_{g,h} ∘ g_*(f_h)
        for g in grp.elements:
            for h in grp.elements:
                gh = grp.mul(g, h)
                lhs = c.compose(self.components[gh], self.src.transitions[g][h])
                rhs = c.compose(self.dst.transitions[g][h], par.act_mor[g][self.components[h]])
                r.record("gmor.square", lhs == rhs, (g, h),
                         "intertwining square fails")
        return r

    def _key(self):
        return (self.src._key(), self.dst._key(), self.components)

    def __eq__(self, other):
        return (isinstance(other, GMorphism) and self.src.parent is other.src.parent
                and self._key() == other._key())

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"GMorphism({self.components})"


# ----------------------------------------------------------------------------
# the functor F: C -> C(G) and the projection U_e


def embed(parent: MonoidalGCategory, x: int) -> GObject:
    """F on objects: components ``g_*(x)`` with transitions ``phi(g,h)_x^{-1}``."""
    grp, c = parent.group, parent.cat
    components = [parent.act_obj[g][x] for g in grp.elements]
    transitions = [[c.inverse(parent.phi[g][h][x]) for h in grp.elements]
                   for g in grp.elements]
    return GObject(parent, components, transitions)


def embed_morphism(parent: MonoidalGCategory, m: int) -> GMorphism:
    """F on morphisms: the family ``{g_*(m)}``."""
    src = embed(parent, parent.cat.src[m])
    dst = embed(parent, parent.cat.tgt[m])
    return GMorphism(src, dst, [parent.act_mor[g][m] for g in parent.group.elements])


def project(a: GObject) -> int:
    return a.components[a.parent.group.identity]

def project_morphism(f: GMorphism) -> int:
    return f.components[f.src.parent.group.identity]


# ----------------------------------------------------------------------------
# tensor, unit, action


def unit_object(parent: MonoidalGCategory) -> GObject:
    c, grp = parent.cat, parent.group
    n = grp.order
    return GObject(parent, [c.unit] * n, [[c.identity[c.unit]] * n] * n)


def tensor_objects(a: GObject, b: GObject) -> GObject:
    """(L,eta)⊗(L',eta'): components tensored, transitions
    ``(eta_{g,h} ⊗ eta'_{g,h}) ∘ psi^g(L_h, L'_h)``."""
    par = a.parent
    if par is not b.parent:
        raise StructuralError("tensor: objects live over different categories")
    c, grp = par.cat, par.group
    components = [c.obj_tensor[a.components[g]][b.components[g]] for g in grp.elements]
    transitions = [[c.compose(c.mor_tensor[a.transitions[g][h]][b.transitions[g][h]],
                              par.psi[g][a.components[h]][b.components[h]])
                    for h in grp.elements] for g in grp.elements]
    return GObject(par, components, transitions)


def tensor_morphisms(f: GMorphism, l: GMorphism) -> GMorphism:
    par = f.src.parent
    c = par.cat
    return GMorphism(tensor_objects(f.src, l.src), tensor_objects(f.dst, l.dst),
                     [c.mor_tensor[f.components[g]][l.components[g]]
                      for g in par.group.elements])


def act(g: int, a: GObject) -> GObject:
    """The strict action: ``(gL)_h = L_{hg}`` and ``(g eta)_{x,y} = eta_{x,yg}``."""
    grp = a.parent.group
    components = [a.components[grp.mul(h, g)] for h in grp.elements]
    transitions = [[a.transitions[x][grp.mul(y, g)] for y in grp.elements]
                   for x in grp.elements]
    return GObject(a.parent, components, transitions)


def act_morphism(g: int, f: GMorphism) -> GMorphism:
    grp = f.src.parent.group
    return GMorphism(act(g, f.src), act(g, f.dst),
                     [f.components[grp.mul(h, g)] for h in grp.elements])


def identity_gmorphism(a: GObject) -> GMorphism:
    c = a.parent.cat
    return GMorphism(a, a, [c.identity[x] for x in a.components])


def compose_gmorphisms(late: GMorphism, early: GMorphism) -> GMorphism:
    if early.dst != late.src:
        raise StructuralError("compose: morphisms not composable")
    c = early.src.parent.cat
    return GMorphism(early.src, late.dst,
                     [c.compose(late.components[g], early.components[g])
                      for g in early.src.parent.group.elements])


def invert_gmorphism(f: GMorphism):
    c = f.src.parent.cat
    comps = [c.inverse(m) for m in f.components]
    if any(m is None for m in comps):
        return None
    return GMorphism(f.dst, f.src, comps)


# ----------------------------------------------------------------------------
# enumeration


def derive_transitions(parent: MonoidalGCategory, components, e_slice):
    """Extend the slice ``eta_{g,e}`` to a full transition table.

    Uses the k=e instance of the cocycle:
    ``eta_{g,h} = eta_{gh,e} ∘ (g_*(eta_{h,e}) ∘ phi(g,h)_{L_e})^{-1}``.
    Candidates produced this way still go through the full validator; this
    derivation alone is necessary but re-checked, never assumed sufficient.
    """
    c, grp = parent.cat, parent.group
    e = grp.identity
    le = components[e]
    table = []
    for g in grp.elements:
        row = []
        for h in grp.elements:
            gh = grp.mul(g, h)
            leg = c.compose(parent.act_mor[g][e_slice[h]], parent.phi[g][h][le])
            inv = c.inverse(leg)
            if inv is None:
                return None
            row.append(c.compose(e_slice[gh], inv))
        table.append(row)
    return table


def enumerate_objects(parent: MonoidalGCategory, bound: int = 4096) -> list:
    """All valid GObjects, generated from free choices of ``L_e`` and the
    ``eta_{g,e}`` slice, then filtered by the full validator."""
    c, grp = parent.cat, parent.group
    e = grp.identity
    others = [g for g in grp.elements if g != e]
    out = []
    for le in range(c.n_objects):
        # per non-identity g: any target L_g with an iso g_*(L_e) -> L_g
        slices = [[] for _ in grp.elements]
        slices[e] = [(le, c.identity[le])]
        for g in others:
            gle = parent.act_obj[g][le]
            choices = []
            for lg in range(c.n_objects):
                for m in c.hom(gle, lg):
                    if c.is_iso(m):
                        choices.append((lg, m))
            slices[g] = choices

        def rec(i, comp, e_slice):
            if i == len(grp.elements):
                table = derive_transitions(parent, comp, e_slice)
                if table is None:
                    return
                cand = GObject(parent, comp, table)
                if cand.validate().ok:
                    out.append(cand)
                    if len(out) > bound:
                        raise CapacityError(f"strictification enumeration bound {bound} exceeded")
                return
            g = list(grp.elements)[i]
            for (lg, m) in slices[g]:
                comp[g] = lg
                e_slice[g] = m
                rec(i + 1, comp, e_slice)

        rec(0, [None] * grp.order, [None] * grp.order)
    return out


def enumerate_morphisms(a: GObject, b: GObject) -> list:
    """All GMorphisms a -> b, derived from the e-component
    ``f_g = chi_{g,e} ∘ g_*(f_e) ∘ eta_{g,e}^{-1}`` and filtered by the validator."""
    par = a.parent
    c, grp = par.cat, par.group
    e = grp.identity
    out = []
    for fe in c.hom(a.components[e], b.components[e]):
        comps = []
        ok = True
        for g in grp.elements:
            inv = c.inverse(a.transitions[g][e])
            if inv is None:
                ok = False
                break
            comps.append(c.compose_path(inv, par.act_mor[g][fe], b.transitions[g][e]))
        if not ok:
            continue
        cand = GMorphism(a, b, comps)
        if cand.validate().ok:
            out.append(cand)
    return out


# ----------------------------------------------------------------------------
# materialization of C(G) as a monoidal G-category


class Strictification:
    """The strictified category on a bounded enumeration of GObjects.

    ``objects`` and ``morphisms`` fix the id order; ``gcat`` materializes the
    dense strict monoidal G-category on first use (the morphism tensor table
    is quadratic in the morphism count, so large instances should stick to the
    object/morphism level).
    """

    def __init__(self, parent: MonoidalGCategory, bound: int = 4096,
                 morphism_bound: int = 4096):
        self.parent = parent
        self.objects = enumerate_objects(parent, bound=bound)
        self.obj_index = {o: i for i, o in enumerate(self.objects)}
        if len(self.obj_index) != len(self.objects):
            raise StructuralError("strictification: duplicate enumerated objects")
        mors = []
        for a in self.objects:
            for b in self.objects:
                mors.extend(enumerate_morphisms(a, b))
                if len(mors) > morphism_bound:
                    raise CapacityError(
                        f"strictification morphism bound {morphism_bound} exceeded")
        self.morphisms = mors
        self.mor_index = {f: i for i, f in enumerate(mors)}
        self._gcat = None

    @property
    def gcat(self) -> MonoidalGCategory:
        if self._gcat is None:
            self._gcat = self._materialize()
        return self._gcat

    def _materialize(self) -> MonoidalGCategory:
        par = self.parent
        grp = par.group
        objs, mors = self.objects, self.morphisms
        oi, mi = self.obj_index, self.mor_index
        src = [oi[f.src] for f in mors]
        tgt = [oi[f.dst] for f in mors]
        identity = [mi[identity_gmorphism(a)] for a in objs]
        comp = {}
        for i, f in enumerate(mors):
            for j, l in enumerate(mors):
                if f.dst == l.src:
                    comp[(j, i)] = mi[compose_gmorphisms(l, f)]
        obj_tensor = [[oi[tensor_objects(a, b)] for b in objs] for a in objs]
        mor_tensor = [[mi[tensor_morphisms(f, l)] for l in mors] for f in mors]
        cat = StrictMonoidalCategory(len(objs), src, tgt, identity, comp,
                                     oi[unit_object(par)], obj_tensor, mor_tensor)
        act_obj = [[oi[act(g, a)] for a in objs] for g in grp.elements]
        act_mor = [[mi[act_morphism(g, f)] for f in mors] for g in grp.elements]
        ident = cat.identity
        psi = [[[ident[cat.obj_tensor[act_obj[g][x]][act_obj[g][y]]]
                 for y in range(len(objs))] for x in range(len(objs))]
               for g in grp.elements]
        phi = [[[ident[act_obj[grp.mul(g, h)][x]] for x in range(len(objs))]
                for h in grp.elements] for g in grp.elements]
        return MonoidalGCategory(cat, grp, act_obj, act_mor, psi, phi)

    def u_e_functor(self) -> MonoidalFunctor:
        """The strict projection U_e: C(G) -> C at the identity slice."""
        par = self.parent
        c = par.cat
        obj_map = [project(a) for a in self.objects]
        mor_map = [project_morphism(f) for f in self.morphisms]
        f2 = [[c.identity[c.obj_tensor[obj_map[x]][obj_map[y]]]
               for y in range(len(self.objects))] for x in range(len(self.objects))]
        return MonoidalFunctor(self.gcat.cat, c, obj_map, mor_map, f2,
                               c.identity[c.unit])

    def equivalence_data(self) -> GFunctor:
        """(U_e, gamma) with ``gamma(g)_{(L,eta)} = eta_{g,e}``."""
        grp = self.parent.group
        e = grp.identity
        gamma = [[a.transitions[g][e] for a in self.objects] for g in grp.elements]
        return GFunctor(self.gcat, self.parent, self.u_e_functor(), gamma)

    def unit_gmorphism(self, a: GObject) -> GMorphism:
        """The component at ``a`` of the adjunction counit F∘U_e -> Id:
        the family ``{eta_{g,e}}: embed(L_e) -> (L, eta)``."""
        e = self.parent.group.identity
        return GMorphism(embed(self.parent, a.components[e]), a,
                         [a.transitions[g][e] for g in self.parent.group.elements])


def strictify(parent: MonoidalGCategory, bound: int = 4096,
              morphism_bound: int = 4096) -> Strictification:
    return Strictification(parent, bound=bound, morphism_bound=morphism_bound)


def strictify_g_functor(gf: GFunctor, src_strict: Strictification,
                        dst_strict: Strictification) -> GFunctor:
    """Lift a G-functor to the strictifications.

    ``(L, eta)`` maps to ``(F(L), F(eta)∘gamma)``; morphisms map component-wise.
    The structure isos of the lift are the families ``{F2(L_g, L'_g)}`` and the
    gamma of the lifted functor is the identity (the two composites agree on
    the nose).
    """
    par_src, par_dst = src_strict.parent, dst_strict.parent
    if gf.src is not par_src or gf.dst is not par_dst:
        raise StructuralError("strictify_g_functor: functor does not match the strictifications")
    f = gf.functor
    grp = par_src.group
    c = par_dst.cat

    def lift_obj(a: GObject) -> GObject:
        comps = [f.obj_map[a.components[g]] for g in grp.elements]
        trans = [[c.compose(f.mor_map[a.transitions[g][h]], gf.gamma[g][a.components[h]])
                  for h in grp.elements] for g in grp.elements]
        return GObject(par_dst, comps, trans)

    obj_map = []
    for a in src_strict.objects:
        la = lift_obj(a)
        if la not in dst_strict.obj_index:
            raise StructuralError("strictify_g_functor: lifted object outside the enumeration")
        obj_map.append(dst_strict.obj_index[la])
    mor_map = []
    for m in src_strict.morphisms:
        lm = GMorphism(lift_obj(m.src), lift_obj(m.dst),
                       [f.mor_map[x] for x in m.components])
        if lm not in dst_strict.mor_index:
            raise StructuralError("strictify_g_functor: lifted morphism outside the enumeration")
        mor_map.append(dst_strict.mor_index[lm])
    f2 = []
    for i, a in enumerate(src_strict.objects):
        row = []
        for j, b in enumerate(src_strict.objects):
            ab = tensor_objects(a, b)
            comps = [f.f2[a.components[g]][b.components[g]] for g in grp.elements]
            m2 = GMorphism(lift_obj(ab),
                           tensor_objects(lift_obj(a), lift_obj(b)), comps)
            row.append(dst_strict.mor_index[m2])
        f2.append(row)
    # F0 of the lift: the family {g_*(F0)}; identity when F is unital.
    lifted_unit = lift_obj(unit_object(par_src))
    target_unit = unit_object(par_dst)
    if lifted_unit == target_unit:
        f0_m = dst_strict.mor_index[identity_gmorphism(target_unit)]
    else:
        cand = GMorphism(lifted_unit, target_unit,
                         [par_dst.act_mor[g][f.f0] for g in grp.elements])
        if not cand.validate().ok or cand not in dst_strict.mor_index:
            raise StructuralError("strictify_g_functor: no valid unit comparison morphism")
        f0_m = dst_strict.mor_index[cand]
    lifted = MonoidalFunctor(src_strict.gcat.cat, dst_strict.gcat.cat,
                             obj_map, mor_map, f2, f0_m)
    gamma = [[dst_strict.gcat.cat.identity[
        dst_strict.gcat.act_obj[g][obj_map[x]]]
        for x in range(len(src_strict.objects))] for g in grp.elements]
    return GFunctor(src_strict.gcat, dst_strict.gcat, lifted, gamma)
