"""Crossed modules, their morphisms/transformations, and weak group actions."""

from __future__ import annotations

from .groups import (AutomorphismAction, FiniteGroup, GroupHom, hom_compose,
                     identity_hom, kernel, subgroup, trivial_action)
from .report import Report, StructuralError


class CrossedModule:
    """Groups ``h``, ``p`` with an action of ``p`` on ``h`` and an equivariant
    boundary ``h -> p`` satisfying the Peiffer identity."""

    def __init__(self, h: FiniteGroup, p: FiniteGroup, boundary: GroupHom,
                 action: AutomorphismAction, name=""):
        if boundary.dom != h or boundary.cod != p:
            raise StructuralError("crossed module: boundary endpoints do not match h, p")
        if action.actor != p or action.space != h:
            raise StructuralError("crossed module: action endpoints do not match p, h")
        self.h = h
        self.p = p
        self.boundary = boundary
        self.action = action
        self.name = name

    def act(self, g: int, x: int) -> int:
        """^g x for g in p, x in h."""
        return self.action(g, x)

    def validate(self) -> Report:
        r = Report()
        r.merge(self.boundary.validate(), "xmod.")
        r.merge(self.action.validate(), "xmod.")
        d = self.boundary
        for g in self.p.elements:
            for x in self.h.elements:
                r.record("xmod.equivariance",
                         d(self.act(g, x)) == self.p.conj(g, d(x)), (g, x),
                         "∂(^g h) != g ∂(h) g⁻¹")
        for x1 in self.h.elements:
            for x2 in self.h.elements:
                r.record("xmod.peiffer",
                         self.act(d(x1), x2) == self.h.conj(x1, x2), (x1, x2),
                         "^{∂h1} h2 != h1 h2 h1⁻¹")
        return r

    def __eq__(self, other):
        return (isinstance(other, CrossedModule) and self.h == other.h and self.p == other.p
                and self.boundary == other.boundary and self.action == other.action)

    def __repr__(self):
        return f"CrossedModule({self.name or (self.h.name, self.p.name)})"


def validate_crossed_module(cm: CrossedModule) -> Report:
    return cm.validate()


class XModMorphism:
    """A morphism of crossed modules: a commuting pair ``(alpha: H->H', phi: P->P')``
    compatible with the actions."""

    def __init__(self, src: CrossedModule, dst: CrossedModule,
                 alpha: GroupHom, phi: GroupHom):
        if alpha.dom != src.h or alpha.cod != dst.h:
            raise StructuralError("xmod morphism: alpha endpoints mismatch")
        if phi.dom != src.p or phi.cod != dst.p:
            raise StructuralError("xmod morphism: phi endpoints mismatch")
        self.src = src
        self.dst = dst
        self.alpha = alpha
        self.phi = phi

    def validate(self) -> Report:
        r = Report()
        r.merge(self.alpha.validate(), "xmor.alpha.")
        r.merge(self.phi.validate(), "xmor.phi.")
        for x in self.src.h.elements:
            r.record("xmor.square",
                     self.dst.boundary(self.alpha(x)) == self.phi(self.src.boundary(x)),
                     (x,), "∂'∘α != φ∘∂")
        for g in self.src.p.elements:
            for x in self.src.h.elements:
                r.record("xmor.action",
                         self.alpha(self.src.act(g, x)) == self.dst.act(self.phi(g), self.alpha(x)),
                         (g, x), "α(^g h) != ^{φ(g)} α(h)")
        return r

    def is_identity(self) -> bool:
        return (self.alpha.mapping == tuple(self.src.h.elements)
                and self.phi.mapping == tuple(self.src.p.elements)
                and self.src is self.dst)

    def __eq__(self, other):
        return (isinstance(other, XModMorphism) and self.alpha == other.alpha
                and self.phi == other.phi)

    def __repr__(self):
        return f"XModMorphism(alpha={self.alpha.mapping}, phi={self.phi.mapping})"


def xmod_identity(cm: CrossedModule) -> XModMorphism:
    return XModMorphism(cm, cm, identity_hom(cm.h), identity_hom(cm.p))


def xmod_compose(outer: XModMorphism, inner: XModMorphism) -> XModMorphism:
    if inner.dst is not outer.src and inner.dst != outer.src:
        raise StructuralError("xmod_compose: endpoint mismatch")
    return XModMorphism(inner.src, outer.dst,
                        hom_compose(outer.alpha, inner.alpha),
                        hom_compose(outer.phi, inner.phi))


class XModNatTransf:
    """A transformation between parallel crossed-module morphisms.

    Stored as a map ``theta: P -> H'``.  The checked conditions are the ones
    that make ``(theta(g), phi(g))`` a monoidal natural isomorphism between the
    induced functors on the associated categorical groups:

    * target:      φ'(g) = ∂'(θ(g))·φ(g)
    * naturality:  θ(∂(h)g)·α(h) = α'(h)·θ(g)
    * derivation:  θ(g g') = θ(g)·^{φ(g)}θ(g')
    """

    def __init__(self, src: XModMorphism, dst: XModMorphism, theta):
        if src.src != dst.src or src.dst != dst.dst:
            raise StructuralError("transformation: morphisms are not parallel")
        self.src = src
        self.dst = dst
        self.theta = tuple(theta)
        p = src.src.p
        hn = src.dst.h
        if len(self.theta) != p.order:
            raise StructuralError(f"transformation: theta has {len(self.theta)} entries for |P|={p.order}")
        if any(not (0 <= v < hn.order) for v in self.theta):
            raise StructuralError("transformation: theta value out of range")

    def __call__(self, g: int) -> int:
        return self.theta[g]

    def is_constant_identity(self) -> bool:
        e = self.src.dst.h.identity
        return all(v == e for v in self.theta)

    def validate(self) -> Report:
        r = Report()
        source, target = self.src, self.dst
        domain, codomain = source.src, source.dst
        hn, pn = codomain.h, codomain.p
        for g in domain.p.elements:
            r.record("xtransf.target",
                     target.phi(g) == pn.mul(codomain.boundary(self.theta[g]), source.phi(g)),
                     (g,), "φ'(g) != ∂'(θ(g)) φ(g)")
        for h in domain.h.elements:
            dh = domain.boundary(h)
            for g in domain.p.elements:
                lhs = hn.mul(self.theta[domain.p.mul(dh, g)], source.alpha(h))
                rhs = hn.mul(target.alpha(h), self.theta[g])
                r.record("xtransf.naturality", lhs == rhs, (h, g),
                         "θ(∂(h)g)·α(h) != α'(h)·θ(g)")
        for g1 in domain.p.elements:
            for g2 in domain.p.elements:
                lhs = self.theta[domain.p.mul(g1, g2)]
                rhs = hn.mul(self.theta[g1], codomain.act(source.phi(g1), self.theta[g2]))
                r.record("xtransf.derivation", lhs == rhs, (g1, g2),
                         "θ(g g') != θ(g)·^{φ(g)}θ(g')")
        return r

    def __eq__(self, other):
        return (isinstance(other, XModNatTransf) and self.theta == other.theta
                and self.src == other.src and self.dst == other.dst)

    def __repr__(self):
        return f"XModNatTransf(theta={self.theta})"


class WeakGAction:
    """A weak action of ``group`` on a crossed module.

    ``morphisms[x]`` is the endomorphism attached to ``x``; ``transfs[x][y]``
    the transformation ``(α_{xy},φ_{xy}) ⇒ (α_x∘α_y, φ_x∘φ_y)``, stored densely.
    """

    def __init__(self, group: FiniteGroup, target: CrossedModule, morphisms, transfs):
        self.group = group
        self.target = target
        self.morphisms = tuple(morphisms)
        self.transfs = tuple(tuple(row) for row in transfs)
        if len(self.morphisms) != group.order:
            raise StructuralError("weak action: one morphism per group element required")
        if len(self.transfs) != group.order or any(len(row) != group.order for row in self.transfs):
            raise StructuralError("weak action: transformation table must be |G|×|G|")

    def alpha(self, x: int) -> GroupHom:
        return self.morphisms[x].alpha

    def phi(self, x: int) -> GroupHom:
        return self.morphisms[x].phi

    def theta(self, x: int, y: int) -> XModNatTransf:
        return self.transfs[x][y]

    def validate(self) -> Report:
        r = Report()
        g, cm = self.group, self.target
        e = g.identity
        for x in g.elements:
            r.merge(self.morphisms[x].validate(), f"wact[{x}].")
        id_h = tuple(cm.h.elements)
        id_p = tuple(cm.p.elements)
        r.record("wact.unit_morphism",
                 self.alpha(e).mapping == id_h and self.phi(e).mapping == id_p, (),
                 "(α_e, φ_e) is not the identity")
        for x in g.elements:
            for y in g.elements:
                t = self.transfs[x][y]
                expected_src = self.morphisms[g.mul(x, y)]
                expected_dst = xmod_compose(self.morphisms[x], self.morphisms[y])
                r.record("wact.transf_endpoints",
                         t.src == expected_src and t.dst == expected_dst, (x, y),
                         "θ_{x,y} does not run (α_{xy},φ_{xy}) ⇒ (α_x α_y, φ_x φ_y)")
                r.merge(t.validate(), f"wact[{x},{y}].")
        for x in g.elements:
            r.record("wact.unit_transf",
                     self.transfs[e][x].is_constant_identity()
                     and self.transfs[x][e].is_constant_identity(), (x,),
                     "θ_{e,x} or θ_{x,e} is not constantly e")
        for x in g.elements:
            for y in g.elements:
                for z in g.elements:
                    xy, yz = g.mul(x, y), g.mul(y, z)
                    for p in cm.p.elements:
                        lhs = cm.h.mul(self.transfs[xy][z](p),
                                       self.transfs[x][y](self.phi(z)(p)))
                        rhs = cm.h.mul(self.transfs[x][yz](p),
                                       self.alpha(x)(self.transfs[y][z](p)))
                        r.record("wact.cocycle", lhs == rhs, (x, y, z, p),
                                 "θ_{xy,z}(g)·θ_{x,y}(φ_z(g)) != θ_{x,yz}(g)·α_x(θ_{y,z}(g))")
        return r

    def is_strict(self) -> bool:
        return all(self.transfs[x][y].is_constant_identity()
                   for x in self.group.elements for y in self.group.elements)

    def __repr__(self):
        return f"WeakGAction({self.group.name} on {self.target!r})"


def validate_weak_action(wa: WeakGAction) -> Report:
    return wa.validate()


def constant_identity_transf(src: XModMorphism, dst: XModMorphism) -> XModNatTransf:
    e = src.dst.h.identity
    return XModNatTransf(src, dst, [e] * src.src.p.order)


def trivial_weak_action(group: FiniteGroup, cm: CrossedModule) -> WeakGAction:
    """Every group element acts as the identity morphism, all θ constant e."""
    ident = xmod_identity(cm)
    morphisms = [ident] * group.order
    transfs = [[constant_identity_transf(ident, xmod_compose(ident, ident))] * group.order
               for _ in group.elements]
    return WeakGAction(group, cm, morphisms, transfs)


# ----------------------------------------------------------------------------
# constructors from the standard examples


def from_normal_subgroup(p: FiniteGroup, h_elements) -> CrossedModule:
    """Crossed module (H, P, inclusion) for a normal subgroup, P acting by conjugation."""
    h, incl = subgroup(p, h_elements)
    helems = incl.mapping
    hindex = {x: i for i, x in enumerate(helems)}
    act = []
    for g in p.elements:
        row = []
        for i, x in enumerate(helems):
            c = p.conj(g, x)
            if c not in hindex:
                raise StructuralError(
                    f"subgroup not normal: {g}·{x}·{g}⁻¹ = {c} escapes (conjugation witness)")
            row.append(hindex[c])
        act.append(row)
    action = AutomorphismAction(p, h, act, check=False)
    return CrossedModule(h, p, incl, action, name=f"({h.name} ⊲ {p.name})")


def from_central_extension(boundary: GroupHom, section) -> CrossedModule:
    """Crossed module from a central extension ``1 -> A -> H -> P -> 1``.

    ``boundary`` must be surjective with central kernel; ``section`` lists a
    preimage for each element of P.  The action is ``^p h = ι(p) h ι(p)⁻¹``;
    since A is central it does not depend on the section, which is re-checked
    here with a second section whenever one exists.
    """
    h, p = boundary.dom, boundary.cod
    if not boundary.is_surjective():
        raise StructuralError("central extension: boundary is not surjective")
    a_elems = [x for x in h.elements if boundary(x) == p.identity]
    for z in a_elems:
        for x in h.elements:
            if h.mul(z, x) != h.mul(x, z):
                raise StructuralError(f"central extension: kernel element {z} is not central ({x})")
    section = tuple(section)
    if len(section) != p.order or any(boundary(section[g]) != g for g in p.elements):
        raise StructuralError("central extension: not a section of the boundary")

    def action_from(sec):
        return [[h.conj(sec[g], x) for x in h.elements] for g in p.elements]

    act = action_from(section)
    if len(a_elems) > 1:
        other = [next(x for x in h.elements if boundary(x) == g and x != section[g])
                 for g in p.elements]
        assert action_from(tuple(other)) == act, "action depended on the section"
    action = AutomorphismAction(p, h, act, check=False)
    return CrossedModule(h, p, boundary, action, name=f"({h.name} -> {p.name} central)")


def weak_action_from_exact_sequence(projection: GroupHom, section) -> WeakGAction:
    """Weak action of G on (ker π ⊲ P) from ``π: P -> G`` and a set section of π.

    ``φ_g`` and ``α_g`` are conjugation by ``ι(g)``; ``θ_{g,h}(x)`` is the kernel
    element with image ``α_g(α_h(x))·α_{gh}(x)⁻¹``.  The section must send the
    identity to the identity.
    """
    p, g = projection.dom, projection.cod
    if not projection.is_surjective():
        raise StructuralError("exact sequence: projection is not surjective")
    section = tuple(section)
    if len(section) != g.order or any(projection(section[x]) != x for x in g.elements):
        raise StructuralError("exact sequence: not a section of the projection")
    if section[g.identity] != p.identity:
        raise StructuralError("exact sequence: section must send e to e")
    cm = from_normal_subgroup(p, [x for x in p.elements if projection(x) == g.identity])
    incl = cm.boundary
    hindex = {incl(i): i for i in cm.h.elements}

    def conj_hom_p(c):
        return GroupHom(p, p, [p.conj(c, x) for x in p.elements], check=False)

    def conj_hom_h(c):
        return GroupHom(cm.h, cm.h, [hindex[p.conj(c, incl(i))] for i in cm.h.elements],
                        check=False)

    morphisms = [XModMorphism(cm, cm, conj_hom_h(section[x]), conj_hom_p(section[x]))
                 for x in g.elements]
    transfs = []
    for x in g.elements:
        row = []
        for y in g.elements:
            xy = g.mul(x, y)
            cxy = section[xy]
            cx_cy = p.mul(section[x], section[y])
            theta = []
            for q in p.elements:
                val = p.mul(p.conj(cx_cy, q), p.inv(p.conj(cxy, q)))
                theta.append(hindex[val])
            src = morphisms[xy]
            dst = xmod_compose(morphisms[x], morphisms[y])
            row.append(XModNatTransf(src, dst, theta))
        transfs.append(row)
    return WeakGAction(g, cm, morphisms, transfs)
