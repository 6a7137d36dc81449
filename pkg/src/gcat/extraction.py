"""From a strict categorical group back to a crossed module.

The object set under ⊗ gives the base group; morphisms into the unit object,
multiplied by ⊗, give the fiber group; the boundary reads off sources and the
action conjugates by identity morphisms.  Works both on dense monoidal
categories and directly on a strictification (no dense tables needed there).
"""

from __future__ import annotations

from .cat import StrictMonoidalCategory
from .groups import (AutomorphismAction, FiniteGroup, GroupHom, cokernel,
                     enumerate_homs, find_isomorphism, kernel, max_order)
from .report import CapacityError, Report, StructuralError
from .strictify import (GMorphism, Strictification, act, act_morphism,
                        compose_gmorphisms, enumerate_morphisms, identity_gmorphism,
                        invert_gmorphism, tensor_morphisms, tensor_objects,
                        unit_object)
from .xmod import (CrossedModule, WeakGAction, XModMorphism, XModNatTransf,
                   xmod_compose)


class _DenseView:
    """Adapter exposing the extraction protocol over a dense monoidal category."""

    def __init__(self, cat: StrictMonoidalCategory):
        self.cat = cat
        self.objects = list(range(cat.n_objects))
        self.unit = cat.unit

    def tensor_obj(self, x, y):
        return self.cat.obj_tensor[x][y]

    def morphisms_into_unit(self):
        out = []
        for x in self.objects:
            out.extend(self.cat.hom(x, self.cat.unit))
        return out

    def mor_src(self, m):
        return self.cat.src[m]

    def identity_mor(self, x):
        return self.cat.identity[x]

    def tensor_mor(self, f, l):
        return self.cat.mor_tensor[f][l]

    def all_morphisms(self):
        return range(self.cat.n_morphisms)

    def is_iso(self, m):
        return self.cat.is_iso(m)


class _StrictifiedView:
    """The same protocol over a strictification, computing tensors on demand."""

    def __init__(self, st: Strictification):
        self.st = st
        self.objects = list(st.objects)
        self.unit = unit_object(st.parent)
        self._into_unit = None

    def tensor_obj(self, x, y):
        return tensor_objects(x, y)

    def morphisms_into_unit(self):
        if self._into_unit is None:
            out = []
            for a in self.objects:
                out.extend(enumerate_morphisms(a, self.unit))
            self._into_unit = out
        return self._into_unit

    def mor_src(self, m):
        return m.src

    def identity_mor(self, x):
        return identity_gmorphism(x)

    def tensor_mor(self, f, l):
        return tensor_morphisms(f, l)

    def all_morphisms(self):
        return self.st.morphisms

    def is_iso(self, m):
        return invert_gmorphism(m) is not None


def validate_strict_categorical_group(cat: StrictMonoidalCategory) -> Report:
    """Every morphism invertible and every object strictly ⊗-invertible."""
    r = Report()
    for m in range(cat.n_morphisms):
        r.record("cg.invertible", cat.is_iso(m), (m,), "morphism not invertible")
    for x in range(cat.n_objects):
        r.record("cg.strict_inverse",
                 any(cat.obj_tensor[x][y] == cat.unit and cat.obj_tensor[y][x] == cat.unit
                     for y in range(cat.n_objects)),
                 (x,), "object has no strict tensor inverse")
    return r


class Extraction:
    """Result of extracting a crossed module from a strict categorical group.

    Keeps the dictionaries between abstract element ids and the objects and
    unit-bound morphisms they came from, so group actions can be pulled back.
    """

    def __init__(self, xmod: CrossedModule, objs, mors):
        self.xmod = xmod
        self.objects = objs          # id in P -> object handle
        self.morphisms = mors        # id in H -> morphism handle (into the unit)
        self.obj_index = {o: i for i, o in enumerate(objs)}
        self.mor_index = {m: i for i, m in enumerate(mors)}


def _group_from_table(handles, mul, name) -> tuple:
    index = {h: i for i, h in enumerate(handles)}
    table = []
    for a in handles:
        row = []
        for b in handles:
            p = mul(a, b)
            if p not in index:
                raise StructuralError(f"{name}: not closed under the product")
            row.append(index[p])
        table.append(row)
    return FiniteGroup(table, name=name), index


def extract_crossed_module(source) -> Extraction:
    """Extract (fiber group, object group, boundary, conjugation action).

    ``source`` is a dense StrictMonoidalCategory or a Strictification.
    Raises StructuralError when an object lacks a strict inverse or some
    morphism into the unit is not invertible.
    """
    view = _StrictifiedView(source) if isinstance(source, Strictification) \
        else _DenseView(source)
    objs = list(view.objects)
    pgrp, obj_index = _group_from_table(objs, view.tensor_obj, "object group")
    inv_obj = {}
    for x in objs:
        found = None
        for y in objs:
            if view.tensor_obj(x, y) == view.unit and view.tensor_obj(y, x) == view.unit:
                found = y
                break
        if found is None:
            raise StructuralError("extraction: object without strict tensor inverse")
        inv_obj[x] = found

    mors = list(view.morphisms_into_unit())
    if not all(view.is_iso(m) for m in mors):
        raise StructuralError("extraction: a morphism into the unit is not invertible")
    hgrp, mor_index = _group_from_table(mors, view.tensor_mor, "fiber group")
    boundary = GroupHom(hgrp, pgrp,
                        [obj_index[view.mor_src(m)] for m in mors], check=False)
    act = []
    for x in objs:
        idx, idxinv = view.identity_mor(x), view.identity_mor(inv_obj[x])
        row = [mor_index[view.tensor_mor(view.tensor_mor(idx, m), idxinv)] for m in mors]
        act.append(row)
    action = AutomorphismAction(pgrp, hgrp, act, check=False)
    cm = CrossedModule(hgrp, pgrp, boundary, action, name="extracted")
    return Extraction(cm, objs, mors)


def extract_strict_action(st: Strictification, ext: Extraction) -> WeakGAction:
    """The strict G-action the strictified category induces on the extraction.

    Object-wise and morphism-wise application of the strict action; all
    transformations are constant at the identity.
    """
    grp = st.parent.group
    cm = ext.xmod
    morphisms = []
    for g in grp.elements:
        phi = GroupHom(cm.p, cm.p,
                       [ext.obj_index[act(g, ext.objects[i])] for i in cm.p.elements],
                       check=False)
        alpha = GroupHom(cm.h, cm.h,
                         [ext.mor_index[act_morphism(g, ext.morphisms[i])]
                          for i in cm.h.elements], check=False)
        morphisms.append(XModMorphism(cm, cm, alpha, phi))
    transfs = []
    e = cm.h.identity
    for x in grp.elements:
        row = []
        for y in grp.elements:
            src = morphisms[grp.mul(x, y)]
            dst = xmod_compose(morphisms[x], morphisms[y])
            row.append(XModNatTransf(src, dst, [e] * cm.p.order))
        transfs.append(row)
    return WeakGAction(grp, cm, morphisms, transfs)


# ----------------------------------------------------------------------------
# weak equivalence of crossed modules


class WeakEquivalenceReport:
    """Kernel/cokernel comparison between two crossed modules.

    ``ok`` means both invariants are isomorphic.  ``morphism`` carries a direct
    connecting morphism when one was searched for and found; ``morphism_searched``
    records whether the search ran (it is skipped above the capacity bound).
    """

    def __init__(self, kernel_iso, cokernel_iso, kernels, cokernels,
                 morphism, morphism_searched):
        self.kernel_iso = kernel_iso
        self.cokernel_iso = cokernel_iso
        self.kernels = kernels
        self.cokernels = cokernels
        self.morphism = morphism
        self.morphism_searched = morphism_searched

    @property
    def ok(self) -> bool:
        return self.kernel_iso is not None and self.cokernel_iso is not None

    def summary(self) -> str:
        ker_a, ker_b = self.kernels
        cok_a, cok_b = self.cokernels
        lines = [
            f"ker(∂): orders {ker_a.order} vs {ker_b.order}: "
            + ("isomorphic" if self.kernel_iso else "NOT isomorphic"),
            f"coker(∂): orders {cok_a.order} vs {cok_b.order}: "
            + ("isomorphic" if self.cokernel_iso else "NOT isomorphic"),
        ]
        if not self.morphism_searched:
            lines.append("connecting morphism: not searched (capacity bound)")
        elif self.morphism is None:
            lines.append("connecting morphism: none found at the bound")
        else:
            lines.append("connecting morphism: found")
        return "\n".join(lines)


def check_weak_equivalence(a: CrossedModule, b: CrossedModule,
                           search_morphism: bool = True) -> WeakEquivalenceReport:
    """Compare kernels and cokernels of the two boundaries, and look for a
    crossed-module morphism inducing isomorphisms on both."""
    ker_a, inc_a = kernel(a.boundary)
    ker_b, inc_b = kernel(b.boundary)
    cok_a, proj_a = cokernel(a.boundary)
    cok_b, proj_b = cokernel(b.boundary)
    kiso = find_isomorphism(ker_a, ker_b)
    ciso = find_isomorphism(cok_a, cok_b)

    morphism = None
    searched = False
    limit = max_order()
    if (search_morphism and kiso is not None and ciso is not None
            and all(g.order <= limit for g in (a.h, a.p, b.h, b.p))):
        searched = True
        morphism = _find_weak_equivalence_morphism(
            a, b, (ker_a, inc_a, ker_b, inc_b), (cok_a, proj_a, cok_b, proj_b))
    return WeakEquivalenceReport(kiso, ciso, (ker_a, ker_b), (cok_a, cok_b),
                                 morphism, searched)


def _find_weak_equivalence_morphism(a, b, kers, coks):
    ker_a, inc_a, ker_b, inc_b = kers
    cok_a, proj_a, cok_b, proj_b = coks
    ker_b_index = {inc_b(i): i for i in ker_b.elements}
    for phi in enumerate_homs(a.p, b.p):
        for alpha in enumerate_homs(a.h, b.h):
            cand = XModMorphism(a, b, alpha, phi)
            if not cand.validate().ok:
                continue
            ker_map = [ker_b_index.get(alpha(inc_a(i))) for i in ker_a.elements]
            if any(v is None for v in ker_map):
                continue
            ker_hom = GroupHom(ker_a, ker_b, ker_map, check=False)
            if not ker_hom.is_bijective():
                continue
            cok_map = [proj_b(phi(x)) for x in a.p.elements]
            images = {}
            consistent = True
            for x in a.p.elements:
                key = proj_a(x)
                if key in images and images[key] != cok_map[x]:
                    consistent = False
                    break
                images[key] = cok_map[x]
            if not consistent:
                continue
            cok_hom = GroupHom(cok_a, cok_b,
                               [images[i] for i in cok_a.elements], check=False)
            if cok_hom.is_bijective():
                return cand
    return None
