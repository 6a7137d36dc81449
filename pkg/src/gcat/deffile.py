"""The JSON definition-file format: parsing, validation, emission.

A document is a JSON object with sections ``groups``, ``homs``, ``actions``,
``crossed_modules``, ``weak_actions``, ``categories``, ``g_categories``,
``gradings``, ``braidings``; entries reference each other by string id inside
their section.  All tables are dense integer tables; ``-1`` marks an undefined
composition entry.
"""

from __future__ import annotations

import copy
import json
import os

from .braiding import (CategoryBraiding, CrossedModuleBraiding, GGrading, GradingHom,
                       grading_from_hom)
from .cat import StrictMonoidalCategory
from .gaction import CategoricalGroup, MonoidalGCategory, induced_g_action
from .groups import AutomorphismAction, FiniteGroup, GroupHom
from .report import Report, StructuralError
from .strictify import Strictification
from .xmod import (CrossedModule, WeakGAction, XModMorphism, XModNatTransf,
                   trivial_weak_action, xmod_compose)

SECTIONS = ("groups", "homs", "actions", "crossed_modules", "weak_actions",
            "categories", "g_categories", "gradings", "braidings")


class DefinitionError(Exception):
    """Base for definition-file problems; carries the JSON path of the culprit."""

    def __init__(self, path, message):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.message = message


class DefSyntaxError(DefinitionError):
    pass


class DanglingReferenceError(DefinitionError):
    pass


class DuplicateIdError(DefinitionError):
    pass


class DimensionError(DefinitionError):
    pass


class InvalidStanzaError(DefinitionError):
    """A stanza parsed but failed its validator (raised only with validate=True)."""

    def __init__(self, path, message, report=None):
        super().__init__(path, message)
        self.report = report


class DefinitionDocument:
    """Parsed document: canonical raw sections plus typed registries."""

    def __init__(self, sections):
        self.sections = sections
        self.groups = {}
        self.homs = {}
        self.actions = {}
        self.crossed_modules = {}
        self.weak_actions = {}
        self.categories = {}
        self.g_categories = {}
        self.gradings = {}
        self.braidings = {}

    def registry(self, section):
        return getattr(self, section)

    def emit(self) -> dict:
        return copy.deepcopy(self.sections)

    def to_json(self) -> str:
        return json.dumps(self.emit(), indent=1)

    def __eq__(self, other):
        return isinstance(other, DefinitionDocument) and self.sections == other.sections


def _normalize(raw) -> dict:
    if not isinstance(raw, dict):
        raise DefSyntaxError("$", "document must be a JSON object")
    sections = {}
    for key in raw:
        if key not in SECTIONS:
            raise DefSyntaxError(key, f"unknown section {key!r}")
    for sec in SECTIONS:
        entries = raw.get(sec, [])
        if not isinstance(entries, list):
            raise DefSyntaxError(sec, "section must be a list")
        if entries:
            sections[sec] = copy.deepcopy(entries)
    return sections


def _require(stanza, key, path, kind=None):
    if key not in stanza:
        raise DefSyntaxError(path, f"missing field {key!r}")
    value = stanza[key]
    if kind is not None and not isinstance(value, kind):
        raise DefSyntaxError(f"{path}.{key}", f"expected {kind.__name__}")
    return value


def _resolve(registry, ref, path):
    if ref not in registry:
        raise DanglingReferenceError(path, f"undefined reference {ref!r}")
    return registry[ref]


def _int_matrix(value, path):
    if (not isinstance(value, list)
            or any(not isinstance(row, list) for row in value)
            or any(not isinstance(v, int) for row in value for v in row)):
        raise DefSyntaxError(path, "expected a matrix of integers")
    return value


class _Loader:
    def __init__(self, sections):
        self.doc = DefinitionDocument(sections)

    def load(self) -> DefinitionDocument:
        sections = self.doc.sections
        for sec in SECTIONS:
            seen = set()
            for i, stanza in enumerate(sections.get(sec, [])):
                path = f"{sec}[{i}]"
                sid = _require(stanza, "id", path, str)
                if sid in seen:
                    raise DuplicateIdError(path, f"duplicate id {sid!r}")
                seen.add(sid)
                try:
                    getattr(self, "_" + sec)(sid, stanza, path)
                except StructuralError as exc:
                    raise DimensionError(path, str(exc)) from exc
        return self.doc

    def _groups(self, sid, stanza, path):
        table = _int_matrix(_require(stanza, "table", path), f"{path}.table")
        order = stanza.get("order", len(table))
        if order != len(table):
            raise DimensionError(f"{path}.table", f"order {order} but {len(table)} rows")
        names = stanza.get("elements")
        from .groups import validate_group
        rep = validate_group(table)
        if not rep.ok:
            raise InvalidStanzaError(path, f"not a group: {rep.violations[0]}", rep)
        self.doc.groups[sid] = FiniteGroup(table, names=names, name=sid)

    def _homs(self, sid, stanza, path):
        dom = _resolve(self.doc.groups, _require(stanza, "dom", path, str), f"{path}.dom")
        cod = _resolve(self.doc.groups, _require(stanza, "cod", path, str), f"{path}.cod")
        mapping = _require(stanza, "map", path, list)
        self.doc.homs[sid] = GroupHom(dom, cod, mapping, check=False)

    def _actions(self, sid, stanza, path):
        actor = _resolve(self.doc.groups, _require(stanza, "actor", path, str), f"{path}.actor")
        space = _resolve(self.doc.groups, _require(stanza, "space", path, str), f"{path}.space")
        act = _int_matrix(_require(stanza, "act", path), f"{path}.act")
        self.doc.actions[sid] = AutomorphismAction(actor, space, act, check=False)

    def _crossed_modules(self, sid, stanza, path):
        h = _resolve(self.doc.groups, _require(stanza, "h", path, str), f"{path}.h")
        p = _resolve(self.doc.groups, _require(stanza, "p", path, str), f"{path}.p")
        boundary = _resolve(self.doc.homs, _require(stanza, "boundary", path, str),
                            f"{path}.boundary")
        action = _resolve(self.doc.actions, _require(stanza, "action", path, str),
                          f"{path}.action")
        self.doc.crossed_modules[sid] = CrossedModule(h, p, boundary, action, name=sid)

    def _weak_actions(self, sid, stanza, path):
        group = _resolve(self.doc.groups, _require(stanza, "group", path, str), f"{path}.group")
        target = _resolve(self.doc.crossed_modules, _require(stanza, "target", path, str),
                          f"{path}.target")
        raw_mors = _require(stanza, "morphisms", path, list)
        if len(raw_mors) != group.order:
            raise DimensionError(f"{path}.morphisms",
                                 f"{len(raw_mors)} morphisms for group order {group.order}")
        morphisms = []
        for g, entry in enumerate(raw_mors):
            alpha = GroupHom(target.h, target.h,
                             _require(entry, "alpha", f"{path}.morphisms[{g}]", list),
                             check=False)
            phi = GroupHom(target.p, target.p,
                           _require(entry, "phi", f"{path}.morphisms[{g}]", list),
                           check=False)
            morphisms.append(XModMorphism(target, target, alpha, phi))
        raw_transfs = _require(stanza, "transfs", path, list)
        if (len(raw_transfs) != group.order
                or any(len(row) != group.order for row in raw_transfs)):
            raise DimensionError(f"{path}.transfs", "table must be |G|×|G|")
        transfs = []
        for x in group.elements:
            row = []
            for y in group.elements:
                src = morphisms[group.mul(x, y)]
                dst = xmod_compose(morphisms[x], morphisms[y])
                row.append(XModNatTransf(src, dst, raw_transfs[x][y]))
            transfs.append(row)
        self.doc.weak_actions[sid] = WeakGAction(group, target, morphisms, transfs)

    def _categories(self, sid, stanza, path):
        n = _require(stanza, "objects", path, int)
        raw_mors = _require(stanza, "morphisms", path, list)
        src = [_require(m, "src", f"{path}.morphisms[{i}]", int) for i, m in enumerate(raw_mors)]
        tgt = [_require(m, "dst", f"{path}.morphisms[{i}]", int) for i, m in enumerate(raw_mors)]
        identities = _require(stanza, "identities", path, list)
        comp_table = _int_matrix(_require(stanza, "composition", path), f"{path}.composition")
        comp = {}
        for late, row in enumerate(comp_table):
            for early, v in enumerate(row):
                if v != -1:
                    comp[(late, early)] = v
        unit = _require(stanza, "unit", path, int)
        obj_tensor = _int_matrix(_require(stanza, "tensor_objects", path),
                                 f"{path}.tensor_objects")
        mor_tensor = _int_matrix(_require(stanza, "tensor_morphisms", path),
                                 f"{path}.tensor_morphisms")
        self.doc.categories[sid] = StrictMonoidalCategory(
            n, src, tgt, identities, comp, unit, obj_tensor, mor_tensor)

    def _g_categories(self, sid, stanza, path):
        if "from_weak_action" in stanza:
            wa = _resolve(self.doc.weak_actions, stanza["from_weak_action"],
                          f"{path}.from_weak_action")
            self.doc.g_categories[sid] = induced_g_action(wa)
            return
        group = _resolve(self.doc.groups, _require(stanza, "group", path, str), f"{path}.group")
        cat = _resolve(self.doc.categories, _require(stanza, "category", path, str),
                       f"{path}.category")
        raw_functors = _require(stanza, "functors", path, list)
        if len(raw_functors) != group.order:
            raise DimensionError(f"{path}.functors",
                                 f"{len(raw_functors)} functors for group order {group.order}")
        act_obj = [_require(f, "objects", f"{path}.functors[{g}]", list)
                   for g, f in enumerate(raw_functors)]
        act_mor = [_require(f, "morphisms", f"{path}.functors[{g}]", list)
                   for g, f in enumerate(raw_functors)]
        psi = _require(stanza, "psi", path, list)
        phi = _require(stanza, "phi", path, list)
        self.doc.g_categories[sid] = MonoidalGCategory(cat, group, act_obj, act_mor, psi, phi)

    def _gradings(self, sid, stanza, path):
        xm = _resolve(self.doc.crossed_modules, _require(stanza, "xmod", path, str),
                      f"{path}.xmod")
        gr = _resolve(self.doc.homs, _require(stanza, "hom", path, str), f"{path}.hom")
        if "weak_action" in stanza:
            wa = _resolve(self.doc.weak_actions, stanza["weak_action"], f"{path}.weak_action")
            if wa.target is not xm:
                raise DanglingReferenceError(
                    f"{path}.weak_action", "weak action targets a different crossed module")
        else:
            wa = trivial_weak_action(gr.cod, xm)
        self.doc.gradings[sid] = GradingHom(wa, gr)

    def _braidings(self, sid, stanza, path):
        if "xmod_braiding" in stanza:
            body = stanza["xmod_braiding"]
            grading = _resolve(self.doc.gradings,
                               _require(body, "grading", f"{path}.xmod_braiding", str),
                               f"{path}.xmod_braiding.grading")
            bracket = _int_matrix(_require(body, "bracket", f"{path}.xmod_braiding"),
                                  f"{path}.xmod_braiding.bracket")
            self.doc.braidings[sid] = CrossedModuleBraiding(grading, bracket)
            return
        if "category_braiding" not in stanza:
            raise DefSyntaxError(path, "braiding needs xmod_braiding or category_braiding")
        body = stanza["category_braiding"]
        gc = _resolve(self.doc.g_categories,
                      _require(body, "g_category", f"{path}.category_braiding", str),
                      f"{path}.category_braiding.g_category")
        degrees = _require(body, "degrees", f"{path}.category_braiding", list)
        components = _int_matrix(_require(body, "components", f"{path}.category_braiding"),
                                 f"{path}.category_braiding.components")
        grading = GGrading(gc, gc.group, degrees)
        self.doc.braidings[sid] = CategoryBraiding(grading, components)


def parse(source, validate: bool = True) -> DefinitionDocument:
    """Parse a path, JSON text, or dict into a DefinitionDocument.

    With ``validate=True`` every stanza must additionally pass its validator;
    the first failure raises :class:`InvalidStanzaError` with the report.
    """
    if isinstance(source, dict):
        raw = source
    else:
        text = source
        if isinstance(source, (str, os.PathLike)) and os.path.exists(str(source)):
            with open(source) as fh:
                text = fh.read()
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DefSyntaxError(f"line {exc.lineno}", exc.msg) from exc
    doc = _Loader(_normalize(raw)).load()
    if validate:
        for sid, path, rep in iter_validation(doc):
            if not rep.ok:
                raise InvalidStanzaError(path, f"stanza {sid!r} fails validation: "
                                         f"{rep.violations[0]}", rep)
    return doc


def iter_validation(doc: DefinitionDocument):
    """Yield (id, path, Report) for every stanza, in document order."""
    validators = {
        "groups": lambda g: g.validate() if hasattr(g, "validate") else Report(),
        "homs": lambda h: h.validate(),
        "actions": lambda a: a.validate(),
        "crossed_modules": lambda cm: cm.validate(),
        "weak_actions": lambda wa: wa.validate(),
        "categories": lambda c: c.validate(),
        "g_categories": lambda gc: gc.validate(),
        "gradings": lambda gr: gr.validate(),
        "braidings": lambda b: b.validate(),
    }
    for sec in SECTIONS:
        registry = doc.registry(sec)
        for i, stanza in enumerate(doc.sections.get(sec, [])):
            sid = stanza["id"]
            obj = registry[sid]
            if sec == "groups":
                rep = Report()  # construction already certified the axioms
                rep.record("group.valid", True, ())
            else:
                rep = validators[sec](obj)
            yield sid, f"{sec}[{i}]", rep


# ----------------------------------------------------------------------------
# serializers (object -> stanza) used by the CLI emitters


def group_stanza(sid: str, g: FiniteGroup) -> dict:
    stanza = {"id": sid, "order": g.order, "table": [list(row) for row in g.table]}
    if g.names:
        stanza["elements"] = list(g.names)
    return stanza


def hom_stanza(sid: str, dom_id: str, cod_id: str, h: GroupHom) -> dict:
    return {"id": sid, "dom": dom_id, "cod": cod_id, "map": list(h.mapping)}


def action_stanza(sid: str, actor_id: str, space_id: str, a: AutomorphismAction) -> dict:
    return {"id": sid, "actor": actor_id, "space": space_id,
            "act": [list(row) for row in a.act]}


def crossed_module_stanza(sid, h_id, p_id, boundary_id, action_id) -> dict:
    return {"id": sid, "h": h_id, "p": p_id, "boundary": boundary_id, "action": action_id}


def category_stanza(sid: str, cat: StrictMonoidalCategory) -> dict:
    comp = [[-1] * cat.n_morphisms for _ in range(cat.n_morphisms)]
    for (late, early), v in cat.comp.items():
        comp[late][early] = v
    return {
        "id": sid,
        "objects": cat.n_objects,
        "morphisms": [{"src": cat.src[m], "dst": cat.tgt[m]}
                      for m in range(cat.n_morphisms)],
        "identities": list(cat.identity),
        "composition": comp,
        "unit": cat.unit,
        "tensor_objects": [list(row) for row in cat.obj_tensor],
        "tensor_morphisms": [list(row) for row in cat.mor_tensor],
    }


def g_category_stanza(sid: str, gc: MonoidalGCategory, category_id: str,
                      group_id: str) -> dict:
    return {
        "id": sid,
        "group": group_id,
        "category": category_id,
        "functors": [{"objects": list(gc.act_obj[g]), "morphisms": list(gc.act_mor[g])}
                     for g in gc.group.elements],
        "psi": [[list(row) for row in plane] for plane in gc.psi],
        "phi": [[list(row) for row in plane] for plane in gc.phi],
    }


def weak_action_stanza(sid: str, group_id: str, target_id: str, wa: WeakGAction) -> dict:
    return {
        "id": sid,
        "group": group_id,
        "target": target_id,
        "morphisms": [{"alpha": list(wa.alpha(g).mapping), "phi": list(wa.phi(g).mapping)}
                      for g in wa.group.elements],
        "transfs": [[list(wa.theta(x, y).theta) for y in wa.group.elements]
                    for x in wa.group.elements],
    }


def grading_stanza(sid: str, xmod_id: str, hom_id: str, weak_action_id=None) -> dict:
    stanza = {"id": sid, "xmod": xmod_id, "hom": hom_id}
    if weak_action_id is not None:
        stanza["weak_action"] = weak_action_id
    return stanza


def xmod_braiding_stanza(sid: str, grading_id: str, bracket) -> dict:
    return {"id": sid,
            "xmod_braiding": {"grading": grading_id,
                              "bracket": [list(row) for row in bracket]}}


def document_from_sections(**sections) -> DefinitionDocument:
    raw = {sec: entries for sec, entries in sections.items() if entries}
    return _Loader(_normalize(raw)).load()


def strictification_document(st: Strictification, sid: str) -> DefinitionDocument:
    """Emit a materialized strictification as a self-contained document."""
    gc = st.gcat
    return document_from_sections(
        groups=[group_stanza(f"{sid}_group", gc.group)],
        categories=[category_stanza(f"{sid}_cat", gc.cat)],
        g_categories=[g_category_stanza(sid, gc, f"{sid}_cat", f"{sid}_group")],
    )


def crossed_module_document(cm: CrossedModule, sid: str) -> DefinitionDocument:
    return document_from_sections(
        groups=[group_stanza(f"{sid}_h", cm.h), group_stanza(f"{sid}_p", cm.p)],
        homs=[hom_stanza(f"{sid}_boundary", f"{sid}_h", f"{sid}_p", cm.boundary)],
        actions=[action_stanza(f"{sid}_action", f"{sid}_p", f"{sid}_h", cm.action)],
        crossed_modules=[crossed_module_stanza(sid, f"{sid}_h", f"{sid}_p",
                                               f"{sid}_boundary", f"{sid}_action")],
    )
