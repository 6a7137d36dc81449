"""Cross-module invariants: functoriality of the induced action, composites of
strictified functors, relabelling invariance of braiding counts, and the
explicit category-braiding stanza path."""

import json

from gcat import deffile
from gcat.braiding import GradingHom, induce_braiding, search_braidings
from gcat.cat import compose_functors, identity_functor
from gcat.cli import main as cli_main
from gcat.gaction import GFunctor, categorical_group, check_g_functor, induced_g_action
from gcat.groups import AutomorphismAction, FiniteGroup, GroupHom, cyclic, trivial, \
    trivial_action
from gcat.strictify import strictify, strictify_g_functor
from gcat.xmod import CrossedModule, trivial_weak_action, weak_action_from_exact_sequence

from helpers import perm_parity, s3, sign_hom
from test_gaction import twisted_c2_weak_action


def s3_induced():
    g = s3()
    sign = sign_hom(g)
    transposition = next(i for i, p in enumerate(g.permutations) if perm_parity(p) == 1)
    return induced_g_action(weak_action_from_exact_sequence(
        sign, [g.identity, transposition]))


def test_induced_action_functorial_on_strict_corpus():
    """For strict weak actions, the induced functors compose on the nose:
    x_* ∘ y_* = (xy)_* as monoidal functors."""
    gc = s3_induced()
    grp = gc.group
    for x in grp.elements:
        for y in grp.elements:
            composite = compose_functors(gc.functor(x), gc.functor(y))
            assert composite == gc.functor(grp.mul(x, y))


def test_action_functor_is_g_functor_and_strictifies():
    gc = s3_induced()
    c = gc.cat
    st = strictify(gc)
    ident_gamma = [[c.identity[gc.act_obj[g][gc.act_obj[1][x]]]
                    for x in range(c.n_objects)] for g in gc.group.elements]
    gf = GFunctor(gc, gc, gc.functor(1), ident_gamma)
    assert check_g_functor(gf).ok
    lifted = strictify_g_functor(gf, st, st)
    assert check_g_functor(lifted).ok
    # nontrivial: the lift permutes the enumerated objects
    assert lifted.functor.obj_map != tuple(range(len(st.objects)))
    # composite of the lift with itself equals the lift of the composite (= Id)
    square = compose_functors(lifted.functor, lifted.functor)
    assert square == identity_functor(st.gcat.cat)


def test_lift_commutes_with_embedding():
    gc = s3_induced()
    c = gc.cat
    st = strictify(gc)
    gamma = [[c.identity[gc.act_obj[g][gc.act_obj[1][x]]] for x in range(c.n_objects)]
             for g in gc.group.elements]
    gf = GFunctor(gc, gc, gc.functor(1), gamma)
    lifted = strictify_g_functor(gf, st, st)
    from gcat.strictify import embed
    for x in range(c.n_objects):
        lifted_of_embed = st.objects[lifted.functor.obj_map[st.obj_index[embed(gc, x)]]]
        assert lifted_of_embed == embed(gc, gc.act_obj[1][x])


def c3_trivial_xmod():
    c3 = cyclic(3)
    zero = GroupHom(c3, c3, [0, 0, 0])
    return CrossedModule(c3, c3, zero, trivial_action(c3, c3))


def test_braiding_count_invariant_under_relabelling():
    """Relabelling P by an automorphism commuting with all the data carries
    solutions to solutions bijectively, so the count is invariant."""
    cm = c3_trivial_xmod()
    wa = trivial_weak_action(trivial(), cm)
    grading = GradingHom(wa, GroupHom(cm.p, wa.group, [0, 0, 0]))
    sols = search_braidings(grading)
    assert len(sols) == 3  # brackets are bilinear: determined by {1,1} in C3
    aut = [0, 2, 1]  # inversion automorphism of C3, commutes with trivial data
    relabelled = set()
    for b in sols:
        table = tuple(tuple(aut[b.bracket[aut[x]][aut[y]]] for y in range(3))
                      for x in range(3))
        relabelled.add(table)
    assert relabelled == {tuple(tuple(row) for row in b.bracket) for b in sols}


def test_category_braiding_stanza_roundtrip(tmp_path):
    """An explicit category_braiding stanza parses, validates, and the
    transport command accepts it."""
    base = deffile.parse(json.dumps({}))  # fresh sections built below
    wa = twisted_c2_weak_action()
    grading = GradingHom(wa, GroupHom(wa.target.p, wa.group, [0, 0]))
    sols = search_braidings(grading)
    nontrivial = next(b for b in sols if any(v for row in b.bracket for v in row))
    gcat = induced_g_action(wa)
    braiding = induce_braiding(nontrivial, gcat)

    sections = dict(
        groups=[deffile.group_stanza("c2", wa.group)],
        homs=[deffile.hom_stanza("zero", "c2", "c2", wa.target.boundary)],
        actions=[deffile.action_stanza("triv", "c2", "c2", wa.target.action)],
        crossed_modules=[deffile.crossed_module_stanza("cm", "c2", "c2",
                                                       "zero", "triv")],
        weak_actions=[deffile.weak_action_stanza("tw", "c2", "cm", wa)],
        g_categories=[{"id": "gc", "from_weak_action": "tw"}],
        braidings=[{"id": "br", "category_braiding": {
            "g_category": "gc",
            "degrees": list(braiding.grading.degrees),
            "components": [list(row) for row in braiding.components]}}],
    )
    doc = deffile.document_from_sections(**sections)
    for sid, path, rep in deffile.iter_validation(doc):
        assert rep.ok, f"{path}: {rep.summary()}"
    f = tmp_path / "cat_braiding.json"
    f.write_text(json.dumps(doc.emit()))
    assert cli_main(["validate", str(f)]) == 0
    assert cli_main(["transport", str(f), "--braiding", "br"]) == 0


def test_extract_cli_on_strictified_output(tmp_path):
    """The strictify output is an explicit categorical group; extraction on it
    works through the dense path (no source crossed module to compare)."""
    import os
    defs = os.path.join(os.path.dirname(__file__), os.pardir, "definitions")
    strict_file = tmp_path / "strict.json"
    assert cli_main(["strictify", os.path.join(defs, "c2_trivial.json"),
                     "--g-category", "c2_zero_cat", "--output", str(strict_file)]) == 0
    out_file = tmp_path / "extracted.json"
    assert cli_main(["extract", str(strict_file), "--g-category", "c2_zero_cat_strict",
                     "--output", str(out_file)]) == 0
    assert cli_main(["validate", str(out_file)]) == 0
    emitted = json.loads(out_file.read_text())
    cm = deffile.parse(emitted).crossed_modules["c2_zero_cat_strict_extracted"]
    # fiber group: morphisms into the unit of the strictified category
    assert cm.h.order == 4 and cm.p.order == 4
