#!/usr/bin/env python3
"""Regenerate the shipped definition-file corpus.

Each file is built with the library, round-tripped through the parser with
full validation, and written with stable formatting.  Run from the repository
root: ``python3 definitions/generate.py``.
"""

import json
import os
import sys

from gcat import deffile, groups
from gcat.groups import GroupHom, cyclic, trivial
from gcat.xmod import from_central_extension, from_normal_subgroup, \
    trivial_weak_action, weak_action_from_exact_sequence

HERE = os.path.dirname(os.path.abspath(__file__))

sys.path.insert(0, os.path.join(os.path.dirname(HERE), "tests"))
from helpers import (a4, a4_klein_elements, a4_mod_v4_projection, perm_parity, s3,
                     sign_hom, twisted_a4_section)  # noqa: E402


def write(name, sections):
    doc = deffile.document_from_sections(**sections)
    reparsed = deffile.parse(doc.emit())  # validates every stanza
    assert reparsed == doc
    path = os.path.join(HERE, name)
    with open(path, "w") as fh:
        json.dump(doc.emit(), fh, indent=1)
        fh.write("\n")
    print(f"wrote {path}")


def trivial_file():
    one = trivial()
    write("trivial.json", dict(
        groups=[deffile.group_stanza("one", one)],
        homs=[deffile.hom_stanza("id_one", "one", "one", groups.identity_hom(one))],
    ))


def c2_c4_central():
    c4, c2 = cyclic(4), cyclic(2)
    boundary = GroupHom(c4, c2, [0, 1, 0, 1])
    cm = from_central_extension(boundary, [0, 1])
    write("c2_c4_central.json", dict(
        groups=[deffile.group_stanza("c4", c4), deffile.group_stanza("c2", c2)],
        homs=[deffile.hom_stanza("mod2", "c4", "c2", boundary)],
        actions=[deffile.action_stanza("conj_via_section", "c2", "c4", cm.action)],
        crossed_modules=[deffile.crossed_module_stanza(
            "central", "c4", "c2", "mod2", "conj_via_section")],
    ))


def s3_c3():
    g = s3()
    sign = sign_hom(g)
    cm = from_normal_subgroup(g, [i for i, p in enumerate(g.permutations)
                                  if perm_parity(p) == 0])
    transposition = next(i for i, p in enumerate(g.permutations) if perm_parity(p) == 1)
    wa = weak_action_from_exact_sequence(sign, [g.identity, transposition])
    write("s3_c3.json", dict(
        groups=[deffile.group_stanza("s3", g), deffile.group_stanza("c3", cm.h),
                deffile.group_stanza("c2", wa.group)],
        homs=[deffile.hom_stanza("incl", "c3", "s3", cm.boundary),
              deffile.hom_stanza("sign", "s3", "c2", sign)],
        actions=[deffile.action_stanza("conj", "s3", "c3", cm.action)],
        crossed_modules=[deffile.crossed_module_stanza("c3_s3", "c3", "s3",
                                                       "incl", "conj")],
        weak_actions=[deffile.weak_action_stanza("conj_action", "c2", "c3_s3", wa)],
        g_categories=[{"id": "c3_s3_cat", "from_weak_action": "conj_action"}],
        gradings=[deffile.grading_stanza("sign_grading", "c3_s3", "sign",
                                         "conj_action")],
    ))


def a4_c3_twisted():
    g = a4()
    pi = a4_mod_v4_projection(g)
    wa = weak_action_from_exact_sequence(pi, twisted_a4_section(g, pi))
    cm = wa.target
    write("a4_c3_twisted.json", dict(
        groups=[deffile.group_stanza("a4", g), deffile.group_stanza("v4", cm.h),
                deffile.group_stanza("c3", wa.group)],
        homs=[deffile.hom_stanza("incl", "v4", "a4", cm.boundary),
              deffile.hom_stanza("proj", "a4", "c3", pi)],
        actions=[deffile.action_stanza("conj", "a4", "v4", cm.action)],
        crossed_modules=[deffile.crossed_module_stanza("v4_a4", "v4", "a4",
                                                       "incl", "conj")],
        weak_actions=[deffile.weak_action_stanza("twisted", "c3", "v4_a4", wa)],
        g_categories=[{"id": "v4_a4_cat", "from_weak_action": "twisted"}],
    ))


def c2_braiding_corpus():
    c2 = cyclic(2)
    one = trivial()
    zero = GroupHom(c2, c2, [0, 0])
    cm = __import__("gcat.xmod", fromlist=["CrossedModule"]).CrossedModule(
        c2, c2, zero, groups.trivial_action(c2, c2))
    wa_trivial = trivial_weak_action(one, cm)
    gr_trivial = GroupHom(c2, one, [0, 0])

    from test_gaction import twisted_c2_weak_action
    wa_twisted = twisted_c2_weak_action()
    gr_to_c2 = GroupHom(c2, c2, [0, 0])

    write("c2_trivial.json", dict(
        groups=[deffile.group_stanza("c2", c2), deffile.group_stanza("one", one)],
        homs=[deffile.hom_stanza("zero", "c2", "c2", zero),
              deffile.hom_stanza("gr_trivial", "c2", "one", gr_trivial),
              deffile.hom_stanza("gr_to_c2", "c2", "c2", gr_to_c2)],
        actions=[deffile.action_stanza("triv", "c2", "c2",
                                       groups.trivial_action(c2, c2))],
        crossed_modules=[deffile.crossed_module_stanza("c2_zero", "c2", "c2",
                                                       "zero", "triv")],
        weak_actions=[
            deffile.weak_action_stanza("no_action", "one", "c2_zero", wa_trivial),
            deffile.weak_action_stanza("twisted", "c2", "c2_zero", wa_twisted)],
        g_categories=[{"id": "c2_zero_cat", "from_weak_action": "twisted"}],
        gradings=[
            deffile.grading_stanza("trivial_grading", "c2_zero", "gr_trivial",
                                   "no_action"),
            deffile.grading_stanza("twisted_grading", "c2_zero", "gr_to_c2",
                                   "twisted")],
        braidings=[
            deffile.xmod_braiding_stanza("swap", "trivial_grading", [[0, 0], [0, 1]]),
            deffile.xmod_braiding_stanza("twisted_swap", "twisted_grading",
                                         [[0, 0], [0, 1]])],
    ))


if __name__ == "__main__":
    trivial_file()
    c2_c4_central()
    s3_c3()
    a4_c3_twisted()
    c2_braiding_corpus()
