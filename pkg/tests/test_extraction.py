import pytest

from gcat.extraction import (check_weak_equivalence, extract_crossed_module,
                             extract_strict_action, validate_strict_categorical_group)
from gcat.gaction import categorical_group, induced_g_action
from gcat.groups import GroupHom, cyclic, find_isomorphism, quaternion, trivial, trivial_action
from gcat.strictify import strictify
from gcat.xmod import (CrossedModule, from_central_extension, from_normal_subgroup,
                       validate_weak_action, weak_action_from_exact_sequence)
from gcat import groups

from helpers import a4, a4_klein_elements, a4_mod_v4_projection, perm_parity, s3, sign_hom, \
    twisted_a4_section
from test_gaction import c2_c2_zero_xmod, twisted_c2_weak_action


def corpus():
    """Crossed modules with constituent orders <= 24."""
    out = [c2_c2_zero_xmod()]
    c2 = cyclic(2)
    out.append(from_normal_subgroup(c2, [0, 1]))  # (C2, C2, id)
    g = s3()
    out.append(from_normal_subgroup(g, [i for i, p in enumerate(g.permutations)
                                        if perm_parity(p) == 0]))
    c4 = cyclic(4)
    out.append(from_central_extension(GroupHom(c4, c2, [0, 1, 0, 1]), [0, 1]))
    a4g = a4()
    out.append(from_normal_subgroup(a4g, a4_klein_elements(a4g)))
    q8 = quaternion()
    quot, proj = groups.cokernel(GroupHom(c2, q8, [0, 1]))
    out.append(from_central_extension(
        proj, [next(x for x in q8.elements if proj(x) == v) for v in quot.elements]))
    return out


def test_categorical_groups_are_strict_categorical_groups():
    for cm in corpus():
        cat = categorical_group(cm)
        rep = validate_strict_categorical_group(cat)
        assert rep.ok, rep.summary()


def test_discrete_categorical_group_has_trivial_fiber():
    c3 = cyclic(3)
    one = trivial()
    cm = CrossedModule(one, c3, GroupHom(one, c3, [c3.identity]), trivial_action(c3, one))
    ext = extract_crossed_module(categorical_group(cm))
    assert ext.xmod.h.order == 1
    assert ext.xmod.p.order == 3


@pytest.mark.parametrize("idx", range(6))
def test_roundtrip_extraction_isomorphic(idx):
    cm = corpus()[idx]
    ext = extract_crossed_module(categorical_group(cm))
    assert ext.xmod.validate().ok
    # isomorphic on both layers, as crossed modules
    rep = check_weak_equivalence(cm, ext.xmod)
    assert rep.ok
    assert find_isomorphism(cm.h, ext.xmod.h) is not None
    assert find_isomorphism(cm.p, ext.xmod.p) is not None
    assert rep.morphism is not None


def test_weak_equivalence_self(idx=0):
    cm = corpus()[idx]
    rep = check_weak_equivalence(cm, cm)
    assert rep.ok and rep.morphism is not None


def test_weak_equivalence_detects_difference():
    c2 = cyclic(2)
    zero = c2_c2_zero_xmod()
    ident = from_normal_subgroup(c2, [0, 1])
    rep = check_weak_equivalence(zero, ident)
    assert not rep.ok  # kernels C2 vs trivial
    assert rep.kernel_iso is None


def test_extraction_from_twisted_c2_strictification():
    wa = twisted_c2_weak_action()
    gcat = induced_g_action(wa)
    st = strictify(gcat)
    ext = extract_crossed_module(st)
    assert ext.xmod.validate().ok
    extracted_action = extract_strict_action(st, ext)
    rep = validate_weak_action(extracted_action)
    assert rep.ok, rep.summary()
    assert extracted_action.is_strict()
    # weakly equivalent to the original
    weq = check_weak_equivalence(wa.target, ext.xmod)
    assert weq.ok


def test_strictification_weak_equivalence_corpus():
    """Original crossed module vs extraction of its bounded strictification."""
    cases = []
    g = s3()
    sign = sign_hom(g)
    transposition = next(i for i, p in enumerate(g.permutations) if perm_parity(p) == 1)
    cases.append(weak_action_from_exact_sequence(sign, [g.identity, transposition]))
    cases.append(twisted_c2_weak_action())
    for wa in cases:
        st = strictify(induced_g_action(wa), bound=4096, morphism_bound=4096)
        ext = extract_crossed_module(st)
        rep = check_weak_equivalence(wa.target, ext.xmod)
        assert rep.ok, rep.summary()


def test_extraction_a4_strictification_kernel_cokernel():
    """The big twisted example: extraction works without dense tables; the
    connecting-morphism search is skipped above the capacity bound."""
    g = a4()
    pi = a4_mod_v4_projection(g)
    wa = weak_action_from_exact_sequence(pi, twisted_a4_section(g, pi))
    st = strictify(induced_g_action(wa), bound=4096, morphism_bound=65536)
    assert len(st.objects) == 192
    ext = extract_crossed_module(st)
    assert ext.xmod.p.order == 192
    assert ext.xmod.h.order == 64
    rep = check_weak_equivalence(wa.target, ext.xmod)
    assert rep.kernel_iso is not None and rep.cokernel_iso is not None
    assert not rep.morphism_searched
    assert "not searched" in rep.summary()
