import pytest

from gcat import groups
from gcat.groups import GroupHom, StructuralError, cyclic, direct_product, quaternion
from gcat.xmod import (CrossedModule, WeakGAction, XModNatTransf, from_central_extension,
                       from_normal_subgroup, trivial_weak_action, validate_crossed_module,
                       validate_weak_action, weak_action_from_exact_sequence, xmod_compose)

from helpers import (a4, a4_klein_elements, a4_mod_v4_projection, perm_parity, s3,
                     sign_hom, twisted_a4_section)


@pytest.fixture(scope="module")
def s3_c3():
    g = s3()
    c3 = [i for i, p in enumerate(g.permutations) if perm_parity(p) == 0]
    return from_normal_subgroup(g, c3)


@pytest.fixture(scope="module")
def a4_v4():
    g = a4()
    return from_normal_subgroup(g, a4_klein_elements(g))


def test_normal_subgroup_construction_valid(s3_c3):
    assert validate_crossed_module(s3_c3).ok
    quot, _ = groups.cokernel(s3_c3.boundary)
    assert quot.order == 2


def test_full_subgroup_gives_identity_boundary():
    g = s3()
    cm = from_normal_subgroup(g, list(g.elements))
    assert validate_crossed_module(cm).ok
    ker, _ = groups.kernel(cm.boundary)
    assert ker.order == 1
    assert cm.boundary.is_bijective()


def test_non_normal_subgroup_rejected():
    g = s3()
    transposition = next(i for i, p in enumerate(g.permutations) if perm_parity(p) == 1)
    with pytest.raises(StructuralError, match="witness"):
        from_normal_subgroup(g, [g.identity, transposition])


def test_corrupted_action_reports_peiffer_or_equivariance(s3_c3):
    act = [list(row) for row in s3_c3.action.act]
    # swap two values inside one automorphism row; keeps bijectivity
    p = 1
    act[p][1], act[p][2] = act[p][2], act[p][1]
    bad = CrossedModule(s3_c3.h, s3_c3.p,
                        s3_c3.boundary,
                        groups.AutomorphismAction(s3_c3.p, s3_c3.h, act, check=False))
    rep = bad.validate()
    assert not rep.ok
    families = {v.family for v in rep.violations}
    assert families & {"xmod.peiffer", "xmod.equivariance", "xmod.action.automorphism",
                       "xmod.action.compose", "xmod.action.unit"}


def test_central_extension_c2_c4_c2():
    c4, c2 = cyclic(4), cyclic(2)
    boundary = GroupHom(c4, c2, [0, 1, 0, 1])
    cm = from_central_extension(boundary, section=[0, 1])
    assert validate_crossed_module(cm).ok
    # C4 abelian: action is trivial
    assert all(cm.act(g, x) == x for g in c2.elements for x in c4.elements)


def test_central_extension_split_case_trivial_action():
    a, p = cyclic(2), cyclic(3)
    h = direct_product(a, p)
    boundary = GroupHom(h, p, [x % p.order for x in range(h.order)])
    section = [next(x for x in range(h.order) if boundary(x) == g) for g in p.elements]
    cm = from_central_extension(boundary, section)
    assert validate_crossed_module(cm).ok
    assert all(cm.act(g, x) == x for g in p.elements for x in h.elements)


def test_central_extension_q8_over_v4():
    q8 = quaternion()
    minus_one = 1  # id order: 1,-1,i,-i,j,-j,k,-k
    quot, proj = groups.cokernel(GroupHom(cyclic(2), q8, [0, minus_one]))
    cm = from_central_extension(proj, section=[next(x for x in q8.elements if proj(x) == g)
                                               for g in quot.elements])
    assert validate_crossed_module(cm).ok
    # conjugation action of the quotient on Q8 is nontrivial
    assert any(cm.act(g, x) != x for g in quot.elements for x in q8.elements)


def test_central_extension_rejects_noncentral_kernel():
    g = s3()
    boundary = sign_hom(g)  # kernel C3 is not central in S3
    section = [next(x for x in g.elements if boundary(x) == v) for v in range(2)]
    with pytest.raises(StructuralError, match="central"):
        from_central_extension(boundary, section)


def test_central_extension_rejects_bad_section():
    c4, c2 = cyclic(4), cyclic(2)
    boundary = GroupHom(c4, c2, [0, 1, 0, 1])
    with pytest.raises(StructuralError, match="section"):
        from_central_extension(boundary, section=[0, 2])


def test_weak_action_involutive_section_is_strict():
    g = s3()
    sign = sign_hom(g)
    transposition = next(i for i, p in enumerate(g.permutations) if perm_parity(p) == 1)
    wa = weak_action_from_exact_sequence(sign, [g.identity, transposition])
    assert validate_weak_action(wa).ok
    assert wa.is_strict()


def test_weak_action_split_homomorphic_section_is_strict():
    a, q = cyclic(3), cyclic(2)
    p = direct_product(a, q)
    proj = GroupHom(p, q, [x % q.order for x in range(p.order)])
    section = [0, 1]  # (0,0) and (0,1): a subgroup section
    wa = weak_action_from_exact_sequence(proj, section)
    assert validate_weak_action(wa).ok
    assert wa.is_strict()


@pytest.fixture(scope="module")
def a4_twisted():
    g = a4()
    pi = a4_mod_v4_projection(g)
    return weak_action_from_exact_sequence(pi, twisted_a4_section(g, pi))


def test_weak_action_twisted_a4_valid_and_nonstrict(a4_twisted):
    rep = validate_weak_action(a4_twisted)
    assert rep.ok, rep.summary()
    assert not a4_twisted.is_strict()
    # nontriviality is witnessed at a 3-cycle argument
    g = a4_twisted.target.p
    theta = a4_twisted.theta(1, 1)
    witness = [x for x in g.elements if theta(x) != a4_twisted.target.h.identity]
    assert witness


def test_weak_action_mutation_breaks_cocycle(a4_twisted):
    wa = a4_twisted
    e_const = XModNatTransf(wa.theta(1, 1).src, wa.theta(1, 1).dst,
                            [wa.target.h.identity] * wa.target.p.order)
    transfs = [list(row) for row in wa.transfs]
    transfs[1][1] = e_const
    bad = WeakGAction(wa.group, wa.target, wa.morphisms, transfs)
    rep = validate_weak_action(bad)
    assert not rep.ok
    families = {v.family for v in rep.violations}
    assert "wact.cocycle" in families or any(f.endswith("target") for f in families)


def test_trivial_group_weak_action_vacuously_valid(s3_c3):
    wa = trivial_weak_action(groups.trivial(), s3_c3)
    assert validate_weak_action(wa).ok
    assert wa.is_strict()


def test_constructor_validator_agreement_small_corpus():
    """Every constructor output passes its validator (groups of order <= 12)."""
    cases = []
    g = s3()
    cases.append(from_normal_subgroup(g, [i for i, p in enumerate(g.permutations)
                                          if perm_parity(p) == 0]))
    cases.append(from_normal_subgroup(g, list(g.elements)))
    cases.append(from_normal_subgroup(cyclic(4), [0, 2]))
    d4 = groups.dihedral(4)
    rot2 = next(i for i, p in enumerate(d4.permutations) if p == (2, 3, 0, 1))
    cases.append(from_normal_subgroup(d4, [d4.identity, rot2]))
    a4g = a4()
    cases.append(from_normal_subgroup(a4g, a4_klein_elements(a4g)))
    c4, c2 = cyclic(4), cyclic(2)
    cases.append(from_central_extension(GroupHom(c4, c2, [0, 1, 0, 1]), [0, 1]))
    q8 = quaternion()
    quot, proj = groups.cokernel(GroupHom(c2, q8, [0, 1]))
    cases.append(from_central_extension(
        proj, [next(x for x in q8.elements if proj(x) == v) for v in quot.elements]))
    for cm in cases:
        assert validate_crossed_module(cm).ok


def test_central_extension_section_independence():
    # two different sections of C4 -> C2 give map-for-map equal actions
    c4, c2 = cyclic(4), cyclic(2)
    boundary = GroupHom(c4, c2, [0, 1, 0, 1])
    cm1 = from_central_extension(boundary, [0, 1])
    cm2 = from_central_extension(boundary, [2, 3])
    assert cm1.action == cm2.action


def test_weak_action_with_trivial_group_all_identities(s3_c3):
    wa = trivial_weak_action(groups.trivial(), s3_c3)
    assert wa.morphisms[0].is_identity()
    assert wa.transfs[0][0].is_constant_identity()


def test_xmod_compose_endpoints(s3_c3):
    from gcat.xmod import xmod_identity
    ident = xmod_identity(s3_c3)
    comp = xmod_compose(ident, ident)
    assert comp.alpha.mapping == ident.alpha.mapping
    assert comp.validate().ok
