"""Exact, exhaustive verification of group actions on finite monoidal
categories: finite groups, crossed modules, categorical groups, coherence
checking, strictification, gradings and braidings."""

from .report import CapacityError, Report, StructuralError, Violation
from .groups import (AutomorphismAction, FiniteGroup, GroupHom, cokernel, cyclic,
                     dihedral, direct_product, find_isomorphism, kernel, klein_four,
                     quaternion, subgroup, symmetric, alternating, trivial,
                     validate_group)
from .xmod import (CrossedModule, WeakGAction, XModMorphism, XModNatTransf,
                   from_central_extension, from_normal_subgroup, trivial_weak_action,
                   validate_crossed_module, validate_weak_action,
                   weak_action_from_exact_sequence)
from .cat import (FiniteCategory, MonoidalFunctor, MonoidalNatIso,
                  StrictMonoidalCategory, compose_functors, identity_functor,
                  unitalize)
from .gaction import (CategoricalGroup, GFunctor, GNatTransf, MonoidalGCategory,
                      categorical_group, check_g_functor, check_g_nat_transf,
                      induced_g_action, trivial_g_action,
                      validate_monoidal_g_category)
from .strictify import (GMorphism, GObject, Strictification, act, embed,
                        embed_morphism, enumerate_morphisms, enumerate_objects,
                        project, project_morphism, strictify, strictify_g_functor,
                        tensor_objects, tensor_morphisms, unit_object)
from .braiding import (CategoryBraiding, CrossedModuleBraiding, GGrading, GradingHom,
                       braided_functor_report, induce_braiding, search_braidings,
                       transport_braiding, validate_category_braiding,
                       validate_grading, validate_grading_hom, validate_xmod_braiding)
from .extraction import (check_weak_equivalence, extract_crossed_module,
                         extract_strict_action, validate_strict_categorical_group)

__version__ = "0.1.0"
