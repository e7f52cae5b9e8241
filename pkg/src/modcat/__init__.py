"""modcat: exact bookkeeping for based rings, module classes and fusion tables.

The package computes, in exact arithmetic only, the finite combinatorial
shadows of semisimple module 2-categories: based rings and their bounded
module and homomorphism enumerations, connected-component analysis of
skeletons, module-class counts over pointed categories, deformation
cohomology dimensions, and the product tables of the three worked families
(real closed base, prime fields, braided cyclic gradings).
"""

from .fields import (CyclotomicField, CycElem, FpElem, PrimeField, QQ,
                     RationalField, cyclotomic_polynomial, field_from_code)
from .linalg import Matrix, kernel_basis, rank, rref, solve
from .algebras import (NoUnit, NotAssociative as AlgebraNotAssociative,
                       NotCommutative, StructureConstantAlgebra,
                       split_commutative_algebra)
from .fieldprofile import (BASE, COMPLEXIFICATION, QUATERNION,
                           DivisionAlgebraClass, FieldKind, FieldProfile,
                           NotInBrauerGroup, UnsupportedProfile, alg_closed,
                           brauer_add, classify_finite_separable_closure,
                           division_algebra_classes, finite, finite_ext,
                           profile_from_code, rationals, real_closed,
                           separably_closed_nonperfect)
from .basedring import (BasedRingData, ValidatedRing, WeakBasedCertificate,
                        canonical_form, fibonacci_ring,
                        find_weak_based_involutions, group_ring,
                        rings_equivalent, tau, trivial_ring,
                        validate_zplus_ring)
from .zmodule import (EnumerationBounds, RingHomCandidate, ValidatedModule,
                      ZPlusModuleData, direct_sum, enumerate_irreducible_modules,
                      enumerate_ring_homs, is_indecomposable, is_irreducible,
                      regular_module, validate_module)
from .skeleton import (CompactnessReport, TwoCatSkeleton, ValidatedSkeleton,
                       compactness_report, decompose_object,
                       mod_pointed_skeleton, mod_real_skeleton, pi0,
                       truncated_family_2vect_fp, validate_skeleton)
from .pointed import (BraidingParam, FiniteAbelianGroup, H2Descriptor,
                      ModuleClass, PointedCatData, Subgroup,
                      braidings_on_cyclic, h2_of_abelian, module_classes,
                      square_class_witnesses, subgroups)
from .dy import (DYComplex, PointedFunctorData, SeparabilityDiagnostic,
                 build_dy_complex, dy_cohomology_dims, separability_diagnostic)
from .fusion2 import (Fusion2Product, GradedAlgebraObject,
                      braided_tensor_algebra, coefficient_field,
                      finite_field_tensor, graded_group_algebra,
                      pointed_braided_product, rational_division_algebra,
                      real_division_tensor, realize_module_class,
                      unit_algebra_object)
from .errors import GuardError, ModcatError, SizeGuardExceeded, ValidationError

__version__ = "0.1.0"
