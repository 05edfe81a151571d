"""Exact computations for Lie-Yamaguti algebras, their representations and
(3,4,4,5)-cohomology, 2-term L-infinity triple algebras and crossed modules."""

from .exactla import DimensionError, Matrix, Q, Subspace, kernel_basis, image_basis, rank
from .lya import (InvalidInput, LYAlgebra, LeibnizAlgebra, LieAlgebra, ReductiveDecomposition,
                  adl_homomorphism_report, fundamental_leibniz, leibniz_to_lya, lie_as_leibniz,
                  lie_to_lya, omni_lie, reductive_to_lya, verify_leibniz, verify_lie, verify_ly)
from .rep import LYAction, Representation, adjoint_rep, check_action, semidirect, verify_rep
from .cochain import (Cochain, CochainPair, CochainQuadruple, SizeLimitError, SkewSignature,
                      delta2, delta3, yamaguti_delta, yamaguti_signature)
from .cohomology import (h3445_dims, is_coboundary_3445, is_cocycle_3445, yamaguti_h_dims)
from .twoterm import (TwoTermAlgebra, TwoTermHomomorphism, compose_homomorphisms,
                      data_from_skeletal, skeletal_from_data, verify_homomorphism,
                      verify_two_term)
from .crossed import (CrossedExtension, CrossedModuleLYA, LeibnizCrossedModule,
                      ReductiveCrossedModule, crossed_from_leibniz, crossed_from_reductive,
                      crossed_from_strict, extract_theta, section_independence,
                      strict_from_crossed, verify_crossed_module)
from .report import AxiomEntry, AxiomReport
