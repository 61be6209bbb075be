"""quiverforge: exact computation with quivers, truncated completed path
algebras, hyperpotentials, Ginzburg dg-algebras, Jacobian algebras,
fractional Calabi-Yau lattices, mesh categories and rank-2 cluster algebras.

Path composition is LEFT TO RIGHT throughout: in a path ``a1 a2``, the
target of ``a1`` is the source of ``a2``.
"""

from .fields import QQ, GF, Field, Scalar, field_from_name
from .quiver import (Arrow, Path, Quiver, cycle_quiver, emit_dot,
                     emit_quiver_json, g2_quiver, loop_quiver,
                     parse_quiver_json)
from .algebra import (AlgebraElement, Substitution, TensorElement,
                      apply_substitution, commutator, cyclic_derivative,
                      diamond, double_derivation, norm_map, sigma)
from .hyperpotential import (Hyperpotential, Potential, check_hyperpotential,
                             from_potential, transport,
                             verify_right_equivalence,
                             verify_weak_right_equivalence)
from .ginzburg import DgPresentation, GradedQuiver, build_ginzburg, check_d_squared, scaling_isomorphism
from .hochschild import (GradedSubspaceBasis, connes_B, hh0_basis, hh1_basis,
                         hochschild_table, in_image_of_B)
from .jacobian import (CyclePotentialAnalysis, QuotientBasis,
                       analyze_cycle_potential, analyze_potential, g2_algebra,
                       g2_hyperpotential, g2_potential, jacobian_dimensions,
                       truncated_cycle_algebra, truncated_cycle_hyperpotential,
                       truncated_cycle_potential)
from .cy_lattice import (CYLattice, cy_dimensions, dynkin_cy_data, hom_finite,
                         member, solve_ratio)
from .dynkin import DynkinDiagram
from .mesh import (MeshHomTables, OrbitCategory, OrbitSpec, TranslationWindow,
                   emit_ar_quiver_dot, hom_dim_universal, knitting_hom_dim,
                   stmod_count)
from .cluster import (ClusterSeed, enumerate_variables, exchange_pattern,
                      g2_seed, laurent_check, mutate)

__version__ = "0.1.0"
