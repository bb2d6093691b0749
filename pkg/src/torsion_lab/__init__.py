"""torsion-lab: torsion-simplicity, torsion radicals, and McCoy-rank pipelines
for concrete finite-length module categories, with exact arithmetic throughout.
"""

from .abelian import (PresentedModule, PrimeSet, SpClosedSubset, Subobject,
                      associated_primes, cyclic_module, direct_sum_module,
                      enumerate_submodules, finite_abelian_modules, hom_group,
                      hom_is_zero, primary_component, quotient,
                      smith_normal_form)
from .engine import (AbelianHandle, Morph, QuiverHandle, SimplicityReport,
                     TorsionPartSet, injective_criterion_check, is_essential,
                     is_torsion_simple, torsion_parts,
                     torsion_radical_generated,
                     torsionfree_coradical_cogenerated, trace, type_of,
                     unique_simple_factor, verify_torsion_pair_axioms)
from .errors import (ContradictionError, InputError, TorsionLabError,
                     UnsupportedRingError)
from .mccoy import (ConormalReport, DeterminantalProfile, RingMatrix,
                    check_radical_lemma, conormal_presentation,
                    determinantal_ideal, hom_I_to_quotient, mccoy_rank,
                    nilpotent_minors_check, nullvector_exhaustive)
from .quiver import (Quiver, QuiverRep, SubRep, a_n_quiver, composition_factors,
                     enumerate_subreps, hom_space, quotient_rep, simple_rep)
from .rings import (Ideal, Ring, RingElem, ann_element, annihilator,
                    ideal_membership, ideal_ops, is_nilpotent,
                    radical_membership, ring_arith)

__version__ = "0.1.0"
