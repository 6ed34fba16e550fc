"""Finite subresiduated lattices, their implicative subreducts, and the matching calculi."""
from .algebra import (FiniteAlgebra, NotAnOrder, find_isomorphism, is_homomorphism, load_algebra,
                      load_lattice, loads_algebra, natural_order)
from .calculi import (CALCULI, CalculusSpec, Proof, ProofBuilder, bounded_search, calculus,
                      check_proof, deduction_transform, fixture_suite, load_proof)
from .classes import (CLASS_TAGS, ClassVerdict, box_set, check_alg_plus, check_alg_r4star,
                      check_box_hilbert, check_class, check_sha, check_shrl_appendix, check_shs,
                      check_srl, check_srlbs, check_srs)
from .enumerate import enumerate_class
from .filters import (FilterFamily, UpsetAlgebra, all_implicative_filters, bracket,
                      build_upset_algebra, generated_implicative_filter, j_map, separate,
                      verify_representation)
from .order import (FiniteLattice, FinitePoset, SizeCapExceeded, generated_sublattice,
                    is_distributive, is_sublattice, upsets)
from .pairs import AlgebraPair, NoMaximum, build_implication, build_srs_pair, extract_pair, two_srl
from .semantics import (Countermodel, Valuation, entails, evaluate, find_countermodel,
                        fmp_shrink_sha, fmp_shrink_srl, fmp_shrink_srlbs)
from .syntax import Formula, ParseError, box_formula, match_scheme, parse, subformulas, to_str

__version__ = "0.1.0"
