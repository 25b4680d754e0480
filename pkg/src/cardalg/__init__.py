"""cardalg: symbolic cardinal arithmetic with derivation traces, plus
finite-ring and abelian-group verification at desk scale."""

from .ordinal import OrdKind, Ordinal, classify as ord_classify, \
    compare as ord_compare, succ as ord_succ
from .cardinal import (ALEPH0, Aleph, Cardinal, Cmp, DomainError, Exp, Finite,
                       Mode, PowSet, Unresolved, card_add, card_compare,
                       card_directsum, card_finsets, card_mul, card_pow,
                       card_prod_family, card_sum_family, gch_normalize,
                       render)
from .algebra import (card_fraction_ring, card_monoid_ring, card_poly_ring,
                      card_power_series)
from .bijection import (FinSupportSeq, cantor_pair, cantor_unpair,
                        finset_decode, finset_encode, finsupp_decode,
                        finsupp_encode)
from .finring import (CapExceeded, Ideal, IdealizeSpec, ModuleSpec,
                      MonoidRingSpec, MonoidTable, PolyQuot, Product,
                      RingError, RingInstance, RingSpec, Zmod, annihilator,
                      cyclic_module, depth_zero, effective_ring,
                      gen_module_surjection, hom_criterion, idealize,
                      idealization_subring_law, ideals, is_balanced,
                      is_local, is_self_injective, local_decomposition,
                      maximal_ideals, monoid_ring, ring_build, spec_str,
                      total_fraction_ring, units_and_zero_divisors,
                      unital_subrings)
from .abgroup import (Classification, FinAbGroup, FiniteAtom, FreeAtom,
                      GroupSpec, PruferAtom, SumInfAtom, Witness,
                      classify as group_classify, group_str,
                      has_proper_same_card_subgroup, prufer_truncation_check,
                      same_card_subgroup_witness, subgroups, validate_witness)
from .exprlang import ExprAST, ParseError, parse, parse_ordinal, render as render_expr
from .minilang import parse_group_spec, parse_ring_spec
from .evaluate import evaluate, replay, replay_ok
from .trace import RULES, Trace
from .corpus import CorpusConfig, run_corpus

__version__ = "0.1.0"
