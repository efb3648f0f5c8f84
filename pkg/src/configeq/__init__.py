"""Configuration sets of groups, golden systems and bounded equivalence search."""
from .configs import (ONE_SIDED, TWO_SIDED, ConfigurationPair, ConfigurationSet, block_stabilizer,
                      check_correspondence_implications, check_translation_invariance,
                      configuration_set, normal_subset_check, project_right, project_two_sided)
from .equivalence import (SearchBounds, Verdict, equivalent_finite, match_pair,
                          replay_certificate)
from .golden import (GoldenSystem, QuotientMap, SubnormalSeries, direct_product_golden,
                     finite_golden_system, free_product_golden, golden_pair_from_system,
                     polycyclic_facts, polycyclic_golden_system, polynomial_type_golden,
                     refine_for_relators, subnormal_series_golden, verify_axioms,
                     verify_golden_property)
from .groups import (DirectProduct, FiniteGroup, FreeProduct, Group, PolycyclicGroup, ball,
                     load_group)
from .partitions import Partition, sigma_partition
from .words import RepresentativePair, concat, evaluate, invert, parse_pair

__version__ = "0.1.0"
