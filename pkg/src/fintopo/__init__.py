"""Finite topology workbench: generalized closed sets, SC*-normality and
exhaustive claim checking over small labeled spaces."""

from .core import (FiniteSpace, GroundSet, SpaceFormatError, TopologyError, closure, interior,
                   load_space, parse_space, serialize, validate_topology)
from .operators import (ClosureKind, SetClass, SubsetClassification, classify_subset, family,
                        gen_closure, gen_interior, gscstar_open_via_lemma53, is_scstar_nbd)
from .separation import SeparationProfile, separation_profile, thm24_conditions, thm51_conditions
from .maps import (MapClassification, SpaceMap, characterization_audit, compose, load_map,
                   map_profile, parse_map)
from .enumeration import count_topologies, enumerate_maps, enumerate_topologies

__version__ = "0.1.0"
