"""Exact computational algebra for finite left commutative rngs.

Carriers and multiplication live in explicit tables; every structural law,
primality criterion, and topological statement is verified by exhaustive
scan, so each answer doubles as a machine-checked certificate.
"""

__version__ = "0.1.0"

from .errors import InvariantViolation, StructureError
from .carrier import FiniteCarrier, build_carrier, check_carrier
from .core import (AxiomReport, Decomposition, LcrTable, UNDEFINED, Verdict,
                   assemble_lcr, bar_units, decompose, find_bar_units, halo_of,
                   is_nilpotent, local_power, odd_component, power, quotient,
                   verify_lcr)
from .commutative import (CommutativeRingTable, RingHom, check_ring,
                          classical_is_prime, classical_nilradical,
                          classical_radical, classical_spectrum,
                          classical_zariski, even_ring, halo_ring,
                          quotient_ring_by_halo, reduction_hom, ring_zmod,
                          ring_zmod_product, zero_ring)
from .ideals import (IdealSet, PrimeCriteriaReport, Spectrum, enumerate_ideals,
                     ideal_generated, intersection_of_primes, is_ideal,
                     nilradical, prime_criteria_report, radical, spectrum)
from .spaces import (FiniteTopology, PointMap, check_closed_axioms,
                     homeomorphism_failure, is_continuous, make_topology,
                     quotient_topology, subspace)
from .topology import (OddQuotient, even_odd_subspaces, odd_quotient, phi0,
                       phi1, vanishing, zariski)
from .homs import (RngHom as LcrHom, compose, enumerate_homs,
                   find_isomorphism, identity_hom, induced_quotient_hom,
                   pullback, verify_functoriality, verify_hom,
                   verify_pullback_equations)
from .build import halo_extension, ring_as_lcr, small_rng_search
from .replay import CheckResult, replay_all
from .dsl import (ParseError, VerificationError, Workspace, parse,
                  workspace_from_json, workspace_to_json)

__all__ = [
    "AxiomReport", "CheckResult", "CommutativeRingTable", "Decomposition",
    "FiniteCarrier", "FiniteTopology", "IdealSet", "InvariantViolation",
    "LcrHom", "LcrTable", "OddQuotient", "ParseError", "PointMap",
    "PrimeCriteriaReport", "RingHom", "Spectrum", "StructureError",
    "UNDEFINED", "Verdict", "VerificationError", "Workspace", "assemble_lcr",
    "bar_units", "build_carrier", "check_carrier", "check_closed_axioms",
    "check_ring", "classical_is_prime", "classical_nilradical",
    "classical_radical", "classical_spectrum", "classical_zariski", "compose",
    "decompose", "enumerate_homs", "enumerate_ideals", "even_odd_subspaces",
    "even_ring", "find_bar_units", "find_isomorphism", "halo_extension",
    "halo_of", "halo_ring", "homeomorphism_failure", "ideal_generated",
    "identity_hom", "induced_quotient_hom", "intersection_of_primes",
    "is_continuous", "is_ideal", "is_nilpotent", "local_power",
    "make_topology", "nilradical", "odd_component", "odd_quotient", "parse",
    "phi0", "phi1", "power", "prime_criteria_report", "pullback", "quotient",
    "quotient_ring_by_halo", "quotient_topology", "radical", "reduction_hom",
    "replay_all", "ring_as_lcr", "ring_zmod", "ring_zmod_product",
    "small_rng_search", "spectrum", "subspace", "vanishing",
    "verify_functoriality", "verify_hom", "verify_lcr",
    "verify_pullback_equations", "workspace_from_json", "workspace_to_json",
    "zariski", "zero_ring",
]
