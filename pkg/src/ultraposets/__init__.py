"""Finite ultraposets, prime spectra of distributive lattices, and exhaustive checks of their duality."""

from .axioms import AxiomReport, HomPoset, check_axioms, hom_poset, is_left_ultrafunctor, is_right_ultrafunctor, is_ultrafunctor
from .beta import (
    UltraFamily,
    Ultrafilter,
    beta,
    enumerate_ultrafilters,
    extend_fip,
    gamma,
    is_ultrafilter,
    kleisli_pair,
    principal,
    pushforward,
    restrict,
)
from .corpus import lattice_corpus, posets_up_to_iso, ultraposet_corpus
from .duality import (
    counit,
    eta,
    galois,
    galois_inv,
    is_zero_dimensional,
    los_hom_check,
    mod_on_hom,
    mod_spectrum,
    omega,
    omega_u,
    priestley_check,
    reconstruct_idl,
    stone_check,
    strict_assoc_check,
)
from .errors import (
    BudgetExceeded,
    CycleError,
    FormatError,
    IsoFailure,
    LosFailure,
    NotALattice,
    NotDistributive,
    NotMonotone,
    ShapeError,
    TheoremViolation,
    UltraposetError,
)
from .order import (
    DistLattice,
    Ideal,
    LatticeHom,
    MonotoneMap,
    Poset,
    boolean,
    chain,
    downset_lattice,
    downsets,
    filters,
    ideals,
    lattice_homs,
    prime_ideals,
    prime_separation,
    set_lattice,
    two,
    upsets,
    validate_dist_lattice,
    validate_poset,
)
from .structures import (
    CanonicalUltraposet,
    CoproductUltraposet,
    DiscreteUltraposet,
    ModSpectrum,
    PresheafUltraposet,
    ProductUltraposet,
    Ultraposet,
    pairing,
)
from .suites import run_suite
from .topology import ClosedPair, clc, clcd, cld, closed_sets, patch_topology, primitive_pairs

__version__ = "0.1.0"

__all__ = [
    "AxiomReport",
    "beta",
    "boolean",
    "BudgetExceeded",
    "CanonicalUltraposet",
    "chain",
    "check_axioms",
    "clc",
    "clcd",
    "cld",
    "closed_sets",
    "ClosedPair",
    "CoproductUltraposet",
    "counit",
    "CycleError",
    "DiscreteUltraposet",
    "DistLattice",
    "downset_lattice",
    "downsets",
    "enumerate_ultrafilters",
    "eta",
    "extend_fip",
    "filters",
    "FormatError",
    "galois",
    "galois_inv",
    "gamma",
    "hom_poset",
    "HomPoset",
    "Ideal",
    "ideals",
    "is_left_ultrafunctor",
    "is_right_ultrafunctor",
    "is_ultrafilter",
    "is_ultrafunctor",
    "is_zero_dimensional",
    "IsoFailure",
    "kleisli_pair",
    "lattice_corpus",
    "lattice_homs",
    "LatticeHom",
    "los_hom_check",
    "LosFailure",
    "mod_on_hom",
    "mod_spectrum",
    "ModSpectrum",
    "MonotoneMap",
    "NotALattice",
    "NotDistributive",
    "NotMonotone",
    "omega",
    "omega_u",
    "pairing",
    "patch_topology",
    "Poset",
    "posets_up_to_iso",
    "PresheafUltraposet",
    "priestley_check",
    "prime_ideals",
    "prime_separation",
    "primitive_pairs",
    "principal",
    "ProductUltraposet",
    "pushforward",
    "reconstruct_idl",
    "restrict",
    "run_suite",
    "set_lattice",
    "ShapeError",
    "stone_check",
    "strict_assoc_check",
    "TheoremViolation",
    "two",
    "UltraFamily",
    "Ultrafilter",
    "Ultraposet",
    "ultraposet_corpus",
    "UltraposetError",
    "upsets",
    "validate_dist_lattice",
    "validate_poset",
]
