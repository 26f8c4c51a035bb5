"""S-prime and S-maximal ideals in trivial ring extensions A x| M.

Finite rings (Z/n, products, Z/n x| M) are handled by exhaustive but
vectorized enumeration; Z and Z x| M by exact lattice arithmetic.
"""

from .errors import (
    AlgebraError,
    CardinalityCapExceeded,
    InternalError,
    InvalidElement,
    InvalidModule,
    InvalidMultiplicativeSet,
    InvalidRing,
    NotAnIdeal,
    ParseError,
    PreconditionViolated,
    Unsupported,
)
from .finite_ring import (
    CARDINALITY_LIMIT,
    Integers,
    ProductRing,
    ResidueRing,
    enumerate_elements,
    make_product_ring,
    make_residue_ring,
    nilradical,
    units,
)
from .finite_module import (
    ModuleDescriptor,
    Submodule,
    enumerate_submodules,
    is_S_divisible,
    is_uniformly_S_torsion,
    make_module,
    scaled_submodule,
    submodule_generated,
)
from .ideal_theory import (
    Ideal,
    MultiplicativeSet,
    SPrimalityCertificate,
    enumerate_ideals,
    find_disjoint_prime,
    ideal_generated,
    is_maximal,
    is_prime,
    is_S_maximal_definitional,
    is_S_maximal_residual,
    is_S_prime_definitional,
    is_S_prime_residual,
    max_S,
    max_spec,
    mult_set_generated,
    residual,
    saturation,
    spec,
    spec_S,
)
from .trivial_extension import (
    TrivialExtension,
    components,
    homogeneous_ideal,
    is_S_maximal_via_components,
    is_S_prime_via_components,
    lift_mult_set,
    make_trivial_extension,
    project_mult_set,
    spec_S_extension,
    max_S_extension,
)
from .z_layer import (
    Z,
    ZIdeal,
    ZMultSet,
    ZTEIdeal,
    ZTrivialExtension,
    ZWitness,
    z_is_S_maximal,
    z_is_S_prime,
    z_residual,
    zte_ideal,
    zte_is_homogeneous,
    zte_is_S_maximal,
    zte_is_S_prime,
    zte_membership,
    zte_residual,
)
from .packed import is_compactly_S_packed, is_coprimely_S_packed, is_S_pm
from .dsl import parse_ring_expr, ring_from_text
from .verifier import CatalogSpec, VerificationReport, reproduce_examples, run_suite, search_counterexamples

__version__ = "0.1.0"

__all__ = [
    "AlgebraError",
    "CardinalityCapExceeded",
    "InternalError",
    "InvalidElement",
    "InvalidModule",
    "InvalidMultiplicativeSet",
    "InvalidRing",
    "NotAnIdeal",
    "ParseError",
    "PreconditionViolated",
    "Unsupported",
    "CARDINALITY_LIMIT",
    "Integers",
    "ProductRing",
    "ResidueRing",
    "enumerate_elements",
    "make_product_ring",
    "make_residue_ring",
    "nilradical",
    "units",
    "ModuleDescriptor",
    "Submodule",
    "enumerate_submodules",
    "is_S_divisible",
    "is_uniformly_S_torsion",
    "make_module",
    "scaled_submodule",
    "submodule_generated",
    "Ideal",
    "MultiplicativeSet",
    "SPrimalityCertificate",
    "enumerate_ideals",
    "find_disjoint_prime",
    "ideal_generated",
    "is_maximal",
    "is_prime",
    "is_S_maximal_definitional",
    "is_S_maximal_residual",
    "is_S_prime_definitional",
    "is_S_prime_residual",
    "max_S",
    "max_spec",
    "mult_set_generated",
    "residual",
    "saturation",
    "spec",
    "spec_S",
    "TrivialExtension",
    "components",
    "homogeneous_ideal",
    "is_S_maximal_via_components",
    "is_S_prime_via_components",
    "lift_mult_set",
    "make_trivial_extension",
    "project_mult_set",
    "spec_S_extension",
    "max_S_extension",
    "Z",
    "ZIdeal",
    "ZMultSet",
    "ZTEIdeal",
    "ZTrivialExtension",
    "ZWitness",
    "z_is_S_maximal",
    "z_is_S_prime",
    "z_residual",
    "zte_ideal",
    "zte_is_homogeneous",
    "zte_is_S_maximal",
    "zte_is_S_prime",
    "zte_membership",
    "zte_residual",
    "is_compactly_S_packed",
    "is_coprimely_S_packed",
    "is_S_pm",
    "parse_ring_expr",
    "ring_from_text",
    "CatalogSpec",
    "VerificationReport",
    "reproduce_examples",
    "run_suite",
    "search_counterexamples",
]
