"""Extended quotients of maximal tori of SL_n(C)/C_k and SU_n(C)/C_k by the
Weyl group S_n: explicit component catalogs, Betti numbers, K-theory ranks,
and duality verification with exact regression against bundled reference
tables."""

from .complex_quotient import (
    ComplexComponent,
    CyclicSingularity,
    OmegaLabel,
    QuotientCatalog,
    canonical_singularity,
    complex_component,
    component_count,
    decompose_complex,
    enumerate_omegas,
    singularity_weights,
    variety_normal_form,
)
from .numtheory import (
    UnimodularMatrix,
    divisor_sigma,
    divisors,
    gcd_many,
    pillai,
    pillai_via_totient,
    totient,
    two_adic_valuation,
    unimodular_completion,
)
from .partitions import (
    Partition,
    PartitionInvariants,
    enumerate_partitions,
    invariants,
    partition_count,
    partitions_pairs,
)
from .real_quotient import (
    RealComponent,
    bundle_orientable_k1,
    decompose_real,
    real_component,
)
from .topology import (
    BettiVector,
    DualityReport,
    KTheoryRanks,
    betti,
    betti_from_catalog,
    duality_report,
    euler_characteristic,
    ktheory_ranks,
    top_betti,
)

__version__ = "0.1.0"

__all__ = [
    "BettiVector",
    "ComplexComponent",
    "CyclicSingularity",
    "DualityReport",
    "KTheoryRanks",
    "OmegaLabel",
    "Partition",
    "PartitionInvariants",
    "QuotientCatalog",
    "RealComponent",
    "UnimodularMatrix",
    "betti",
    "betti_from_catalog",
    "bundle_orientable_k1",
    "canonical_singularity",
    "complex_component",
    "component_count",
    "decompose_complex",
    "decompose_real",
    "divisor_sigma",
    "divisors",
    "duality_report",
    "enumerate_omegas",
    "enumerate_partitions",
    "euler_characteristic",
    "gcd_many",
    "invariants",
    "ktheory_ranks",
    "partition_count",
    "partitions_pairs",
    "pillai",
    "pillai_via_totient",
    "real_component",
    "singularity_weights",
    "top_betti",
    "totient",
    "two_adic_valuation",
    "unimodular_completion",
    "variety_normal_form",
]
