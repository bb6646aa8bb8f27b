from monomial_lab.index._core import (
    EMPTY,
    ExponentVector,
    MultiIndex,
    concat,
    count_jmn,
    enumerate_jmn,
    from_exponent,
    index_from_json,
    index_to_json,
    multiplicity,
    reduce,
    to_exponent,
)
from monomial_lab.index._sets import (
    FamilyCensus,
    KQPartitionReport,
    WeightedFamilySpec,
    calibrate_landau_constant,
    calibrate_prime_constant,
    census,
    enumerate_family,
    jminus_sharp_bound,
    jminus_size_bound,
    jplus_growth,
    jplus_size_bound,
    kq_decompose,
    kq_partition,
    landau_size_bound,
    max_degree,
    reduced_inclusion_violations,
    verify_kq_partition,
    verify_reduced_inclusion,
)

__all__ = [
    "EMPTY",
    "ExponentVector",
    "FamilyCensus",
    "KQPartitionReport",
    "MultiIndex",
    "WeightedFamilySpec",
    "calibrate_landau_constant",
    "calibrate_prime_constant",
    "census",
    "concat",
    "count_jmn",
    "enumerate_family",
    "enumerate_jmn",
    "from_exponent",
    "index_from_json",
    "index_to_json",
    "jminus_sharp_bound",
    "jminus_size_bound",
    "jplus_growth",
    "jplus_size_bound",
    "kq_decompose",
    "kq_partition",
    "landau_size_bound",
    "max_degree",
    "multiplicity",
    "reduce",
    "reduced_inclusion_violations",
    "to_exponent",
    "verify_kq_partition",
    "verify_reduced_inclusion",
]
