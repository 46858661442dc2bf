"""Exact toolkit for flat-autocorrelation functions on finite fields.

Enumerates all root-of-unity-valued tables on F_p whose off-peak
autocorrelations equal -1, confirms they are exactly the nontrivial
multiplicative characters, runs the exact identification pipeline (Gauss-sum
transformation exponents, fixed-field scans, value splits), reduces tables
into characteristic p, and constructs the k > 1 counterexample family.
"""

from .characters import (
    Character,
    CohnCheck,
    FunctionTable,
    autocorrelation,
    character_table,
    compose_with_linear,
    gauss_sum,
    is_cohn,
    is_multiplicative,
    spectrum_check,
)
from .counterexample import CounterexampleReport, find_counterexamples, injective_character
from .cyclotomic import (
    CycloElement,
    RootOfUnity,
    complex_eval,
    conjugate,
    cyclotomic_polynomial,
    embed,
    galois,
    recognize_root_of_unity,
    zeta,
)
from .errors import ContradictionError, TrivialCaseError
from .finite_field import (
    FFElement,
    FieldDescriptor,
    LinearMap,
    make_ext_field,
    make_prime_field,
    one_stabilizer_maps,
)
from .proofcheck import (
    SplitTable,
    TraceReport,
    TransformationWitness,
    check_a_vanishes,
    check_character_relation,
    check_no_s_in_K,
    factor_m,
    find_transformation,
    full_trace,
    split_and_check_f1_constant,
    zp_coefficient_collapse,
)
from .reduction import BiroSequence, ReductionMap, biro_check, build_reduction, reduce_function
from .search import (
    SearchConfig,
    SearchReport,
    enumerate_cohn,
    expected_solution_set,
    merge_shards,
)

__version__ = "0.1.0"
