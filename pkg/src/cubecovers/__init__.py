"""Exact counting and enumeration of small covers over cubes.

Small covers over an n-cube (real Bott manifolds), taken up to
Davis-Januszkiewicz equivalence, correspond to labeled acyclic digraphs on
n vertices; the orientable ones correspond to the acyclic digraphs whose
out-degrees are all even.  This package makes that dictionary executable:

* :mod:`cubecovers.gf2` and :mod:`cubecovers.digraph` hold the two kinds of
  objects (GF(2) matrices with all unit principal minors, and labeled
  simple digraphs) with their membership tests and exhaustive enumeration.
* :mod:`cubecovers.correspondence` is the dictionary itself, plus the
  brute-force counters that anchor every formula.
* :mod:`cubecovers.counting` computes both counting sequences exactly, to
  any index, in arbitrary-precision integers.
* :mod:`cubecovers.series` proves the generating-function identities
  coefficientwise in exact rational arithmetic.
* :mod:`cubecovers.asymptotics` locates the dominant zero of the deformed
  exponential and evaluates the growth constants, including the orientable
  fraction estimate 1.2617.../2^n.
* :mod:`cubecovers.cli` exposes all of it as a command line tool.
"""

from cubecovers.asymptotics import (
    AsymptoticConstants,
    RootFindingError,
    compute_constants,
    deformed_exp,
    dominant_zero,
    log_dag_estimate,
    log_orientable_estimate,
    ratio_estimate,
)
from cubecovers.correspondence import (
    DagCounts,
    brute_count_characteristic_matrices,
    brute_count_dags,
    brute_count_orientable_characteristic_matrices,
    brute_count_orientable_dags,
    brute_counts,
    characteristic_matrix,
    digraph_from_characteristic,
    unit_diagonal_matrices,
)
from cubecovers.counting import (
    binomial,
    count_dags,
    count_orientable_dags,
    dag_count_sequence,
    sequence_table,
)
from cubecovers.digraph import (
    DEFAULT_ENUMERATION_CAP,
    Digraph,
    EnumerationCapExceeded,
    enumerate_acyclic,
    enumerate_digraphs,
    is_acyclic_dfs,
)
from cubecovers.gf2 import BitMatrix
from cubecovers.series import (
    ChromaticSeries,
    IdentityCheck,
    chrom_mul,
    dag_series,
    deformed_exp_series,
    derivative_identity_first_failure,
    orientable_from_quotient,
    orientable_series,
    unit_series,
    verify_identities,
)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticConstants",
    "BitMatrix",
    "ChromaticSeries",
    "DEFAULT_ENUMERATION_CAP",
    "DagCounts",
    "Digraph",
    "EnumerationCapExceeded",
    "IdentityCheck",
    "RootFindingError",
    "binomial",
    "brute_count_characteristic_matrices",
    "brute_count_dags",
    "brute_count_orientable_characteristic_matrices",
    "brute_count_orientable_dags",
    "brute_counts",
    "characteristic_matrix",
    "chrom_mul",
    "compute_constants",
    "count_dags",
    "count_orientable_dags",
    "dag_count_sequence",
    "dag_series",
    "deformed_exp",
    "deformed_exp_series",
    "derivative_identity_first_failure",
    "digraph_from_characteristic",
    "dominant_zero",
    "enumerate_acyclic",
    "enumerate_digraphs",
    "is_acyclic_dfs",
    "log_dag_estimate",
    "log_orientable_estimate",
    "orientable_from_quotient",
    "orientable_series",
    "ratio_estimate",
    "sequence_table",
    "unit_diagonal_matrices",
    "unit_series",
    "verify_identities",
]
