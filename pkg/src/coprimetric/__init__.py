"""coprimetric: an exact metric on coprime tuples.

Minimal-L1 integer representations over a generating tuple, the induced
max-q distance, Fibonacci / k-Fibonacci / windowed-Fibonacci embeddings
of the natural numbers, and exact verification that those embeddings
distort distances by at most one.
"""

from ._backend import active_kernel
from .audit import AxiomAudit, run_axiom_audit
from .diophantine import (
    NotRepresentableError,
    QValue,
    Representation,
    brute_force_min_l1,
    ext_gcd,
    min_l1_general,
    min_l1_two,
)
from .metric import (
    Base,
    CoprimeTuple,
    Distance,
    NotCoprimeError,
    distance,
    make_tuple,
    q_point,
    q_tuple,
    rebase,
)
from .qi import EmbeddingSpec, QIReport, QIRow, embedding_point, qi_check_pair, qi_scan
from .sequences import (
    EQUAL,
    GREATER,
    LESS,
    MetallicRatio,
    compare_power,
    compare_scaled_power,
    fib,
    kfib,
    kfib_range,
    metallic,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomAudit",
    "Base",
    "CoprimeTuple",
    "Distance",
    "EQUAL",
    "EmbeddingSpec",
    "GREATER",
    "LESS",
    "MetallicRatio",
    "NotCoprimeError",
    "NotRepresentableError",
    "QIReport",
    "QIRow",
    "QValue",
    "Representation",
    "active_kernel",
    "brute_force_min_l1",
    "compare_power",
    "compare_scaled_power",
    "distance",
    "embedding_point",
    "ext_gcd",
    "fib",
    "kfib",
    "kfib_range",
    "make_tuple",
    "metallic",
    "min_l1_general",
    "min_l1_two",
    "q_point",
    "q_tuple",
    "qi_check_pair",
    "qi_scan",
    "rebase",
    "run_axiom_audit",
]
