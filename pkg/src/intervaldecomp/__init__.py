"""Interval decompositions of type-A quiver representations over prime fields."""

from .decomposer import (
    CertificateReport,
    Decomposition,
    DecompositionError,
    GradedPiece,
    barcode,
    certify,
    decompose,
    parse_certificate,
    serialize_certificate,
)
from .filtration import build_filtrations, f_alpha, f_strictly_below
from .linalg import DEFAULT_PRIME, Matrix, Subspace
from .oracles import euler_form, idempotent_bruteforce_barcode, rank_formula_barcode
from .quiver import NEG_INF, POS_INF, Dir, Interval, QuiverSpec, Tail, enumerate_intervals, leq
from .representation import (
    Representation,
    RepresentationError,
    counterexample_truncation,
    make_representation,
    parse_representation,
    random_representation,
    serialize_representation,
)

__all__ = [
    "CertificateReport", "DEFAULT_PRIME", "Decomposition", "DecompositionError", "Dir",
    "GradedPiece", "Interval", "Matrix", "NEG_INF", "POS_INF", "QuiverSpec", "Representation",
    "RepresentationError", "Subspace", "Tail", "barcode", "build_filtrations", "certify",
    "counterexample_truncation", "decompose", "enumerate_intervals", "euler_form", "f_alpha",
    "f_strictly_below", "idempotent_bruteforce_barcode", "leq", "make_representation",
    "parse_certificate", "parse_representation", "random_representation", "rank_formula_barcode",
    "serialize_certificate", "serialize_representation",
]
