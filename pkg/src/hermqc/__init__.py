"""Hermitian dual-containing quasi-cyclic codes and the quantum codes they give."""
from .fields import FieldElement, FieldSpec, field_make
from .poly import Poly, p_format, p_parse
from .qc import QuasiCyclicCode, check_dual_containing_direct, qc_build

__version__ = "0.1.0"

__all__ = [
    "FieldElement",
    "FieldSpec",
    "Poly",
    "QuasiCyclicCode",
    "check_dual_containing_direct",
    "field_make",
    "p_format",
    "p_parse",
    "qc_build",
    "__version__",
]
