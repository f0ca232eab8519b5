"""Exact modular data for fermionic categories, the free-fermion family F_l and the 16-fold way."""

from .errors import FieldOrderError, InputError, NotModularError, StructuralError
from .extension import ExtensionData, extend, sixteen_table
from .family import family_data, ising_like, s_from_twists
from .fermionic import (
    GradedData,
    assemble_super_s,
    centralizer,
    check_minimal_extension,
    check_supermodular,
    find_fermions,
    sector_grading,
)
from .modular import (
    FusionTensor,
    ModularData,
    deligne_product,
    gauss_sum,
    global_dim,
    quantum_dims,
    validate,
    verlinde_fusion,
)
from .scalar import FloatScalar, Scalar, root_of_unity, sqrt2

__version__ = "0.1.0"

__all__ = [
    "ExtensionData",
    "FieldOrderError",
    "FloatScalar",
    "FusionTensor",
    "GradedData",
    "InputError",
    "ModularData",
    "NotModularError",
    "Scalar",
    "StructuralError",
    "assemble_super_s",
    "centralizer",
    "check_minimal_extension",
    "check_supermodular",
    "deligne_product",
    "extend",
    "family_data",
    "find_fermions",
    "gauss_sum",
    "global_dim",
    "ising_like",
    "quantum_dims",
    "root_of_unity",
    "s_from_twists",
    "sector_grading",
    "sixteen_table",
    "sqrt2",
    "validate",
    "verlinde_fusion",
]
