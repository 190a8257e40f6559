"""Exact construction of sl(3,O), the real form e6(-26), from octonionic generators."""

__version__ = "0.1.0"

from .octonion import Octonion, oct_mul, oct_conj, oct_norm2, associator
from .jordan import JordanElement, freudenthal_det, trace, jordan_product, shift
from .transforms import GeneratorName, build_generator, apply, retype
from .tangent import TangentMap, tangent_of, matrix_commutator, curve_commutator
from .structure import E6Algebra, get_algebra, build_basis, killing_form, cartan_set
from .subalgebras import Subspace, close, registry, check_direct_sum, check_ideal

__all__ = [
    "Octonion", "oct_mul", "oct_conj", "oct_norm2", "associator",
    "JordanElement", "freudenthal_det", "trace", "jordan_product", "shift",
    "GeneratorName", "build_generator", "apply", "retype",
    "TangentMap", "tangent_of", "matrix_commutator", "curve_commutator",
    "E6Algebra", "get_algebra", "build_basis", "killing_form", "cartan_set",
    "Subspace", "close", "registry", "check_direct_sum", "check_ideal",
]
