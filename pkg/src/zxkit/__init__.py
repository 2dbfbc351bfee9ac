"""zxkit: ZX-calculus rewriting, circuit optimisation and equivalence checking."""

from .circuit import Circuit, Gate
from .extract import ExtractionStuck, streaming_extract
from .formats import emit_qasm, emit_tikz, load
from .graph import Diagram, EdgeType, VertexType, adjoint, compose, identity, tensor_product
from .linalg import gf2_gauss
from .optimize import basic_optimize
from .simplify import clifford_simp, full_reduce, fuse_simp, teleport_reduce
from .tensor import Equality, circuit_matrix, compare_tensors, to_tensor, verify_equality

__version__ = "0.1.0"

__all__ = [
    "Circuit", "Gate", "Diagram", "EdgeType", "VertexType", "adjoint", "compose", "identity", "tensor_product",
    "ExtractionStuck", "streaming_extract", "emit_qasm", "emit_tikz", "load", "gf2_gauss", "basic_optimize",
    "clifford_simp", "full_reduce", "fuse_simp", "teleport_reduce", "Equality", "circuit_matrix",
    "compare_tensors", "to_tensor", "verify_equality",
]
