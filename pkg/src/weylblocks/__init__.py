"""Exact construction of polynomial invariants of Lie group adjoint actions.

The pipeline: torus weights, a Hilbert basis of torus-invariant monomials,
Weyl reflections lifted to automorphisms, symmetrized "Weyl blocks", and a
linear system whose kernel gives the invariants.
"""

from .exactmath import Polynomial, RatMatrix, parse_polynomial
from .liealg import LieAlgebra, SubgroupEmbedding, build_sl, embed_subalgebra, sl2_in_sl3
from .pipeline import run_pipeline, scoped_algebra
from .report import InvariantReport
from .series import RationalSeriesForm, hilbert_series_from_degrees, molien_coefficients_su2
from .solver import Invariant, decompose, find_syzygies
from .torus import TorusAction, hilbert_basis, weights_from_cartan
from .weyl import WeylOperatorSet, build_weyl_operators, generate_weyl_blocks, reynolds

__version__ = "0.1.0"

__all__ = [
    "Invariant", "InvariantReport", "LieAlgebra", "Polynomial", "RatMatrix", "RationalSeriesForm",
    "SubgroupEmbedding", "TorusAction", "WeylOperatorSet", "build_sl", "build_weyl_operators",
    "decompose", "embed_subalgebra", "find_syzygies", "generate_weyl_blocks", "hilbert_basis",
    "hilbert_series_from_degrees", "molien_coefficients_su2", "parse_polynomial", "reynolds",
    "run_pipeline", "scoped_algebra", "sl2_in_sl3", "weights_from_cartan",
]
