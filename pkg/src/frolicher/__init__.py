"""Exact double complexes, Frölicher spectral sequences and zigzag decompositions."""

from .complex import Bidegree, DoubleComplex, direct_sum, totalize, validate
from .invariant_forms import StructureEquations, build
from .scalar import Scalar, format_scalar, parse_scalar
from .spectral import cohomology, degeneration_page, euler_characteristics, page, pages
from .zigzag import Decomposition, Shape, census_tables, decompose, verify

__version__ = "0.1.0"

__all__ = [
    "Bidegree", "Decomposition", "DoubleComplex", "Scalar", "Shape", "StructureEquations", "build",
    "census_tables", "cohomology", "decompose", "degeneration_page", "direct_sum", "euler_characteristics",
    "format_scalar", "page", "pages", "parse_scalar", "totalize", "validate", "verify",
]
