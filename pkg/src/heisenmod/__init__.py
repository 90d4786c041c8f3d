"""Exact computation with modular Heisenberg-type Lie superalgebras:
construction over prime fields, p-power structures, ordinary and restricted
cohomology in low degree, and one-dimensional central extensions."""

from .gf import Fp, Matrix, field_arith
from .supalg import Element, SuperAlgebra, verify_superalgebra
from .pmap import PMapSpec, closed_form_p_power, p_power, restrictable_predicate, s_terms, verify_restricted
from .families import TwistedParams, make_heisenberg, make_twisted_algebra, make_twisted_super

__all__ = [
    "Fp",
    "Matrix",
    "field_arith",
    "Element",
    "SuperAlgebra",
    "verify_superalgebra",
    "PMapSpec",
    "p_power",
    "s_terms",
    "closed_form_p_power",
    "restrictable_predicate",
    "verify_restricted",
    "TwistedParams",
    "make_heisenberg",
    "make_twisted_algebra",
    "make_twisted_super",
]
