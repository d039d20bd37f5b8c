"""Tame / controlled-wild classification of finite-dimensional Lie algebras over Q."""

__version__ = "0.1.0"

from .classify import Verdict, classify, explain
from .levi import is_direct_summand, levi_subalgebra
from .lie import LieAlgebra, StructureConstants, validate
from .named import build_named
from .quiver import QuiverWindow, WildWitness, build_quiver, detect_wild, emit_dot
from .weights import CartanDatum, ModuleDesc, alt_sym_square, tensor_decompose, weight_multiplicities, weyl_dim

__all__ = [
    "CartanDatum",
    "LieAlgebra",
    "ModuleDesc",
    "QuiverWindow",
    "StructureConstants",
    "Verdict",
    "WildWitness",
    "alt_sym_square",
    "build_named",
    "build_quiver",
    "classify",
    "detect_wild",
    "emit_dot",
    "explain",
    "is_direct_summand",
    "levi_subalgebra",
    "tensor_decompose",
    "validate",
    "weight_multiplicities",
    "weyl_dim",
]
