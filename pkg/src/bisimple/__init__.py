"""Congruences on bisimple omega-semigroups BR(G, alpha) and their perfectness."""

from .bruck_reilly import BrContext, BrElement, bicyclic_context
from .congruences import CongruenceSpec, ValidationError, catalog, validate_gc, validate_is
from .oracle import VerificationReport, falsify_perfectness, set_product_window
from .perfectness import PerfectVerdict, class_witnesses, classify, condition15

__all__ = [
    "BrContext",
    "BrElement",
    "CongruenceSpec",
    "PerfectVerdict",
    "ValidationError",
    "VerificationReport",
    "bicyclic_context",
    "catalog",
    "class_witnesses",
    "classify",
    "condition15",
    "falsify_perfectness",
    "set_product_window",
    "validate_gc",
    "validate_is",
]
