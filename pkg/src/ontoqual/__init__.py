"""Structural and reuse quality evaluation for core ontologies."""

from .compare import compare, evaluate_inventory, reevaluate, weaknesses
from .indicators import AcceptabilityLevel, classify, evaluate_attributes
from .inventory import derive_basis, load_inventory, parse_inventory, validate
from .lsp import default_model, evaluate_tree, load_model, weighted_power_mean
from .metrics import measure

__all__ = [
    "AcceptabilityLevel", "classify", "compare", "default_model", "derive_basis",
    "evaluate_attributes", "evaluate_inventory", "evaluate_tree", "load_inventory",
    "load_model", "measure", "parse_inventory", "reevaluate", "validate", "weaknesses",
    "weighted_power_mean",
]
__version__ = "0.1.0"
