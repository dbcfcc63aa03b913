"""Sortability of permutations under context-directed swaps, with brute-force cross-checks."""

from .perm import Permutation, parse_one_line
from .pile import strategic_pile

__version__ = "0.1.0"

__all__ = ["Permutation", "parse_one_line", "strategic_pile", "__version__"]
