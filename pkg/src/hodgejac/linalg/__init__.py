"""Exact and modular linear algebra used by the graded ring computations."""
from .exact import SparseEchelon, bareiss_rank
from .modular import BACKEND, DEFAULT_PRIME, SECOND_PRIME, fraction_mod, rank_mod_p

__all__ = [
    "BACKEND",
    "DEFAULT_PRIME",
    "SECOND_PRIME",
    "SparseEchelon",
    "bareiss_rank",
    "fraction_mod",
    "rank_mod_p",
]
