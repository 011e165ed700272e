"""Descent-restricted longest subsequence statistics via RSK and growth diagrams."""

__version__ = "0.1.0"

from .perm import Permutation, Word, parse_permutation, descent_set, descent_word, reverse_complement, subsequence
from .tableau import Partition, StandardTableau, syt_count, ssyt_count
from .rsk import rsk, greene_sums
from .growth import build_growth, evacuate, stat_triangle
from .stats import ls_d, ls_D, len_w, alternating_length, lis, lds

__all__ = [
    "Permutation", "Word", "parse_permutation", "descent_set", "descent_word",
    "reverse_complement", "subsequence", "Partition", "StandardTableau",
    "syt_count", "ssyt_count", "rsk", "greene_sums", "build_growth", "evacuate",
    "stat_triangle", "ls_d", "ls_D", "len_w", "alternating_length", "lis", "lds",
]
