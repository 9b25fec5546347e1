"""Burst-deletion/insertion-correcting codes, their counting laws and bounds,
and the brute-force machinery that certifies every construction exhaustively
at small block lengths."""

from .bitseq import Word, array_view, flatten, format_word, parse_word, runs
from .errors import BurstCodesError, CodeIntegrityError, DecodeFailure, DomainError

__all__ = [
    "Word",
    "array_view",
    "flatten",
    "format_word",
    "parse_word",
    "runs",
    "BurstCodesError",
    "CodeIntegrityError",
    "DecodeFailure",
    "DomainError",
]

__version__ = "0.1.0"
