"""Text, JSON and command-line front end."""

from .documents import FormatError, pair_from_doc, pair_to_doc, word_from_doc, word_to_doc
from .main import main
from .parse import NegativeExponent, ParseError, parse_poly

__all__ = [
    "FormatError",
    "NegativeExponent",
    "ParseError",
    "main",
    "pair_from_doc",
    "pair_to_doc",
    "parse_poly",
    "word_from_doc",
    "word_to_doc",
]
